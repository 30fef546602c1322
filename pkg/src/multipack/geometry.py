"""Exact geometry on finite point sets with rational coordinates.

Coordinates are arbitrary-precision rationals (`int` or `fractions.Fraction`),
so every distance comparison is exact.  Points live in dimension 1 or 2.
Neighbor orderings are defined by squared distance; a tie between two
neighbors of the same point is a "general position" violation and is either
reported or raised, never silently broken.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

Coord = Union[int, Fraction]
Point = tuple  # tuple[Coord, ...], dimension 1 or 2

# numpy fast paths kick in above this size; below it plain loops are cheaper
_NUMPY_MIN_N = 64
# int64 squared distances stay exact while the coordinate span is below this
_INT64_SPAN_LIMIT = 2**31 - 1
# tree-accelerated path: float64 squared distances on a span this small are
# off by at most ~32, so exact re-ranking with a wide margin stays rigorous
_TREE_MIN_N = 512
_TREE_SPAN_LIMIT = 2**28
_TREE_MARGIN = 256


class GeneralPositionError(ValueError):
    """Two neighbors of some point are equidistant from it."""

    def __init__(self, triple: tuple[int, int, int], message: str | None = None):
        self.triple = triple
        v, a, b = triple
        super().__init__(
            message or f"points {a} and {b} are equidistant from point {v}"
        )


class PerturbationError(RuntimeError):
    """Retry budget exhausted while searching for a general-position jitter."""


class ParseError(ValueError):
    """Point file could not be parsed."""


def _normalize(value: Coord) -> Coord:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def parse_coordinate(text: str) -> Coord:
    """Parse a decimal ('-3.25') or rational ('7/3') coordinate exactly."""
    try:
        return _normalize(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coordinate {text!r}: {exc}") from None


def format_coordinate(value: Coord) -> str:
    """Inverse of parse_coordinate; integers stay plain."""
    value = _normalize(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def squared_distance(a: Sequence[Coord], b: Sequence[Coord]) -> Coord:
    """Exact squared Euclidean distance between two points of equal dimension."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    total = 0
    for x, y in zip(a, b):
        d = x - y
        total += d * d
    return total


@dataclass(frozen=True)
class PointSet:
    """Immutable set of distinct points, all of the same dimension (1 or 2)."""

    points: tuple[Point, ...]
    dim: int

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dimension must be 1 or 2, got {self.dim}")
        if not self.points:
            raise ValueError("point set must be nonempty")
        seen = set()
        for i, p in enumerate(self.points):
            if len(p) != self.dim:
                raise ValueError(f"point {i} has dimension {len(p)}, expected {self.dim}")
            if p in seen:
                raise ValueError(f"duplicate point {p} at index {i}")
            seen.add(p)

    @classmethod
    def of(cls, values: Iterable[Sequence[Coord]]) -> "PointSet":
        pts = tuple(tuple(_normalize(c) for c in p) for p in values)
        if not pts:
            raise ValueError("point set must be nonempty")
        return cls(points=pts, dim=len(pts[0]))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def all_integer(self) -> bool:
        return all(isinstance(c, int) for p in self.points for c in p)


@dataclass(frozen=True)
class NeighborTable:
    """Per-point neighbor permutation, ascending by exact squared distance.

    order[v] lists the indices of all other points; order[v][s-1] is the s-th
    nearest neighbor of v, so the closed s-neighborhood of v is v plus the
    first s entries of order[v].
    """

    order: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.order)

    def rank(self, v: int, u: int) -> int:
        """1-based position of u in v's ordering; 0 when u == v."""
        if u == v:
            return 0
        return self.order[v].index(u) + 1


def build_neighbor_table(pts: PointSet) -> NeighborTable:
    """Sort every point's neighbors by squared distance; raise on any tie."""
    n = pts.n
    order = []
    for v in range(n):
        pv = pts[v]
        pairs = sorted(
            ((squared_distance(pv, pts[u]), u) for u in range(n) if u != v),
            key=lambda t: t[0],
        )
        for (d1, a), (d2, b) in zip(pairs, pairs[1:]):
            if d1 == d2:
                raise GeneralPositionError((v, min(a, b), max(a, b)))
        order.append(tuple(u for _, u in pairs))
    return NeighborTable(order=tuple(order))


def assert_general_position(pts: PointSet) -> list[tuple[int, int, int]]:
    """Return all triples (v, a, b) with a and b equidistant from v.

    Empty list means every point's neighbor ordering is unambiguous.  Runs a
    full per-point sort, so it is meant for moderate n.
    """
    violations = []
    for v in range(pts.n):
        pv = pts[v]
        pairs = sorted(
            ((squared_distance(pv, pts[u]), u) for u in range(pts.n) if u != v),
            key=lambda t: t[0],
        )
        i = 0
        while i < len(pairs):
            j = i
            while j + 1 < len(pairs) and pairs[j + 1][0] == pairs[i][0]:
                j += 1
            if j > i:
                tied = sorted(u for _, u in pairs[i : j + 1])
                for x in range(len(tied)):
                    for y in range(x + 1, len(tied)):
                        violations.append((v, tied[x], tied[y]))
            i = j + 1
    return violations


def assert_global_distinct_distances(pts: PointSet) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Stricter optional audit: report pairs of point pairs at equal distance."""
    entries = sorted(
        (squared_distance(pts[a], pts[b]), (a, b))
        for a in range(pts.n)
        for b in range(a + 1, pts.n)
    )
    out = []
    for (d1, p1), (d2, p2) in zip(entries, entries[1:]):
        if d1 == d2:
            out.append((p1, p2))
    return out


def _nearest_profile_exact(pts: PointSet, k: int) -> list[tuple[int, ...]]:
    n = pts.n
    keep = min(k + 1, n - 1)
    result = []
    for v in range(n):
        pv = pts[v]
        pairs = sorted(
            ((squared_distance(pv, pts[u]), u) for u in range(n) if u != v),
            key=lambda t: t[0],
        )[:keep]
        for (d1, a), (d2, b) in zip(pairs, pairs[1:]):
            if d1 == d2:
                raise GeneralPositionError((v, min(a, b), max(a, b)))
        result.append(tuple(u for _, u in pairs[: min(k, n - 1)]))
    return result


def _nearest_profile_int64(pts: PointSet, k: int) -> list[tuple[int, ...]]:
    """Chunked exact int64 computation of each point's k nearest neighbors.

    Validates that the first min(k+1, n-1) distances from every point are
    strictly increasing, which is exactly what makes those k neighbor
    identities unambiguous.
    """
    n = pts.n
    keep = min(k + 1, n - 1)
    arr = np.array(pts.points, dtype=np.int64)
    arr = arr - arr.min(axis=0, keepdims=True)  # shrink magnitudes; distances unchanged
    sentinel = np.iinfo(np.int64).max
    chunk = max(1, min(n, (1 << 22) // n))
    result: list[tuple[int, ...]] = []
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        diff = arr[start:stop, None, :] - arr[None, :, :]
        d2 = (diff * diff).sum(axis=2)
        d2[np.arange(stop - start), np.arange(start, stop)] = sentinel
        idx = np.argpartition(d2, keep - 1, axis=1)[:, :keep]
        vals = np.take_along_axis(d2, idx, axis=1)
        sub = np.argsort(vals, axis=1, kind="stable")
        vals = np.take_along_axis(vals, sub, axis=1)
        idx = np.take_along_axis(idx, sub, axis=1)
        ties = np.nonzero(vals[:, :-1] == vals[:, 1:])
        if ties[0].size:
            row = int(ties[0][0])
            col = int(ties[1][0])
            a = int(idx[row, col])
            b = int(idx[row, col + 1])
            raise GeneralPositionError((start + row, min(a, b), max(a, b)))
        width = min(k, n - 1)
        for row in range(stop - start):
            result.append(tuple(int(u) for u in idx[row, :width]))
    return result


def _exact_row(arr: np.ndarray, v: int, keep: int) -> list[tuple[int, int]]:
    """Exact sorted (distance, index) prefix for one point of an int array."""
    diff = arr - arr[v]
    d2 = (diff * diff).sum(axis=1)
    pairs = sorted((int(d2[u]), u) for u in range(len(arr)) if u != v)
    return pairs[: keep + 1]


def _nearest_profile_tree(pts: PointSet, k: int) -> list[tuple[int, ...]] | None:
    """Tree-accelerated exact k-nearest profile, or None when unavailable.

    The tree runs in float64 and only nominates candidates; ranks come from
    exact int64 re-computation.  A candidate window is trusted only when the
    farthest nominee sits a full error margin beyond the last kept rank,
    otherwise that point falls back to an exact full scan.
    """
    try:
        from scipy.spatial import cKDTree
    except ImportError:
        return None
    n = pts.n
    keep = min(k + 1, n - 1)
    arr = np.array(pts.points, dtype=np.int64)
    arr = arr - arr.min(axis=0, keepdims=True)
    query_k = min(n, keep + 6)  # self plus keep plus slack for the guard
    tree = cKDTree(arr.astype(np.float64))
    _, idx = tree.query(arr.astype(np.float64), k=query_k)
    gathered = arr[idx]  # (n, query_k, dim)
    diff = gathered - arr[:, None, :]
    d2 = (diff * diff).sum(axis=2)  # exact: spans are capped well inside int64
    sub = np.argsort(d2, axis=1, kind="stable")
    d2 = np.take_along_axis(d2, sub, axis=1)
    idx = np.take_along_axis(idx, sub, axis=1)
    # column 0 is the point itself at distance 0
    result: list[tuple[int, ...]] = []
    width = min(k, n - 1)
    for v in range(n):
        vals = d2[v]
        row = idx[v]
        guarded = query_k == n or vals[query_k - 1] > vals[keep] + _TREE_MARGIN
        if not guarded or row[0] != v or (query_k > 1 and vals[1] == 0):
            pairs = _exact_row(arr, v, keep)
            vals = np.array([0] + [d for d, _ in pairs], dtype=np.int64)
            row = np.array([v] + [u for _, u in pairs], dtype=np.int64)
        for s in range(1, keep):
            if vals[s] == vals[s + 1]:
                a, b = int(row[s]), int(row[s + 1])
                raise GeneralPositionError((v, min(a, b), max(a, b)))
        result.append(tuple(int(u) for u in row[1 : width + 1]))
    return result


def nearest_profile(pts: PointSet, k: int) -> list[tuple[int, ...]]:
    """Indices of each point's k nearest neighbors (ascending distance).

    Ties anywhere in the first min(k+1, n-1) distances raise
    GeneralPositionError, so the returned identities never depend on
    arbitrary ordering.  Integer coordinates of moderate span use exact
    vectorized paths; everything else falls back to exact rational loops.
    """
    if pts.n < 2:
        raise ValueError("need at least 2 points")
    if k < 1:
        raise ValueError("k must be >= 1")
    if pts.n >= _NUMPY_MIN_N and pts.all_integer():
        lo = min(c for p in pts.points for c in p)
        hi = max(c for p in pts.points for c in p)
        span = hi - lo
        if pts.n >= _TREE_MIN_N and span <= _TREE_SPAN_LIMIT:
            profile = _nearest_profile_tree(pts, k)
            if profile is not None:
                return profile
        if span <= _INT64_SPAN_LIMIT:
            return _nearest_profile_int64(pts, k)
    return _nearest_profile_exact(pts, k)


def two_nearest(pts: PointSet) -> list[tuple[int, int]]:
    """First and second neighbor of every point; requires n >= 3."""
    if pts.n < 3:
        raise ValueError("need at least 3 points for two neighbors")
    return [(p[0], p[1]) for p in nearest_profile(pts, 2)]


def perturb(pts: PointSet, epsilon: Coord, seed: int, max_retries: int = 32) -> PointSet:
    """Jitter every coordinate by a seed-derived rational in (-epsilon, epsilon).

    Retries with fresh offsets from the same stream until the result is in
    general position (and duplicate-free); raises PerturbationError when the
    retry budget runs out.  Small epsilons leave neighbor orderings intact.
    """
    if isinstance(epsilon, float):
        raise TypeError("epsilon must be an exact rational (int or Fraction)")
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    rng = random.Random(seed)
    denom = 1 << 16
    for _ in range(max_retries):
        moved = [
            tuple(c + eps * Fraction(rng.randrange(-denom + 1, denom), denom) for c in p)
            for p in pts.points
        ]
        try:
            candidate = PointSet.of(moved)
        except ValueError:
            continue  # jitter collided two points; draw again
        if not assert_general_position(candidate):
            return candidate
    raise PerturbationError(f"no general-position jitter found in {max_retries} tries")


# ---------------------------------------------------------------------------
# point file formats
# ---------------------------------------------------------------------------

def load_points_csv(path: str | Path) -> PointSet:
    """Read points from CSV with header 'x' or 'x,y'; values decimal or 'p/q'."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ParseError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    if header == ["x"]:
        dim = 1
    elif header == ["x", "y"]:
        dim = 2
    else:
        raise ParseError(f"{path}: header must be 'x' or 'x,y', got {header}")
    pts = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != dim:
            raise ParseError(f"{path}:{lineno}: expected {dim} values, got {len(row)}")
        pts.append(tuple(parse_coordinate(tok) for tok in row))
    if not pts:
        raise ParseError(f"{path}: no points")
    try:
        return PointSet.of(pts)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def save_points_csv(pts: PointSet, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x"] if pts.dim == 1 else ["x", "y"])
        for p in pts.points:
            writer.writerow([format_coordinate(c) for c in p])


def load_points_json(path: str | Path) -> PointSet:
    """Read {"dim": d, "points": [[...], ...]}; decimals are parsed exactly."""
    with open(path) as fh:
        try:
            data = json.load(fh, parse_float=str)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
    if not isinstance(data, dict) or "dim" not in data or "points" not in data:
        raise ParseError(f"{path}: expected an object with 'dim' and 'points'")
    dim = data["dim"]
    if dim not in (1, 2):
        raise ParseError(f"{path}: dim must be 1 or 2, got {dim!r}")
    pts = []
    for i, entry in enumerate(data["points"]):
        if not isinstance(entry, list) or len(entry) != dim:
            raise ParseError(f"{path}: point {i} does not match dim {dim}")
        coords = []
        for value in entry:
            if isinstance(value, bool) or not isinstance(value, (int, str)):
                raise ParseError(f"{path}: point {i} has non-numeric coordinate {value!r}")
            coords.append(value if isinstance(value, int) else parse_coordinate(value))
        pts.append(tuple(coords))
    if not pts:
        raise ParseError(f"{path}: no points")
    try:
        return PointSet.of(pts)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def save_points_json(pts: PointSet, path: str | Path) -> None:
    entries = [
        [c if isinstance(c, int) else format_coordinate(c) for c in p]
        for p in pts.points
    ]
    with open(path, "w") as fh:
        json.dump({"dim": pts.dim, "points": entries}, fh, separators=(",", ":"))
        fh.write("\n")


def load_points(path: str | Path) -> PointSet:
    """Dispatch on file suffix: .json for JSON, anything else as CSV."""
    if str(path).endswith(".json"):
        return load_points_json(path)
    return load_points_csv(path)
