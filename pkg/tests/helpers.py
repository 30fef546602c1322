"""Shared test utilities: independent reference solvers and small builders."""

import itertools

from multipack import PointSet, build_neighbor_table, is_r_multipacking


def pts1d(*coords) -> PointSet:
    return PointSet.of([(c,) for c in coords])


def pts2d(*coords) -> PointSet:
    return PointSet.of(list(coords))


def assert_valid(pts, indices, r):
    table = build_neighbor_table(pts)
    ok, violation = is_r_multipacking(pts, table, indices, r)
    assert ok, f"witness {indices} invalid at r={r}: {violation}"


def naive_best_witness(pts, table, r):
    """Largest valid set by direct enumeration, lexicographically smallest.

    Checks combinations in decreasing size; within a size, itertools yields
    index tuples in lexicographic order, so the first hit is the tie-break
    winner the solvers promise.
    """
    n = pts.n
    for size in range(n, 0, -1):
        for combo in itertools.combinations(range(n), size):
            ok, _ = is_r_multipacking(pts, table, combo, r)
            if ok:
                return combo
    return ()


def naive_max_independent_sets(n, edges):
    """All maximum independent sets of a tiny graph, by enumeration."""
    adjacent = set()
    for u, v in edges:
        adjacent.add((u, v))
        adjacent.add((v, u))
    best_size = 0
    best = []
    for size in range(n, -1, -1):
        for combo in itertools.combinations(range(n), size):
            if all((a, b) not in adjacent for a, b in itertools.combinations(combo, 2)):
                best_size = size
                best.append(combo)
        if best:
            break
    return best_size, best
