"""Planar multipacking solvers built on two derived graphs.

For radius 1 the maximum multipackings of a point set are exactly the
maximum independent sets of its nearest-neighbor graph, which is a forest,
so a tree DP solves them.  For radius 2 they are the maximum independent
sets of a conflict graph with one triangle {v, first(v), second(v)} per
point; that graph has maximum degree at most 17, which powers the exact
branch-and-bound, the bounded-depth branching search, and the greedy
approximation below.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Iterable

from .geometry import NeighborTable, PointSet, nearest_profile, two_nearest
from .multipacking import BudgetExceededError, SolveReport

DEGREE_BOUND = 17


class NotAForestError(RuntimeError):
    """Nearest-neighbor graph contained a cycle; upstream ordering is broken."""


@dataclass(frozen=True)
class ConflictGraph:
    """Undirected simple graph with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    kind: str = "generic"  # "nng" | "conflict" | "generic"

    def __post_init__(self):
        if self.n < 1 or len(self.adj) != self.n:
            raise ValueError("adjacency size does not match n")
        for v, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise ValueError(f"adjacency of {v} must be sorted and duplicate-free")
            for u in row:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex {u} out of range")
                if u == v:
                    raise ValueError(f"loop at {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        if self.kind == "nng":
            _assert_forest(self.n, self.edges())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], kind: str = "generic") -> "ConflictGraph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at {a}")
            rows[a].add(b)
            rows[b].add(a)
        return cls(n=n, adj=tuple(tuple(sorted(r)) for r in rows), kind=kind)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in self.adj[v] if v < u]

    def max_degree(self) -> int:
        return max(len(row) for row in self.adj)


def edge_list_text(graph: ConflictGraph) -> str:
    """Debug dump: one 'u v' line per edge with u < v, sorted."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges())


def parse_edge_list(text: str, n: int | None = None, kind: str = "generic") -> ConflictGraph:
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        a, b = int(parts[0]), int(parts[1])
        top = max(top, a, b)
        edges.append((a, b))
    size = n if n is not None else top + 1
    if size < 1:
        raise ValueError("edge list is empty and no n was given")
    return ConflictGraph.from_edges(size, edges, kind=kind)


def _assert_forest(n: int, edges: Iterable[tuple[int, int]]) -> None:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            raise NotAForestError(f"edge {a}-{b} closes a cycle")
        parent[ra] = rb


def build_nearest_neighbor_graph(pts: PointSet, table: NeighborTable | None = None) -> ConflictGraph:
    """Edge from every point to its unique nearest point (deduplicated)."""
    n = pts.n
    if n < 2:
        raise ValueError("need at least 2 points")
    if table is not None:
        nearest = [table.order[v][0] for v in range(n)]
    else:
        nearest = [row[0] for row in nearest_profile(pts, 1)]
    edges = sorted({(min(v, u), max(v, u)) for v, u in enumerate(nearest)})
    _assert_forest(n, edges)
    return ConflictGraph.from_edges(n, edges, kind="nng")


def build_conflict_graph(pts: PointSet, table: NeighborTable | None = None) -> ConflictGraph:
    """Triangle on {v, first(v), second(v)} for every v; independence in the
    result is exactly the radius-2 multipacking condition."""
    n = pts.n
    if n < 3:
        raise ValueError("need at least 3 points")
    if table is not None:
        pairs = [(table.order[v][0], table.order[v][1]) for v in range(n)]
    else:
        pairs = two_nearest(pts)
    edges = set()
    for v, (a, b) in enumerate(pairs):
        edges.add((min(v, a), max(v, a)))
        edges.add((min(v, b), max(v, b)))
        edges.add((min(a, b), max(a, b)))
    return ConflictGraph.from_edges(n, sorted(edges), kind="conflict")


# ---------------------------------------------------------------------------
# forest independent set
# ---------------------------------------------------------------------------

def forest_max_independent_set(graph: ConflictGraph) -> tuple[int, ...]:
    """Maximum independent set of a forest by two-state DP.

    Deterministic witness: components are rooted at their smallest index,
    children are visited in ascending order, and ties between keeping and
    dropping a vertex are broken toward dropping it.
    """
    n = graph.n
    adj = graph.adj
    _assert_forest(n, graph.edges())
    visited = [False] * n
    take: list[int] = []
    for root in range(n):
        if visited[root]:
            continue
        # iterative DFS: preorder plus parent/children bookkeeping
        order = []
        parent = {root: -1}
        children: dict[int, list[int]] = {}
        stack = [root]
        visited[root] = True
        while stack:
            v = stack.pop()
            order.append(v)
            kids = [u for u in adj[v] if u != parent[v]]
            children[v] = kids
            for u in reversed(kids):
                visited[u] = True
                parent[u] = v
                stack.append(u)
        in_sz = {}
        out_sz = {}
        for v in reversed(order):
            in_sz[v] = 1 + sum(out_sz[c] for c in children[v])
            out_sz[v] = sum(max(in_sz[c], out_sz[c]) for c in children[v])
        walk = [(root, False)]
        while walk:
            v, forced_out = walk.pop()
            keep = not forced_out and in_sz[v] > out_sz[v]
            if keep:
                take.append(v)
            for c in children[v]:
                walk.append((c, keep))
    return tuple(sorted(take))


def max_1_multipacking(pts: PointSet) -> SolveReport:
    """Maximum 1-multipacking via the nearest-neighbor forest."""
    if pts.n == 1:
        return SolveReport(size=1, indices=(0,), r=1, method="nng", stats={"components": 1})
    graph = build_nearest_neighbor_graph(pts)
    witness = forest_max_independent_set(graph)
    components = pts.n - len(graph.edges())
    return SolveReport(
        size=len(witness),
        indices=witness,
        r=1,
        method="nng",
        stats={"components": components, "edges": len(graph.edges())},
    )


# ---------------------------------------------------------------------------
# exact independent set (branch and bound on bitmasks)
# ---------------------------------------------------------------------------

def _adjacency_masks(graph: ConflictGraph) -> list[int]:
    masks = []
    for row in graph.adj:
        m = 0
        for u in row:
            m |= 1 << u
        masks.append(m)
    return masks


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(adjm: list[int], rem: int) -> int:
    """Greedy clique cover size; an upper bound on the independent set size."""
    count = 0
    left = rem
    while left:
        v = (left & -left).bit_length() - 1
        clique = 1 << v
        for u in _iter_bits(adjm[v] & left):
            if adjm[u] & clique == clique:
                clique |= 1 << u
        left &= ~clique
        count += 1
    return count


class _Search:
    def __init__(self, adjm: list[int], max_nodes: int | None):
        self.adjm = adjm
        self.closed = [m | (1 << v) for v, m in enumerate(adjm)]
        self.max_nodes = max_nodes
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(f"search exceeded {self.max_nodes} nodes")

    def _reduce(self, rem: int, gained: int) -> tuple[int, int]:
        """Repeatedly take vertices of remaining degree <= 1 (optimal-safe)."""
        adjm = self.adjm
        while True:
            changed = False
            for v in _iter_bits(rem):
                if not (rem >> v) & 1:
                    continue  # removed earlier in this same pass
                live = adjm[v] & rem
                if live == 0:
                    rem &= ~(1 << v)
                    gained += 1
                    changed = True
                elif live & (live - 1) == 0:  # exactly one neighbor left
                    rem &= ~(self.closed[v])
                    gained += 1
                    changed = True
            if not changed:
                return rem, gained

    def max_size(self, rem: int) -> int:
        best = 0

        def rec(rem: int, cur: int) -> None:
            nonlocal best
            self._tick()
            rem, cur = self._reduce(rem, cur)
            if rem == 0:
                if cur > best:
                    best = cur
                return
            if cur + _clique_cover_bound(self.adjm, rem) <= best:
                return
            v = max(_iter_bits(rem), key=lambda u: ((self.adjm[u] & rem).bit_count(), -u))
            rec(rem & ~self.closed[v], cur + 1)
            rec(rem & ~(1 << v), cur)

        rec(rem, 0)
        return best

    def exists(self, rem: int, k: int) -> bool:
        self._tick()
        if k <= 0:
            return True
        rem, gained = self._reduce(rem, 0)
        k -= gained
        if k <= 0:
            return True
        if rem == 0:
            return False
        if _clique_cover_bound(self.adjm, rem) < k:
            return False
        v = max(_iter_bits(rem), key=lambda u: ((self.adjm[u] & rem).bit_count(), -u))
        return self.exists(rem & ~self.closed[v], k - 1) or self.exists(rem & ~(1 << v), k)


def _component_masks(adjm: list[int], full: int) -> list[int]:
    comps = []
    left = full
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in _iter_bits(frontier):
                grown |= adjm[v]
            frontier = grown & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def exact_max_is(graph: ConflictGraph, max_nodes: int | None = None) -> tuple[tuple[int, ...], int]:
    """Maximum independent set with a deterministic witness.

    Branch and bound per component (max-degree branching, greedy clique-cover
    pruning, degree <= 1 reductions) fixes the optimum size; a second pass
    then forces the lexicographically smallest witness index by index.
    Returns (witness, explored nodes); raises BudgetExceededError past
    max_nodes.
    """
    n = graph.n
    adjm = _adjacency_masks(graph)
    search = _Search(adjm, max_nodes)
    full = (1 << n) - 1
    opt = sum(search.max_size(comp) for comp in _component_masks(adjm, full))
    forced: list[int] = []
    rem = full
    need = opt
    for i in range(n):
        if need == 0:
            break
        if not (rem >> i) & 1:
            continue
        if search.exists(rem & ~search.closed[i], need - 1):
            forced.append(i)
            rem &= ~search.closed[i]
            need -= 1
        else:
            rem &= ~(1 << i)
    if need != 0:
        raise AssertionError("witness reconstruction lost the optimum")
    return tuple(forced), search.nodes


def max_2_multipacking_exact(pts: PointSet, max_nodes: int | None = None) -> SolveReport:
    """Exact maximum 2-multipacking via independence in the conflict graph."""
    graph = build_conflict_graph(pts)
    witness, nodes = exact_max_is(graph, max_nodes=max_nodes)
    return SolveReport(
        size=len(witness),
        indices=witness,
        r=2,
        method="exact",
        stats={"nodes": nodes, "max_degree": graph.max_degree()},
    )


# ---------------------------------------------------------------------------
# bounded-depth branching search (size exactly k)
# ---------------------------------------------------------------------------

def fpt_find_in_graph(
    graph: ConflictGraph, k: int, max_nodes: int | None = None
) -> tuple[tuple[int, ...] | None, int]:
    """Find an independent set of size exactly k, or report none.

    Every independent set of size k can be moved to intersect the closed
    neighborhood of any vertex, so branching over the <= 18 members of a
    minimum-degree vertex's closed neighborhood and recursing with k-1
    explores at most 18^k nodes; a clique-cover bound prunes dead branches
    early without affecting that ceiling.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    adjm = _adjacency_masks(graph)
    closed = [m | (1 << v) for v, m in enumerate(adjm)]
    state = {"nodes": 0}

    def rec(rem: int, need: int, chosen: tuple[int, ...]) -> tuple[int, ...] | None:
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            raise BudgetExceededError(f"search exceeded {max_nodes} nodes")
        if need == 0:
            return chosen
        if rem == 0:
            return None
        if _clique_cover_bound(adjm, rem) < need:
            return None
        v = min(_iter_bits(rem), key=lambda u: ((adjm[u] & rem).bit_count(), u))
        for u in _iter_bits(closed[v] & rem):
            found = rec(rem & ~closed[u], need - 1, chosen + (u,))
            if found is not None:
                return found
        return None

    result = rec((1 << graph.n) - 1, k, ())
    if result is None:
        return None, state["nodes"]
    return tuple(sorted(result)), state["nodes"]


def fpt_2_multipacking(pts: PointSet, k: int, max_nodes: int | None = None) -> SolveReport | None:
    """2-multipacking of size exactly k, or None when no such set exists."""
    graph = build_conflict_graph(pts)
    witness, nodes = fpt_find_in_graph(graph, k, max_nodes=max_nodes)
    if witness is None:
        return None
    return SolveReport(
        size=k,
        indices=witness,
        r=2,
        method="fpt",
        stats={"nodes": nodes, "node_budget": 18**k},
    )


# ---------------------------------------------------------------------------
# greedy with local search
# ---------------------------------------------------------------------------

def _greedy_min_degree(graph: ConflictGraph) -> list[int]:
    n = graph.n
    adj = graph.adj
    alive = [True] * n
    deg = [len(adj[v]) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapify(heap)
    chosen = []
    while heap:
        d, v = heappop(heap)
        if not alive[v]:
            continue
        if d != deg[v]:
            heappush(heap, (deg[v], v))
            continue
        chosen.append(v)
        killed = [v] + [u for u in adj[v] if alive[u]]
        for u in killed:
            alive[u] = False
        for u in killed:
            for w in adj[u]:
                if alive[w]:
                    deg[w] -= 1
                    heappush(heap, (deg[w], w))
    return sorted(chosen)


def greedy_2_multipacking(pts: PointSet) -> SolveReport:
    """Minimum-degree greedy on the conflict graph plus swap improvement.

    The greedy pass removes at most 18 vertices per pick, so the result has
    at least n/18 members.  Local search then repeatedly inserts any vertex
    that conflicts with nothing and applies 1-out/2-in swaps (drop one
    member, add two compatible vertices) until neither step applies.
    """
    graph = build_conflict_graph(pts)
    n = graph.n
    adj = graph.adj
    members = _greedy_min_degree(graph)
    greedy_size = len(members)
    rounds = 0
    improvements = 0
    while True:
        rounds += 1
        # blocker count per vertex: how many members cover it (self counts)
        count = [0] * n
        owner = [-1] * n
        for w in members:
            for x in (w, *adj[w]):
                count[x] += 1
                owner[x] = w
        free = next((x for x in range(n) if count[x] == 0), None)
        if free is not None:
            members.append(free)
            members.sort()
            improvements += 1
            continue
        swapped = False
        for u in members:
            pool = [x for x in range(n) if count[x] == 1 and owner[x] == u]
            done = False
            for i, x in enumerate(pool):
                for y in pool[i + 1 :]:
                    if y not in adj[x]:
                        members.remove(u)
                        members.extend((x, y))
                        members.sort()
                        improvements += 1
                        done = True
                        break
                if done:
                    break
            if done:
                swapped = True
                break
        if not swapped:
            break
    return SolveReport(
        size=len(members),
        indices=tuple(members),
        r=2,
        method="greedy",
        stats={
            "greedy_size": greedy_size,
            "rounds": rounds,
            "improvements": improvements,
            "max_degree": graph.max_degree(),
        },
    )


# ---------------------------------------------------------------------------
# degree audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeAudit:
    """Conflict-graph degree summary for one point set."""

    n: int
    max_degree: int
    argmax: int
    within_bound: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "argmax": self.argmax,
            "within_bound": self.within_bound,
            "bound": DEGREE_BOUND,
        }


def max_degree_audit(pts: PointSet, graph: ConflictGraph | None = None) -> DegreeAudit:
    """Max conflict-graph degree; the construction guarantees at most 17."""
    if graph is None:
        graph = build_conflict_graph(pts)
    degrees = [len(row) for row in graph.adj]
    top = max(degrees)
    return DegreeAudit(
        n=pts.n,
        max_degree=top,
        argmax=degrees.index(top),
        within_bound=top <= DEGREE_BOUND,
    )
