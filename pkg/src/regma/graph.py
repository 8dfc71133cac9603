"""Finite multigraphs (loops and parallel edges allowed) with the cycle,
connectivity, and reduction machinery used by the systole computations.

Edges carry stable integer ids 0..m-1 given by their position in the edge
list. Weights are nonnegative exact rationals, one per edge id.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (AcyclicGraphError, DisconnectedGraphError,
                     PreconditionError, check_guard)

INFINITY = float("inf")


@dataclass(frozen=True)
class MultiGraph:
    """Vertices 0..n-1; edges is an ordered tuple of unordered endpoint
    pairs, u == v allowed (loop)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge endpoint out of range: ({u},{v})")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """incidence[v] = edge ids at v; a loop appears once."""
        inc = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        """Loops contribute 2."""
        return sum(2 if self.edges[e][0] == self.edges[e][1] else 1
                   for e in self.incidence[v])

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def components(self, skip_edges: frozenset[int] = frozenset()) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for e in self.incidence[x]:
                    if e in skip_edges:
                        continue
                    y = self.other_end(e, x)
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def format(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines)

    @staticmethod
    def parse(text: str) -> "MultiGraph":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        n, m = map(int, lines[0].split())
        edges = []
        for ln in lines[1 : 1 + m]:
            u, v = map(int, ln.split())
            edges.append((u, v))
        if len(edges) != m:
            raise PreconditionError("edge count does not match header")
        return MultiGraph(n, tuple(edges))


EdgeWeights = tuple[Fraction, ...]


def check_weights(g: MultiGraph, w: Sequence[Fraction]) -> EdgeWeights:
    if len(w) != g.m:
        raise PreconditionError(f"need {g.m} weights, got {len(w)}")
    ww = tuple(Fraction(x) for x in w)
    if any(x < 0 for x in ww):
        raise PreconditionError("edge weights must be nonnegative")
    return ww


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its edge-id set: the selected edges form a
    connected subgraph in which every vertex has degree exactly 2 (a loop
    counting 2 at its vertex)."""

    edge_ids: frozenset[int]

    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_ids))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def weight(self, w: Sequence[Fraction]) -> Fraction:
        return sum((w[e] for e in self.edge_ids), Fraction(0))

    @staticmethod
    def from_edges(g: MultiGraph, ids) -> "Cycle":
        ids = frozenset(int(e) for e in ids)
        if not ids:
            raise PreconditionError("a cycle is nonempty")
        deg: dict[int, int] = {}
        for e in ids:
            u, v = g.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            raise PreconditionError("cycle edges must induce degree 2 everywhere")
        verts = set(deg)
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for e in g.incidence[x]:
                if e in ids:
                    y = g.other_end(e, x)
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        if seen != verts:
            raise PreconditionError("cycle edges must induce a connected subgraph")
        return Cycle(ids)


def betti(g: MultiGraph) -> int:
    """First Betti number m - n + #components."""
    return g.m - g.n + len(g.components())


def girth(g: MultiGraph) -> int | float:
    """Length of a shortest simple cycle; loops count 1, parallel pairs 2;
    infinity for forests."""
    if any(g.is_loop(e) for e in range(g.m)):
        return 1
    seen_pairs = set()
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            return 2
        seen_pairs.add(key)
    best = INFINITY
    # Shortest cycle through each edge: 1 + BFS distance avoiding the edge.
    for e, (u, v) in enumerate(g.edges):
        dist = _bfs_dist(g, u, avoid_edge=e)
        if dist[v] is not None and dist[v] + 1 < best:
            best = dist[v] + 1
    return best


def _bfs_dist(g: MultiGraph, src: int, avoid_edge: int = -1) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[src] = 0
    queue = [src]
    for x in queue:
        for e in g.incidence[x]:
            if e == avoid_edge:
                continue
            y = g.other_end(e, x)
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _bridges(g: MultiGraph, skip: frozenset[int] = frozenset()) -> list[int]:
    """Bridges of g with the given edges removed, via iterative lowlink."""
    visited = [False] * g.n
    disc = [0] * g.n
    low = [0] * g.n
    timer = 0
    out = []
    for root in range(g.n):
        if visited[root]:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.incidence[root]))]
        visited[root] = True
        disc[root] = low[root] = timer = timer + 1
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for e in it:
                if e in skip or e == via or g.is_loop(e):
                    continue
                y = g.other_end(e, x)
                if not visited[y]:
                    visited[y] = True
                    timer += 1
                    disc[y] = low[y] = timer
                    stack.append((y, e, iter(g.incidence[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if not advanced:
                stack.pop()
                if stack:
                    px, pvia, _ = stack[-1]
                    low[px] = min(low[px], low[x])
                    if low[x] > disc[px]:
                        out.append(via)
    # An edge with a live parallel copy is never a bridge; the 'e == via'
    # test above only skips one copy, so filter explicitly as a backstop.
    real = []
    multiplicity: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges):
        if e in skip:
            continue
        key = (min(u, v), max(u, v))
        multiplicity[key] = multiplicity.get(key, 0) + 1
    for e in out:
        u, v = g.edges[e]
        if multiplicity[(min(u, v), max(u, v))] == 1:
            real.append(e)
    return sorted(real)


def edge_cut_below(g: MultiGraph, k: int) -> tuple[int, ...] | None:
    """Smallest disconnecting edge set of size < k if one exists, else None;
    ties broken lexicographically. Requires g connected."""
    if not g.is_connected():
        raise DisconnectedGraphError("edge_cut_below requires a connected graph")
    if g.n <= 1 or k <= 1:
        return None
    br = _bridges(g)
    if br:
        return (br[0],)
    if k <= 2:
        return None
    for e in range(g.m):
        if g.is_loop(e):
            continue
        br = _bridges(g, skip=frozenset([e]))
        br = [f for f in br if not g.is_loop(f)]
        if br:
            return (e, br[0]) if e < br[0] else (br[0], e)
    if k <= 3:
        return None
    # Sizes >= 3: plain subset enumeration (desk-scale inputs only).
    non_loops = [e for e in range(g.m) if not g.is_loop(e)]
    for size in range(3, k):
        for subset in combinations(non_loops, size):
            if len(g.components(frozenset(subset))) > 1:
                return subset
    return None


def is_three_edge_connected(g: MultiGraph) -> bool:
    """No cutset of size <= 2 ("3-connected" throughout this package)."""
    return g.is_connected() and edge_cut_below(g, 3) is None


def min_weight_cycle(g: MultiGraph, w: Sequence[Fraction]) -> tuple[Cycle, Fraction]:
    """Minimum-weight simple cycle; ties broken by lexicographically smallest
    sorted edge-id tuple.

    For each edge e=(u,v) the candidate is e plus a weight-shortest u-v path
    avoiding e, found by Dijkstra over labels (weight, sorted edge tuple) so
    the lexicographic tie-break is exact.
    """
    per_edge = min_cycles_per_edge(g, w, prune=True)
    best = None
    for cand in per_edge.values():
        if best is None or cand < best:
            best = cand
    if best is None:
        raise AcyclicGraphError("graph has no cycle")
    value, ids = best
    return Cycle(frozenset(ids)), value


def min_cycles_per_edge(g: MultiGraph, w: Sequence[Fraction],
                        prune: bool = False) -> dict[int, tuple[Fraction, tuple[int, ...]]]:
    """For each edge on a cycle, the lexicographically least minimum-weight
    cycle through it as (weight, sorted edge ids). With prune, cycles that
    cannot beat the best so far may be dropped (only the overall minimum is
    then meaningful)."""
    w = check_weights(g, w)
    out: dict[int, tuple[Fraction, tuple[int, ...]]] = {}
    best: Fraction | None = None
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            out[e] = (w[e], (e,))
            if best is None or w[e] < best:
                best = w[e]
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        label = _lex_dijkstra(g, w, u, v, avoid_edge=e,
                              upper=best if prune else None)
        if label is None:
            continue
        dist, path = label
        out[e] = (dist + w[e], tuple(sorted(path + (e,))))
        if prune and (best is None or out[e][0] < best):
            best = out[e][0]
    return out


def _lex_dijkstra(g: MultiGraph, w: Sequence[Fraction], src: int, dst: int,
                  avoid_edge: int, upper: Fraction | None):
    """Shortest (weight, sorted-edge-tuple) label from src to dst avoiding
    one edge. Zero-weight edges are fine: appending an edge strictly grows
    the label, and label order is preserved under appending a common edge,
    so Dijkstra's invariant holds for the lexicographic order."""
    best: dict[int, tuple[Fraction, tuple[int, ...]]] = {src: (Fraction(0), ())}
    heap: list[tuple[Fraction, tuple[int, ...], int]] = [(Fraction(0), (), src)]
    done: set[int] = set()
    while heap:
        dist, path, x = heapq.heappop(heap)
        if x in done or best.get(x) != (dist, path):
            continue
        done.add(x)
        if x == dst:
            return (dist, path)
        for e in g.incidence[x]:
            if e == avoid_edge or g.is_loop(e):
                continue
            y = g.other_end(e, x)
            if y in done:
                continue
            nd = dist + w[e]
            if upper is not None and nd > upper:
                continue
            npath = tuple(sorted(path + (e,)))
            cur = best.get(y)
            if cur is None or (nd, npath) < cur:
                best[y] = (nd, npath)
                heapq.heappush(heap, (nd, npath, y))
    return None


def enumerate_cycles(g: MultiGraph) -> list[Cycle]:
    """All simple cycles, each exactly once; guarded at m <= 25. Cycles are
    rooted at their minimum edge id and extended by DFS over larger ids."""
    check_guard(g.m, 25, "enumerate_cycles")
    out: list[Cycle] = []
    for e0, (u0, v0) in enumerate(g.edges):
        if u0 == v0:
            out.append(Cycle(frozenset([e0])))
            continue
        # Simple paths v0 -> u0 through edges with id > e0.
        stack: list[tuple[int, frozenset[int], frozenset[int]]] = [
            (v0, frozenset([e0]), frozenset([v0]))
        ]
        while stack:
            x, used, verts = stack.pop()
            for e in g.incidence[x]:
                if e <= e0 or e in used or g.is_loop(e):
                    continue
                y = g.other_end(e, x)
                if y == u0:
                    out.append(Cycle(used | {e}))
                elif y not in verts:
                    stack.append((y, used | {e}, verts | {y}))
    dedup = {c.edge_ids for c in out}
    return sorted((Cycle(ids) for ids in dedup), key=lambda c: c.sorted_ids())


def split_vertex(g: MultiGraph, v: int) -> MultiGraph:
    """Split a degree >= 4 vertex of a 3-edge-connected graph into two
    adjacent vertices, preserving 3-edge-connectivity and the Betti number.
    The partition is found by searching pairs of edge-ends at v, which
    suffices by the splitting lemma for 3-connected graphs."""
    if g.degree(v) < 4:
        raise PreconditionError(f"vertex {v} has degree < 4")
    if not is_three_edge_connected(g):
        raise PreconditionError("split_vertex requires a 3-edge-connected graph")
    ends = []
    for e in g.incidence[v]:
        u, x = g.edges[e]
        if u == v:
            ends.append((e, 0))
        if x == v:
            ends.append((e, 1))
    for pair in combinations(range(len(ends)), 2):
        cand = _apply_split(g, v, [ends[i] for i in pair])
        if is_three_edge_connected(cand):
            return cand
    raise PreconditionError("no 3-edge-connected splitting found")


def _apply_split(g: MultiGraph, v: int, moved: list[tuple[int, int]]) -> MultiGraph:
    w = g.n
    new_edges = [list(e) for e in g.edges]
    for e, side in moved:
        new_edges[e][side] = w
    new_edges.append([v, w])
    return MultiGraph(g.n + 1, tuple(tuple(e) for e in new_edges))


@dataclass(frozen=True)
class ReductionStep:
    """One systole-monotone move from the reduction to cubic graphs: the kind
    is one of join_components / contract_bridge / contract_two_cut /
    split_vertex, and data records the edge or vertex acted on."""

    kind: str
    data: tuple
    result: MultiGraph


def _contract(g: MultiGraph, e: int) -> MultiGraph:
    """Contract edge e (must not be a loop); remaining ids shift down by one
    but keep their relative order."""
    u, v = g.edges[e]
    if u == v:
        raise PreconditionError("cannot contract a loop")
    a, b = min(u, v), max(u, v)

    def remap(x: int) -> int:
        if x == b:
            return a
        return x - 1 if x > b else x

    edges = [(remap(p), remap(q)) for i, (p, q) in enumerate(g.edges) if i != e]
    return MultiGraph(g.n - 1, tuple(edges))


def reduce_to_cubic(g: MultiGraph) -> tuple[MultiGraph, tuple[ReductionStep, ...]]:
    """Reduce to a 3-edge-connected cubic graph of the same Betti number by
    systole-nondecreasing moves; the trace certifies sys(input) <= sys(output)
    step by step."""
    if betti(g) < 2:
        raise PreconditionError("reduction requires Betti number >= 2")
    trace: list[ReductionStep] = []
    cur = g
    while True:
        comps = cur.components()
        if len(comps) > 1:
            u, v = comps[0][0], comps[1][0]
            cur = MultiGraph(cur.n, cur.edges + ((u, v),))
            trace.append(ReductionStep("join_components", (u, v), cur))
            continue
        br = _bridges(cur)
        if br:
            e = br[0]
            cur = _contract(cur, e)
            trace.append(ReductionStep("contract_bridge", (e,), cur))
            continue
        cut = edge_cut_below(cur, 3)
        if cut is not None:
            e1, e2 = cut
            cur = _contract(cur, e1)
            trace.append(ReductionStep("contract_two_cut", (e1, e2), cur))
            continue
        high = next((v for v in range(cur.n) if cur.degree(v) >= 4), None)
        if high is not None:
            cur = split_vertex(cur, high)
            trace.append(ReductionStep("split_vertex", (high,), cur))
            continue
        break
    assert all(cur.degree(v) == 3 for v in range(cur.n))
    assert betti(cur) == betti(g)
    assert is_three_edge_connected(cur)
    return cur, tuple(trace)
