"""Loop-free multigraphs with individually identified parallel edges.

Vertices are the integers ``0..n-1``.  Edges are stored as an ordered tuple of
vertex pairs; the position of a pair in that tuple is its edge id.  Parallel
edges are separate entries, so every copy has its own id and multiplicities are
always derived, never stored.

All operations are pure: they return new graphs and never modify their input.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex/edge references."""


@dataclasses.dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for i, (a, b) in enumerate(edges):
            if a == b:
                raise GraphError(f"edge {i} is a loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge {i} = ({a}, {b}) out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in increasing id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append(i)
            inc[b].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    @cached_property
    def multiplicity(self) -> Counter:
        """Counter keyed by sorted vertex pair."""
        return Counter(pair_key(e) for e in self.edges)

    def other(self, edge_id: int, v: int) -> int:
        a, b = self.edges[edge_id]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        return sorted({self.other(e, v) for e in self.incidence[v]})

    def copies(self, a: int, b: int) -> list[int]:
        """Ids of all parallel copies joining ``a`` and ``b``."""
        return [e for e in self.incidence[a] if self.other(e, a) == b]

    def simple_projection(self) -> "Multigraph":
        """One edge per adjacent pair, ordered by the lowest id of each class."""
        seen = {}
        for e in self.edges:
            seen.setdefault(pair_key(e), None)
        return Multigraph(self.n, tuple(seen))

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicity.values())

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for e in self.incidence[v]:
                    w = self.other(e, v)
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> tuple["Multigraph", dict[int, int]]:
        """Subgraph induced by ``vertices`` (relabelled in the given order)."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[a], index[b]) for a, b in self.edges if a in index and b in index]
        return Multigraph(len(vertices), tuple(edges)), index

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``; edge ids unchanged."""
        _check_bijection(perm, self.n)
        return Multigraph(self.n, tuple((perm[a], perm[b]) for a, b in self.edges))


def pair_key(e: Edge) -> Edge:
    a, b = e
    return (a, b) if a < b else (b, a)


def _check_vertices(G: Multigraph, S: Iterable[int]) -> set[int]:
    S = set(S)
    bad = [v for v in S if not (0 <= v < G.n)]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} not in graph with n={G.n}")
    return S


def _check_edge_ids(G: Multigraph, ids: Iterable[int]) -> list[int]:
    ids = list(ids)
    bad = [e for e in ids if not (0 <= e < G.m)]
    if bad:
        raise GraphError(f"edge ids {sorted(bad)} not in graph with m={G.m}")
    return ids


def _check_bijection(perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise GraphError("vertex map is not a bijection")


def boundary(G: Multigraph, S: Iterable[int]) -> frozenset[int]:
    """Ids of the edges with exactly one end in ``S``."""
    S = _check_vertices(G, S)
    return frozenset(i for i, (a, b) in enumerate(G.edges) if (a in S) != (b in S))


def disjoint_union(*graphs: Multigraph) -> tuple[Multigraph, list[int]]:
    """Place graphs side by side; returns the union and each graph's vertex offset."""
    offsets, edges, n = [], [], 0
    for H in graphs:
        offsets.append(n)
        edges.extend((a + n, b + n) for a, b in H.edges)
        n += H.n
    return Multigraph(n, tuple(edges)), offsets


def add_edges(G: Multigraph, pairs: Iterable[Edge]) -> Multigraph:
    return Multigraph(G.n, G.edges + tuple(pairs))


def add_matchings(G: Multigraph, family: Sequence[Iterable[int]]) -> Multigraph:
    """``G + (N_1 + ... + N_k)``: append one fresh copy of every listed edge.

    Copies are appended in family order and, within one member, in increasing
    edge-id order.  The original edge ids are untouched.
    """
    new = []
    for member in family:
        for e in sorted(_check_edge_ids(G, member)):
            new.append(G.edges[e])
    return add_edges(G, new)


def delete_edges(G: Multigraph, ids: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Remove the given edge copies.

    Returns the new graph and the map old id -> new id for surviving edges
    (relative order is preserved).
    """
    drop = set(_check_edge_ids(G, ids))
    remap, kept = {}, []
    for i, e in enumerate(G.edges):
        if i not in drop:
            remap[i] = len(kept)
            kept.append(e)
    return Multigraph(G.n, tuple(kept)), remap


def identify_vertices(G: Multigraph, a: int, b: int) -> tuple[Multigraph, dict[int, int]]:
    """Merge ``a`` and ``b`` into a single vertex.

    The merged vertex takes the smaller index; higher indices shift down by
    one.  Edge ids are preserved.  Returns the graph and the old->new vertex map.
    """
    _check_vertices(G, (a, b))
    if a == b:
        raise GraphError("cannot identify a vertex with itself")
    if G.copies(a, b):
        raise GraphError(f"identifying adjacent vertices {a} and {b} would create a loop")
    keep, gone = min(a, b), max(a, b)
    vmap = {}
    for v in range(G.n):
        if v == gone:
            vmap[v] = keep
        else:
            vmap[v] = v - 1 if v > gone else v
    edges = tuple((vmap[x], vmap[y]) for x, y in G.edges)
    return Multigraph(G.n - 1, edges), vmap


def is_regular(G: Multigraph) -> int | None:
    degs = set(G.degrees)
    if len(degs) == 1:
        return degs.pop()
    if G.n == 0:
        return 0
    return None


def edge_multiset_equal(G1: Multigraph, G2: Multigraph, vmap: Sequence[int] | Mapping[int, int] | None = None) -> bool:
    """True iff every vertex pair has the same multiplicity in both graphs.

    ``vmap[v]`` is the image in ``G2`` of vertex ``v`` of ``G1`` (identity when
    omitted).
    """
    if G1.n != G2.n:
        raise GraphError("vertex map cannot be a bijection: orders differ")
    if vmap is None:
        vmap = list(range(G1.n))
    elif isinstance(vmap, Mapping):
        vmap = [vmap[v] for v in range(G1.n)]
    _check_bijection(vmap, G1.n)
    mapped = Counter(pair_key((vmap[a], vmap[b])) for a, b in G1.edges)
    return mapped == G2.multiplicity


def is_perfect_matching(G: Multigraph, ids: Iterable[int]) -> bool:
    ids = list(ids)
    if len(ids) != len(set(ids)) or any(not (0 <= e < G.m) for e in ids):
        return False
    covered = Counter()
    for e in ids:
        a, b = G.edges[e]
        covered[a] += 1
        covered[b] += 1
    return len(covered) == G.n and all(c == 1 for c in covered.values())


def girth(G: Multigraph) -> float:
    """Length of a shortest cycle; parallel edges form 2-cycles."""
    if not G.is_simple():
        return 2
    best = float("inf")
    for s in range(G.n):
        dist, parent = {s: 0}, {s: -1}
        queue = [s]
        for v in queue:
            for w in G.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best
