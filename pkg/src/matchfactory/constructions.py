"""The graph families: P_k, Q_k, T_k, S_k(G), H_k and its three variants.

Every builder returns a :class:`Built` pair ``(graph, provenance)``.  Vertex and
edge ids are fully deterministic; the layout of each family is documented on
its builder so that results are bit-reproducible.
"""

from __future__ import annotations

import enum
from collections import Counter
from typing import NamedTuple, Sequence

from .classify import find_typed_pm
from .cuts import edge_connectivity
from .embedding import Q_COPY_LOCAL, Q_UQ, Q_Z1, Q_Z2, BlockEmbedding, MatchingCopy, Provenance
from .graph import Multigraph, add_edges, edge_multiset_equal, pair_key, add_matchings, delete_edges, disjoint_union, identify_vertices, is_regular
from .petersen import canonical_matchings, petersen, u, v


class ConstructionError(ValueError):
    pass


class Built(NamedTuple):
    graph: Multigraph
    provenance: Provenance


class HVariant(str, enum.Enum):
    BASE = "base"                   # H_k
    PRIME = "prime"                 # H_k + N_0 + N_1 + N_2
    DOUBLE_PRIME = "double-prime"   # H_k + N_0
    TRIPLE_PRIME = "triple-prime"   # H_k + N_0 + N_1

    @property
    def added(self) -> tuple[int, ...]:
        return {"base": (), "prime": (0, 1, 2), "double-prime": (0,), "triple-prime": (0, 1)}[self.value]


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ConstructionError(f"k must be a positive integer, got {k!r}")


def petersen_plus(types: Sequence[int]) -> Built:
    """``P^M``: the Petersen graph plus one copy of ``M_j`` for each listed ``j``.

    Copies are appended in list order; ``matching_copies`` names them ``M<j>``.
    """
    P, _ = petersen()
    cm = canonical_matchings()
    G = add_matchings(P, [cm[j] for j in types])
    copies, start = [], P.m
    for j in types:
        copies.append(MatchingCopy(f"M{j}", start, start + 5))
        start += 5
    block = BlockEmbedding("P", 0, tuple(range(10)),
                           {name: i for i, name in enumerate(
                               [f"v{i}" for i in range(1, 6)] + [f"u{i}" for i in range(1, 6)])})
    return Built(G, Provenance("P^M", None, None, G.n, G.m, [block], {}, copies))


def build_P(k: int) -> Built:
    """``P_k = P + k M_0 + (k-1)(M_1 + M_3 + M_4)``.

    The 15 Petersen edges come first, then ``k`` copies of ``M_0``, then
    ``k - 1`` rounds of ``M_1, M_3, M_4``.
    """
    _check_k(k)
    built = petersen_plus([0] * k + [1, 3, 4] * (k - 1))
    prov = built.provenance
    prov.family, prov.k = "P", k
    return built


def build_Q(k: int) -> Built:
    """Two copies of ``P_k`` without their ``u1v1`` multiedge, glued at ``u1``.

    Vertices: copy 1 at 0..9 (its ``u1`` is ``u_Q`` = 5, ``z1`` = ``v1`` = 0),
    copy 2's ``v1..v5`` at 10..14 (``z2`` = 10) and ``u2..u5`` at 15..18.
    Edges: copy 1's surviving edges, then copy 2's, each in ``P_k`` order.
    """
    _check_k(k)
    Pk, _ = build_P(k)
    G, _ = disjoint_union(Pk, Pk)
    spokes = Pk.copies(v(1), u(1))
    G, _ = delete_edges(G, spokes + [e + Pk.m for e in spokes])
    G, _ = identify_vertices(G, u(1), 10 + u(1))
    half = Pk.m - len(spokes)
    copy1 = set(Q_COPY_LOCAL[0])
    u_sets = {1: [], 2: []}
    for i in G.incidence[Q_UQ]:
        u_sets[1 if i < half else 2].append(i)
    assert all(x in copy1 for i in u_sets[1] for x in G.edges[i])
    block = BlockEmbedding(
        "Q", 0, tuple(range(19)),
        {"u_Q": Q_UQ, "z1": Q_Z1, "z2": Q_Z2},
        {"U1": tuple(u_sets[1]), "U2": tuple(u_sets[2])},
    )
    return Built(G, Provenance("Q", k, None, G.n, G.m, [block]))


def build_T(k: int) -> Built:
    """Triangle ``x1 x2 x3`` with every side of multiplicity ``k``.

    Edges: ``k`` copies each of ``x1x2``, ``x2x3``, ``x3x1``.
    """
    _check_k(k)
    edges = [(0, 1)] * k + [(1, 2)] * k + [(2, 0)] * k
    G = Multigraph(3, tuple(edges))
    block = BlockEmbedding("T", 0, (0, 1, 2), {"x1": 0, "x2": 1, "x3": 2}, {"internal": tuple(range(G.m))})
    return Built(G, Provenance("T", k, None, G.n, G.m, [block]))


def _compose(parts: Sequence[Built]) -> tuple[Multigraph, list[BlockEmbedding]]:
    G, offsets = disjoint_union(*(p.graph for p in parts))
    blocks, eoff = [], 0
    for idx, (p, voff) in enumerate(zip(parts, offsets)):
        for b in p.provenance.blocks:
            blocks.append(b.shifted(voff, eoff, index=idx))
        eoff += p.graph.m
    return G, blocks


def _mark_ports(G: Multigraph, blocks: list[BlockEmbedding]) -> list[BlockEmbedding]:
    out = []
    for b in blocks:
        if b.role == "Q":
            inside = set(b.vertices)
            marked = dict(b.marked_edges)
            for side in (1, 2):
                z = b.marked_vertices[f"z{side}"]
                marked[f"V{side}"] = tuple(e for e in G.incidence[z] if G.other(e, z) not in inside)
            b = BlockEmbedding(b.role, b.index, b.vertices, b.marked_vertices, marked)
        out.append(b)
    return out


def build_S(G: Multigraph, k: int) -> Built:
    """``S_k(G)``: a ``Q_k`` per edge of the cubic graph ``G`` and a ``T_k`` per vertex.

    Vertices: ``Q^e`` for each edge ``e = (a, b)`` in id order (its ``z1``
    faces ``a``, its ``z2`` faces ``b``), then ``T^v`` for each vertex.  At a
    vertex with incident edges ``e_1, e_2, e_3`` (increasing id) the port of
    ``Q^{e_j}`` gets ``k`` edges to ``x_j`` and ``k`` to ``x_{j+1}`` (mod 3).
    Edges: all Q blocks, all T blocks, then those connectors vertex by vertex.
    """
    _check_k(k)
    if is_regular(G) != 3:
        raise ConstructionError("S_k needs a cubic graph")
    if not G.is_connected():
        raise ConstructionError("S_k needs a connected graph")
    if edge_connectivity(G) < 2:
        raise ConstructionError("S_k needs a bridgeless graph")
    Q, T = build_Q(k), build_T(k)
    H, blocks = _compose([Q] * G.m + [T] * G.n)
    qb, tb = blocks[:G.m], blocks[G.m:]
    connectors, bundles = [], {}
    for x in range(G.n):
        xs = tb[x].vertices
        for j, e in enumerate(G.incidence[x]):
            a, b = G.edges[e]
            port = qb[e].marked_vertices["z1" if x == a else "z2"]
            start = H.m + len(connectors)
            connectors += [(port, xs[j])] * k + [(port, xs[(j + 1) % 3])] * k
            bundles[f"X_{x}_{e}"] = tuple(range(start, start + 2 * k))
    H = add_edges(H, connectors)
    blocks = _mark_ports(H, blocks)
    return Built(H, Provenance("S", k, None, H.n, H.m, blocks, bundles))


def build_H(k: int, variant: HVariant | str = HVariant.BASE) -> Built:
    """The 60-vertex graph ``H_k`` or one of its variants.

    Vertices: ``Q^1, Q^2, Q^3`` at 0..18, 19..37, 38..56, then ``x1, x2, x3``
    at 57..59.  Edges: the three Q blocks, ``T_k``, then for ``i = 1, 2, 3``
    ``k`` edges ``x_{i+1} z1^i``, ``k`` edges ``x_{i+2} z1^i`` and ``k`` edges
    ``z2^i z2^{i+1}`` (indices mod 3).  Variants append one copy of each
    ``N_j`` they use, in increasing ``j``.
    """
    _check_k(k)
    variant = HVariant(variant)
    H, blocks, sets = _base_H(k)
    prov = Provenance("H", k, variant.value, H.n, H.m, blocks, sets)
    if variant.added:
        family = pm_family_N(k)
        H2 = add_matchings(H, [family[j] for j in variant.added])
        start = H.m
        for j in variant.added:
            prov.matching_copies.append(MatchingCopy(f"N{j}", start, start + 30))
            start += 30
        H = H2
        prov.m = H.m
    return Built(H, prov)


def _base_H(k: int) -> tuple[Multigraph, list[BlockEmbedding], dict[str, tuple[int, ...]]]:
    Q, T = build_Q(k), build_T(k)
    H, blocks = _compose([Q, Q, Q, T])
    qb, tb = blocks[:3], blocks[3]
    xs = tb.vertices
    glue, sets = [], {"z2_triangle": ()}
    for i in range(3):
        z1, z2 = qb[i].marked_vertices["z1"], qb[i].marked_vertices["z2"]
        start = H.m + len(glue)
        glue += [(xs[(i + 1) % 3], z1)] * k + [(xs[(i + 2) % 3], z1)] * k
        sets[f"X{i + 1}"] = tuple(range(start, start + 2 * k))
        start = H.m + len(glue)
        glue += [(z2, qb[(i + 1) % 3].marked_vertices["z2"])] * k
        sets["z2_triangle"] += tuple(range(start, start + k))
    H = add_edges(H, glue)
    return H, _mark_ports(H, blocks), sets


N_TYPES: tuple[tuple[tuple[int, int], ...], ...] = (
    ((0, 4), (0, 4), (0, 4)),
    ((1, 3), (3, 0), (4, 1)),
    ((4, 1), (1, 3), (3, 0)),
    ((3, 0), (4, 1), (1, 3)),
)
"""Per-block type pairs of ``N_0..N_3``: ``N_i`` makes ``Q^i`` (1,3),
``Q^{i+1}`` (3,0) and ``Q^{i+2}`` (4,1)."""


_N_CACHE: dict[int, tuple[frozenset[int], ...]] = {}


def pm_family_N(k: int) -> list[frozenset[int]]:
    """The four perfect matchings ``N_0..N_3`` of ``H_k``, found in that order.

    Each is realised by :func:`find_typed_pm`.  Vertex pairs outside the Q
    blocks (triangle, connectors, T) already used by an earlier member are
    forbidden outright, so each such pair is used exactly once over the
    family.  Inside the blocks, copies used earlier are avoided whenever a
    spare copy exists; ``H_k`` has enough copies for that when ``k >= 2``, so
    the family is then pairwise disjoint.  ``H_1`` cannot hold two disjoint
    perfect matchings at all, so at ``k = 1`` some internal edges are shared.
    """
    _check_k(k)
    if k in _N_CACHE:
        return list(_N_CACHE[k])
    H, blocks, _ = _base_H(k)
    prov = Provenance("H", k, "base", H.n, H.m, blocks)
    block_of = {x: b.index for b in prov.blocks_of("Q") for x in b.vertices}
    family: list[frozenset[int]] = []
    used: set[int] = set()
    glue_forbidden: set[int] = set()
    for j, types in enumerate(N_TYPES):
        N = find_typed_pm(H, prov, types, forbidden=glue_forbidden, avoid=used)
        if N is None:
            raise ConstructionError(f"no perfect matching of H_{k} with the block types of N_{j}")
        family.append(N)
        used |= N
        for e in N:
            a, b = H.edges[e]
            if block_of.get(a, -1) != block_of.get(b, -2):
                glue_forbidden.update(H.copies(a, b))
    _N_CACHE[k] = tuple(family)
    return family


def build_Q_apex(k: int) -> Built:
    """``Q_k`` plus one apex vertex joined ``2k`` times to each of ``z1`` and ``z2``.

    The result is ``4k``-regular on 20 vertices; the apex is vertex 19 and its
    edges (``V1`` then ``V2``) are appended after the ``Q_k`` edges.
    """
    Q, prov = build_Q(k)
    apex = Q.n
    G = add_edges(Multigraph(Q.n + 1, Q.edges), [(Q_Z1, apex)] * (2 * k) + [(Q_Z2, apex)] * (2 * k))
    blocks = _mark_ports(G, prov.blocks)
    return Built(G, Provenance("Q+apex", k, None, G.n, G.m, blocks))


class Counterexample(NamedTuple):
    graph: Multigraph
    provenance: Provenance
    t: int          # claimed edge connectivity
    missing: int    # size r - 2 of the family claimed not to exist


def counterexample(r: int) -> Counterexample:
    """Dispatch on ``r mod 4``: ``H_k``, ``H''_k``, ``H'''_k`` or ``H'_k`` with ``k = r // 4``."""
    if not isinstance(r, int) or r < 4:
        raise ConstructionError(f"r must be an integer >= 4, got {r!r}")
    k, rem = divmod(r, 4)
    variant, t = {
        0: (HVariant.BASE, r),
        1: (HVariant.DOUBLE_PRIME, r - 1),
        2: (HVariant.TRIPLE_PRIME, r - 2),
        3: (HVariant.PRIME, r - 1),
    }[rem]
    G, prov = build_H(k, variant)
    return Counterexample(G, prov, t, r - 2)


def addition_identity(k: int) -> bool:
    """``H_{k+1}`` equals ``H_k + N_0 + N_1 + N_2 + N_3`` edge for edge."""
    H, _ = build_H(k)
    big, _ = build_H(k + 1)
    return edge_multiset_equal(big, add_matchings(H, pm_family_N(k)))


def removal_identity(k: int, variant: HVariant | str) -> bool:
    """The variant equals ``H_{k+1}`` minus the ``N_j`` it does not add."""
    variant = HVariant(variant)
    H, _ = build_H(k)
    big = Counter(pair_key(e) for e in build_H(k + 1).graph.edges)
    family = pm_family_N(k)
    removed = Counter(pair_key(H.edges[e]) for j in range(4) if j not in variant.added for e in family[j])
    if removed - big:
        return False
    return big - removed == Counter(pair_key(e) for e in build_H(k, variant).graph.edges)


NAMED_GRAPHS = {
    "K4": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    "K33": (6, ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))),
    "prism": (6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5))),
    "theta": (2, ((0, 1), (0, 1), (0, 1))),
}


def named_graph(name: str) -> Multigraph:
    """Small cubic base graphs by name; ``petersen`` is the labelled Petersen graph."""
    if name == "petersen":
        return petersen()[0]
    if name not in NAMED_GRAPHS:
        raise ConstructionError(f"unknown graph {name!r}")
    n, edges = NAMED_GRAPHS[name]
    return Multigraph(n, edges)
