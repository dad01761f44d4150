"""Petersen-type bookkeeping for matchings of Petersen-derived graphs.

A perfect matching of ``P + (N_1 + ... + N_k)`` projects onto one of the six
perfect matchings ``M_0..M_5`` of the Petersen graph; the index is its type.
Inside a ``Q_k`` gadget a perfect matching of the host induces a type in each
of the two Petersen copies once the removed ``u1v1`` multiedge is restored on
the side whose ``v1`` is matched outside the gadget.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

from .embedding import BlockEmbedding, Provenance
from .graph import Multigraph, is_perfect_matching, pair_key
from .matching import iter_perfect_matchings
from .petersen import canonical_matchings, u, v

U1V1 = pair_key((v(1), u(1)))


class ClassificationError(ValueError):
    pass


class QBlockType(NamedTuple):
    a: int       # type induced in Petersen copy 1 (the copy containing z1)
    b: int       # type induced in Petersen copy 2
    side: int    # 1 if the matching leaves the block at z1, 2 if at z2

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


def classify_type(host: Multigraph, N: Iterable[int], provenance: Provenance | None) -> int | None:
    """Type of a matching of ``P^M``; ``None`` if it projects onto no ``M_j``."""
    if provenance is None or not provenance.blocks_of("P"):
        raise ClassificationError("host has no Petersen provenance")
    cmap = provenance.blocks_of("P")[0].copy_vertices(1)
    pairs = set()
    for e in N:
        a, b = host.edges[e]
        pairs.add(pair_key((cmap[a], cmap[b])))
    return canonical_matchings().type_of_pairs(pairs)


def classify_q_block(H: Multigraph, block: BlockEmbedding, N: Iterable[int]) -> QBlockType:
    N = frozenset(N)
    if block.role != "Q":
        raise ClassificationError("not a Q block")
    if not is_perfect_matching(H, N):
        raise ClassificationError("not a perfect matching of the host")
    inside = set(block.vertices)
    external = [e for e in N if (H.edges[e][0] in inside) != (H.edges[e][1] in inside)]
    if len(external) != 1:
        raise ClassificationError(f"{len(external)} matching edges leave the block")
    a, b = H.edges[external[0]]
    port = a if a in inside else b
    if port == block.marked_vertices["z1"]:
        side = 1
    elif port == block.marked_vertices["z2"]:
        side = 2
    else:
        raise ClassificationError("matching leaves the block away from z1/z2")
    cm = canonical_matchings()
    types = []
    for copy in (1, 2):
        cmap = block.copy_vertices(copy)
        pairs = {pair_key((cmap[x], cmap[y])) for x, y in (H.edges[e] for e in N)
                 if x in cmap and y in cmap}
        if copy == side:
            pairs.add(U1V1)
        t = cm.type_of_pairs(pairs)
        if t is None:
            raise ClassificationError(f"copy {copy} does not extend to a Petersen perfect matching")
        types.append(t)
    return QBlockType(types[0], types[1], side)


def external_side(a: int, b: int) -> int | None:
    """Which port a (a, b)-typed block uses; ``None`` if no matching can have that type."""
    through = {0, 1}  # the two Petersen matchings containing u1v1
    if a in through and b not in through:
        return 1
    if b in through and a not in through:
        return 2
    return None


def _lowest_copy(H: Multigraph, x: int, y: int, forbidden: set[int], avoid: set[int]) -> int | None:
    copies = H.copies(x, y)
    for pool in ([c for c in copies if c not in forbidden and c not in avoid],
                 [c for c in copies if c not in forbidden]):
        if pool:
            return min(pool)
    return None


def find_typed_pm(H: Multigraph, provenance: Provenance, types: Sequence[tuple[int, int]],
                  forbidden: Iterable[int] = (), avoid: Iterable[int] = ()) -> frozenset[int] | None:
    """A perfect matching realising ``types`` on the Q blocks, in block order.

    Inside each block the types fix the vertex pairs; the lowest-id copy not in
    ``forbidden`` is taken, preferring copies outside ``avoid``.  The remaining
    vertices (block ports and everything outside the blocks) are completed by
    the first perfect matching in backtracking order, again preferring edges
    outside ``avoid``.  Returns ``None`` when no such matching exists.
    """
    forbidden, avoid = set(forbidden), set(avoid)
    qblocks = provenance.blocks_of("Q")
    if len(types) != len(qblocks):
        raise ValueError(f"{len(types)} types given for {len(qblocks)} blocks")
    cm = canonical_matchings()
    chosen: list[int] = []
    covered: set[int] = set()
    for block, (a, b) in zip(qblocks, types):
        side = external_side(a, b)
        if side is None:
            return None
        for copy, t in ((1, a), (2, b)):
            to_host = {pv: h for h, pv in block.copy_vertices(copy).items()}
            pairs = set(cm.pairs(t))
            if copy == side:
                pairs.discard(U1V1)
            for p, q in sorted(pairs):
                e = _lowest_copy(H, to_host[p], to_host[q], forbidden, avoid)
                if e is None:
                    return None
                chosen.append(e)
        port = block.marked_vertices["z1" if side == 1 else "z2"]
        covered.update(x for x in block.vertices if x != port)

    rest = [x for x in range(H.n) if x not in covered]
    index = {x: i for i, x in enumerate(rest)}
    sub_edges, sub_ids = [], []
    for i, (x, y) in enumerate(H.edges):
        if x in index and y in index and i not in forbidden:
            sub_edges.append((index[x], index[y]))
            sub_ids.append(i)
    sub = Multigraph(len(rest), tuple(sub_edges))
    preferred = [sub_ids[i] not in avoid for i in range(sub.m)]
    glue = None
    for allowed in (preferred, None):
        glue = next(iter_perfect_matchings(sub, allowed), None)
        if glue is not None:
            break
    if glue is None:
        return None
    result = frozenset(chosen + [sub_ids[i] for i in glue])
    if not is_perfect_matching(H, result):
        raise AssertionError("typed matching failed revalidation")
    return result


def phi_omega(family: Sequence[Iterable[int]], W: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Parity vector of ``W`` against a family of disjoint matchings, and its weight."""
    family = [frozenset(N) for N in family]
    for A, B in itertools.combinations(family, 2):
        if A & B:
            raise ValueError("family members are not pairwise disjoint")
    W = list(W)
    vec = tuple(sum(1 for e in W if e in N) % 2 for N in family)
    return vec, sum(vec)
