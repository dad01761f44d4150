"""The labelled Petersen graph and its six perfect matchings.

Vertex ``v_i`` has index ``i - 1`` and ``u_i`` has index ``i + 4``.  Edge ids:
outer cycle ``v1v2, v2v3, v3v4, v4v5, v5v1`` (0-4), spokes ``u_iv_i`` for
``i = 1..5`` (5-9), inner cycle ``u1u3, u3u5, u5u2, u2u4, u4u1`` (10-14).
"""

from __future__ import annotations

import dataclasses
import itertools
from functools import lru_cache

from .graph import Multigraph, girth, is_regular, pair_key


def v(i: int) -> int:
    return (i - 1) % 5


def u(i: int) -> int:
    return 5 + (i - 1) % 5


VERTEX_NAMES = tuple(f"v{i}" for i in range(1, 6)) + tuple(f"u{i}" for i in range(1, 6))
INNER_ORDER = (1, 3, 5, 2, 4)


@dataclasses.dataclass(frozen=True)
class PetersenLabeling:
    outer: tuple[int, ...]
    inner: tuple[int, ...]   # u1, u3, u5, u2, u4 in cycle order
    spokes: tuple[int, ...]  # edge id of u_i v_i at position i - 1

    def name(self, vertex: int) -> str:
        return VERTEX_NAMES[vertex]


class LabelingError(AssertionError):
    """The hard-coded labelling failed its own self-check."""


@lru_cache(maxsize=None)
def petersen() -> tuple[Multigraph, PetersenLabeling]:
    outer = [(v(i), v(i + 1)) for i in range(1, 6)]
    spokes = [(u(i), v(i)) for i in range(1, 6)]
    inner = [(u(a), u(b)) for a, b in zip(INNER_ORDER, INNER_ORDER[1:] + INNER_ORDER[:1])]
    G = Multigraph(10, tuple(outer + spokes + inner))
    if is_regular(G) != 3 or girth(G) != 5 or G.m != 15:
        raise LabelingError("labelled Petersen graph is not cubic of girth 5")
    lab = PetersenLabeling(
        outer=tuple(v(i) for i in range(1, 6)),
        inner=tuple(u(i) for i in INNER_ORDER),
        spokes=tuple(range(5, 10)),
    )
    return G, lab


def rotate_vertex(x: int, steps: int = 1) -> int:
    """The automorphism ``v_j -> v_{j+1}``, ``u_j -> u_{j+1}``."""
    if x < 5:
        return (x + steps) % 5
    return 5 + (x - 5 + steps) % 5


@lru_cache(maxsize=None)
def _edge_index() -> dict[tuple[int, int], int]:
    G, _ = petersen()
    return {pair_key(e): i for i, e in enumerate(G.edges)}


def edge_id(a: int, b: int) -> int:
    return _edge_index()[pair_key((a, b))]


@dataclasses.dataclass(frozen=True)
class CanonicalMatchings:
    matchings: tuple[frozenset[int], ...]  # M_0..M_5 as Petersen edge ids

    def __getitem__(self, j: int) -> frozenset[int]:
        return self.matchings[j]

    def __len__(self):
        return len(self.matchings)

    def pairs(self, j: int) -> frozenset[tuple[int, int]]:
        G, _ = petersen()
        return frozenset(pair_key(G.edges[e]) for e in self.matchings[j])

    def type_of_pairs(self, pairs) -> int | None:
        pairs = frozenset(pair_key(p) for p in pairs)
        for j in range(6):
            if self.pairs(j) == pairs:
                return j
        return None

    def intersection_edge(self, i: int, j: int) -> int:
        (e,) = self.matchings[i] & self.matchings[j]
        return e


def _petersen_pms() -> list[frozenset[int]]:
    G, _ = petersen()
    out = []
    for combo in itertools.combinations(range(15), 5):
        ends = [x for e in combo for x in G.edges[e]]
        if len(set(ends)) == 10:
            out.append(frozenset(combo))
    return out


@lru_cache(maxsize=None)
def canonical_matchings() -> CanonicalMatchings:
    """``M_0`` = spokes, ``M_1`` = the other matching through ``u1v1``, and
    ``M_i`` = the rotation of ``M_1`` by ``i - 1`` steps."""
    G, lab = petersen()
    all_pms = _petersen_pms()
    m0 = frozenset(lab.spokes)
    through = [pm for pm in all_pms if lab.spokes[0] in pm and pm != m0]
    if len(through) != 1:
        raise LabelingError(f"expected one other matching through u1v1, found {len(through)}")
    m1 = through[0]
    ms = [m0, m1]
    for i in range(2, 6):
        ms.append(frozenset(
            edge_id(rotate_vertex(a, i - 1), rotate_vertex(b, i - 1))
            for a, b in (G.edges[e] for e in m1)))
    if sorted(map(sorted, ms)) != sorted(map(sorted, all_pms)):
        raise LabelingError("M_0..M_5 are not the six perfect matchings")
    meets = {}
    for i, j in itertools.combinations(range(6), 2):
        common = ms[i] & ms[j]
        if len(common) != 1:
            raise LabelingError(f"M_{i} and M_{j} share {len(common)} edges")
        meets[(i, j)] = next(iter(common))
    if sorted(meets.values()) != list(range(15)):
        raise LabelingError("pair -> intersection edge is not a bijection")
    return CanonicalMatchings(tuple(ms))
