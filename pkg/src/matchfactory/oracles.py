"""Brute-force checks of Petersen matching structure and of the Q-gadget port parity.

Everything here enumerates perfect matchings with parallel copies kept
distinct, so these checks are independent of the copy-reduced search used by
:func:`matchfactory.matching.has_disjoint_pms`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterator, NamedTuple, Sequence

from .classify import classify_type, phi_omega
from .constructions import build_Q_apex, petersen_plus
from .matching import enumerate_perfect_matchings
from .petersen import petersen


def _masks(pms) -> list[int]:
    return [sum(1 << e for e in pm) for pm in pms]


def disjoint_families(masks: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    """Index tuples ``i_1 < ... < i_size`` of pairwise disjoint masks."""
    chosen: list[int] = []

    def rec(start, used):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(masks)):
            if masks[i] & used == 0:
                chosen.append(i)
                yield from rec(i + 1, used | masks[i])
                chosen.pop()

    yield from rec(0, 0)


class PetersenStructure(NamedTuple):
    pm_count: int
    bijection: bool
    edge_in_two: bool


def petersen_structure() -> PetersenStructure:
    """Count the perfect matchings of P and test the pair -> common edge map."""
    P, _ = petersen()
    pms = enumerate_perfect_matchings(P).matchings
    common = []
    for A, B in itertools.combinations(pms, 2):
        both = A & B
        common.append(next(iter(both)) if len(both) == 1 else None)
    bijection = None not in common and sorted(common) == list(range(P.m))
    counts = Counter(e for pm in pms for e in pm)
    return PetersenStructure(len(pms), bijection, all(counts[e] == 2 for e in range(P.m)))


def verify_forced_type(j: int) -> bool:
    """In ``P + M_j`` every pair of disjoint perfect matchings has a type-``j`` member."""
    G, prov = petersen_plus([j])
    pms = enumerate_perfect_matchings(G).matchings
    types = [classify_type(G, pm, prov) for pm in pms]
    for a, b in disjoint_families(_masks(pms), 2):
        if j not in (types[a], types[b]):
            return False
    return True


class SubcollectionResult(NamedTuple):
    holds: bool
    realizable: frozenset  # type multisets (sorted tuples) of disjoint families


def _realizable(by_type: dict[int, list[int]], T: Sequence[int]) -> bool:
    """Is there a pairwise disjoint family whose members have types ``T``?"""
    # scarce types first; equal types stay adjacent
    T = sorted(T, key=lambda t: (len(by_type.get(t, ())), t))

    def rec(pos, used, floor):
        if pos == len(T):
            return True
        cands = by_type.get(T[pos], [])
        # equal consecutive types pick increasing indices
        start = floor if pos and T[pos] == T[pos - 1] else 0
        for i in range(start, len(cands)):
            if cands[i] & used == 0 and rec(pos + 1, used | cands[i], i + 1):
                return True
        return False

    return rec(0, 0, 0)


def check_subcollection(M: Sequence[int]) -> SubcollectionResult:
    """Every ``(|M|+1)``-family of disjoint perfect matchings of ``P^M`` contains ``M``.

    All perfect matchings of ``P^M`` are enumerated (copies distinct) and
    grouped by type.  For every multiset of ``|M| + 1`` types a backtracking
    search over those concrete matchings decides whether a disjoint family
    with exactly these types exists; the property holds iff every realisable
    multiset contains ``M``.  Containment compares type multiplicities.
    """
    G, prov = petersen_plus(list(M))
    pms = enumerate_perfect_matchings(G).matchings
    by_type: dict[int, list[int]] = {}
    for pm, mask in zip(pms, _masks(pms)):
        t = classify_type(G, pm, prov)
        if t is None:
            raise AssertionError("a perfect matching of P^M projects onto no M_j")
        by_type.setdefault(t, []).append(mask)
    want = Counter(M)
    realizable = set()
    for T in itertools.combinations_with_replacement(range(6), len(M) + 1):
        if _realizable(by_type, T):
            realizable.add(T)
    holds = all(not (want - Counter(T)) for T in realizable)
    return SubcollectionResult(holds, frozenset(realizable))


def verify_subcollection_lemma(M: Sequence[int]) -> bool:
    if len(M) > 3:
        raise ValueError("multisets larger than 3 are out of brute-force range")
    return check_subcollection(M).holds


def all_multisets(max_size: int = 3) -> list[tuple[int, ...]]:
    out = []
    for size in range(1, max_size + 1):
        out += list(itertools.combinations_with_replacement(range(6), size))
    return out


class PhiDiagnostic(NamedTuple):
    pairs: int
    violations: int
    omegas: frozenset  # observed (omega(V1), omega(V2)) values


def port_parity_diagnostic(k: int = 1) -> PhiDiagnostic:
    """On ``Q_k`` plus an apex, test every disjoint ``(4k-2)``-family for
    ``omega(phi(V1)) = omega(phi(V2)) = 2k - 1``.  Brute force; ``k = 1`` only
    is desk-scale."""
    G, prov = build_Q_apex(k)
    (block,) = prov.blocks_of("Q")
    V1, V2 = block.marked_edges["V1"], block.marked_edges["V2"]
    pms = enumerate_perfect_matchings(G).matchings
    pairs = violations = 0
    omegas = set()
    for fam in disjoint_families(_masks(pms), 4 * k - 2):
        family = [pms[i] for i in fam]
        pairs += 1
        w1 = phi_omega(family, V1)[1]
        w2 = phi_omega(family, V2)[1]
        omegas.add((w1, w2))
        if w1 != 2 * k - 1 or w2 != 2 * k - 1:
            violations += 1
    return PhiDiagnostic(pairs, violations, frozenset(omegas))
