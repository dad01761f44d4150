import itertools
import random

import pycosat
import pytest
from hypothesis import given, strategies as st

from conftest import multigraphs
from matchfactory.cnf import cnf_clauses
from matchfactory.constructions import build_H, build_P, named_graph, petersen_plus
from matchfactory.graph import Multigraph, is_perfect_matching
from matchfactory.matching import (
    Verdict, enumerate_perfect_matchings, find_perfect_matching, has_disjoint_pms, iter_perfect_matchings,
)
from matchfactory.petersen import canonical_matchings, petersen


def brute_pms(G):
    if G.n % 2:
        return set()
    return {frozenset(c) for c in itertools.combinations(range(G.m), G.n // 2) if is_perfect_matching(G, c)}


def brute_disjoint(G, m):
    pms = sorted(brute_pms(G), key=sorted)
    return any(all(not (a & b) for a, b in itertools.combinations(fam, 2))
               for fam in itertools.combinations(pms, m))


def sat_disjoint(G, m):
    _, clauses = cnf_clauses(G, m)
    return pycosat.solve(clauses) != "UNSAT"


small_even = multigraphs(min_n=2, max_n=6, max_m=10).filter(lambda G: G.n % 2 == 0)


def test_find_perfect_matching_examples():
    P, _ = petersen()
    pm = find_perfect_matching(P)
    assert pm is not None and len(pm) == 5 and is_perfect_matching(P, pm)
    M = canonical_matchings()
    only = find_perfect_matching(P, forbidden=set().union(*(M[j] - M[5] for j in range(5))))
    assert only == M[5]
    assert find_perfect_matching(Multigraph(3, ((0, 1), (1, 2)))) is None


@given(small_even)
def test_find_perfect_matching_agrees_with_brute_force(G):
    pm = find_perfect_matching(G)
    assert (pm is not None) == bool(brute_pms(G))
    if pm is not None:
        assert is_perfect_matching(G, pm)


def test_enumeration_counts():
    assert len(enumerate_perfect_matchings(petersen()[0]).matchings) == 6
    assert len(enumerate_perfect_matchings(build_P(1).graph).matchings) == 42
    assert len(enumerate_perfect_matchings(named_graph("K4")).matchings) == 3


def test_enumeration_cap():
    res = enumerate_perfect_matchings(build_P(1).graph, cap=10)
    assert res.truncated and len(res.matchings) == 10


@given(small_even)
def test_enumeration_is_complete_and_distinct(G):
    got = enumerate_perfect_matchings(G).matchings
    assert len(got) == len(set(got))
    assert set(got) == brute_pms(G)


@given(small_even, st.data())
def test_forbidding_edges_only_removes_matchings(G, data):
    forbidden = data.draw(st.sets(st.integers(0, max(G.m - 1, 0)), max_size=G.m)) if G.m else set()
    all_pms = set(enumerate_perfect_matchings(G).matchings)
    some = set(enumerate_perfect_matchings(G, forbidden=forbidden).matchings)
    assert some == {pm for pm in all_pms if not pm & forbidden}


def test_copy_reduced_enumeration():
    P1, _ = build_P(1)
    reduced = list(iter_perfect_matchings(P1, None, distinct_copies=False))
    # one representative per projected matching
    assert len(reduced) == 6


def test_has_disjoint_pms_examples():
    P, _ = petersen()
    assert has_disjoint_pms(P, 2).verdict is Verdict.NO
    d = has_disjoint_pms(build_P(1).graph, 2)
    assert d.verdict is Verdict.YES and len(d.family) == 2
    assert not d.family[0] & d.family[1]
    assert has_disjoint_pms(P, 1).verdict is Verdict.YES


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_P1_levels(m):
    G, _ = build_P(1)
    assert (has_disjoint_pms(G, m).verdict is Verdict.YES) == sat_disjoint(G, m)


@given(small_even, st.integers(1, 3))
def test_has_disjoint_pms_agrees_with_brute_force_and_sat(G, m):
    d = has_disjoint_pms(G, m)
    expected = brute_disjoint(G, m)
    assert (d.verdict is Verdict.YES) == expected == sat_disjoint(G, m)
    if d.family:
        assert all(is_perfect_matching(G, f) for f in d.family)


@pytest.mark.parametrize("M", [(0,), (0, 0), (1, 3), (0, 1, 3), (2, 2, 5)])
def test_petersen_plus_agrees_with_sat(M):
    G, _ = petersen_plus(list(M))
    for m in range(2, len(M) + 3):
        assert (has_disjoint_pms(G, m).verdict is Verdict.YES) == sat_disjoint(G, m)


@given(small_even, st.integers(1, 3))
def test_monotone_in_m(G, m):
    if has_disjoint_pms(G, m + 1).verdict is Verdict.YES:
        assert has_disjoint_pms(G, m).verdict is Verdict.YES


@given(small_even, st.randoms())
def test_relabel_invariance(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert has_disjoint_pms(G, 2).verdict == has_disjoint_pms(G.relabel(perm), 2).verdict


def test_budget_gives_unknown():
    H, _ = build_H(1)
    d = has_disjoint_pms(H, 2, max_nodes=5)
    assert d.verdict is Verdict.UNKNOWN and d.family is None


def test_workers_do_not_change_verdict():
    H, _ = build_H(1)
    assert has_disjoint_pms(H, 2, workers=2).verdict is Verdict.NO
    assert has_disjoint_pms(build_P(1).graph, 3, workers=2).verdict is Verdict.NO
    d = has_disjoint_pms(build_P(1).graph, 2, workers=3)
    assert d.verdict is Verdict.YES and not d.family[0] & d.family[1]


def test_single_worker_is_reproducible():
    G, _ = build_P(2)
    a, b = has_disjoint_pms(G, 4), has_disjoint_pms(G, 4)
    assert (a.verdict, a.family, a.nodes, a.pms_enumerated) == (b.verdict, b.family, b.nodes, b.pms_enumerated)


@pytest.mark.parametrize("m,verdict", [(6, Verdict.YES), (7, Verdict.NO)])
def test_P2_threshold_and_relabelings(m, verdict):
    G, _ = build_P(2)
    assert has_disjoint_pms(G, m).verdict is verdict
    if verdict is Verdict.YES:
        # the UNSAT side is slow for plain SAT because of copy symmetry
        assert sat_disjoint(G, m)
    rnd = random.Random(3)
    for _ in range(3):
        perm = list(range(G.n))
        rnd.shuffle(perm)
        assert has_disjoint_pms(G.relabel(perm), m).verdict is verdict


def test_m_must_be_positive():
    with pytest.raises(ValueError):
        has_disjoint_pms(petersen()[0], 0)
