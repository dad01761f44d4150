import itertools
import json

import pytest

from matchfactory.classify import classify_q_block
from matchfactory.constructions import (
    N_TYPES, ConstructionError, HVariant, addition_identity, build_H, build_P, build_Q, build_Q_apex,
    build_S, build_T, counterexample, named_graph, pm_family_N, removal_identity,
)
from matchfactory.cuts import edge_connectivity, is_r_graph
from matchfactory.embedding import Q_UQ, Q_Z1, Q_Z2, Provenance
from matchfactory.graph import Multigraph, delete_edges, is_perfect_matching, is_regular
from matchfactory.petersen import u, v


@pytest.mark.parametrize("k", [1, 2, 3])
def test_P_k(k):
    G, prov = build_P(k)
    assert G.n == 10 and G.m == 20 * k
    assert is_regular(G) == 4 * k
    assert max(G.multiplicity.values()) <= 2 * k


def test_P_2_spoke_multiplicity():
    G, _ = build_P(2)
    assert len(G.copies(u(1), v(1))) == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_Q_k(k):
    G, prov = build_Q(k)
    assert (G.n, G.m) == (19, 36 * k)
    assert G.degrees[Q_UQ] == 4 * k
    assert G.degrees[Q_Z1] == G.degrees[Q_Z2] == 2 * k
    assert all(G.degrees[x] == 4 * k for x in range(G.n) if x not in (Q_Z1, Q_Z2))


def test_T_k():
    T1, _ = build_T(1)
    assert (T1.n, T1.m) == (3, 3)
    T2, _ = build_T(2)
    assert (T2.m, is_regular(T2), edge_connectivity(T2)) == (6, 4, 4)


@pytest.mark.parametrize("builder", [build_P, build_Q, build_T, build_H])
def test_k_must_be_positive(builder):
    with pytest.raises(ConstructionError):
        builder(0)


def test_S_k_counts():
    theta = named_graph("theta")
    assert build_S(theta, 1).graph.n == 19 * 3 + 3 * 2
    S, prov = build_S(named_graph("K4"), 1)
    assert (S.n, is_regular(S), edge_connectivity(S)) == (126, 4, 4)
    assert len(prov.blocks_of("Q")) == 6 and len(prov.blocks_of("T")) == 4


def test_S_k_preconditions():
    with pytest.raises(ConstructionError):
        build_S(Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0))), 1)
    bridged = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)]
    bridged = bridged + [(a + 5, b + 5) for a, b in bridged] + [(4, 9)]
    with pytest.raises(ConstructionError):
        build_S(Multigraph(10, tuple(bridged)), 1)
    K4 = named_graph("K4")
    with pytest.raises(ConstructionError):
        build_S(Multigraph(8, K4.edges + tuple((a + 4, b + 4) for a, b in K4.edges)), 1)


@pytest.mark.parametrize("k", [1, 2])
def test_H_k(k):
    H, prov = build_H(k)
    assert (H.n, H.m) == (60, 120 * k)
    assert is_r_graph(H) == 4 * k
    assert len(prov.blocks_of("Q")) == 3


@pytest.mark.parametrize("variant,extra,degree,conn", [
    (HVariant.PRIME, 3, 7, 6),
    (HVariant.DOUBLE_PRIME, 1, 5, 4),
    (HVariant.TRIPLE_PRIME, 2, 6, 4),
])
def test_H_variants_k1(variant, extra, degree, conn):
    H, prov = build_H(1, variant)
    assert H.m == 120 + 30 * extra
    assert is_regular(H) == degree
    assert edge_connectivity(H) == conn
    assert [c.name for c in prov.matching_copies] == [f"N{j}" for j in variant.added]


@pytest.mark.parametrize("k", [1, 2])
def test_N_family_types(k):
    H, prov = build_H(k)
    family = pm_family_N(k)
    for N, types in zip(family, N_TYPES):
        assert len(N) == 30 and is_perfect_matching(H, N)
        assert tuple(classify_q_block(H, b, N).pair for b in prov.blocks_of("Q")) == types


@pytest.mark.parametrize("k", [2, 3])
def test_N_family_disjoint(k):
    family = pm_family_N(k)
    assert all(not (a & b) for a, b in itertools.combinations(family, 2))


def test_N_family_overlaps_at_k1():
    # H_1 has no two disjoint perfect matchings, so the four must overlap
    family = pm_family_N(1)
    assert any(a & b for a, b in itertools.combinations(family, 2))


@pytest.mark.parametrize("k", [1, 2])
def test_identities(k):
    assert addition_identity(k)
    for variant in HVariant:
        assert removal_identity(k, variant)


def test_H2_minus_three_matchings_edge_count():
    H2, prov = build_H(2, HVariant.PRIME)
    assert H2.m == 240 + 90
    G, _ = delete_edges(H2, [e for c in prov.matching_copies for e in c.ids])
    assert G.m == 240


@pytest.mark.parametrize("r,variant,t", [
    (4, "base", 4), (5, "double-prime", 4), (6, "triple-prime", 4), (7, "prime", 6), (8, "base", 8),
])
def test_counterexample_dispatch(r, variant, t):
    c = counterexample(r)
    assert c.provenance.variant == variant
    assert c.t == t and c.missing == r - 2
    assert is_regular(c.graph) == r


def test_counterexample_rejects_small_r():
    with pytest.raises(ConstructionError):
        counterexample(3)


def test_Q_apex_host():
    G, prov = build_Q_apex(1)
    assert G.n == 20 and is_regular(G) == 4
    (block,) = prov.blocks_of("Q")
    assert len(block.marked_edges["V1"]) == len(block.marked_edges["V2"]) == 2


def test_provenance_round_trip():
    _, prov = build_H(1, HVariant.PRIME)
    doc = json.loads(json.dumps(prov.to_dict()))
    assert Provenance.from_dict(doc).to_dict() == prov.to_dict()


def test_builders_are_deterministic():
    assert build_H(1).graph == build_H(1).graph
    assert build_S(named_graph("prism"), 1).graph == build_S(named_graph("prism"), 1).graph
