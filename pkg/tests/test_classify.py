import itertools

import pytest

from matchfactory.classify import (
    ClassificationError, classify_q_block, classify_type, external_side, find_typed_pm, phi_omega,
)
from matchfactory.constructions import N_TYPES, build_H, build_P, pm_family_N
from matchfactory.graph import is_perfect_matching
from matchfactory.matching import enumerate_perfect_matchings, iter_perfect_matchings
from matchfactory.petersen import canonical_matchings, edge_id, u, v


@pytest.fixture(scope="module")
def P1():
    return build_P(1)


def test_classify_type_examples(P1):
    G, prov = P1
    M = canonical_matchings()
    added = frozenset(range(15, 20))
    assert classify_type(G, added, prov) == 0
    assert classify_type(G, M[3], prov) == 3
    mixed = frozenset([15, 16]) | {edge_id(u(i), v(i)) for i in (3, 4, 5)}
    assert is_perfect_matching(G, mixed)
    assert classify_type(G, mixed, prov) == 0


def test_every_pm_of_P1_has_a_type(P1):
    G, prov = P1
    types = [classify_type(G, pm, prov) for pm in enumerate_perfect_matchings(G).matchings]
    assert None not in types
    # 2^5 spoke choices for type 0, two u1v1 copies for each other type
    assert sorted(types) == [0] * 32 + [j for j in range(1, 6) for _ in range(2)]


def test_classify_type_needs_provenance(P1):
    with pytest.raises(ClassificationError):
        classify_type(P1[0], range(5), None)


@pytest.mark.parametrize("k", [1, 2])
def test_N_block_types(k):
    H, prov = build_H(k)
    blocks = prov.blocks_of("Q")
    family = pm_family_N(k)
    assert all(classify_q_block(H, b, family[0]).pair == (0, 4) for b in blocks)
    assert classify_q_block(H, blocks[0], family[1]).pair == (1, 3)
    assert classify_q_block(H, blocks[1], family[1]).pair == (3, 0)
    assert classify_q_block(H, blocks[2], family[1]).pair == (4, 1)


def test_classify_q_block_rejects_non_matching():
    H, prov = build_H(1)
    with pytest.raises(ClassificationError):
        classify_q_block(H, prov.blocks_of("Q")[0], [0, 1])


def test_external_side():
    assert external_side(0, 4) == 1
    assert external_side(3, 1) == 2
    assert external_side(2, 3) is None
    assert external_side(0, 1) is None


def test_find_typed_pm_matches_exhaustive_search():
    H, prov = build_H(1)
    blocks = prov.blocks_of("Q")
    feasible = {tuple(classify_q_block(H, b, pm).pair for b in blocks)
                for pm in iter_perfect_matchings(H, None, distinct_copies=False)}
    assert len(feasible) == 2048
    pairs = sorted({p for t in feasible for p in t})
    assert len(pairs) == 16
    for types in itertools.product(pairs, repeat=3):
        N = find_typed_pm(H, prov, list(types))
        assert (N is not None) == (types in feasible)
        if N is not None:
            assert tuple(classify_q_block(H, b, N).pair for b in blocks) == types


def test_find_typed_pm_examples():
    H, prov = build_H(1)
    N0 = find_typed_pm(H, prov, N_TYPES[0])
    assert N0 is not None and is_perfect_matching(H, N0)
    # all blocks (0,3) turns out to be realisable
    assert find_typed_pm(H, prov, [(0, 3)] * 3) is not None
    assert find_typed_pm(H, prov, [(0, 2), (0, 2), (2, 0)]) is None
    assert find_typed_pm(H, prov, [(2, 3)] * 3) is None


def test_find_typed_pm_respects_forbidden():
    H, prov = build_H(2)
    family = pm_family_N(2)
    used = family[0] | family[1]
    N2 = find_typed_pm(H, prov, N_TYPES[2], forbidden=used)
    assert N2 is not None and not N2 & used


def test_phi_omega():
    assert phi_omega([{0, 1}], []) == ((0,), 0)
    assert phi_omega([{0, 1}], [0, 1]) == ((0,), 0)
    assert phi_omega([{0, 2}], [0, 2, 5]) == ((0,), 0)
    assert phi_omega([{0}, {1}], [0, 3]) == ((1, 0), 1)
    N = {4, 5, 6}
    assert phi_omega([N], [4]) == ((1,), 1)
    with pytest.raises(ValueError):
        phi_omega([{0, 1}, {1, 2}], [0])
