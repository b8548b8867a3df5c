import itertools

import pytest
from hypothesis import given, strategies as st

from matroid_toric.catalog import WHEEL_EDGES, graphic, named, uniform
from matroid_toric.matroid import (
    ElementOutOfRange,
    EmptyBases,
    ExchangeFails,
    Matroid,
    MatroidError,
    UnequalCardinality,
    anchor,
    classify_elements,
    compaction_map,
    connectivity_lambda,
    contract,
    delete,
    direct_sum,
    dual,
    has_minor,
    is_isomorphic,
    is_n_connected,
    is_valid,
    rank_of_subset,
    relabel,
    validate_matroid,
)

from conftest import SMALL, SUITE


def subsets(E):
    return itertools.chain.from_iterable(itertools.combinations(E, k) for k in range(len(E) + 1))


# validation -----------------------------------------------------------------


def test_validate_uniform_examples():
    assert validate_matroid([[1], [2]], 2) == uniform(1, 2)
    assert validate_matroid(itertools.combinations(range(1, 5), 2), 4) == uniform(2, 4)


def test_exchange_failure_reports_witness():
    # B={1,2}, B'={3,4}, x=1: candidates {3,2} and {4,2} are not bases
    with pytest.raises(ExchangeFails) as err:
        validate_matroid([[1, 2], [3, 4]], 4)
    assert err.value.witness == ((1, 2), (3, 4), 1)


def test_structural_errors():
    with pytest.raises(EmptyBases):
        validate_matroid([], 3)
    with pytest.raises(UnequalCardinality) as err:
        validate_matroid([[1, 2], [3]], 3)
    assert err.value.witness == ((1, 2), (3,))
    with pytest.raises(ElementOutOfRange):
        validate_matroid([[1, 5]], 4)
    with pytest.raises(MatroidError):
        validate_matroid([[1]], 0)


def test_canonical_storage():
    m = Matroid.from_bases(3, [[3, 1], [2, 1], [3, 2]])
    assert m.bases == ((1, 2), (1, 3), (2, 3))
    assert m == uniform(2, 3) and hash(m) == hash(uniform(2, 3))


# rank and elements -----------------------------------------------------------


def test_rank_examples():
    u = uniform(2, 4)
    assert rank_of_subset(u, [1]) == 1
    assert rank_of_subset(u, []) == 0
    # spokes 1, 2 and rim edge 4 form a triangle of the wheel
    assert rank_of_subset(named("MK4"), [1, 2, 4]) == 2


@pytest.mark.parametrize("name", sorted(SUITE))
def test_rank_function_axioms(name):
    m = SUITE[name]
    E = list(m.elements)
    assert rank_of_subset(m, E) == m.rank
    for X in subsets(E):
        r = rank_of_subset(m, X)
        for e in E:
            if e not in X:
                assert rank_of_subset(m, set(X) | {e}) - r in (0, 1)


def test_classify_examples():
    c = classify_elements(Matroid.from_bases(2, [[1]]))
    assert c.loops == {2} and c.coloops == {1}
    c = classify_elements(uniform(2, 4))
    assert not c.loops and not c.coloops
    c = classify_elements(Matroid.from_bases(1, [[]]))
    assert c.loops == {1} and not c.coloops


# duality and minors ---------------------------------------------------------


def test_dual_examples():
    assert dual(uniform(1, 3)) == uniform(2, 3)
    d = dual(named("MK4"))
    assert d.n_bases == 16 and d.rank == 3


@pytest.mark.parametrize("name", sorted(SUITE))
def test_dual_involution(name):
    m = SUITE[name]
    assert dual(dual(m)) == m
    assert is_valid(dual(m))


def test_delete_contract_examples():
    assert delete(uniform(2, 4), 4) == uniform(2, 3)
    assert delete(Matroid.from_bases(2, [[1]]), 1) == Matroid.from_bases(1, [[]])
    assert contract(uniform(2, 4), 4) == uniform(1, 3)
    mk4 = named("MK4")
    # trees of K4 avoiding a fixed edge: 16 - 8 (Cayley count 4^2, each edge in 8 trees)
    assert delete(mk4, 1).n_bases == 8
    assert contract(mk4, 1).n_bases == 8


def test_compaction_map():
    assert compaction_map(4, 2) == {1: 1, 3: 2, 4: 3}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_contract_loop_is_delete(name):
    m = direct_sum(SMALL[name], Matroid.from_bases(1, [[]]))
    loop = m.ground_size
    assert contract(m, loop) == delete(m, loop) == SMALL[name]


@pytest.mark.parametrize("name", sorted(SUITE))
def test_minors_commute(name):
    m = SUITE[name]
    d = m.ground_size
    for a, b in itertools.permutations(m.elements, 2):
        # delete b then contract a, against contract a then delete b
        b1 = b if b < a else b - 1
        a1 = a if a < b else a - 1
        assert contract(delete(m, b), a1) == delete(contract(m, a), b1)
        assert is_valid(delete(m, b)) and is_valid(contract(m, a))
    assert d == m.ground_size


def test_direct_sum_examples():
    u = uniform(1, 2)
    s = direct_sum(u, u)
    assert s.ground_size == 4 and s.n_bases == 4 and s.rank == 2
    loop = Matroid.from_bases(1, [[]])
    assert direct_sum(uniform(2, 4), loop) == Matroid.from_bases(5, uniform(2, 4).bases)
    for m1, m2 in itertools.combinations(SMALL.values(), 2):
        assert direct_sum(m1, m2).n_bases == m1.n_bases * m2.n_bases


# anchoring ------------------------------------------------------------------


def test_anchor_examples():
    am = anchor(uniform(2, 4), 4)
    assert am.gamma == 3
    assert am.bases == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert anchor(uniform(1, 2), 1).gamma == 1
    assert anchor(Matroid.from_bases(3, [[1, 2], [1, 3]]), 1).gamma == 0


@pytest.mark.parametrize("name", sorted(SUITE))
def test_anchor_invariants(name):
    m = SUITE[name]
    for c in m.elements:
        am = anchor(m, c)
        assert sorted(am.order) == list(range(1, m.n_bases + 1))
        assert am.gamma == sum(1 for b in m.bases if c not in b)
        assert all(c not in am.basis(j) for j in range(1, am.gamma + 1))
        assert all(c in am.basis(j) for j in range(am.gamma + 1, am.n + 1))


# isomorphism and minors -----------------------------------------------------


def test_isomorphism_examples():
    assert is_isomorphic(uniform(2, 3), dual(uniform(1, 3))) == {1: 1, 2: 2, 3: 3}
    assert is_isomorphic(named("MK4"), named("W3")) is None
    perm = {1: 3, 2: 1, 3: 4, 4: 2}
    u = uniform(2, 4)
    found = is_isomorphic(u, relabel(u, perm))
    assert found is not None and relabel(u, found) == relabel(u, perm)


@given(st.permutations(range(1, 7)))
def test_isomorphism_finds_relabeling(p):
    m = named("Q6")
    perm = dict(zip(range(1, 7), p))
    found = is_isomorphic(m, relabel(m, perm))
    assert found is not None
    assert relabel(m, found) == relabel(m, perm)


def test_has_minor_examples():
    mk4 = named("MK4")
    assert has_minor(mk4, mk4)
    assert not has_minor(uniform(2, 4), mk4)
    assert not has_minor(direct_sum(uniform(2, 4), uniform(1, 2)), mk4)
    assert has_minor(mk4, uniform(2, 3))
    # the wheel has no U24 minor (graphic matroids are binary)
    assert not has_minor(mk4, uniform(2, 4))
    assert has_minor(named("W3"), uniform(2, 4))


# connectivity ---------------------------------------------------------------


def test_lambda_examples():
    u = uniform(2, 4)
    assert connectivity_lambda(u, []) == 0
    assert connectivity_lambda(u, [1, 2]) == 2
    s = direct_sum(uniform(1, 2), uniform(2, 3))
    assert connectivity_lambda(s, [1, 2]) == 0


@pytest.mark.parametrize("name", sorted(SUITE))
def test_lambda_symmetries(name):
    m = SUITE[name]
    E = set(m.elements)
    md = dual(m)
    for X in subsets(sorted(E)):
        lam = connectivity_lambda(m, X)
        assert lam == connectivity_lambda(m, E - set(X))
        assert lam == connectivity_lambda(md, X)


def test_n_connected_examples():
    assert is_n_connected(uniform(2, 4), 3)
    assert is_n_connected(named("MK4"), 3)
    assert not is_n_connected(direct_sum(uniform(1, 2), uniform(1, 2)), 2)
    # the triangle gives U23, a connected matroid
    assert is_n_connected(graphic([(0, 1), (1, 2), (2, 0)]), 2)
    with pytest.raises(MatroidError):
        is_n_connected(uniform(1, 2), 1)


def test_wheel_labels():
    # spokes first, then the rim
    assert WHEEL_EDGES[:3] == [(0, 1), (0, 2), (0, 3)]
