import pytest
import sympy as sp
from hypothesis import given, strategies as st

from matroid_toric.groebner import (
    buchberger,
    contains,
    groebner_failure,
    ideals_equal,
    is_groebner,
    is_reduced_groebner,
    normal_form,
    reduce_monomial,
    restrict_to_vars,
    s_binomial,
)
from matroid_toric.polys import AmbientMismatch, Binomial, BinomialSet, Monomial, MonomialOrder, UnknownVariable, x

from independent import canon_pair, package_pairs

X = [x(j) for j in range(1, 5)]
LEX = MonomialOrder.lex(X)
DRL = MonomialOrder.degrevlex(X)


def mono(*exps):
    return Monomial((X[i], e) for i, e in enumerate(exps) if e)


def bset(*pairs):
    return BinomialSet.build(X, [(mono(*a), mono(*b)) for a, b in pairs])


# examples -------------------------------------------------------------------


def test_s_binomial_examples():
    f = Binomial(mono(1, 1), mono(0, 0, 1, 1))
    assert s_binomial(f, f, LEX) is None
    # x1x2 - x3x4 and x1x2 - x3^2 share a lead
    g = Binomial(mono(1, 1), mono(0, 0, 2))
    h = s_binomial(f, g, LEX)
    assert h.canonical() == Binomial(mono(0, 0, 1, 1), mono(0, 0, 2)).canonical()


def test_normal_form_examples():
    # U24 basis variables 12,13,23,14,24,34 shortened to four letters:
    # x1x4 - x2x3 rewrites x1^2x4 to x1x2x3
    g = bset(((1, 0, 0, 1), (0, 1, 1, 0)))
    assert reduce_monomial(mono(2, 0, 0, 1), g, LEX) == mono(1, 1, 1)
    assert normal_form(Binomial(mono(1, 0, 0, 1), mono(0, 1, 1)), g, LEX) is None
    r = normal_form(Binomial(mono(2), mono(0, 2)), g, LEX)
    assert r is not None and r.canonical() == Binomial(mono(2), mono(0, 2)).canonical()


def test_buchberger_small_cases():
    empty = BinomialSet(frozenset(X), ())
    assert len(buchberger(empty, LEX)) == 0
    one = bset(((1, 1), (0, 0, 1, 1)))
    assert buchberger(one, LEX).same_elements(one)
    assert is_groebner(empty, LEX) and is_groebner(one, LEX)


def test_buchberger_twisted_cubic():
    # the rational normal curve s^3, s^2t, st^2, t^3: the three quadrics
    # are already a basis under both orders
    g = bset(((1, 0, 1), (0, 2)), ((0, 1, 0, 1), (0, 0, 2)), ((1, 0, 0, 1), (0, 1, 1)))
    assert buchberger(g, DRL).same_elements(g)
    assert buchberger(g, LEX).same_elements(g)


def test_groebner_failure_witness():
    g = bset(((1, 1), (0, 0, 1, 1)), ((1, 0, 1), (0, 2)))
    bad = groebner_failure(g, LEX)
    assert bad is not None
    f, h, rem = bad
    assert contains(buchberger(g, LEX), rem, LEX)
    assert not is_groebner(g, LEX)


def test_ideals_equal_and_ambient():
    a = bset(((1, 1), (0, 0, 1, 1)), ((1, 0, 1), (0, 2)))
    b = buchberger(a, DRL)
    assert ideals_equal(a, b, LEX)
    other = BinomialSet(frozenset(X[:3]), ())
    with pytest.raises(AmbientMismatch):
        ideals_equal(a, other, LEX)
    with pytest.raises(UnknownVariable):
        buchberger(a, MonomialOrder.lex(X[:3]))


def test_restrict_to_vars():
    a = bset(((1, 1), (0, 0, 1, 1)), ((1,), (0, 1)))
    r = restrict_to_vars(a, X[:2])
    assert len(r) == 1 and r.ambient == frozenset(X[:2])


# properties against SymPy --------------------------------------------------

side = st.lists(st.integers(0, 2), min_size=4, max_size=4)
pairs = st.lists(st.tuples(side, side).filter(lambda p: p[0] != p[1]), min_size=1, max_size=4)
S = sp.symbols("x1_1:5")
NAMES = [str(v) for v in X]


def to_sympy(a):
    return sp.Mul(*[s ** e for s, e in zip(S, a)])


def sympy_gb(raw, order):
    G = sp.groebner([to_sympy(a) - to_sympy(b) for a, b in raw], *S, order=order)
    out = set()
    for g in G.exprs:
        (e1, _), (e2, _) = sp.Poly(g, *S).terms()
        out.add(canon_pair(dict(zip(NAMES, e1)), dict(zip(NAMES, e2))))
    return frozenset(out)


@pytest.mark.parametrize("order,name", [(LEX, "lex"), (DRL, "grevlex")])
@given(raw=pairs)
def test_matches_sympy(order, name, raw):
    g = buchberger(bset(*raw), order)
    assert package_pairs(g) == sympy_gb(raw, name)


@given(raw=pairs, order=st.sampled_from([LEX, DRL]))
def test_output_invariants(raw, order):
    f = bset(*raw)
    g = buchberger(f, order)
    assert is_reduced_groebner(g, order)
    assert buchberger(g, order).same_elements(g)
    assert all(order.compare(b.lead, b.trail) > 0 for b in g)
    assert all(contains(g, b, order) for b in f)
    if all(b.is_homogeneous() for b in f):
        assert all(b.is_homogeneous() for b in g)


@given(raw=pairs, shift=st.integers(0, 3))
def test_input_permutation_invariance(raw, shift):
    f = bset(*raw)
    elems = list(f)
    g = BinomialSet(f.ambient, tuple(elems[shift % len(elems):] + elems[: shift % len(elems)]))
    assert buchberger(f, DRL).same_elements(buchberger(g, DRL))


@given(raw=pairs)
def test_grading_does_not_change_result(raw):
    f = bset(*raw)
    assert buchberger(f, DRL, grading=[3, 1, 2, 1]).same_elements(buchberger(f, DRL))
