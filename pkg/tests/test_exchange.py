import itertools

import pytest

from matroid_toric.catalog import named, uniform
from matroid_toric.exchange import (
    ExchangeWitness,
    check_white_gb,
    check_white_generation,
    default_orders,
    exchange_witnesses,
    is_quadratic,
    sorting_weight,
    symmetric_exchange_set,
)
from matroid_toric.groebner import is_groebner
from matroid_toric.polys import BasisVar
from matroid_toric.toric import bases_matrix

from conftest import SUITE


def test_u24_exchange_set():
    gens, ws = symmetric_exchange_set(uniform(2, 4))
    # bases 12,13,14,23,24,34: the three perfect matchings of K4 share a fiber
    assert len(gens) == 3 and is_quadratic(gens)
    assert {frozenset([str(b.lead), str(b.trail)]) for b in gens} == {
        frozenset(["x1_1*x1_6", "x1_2*x1_5"]),
        frozenset(["x1_1*x1_6", "x1_3*x1_4"]),
        frozenset(["x1_2*x1_5", "x1_3*x1_4"]),
    }
    # 12 and 34 exchanging 1 for 3 give 23 and 14
    assert ExchangeWitness(1, 6, 4, 3, 1, 3) in ws


def test_witness_swapped():
    w = ExchangeWitness(1, 2, 3, 4, 5, 6)
    assert w.swapped() == ExchangeWitness(2, 1, 4, 3, 6, 5)
    assert w.as_dict()["l"] == 4


@pytest.mark.parametrize("name", sorted(SUITE))
def test_witnesses_are_exchanges(name):
    m = SUITE[name]
    for w in exchange_witnesses(m):
        bi, bj = set(m.basis(w.i)), set(m.basis(w.j))
        assert w.x in bi - bj and w.y in bj - bi
        assert set(m.basis(w.k)) == (bi - {w.x}) | {w.y}
        assert set(m.basis(w.l)) == (bj - {w.y}) | {w.x}


def _degree2_fibers(m):
    mat = bases_matrix(m)
    fibers = {}
    for (v, a), (u, b) in itertools.combinations_with_replacement(mat.columns, 2):
        key = tuple(p + q for p, q in zip(a, b))
        fibers.setdefault(key, []).append(frozenset([v, u]) if v != u else frozenset([v]))
    return mat, fibers


@pytest.mark.parametrize("name", sorted(SUITE))
def test_exchange_quadrics_span_degree_two(name):
    # the quadrics lie in the kernel and connect every degree-2 fiber
    m = SUITE[name]
    mat, fibers = _degree2_fibers(m)
    gens, _ = symmetric_exchange_set(m)
    edges = set()
    for b in gens:
        assert mat.in_kernel(b.lead, b.trail)
        edges.add((frozenset(b.lead), frozenset(b.trail)))
    for members in fibers.values():
        reach = {members[0]}
        grew = True
        while grew:
            grew = False
            for a, c in edges:
                for p, q in ((a, c), (c, a)):
                    if p in reach and q not in reach and q in members:
                        reach.add(q)
                        grew = True
        assert reach == set(members)


@pytest.mark.parametrize("name", sorted(SUITE) + ["W3", "P6", "Q6"])
def test_white_generation_holds(name):
    m = SUITE.get(name) or named(name)
    assert check_white_generation(m)


def test_sorting_weight_non_negative():
    w = sorting_weight(uniform(2, 4))
    assert min(w.values()) == 0
    assert w[BasisVar(1, 3)] == 0  # basis 14 is the most spread out


def test_default_orders_are_deterministic():
    m = uniform(2, 4)
    a = [o.describe() for o in default_orders(m, search=5, seed=3)]
    b = [o.describe() for o in default_orders(m, search=5, seed=3)]
    assert a == b and len(a) == 6 + 10


@pytest.mark.parametrize("name", ["U24", "U25", "U35", "U36", "MK4"])
def test_white_gb_order_found(name):
    m = SUITE[name]
    order = check_white_gb(m)
    assert order is not None
    gens, _ = symmetric_exchange_set(m)
    assert is_groebner(gens, order)


def test_white_gb_inconclusive_is_none():
    assert check_white_gb(named("Q6"), []) is None
