"""Symmetric-exchange quadrics and per-instance checks of White's conjectures."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .groebner import buchberger, is_groebner
from .matroid import Matroid
from .polys import BasisVar, Binomial, BinomialSet, Monomial, MonomialOrder
from .toric import bases_matrix, default_order, toric_gb


@dataclass(frozen=True, order=True)
class ExchangeWitness:
    """``B_k = B_i + y - x`` and ``B_l = B_j + x - y`` (1-based basis indices)."""

    i: int
    j: int
    k: int
    l: int
    x: int
    y: int

    def swapped(self) -> "ExchangeWitness":
        return ExchangeWitness(self.j, self.i, self.l, self.k, self.y, self.x)

    def as_dict(self) -> dict[str, int]:
        return {"i": self.i, "j": self.j, "k": self.k, "l": self.l, "x": self.x, "y": self.y}


def basis_variables(m: Matroid) -> list[BasisVar]:
    return [BasisVar(1, j) for j in range(1, m.n_bases + 1)]


def exchange_witnesses(m: Matroid) -> list[ExchangeWitness]:
    index = m.basis_index
    out = []
    for i, bi in enumerate(m.bases, start=1):
        si = frozenset(bi)
        for j, bj in enumerate(m.bases, start=1):
            if i == j:
                continue
            sj = frozenset(bj)
            for x in si - sj:
                for y in sj - si:
                    k = index.get((si - {x}) | {y})
                    l = index.get((sj - {y}) | {x})
                    if k is not None and l is not None:
                        out.append(ExchangeWitness(i, j, k, l, x, y))
    return out


def symmetric_exchange_set(m: Matroid) -> tuple[BinomialSet, list[ExchangeWitness]]:
    """All non-trivial ``x_i x_j - x_k x_l`` from symmetric exchanges."""
    witnesses = exchange_witnesses(m)
    pairs = []
    for w in witnesses:
        lead = Monomial.of(BasisVar(1, w.i), BasisVar(1, w.j))
        trail = Monomial.of(BasisVar(1, w.k), BasisVar(1, w.l))
        if lead != trail:
            pairs.append(Binomial(lead, trail).canonical())
    elems = sorted(set(pairs), key=lambda b: (b.lead.items(), b.trail.items()))
    return BinomialSet(frozenset(basis_variables(m)), tuple(elems)), witnesses


def matroid_ideal(m: Matroid, order: MonomialOrder | None = None) -> BinomialSet:
    """The oracle's reduced Groebner basis of the toric ideal of ``m``."""
    return toric_gb(bases_matrix(m), order)


def check_white_generation(m: Matroid) -> bool:
    """Do the symmetric-exchange quadrics generate the toric ideal?"""
    order = default_order(basis_variables(m))
    gens, _ = symmetric_exchange_set(m)
    return buchberger(gens, order).elements == matroid_ideal(m, order).elements


def sorting_weight(m: Matroid) -> dict[BasisVar, int]:
    """Weight favouring bases whose elements are spread out.

    ``K - sum((b - a)^2)`` over pairs ``a < b`` of the basis, shifted to be
    non-negative.  On uniform matroids this picks out the sorted pairs of
    bases as standard monomials.
    """
    raw = [sum((b - a) ** 2 for a, b in itertools.combinations(B, 2)) for B in m.bases]
    top = max(raw)
    return {BasisVar(1, j): top - w for j, w in enumerate(raw, start=1)}


def default_orders(m: Matroid, search: int = 200, seed: int = 0) -> Iterator[MonomialOrder]:
    """Candidate orders: degrevlex/lex over the basis ranking and its
    reverse, the two sorting-weight orders, then ``search`` seeded random
    rankings under each tie-break."""
    vs = basis_variables(m)
    rev = vs[::-1]
    yield MonomialOrder.degrevlex(vs)
    yield MonomialOrder.lex(vs)
    yield MonomialOrder.degrevlex(rev)
    yield MonomialOrder.lex(rev)
    w = sorting_weight(m)
    yield MonomialOrder.weighted(w, vs, "degrevlex")
    yield MonomialOrder.weighted(w, vs, "lex")
    rng = random.Random(seed)
    for _ in range(search):
        r = vs[:]
        rng.shuffle(r)
        yield MonomialOrder.degrevlex(r)
        yield MonomialOrder.lex(r)


def check_white_gb(m: Matroid, orders: Iterable[MonomialOrder] | None = None) -> MonomialOrder | None:
    """First order under which the exchange quadrics form a Groebner basis
    of the toric ideal, or None (inconclusive, not a counterexample)."""
    if orders is None:
        orders = default_orders(m)
    gens, _ = symmetric_exchange_set(m)
    for order in orders:
        if not is_groebner(gens, order):
            continue
        if buchberger(gens, order).elements == matroid_ideal(m, order).elements:
            return order
    return None


def is_quadratic(bset: BinomialSet) -> bool:
    return all(b.lead.degree == 2 for b in bset)
