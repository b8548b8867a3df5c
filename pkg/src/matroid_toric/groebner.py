"""Buchberger's algorithm for ideals generated by monic binomials.

All polynomials met along the way stay binomials: an S-pair of two
binomials is a difference of two monomials, and reducing a monomial by a
binomial ``lead - trail`` replaces a multiple of ``lead`` by the same
multiple of ``trail``.  Zero is represented by ``None``.
"""

from __future__ import annotations

import heapq
import logging
from typing import Iterable, Sequence

from .backend import Reducer
from .polys import (
    AmbientMismatch,
    Binomial,
    BinomialSet,
    Monomial,
    MonomialOrder,
    UnknownVariable,
    VariableId,
)

log = logging.getLogger(__name__)

Dense = tuple[int, ...]


def _divides(a: Dense, b: Dense) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Dense, b: Dense) -> Dense:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Dense, b: Dense) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Context:
    """Dense encoding of one order's ring, with a memoised sort key."""

    def __init__(self, order: MonomialOrder, grading: Sequence[int] | None = None) -> None:
        self.order = order
        self.n = len(order.ranking)
        self._key = order.dense_key
        self._cache: dict[Dense, tuple] = {}
        self.grading = tuple(grading) if grading is not None else None

    def key(self, a: Dense) -> tuple:
        k = self._cache.get(a)
        if k is None:
            k = self._key(a)
            self._cache[a] = k
        return k

    def degree(self, a: Dense) -> int:
        if self.grading is None:
            return sum(a)
        return sum(e * w for e, w in zip(a, self.grading))

    def orient(self, a: Dense, b: Dense) -> tuple[Dense, Dense] | None:
        if a == b:
            return None
        return (a, b) if self.key(a) > self.key(b) else (b, a)

    def encode(self, b: Binomial) -> tuple[Dense, Dense] | None:
        return self.orient(self.order.dense(b.lead), self.order.dense(b.trail))

    def decode(self, lt: tuple[Dense, Dense]) -> Binomial:
        return Binomial(self.order.sparse(lt[0]), self.order.sparse(lt[1]))


def _check_ambient(bset: BinomialSet, order: MonomialOrder) -> None:
    missing = bset.ambient - order.variables()
    if missing:
        raise UnknownVariable(f"order does not rank {sorted(map(str, missing))}")


def _make_reducer(ctx: _Context, elems: Iterable[tuple[Dense, Dense]]):
    red = Reducer(ctx.n)
    for lead, trail in elems:
        red.add(lead, trail)
    return red


def _encoded(bset: BinomialSet, ctx: _Context) -> list[tuple[Dense, Dense]]:
    out = []
    for b in bset:
        e = ctx.encode(b)
        if e is not None:
            out.append(e)
    return out


def compare_monomials(order: MonomialOrder, a: Monomial, b: Monomial) -> str:
    c = order.compare(a, b)
    return "greater" if c > 0 else "less" if c < 0 else "equal"


def _s_dense(f: tuple[Dense, Dense], g: tuple[Dense, Dense]) -> tuple[Dense, Dense]:
    lf, tf = f
    lg, tg = g
    m = _lcm(lf, lg)
    a = tuple(x - y + z for x, y, z in zip(m, lf, tf))
    b = tuple(x - y + z for x, y, z in zip(m, lg, tg))
    return a, b


def s_binomial(f: Binomial, g: Binomial, order: MonomialOrder) -> Binomial | None:
    """The S-binomial of ``f`` and ``g`` (oriented by ``order``), or None."""
    ctx = _Context(order)
    ef, eg = ctx.encode(f), ctx.encode(g)
    if ef is None or eg is None:
        return None
    a, b = _s_dense(ef, eg)
    o = ctx.orient(a, b)
    return None if o is None else ctx.decode(o)


def reduce_monomial(m: Monomial, bset: BinomialSet, order: MonomialOrder) -> Monomial:
    ctx = _Context(order)
    red = _make_reducer(ctx, _encoded(bset, ctx))
    return order.sparse(red.reduce(order.dense(m)))


def normal_form(b: Binomial, bset: BinomialSet, order: MonomialOrder) -> Binomial | None:
    """Fully rewrite both sides of ``b`` modulo ``bset``; None if they meet."""
    _check_ambient(bset, order)
    ctx = _Context(order)
    red = _make_reducer(ctx, _encoded(bset, ctx))
    a = red.reduce(order.dense(b.lead))
    c = red.reduce(order.dense(b.trail))
    o = ctx.orient(a, c)
    return None if o is None else ctx.decode(o)


class _Buchberger:
    def __init__(self, ctx: _Context) -> None:
        self.ctx = ctx
        self.leads: list[Dense] = []
        self.trails: list[Dense] = []
        self.red = Reducer(ctx.n)
        self.basis: list[int] = []  # indices still relevant for new pairs
        self.pairs: set[tuple[int, int]] = set()
        self.queue: list[tuple] = []  # lazy heap over self.pairs
        self.reductions = 0

    def insert(self, lead: Dense, trail: Dense) -> None:
        h = len(self.leads)
        self.leads.append(lead)
        self.trails.append(trail)
        self.red.add(lead, trail)
        partners, dropped, self.basis = self.red.gm_update(h, self.basis, list(self.pairs))
        self.pairs.difference_update(dropped)
        grading = self.ctx.grading
        for g in partners:
            self.pairs.add((g, h))
            heapq.heappush(self.queue, (self.red.lcm_degree(g, h, grading), g, h))

    def reduce_pair(self, a: Dense, b: Dense) -> tuple[Dense, Dense] | None:
        self.reductions += 1
        return self.ctx.orient(self.red.reduce(a), self.red.reduce(b))

    def run(self, inputs: list[tuple[Dense, Dense]]) -> None:
        ctx = self.ctx
        for lead, trail in sorted(inputs, key=lambda lt: (ctx.degree(lt[0]), ctx.key(lt[0]), ctx.key(lt[1]))):
            h = self.reduce_pair(lead, trail)
            if h is not None:
                self.insert(*h)
        while self.queue:
            _, i, j = heapq.heappop(self.queue)
            if (i, j) not in self.pairs:
                continue
            self.pairs.discard((i, j))
            self.reductions += 1
            h = self.ctx.orient(*self.red.reduce_spair(i, j))
            if h is not None:
                self.insert(*h)

    def reduced(self) -> list[tuple[Dense, Dense]]:
        ctx = self.ctx
        idx = sorted(
            range(len(self.leads)),
            key=lambda g: (ctx.key(self.leads[g]), ctx.key(self.trails[g])),
        )
        # leads are distinct; scanning in increasing order, a lead is
        # redundant exactly when an earlier kept lead divides it
        kept: list[int] = []
        red = Reducer(ctx.n)
        for g in idx:
            if red.find_divisor(self.leads[g]) < 0:
                kept.append(g)
                red.add(self.leads[g], self.trails[g])
        out = [(self.leads[g], red.reduce(self.trails[g])) for g in kept]
        out.sort(key=lambda lt: (ctx.key(lt[0]), ctx.key(lt[1])))
        return out


def buchberger(
    bset: BinomialSet,
    order: MonomialOrder,
    *,
    grading: Sequence[int] | None = None,
) -> BinomialSet:
    """Reduced Groebner basis of the ideal generated by ``bset``.

    ``grading`` (aligned with ``order.ranking``) only steers the pair
    selection; it does not change the result.
    """
    _check_ambient(bset, order)
    ctx = _Context(order, grading)
    engine = _Buchberger(ctx)
    engine.run(_encoded(bset, ctx))
    log.debug(
        "buchberger: %d inputs, %d elements, %d reductions",
        len(bset), len(engine.leads), engine.reductions,
    )
    return BinomialSet(bset.ambient, tuple(ctx.decode(lt) for lt in engine.reduced()))


def groebner_failure(bset: BinomialSet, order: MonomialOrder) -> tuple[Binomial, Binomial, Binomial] | None:
    """First S-pair of ``bset`` that does not reduce to zero, with its remainder."""
    _check_ambient(bset, order)
    ctx = _Context(order)
    elems = _encoded(bset, ctx)
    red = _make_reducer(ctx, elems)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if _coprime(elems[i][0], elems[j][0]):
                continue
            h = ctx.orient(*red.reduce_spair(i, j))
            if h is not None:
                return ctx.decode(elems[i]), ctx.decode(elems[j]), ctx.decode(h)
    return None


def is_groebner(bset: BinomialSet, order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-binomial reduces to zero."""
    return groebner_failure(bset, order) is None


def is_reduced_groebner(bset: BinomialSet, order: MonomialOrder) -> bool:
    if not is_groebner(bset, order):
        return False
    ctx = _Context(order)
    elems = _encoded(bset, ctx)
    red = _make_reducer(ctx, elems)
    for g, (lead, trail) in enumerate(elems):
        if red.find_divisor(lead, g) >= 0 or red.find_divisor(trail) >= 0:
            return False
    return True


def ideals_equal(a: BinomialSet, b: BinomialSet, order: MonomialOrder) -> bool:
    if a.ambient != b.ambient:
        raise AmbientMismatch("binomial sets live in different rings")
    return buchberger(a, order).elements == buchberger(b, order).elements


def contains(gb: BinomialSet, b: Binomial, order: MonomialOrder) -> bool:
    """Ideal membership of ``b``; ``gb`` must be a Groebner basis under ``order``."""
    return normal_form(b, gb, order) is None


def restrict_to_vars(bset: BinomialSet, keep: Iterable[VariableId]) -> BinomialSet:
    """Elements that only involve ``keep``; the ambient ring becomes ``keep``."""
    keep = frozenset(keep)
    return BinomialSet(keep, tuple(b for b in bset if b.variables() <= keep))
