"""Toric ideals of non-negative integer matrices, computed by elimination.

This is the independent reference every construction is checked against:
the kernel of ``x_col -> prod_r s_r^a[r, col]`` is obtained by running
Buchberger on ``{x_col - s^a_col}`` under an order that ranks all the
``s`` variables above the column variables, then keeping the elements free
of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .groebner import buchberger, restrict_to_vars
from .matroid import AnchoredMatroid, Matroid, MatroidError
from .polys import (
    BasisVar,
    BinomialSet,
    EliminationVar,
    Monomial,
    MonomialOrder,
    PairVar,
    VariableId,
)


class ColoopAnchor(MatroidError):
    pass


class DegenerateAnchor(MatroidError):
    pass


@dataclass(frozen=True)
class IntegerMatrix:
    """Columns labelled by variables; rows labelled by ground elements etc."""

    row_labels: tuple[Hashable, ...]
    columns: tuple[tuple[VariableId, tuple[int, ...]], ...]
    row_ops: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        r = len(self.row_labels)
        seen = set()
        for v, col in self.columns:
            if len(col) != r:
                raise ValueError(f"column {v} has {len(col)} entries, expected {r}")
            if any(a < 0 for a in col):
                raise ValueError(f"column {v} has a negative entry")
            if v in seen:
                raise ValueError(f"column {v} appears twice")
            seen.add(v)

    @property
    def variables(self) -> tuple[VariableId, ...]:
        return tuple(v for v, _ in self.columns)

    def column(self, v: VariableId) -> tuple[int, ...]:
        for w, col in self.columns:
            if w == v:
                return col
        raise KeyError(v)

    def image(self, m: Monomial) -> tuple[int, ...]:
        """Exponent vector of the image of ``m`` under the monomial map."""
        cols = dict(self.columns)
        out = [0] * len(self.row_labels)
        for v, e in m.items():
            for r, a in enumerate(cols[v]):
                out[r] += e * a
        return tuple(out)

    def in_kernel(self, lead: Monomial, trail: Monomial) -> bool:
        return self.image(lead) == self.image(trail)

    def rename(self, mapping) -> "IntegerMatrix":
        return IntegerMatrix(
            self.row_labels,
            tuple((mapping[v], col) for v, col in self.columns),
            self.row_ops,
        )

    def drop_rows(self, labels) -> "IntegerMatrix":
        keep = [i for i, r in enumerate(self.row_labels) if r not in set(labels)]
        return IntegerMatrix(
            tuple(self.row_labels[i] for i in keep),
            tuple((v, tuple(col[i] for i in keep)) for v, col in self.columns),
        )


def _indicator(basis: Sequence[int], d: int) -> tuple[int, ...]:
    s = set(basis)
    return tuple(1 if e in s else 0 for e in range(1, d + 1))


def bases_matrix(m: Matroid) -> IntegerMatrix:
    """The 0/1 matrix whose j-th column is the indicator of the j-th basis.

    A rank-0 matroid gets an extra all-ones row so that its single column is
    not zero (its toric ideal is then 0, as for any one-basis matroid).
    """
    d = m.ground_size
    cols = tuple((BasisVar(1, j), _indicator(b, d)) for j, b in enumerate(m.bases, start=1))
    rows: tuple = tuple(range(1, d + 1))
    if m.rank == 0:
        rows += ("h",)
        cols = tuple((v, c + (1,)) for v, c in cols)
    return IntegerMatrix(rows, cols)


def series_ext_matrix(am: AnchoredMatroid) -> IntegerMatrix:
    """Bases matrix in anchored numbering, plus a copy of the anchor-free
    columns, separated by two auxiliary rows ``w1``/``w2``."""
    if am.gamma == 0:
        raise ColoopAnchor(f"element {am.anchor} is a coloop; the ideal is unchanged")
    d = am.matroid.ground_size
    cols = []
    for j in range(1, am.n + 1):
        cols.append((BasisVar(1, j), _indicator(am.basis(j), d) + (1, 0)))
    for j in range(1, am.gamma + 1):
        cols.append((BasisVar(2, j), _indicator(am.basis(j), d) + (0, 1)))
    return IntegerMatrix(tuple(range(1, d + 1)) + ("w1", "w2"), tuple(cols))


def _check_connectable(am: AnchoredMatroid, which: str) -> None:
    if am.gamma == 0 or am.gamma == am.n:
        kind = "coloop" if am.gamma == 0 else "loop"
        raise DegenerateAnchor(f"anchor {am.anchor} of {which} is a {kind}")


def connection_matrix(am1: AnchoredMatroid, am2: AnchoredMatroid) -> IntegerMatrix:
    """Columns ``b_j`` stacked over ``d_k`` for the kept pairs of bases.

    The shared element appears as two rows, ``(1, c1)`` and ``(2, c2)``;
    replacing them by their sum gives the bases matrix of the series
    connection, and the kernel is the same either way.
    """
    _check_connectable(am1, "M1")
    _check_connectable(am2, "M2")
    d1, d2 = am1.matroid.ground_size, am2.matroid.ground_size
    cols = []
    for j in range(1, am1.n + 1):
        for k in range(1, am2.gamma + 1):
            cols.append(
                (PairVar(1, j, k), _indicator(am1.basis(j), d1) + _indicator(am2.basis(k), d2))
            )
    for j in range(1, am1.gamma + 1):
        for k in range(am2.gamma + 1, am2.n + 1):
            cols.append(
                (PairVar(2, j, k), _indicator(am1.basis(j), d1) + _indicator(am2.basis(k), d2))
            )
    rows = tuple((1, e) for e in range(1, d1 + 1)) + tuple((2, e) for e in range(1, d2 + 1))
    op = f"row (1,{am1.anchor}) + row (2,{am2.anchor}) -> shared element"
    return IntegerMatrix(rows, tuple(cols), (op,))


def connection_matrix_full(am1: AnchoredMatroid, am2: AnchoredMatroid) -> IntegerMatrix:
    """All pairs ``z^1_{jk}`` (k <= gamma2) and ``z^2_{jk}`` (j <= gamma1),
    with the auxiliary rows ``w1``/``w2`` kept."""
    _check_connectable(am1, "M1")
    _check_connectable(am2, "M2")
    d1, d2 = am1.matroid.ground_size, am2.matroid.ground_size
    cols = []
    for j in range(1, am1.n + 1):
        for k in range(1, am2.gamma + 1):
            cols.append(
                (
                    PairVar(1, j, k),
                    _indicator(am1.basis(j), d1) + _indicator(am2.basis(k), d2) + (1, 0),
                )
            )
    for j in range(1, am1.gamma + 1):
        for k in range(1, am2.n + 1):
            cols.append(
                (
                    PairVar(2, j, k),
                    _indicator(am1.basis(j), d1) + _indicator(am2.basis(k), d2) + (0, 1),
                )
            )
    rows = (
        tuple((1, e) for e in range(1, d1 + 1))
        + tuple((2, e) for e in range(1, d2 + 1))
        + ("w1", "w2")
    )
    return IntegerMatrix(rows, tuple(cols))


def default_order(variables) -> MonomialOrder:
    return MonomialOrder.degrevlex(sorted(variables))


def toric_gb(matrix: IntegerMatrix, order: MonomialOrder | None = None) -> BinomialSet:
    """Reduced Groebner basis of the toric ideal of ``matrix`` under ``order``.

    ``order`` must rank exactly the column variables; the default is
    degrevlex over their natural order.
    """
    cols = matrix.variables
    if order is None:
        order = default_order(cols)
    if set(order.ranking) != set(cols):
        raise ValueError("the order must rank exactly the column variables")
    svars = tuple(EliminationVar(r) for r in range(1, len(matrix.row_labels) + 1))
    # the column block keeps the caller's stages; the s block goes first
    full = MonomialOrder(
        svars + order.ranking,
        order.tie_break,
        order.weights,
        frozenset(svars),
    )
    pairs = []
    for v, col in matrix.columns:
        pairs.append(
            (Monomial.of(v), Monomial((s, a) for s, a in zip(svars, col)))
        )
    gens = BinomialSet.build(frozenset(svars) | frozenset(cols), pairs)
    # grade s by 1 and each column by its sum, which makes the generators
    # homogeneous whenever the column sums are constant
    grading = [1] * len(svars) + [max(1, sum(col)) for col in (matrix.column(v) for v in order.ranking)]
    gb = buchberger(gens, full, grading=grading)
    return restrict_to_vars(gb, cols).sorted(order)
