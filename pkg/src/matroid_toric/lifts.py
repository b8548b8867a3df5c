"""Lifting generating sets and Groebner bases of toric ideals of matroids
through series/parallel extensions, series/parallel connections, direct
sums and 2-sums.

Every construction returns a :class:`Construction`: the new matroid, the
lifted binomials over structured variables, the bijection from those
variables to bases of the new matroid, and the monomial order under which
the binomials are claimed to be a Groebner basis.  :func:`verify` checks the
claims against the elimination oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal, Mapping, Sequence

from .groebner import buchberger, groebner_failure, restrict_to_vars
from .matroid import (
    AnchoredMatroid,
    Matroid,
    MatroidError,
    anchor,
    compaction_map,
    contract,
    delete,
    dual,
    is_coloop,
    is_loop,
)
from .polys import BasisVar, Binomial, BinomialSet, Monomial, MonomialOrder, PairVar, VariableId
from .toric import bases_matrix, default_order, toric_gb


class UnbalancedSplit(ValueError):
    pass


class BlockMismatch(ValueError):
    pass


class DegenerateBasepoint(MatroidError):
    pass


Basis = frozenset


# bookkeeping ----------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    matroid: Matroid
    generators: BinomialSet
    basis_of: Mapping[VariableId, frozenset[int]]
    order: MonomialOrder

    def __post_init__(self) -> None:
        check_bijection(self.basis_of, self.matroid)

    def renaming(self) -> dict[VariableId, BasisVar]:
        idx = self.matroid.basis_index
        return {v: BasisVar(1, idx[b]) for v, b in self.basis_of.items()}

    def canonical(self) -> tuple[Matroid, BinomialSet, MonomialOrder]:
        """Rename variables to ``x1_j`` with ``j`` the canonical basis index."""
        ren = self.renaming()
        return self.matroid, self.generators.rename(ren), self.order.renamed(ren)


def check_bijection(basis_of: Mapping[VariableId, frozenset[int]], m: Matroid) -> None:
    images = list(basis_of.values())
    if len(set(images)) != len(images):
        raise AssertionError("two variables are sent to the same basis")
    if set(images) != set(m.basis_index):
        raise AssertionError("variables do not correspond to the bases of the matroid")


def canonical_basis_of(m: Matroid) -> dict[VariableId, frozenset[int]]:
    return {BasisVar(1, j): frozenset(b) for j, b in enumerate(m.bases, start=1)}


def anchored_renaming(am: AnchoredMatroid) -> dict[BasisVar, BasisVar]:
    """Canonical basis variable -> anchored-numbering variable."""
    return {BasisVar(1, c): BasisVar(1, j) for j, c in enumerate(am.order, start=1)}


def verify(c: Construction) -> dict:
    """Compare the construction with the oracle.

    ``generates``: the binomials generate the toric ideal of the new matroid.
    ``groebner``: they also pass Buchberger's criterion under ``c.order``.
    """
    m, gens, order = c.canonical()
    oracle = toric_gb(bases_matrix(m), order)
    generates = buchberger(gens, order).elements == oracle.elements
    failure = groebner_failure(gens, order)
    return {
        "generates": generates,
        "groebner": generates and failure is None,
        "failure": None if failure is None else [str(b) for b in failure],
        "order": c.order.describe(),
    }


# series extension -----------------------------------------------------------


@dataclass(frozen=True)
class SplitBinomial:
    binomial: Binomial
    low_lead: tuple[int, ...]
    low_trail: tuple[int, ...]
    high_lead: tuple[int, ...]
    high_trail: tuple[int, ...]

    @property
    def u(self) -> int:
        return len(self.low_lead)

    @property
    def v(self) -> int:
        return len(self.high_lead)


def _indices(m: Monomial) -> list[int]:
    out = []
    for var in m.expand():
        if not isinstance(var, BasisVar) or var.block != 1:
            raise BlockMismatch(f"{var} is not a block-1 basis variable")
        out.append(var.index)
    return sorted(out)


def classify_split(f: Binomial, gamma: int, pairing: str = "canonical") -> SplitBinomial:
    """Split each side of ``f`` into anchor-free (``<= gamma``) and other
    indices.  Low indices are paired by position; ``pairing="reversed"``
    pairs the lead's l-th smallest with the trail's l-th largest."""
    lead, trail = _indices(f.lead), _indices(f.trail)
    ll = tuple(j for j in lead if j <= gamma)
    lt = tuple(j for j in trail if j <= gamma)
    hl = tuple(j for j in lead if j > gamma)
    ht = tuple(j for j in trail if j > gamma)
    if len(ll) != len(lt) or len(hl) != len(ht):
        raise UnbalancedSplit(
            f"{f}: {len(ll)}/{len(hl)} anchor-free/other factors against "
            f"{len(lt)}/{len(ht)}; not in the toric ideal"
        )
    if pairing == "reversed":
        lt = lt[::-1]
    elif pairing != "canonical":
        raise ValueError(f"unknown pairing {pairing!r}")
    return SplitBinomial(f, ll, lt, hl, ht)


def series_ext_variables(gamma: int, n: int) -> list[BasisVar]:
    return [BasisVar(1, j) for j in range(1, n + 1)] + [BasisVar(2, j) for j in range(1, gamma + 1)]


def swap_quadrics(gamma: int) -> list[Binomial]:
    return [
        Binomial.of([BasisVar(1, j2), BasisVar(2, j1)], [BasisVar(1, j1), BasisVar(2, j2)])
        for j1, j2 in itertools.combinations(range(1, gamma + 1), 2)
    ]


def lift_series_extension(
    F: BinomialSet, gamma: int, n: int, pairing: str = "canonical"
) -> BinomialSet:
    """All ``f^I`` for ``I`` in ``{1,2}^u_f`` plus the swap quadrics.

    ``F`` is over ``x1_j`` in anchored numbering (the first ``gamma`` bases
    avoid the anchor).
    """
    out: list[Binomial] = []
    for f in F:
        s = classify_split(f, gamma, pairing)
        for I in itertools.product((1, 2), repeat=s.u):
            lead = [BasisVar(i, j) for i, j in zip(I, s.low_lead)]
            trail = [BasisVar(i, j) for i, j in zip(I, s.low_trail)]
            lead += [BasisVar(1, k) for k in s.high_lead]
            trail += [BasisVar(1, k) for k in s.high_trail]
            a, b = Monomial.of(*lead), Monomial.of(*trail)
            if a != b:
                out.append(Binomial(a, b))
    out += swap_quadrics(gamma)
    return BinomialSet(frozenset(series_ext_variables(gamma, n)), tuple(out))


def series_ext_order(base: MonomialOrder, gamma: int, n: int) -> MonomialOrder:
    """Order on the series-extension ring built from an order on ``x1_*``.

    Monomials are compared first by their images under ``x2_j -> x1_j`` in
    ``base`` (for a weight order this is the duplicated weight), then
    lexicographically with ``x2_1 > ... > x2_gamma > x1_1 > ... > x1_n``.
    """
    proj = {BasisVar(1, j): BasisVar(1, j) for j in range(1, n + 1)}
    proj.update({BasisVar(2, j): BasisVar(1, j) for j in range(1, gamma + 1)})
    ranking = [BasisVar(2, j) for j in range(1, gamma + 1)] + [BasisVar(1, j) for j in range(1, n + 1)]
    order = MonomialOrder(tuple(ranking), "lex", tuple(tuple(r.items()) for r in base.pulled_back(proj)))
    for q in swap_quadrics(gamma):
        assert order.compare(q.lead, q.trail) > 0, f"swap quadric {q} is not oriented"
    return order


def series_extension(am: AnchoredMatroid) -> tuple[Matroid, dict[VariableId, frozenset[int]]]:
    """``M +_c (d+1)`` and the map from ``x1_j``/``x2_j`` to its bases."""
    m, c = am.matroid, am.anchor
    new = m.ground_size + 1
    basis_of: dict[VariableId, frozenset[int]] = {}
    for j in range(1, am.n + 1):
        basis_of[BasisVar(1, j)] = frozenset(am.basis(j)) | {new}
    for j in range(1, am.gamma + 1):
        basis_of[BasisVar(2, j)] = frozenset(am.basis(j)) | {c}
    ext = Matroid.from_bases(new, basis_of.values())
    check_bijection(basis_of, ext)
    return ext, basis_of


def series_extension_generators(
    am: AnchoredMatroid,
    F: BinomialSet,
    order: MonomialOrder,
    pairing: str = "canonical",
) -> Construction:
    """Lift ``F`` (over canonical ``x1_j`` of ``am.matroid``, a generating set
    or Groebner basis under ``order``) to the series extension at the anchor.

    At a coloop the ideal does not change; only the variable map does.
    """
    ren = anchored_renaming(am)
    Fa = F.rename(ren)
    base = order.renamed(ren)
    ext, basis_of = series_extension(am)
    if am.gamma == 0:
        return Construction(ext, Fa, basis_of, base)
    lifted = lift_series_extension(Fa, am.gamma, am.n, pairing)
    return Construction(ext, lifted, basis_of, series_ext_order(base, am.gamma, am.n))


def dual_renaming(m: Matroid) -> dict[BasisVar, BasisVar]:
    """``x1_j`` of ``m`` -> ``x1_j'`` of the dual, along ``B -> E - B``."""
    E = frozenset(m.elements)
    idx = dual(m).basis_index
    return {BasisVar(1, j): BasisVar(1, idx[E - frozenset(b)]) for j, b in enumerate(m.bases, start=1)}


def dual_transfer(bset: BinomialSet, m: Matroid) -> BinomialSet:
    """The same binomials read as elements of the dual's toric ideal."""
    return bset.rename(dual_renaming(m))


def complement_map(basis_of: Mapping[VariableId, frozenset[int]], d: int) -> dict[VariableId, frozenset[int]]:
    E = frozenset(range(1, d + 1))
    return {v: E - b for v, b in basis_of.items()}


def parallel_extension(am: AnchoredMatroid) -> tuple[Matroid, dict[VariableId, frozenset[int]]]:
    """``(M* +_c (d+1))*`` with variables mapped to complements."""
    star = anchor(dual(am.matroid), am.anchor)
    ext, basis_of = series_extension(star)
    par = dual(ext)
    cmap = complement_map(basis_of, ext.ground_size)
    check_bijection(cmap, par)
    return par, cmap


def parallel_extension_generators(
    am: AnchoredMatroid, F: BinomialSet, order: MonomialOrder, pairing: str = "canonical"
) -> Construction:
    m = am.matroid
    ren = dual_renaming(m)
    star = anchor(dual(m), am.anchor)
    c = series_extension_generators(star, F.rename(ren), order.renamed(ren), pairing)
    par = dual(c.matroid)
    return Construction(par, c.generators, complement_map(c.basis_of, c.matroid.ground_size), c.order)


# toric fibre product lifts ---------------------------------------------------


def _paired_slots(m1: Monomial, m2: Monomial, nblocks: int) -> list[tuple[int, int, int]]:
    """Pair the variables of the two sides block by block (ascending).

    Returns ``(block, index_on_side1, index_on_side2)`` triples.
    """
    def by_block(m: Monomial) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {i: [] for i in range(1, nblocks + 1)}
        for v in m.expand():
            if not isinstance(v, BasisVar) or v.block not in out:
                raise BlockMismatch(f"{v} is not a variable of blocks 1..{nblocks}")
            out[v.block].append(v.index)
        return out

    a, b = by_block(m1), by_block(m2)
    slots = []
    for i in range(1, nblocks + 1):
        if len(a[i]) != len(b[i]):
            raise BlockMismatch(f"{m1} and {m2} differ in block-{i} degree")
        slots += [(i, p, q) for p, q in zip(sorted(a[i]), sorted(b[i]))]
    return slots


def fiber_lift(
    F1: BinomialSet,
    F2: BinomialSet,
    alpha: Sequence[int],
    beta: Sequence[int],
    allowed_j: Sequence[Iterable[int]] | None = None,
    allowed_k: Sequence[Iterable[int]] | None = None,
) -> BinomialSet:
    """Lift(F1) + Lift(F2) + Quad for a toric fibre product with
    ``len(alpha)`` linearly independent degree blocks.

    ``F1`` is over ``x{i}_{j}`` (``j <= alpha[i-1]``), ``F2`` over ``x{i}_{k}``
    (``k <= beta[i-1]``); the product lives on ``z{i}_{j}_{k}``.  Restricting
    ``allowed_j``/``allowed_k`` per block keeps only the lifts and quadrics
    inside that subring.
    """
    r = len(alpha)
    if len(beta) != r:
        raise BlockMismatch("alpha and beta have different lengths")
    js = [tuple(range(1, a + 1)) for a in alpha] if allowed_j is None else [tuple(s) for s in allowed_j]
    ks = [tuple(range(1, b + 1)) for b in beta] if allowed_k is None else [tuple(s) for s in allowed_k]
    jset = [set(s) for s in js]
    kset = [set(s) for s in ks]
    ambient = frozenset(
        PairVar(i + 1, j, k) for i in range(r) for j in js[i] for k in ks[i]
    )
    out: list[Binomial] = []
    for f in F1:
        slots = _paired_slots(f.lead, f.trail, r)
        if any(p not in jset[i - 1] or q not in jset[i - 1] for i, p, q in slots):
            continue
        for kk in itertools.product(*(ks[i - 1] for i, _, _ in slots)):
            lead = Monomial.of(*(PairVar(i, p, k) for (i, p, _), k in zip(slots, kk)))
            trail = Monomial.of(*(PairVar(i, q, k) for (i, _, q), k in zip(slots, kk)))
            if lead != trail:
                out.append(Binomial(lead, trail))
    for g in F2:
        slots = _paired_slots(g.lead, g.trail, r)
        if any(p not in kset[i - 1] or q not in kset[i - 1] for i, p, q in slots):
            continue
        for jj in itertools.product(*(js[i - 1] for i, _, _ in slots)):
            lead = Monomial.of(*(PairVar(i, j, p) for (i, p, _), j in zip(slots, jj)))
            trail = Monomial.of(*(PairVar(i, j, q) for (i, _, q), j in zip(slots, jj)))
            if lead != trail:
                out.append(Binomial(lead, trail))
    for i in range(r):
        for j1, j2 in itertools.combinations(js[i], 2):
            for k1, k2 in itertools.combinations(ks[i], 2):
                out.append(
                    Binomial.of(
                        [PairVar(i + 1, j1, k2), PairVar(i + 1, j2, k1)],
                        [PairVar(i + 1, j1, k1), PairVar(i + 1, j2, k2)],
                    )
                )
    return BinomialSet(ambient, tuple(out))


def fiber_order(
    order1: MonomialOrder,
    order2: MonomialOrder,
    alpha: Sequence[int],
    beta: Sequence[int],
) -> MonomialOrder:
    """Compare by the image in the first factor, then in the second, then
    lexicographically with ``z{i}_{j}_{k}`` ranked by (i, j ascending, k
    descending), which makes every Quad element's first term initial."""
    r = len(alpha)
    zs = [PairVar(i + 1, j, k) for i in range(r) for j in range(1, alpha[i] + 1) for k in range(1, beta[i] + 1)]
    to_x = {z: BasisVar(z.block, z.j) for z in zs}
    to_y = {z: BasisVar(z.block, z.k) for z in zs}
    rows = order1.pulled_back(to_x) + order2.pulled_back(to_y)
    ranking = sorted(zs, key=lambda z: (z.block, z.j, -z.k))
    return MonomialOrder(tuple(ranking), "lex", tuple(tuple(r.items()) for r in rows))


@dataclass(frozen=True)
class ConnectionIndex:
    n1: int
    gamma1: int
    n2: int
    gamma2: int

    @property
    def alpha(self) -> tuple[int, int]:
        return (self.n1, self.gamma1)

    @property
    def beta(self) -> tuple[int, int]:
        return (self.gamma2, self.n2)

    @property
    def kept_k(self) -> tuple[range, range]:
        return (range(1, self.gamma2 + 1), range(self.gamma2 + 1, self.n2 + 1))

    @property
    def kept(self) -> frozenset[PairVar]:
        return frozenset(
            [PairVar(1, j, k) for j in range(1, self.n1 + 1) for k in range(1, self.gamma2 + 1)]
            + [PairVar(2, j, k) for j in range(1, self.gamma1 + 1) for k in range(self.gamma2 + 1, self.n2 + 1)]
        )

    @classmethod
    def of(cls, am1: AnchoredMatroid, am2: AnchoredMatroid) -> "ConnectionIndex":
        return cls(am1.n, am1.gamma, am2.n, am2.gamma)


def lift_connection(
    F1t: BinomialSet,
    F2t: BinomialSet,
    idx: ConnectionIndex,
    mode: Literal["N", "Ntilde"] = "N",
) -> BinomialSet:
    """Lift(F1t) + Lift(F2t) + Quad on ``z{i}_{j}_{k}``.

    ``F1t`` is over ``x1_j`` (j <= n1) and ``x2_j`` (j <= gamma1); ``F2t``
    over ``x1_k`` (k <= gamma2) and ``x2_k`` (k <= n2).  Mode ``N`` keeps
    only the part inside the kept variables.
    """
    if mode == "Ntilde":
        return fiber_lift(F1t, F2t, idx.alpha, idx.beta)
    if mode == "N":
        return fiber_lift(F1t, F2t, idx.alpha, idx.beta, allowed_k=idx.kept_k)
    raise ValueError(f"unknown mode {mode!r}")


def swap_blocks(bset_vars: Iterable[VariableId]) -> dict[VariableId, VariableId]:
    return {v: BasisVar(3 - v.block, v.index) for v in bset_vars}


# connections ----------------------------------------------------------------


def _second_labels(d1: int, d2: int, c1: int, c2: int) -> dict[int, int]:
    """Relabel the ground set of M2 into the union: c2 -> c1, others after d1."""
    out = {c2: c1}
    nxt = d1 + 1
    for e in range(1, d2 + 1):
        if e != c2:
            out[e] = nxt
            nxt += 1
    return out


def _lab(b: Iterable[int], labels: Mapping[int, int]) -> frozenset[int]:
    return frozenset(labels[e] for e in b)


def _direct_sum_construction(
    m1: Matroid,
    labels1: Mapping[int, int],
    F1: BinomialSet,
    o1: MonomialOrder,
    m2: Matroid,
    labels2: Mapping[int, int],
    F2: BinomialSet,
    o2: MonomialOrder,
    d: int,
) -> Construction:
    """Direct sum of two matroids whose ground sets are relabeled into
    ``{1..d}``; generators via the one-block fibre product (Segre) lift."""
    n1, n2 = m1.n_bases, m2.n_bases
    basis_of = {
        PairVar(1, j, k): _lab(b, labels1) | _lab(e, labels2)
        for j, b in enumerate(m1.bases, start=1)
        for k, e in enumerate(m2.bases, start=1)
    }
    result = Matroid.from_bases(d, basis_of.values())
    gens = fiber_lift(F1, F2, (n1,), (n2,))
    order = fiber_order(o1, o2, (n1,), (n2,))
    return Construction(result, gens, basis_of, order)


def direct_sum_generators(
    m1: Matroid, F1: BinomialSet, o1: MonomialOrder, m2: Matroid, F2: BinomialSet, o2: MonomialOrder
) -> Construction:
    d1 = m1.ground_size
    return _direct_sum_construction(
        m1, {e: e for e in m1.elements}, F1, o1,
        m2, {e: e + d1 for e in m2.elements}, F2, o2,
        d1 + m2.ground_size,
    )


def _face_restriction(m: Matroid, F: BinomialSet, order: MonomialOrder, c: int, keep_with_c: bool):
    """Generators of the bases with (or without) ``c``, renamed canonically.

    Returns ``(bases, F', order')`` where ``bases`` lists the kept bases
    (original labels) in the order their new variables ``x1_1..`` use.
    """
    kept = [(j, b) for j, b in enumerate(m.bases, start=1) if (c in b) == keep_with_c]
    ren = {BasisVar(1, j): BasisVar(1, t) for t, (j, _) in enumerate(kept, start=1)}
    sub = restrict_to_vars(F, ren.keys()).rename(ren)
    return [b for _, b in kept], sub, order.restricted(ren.keys()).renamed(ren)


def _degenerate_series(am1, am2, F1, o1, F2, o2) -> Construction:
    """Series connection when the basepoint is a loop or coloop of a factor.

    It is then a direct sum of one factor with a deletion or contraction of
    the other.  A deletion at a non-coloop keeps the bases avoiding ``c``,
    a face of the base polytope, so the restricted generators still form a
    Groebner basis when the input did (a mere generating set may not
    restrict to one).
    """
    m1, m2 = am1.matroid, am2.matroid
    c1, c2 = am1.anchor, am2.anchor
    d1, d2 = m1.ground_size, m2.ground_size
    lab1 = {e: e for e in m1.elements}
    lab2 = _second_labels(d1, d2, c1, c2)
    A = (list(m1.bases), F1, o1)
    B = (list(m2.bases), F2, o2)
    if is_loop(m1, c1) or is_loop(m2, c2):
        pass  # every pair B + D has at most one copy of c
    elif is_coloop(m1, c1):
        if not is_coloop(m2, c2):
            B = _face_restriction(m2, F2, o2, c2, False)
    elif is_coloop(m2, c2):
        A = _face_restriction(m1, F1, o1, c1, False)
    else:
        raise DegenerateBasepoint("the basepoint is neither a loop nor a coloop of a factor")
    bases1, G1, p1 = A
    bases2, G2, p2 = B
    f1 = Matroid.from_bases(d1, bases1)
    f2 = Matroid.from_bases(d2, bases2)
    _require_canonical(f1, bases1)
    _require_canonical(f2, bases2)
    return _direct_sum_construction(f1, lab1, G1, p1, f2, lab2, G2, p2, d1 + d2 - 1)


def _require_canonical(m: Matroid, bases: Sequence[Sequence[int]]) -> None:
    if [tuple(b) for b in bases] != list(m.bases):
        raise AssertionError("basis listing is not canonical")


def series_connection(am1: AnchoredMatroid, am2: AnchoredMatroid) -> tuple[Matroid, dict[VariableId, frozenset[int]]]:
    """Series connection at the shared basepoint (non-degenerate case).

    ``M2``'s anchor is identified with ``M1``'s; its other elements become
    ``d1+1, d1+2, ...`` in order.
    """
    m1, m2 = am1.matroid, am2.matroid
    if am1.gamma in (0, am1.n) or am2.gamma in (0, am2.n):
        return series_connection_degenerate(am1, am2)
    lab2 = _second_labels(m1.ground_size, m2.ground_size, am1.anchor, am2.anchor)
    basis_of: dict[VariableId, frozenset[int]] = {}
    for j in range(1, am1.n + 1):
        for k in range(1, am2.gamma + 1):
            basis_of[PairVar(1, j, k)] = frozenset(am1.basis(j)) | _lab(am2.basis(k), lab2)
    for j in range(1, am1.gamma + 1):
        for k in range(am2.gamma + 1, am2.n + 1):
            basis_of[PairVar(2, j, k)] = frozenset(am1.basis(j)) | _lab(am2.basis(k), lab2)
    S = Matroid.from_bases(m1.ground_size + m2.ground_size - 1, basis_of.values())
    check_bijection(basis_of, S)
    return S, basis_of


def series_connection_degenerate(am1, am2) -> tuple[Matroid, dict[VariableId, frozenset[int]]]:
    m1, m2 = am1.matroid, am2.matroid
    c = _degenerate_series(
        am1, am2,
        BinomialSet(frozenset(BasisVar(1, j) for j in range(1, m1.n_bases + 1))),
        default_order(BasisVar(1, j) for j in range(1, m1.n_bases + 1)),
        BinomialSet(frozenset(BasisVar(1, j) for j in range(1, m2.n_bases + 1))),
        default_order(BasisVar(1, j) for j in range(1, m2.n_bases + 1)),
    )
    return c.matroid, dict(c.basis_of)


def series_bases_direct(m1: Matroid, c1: int, m2: Matroid, c2: int) -> Matroid:
    """Bases ``B + D`` with ``B`` and ``D`` not both containing the basepoint."""
    lab2 = _second_labels(m1.ground_size, m2.ground_size, c1, c2)
    bases = {
        frozenset(b) | _lab(e, lab2)
        for b in m1.bases
        for e in m2.bases
        if not (c1 in b and c2 in e)
    }
    return Matroid.from_bases(m1.ground_size + m2.ground_size - 1, bases)


def series_direct(am1: AnchoredMatroid, am2: AnchoredMatroid) -> Matroid:
    """Series connection from its definition, including degenerate basepoints."""
    m1, m2 = am1.matroid, am2.matroid
    c1, c2 = am1.anchor, am2.anchor
    if is_coloop(m1, c1) and is_coloop(m2, c2):
        lab2 = _second_labels(m1.ground_size, m2.ground_size, c1, c2)
        return Matroid.from_bases(
            m1.ground_size + m2.ground_size - 1,
            {frozenset(b) | _lab(e, lab2) for b in m1.bases for e in m2.bases},
        )
    return series_bases_direct(m1, c1, m2, c2)


def parallel_bases_direct(m1: Matroid, c1: int, m2: Matroid, c2: int) -> Matroid:
    """Bases ``B + D`` when both contain the basepoint, and ``(B + D) - c``
    when exactly one does."""
    lab2 = _second_labels(m1.ground_size, m2.ground_size, c1, c2)
    bases = set()
    for b in m1.bases:
        for e in m2.bases:
            u = frozenset(b) | _lab(e, lab2)
            inb, ine = c1 in b, c2 in e
            if inb and ine:
                bases.add(u)
            elif inb != ine:
                bases.add(u - {c1})
    return Matroid.from_bases(m1.ground_size + m2.ground_size - 1, bases)


def series_connection_generators(
    am1: AnchoredMatroid,
    am2: AnchoredMatroid,
    F1: BinomialSet,
    F2: BinomialSet,
    order1: MonomialOrder,
    order2: MonomialOrder,
) -> Construction:
    """Generators (and the Groebner-basis candidate order) for the series
    connection, from generating sets of the two factors' toric ideals."""
    if am1.gamma in (0, am1.n) or am2.gamma in (0, am2.n):
        return _degenerate_series(am1, am2, F1, order1, F2, order2)
    c1 = series_extension_generators(am1, F1, order1)
    c2 = series_extension_generators(am2, F2, order2)
    sw = swap_blocks(c2.generators.ambient)
    F2t = c2.generators.rename(sw)
    o2t = c2.order.renamed(sw)
    idx = ConnectionIndex.of(am1, am2)
    N = lift_connection(c1.generators, F2t, idx, "N")
    order = fiber_order(c1.order, o2t, idx.alpha, idx.beta).restricted(idx.kept)
    S, basis_of = series_connection(am1, am2)
    return Construction(S, N, basis_of, order)


def connection_tilde(
    am1: AnchoredMatroid,
    am2: AnchoredMatroid,
    F1: BinomialSet,
    F2: BinomialSet,
    order1: MonomialOrder,
    order2: MonomialOrder,
) -> tuple[BinomialSet, MonomialOrder, ConnectionIndex]:
    """The full lift on all ``z`` variables, before restricting."""
    c1 = series_extension_generators(am1, F1, order1)
    c2 = series_extension_generators(am2, F2, order2)
    sw = swap_blocks(c2.generators.ambient)
    idx = ConnectionIndex.of(am1, am2)
    Nt = lift_connection(c1.generators, c2.generators.rename(sw), idx, "Ntilde")
    order = fiber_order(c1.order, c2.order.renamed(sw), idx.alpha, idx.beta)
    return Nt, order, idx


def parallel_connection(am1: AnchoredMatroid, am2: AnchoredMatroid) -> tuple[Matroid, dict[VariableId, frozenset[int]]]:
    """``P(M1, M2) = S(M1*, M2*)*``; checked against the direct definition."""
    m1, m2 = am1.matroid, am2.matroid
    s1, s2 = anchor(dual(m1), am1.anchor), anchor(dual(m2), am2.anchor)
    S, basis_of = series_connection(s1, s2)
    P = dual(S)
    cmap = complement_map(basis_of, S.ground_size)
    direct = parallel_direct(am1, am2)
    if direct != P:
        raise AssertionError("dual route and direct definition of P disagree")
    check_bijection(cmap, P)
    return P, cmap


def parallel_direct(am1: AnchoredMatroid, am2: AnchoredMatroid) -> Matroid:
    m1, m2 = am1.matroid, am2.matroid
    c1, c2 = am1.anchor, am2.anchor
    d1, d2 = m1.ground_size, m2.ground_size
    lab2 = _second_labels(d1, d2, c1, c2)
    d = d1 + d2 - 1

    def dsum(bases1, bases2):
        return Matroid.from_bases(d, {frozenset(b) | _lab(e, lab2) for b in bases1 for e in bases2})

    if is_loop(m1, c1):
        # M1 + (M2 / c)
        return dsum(m1.bases, _contract_bases(m2, c2))
    if is_coloop(m1, c1):
        # (M1 \ c) + M2
        return dsum([tuple(e for e in b if e != c1) for b in m1.bases], m2.bases)
    if is_loop(m2, c2):
        return dsum(_contract_bases(m1, c1), m2.bases)
    if is_coloop(m2, c2):
        return dsum(m1.bases, [tuple(e for e in b if e != c2) for b in m2.bases])
    return parallel_bases_direct(m1, c1, m2, c2)


def _contract_bases(m: Matroid, c: int) -> list[tuple[int, ...]]:
    """Bases of ``m / c`` in original labels (``c`` itself omitted)."""
    if is_loop(m, c):
        return list(m.bases)
    return [tuple(e for e in b if e != c) for b in m.bases if c in b]


def parallel_connection_generators(
    am1: AnchoredMatroid,
    am2: AnchoredMatroid,
    F1: BinomialSet,
    F2: BinomialSet,
    order1: MonomialOrder,
    order2: MonomialOrder,
) -> Construction:
    m1, m2 = am1.matroid, am2.matroid
    r1, r2 = dual_renaming(m1), dual_renaming(m2)
    s1, s2 = anchor(dual(m1), am1.anchor), anchor(dual(m2), am2.anchor)
    c = series_connection_generators(
        s1, s2, F1.rename(r1), F2.rename(r2), order1.renamed(r1), order2.renamed(r2)
    )
    P = dual(c.matroid)
    if P != parallel_direct(am1, am2):
        raise AssertionError("dual route and direct definition of P disagree")
    return Construction(P, c.generators, complement_map(c.basis_of, c.matroid.ground_size), c.order)


# 2-sum ---------------------------------------------------------------------


def two_sum(am1: AnchoredMatroid, am2: AnchoredMatroid) -> Matroid:
    if am1.gamma in (0, am1.n) or am2.gamma in (0, am2.n):
        raise DegenerateBasepoint("the basepoint is a loop or coloop of a factor")
    S, _ = series_connection(am1, am2)
    return contract(S, am1.anchor)


def two_sum_generators(
    am1: AnchoredMatroid,
    am2: AnchoredMatroid,
    F1: BinomialSet,
    F2: BinomialSet,
    order1: MonomialOrder,
    order2: MonomialOrder,
) -> Construction:
    """``S(M1, M2) / c``: keep the series-connection generators whose
    variables all correspond to bases through ``c``, drop ``c``."""
    if am1.gamma in (0, am1.n) or am2.gamma in (0, am2.n):
        raise DegenerateBasepoint("the basepoint is a loop or coloop of a factor")
    sc = series_connection_generators(am1, am2, F1, F2, order1, order2)
    c = am1.anchor
    keep = frozenset(v for v, b in sc.basis_of.items() if c in b)
    relabel = compaction_map(sc.matroid.ground_size, c)
    basis_of = {v: frozenset(relabel[e] for e in sc.basis_of[v] if e != c) for v in keep}
    result = contract(sc.matroid, c)
    gens = restrict_to_vars(sc.generators, keep)
    return Construction(result, gens, basis_of, sc.order.restricted(keep))


# sequences ------------------------------------------------------------------


def oracle_start(m: Matroid, order: MonomialOrder | None = None) -> tuple[BinomialSet, MonomialOrder]:
    if order is None:
        order = default_order(BasisVar(1, j) for j in range(1, m.n_bases + 1))
    return toric_gb(bases_matrix(m), order), order


def sp_extension_sequence(
    m: Matroid,
    steps: Sequence[tuple[str, int]],
    F: BinomialSet | None = None,
    order: MonomialOrder | None = None,
) -> tuple[Matroid, BinomialSet, MonomialOrder]:
    """Fold series/parallel extensions over ``steps`` = ``[(kind, anchor)]``,
    threading the generating set and the order.  Starts from the oracle's
    Groebner basis when ``F`` is not given."""
    if F is None:
        F, order = oracle_start(m, order)
    elif order is None:
        order = default_order(BasisVar(1, j) for j in range(1, m.n_bases + 1))
    for kind, c in steps:
        am = anchor(m, c)
        if kind == "series":
            con = series_extension_generators(am, F, order)
        elif kind == "parallel":
            con = parallel_extension_generators(am, F, order)
        else:
            raise ValueError(f"unknown extension kind {kind!r}")
        m, F, order = con.canonical()
    return m, F, order
