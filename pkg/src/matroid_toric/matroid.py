"""Matroids given by their bases, and the single-matroid operations on them.

Ground sets are always ``{1..d}``.  Bases are stored as sorted tuples and the
collection of bases is kept in lexicographic order, so two matroids with the
same bases compare (and hash) equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class MatroidError(ValueError):
    pass


class EmptyBases(MatroidError):
    def __init__(self) -> None:
        super().__init__("a matroid needs at least one basis")


class ElementOutOfRange(MatroidError):
    def __init__(self, basis: Sequence[int], d: int) -> None:
        self.basis = tuple(basis)
        super().__init__(f"basis {list(basis)} is not a subset of 1..{d}")


class UnequalCardinality(MatroidError):
    def __init__(self, b1: Sequence[int], b2: Sequence[int]) -> None:
        self.witness = (tuple(b1), tuple(b2))
        super().__init__(f"bases {list(b1)} and {list(b2)} have different sizes")


class ExchangeFails(MatroidError):
    def __init__(self, b1: Sequence[int], b2: Sequence[int], x: int) -> None:
        self.witness = (tuple(b1), tuple(b2), x)
        super().__init__(
            f"exchange axiom fails: B={list(b1)}, B'={list(b2)}, x={x} "
            "has no y in B'-B with (B+y)-x a basis"
        )


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


@dataclass(frozen=True)
class Matroid:
    """A matroid on ``{1..ground_size}`` given by its bases."""

    ground_size: int
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        d = self.ground_size
        if d < 0:
            raise MatroidError(f"ground size must be non-negative, got {d}")
        canon = sorted({tuple(sorted(set(b))) for b in self.bases})
        if not canon:
            raise EmptyBases()
        r = len(canon[0])
        for b in canon:
            if b and (b[0] < 1 or b[-1] > d):
                raise ElementOutOfRange(b, d)
            if len(b) != r:
                raise UnequalCardinality(canon[0], b)
        object.__setattr__(self, "bases", tuple(canon))

    @classmethod
    def from_bases(cls, d: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        return cls(d, tuple(tuple(b) for b in bases))

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @property
    def n_bases(self) -> int:
        return len(self.bases)

    @property
    def elements(self) -> range:
        return range(1, self.ground_size + 1)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Bases as bitmasks (bit ``e`` set for element ``e``)."""
        return tuple(_mask(b) for b in self.bases)

    @cached_property
    def basis_index(self) -> dict[frozenset[int], int]:
        """Map from basis (as a frozenset) to its 1-based canonical index."""
        return {frozenset(b): j for j, b in enumerate(self.bases, start=1)}

    def basis(self, j: int) -> tuple[int, ...]:
        return self.bases[j - 1]

    def __repr__(self) -> str:
        return f"Matroid(d={self.ground_size}, r={self.rank}, bases={len(self.bases)})"


@dataclass(frozen=True)
class ElementClass:
    loops: frozenset[int]
    coloops: frozenset[int]


@dataclass(frozen=True)
class AnchoredMatroid:
    """A matroid with a distinguished element whose bases are renumbered.

    ``order[j-1]`` is the canonical index of the j-th basis in anchored
    numbering; the first ``gamma`` of them avoid the anchor.
    """

    matroid: Matroid
    anchor: int
    order: tuple[int, ...]
    gamma: int

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def anchor_is_coloop(self) -> bool:
        return self.gamma == 0

    @property
    def anchor_is_loop(self) -> bool:
        return self.gamma == self.n

    def basis(self, j: int) -> tuple[int, ...]:
        """The j-th basis (1-based) in anchored numbering."""
        return self.matroid.bases[self.order[j - 1] - 1]

    @property
    def bases(self) -> list[tuple[int, ...]]:
        return [self.basis(j) for j in range(1, self.n + 1)]


def validate_matroid(bases: Iterable[Iterable[int]], d: int) -> Matroid:
    """Build a matroid and check the basis exchange axiom by brute force.

    Raises one of the :class:`MatroidError` subclasses with a witness.
    """
    if d < 1:
        raise MatroidError(f"ground size must be at least 1, got {d}")
    m = Matroid.from_bases(d, bases)
    check_exchange(m)
    return m


def check_exchange(m: Matroid) -> None:
    masks = m.masks
    present = set(masks)
    for b1, m1 in zip(m.bases, masks):
        for b2, m2 in zip(m.bases, masks):
            if m1 == m2:
                continue
            only2 = [y for y in b2 if not m1 >> y & 1]
            for x in b1:
                if m2 >> x & 1:
                    continue
                if not any((m1 & ~(1 << x)) | (1 << y) in present for y in only2):
                    raise ExchangeFails(b1, b2, x)


def is_valid(m: Matroid) -> bool:
    try:
        check_exchange(m)
    except ExchangeFails:
        return False
    return True


def rank_of_subset(m: Matroid, X: Iterable[int]) -> int:
    xm = _mask(X)
    return max(bin(b & xm).count("1") for b in m.masks)


def classify_elements(m: Matroid) -> ElementClass:
    union = 0
    inter = (1 << (m.ground_size + 1)) - 2
    for b in m.masks:
        union |= b
        inter &= b
    loops = frozenset(e for e in m.elements if not union >> e & 1)
    coloops = frozenset(e for e in m.elements if inter >> e & 1)
    return ElementClass(loops, coloops)


def is_loop(m: Matroid, e: int) -> bool:
    return all(e not in b for b in m.bases)


def is_coloop(m: Matroid, e: int) -> bool:
    return all(e in b for b in m.bases)


def dual(m: Matroid) -> Matroid:
    E = set(m.elements)
    return Matroid.from_bases(m.ground_size, (E.difference(b) for b in m.bases))


def compaction_map(d: int, removed: int) -> dict[int, int]:
    """Relabeling of ``{1..d} - {removed}`` onto ``{1..d-1}`` (order kept)."""
    return {e: (e if e < removed else e - 1) for e in range(1, d + 1) if e != removed}


def _check_element(m: Matroid, c: int) -> None:
    if not 1 <= c <= m.ground_size:
        raise MatroidError(f"element {c} is not in 1..{m.ground_size}")


def delete(m: Matroid, c: int) -> Matroid:
    """``m \\ c`` with the ground set compacted by :func:`compaction_map`."""
    _check_element(m, c)
    relabel = compaction_map(m.ground_size, c)
    if is_coloop(m, c):
        kept = [b for b in m.bases]
    else:
        kept = [b for b in m.bases if c not in b]
    return Matroid.from_bases(
        m.ground_size - 1, ([relabel[e] for e in b if e != c] for b in kept)
    )


def contract(m: Matroid, c: int) -> Matroid:
    return dual(delete(dual(m), c))


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum; elements of ``m2`` are shifted up by ``m1.ground_size``."""
    d1 = m1.ground_size
    return Matroid.from_bases(
        d1 + m2.ground_size,
        (b + tuple(e + d1 for e in b2) for b in m1.bases for b2 in m2.bases),
    )


def relabel(m: Matroid, perm: Mapping[int, int], d: int | None = None) -> Matroid:
    return Matroid.from_bases(
        m.ground_size if d is None else d, ([perm[e] for e in b] for b in m.bases)
    )


def anchor(m: Matroid, c: int) -> AnchoredMatroid:
    """Renumber bases so that the ones avoiding ``c`` come first (stable)."""
    _check_element(m, c)
    free = [j for j, b in enumerate(m.bases, start=1) if c not in b]
    held = [j for j, b in enumerate(m.bases, start=1) if c in b]
    return AnchoredMatroid(m, c, tuple(free + held), len(free))


# isomorphism and minors ----------------------------------------------------


def _element_profile(m: Matroid) -> dict[int, tuple]:
    # per-element invariant: (#bases containing e, sorted co-occurrence counts)
    deg = {e: 0 for e in m.elements}
    pair: dict[tuple[int, int], int] = {}
    for b in m.bases:
        for e in b:
            deg[e] += 1
        for e, f in itertools.combinations(b, 2):
            pair[e, f] = pair.get((e, f), 0) + 1
    prof = {}
    for e in m.elements:
        co = sorted(
            pair.get((min(e, f), max(e, f)), 0) for f in m.elements if f != e
        )
        prof[e] = (deg[e], tuple(co))
    return prof


def invariant_vector(m: Matroid) -> tuple:
    """Cheap isomorphism invariant: (d, rank, #bases, sorted element degrees)."""
    degs = sorted(sum(1 for b in m.bases if e in b) for e in m.elements)
    return (m.ground_size, m.rank, m.n_bases, tuple(degs))


def is_isomorphic(m1: Matroid, m2: Matroid) -> dict[int, int] | None:
    """Return an element bijection carrying bases of m1 onto bases of m2."""
    if invariant_vector(m1) != invariant_vector(m2):
        return None
    p1, p2 = _element_profile(m1), _element_profile(m2)
    if sorted(p1.values()) != sorted(p2.values()):
        return None
    target = set(m2.masks)
    src = sorted(m1.elements, key=lambda e: (p1[e], e))
    candidates = {e: [f for f in m2.elements if p2[f] == p1[e]] for e in src}
    src.sort(key=lambda e: len(candidates[e]))
    # bases of m1 that become fully assigned after placing src[i]
    pos = {e: i for i, e in enumerate(src)}
    ready: list[list[tuple[int, ...]]] = [[] for _ in src]
    for b in m1.bases:
        if b:
            ready[max(pos[e] for e in b)].append(b)
    perm: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(src):
            return True
        e = src[i]
        for f in candidates[e]:
            if f in used:
                continue
            perm[e] = f
            if all(_mask(perm[x] for x in b) in target for b in ready[i]):
                used.add(f)
                if extend(i + 1):
                    return True
                used.discard(f)
            del perm[e]
        return False

    if extend(0):
        return dict(sorted(perm.items()))
    return None


def has_minor(m: Matroid, target: Matroid) -> bool:
    """Exhaustive search for a minor of ``m`` isomorphic to ``target``."""
    dt = target.ground_size
    rt = target.rank
    ct = dt - rt
    tinv = invariant_vector(target)
    seen: set[Matroid] = set()

    def search(cur: Matroid) -> bool:
        if cur in seen:
            return False
        seen.add(cur)
        if cur.rank < rt or cur.ground_size - cur.rank < ct:
            return False
        if cur.ground_size == dt:
            return invariant_vector(cur) == tinv and is_isomorphic(cur, target) is not None
        for e in cur.elements:
            if search(delete(cur, e)) or search(contract(cur, e)):
                return True
        return False

    return search(m)


# connectivity ---------------------------------------------------------------


def connectivity_lambda(m: Matroid, X: Iterable[int]) -> int:
    X = set(X)
    rest = set(m.elements) - X
    return rank_of_subset(m, X) + rank_of_subset(m, rest) - m.rank


def is_n_connected(m: Matroid, n: int) -> bool:
    """True iff m has no k-separation for any k < n."""
    if n < 2:
        raise MatroidError("n-connectivity is defined for n >= 2")
    E = list(m.elements)
    d = len(E)
    for size in range(0, d // 2 + 1):
        for X in itertools.combinations(E, size):
            lam = connectivity_lambda(m, X)
            k = lam + 1  # smallest k for which X is k-separating
            if k < n and min(size, d - size) >= k:
                return False
    return True
