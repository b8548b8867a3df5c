"""Variables, monomials, monic binomials, monomial orders and binomial sets.

Only the pieces needed for toric ideals are here: every polynomial is either
a difference of two monomials or zero, so a binomial is just a pair of
monomials ``lead - trail``.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Callable, Iterable, Iterator, Sequence

log = logging.getLogger(__name__)


class UnknownVariable(KeyError):
    pass


class AmbientMismatch(ValueError):
    pass


# variables ------------------------------------------------------------------

_KIND_RANK = {"x": 0, "z": 1, "s": 2}


@total_ordering
class VariableId:
    """Base class for structured variable names.

    Variables of different kinds compare by ``(kind, block, indices)``.
    """

    __slots__ = ()
    kind = ""

    def sort_key(self) -> tuple[int, ...]:
        raise NotImplementedError

    def __lt__(self, other: "VariableId") -> bool:
        if not isinstance(other, VariableId):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @staticmethod
    def parse(name: str) -> "VariableId":
        m = re.fullmatch(r"x(\d+)_(\d+)", name)
        if m:
            return BasisVar(int(m[1]), int(m[2]))
        m = re.fullmatch(r"z(\d+)_(\d+)_(\d+)", name)
        if m:
            return PairVar(int(m[1]), int(m[2]), int(m[3]))
        m = re.fullmatch(r"s(\d+)", name)
        if m:
            return EliminationVar(int(m[1]))
        raise ValueError(f"not a variable name: {name!r}")


@dataclass(frozen=True, eq=True, order=False)
class BasisVar(VariableId):
    """``x^block_index``: one variable per basis (block 1) or per basis copy."""

    block: int
    index: int
    kind = "x"

    def sort_key(self) -> tuple[int, ...]:
        return (0, self.block, self.index)

    def __str__(self) -> str:
        return f"x{self.block}_{self.index}"


@dataclass(frozen=True, eq=True, order=False)
class PairVar(VariableId):
    """``z^block_{j k}``: a pair of bases, one from each factor."""

    block: int
    j: int
    k: int
    kind = "z"

    def sort_key(self) -> tuple[int, ...]:
        return (1, self.block, self.j, self.k)

    def __str__(self) -> str:
        return f"z{self.block}_{self.j}_{self.k}"


@dataclass(frozen=True, eq=True, order=False)
class EliminationVar(VariableId):
    """Auxiliary variable ``s_row`` used by the elimination oracle."""

    row: int
    kind = "s"

    def sort_key(self) -> tuple[int, ...]:
        return (2, 0, self.row)

    def __str__(self) -> str:
        return f"s{self.row}"


def x(j: int, block: int = 1) -> BasisVar:
    return BasisVar(block, j)


# monomials and binomials ----------------------------------------------------


class Monomial(Mapping):
    """Immutable sparse exponent map ``VariableId -> positive int``."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exps: Mapping | Iterable[tuple[VariableId, int]] = ()) -> None:
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[VariableId, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for {v}")
            if e:
                acc[v] = acc.get(v, 0) + e
        self._items = tuple(sorted(acc.items()))
        self._hash = hash(self._items)

    @classmethod
    def of(cls, *variables: VariableId) -> "Monomial":
        """Product of the given variables (repeats allowed)."""
        return cls((v, 1) for v in variables)

    def __getitem__(self, v: VariableId) -> int:
        for w, e in self._items:
            if w == v:
                return e
        raise KeyError(v)

    def get(self, v, default=0):
        for w, e in self._items:
            if w == v:
                return e
        return default

    def __iter__(self) -> Iterator[VariableId]:
        return (v for v, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Monomial):
            return self._items == other._items
        return NotImplemented

    def items(self):
        return self._items

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    def variables(self) -> frozenset[VariableId]:
        return frozenset(v for v, _ in self._items)

    def rename(self, mapping: Mapping[VariableId, VariableId]) -> "Monomial":
        return Monomial((mapping[v], e) for v, e in self._items)

    def expand(self) -> list[VariableId]:
        """Variables listed with multiplicity, in variable order."""
        return [v for v, e in self._items for _ in range(e)]

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(list(self._items) + list(other._items))

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self._items)

    def __repr__(self) -> str:
        return f"Monomial({self})"


ONE = Monomial()


def _plain_key(m: Monomial) -> tuple:
    return (m.degree, tuple((v.sort_key(), e) for v, e in m.items()))


@dataclass(frozen=True)
class Binomial:
    """The binomial ``lead - trail``; the two sides are always distinct."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self) -> None:
        if self.lead == self.trail:
            raise ValueError("a binomial needs two distinct monomials (use None for zero)")

    @classmethod
    def of(cls, lead: Iterable[VariableId], trail: Iterable[VariableId]) -> "Binomial":
        return cls(Monomial.of(*lead), Monomial.of(*trail))

    def variables(self) -> frozenset[VariableId]:
        return self.lead.variables() | self.trail.variables()

    @property
    def degree(self) -> int:
        return max(self.lead.degree, self.trail.degree)

    def is_homogeneous(self) -> bool:
        return self.lead.degree == self.trail.degree

    def flipped(self) -> "Binomial":
        return Binomial(self.trail, self.lead)

    def canonical(self) -> "Binomial":
        """Order-free orientation used for de-duplication."""
        if _plain_key(self.lead) >= _plain_key(self.trail):
            return self
        return self.flipped()

    def oriented(self, order: "MonomialOrder") -> "Binomial":
        if order.compare(self.lead, self.trail) > 0:
            return self
        return self.flipped()

    def rename(self, mapping: Mapping[VariableId, VariableId]) -> "Binomial":
        return Binomial(self.lead.rename(mapping), self.trail.rename(mapping))

    def difference(self) -> dict[VariableId, int]:
        """Exponent vector of lead minus trail (zero entries dropped)."""
        out = dict(self.lead.items())
        for v, e in self.trail.items():
            out[v] = out.get(v, 0) - e
        return {v: e for v, e in out.items() if e}

    def __str__(self) -> str:
        return f"{self.lead} - {self.trail}"


# monomial orders ------------------------------------------------------------

TIE_BREAKS = ("lex", "degrevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on the variables of ``ranking``.

    Monomials are compared by, in turn:

    1. the ``tie_break`` order restricted to ``elimination_block`` (when set),
    2. each weight row in ``weights`` (integer dot products),
    3. ``tie_break`` (``lex`` or ``degrevlex``) over ``ranking``, whose first
       variable is the largest.

    A single non-negative weight row followed by a tie-break is the usual
    weight order; more rows give a matrix order, which is how orders are
    pulled back along variable maps.
    """

    ranking: tuple[VariableId, ...]
    tie_break: str = "degrevlex"
    weights: tuple[tuple[tuple[VariableId, int], ...], ...] = ()
    elimination_block: frozenset[VariableId] | None = None

    def __post_init__(self) -> None:
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"tie_break must be one of {TIE_BREAKS}")
        ranking = tuple(self.ranking)
        if len(set(ranking)) != len(ranking):
            raise ValueError("ranking lists a variable twice")
        object.__setattr__(self, "ranking", ranking)
        rows = tuple(
            tuple(sorted((v, int(w)) for v, w in (r.items() if isinstance(r, Mapping) else r) if w))
            for r in self.weights
        )
        rows = tuple(r for r in rows if r)  # an all-zero row compares nothing
        known = set(ranking)
        for r in rows:
            for v, _ in r:
                if v not in known:
                    raise UnknownVariable(v)
        object.__setattr__(self, "weights", rows)
        if self.elimination_block is not None:
            blk = frozenset(self.elimination_block)
            if not blk <= known:
                raise UnknownVariable(next(iter(blk - known)))
            object.__setattr__(self, "elimination_block", blk)
        # well-order: every variable must be larger than 1
        for v in ranking:
            for r in rows:
                w = dict(r).get(v, 0)
                if w > 0:
                    break
                if w < 0:
                    raise ValueError(f"weights make {v} smaller than 1; not a well-order")

    # constructors
    @classmethod
    def lex(cls, ranking: Sequence[VariableId]) -> "MonomialOrder":
        return cls(tuple(ranking), "lex")

    @classmethod
    def degrevlex(cls, ranking: Sequence[VariableId]) -> "MonomialOrder":
        return cls(tuple(ranking), "degrevlex")

    @classmethod
    def weighted(
        cls,
        omega: Mapping[VariableId, int],
        ranking: Sequence[VariableId],
        tie_break: str = "lex",
    ) -> "MonomialOrder":
        """The weight order: compare ``omega``-weights, then ``tie_break``."""
        if any(w < 0 for w in omega.values()):
            raise ValueError("weights must be non-negative")
        return cls(tuple(ranking), tie_break, (tuple(omega.items()),))

    @property
    def weight(self) -> dict[VariableId, int] | None:
        return dict(self.weights[0]) if self.weights else None

    @cached_property
    def index(self) -> dict[VariableId, int]:
        return {v: i for i, v in enumerate(self.ranking)}

    def variables(self) -> frozenset[VariableId]:
        return frozenset(self.ranking)

    # keys
    @cached_property
    def dense_key(self) -> Callable[[tuple[int, ...]], tuple]:
        """Sort key on exponent tuples aligned with ``ranking``."""
        idx = self.index
        rows = [[(idx[v], w) for v, w in r] for r in self.weights]
        n = len(self.ranking)
        rev = tuple(range(n - 1, -1, -1))
        lex = self.tie_break == "lex"
        blk = None
        if self.elimination_block is not None:
            blk = sorted(idx[v] for v in self.elimination_block)
            brev = blk[::-1]

        def key(a: tuple[int, ...]) -> tuple:
            parts: list = []
            if blk is not None:
                if lex:
                    parts.append(tuple(a[i] for i in blk))
                else:
                    parts.append((sum(a[i] for i in blk),) + tuple(-a[i] for i in brev))
            for r in rows:
                parts.append(sum(a[i] * w for i, w in r))
            if lex:
                parts.append(a)
            else:
                parts.append((sum(a),) + tuple(-a[i] for i in rev))
            return tuple(parts)

        return key

    def dense(self, m: Monomial) -> tuple[int, ...]:
        vec = [0] * len(self.ranking)
        idx = self.index
        for v, e in m.items():
            try:
                vec[idx[v]] = e
            except KeyError:
                raise UnknownVariable(v) from None
        return tuple(vec)

    def sparse(self, a: Sequence[int]) -> Monomial:
        return Monomial((self.ranking[i], e) for i, e in enumerate(a) if e)

    def key(self, m: Monomial) -> tuple:
        return self.dense_key(self.dense(m))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    # transformations
    def tie_break_rows(self) -> list[dict[VariableId, int]]:
        """The tie-break written as weight rows (enough to make it total)."""
        if self.tie_break == "lex":
            return [{v: 1} for v in self.ranking]
        rows: list[dict[VariableId, int]] = [{v: 1 for v in self.ranking}]
        rows += [{v: -1} for v in reversed(self.ranking[1:])]
        return rows

    def as_rows(self) -> list[dict[VariableId, int]]:
        """All comparison stages of this order as weight rows."""
        out: list[dict[VariableId, int]] = []
        if self.elimination_block is not None:
            blk = [v for v in self.ranking if v in self.elimination_block]
            sub = MonomialOrder(tuple(blk), self.tie_break)
            out += sub.tie_break_rows()
        out += [dict(r) for r in self.weights]
        out += self.tie_break_rows()
        return out

    def pulled_back(self, proj: Mapping[VariableId, VariableId]) -> list[dict[VariableId, int]]:
        """Rows of this order composed with the variable map ``proj``.

        ``proj`` sends new variables to variables of this order; the returned
        rows compare new monomials by comparing their images.
        """
        out = []
        for row in self.as_rows():
            pulled = {u: row[v] for u, v in proj.items() if v in row}
            out.append(pulled)
        return out

    def restricted(self, keep: Iterable[VariableId]) -> "MonomialOrder":
        """The induced order on the subring generated by ``keep``."""
        keep = frozenset(keep)
        ranking = tuple(v for v in self.ranking if v in keep)
        rows = tuple(tuple((v, w) for v, w in r if v in keep) for r in self.weights)
        blk = None
        if self.elimination_block is not None:
            # with no block variables left the block stage is constant
            blk = self.elimination_block & keep or None
        return MonomialOrder(ranking, self.tie_break, rows, blk)

    def renamed(self, mapping: Mapping[VariableId, VariableId]) -> "MonomialOrder":
        return MonomialOrder(
            tuple(mapping[v] for v in self.ranking),
            self.tie_break,
            tuple(tuple((mapping[v], w) for v, w in r) for r in self.weights),
            None
            if self.elimination_block is None
            else frozenset(mapping[v] for v in self.elimination_block),
        )

    def describe(self) -> dict:
        out: dict = {
            "tie_break": self.tie_break,
            "ranking": [str(v) for v in self.ranking],
        }
        if self.weights:
            out["weights"] = [{str(v): w for v, w in r} for r in self.weights]
        if self.elimination_block is not None:
            out["elimination_block"] = sorted(str(v) for v in self.elimination_block)
        return out


# binomial sets --------------------------------------------------------------


@dataclass(frozen=True)
class BinomialSet:
    """A finite list of binomials over a declared set of variables."""

    ambient: frozenset[VariableId]
    elements: tuple[Binomial, ...] = field(default=())

    def __post_init__(self) -> None:
        amb = frozenset(self.ambient)
        object.__setattr__(self, "ambient", amb)
        seen: set[Binomial] = set()
        kept = []
        for b in self.elements:
            extra = b.variables() - amb
            if extra:
                raise UnknownVariable(f"{sorted(map(str, extra))} not in the ambient ring")
            c = b.canonical()
            if c in seen:
                continue
            seen.add(c)
            kept.append(b)
        object.__setattr__(self, "elements", tuple(kept))

    @classmethod
    def build(
        cls, ambient: Iterable[VariableId], pairs: Iterable[tuple[Monomial, Monomial]]
    ) -> "BinomialSet":
        """Make a set from (side, side) pairs, dropping trivial ``m - m`` ones."""
        elems = []
        for a, b in pairs:
            if a == b:
                log.warning("dropping trivial binomial %s - %s", a, b)
                continue
            elems.append(Binomial(a, b))
        return cls(frozenset(ambient), tuple(elems))

    def __iter__(self) -> Iterator[Binomial]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def oriented(self, order: MonomialOrder) -> "BinomialSet":
        return BinomialSet(self.ambient, tuple(b.oriented(order) for b in self.elements))

    def sorted(self, order: MonomialOrder) -> "BinomialSet":
        elems = sorted(
            (b.oriented(order) for b in self.elements),
            key=lambda b: (order.key(b.lead), order.key(b.trail)),
        )
        return BinomialSet(self.ambient, tuple(elems))

    def canonical_form(self) -> frozenset[Binomial]:
        return frozenset(b.canonical() for b in self.elements)

    def same_elements(self, other: "BinomialSet") -> bool:
        return self.canonical_form() == other.canonical_form()

    def union(self, *others: "BinomialSet") -> "BinomialSet":
        amb = self.ambient.union(*(o.ambient for o in others))
        elems = list(self.elements)
        for o in others:
            elems += o.elements
        return BinomialSet(amb, tuple(elems))

    def rename(self, mapping: Mapping[VariableId, VariableId]) -> "BinomialSet":
        return BinomialSet(
            frozenset(mapping[v] for v in self.ambient),
            tuple(b.rename(mapping) for b in self.elements),
        )

    def max_degree(self) -> int:
        return max((b.degree for b in self.elements), default=0)
