"""Pure-Python monomial reducer (fallback for the compiled ``_kernels``)."""

from __future__ import annotations


def _support(a: tuple[int, ...]) -> int:
    m = 0
    for i, e in enumerate(a):
        if e:
            m |= 1 << (i & 63)
    return m


class Reducer:
    """Rewrites monomials modulo a list of binomials ``lead -> trail``.

    Monomials are dense exponent tuples of a fixed length.  The first
    (lowest-index) active binomial whose lead divides the monomial is used
    at every step, so results are deterministic.
    """

    def __init__(self, nvars: int) -> None:
        self.nvars = nvars
        self.leads: list[tuple[int, ...]] = []
        self.trails: list[tuple[int, ...]] = []
        self.masks: list[int] = []
        self.active: list[bool] = []

    def __len__(self) -> int:
        return len(self.leads)

    def add(self, lead: tuple[int, ...], trail: tuple[int, ...]) -> int:
        if len(lead) != self.nvars or len(trail) != self.nvars:
            raise ValueError("exponent tuple has the wrong length")
        self.leads.append(tuple(lead))
        self.trails.append(tuple(trail))
        self.masks.append(_support(lead))
        self.active.append(True)
        return len(self.leads) - 1

    def disable(self, i: int) -> None:
        self.active[i] = False

    def enable(self, i: int) -> None:
        self.active[i] = True

    def find_divisor(self, m: tuple[int, ...], skip: int = -1) -> int:
        mm = _support(m)
        for g, lead in enumerate(self.leads):
            if g == skip or not self.active[g] or self.masks[g] & ~mm:
                continue
            if all(a <= b for a, b in zip(lead, m)):
                return g
        return -1

    def reduce(self, m: tuple[int, ...]) -> tuple[int, ...]:
        m = tuple(m)
        while True:
            g = self.find_divisor(m)
            if g < 0:
                return m
            lead, trail = self.leads[g], self.trails[g]
            m = tuple(a - b + c for a, b, c in zip(m, lead, trail))

    def reduce_spair(self, i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Both sides of the S-binomial of elements ``i`` and ``j``, fully reduced."""
        li, lj = self.leads[i], self.leads[j]
        ti, tj = self.trails[i], self.trails[j]
        m = [a if a > b else b for a, b in zip(li, lj)]
        a = tuple(c - x + y for c, x, y in zip(m, li, ti))
        b = tuple(c - x + y for c, x, y in zip(m, lj, tj))
        return self.reduce(a), self.reduce(b)

    def lcm_degree(self, i: int, j: int, grading=None) -> int:
        li, lj = self.leads[i], self.leads[j]
        if grading is None:
            return sum(a if a > b else b for a, b in zip(li, lj))
        return sum((a if a > b else b) * w for a, b, w in zip(li, lj, grading))

    def gm_update(self, h: int, basis: list[int], pairs: list[tuple[int, int]]):
        """Gebauer-Moeller bookkeeping for a newly added element ``h``.

        Returns ``(partners, dropped, new_basis)``: the elements ``g`` for
        which ``(g, h)`` becomes a pair, the old pairs made redundant by
        ``h``, and the basis with elements whose lead ``h`` divides removed.
        """
        L = self.leads
        lh = L[h]
        lcms = [tuple(a if a > b else b for a, b in zip(lh, L[g])) for g in basis]
        coprime = [not any(a and b for a, b in zip(lh, L[g])) for g in basis]
        in_d = [False] * len(basis)
        for a, m1 in enumerate(lcms):
            if coprime[a]:
                in_d[a] = True
                continue
            dominated = False
            for b, m2 in enumerate(lcms):
                if b == a or (b < a and not in_d[b]):
                    continue
                if all(p <= q for p, q in zip(m2, m1)):
                    dominated = True
                    break
            in_d[a] = not dominated
        partners = [g for g, d, c in zip(basis, in_d, coprime) if d and not c]
        dropped = []
        for g1, g2 in pairs:
            l1, l2 = L[g1], L[g2]
            m12 = tuple(a if a > b else b for a, b in zip(l1, l2))
            if all(a <= b for a, b in zip(lh, m12)):
                m1h = tuple(a if a > b else b for a, b in zip(l1, lh))
                m2h = tuple(a if a > b else b for a, b in zip(l2, lh))
                if m1h != m12 and m2h != m12:
                    dropped.append((g1, g2))
        new_basis = [g for g in basis if not all(a <= b for a, b in zip(lh, L[g]))]
        new_basis.append(h)
        return partners, dropped, new_basis
