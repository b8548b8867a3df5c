"""Uniform, graphic and named small matroids, and the excluded-minor test."""

from __future__ import annotations

import itertools
from typing import Hashable, Sequence

from .matroid import Matroid, MatroidError, check_exchange, has_minor


class BadParams(MatroidError):
    pass


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n or n < 1:
        raise BadParams(f"uniform matroid needs 0 <= r <= n and n >= 1, got r={r}, n={n}")
    return Matroid.from_bases(n, itertools.combinations(range(1, n + 1), r))


def _find(parent: dict, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _is_forest(edges: Sequence[tuple[Hashable, Hashable]], chosen) -> bool:
    parent: dict = {}
    for i in chosen:
        u, v = edges[i]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def graphic(edges: Sequence[tuple[Hashable, Hashable]]) -> Matroid:
    """Cycle matroid; edge ``i`` (0-based in ``edges``) becomes element ``i+1``.

    Bases are the spanning forests, found by checking every edge subset of
    the right size.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        raise BadParams("a graph with no edges has no ground set")
    verts = {v for e in edges for v in e}
    parent = {v: v for v in verts}
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    components = len({_find(parent, v) for v in verts})
    r = len(verts) - components
    bases = [
        [i + 1 for i in S]
        for S in itertools.combinations(range(len(edges)), r)
        if _is_forest(edges, S)
    ]
    return Matroid.from_bases(len(edges), bases)


def cycle_graph(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def complete_graph(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


# K4 drawn as a wheel: hub 0, rim a=1, b=2, c=3.  Spokes are elements 1-3,
# rim edges ab, bc, ca are elements 4-6.
WHEEL_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
RIM = (4, 5, 6)


def _rank3_without_lines(lines: Sequence[Sequence[int]]) -> Matroid:
    dead = {tuple(sorted(line)) for line in lines}
    return Matroid.from_bases(
        6, (b for b in itertools.combinations(range(1, 7), 3) if b not in dead)
    )


def named(name: str) -> Matroid:
    """``MK4``, ``W3`` (rank-3 whirl), ``P6`` or ``Q6``; exchange-checked."""
    key = name.upper()
    if key == "MK4":
        m = graphic(WHEEL_EDGES)
    elif key == "W3":
        mk4 = graphic(WHEEL_EDGES)
        m = Matroid.from_bases(6, list(mk4.bases) + [RIM])
    elif key == "P6":
        # one three-point line
        m = _rank3_without_lines([(1, 2, 3)])
    elif key == "Q6":
        # two three-point lines sharing element 3
        m = _rank3_without_lines([(1, 2, 3), (3, 4, 5)])
    else:
        raise BadParams(f"unknown matroid name {name!r}")
    check_exchange(m)
    return m


EXCLUDED_MINORS = ("MK4", "W3", "P6", "Q6")


def excluded_minor_free(m: Matroid) -> bool:
    """No minor isomorphic to M(K4), the whirl W3, P6 or Q6."""
    return not any(has_minor(m, named(n)) for n in EXCLUDED_MINORS)
