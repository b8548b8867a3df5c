from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

from matroid_toric.catalog import named, uniform
from matroid_toric.polys import BasisVar, MonomialOrder

from independent import fiber_count, standard_count

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


def basis_vars(m):
    return [BasisVar(1, j) for j in range(1, m.n_bases + 1)]


def canonical_order(m, tie="degrevlex"):
    vs = basis_vars(m)
    return MonomialOrder.degrevlex(vs) if tie == "degrevlex" else MonomialOrder.lex(vs)


# matroids with at most five elements, closed under duals and minors
SMALL = {
    "U01": uniform(0, 1),
    "U11": uniform(1, 1),
    "U12": uniform(1, 2),
    "U13": uniform(1, 3),
    "U23": uniform(2, 3),
    "U24": uniform(2, 4),
    "U14": uniform(1, 4),
    "U34": uniform(3, 4),
    "U25": uniform(2, 5),
    "U35": uniform(3, 5),
}

SUITE = dict(SMALL)
SUITE.update({"U36": uniform(3, 6), "MK4": named("MK4")})


@pytest.fixture(scope="session")
def suite():
    return SUITE


def hilbert_certificate(columns, gb, order, degrees=(2, 3)) -> bool:
    """Standard monomials of ``gb``'s leads match fiber counts of ``columns``.

    ``columns`` maps each variable of ``order.ranking`` to its column.
    """
    cols = [columns[v] for v in order.ranking]
    leads = [order.dense(b.oriented(order).lead) for b in gb]
    n = len(cols)
    return all(standard_count(leads, n, k) == fiber_count(cols, k) for k in degrees)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in mod.result_lines():
        terminalreporter.write_line(line)
