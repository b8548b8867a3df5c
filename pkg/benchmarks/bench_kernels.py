"""Compare the compiled reducer with the pure-Python one.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload is run under both backends; the results must agree exactly,
and the best wall time of ``--repeat`` runs is reported.
"""

from __future__ import annotations

import argparse
import time

from matroid_toric import backend, groebner
from matroid_toric.catalog import named, uniform
from matroid_toric.exchange import symmetric_exchange_set
from matroid_toric.lifts import series_extension_generators, verify
from matroid_toric.matroid import anchor
from matroid_toric.polys import BasisVar, MonomialOrder
from matroid_toric.toric import bases_matrix, toric_gb


def _drl(m):
    return MonomialOrder.degrevlex([BasisVar(1, j) for j in range(1, m.n_bases + 1)])


def workloads():
    u36, mk4 = uniform(3, 6), named("MK4")
    yield "oracle U36", lambda: toric_gb(bases_matrix(u36)).elements
    yield "oracle MK4 lex", lambda: toric_gb(
        bases_matrix(mk4), MonomialOrder.lex([BasisVar(1, j) for j in range(1, 17)])
    ).elements
    gens, _ = symmetric_exchange_set(uniform(3, 6))
    yield "exchange U36 closure", lambda: groebner.buchberger(gens, _drl(u36)).elements
    m = uniform(2, 5)
    F = toric_gb(bases_matrix(m), _drl(m))
    yield "series ext U25 verify", lambda: verify(series_extension_generators(anchor(m, 5), F, _drl(m)))


def timed(fn, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if backend.NAME != "cython":
        raise SystemExit("the compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    compiled = groebner.Reducer
    print(f"{'workload':28s} {'cython':>9s} {'python':>9s} {'speedup':>8s}")
    for name, fn in workloads():
        groebner.Reducer = compiled
        tc, rc = timed(fn, args.repeat)
        groebner.Reducer = backend.PurePythonReducer
        tp, rp = timed(fn, args.repeat)
        groebner.Reducer = compiled
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:28s} {tc:8.3f}s {tp:8.3f}s {tp / tc:7.2f}x")


if __name__ == "__main__":
    main()
