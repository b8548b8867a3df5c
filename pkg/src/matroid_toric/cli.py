"""``matroid-toric`` command line.

Every command writes one canonical JSON document to stdout (or ``--out``).
Exit status: 0 on success, 1 when a check or verification fails, 2 on bad
input or usage.
"""

from __future__ import annotations

import functools
import json
import logging
import sys
from typing import Callable

import click

from . import catalog, io
from .exchange import (
    check_white_gb,
    check_white_generation,
    default_orders,
    exchange_witnesses,
    symmetric_exchange_set,
)
from .groebner import buchberger, ideals_equal
from .lifts import (
    Construction,
    DegenerateBasepoint,
    canonical_basis_of,
    parallel_connection_generators,
    parallel_extension_generators,
    series_connection_generators,
    series_extension_generators,
    sp_extension_sequence,
    two_sum_generators,
    verify,
)
from .matroid import (
    Matroid,
    MatroidError,
    anchor,
    check_exchange,
    classify_elements,
    connectivity_lambda,
    contract,
    delete,
    direct_sum,
    dual,
    has_minor,
    invariant_vector,
    is_n_connected,
)
from .polys import AmbientMismatch, BasisVar, BinomialSet, MonomialOrder, UnknownVariable
from .toric import bases_matrix, toric_gb

log = logging.getLogger(__name__)

INPUT_ERRORS = (io.ParseError, MatroidError, UnknownVariable, AmbientMismatch, OSError)


class CheckFailed(Exception):
    """Raised after the result document is written, to exit with status 1."""


def _emit(obj) -> None:
    text = io.dumps(obj)
    out = click.get_current_context().find_root().meta.get("out")
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def command(f: Callable) -> Callable:
    """Map input errors to exit 2 and failed checks to exit 1."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except CheckFailed:
            sys.exit(1)
        except INPUT_ERRORS as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)

    return wrapper


def _matroid(path: str) -> Matroid:
    m = io.read_matroid(path)
    check_exchange(m)
    return m


def _variables(m: Matroid) -> list[BasisVar]:
    return [BasisVar(1, j) for j in range(1, m.n_bases + 1)]


def _order(spec: str, m: Matroid) -> MonomialOrder:
    vs = _variables(m)
    if spec == "degrevlex":
        return MonomialOrder.degrevlex(vs)
    if spec == "lex":
        return MonomialOrder.lex(vs)
    if spec.startswith("weight:"):
        path = spec[len("weight:"):]
        with open(path, encoding="utf-8") as fh:
            w = io.weight_from_obj(io.loads(fh.read(), path), vs, path)
        return MonomialOrder.weighted(w, vs, "lex")
    raise click.BadParameter(f"{spec!r}: expected degrevlex, lex or weight:<file>", param_hint="--order")


def _start(m: Matroid, method: str, order: MonomialOrder) -> BinomialSet:
    if method == "oracle":
        return toric_gb(bases_matrix(m), order)
    gens, _ = symmetric_exchange_set(m)
    return gens


ORDER = click.option("--order", "order_spec", default="degrevlex", show_default=True,
                     help="degrevlex, lex or weight:<file> (ties broken by lex).")
METHOD = click.option("--method", type=click.Choice(["exchange", "oracle"]), default="oracle",
                      show_default=True)


@click.group()
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="Write output here instead of stdout.")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
              help="Accepted for compatibility; computations are single-threaded.")
@click.option("-v", "--verbose", count=True)
@click.pass_context
def main(ctx: click.Context, out: str | None, threads: int, verbose: int) -> None:
    """Toric ideals of matroids and their lifts under matroid constructions."""
    ctx.meta["out"] = out
    ctx.meta["threads"] = threads
    logging.basicConfig(level=logging.WARNING - 10 * min(verbose, 2), stream=sys.stderr)


# matroid --------------------------------------------------------------------


@main.group("matroid")
def matroid_group() -> None:
    """Single-matroid operations."""


@matroid_group.command("validate")
@click.argument("path", type=click.Path(dir_okay=False))
@command
def matroid_validate(path: str) -> None:
    """Check the basis exchange axiom; exit 1 with a witness if it fails."""
    try:
        m = io.read_matroid(path)
        check_exchange(m)
    except MatroidError as e:
        witness = getattr(e, "witness", None) or getattr(e, "basis", None)
        _emit({
            "valid": False,
            "error": type(e).__name__,
            "message": str(e),
            "witness": json.loads(json.dumps(witness)) if witness is not None else None,
        })
        raise CheckFailed from None
    _emit({"valid": True, "d": m.ground_size, "rank": m.rank, "n_bases": m.n_bases})


@matroid_group.command("info")
@click.argument("path", type=click.Path(dir_okay=False))
@command
def matroid_info(path: str) -> None:
    m = _matroid(path)
    cls = classify_elements(m)
    _emit({
        "d": m.ground_size,
        "rank": m.rank,
        "n_bases": m.n_bases,
        "loops": sorted(cls.loops),
        "coloops": sorted(cls.coloops),
        "element_degrees": list(invariant_vector(m)[3]),
        "connected": m.ground_size < 2 or is_n_connected(m, 2),
    })


@matroid_group.command("dual")
@click.argument("path", type=click.Path(dir_okay=False))
@command
def matroid_dual(path: str) -> None:
    _emit(io.matroid_to_obj(dual(_matroid(path))))


@matroid_group.command("delete")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--at", "element", type=int, required=True)
@command
def matroid_delete(path: str, element: int) -> None:
    _emit(io.matroid_to_obj(delete(_matroid(path), element)))


@matroid_group.command("contract")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--at", "element", type=int, required=True)
@command
def matroid_contract(path: str, element: int) -> None:
    _emit(io.matroid_to_obj(contract(_matroid(path), element)))


@matroid_group.command("direct-sum")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
@command
def matroid_direct_sum(first: str, second: str) -> None:
    _emit(io.matroid_to_obj(direct_sum(_matroid(first), _matroid(second))))


@matroid_group.command("connectivity")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--n", "n", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("--subset", help="Comma-separated elements; also report lambda of this set.")
@command
def matroid_connectivity(path: str, n: int, subset: str | None) -> None:
    m = _matroid(path)
    out: dict = {"n": n, "n_connected": is_n_connected(m, n)}
    if subset is not None:
        try:
            X = sorted({int(t) for t in subset.split(",") if t.strip()})
        except ValueError:
            raise click.BadParameter(f"{subset!r} is not a list of integers", param_hint="--subset")
        if any(not 1 <= e <= m.ground_size for e in X):
            raise click.BadParameter(f"elements must lie in 1..{m.ground_size}", param_hint="--subset")
        out["subset"] = X
        out["lambda"] = connectivity_lambda(m, X)
    _emit(out)


# ideal ----------------------------------------------------------------------


@main.group("ideal")
def ideal_group() -> None:
    """Toric ideals of matroids."""


@ideal_group.command("gens")
@click.argument("path", type=click.Path(dir_okay=False))
@METHOD
@ORDER
@click.option("--witnesses", is_flag=True, help="Emit the exchange witnesses instead.")
@command
def ideal_gens(path: str, method: str, order_spec: str, witnesses: bool) -> None:
    """Generators: the symmetric-exchange quadrics or the oracle's basis."""
    m = _matroid(path)
    if witnesses:
        _emit(io.witnesses_to_obj(exchange_witnesses(m)))
        return
    order = _order(order_spec, m)
    _emit(io.binomials_to_obj(_start(m, method, order), order))


@ideal_group.command("gb")
@click.argument("path", type=click.Path(dir_okay=False))
@METHOD
@ORDER
@command
def ideal_gb(path: str, method: str, order_spec: str) -> None:
    """Reduced Groebner basis (from the exchange quadrics or the oracle)."""
    m = _matroid(path)
    order = _order(order_spec, m)
    gens = _start(m, method, order)
    gb = gens if method == "oracle" else buchberger(gens, order)
    _emit(io.binomials_to_obj(gb, order))


@ideal_group.command("equal")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
@click.option("--order", "order_spec", type=click.Choice(["degrevlex", "lex"]), default="degrevlex",
              show_default=True)
@command
def ideal_equal(first: str, second: str, order_spec: str) -> None:
    """Compare two binomial sets as ideals; exit 1 if they differ."""
    a, b = io.read_binomials(first), io.read_binomials(second)
    vs = sorted(a.ambient | b.ambient)
    order = MonomialOrder.degrevlex(vs) if order_spec == "degrevlex" else MonomialOrder.lex(vs)
    same = ideals_equal(a, b, order)
    _emit({"equal": same})
    if not same:
        raise CheckFailed


# white ----------------------------------------------------------------------


@main.group("white")
def white_group() -> None:
    """Per-instance checks of the exchange-quadric conjectures.

    A result is evidence about one matroid only; nothing here decides a
    conjecture for a whole class.
    """


@white_group.command("check-gen")
@click.argument("path", type=click.Path(dir_okay=False))
@command
def white_check_gen(path: str) -> None:
    m = _matroid(path)
    ok = check_white_generation(m)
    _emit({"generates": ok, "n_quadrics": len(symmetric_exchange_set(m)[0]), "scope": "instance"})
    if not ok:
        raise CheckFailed


@white_group.command("check-gb")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--search", type=click.IntRange(min=0), default=200, show_default=True,
              help="Number of seeded random rankings tried after the fixed orders.")
@click.option("--seed", type=int, default=0, show_default=True)
@command
def white_check_gb(path: str, search: int, seed: int) -> None:
    """Find an order making the exchange quadrics a Groebner basis; exit 1
    if none of the candidates works (inconclusive, not a counterexample)."""
    m = _matroid(path)
    order = check_white_gb(m, default_orders(m, search, seed))
    _emit({"order": None if order is None else order.describe(), "scope": "instance"})
    if order is None:
        raise CheckFailed


# construct ------------------------------------------------------------------


def _report(con, do_verify: bool) -> None:
    result = verify(con) if do_verify else None
    _emit(io.construction_to_obj(con, result))
    if result is not None and not result["generates"]:
        raise CheckFailed


def _one_anchor(at: tuple[int, ...]) -> int:
    if len(at) != 1:
        raise click.UsageError("give exactly one --at")
    return at[0]


def _two_anchors(at: tuple[int, ...]) -> tuple[int, int]:
    if len(at) == 1:
        return at[0], at[0]
    if len(at) != 2:
        raise click.UsageError("give one --at per matroid (or one shared --at)")
    return at[0], at[1]


VERIFY = click.option("--verify/--no-verify", "do_verify", default=True, show_default=True,
                      help="Compare with the elimination oracle.")
AT = click.option("--at", "at", type=int, multiple=True, required=True, help="Anchor element.")


@main.group("construct")
def construct_group() -> None:
    """Lift generators through matroid constructions."""


def _extension(kind: str):
    builder = series_extension_generators if kind == "series" else parallel_extension_generators

    @click.argument("path", type=click.Path(dir_okay=False))
    @AT
    @METHOD
    @ORDER
    @click.option("--pairing", type=click.Choice(["canonical", "reversed"]), default="canonical",
                  show_default=True)
    @VERIFY
    @command
    def run(path, at, method, order_spec, pairing, do_verify):
        m = _matroid(path)
        order = _order(order_spec, m)
        am = anchor(m, _one_anchor(at))
        _report(builder(am, _start(m, method, order), order, pairing), do_verify)

    run.__doc__ = f"{kind.capitalize()} extension at --at by a new element d+1."
    return run


construct_group.command("series-ext")(_extension("series"))
construct_group.command("parallel-ext")(_extension("parallel"))


def _connection(builder, doc: str):
    @click.argument("first", type=click.Path(dir_okay=False))
    @click.argument("second", type=click.Path(dir_okay=False))
    @AT
    @METHOD
    @ORDER
    @VERIFY
    @command
    def run(first, second, at, method, order_spec, do_verify):
        m1, m2 = _matroid(first), _matroid(second)
        c1, c2 = _two_anchors(at)
        o1, o2 = _order(order_spec, m1), _order(order_spec, m2)
        try:
            con = builder(anchor(m1, c1), anchor(m2, c2), _start(m1, method, o1), _start(m2, method, o2), o1, o2)
        except DegenerateBasepoint as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)
        _report(con, do_verify)

    run.__doc__ = doc
    return run


construct_group.command("series-conn")(_connection(
    series_connection_generators,
    "Series connection; the second matroid's anchor is glued to the first's.",
))
construct_group.command("parallel-conn")(_connection(
    parallel_connection_generators, "Parallel connection at the shared anchor."
))
construct_group.command("two-sum")(_connection(
    two_sum_generators, "2-sum: series connection, then contract the anchor."
))


@construct_group.command("sp-sequence")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--step", "steps", multiple=True, required=True,
              help="series:<element> or parallel:<element>, applied in order.")
@METHOD
@ORDER
@VERIFY
@command
def construct_sp_sequence(path, steps, method, order_spec, do_verify):
    """A chain of series/parallel extensions, threading generators and order."""
    m = _matroid(path)
    order = _order(order_spec, m)
    parsed = []
    for s in steps:
        kind, _, c = s.partition(":")
        if kind not in ("series", "parallel") or not c.isdigit():
            raise click.BadParameter(f"{s!r}: expected series:<n> or parallel:<n>", param_hint="--step")
        parsed.append((kind, int(c)))
    final, gens, final_order = sp_extension_sequence(m, parsed, _start(m, method, order), order)
    _report(Construction(final, gens, canonical_basis_of(final), final_order), do_verify)


# minor ----------------------------------------------------------------------


@main.group("minor")
def minor_group() -> None:
    """Minor containment."""


def _target(spec: str) -> Matroid:
    try:
        return catalog.named(spec)
    except catalog.BadParams:
        return _matroid(spec)


@minor_group.command("has")
@click.argument("path", type=click.Path(dir_okay=False))
@click.argument("target")
@command
def minor_has(path: str, target: str) -> None:
    """Does PATH have a minor isomorphic to TARGET (a file or a catalog name)?"""
    _emit({"has_minor": has_minor(_matroid(path), _target(target))})


@minor_group.command("excluded-free")
@click.argument("path", type=click.Path(dir_okay=False))
@command
def minor_excluded_free(path: str) -> None:
    """No minor isomorphic to M(K4), W3, P6 or Q6."""
    m = _matroid(path)
    found = [n for n in catalog.EXCLUDED_MINORS if has_minor(m, catalog.named(n))]
    _emit({"excluded_minor_free": not found, "minors": found})


# catalog --------------------------------------------------------------------


def catalog_matroid(spec: str) -> Matroid:
    if spec.startswith("u:"):
        try:
            r, n = (int(t) for t in spec[2:].split(","))
        except ValueError:
            raise catalog.BadParams(f"{spec!r}: expected u:<r>,<n>") from None
        return catalog.uniform(r, n)
    try:
        return catalog.named(spec)
    except catalog.BadParams:
        pass
    with open(spec, encoding="utf-8") as fh:
        edges = io.loads(fh.read(), spec)
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise io.ParseError(spec, "top level", "a graph file is a list of [u, v] edges")
    return catalog.graphic([tuple(e) for e in edges])


@main.command("catalog")
@click.argument("spec")
@command
def catalog_cmd(spec: str) -> None:
    """Emit a matroid: MK4, W3, P6, Q6, u:<r>,<n>, or a graph file of edges."""
    _emit(io.matroid_to_obj(catalog_matroid(spec)))


if __name__ == "__main__":  # pragma: no cover
    main()
