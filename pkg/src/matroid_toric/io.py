"""JSON file formats: matroids, binomial sets, matrices, witnesses, reports.

Writers are canonical (fixed key order, sorted contents, one trailing
newline) so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Mapping

from .exchange import ExchangeWitness
from .lifts import Construction
from .matroid import Matroid
from .polys import Binomial, BinomialSet, Monomial, MonomialOrder, VariableId, _plain_key
from .toric import IntegerMatrix


class ParseError(ValueError):
    """Malformed input; ``where`` names the line or field at fault."""

    def __init__(self, source: str, where: str, msg: str) -> None:
        super().__init__(f"{source}: {where}: {msg}")
        self.source = source
        self.where = where


def _flat(obj: Any) -> bool:
    if isinstance(obj, list):
        return all(not isinstance(x, (list, dict)) for x in obj)
    if isinstance(obj, dict):
        return all(not isinstance(x, (list, dict)) for x in obj.values())
    return True


def _format(obj: Any, indent: int) -> str:
    """Containers of scalars go on one line; anything else one item per line."""
    if _flat(obj):
        return json.dumps(obj, ensure_ascii=False)
    pad = " " * (indent + 1)
    if isinstance(obj, list):
        items = [pad + _format(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
    items = [pad + json.dumps(k) + ": " + _format(v, indent + 1) for k, v in obj.items()]
    return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"


def dumps(obj: Any) -> str:
    return _format(obj, 0) + "\n"


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, f"line {e.lineno} column {e.colno}", e.msg) from None


def _int(value: Any, source: str, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(source, where, f"expected an integer, got {value!r}")
    return value


def _list(value: Any, source: str, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(source, where, f"expected a list, got {type(value).__name__}")
    return value


def _object(value: Any, source: str, where: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError(source, where, f"expected an object, got {type(value).__name__}")
    return value


# matroids -------------------------------------------------------------------


def matroid_to_obj(m: Matroid) -> dict:
    return {"d": m.ground_size, "bases": [list(b) for b in m.bases]}


def matroid_from_obj(obj: Any, source: str = "<input>") -> Matroid:
    """Read ``{"d": .., "bases": [[..]..]}`` in any order.

    Cardinality and range problems raise the matroid errors; the exchange
    axiom is checked separately (see ``validate_matroid``).
    """
    obj = _object(obj, source, "top level")
    for key in ("d", "bases"):
        if key not in obj:
            raise ParseError(source, "top level", f"missing field {key!r}")
    d = _int(obj["d"], source, "field 'd'")
    if d < 0:
        raise ParseError(source, "field 'd'", "must be non-negative")
    bases = []
    for i, b in enumerate(_list(obj["bases"], source, "field 'bases'")):
        b = _list(b, source, f"field 'bases[{i}]'")
        bases.append([_int(e, source, f"field 'bases[{i}][{k}]'") for k, e in enumerate(b)])
    for i, b in enumerate(bases):
        if len(set(b)) != len(b):
            raise ParseError(source, f"field 'bases[{i}]'", "repeated element")
    if len({frozenset(b) for b in bases}) != len(bases):
        raise ParseError(source, "field 'bases'", "repeated basis")
    return Matroid.from_bases(d, bases)


def dump_matroid(m: Matroid) -> str:
    return dumps(matroid_to_obj(m))


def parse_matroid(text: str, source: str = "<input>") -> Matroid:
    return matroid_from_obj(loads(text, source), source)


def read_matroid(path: str) -> Matroid:
    with open(path, encoding="utf-8") as fh:
        return parse_matroid(fh.read(), path)


# monomials and binomial sets ------------------------------------------------


def monomial_to_obj(m: Monomial) -> dict[str, int]:
    return {str(v): e for v, e in m.items()}


def _var(name: Any, source: str, where: str) -> VariableId:
    if not isinstance(name, str):
        raise ParseError(source, where, f"variable names are strings, got {name!r}")
    try:
        return VariableId.parse(name)
    except ValueError as e:
        raise ParseError(source, where, str(e)) from None


def monomial_from_obj(obj: Any, source: str, where: str) -> Monomial:
    obj = _object(obj, source, where)
    exps = []
    for name, e in obj.items():
        e = _int(e, source, f"{where}.{name}")
        if e < 0:
            raise ParseError(source, f"{where}.{name}", "negative exponent")
        exps.append((_var(name, source, where), e))
    return Monomial(exps)


def canonical_elements(bset: BinomialSet, order: MonomialOrder | None = None) -> list[Binomial]:
    """Elements oriented and sorted by ``order`` (largest lead last), or by
    the order-free canonical form when no order is given."""
    if order is not None:
        return list(bset.sorted(order).elements)
    return sorted(bset.canonical_form(), key=lambda b: (_plain_key(b.lead), _plain_key(b.trail)))


def binomials_to_obj(bset: BinomialSet, order: MonomialOrder | None = None) -> dict:
    return {
        "ambient": [str(v) for v in sorted(bset.ambient)],
        "elements": [
            {"lead": monomial_to_obj(b.lead), "trail": monomial_to_obj(b.trail)}
            for b in canonical_elements(bset, order)
        ],
    }


def binomials_from_obj(obj: Any, source: str = "<input>") -> BinomialSet:
    obj = _object(obj, source, "top level")
    for key in ("ambient", "elements"):
        if key not in obj:
            raise ParseError(source, "top level", f"missing field {key!r}")
    ambient = [_var(v, source, f"field 'ambient[{i}]'") for i, v in enumerate(_list(obj["ambient"], source, "field 'ambient'"))]
    elems = []
    for i, e in enumerate(_list(obj["elements"], source, "field 'elements'")):
        e = _object(e, source, f"field 'elements[{i}]'")
        lead = monomial_from_obj(e.get("lead"), source, f"field 'elements[{i}].lead'")
        trail = monomial_from_obj(e.get("trail"), source, f"field 'elements[{i}].trail'")
        if lead == trail:
            raise ParseError(source, f"field 'elements[{i}]'", "lead and trail coincide")
        elems.append(Binomial(lead, trail))
    try:
        return BinomialSet(frozenset(ambient), tuple(elems))
    except KeyError as e:
        raise ParseError(source, "field 'elements'", str(e)) from None


def read_binomials(path: str) -> BinomialSet:
    with open(path, encoding="utf-8") as fh:
        return binomials_from_obj(loads(fh.read(), path), path)


# orders ---------------------------------------------------------------------


def order_to_obj(order: MonomialOrder) -> dict:
    return order.describe()


def weight_from_obj(obj: Any, variables: list[VariableId], source: str) -> dict[VariableId, int]:
    """A weight file is a list of integers (one per variable, in ranking
    order) or an object mapping variable names to integers (missing = 0)."""
    if isinstance(obj, list):
        if len(obj) != len(variables):
            raise ParseError(source, "top level", f"expected {len(variables)} weights, got {len(obj)}")
        w = {v: _int(x, source, f"entry {i}") for i, (v, x) in enumerate(zip(variables, obj))}
    else:
        obj = _object(obj, source, "top level")
        known = set(variables)
        w = {v: 0 for v in variables}
        for name, x in obj.items():
            v = _var(name, source, f"key {name!r}")
            if v not in known:
                raise ParseError(source, f"key {name!r}", "not a variable of this ring")
            w[v] = _int(x, source, f"key {name!r}")
    if any(x < 0 for x in w.values()):
        raise ParseError(source, "top level", "weights must be non-negative")
    return w


# matrices, witnesses, reports -----------------------------------------------


def _row_label(r: Any) -> str:
    if isinstance(r, tuple):
        return ":".join(map(str, r))
    return str(r)


def matrix_to_obj(mat: IntegerMatrix) -> dict:
    cols = sorted(mat.columns, key=lambda c: c[0])
    return {
        "rows": [_row_label(r) for r in mat.row_labels],
        "columns": [{"var": str(v), "entries": list(vec)} for v, vec in cols],
    }


def witnesses_to_obj(ws: Iterable[ExchangeWitness]) -> dict:
    return {"witnesses": [w.as_dict() for w in sorted(ws)]}


def construction_to_obj(c: Construction, verified: Mapping | None = None) -> dict:
    """The pipeline report for one construction.

    Variables keep their structured names (``x2_3``, ``z1_2_4``); ``map``
    sends each to its basis of the new matroid.
    """
    out = {
        "matroid": matroid_to_obj(c.matroid),
        "generators": binomials_to_obj(c.generators, c.order),
        "map": [{"var": str(v), "basis": sorted(c.basis_of[v])} for v in sorted(c.basis_of)],
    }
    if verified is not None:
        out["verified"] = {
            "generates": bool(verified["generates"]),
            "groebner": bool(verified["groebner"]),
            "order": verified["order"],
        }
        if verified.get("failure"):
            out["verified"]["failure"] = verified["failure"]
    else:
        out["order"] = order_to_obj(c.order)
    return out


__all__ = [
    "ParseError",
    "dumps",
    "loads",
    "matroid_to_obj",
    "matroid_from_obj",
    "dump_matroid",
    "parse_matroid",
    "read_matroid",
    "binomials_to_obj",
    "binomials_from_obj",
    "read_binomials",
    "order_to_obj",
    "weight_from_obj",
    "matrix_to_obj",
    "witnesses_to_obj",
    "construction_to_obj",
]
