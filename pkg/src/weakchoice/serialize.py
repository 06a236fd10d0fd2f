"""JSON wire formats for every domain type.

Readers take already-decoded JSON values (use :func:`loads` for text with
position-aware errors); writers return plain JSON values with a fixed key
order.  Rationals are written as integers when whole and as ``"p/q"`` in
lowest terms otherwise.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import ParseError
from .genericity import DenseFamily, GenericFilter
from .mess import BinaryMess, PartialBinaryFunction, build_mess
from .order import ElementSubset, FinitePreorder, build_order
from .reduction import AntichainFamily, LinkedGenericSet

# -- text ---------------------------------------------------------------------


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def dumps(value: Any) -> str:
    return json.dumps(value, indent=2, ensure_ascii=False) + "\n"


def _expect(obj, kind, what: str):
    if not isinstance(obj, kind):
        raise ParseError(f"{what}: expected {getattr(kind, '__name__', kind)}, got {type(obj).__name__}")
    return obj


def _field(obj: Mapping, key: str, kind=None, default=...):
    _expect(obj, dict, "document")
    if key not in obj:
        if default is ...:
            raise ParseError(f"missing field {key!r}")
        return default
    return obj[key] if kind is None else _expect(obj[key], kind, key)


# -- rationals ----------------------------------------------------------------


def parse_rational(value) -> Fraction:
    """An integer or a ``"p/q"`` / ``"n"`` string.  Floats are refused so that
    nothing inexact can enter."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"rational expected (integer or \"p/q\" string), got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {value!r}") from None


def format_rational(q) -> int | str:
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _vector(values, what: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in _expect(values, list, what))


# -- element names ------------------------------------------------------------


def name_of(label, ground: Sequence | None = None):
    """A JSON-friendly name: strings and integers pass through; partial
    binary functions become ``"{x=1,y=0}"``; tuples become ``"(a,b)"``."""
    if isinstance(label, bool):
        return str(label)
    if isinstance(label, (str, int)):
        return label
    if isinstance(label, PartialBinaryFunction):
        keys = list(label)
        if ground is not None:
            keys.sort(key=list(ground).index)
        return "{" + ",".join(f"{k}={label[k]}" for k in keys) + "}"
    if isinstance(label, tuple):
        return "(" + ",".join(str(name_of(x, ground)) for x in label) + ")"
    return str(label)


def _names(order: FinitePreorder, subset, ground=None) -> list:
    return [name_of(x, ground) for x in order.subset(subset).labels]


def _resolve(order: FinitePreorder, names, what: str) -> ElementSubset:
    _expect(names, list, what)
    lookup = {name_of(x): x for x in order.labels}
    out = []
    for n in names:
        if isinstance(n, list):
            raise ParseError(f"{what}: element names must be strings or integers")
        if n not in lookup:
            raise ParseError(f"{what}: unknown element {n!r}")
        out.append(lookup[n])
    return order.subset(out)


# -- orders -------------------------------------------------------------------


def order_to_json(order: FinitePreorder, ground=None) -> dict:
    return {
        "kind": order.kind,
        "elements": [name_of(x, ground) for x in order.labels],
        "leq": [[name_of(x, ground), name_of(y, ground)] for x, y in order.pairs()],
    }


def order_from_json(obj) -> FinitePreorder:
    kind = _field(obj, "kind", str, "poset")
    if kind not in ("poset", "preorder"):
        raise ParseError(f"kind must be 'poset' or 'preorder', got {kind!r}")
    elements = _field(obj, "elements", list)
    for e in elements:
        if isinstance(e, bool) or not isinstance(e, (str, int)):
            raise ParseError(f"element names must be strings or integers, got {e!r}")
    pairs = []
    for pair in _field(obj, "leq", list, []):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"leq entries are [x, y] pairs, got {pair!r}")
        pairs.append(tuple(pair))
    return build_order(elements, pairs, kind=kind)


def subset_to_json(subset: ElementSubset) -> list:
    return [name_of(x) for x in subset.labels]


def dense_family_from_json(order: FinitePreorder, obj) -> DenseFamily:
    dense = _field(obj, "dense", list)
    return DenseFamily(order, tuple(_resolve(order, d, f"dense[{i}]") for i, d in enumerate(dense)))


def dense_family_to_json(family: DenseFamily) -> dict:
    return {"dense": [subset_to_json(d) for d in family]}


def antichain_family_from_json(order: FinitePreorder, obj) -> AntichainFamily:
    antichains = _field(obj, "antichains", list)
    return AntichainFamily(
        order, tuple(_resolve(order, a, f"antichains[{i}]") for i, a in enumerate(antichains))
    )


def antichain_family_to_json(family: AntichainFamily, ground=None) -> dict:
    out = {"antichains": [[name_of(x, ground) for x in a.labels] for a in family]}
    if family.names:
        out["names"] = [name_of(n, ground) if not isinstance(n, tuple) else list(n) for n in family.names]
    return out


def filter_to_json(g: GenericFilter) -> dict:
    return {
        "members": subset_to_json(g.members),
        "certificates": [{"dense_index": i, "witness": name_of(w)} for i, w in g.certificates],
    }


def solution_to_json(g: LinkedGenericSet, ground=None) -> dict:
    return {
        "status": "sat",
        "members": [name_of(x, ground) for x in g.members.labels],
        "certificates": [{"antichain_index": i, "witness": name_of(w, ground)} for i, w in g.certificates],
    }


def unsat_to_json(conflict: Sequence[int]) -> dict:
    return {"status": "unsat", "members": [], "certificates": [], "conflict": list(conflict)}


# -- messes -------------------------------------------------------------------


def function_to_json(f: PartialBinaryFunction, ground: Sequence) -> dict:
    return {str(x): f[x] for x in ground if x in f}


def function_from_json(obj, ground: Sequence, what: str = "member") -> PartialBinaryFunction:
    _expect(obj, dict, what)
    by_name = {str(x): x for x in ground}
    values = {}
    for key, bit in obj.items():
        if key not in by_name:
            raise ParseError(f"{what}: {key!r} is not in the ground set")
        if isinstance(bit, bool) or bit not in (0, 1):
            raise ParseError(f"{what}: value for {key!r} must be 0 or 1")
        values[by_name[key]] = bit
    return PartialBinaryFunction(values)


def mess_to_json(mess: BinaryMess) -> dict:
    return {
        "ground": list(mess.ground),
        "members": [function_to_json(m, mess.ground) for m in mess.members()],
        "close": True,
    }


def mess_from_json(obj) -> BinaryMess:
    ground = _field(obj, "ground", list)
    for x in ground:
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            raise ParseError(f"ground labels must be strings or integers, got {x!r}")
    members = [function_from_json(m, ground, f"members[{i}]") for i, m in enumerate(_field(obj, "members", list))]
    close = _field(obj, "close", bool, True)
    return build_mess(ground, members, close=close)


# -- application instances ----------------------------------------------------


def ordering_from_json(obj) -> list:
    return list(_field(obj, "set", list))


def ordering_to_json(ground: Sequence) -> dict:
    return {"set": list(ground)}


def s_consistent_from_json(obj):
    from .applications.choice import SConsistentInstance

    sets = _field(obj, "sets", dict)
    relation = []
    for pair in _field(obj, "relation", list, []):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"relation entries are [u, v] pairs, got {pair!r}")
        relation.append(tuple(pair))
    return SConsistentInstance({i: list(_expect(v, list, f"sets[{i}]")) for i, v in sets.items()}, relation)


def s_consistent_to_json(inst) -> dict:
    pairs = sorted({tuple(sorted(p, key=str)) for p in inst.relation}, key=lambda p: (str(p[0]), str(p[1])))
    return {"sets": {str(i): list(v) for i, v in inst.sets.items()}, "relation": [list(p) for p in pairs]}


def hahn_banach_from_json(obj):
    from .applications.hahn_banach import HahnBanachInstance

    dim = _field(obj, "dim", int)
    sums = []
    for t in _field(obj, "sums", list, []):
        if not isinstance(t, list) or len(t) != 3 or not all(isinstance(i, int) for i in t):
            raise ParseError(f"sums entries are [i, j, k] index triples, got {t!r}")
        sums.append(tuple(t))
    scalings = []
    for t in _field(obj, "scalings", list, []):
        if not isinstance(t, list) or len(t) != 3:
            raise ParseError(f"scalings entries are [r, i, j], got {t!r}")
        scalings.append((parse_rational(t[0]), t[1], t[2]))
    return HahnBanachInstance(
        dim=dim,
        forms=tuple(_vector(c, "forms") for c in _field(obj, "forms", list)),
        subspace_basis=tuple(_vector(b, "subspace_basis") for b in _field(obj, "subspace_basis", list, [])),
        f_values=_vector(_field(obj, "f_values", list, []), "f_values"),
        tracked=tuple(_vector(x, "tracked") for x in _field(obj, "tracked", list)),
        depth=_field(obj, "depth", int, 0),
        sums=tuple(sums),
        scalings=tuple(scalings),
    )


def _vec_json(v) -> list:
    return [format_rational(a) for a in v]


def hahn_banach_to_json(inst) -> dict:
    return {
        "dim": inst.dim,
        "forms": [_vec_json(c) for c in inst.forms],
        "subspace_basis": [_vec_json(b) for b in inst.subspace_basis],
        "f_values": _vec_json(inst.f_values),
        "tracked": [_vec_json(x) for x in inst.tracked],
        "sums": [list(t) for t in inst.sums],
        "scalings": [[format_rational(r), i, j] for r, i, j in inst.scalings],
        "depth": inst.depth,
    }


def interval_to_json(g) -> dict:
    return {"depth": g.n, "index": g.k, "lo": format_rational(g.lo), "hi": format_rational(g.hi)}


def enclosure_to_json(enc) -> dict:
    return {
        "depth": enc.depth,
        "enclosures": [
            {
                "vector": _vec_json(x),
                "base": [format_rational(g.a), format_rational(g.b)],
                "interval": interval_to_json(g),
                "width": format_rational(g.width),
                "value": format_rational(enc.extension(x)),
            }
            for x, g in zip(enc.instance.tracked, enc.intervals)
        ],
    }
