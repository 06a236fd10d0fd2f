"""Batch front end.

    weakchoice check poset FILE
    weakchoice check mess FILE            (JSON mess or DIMACS .cnf)
    weakchoice check antichains POSET FAMILY
    weakchoice check dense POSET DENSE
    weakchoice solve transversal POSET FAMILY
    weakchoice solve filter POSET [DENSE]
    weakchoice solve consistent MESS
    weakchoice reduce to-mess POSET FAMILY
    weakchoice reduce to-poset MESS
    weakchoice demo order|choice|koenig|s-choice|hahn-banach [FILE] [--set ...] [--family ...]
    weakchoice oracle transversal|filter|consistent|s-choice FILES...

Every command prints one report; exit status is 0 for sat/true, 1 for
unsat/false and 2 for errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__, oracles
from . import serialize as ser
from .errors import CoverageGap, InvalidFamily, NotRestrictionClosed, NotDense, ParseError, Unsatisfiable, WeakChoiceError
from .genericity import (
    EXHAUSTIVE_CAP,
    find_generic_filter,
    fully_generic_filters,
)
from .mess import MATERIALIZE_CAP, BinaryMess, mess_from_cnf, parse_dimacs
from .reduction import (
    AntichainFamily,
    centred_witness,
    is_centred,
    mess_from_poset,
    poset_from_mess,
    solve_two_linked_generic,
)

EXIT = {"sat": 0, "true": 0, "unsat": 1, "false": 1, "error": 2}

SUBCOMMANDS = {
    "check": ("poset", "mess", "antichains", "dense"),
    "solve": ("transversal", "filter", "consistent"),
    "reduce": ("to-mess", "to-poset"),
    "demo": ("order", "choice", "koenig", "s-choice", "hahn-banach"),
    "oracle": ("transversal", "filter", "consistent", "s-choice"),
}


class Report:
    def __init__(self, status: str, payload: dict):
        assert status in EXIT
        self.status = status
        self.payload = payload

    def to_json(self, command: str, timing: float | None) -> dict:
        out = {"command": command, "status": self.status, "payload": self.payload, "version": __version__}
        if timing is not None:
            out["timing_ms"] = round(timing * 1000, 3)
        return out


# -- input --------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def _load_json(path: str):
    text = _read(path)
    try:
        return ser.loads(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.message}", exc.line, exc.column) from None


def _is_dimacs(path: str, text: str) -> bool:
    if path.endswith(".cnf"):
        return True
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    return first.startswith(("c", "p"))


def _load_mess(path: str, validate: bool, cap: int | None) -> BinaryMess:
    text = _read(path)
    if _is_dimacs(path, text):
        kw = {"validate_cap": cap} if cap is not None else {}
        return mess_from_cnf(parse_dimacs(text), validate=validate, **kw)
    try:
        return ser.mess_from_json(ser.loads(text))
    except ParseError as exc:
        if exc.line is None:
            raise
        raise ParseError(f"{path}: {exc.message}", exc.line, exc.column) from None


def _need(files: list, count: int, usage: str) -> list:
    if len(files) < count:
        raise ParseError(f"usage: {usage}")
    return files


def _token(t: str):
    t = t.strip()
    try:
        return int(t)
    except ValueError:
        return t


def _split_set(text: str) -> list:
    return [_token(t) for t in text.split(",") if t.strip()]


def _split_family(text: str) -> list[list]:
    return [_split_set(block) for block in text.split(";")]


# -- verbs --------------------------------------------------------------------


def _check(sub: str, files: list, args) -> Report:
    if sub == "poset":
        (path,) = _need(files, 1, "check poset FILE")[:1]
        order = ser.order_from_json(_load_json(path))
        return Report("true", {
            "kind": order.kind,
            "size": len(order),
            "minimal": ser.subset_to_json(order.minimal_elements()),
            "semi_separative": order.is_semi_separative(),
        })
    if sub == "mess":
        (path,) = _need(files, 1, "check mess FILE")[:1]
        try:
            mess = _load_mess(path, args.validate, args.cap)
        except (CoverageGap, NotRestrictionClosed) as exc:
            return Report("false", {"mess": False, "reason": str(exc)})
        gap = mess.coverage_gap()
        missing = mess.missing_restriction() if mess.is_extensional else None
        ok = gap is None and missing is None
        payload = {"ground": list(mess.ground), "coverage_gap": None if gap is None else list(gap)}
        if mess.is_extensional:
            payload["members"] = len(mess.members())
        return Report("true" if ok else "false", payload)
    if sub == "antichains":
        order_path, fam_path = _need(files, 2, "check antichains POSET FAMILY")[:2]
        order = ser.order_from_json(_load_json(order_path))
        raw = _load_json(fam_path)
        try:
            family = ser.antichain_family_from_json(order, raw)
        except InvalidFamily as exc:
            return Report("false", {"antichains": False, "reason": str(exc)})
        payload = {"antichains": True, "centred": is_centred(order, family)}
        if payload["centred"]:
            witness, selection = centred_witness(order, family)
            payload["witness"] = ser.name_of(witness)
            payload["selection"] = [ser.name_of(x) for x in selection]
        return Report("true", payload)
    if sub == "dense":
        order_path, dense_path = _need(files, 2, "check dense POSET DENSE")[:2]
        order = ser.order_from_json(_load_json(order_path))
        raw = _load_json(dense_path)
        try:
            ser.dense_family_from_json(order, raw)
        except NotDense as exc:
            return Report("false", {"dense": False, "reason": str(exc)})
        return Report("true", {"dense": True})
    raise AssertionError(sub)


def _solve_transversal(files: list) -> tuple:
    order_path, fam_path = _need(files, 2, "solve transversal POSET FAMILY")[:2]
    order = ser.order_from_json(_load_json(order_path))
    family = ser.antichain_family_from_json(order, _load_json(fam_path))
    return order, family


def _solve(sub: str, files: list, args) -> Report:
    if sub == "transversal":
        order, family = _solve_transversal(files)
        try:
            g = solve_two_linked_generic(order, family)
        except Unsatisfiable as exc:
            return Report("unsat", ser.unsat_to_json(exc.conflict))
        g.validate(family)
        return Report("sat", ser.solution_to_json(g))
    if sub == "filter":
        _need(files, 1, "solve filter POSET [DENSE]")
        order = ser.order_from_json(_load_json(files[0]))
        if len(files) == 1:
            cap = args.cap if args.cap is not None else EXHAUSTIVE_CAP
            found = fully_generic_filters(order, naive=args.naive, cap=cap)
            return Report("sat" if found else "unsat", {"filters": [ser.subset_to_json(g) for g in found]})
        family = ser.dense_family_from_json(order, _load_json(files[1]))
        g = find_generic_filter(order, family)
        g.validate(family)
        return Report("sat", {"status": "sat", **ser.filter_to_json(g)})
    if sub == "consistent":
        (path,) = _need(files, 1, "solve consistent MESS")[:1]
        mess = _load_mess(path, args.validate, args.cap)
        cap = args.cap if args.cap is not None else MATERIALIZE_CAP
        try:
            fs = mess.consistent_functions(cap=cap)
        except CoverageGap as exc:
            return Report("unsat", {"functions": [], "coverage_gap": list(exc.domain)})
        return Report("sat" if fs else "unsat", {"functions": [ser.function_to_json(f, mess.ground) for f in fs]})
    raise AssertionError(sub)


def _reduce(sub: str, files: list, args) -> Report:
    if sub == "to-mess":
        order, family = _solve_transversal(_need(files, 2, "reduce to-mess POSET FAMILY"))
        mess = mess_from_poset(order, family)
        if args.cap is not None:
            mess.materialize_cap = args.cap
        return Report("true", ser.mess_to_json(mess))
    if sub == "to-poset":
        (path,) = _need(files, 1, "reduce to-poset MESS")[:1]
        mess = _load_mess(path, args.validate, args.cap)
        order, family = poset_from_mess(mess)
        return Report("true", {
            "poset": ser.order_to_json(order, mess.ground),
            "antichains": [[ser.name_of(x, mess.ground) for x in a.labels] for a in family],
            "domains": [list(dom) for dom in family.names],
        })
    raise AssertionError(sub)


def _demo(sub: str, files: list, args) -> Report:
    from .applications import choice, hahn_banach, ordering

    if sub == "order":
        ground = _split_set(args.set) if args.set is not None else ser.ordering_from_json(
            _load_json(_need(files, 1, "demo order --set a,b,c | FILE")[0])
        )
        kw = {"cap": args.cap} if args.cap is not None else {}
        result = ordering.ordering_principle(ground, all_subsets=args.all_subsets, **kw)
        return Report("true", {"order": list(result), "text": " < ".join(map(str, result))})
    if sub in ("choice", "koenig"):
        if args.family is not None:
            family = _split_family(args.family)
        else:
            family = ser._field(_load_json(_need(files, 1, f"demo {sub} --family 'a,b;c' | FILE")[0]), "family", list)
        fn = choice.choice_function_poset if sub == "choice" else choice.koenig_choice
        kw = {"cap": args.cap} if args.cap is not None else {}
        return Report("true", {"choice": list(fn(family, **kw))})
    if sub == "s-choice":
        inst = ser.s_consistent_from_json(_load_json(_need(files, 1, "demo s-choice FILE")[0]))
        kw = {"cap": args.cap} if args.cap is not None else {}
        try:
            f = choice.s_consistent_choice(inst, all_subsets=args.all_subsets, **kw)
        except Unsatisfiable as exc:
            return Report("unsat", {"failed_domain": list(exc.witness or ())})
        return Report("sat", {"choice": {str(i): v for i, v in f.items()}})
    if sub == "hahn-banach":
        inst = ser.hahn_banach_from_json(_load_json(_need(files, 1, "demo hahn-banach FILE")[0]))
        kw = {"enumerate_cap": args.cap} if args.cap is not None else {}
        enc = hahn_banach.hahn_banach_solve(inst, depth=args.depth, **kw)
        return Report("true", ser.enclosure_to_json(enc))
    raise AssertionError(sub)


def _oracle(sub: str, files: list, args) -> Report:
    cap = args.cap if args.cap is not None else oracles.BRUTE_CAP
    if sub == "transversal":
        order, family = _solve_transversal(files)
        try:
            g = solve_two_linked_generic(order, family)
            solver = "sat"
        except Unsatisfiable:
            g, solver = None, "unsat"
        brute = oracles.generic_two_linked_sets(order, list(family), cap=cap)
        oracle = "sat" if brute else "unsat"
        agree = solver == oracle and (g is None or g.members.mask in brute)
        return Report("true" if agree else "false", {"solver": solver, "oracle": oracle, "oracle_solutions": len(brute)})
    if sub == "filter":
        _need(files, 1, "oracle filter POSET [DENSE]")
        order = ser.order_from_json(_load_json(files[0]))
        if len(files) == 1:
            found = sorted(g.mask for g in fully_generic_filters(order, cap=cap))
            brute = sorted(oracles.generic_filters(order, cap=cap))
            agree = found == brute
            return Report("true" if agree else "false", {"solver": len(found), "oracle": len(brute)})
        family = ser.dense_family_from_json(order, _load_json(files[1]))
        g = find_generic_filter(order, family)
        brute = oracles.generic_filters(order, list(family), cap=cap)
        agree = g.members.mask in brute
        return Report("true" if agree else "false", {"solver": ser.subset_to_json(g.members), "oracle_solutions": len(brute)})
    if sub == "consistent":
        (path,) = _need(files, 1, "oracle consistent MESS")[:1]
        mess = _load_mess(path, args.validate, args.cap)
        fs = {f for f in mess.consistent_functions()}
        brute = set(oracles.consistent_functions(mess))
        agree = fs == brute
        return Report("true" if agree else "false", {"solver": len(fs), "oracle": len(brute)})
    if sub == "s-choice":
        from .applications import choice

        inst = ser.s_consistent_from_json(_load_json(_need(files, 1, "oracle s-choice FILE")[0]))
        brute = oracles.s_consistent_choices(inst.sets, inst.relation)
        try:
            f = choice.s_consistent_choice(inst, all_subsets=args.all_subsets)
        except Unsatisfiable:
            f = None
        agree = (f is None) == (not brute) and (f is None or f in brute)
        return Report("true" if agree else "false", {"solver": "unsat" if f is None else "sat", "oracle_solutions": len(brute)})
    raise AssertionError(sub)


VERBS = {"check": _check, "solve": _solve, "reduce": _reduce, "demo": _demo, "oracle": _oracle}


# -- plumbing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakchoice", description="Finite genericity and binary-mess workbench.")
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("subcommand")
    parser.add_argument("files", nargs="*")
    parser.add_argument("--all-subsets", action="store_true", help="impose an antichain for every finite subset")
    parser.add_argument("--naive", action="store_true", help="check filters against every dense subset")
    parser.add_argument("--validate", action="store_true", help="eagerly validate CNF coverage")
    parser.add_argument("--depth", type=int, default=None, help="depth for hahn-banach")
    parser.add_argument("--cap", type=int, default=None, help="size cap for exhaustive steps")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--no-timing", action="store_true", help="omit timing so output is byte-stable")
    parser.add_argument("--set", default=None, help="comma-separated elements for demo order")
    parser.add_argument("--family", default=None, help="sets separated by ';', elements by ','")
    parser.add_argument("--version", action="version", version=f"weakchoice {__version__}")
    return parser


def _error_payload(exc: BaseException) -> dict:
    payload = {"error": type(exc).__name__, "message": str(exc.args[0]) if exc.args else str(exc)}
    if isinstance(exc, ParseError):
        payload["message"] = exc.message
        payload["line"] = exc.line
        payload["column"] = exc.column
    return payload


def _text(doc: dict) -> str:
    lines = [f"{doc['command']}: {doc['status']}"]
    for key, value in doc["payload"].items():
        lines.append(f"  {key}: {value}")
    if "timing_ms" in doc:
        lines.append(f"  time: {doc['timing_ms']} ms")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None) -> tuple[dict, int]:
    """Execute one command; returns the report document and the exit code."""
    args = build_parser().parse_args(argv)
    command = f"{args.verb} {args.subcommand}"
    start = time.perf_counter()
    try:
        if args.subcommand not in SUBCOMMANDS[args.verb]:
            raise ParseError(
                f"unknown subcommand {args.subcommand!r} for {args.verb}; expected one of {', '.join(SUBCOMMANDS[args.verb])}"
            )
        report = VERBS[args.verb](args.subcommand, list(args.files), args)
    except (WeakChoiceError, RecursionError) as exc:
        report = Report("error", _error_payload(exc))
    timing = None if args.no_timing else time.perf_counter() - start
    doc = report.to_json(command, timing)
    return doc, EXIT[report.status]


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    doc, code = run(argv)
    out = ser.dumps(doc) if args.format == "json" else _text(doc)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
