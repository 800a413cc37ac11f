"""Command-line front end.

Exit status: 0 when the requested construction or check succeeded, 1 when a
check found a violation (the report says which), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import io
from .adj_mnd import Squiggle, squiggle_atomic, squiggle_compose, squiggle_to_chain, squiggle_validate
from .categories import check_adjunction, check_monad, homotopy_category, nerve
from .coherent_nerve import hc_nerve, verify_nerve_quasi
from .enriched import check_simplicial_computad
from .errors import HocohError
from .realization import compare_resolution_realization, realize
from .resolution import Resolution
from .simplicial import extend_bound, horn_report

USAGE_ERROR = 2


class InputError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"bound must be positive, got {n}")
    return n


def _load(path: str | None, what: str) -> Any:
    if path is None:
        raise InputError("missing-input", f"{what} file required")
    try:
        return io.load_json(path)
    except FileNotFoundError:
        raise InputError("missing-file", f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise InputError("malformed-json", f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _is_simplicial_category(data: Any) -> bool:
    return isinstance(data, dict) and "kind" in data


def _sset_arg(args) -> Any:
    """The simplicial set named by ``--in``, or the nerve of ``--cat``."""
    if args.cat:
        A = io.cat_from_json(_load(args.cat, "category"))
        return nerve(A, args.dim)
    return io.sset_from_json(_load(args.input, "simplicial set"))


def _scat_arg(args):
    if args.cat:
        return Resolution(io.cat_from_json(_load(args.cat, "category")), args.dim, args.len_bound)
    data = _load(args.input, "simplicial category")
    if not _is_simplicial_category(data):
        raise InputError("wrong-input", "expected a simplicial category with a 'kind' field")
    return io.simplicial_category_from_json(data, args.dim, args.len_bound, args.width_bound, args.size_bound)


def _squiggle_from(data: Any) -> Squiggle:
    try:
        return Squiggle(int(data["lines"]), tuple(int(h) for h in data["heights"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed-squiggle", f"squiggle needs 'lines' and 'heights': {exc!r}") from None


def squiggle_ascii(s: Squiggle) -> str:
    """Heights drawn top (``+`` region) to bottom (``-`` region), read right to left."""
    rows = []
    for h in range(s.lines + 1):
        line = 0 < h < s.lines
        fill = "-" if line else " "
        cells = ["o" if x == h else fill for x in s.heights]
        label = "+" if h == 0 else ("-" if h == s.lines else str(h))
        rows.append(f"{label:>2} " + fill.join(cells))
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# Verbs; each returns (status, report)


def cmd_nerve(args):
    A = io.cat_from_json(_load(args.cat or args.input, "category"))
    N = nerve(A, args.dim)
    out = io.sset_to_json(N)
    out["truncated"] = not N.meta["complete"]
    return 0, out


def cmd_resolve(args):
    A = io.cat_from_json(_load(args.cat or args.input, "category"))
    R = Resolution(A, args.dim, args.len_bound)
    out = io.simplicial_category_summary(R)
    out["len_bound"] = args.len_bound
    return 0, out


def cmd_realize(args):
    X = io.sset_from_json(_load(args.input, "simplicial set"))
    C = realize(X, args.dim, args.width_bound)
    out = io.simplicial_category_summary(C)
    out["width_bound"] = args.width_bound
    return 0, out


def cmd_hcnerve(args):
    S = _scat_arg(args)
    N = hc_nerve(S, args.dim)
    out = io.sset_to_json(N)
    out["truncated"] = bool(S.truncated or N.nondegenerate(args.dim))
    return 0, out


def _horn_json(report) -> dict:
    out = report.summary()
    out["entries"] = [{"n": e.n, "k": e.k, "horn": io.to_jsonable(e.horn), "fillers": e.fillers}
                      for e in report.entries]
    return out


def cmd_check(args):
    prop = args.property
    if prop in ("quasicat", "kan"):
        if args.input and _is_simplicial_category(_load(args.input, "input")) and prop == "quasicat":
            S = _scat_arg(args)
            q = verify_nerve_quasi(S, args.dim)
            out = q.summary()
            if q.horn is not None:
                out["horns"] = _horn_json(q.horn)
            out["truncated"] = True
            ok = q.precondition_ok and q.ok and q.reduction_agrees
            out["message"] = "all inner horns fillable" if ok else "coherent nerve check failed"
            return (0 if ok else 1), out
        X = _sset_arg(args)
        truncated = not X.meta.get("complete", False)
        if X.dim_bound < args.dim:
            X = extend_bound(X, args.dim)
        rep = horn_report(X, args.dim, inner=(prop == "quasicat"))
        out = _horn_json(rep)
        out["truncated"] = truncated
        which = "inner horns" if prop == "quasicat" else "horns"
        if rep.verdict:
            out["message"] = f"all {which} fillable" + (", fillers unique" if rep.unique else "")
        else:
            out["message"] = f"{len(rep.failures())} {which} have no filler"
        return (0 if rep.verdict else 1), out
    if prop == "computad":
        C = _scat_arg(args)
        rep = check_simplicial_computad(C, args.dim if args.dim <= C.dim_bound else None)
        out = rep.summary()
        out["truncated"] = bool(C.truncated)
        return (0 if rep.ok else 1), out
    if prop == "monad":
        M = io.monad_from_json(_load(args.input, "monad"))
        bad = check_monad(M)
        return (0 if not bad else 1), {"valid": not bad, "violations": bad, "truncated": False}
    if prop == "adjunction":
        J = io.adjunction_from_json(_load(args.input, "adjunction"))
        bad = check_adjunction(J)
        return (0 if not bad else 1), {"valid": not bad, "violations": bad, "truncated": False}
    raise InputError("usage", f"unknown property {prop!r}")


def cmd_ho(args):
    X = _sset_arg(args)
    P = homotopy_category(X)
    out = {
        "objects": io.to_jsonable(list(P.objects)),
        "generators": [{"id": io.to_jsonable(g), "src": io.to_jsonable(s), "tgt": io.to_jsonable(t)}
                       for g, (s, t) in sorted(P.generators.items(), key=lambda kv: repr(kv[0]))],
        "relations": [[io.to_jsonable(lhs), io.to_jsonable(rhs)] for lhs, rhs in P.rules],
        "confluent": P.is_confluent(),
    }
    A = P.to_category(args.len_bound)
    out["finite"] = A is not None
    out["truncated"] = A is None
    if A is not None:
        out["category"] = io.cat_to_json(A)
    return 0, out


def cmd_squiggle(args):
    s = _squiggle_from(_load(args.input, "squiggle"))
    if args.compose:
        s = squiggle_compose(s, _squiggle_from(_load(args.compose, "squiggle")))
    squiggle_validate(s)
    out = {
        "squiggle": s.to_json(),
        "chain": squiggle_to_chain(s).to_json(),
        "atomic_adj": squiggle_atomic(s, "adj"),
        "atomic_mnd": squiggle_atomic(s, "mnd") if s.kind == "++" else None,
        "truncated": False,
    }
    if args.format == "text":
        out["ascii"] = squiggle_ascii(s)
    return 0, out


def cmd_compare(args):
    if args.what != "resolution-realization":
        raise InputError("usage", f"unknown comparison {args.what!r}")
    A = io.cat_from_json(_load(args.cat or args.input, "category"))
    rep = compare_resolution_realization(A, args.dim, args.len_bound)
    out = rep.summary()
    out["truncated"] = bool(rep.functor.source.truncated)
    witness = rep.witness_json()
    if args.witness:
        with open(args.witness, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(witness, indent=2, ensure_ascii=False, sort_keys=True) + "\n")
        out["witness_file"] = args.witness
    else:
        out["witness"] = witness
    return (0 if rep.ok else 1), out


COMMANDS = {
    "nerve": cmd_nerve, "resolve": cmd_resolve, "realize": cmd_realize, "hcnerve": cmd_hcnerve,
    "check": cmd_check, "ho": cmd_ho, "squiggle": cmd_squiggle, "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="input JSON file")
    common.add_argument("--cat", help="category JSON file")
    common.add_argument("--dim", type=_positive, default=3)
    common.add_argument("--len-bound", type=_positive, default=4)
    common.add_argument("--width-bound", type=_positive, default=4)
    common.add_argument("--size-bound", type=_positive, default=4)
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="hocoh", description="Homotopy coherent nerves and resolutions.")
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("nerve", parents=[common], help="nerve of a finite category")
    sub.add_parser("resolve", parents=[common], help="free resolution of a category")
    sub.add_parser("realize", parents=[common], help="coherent realization of a simplicial set")
    sub.add_parser("hcnerve", parents=[common], help="homotopy coherent nerve of a simplicial category")
    c = sub.add_parser("check", parents=[common], help="verify a property")
    c.add_argument("property", choices=("quasicat", "kan", "computad", "monad", "adjunction"))
    sub.add_parser("ho", parents=[common], help="homotopy category of a simplicial set")
    s = sub.add_parser("squiggle", parents=[common], help="validate and translate a squiggle")
    s.add_argument("--compose", help="second squiggle, composed on the right")
    cmp_ = sub.add_parser("compare", parents=[common], help="compare two constructions")
    cmp_.add_argument("what", choices=("resolution-realization",))
    cmp_.add_argument("--witness", help="write the isomorphism witness to this file")
    return p


def _text(report: dict) -> str:
    lines = []
    if "message" in report:
        lines.append(report["message"])
    for key, value in sorted(report.items()):
        if key in ("message", "ascii"):
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, ensure_ascii=False)
            if len(value) > 120:
                value = value[:117] + "..."
        lines.append(f"{key}: {value}")
    if "ascii" in report:
        lines.append(report["ascii"])
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        status, report = COMMANDS[args.verb](args)
    except (HocohError, InputError) as exc:
        diag = {"error": exc.code, "message": str(exc)}
        print(json.dumps(diag, sort_keys=True, ensure_ascii=False), file=sys.stderr)
        return USAGE_ERROR
    report = dict(report, status="ok" if status == 0 else "violation")
    if args.format == "json":
        print(json.dumps(io.to_jsonable(report), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
