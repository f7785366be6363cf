"""Command-line interface: ``loopkit <command> ...``.

Exit codes: 0 success or true verdict, 1 false verdict, 2 usage error,
3 input format error, 4 budget exceeded.
"""

import argparse
import contextlib
import io
import json
import os
import sys
from dataclasses import dataclass

from .core import INAPPLICABLE, MAX_ORDER, load, write_stream, write_table
from .enumerate import GenerationSpec, canonical_key, generate, key_text
from .errors import (
    BudgetExceeded,
    IdentitySyntaxError,
    LoopError,
    NoTwoSidedInverse,
    TableFormatError,
    UnknownName,
)
from .identities import holds, parse_identity
from .morphisms import autotopism_group, isotope, principal_isotope, read_triples, write_triples
from .structure import structure_report
from .theorems import DEFAULT_REPORT, PROPERTIES, format_witness, hunt_osborn, property_report, proposition_suite, suite_catalog

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_FORMAT, EXIT_BUDGET = 0, 1, 2, 3, 4
WORKERS_ENV = "LOOPKIT_WORKERS"


@dataclass
class CliConfig:
    max_order: int = MAX_ORDER
    autotopism_budget: int = 8
    search_budget: int = 8
    workers: int = 1
    output_format: str = "text"


class UsageError(Exception):
    pass


# --- formatting ----------------------------------------------------------------------


def _value(v):
    if hasattr(v, "verdict"):
        v = v.verdict
    if v is INAPPLICABLE:
        return "inapplicable"
    return v


def _text(v):
    v = _value(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return "[" + " ".join(str(x) for x in v) + "]"
    return str(v)


def format_report(report, fmt="text"):
    """Render a name -> value mapping as ``name: value`` lines or one JSON object."""
    if not report:
        return ""
    if fmt == "json":
        return json.dumps({k: _value(v) for k, v in report.items()}) + "\n"
    return "".join(f"{k}: {_text(v)}\n" for k, v in report.items())


def _records(records, fmt):
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in records)
    raise ValueError(fmt)


# --- commands --------------------------------------------------------------------------


def _load(cfg, source):
    try:
        return load(source, max_order=cfg.max_order)
    except UnknownName as exc:
        raise TableFormatError(str(exc)) from None
    except OSError as exc:
        raise TableFormatError(f"cannot read {source}: {exc.strerror}") from None


def _split_names(text):
    return [p.strip() for p in text.split(",") if p.strip()]


def cmd_check(cfg, args, out):
    L = _load(cfg, args.table)
    names = _split_names(args.props) if args.props else list(DEFAULT_REPORT)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise UsageError(f"unknown property {unknown[0]!r}; valid names: " + ", ".join(PROPERTIES))
    report = property_report(L, names)
    out.write(format_report(report, cfg.output_format))
    verdicts = [v.verdict for v in report.values() if isinstance(v.verdict, bool) or v.verdict is INAPPLICABLE]
    return EXIT_OK if all(v is True for v in verdicts) else EXIT_FALSE


def cmd_identity(cfg, args, out):
    L = _load(cfg, args.table)
    try:
        ident = parse_identity(args.identity)
    except IdentitySyntaxError as exc:
        raise UsageError(f"identity syntax: {exc}") from None
    try:
        ok, cex = holds(L, ident)
    except NoTwoSidedInverse as exc:
        if cfg.output_format == "json":
            out.write(_records([{"identity": str(ident), "verdict": "inapplicable", "witness": None}], "json"))
        else:
            out.write(f"inapplicable: {exc}\n")
        return EXIT_FALSE
    if cfg.output_format == "json":
        out.write(_records([{"identity": str(ident), "verdict": ok, "witness": cex}], "json"))
    elif ok:
        out.write("holds\n")
    else:
        out.write(f"fails at {format_witness(cex)}\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_structure(cfg, args, out):
    L = _load(cfg, args.table)
    out.write(format_report(dict(structure_report(L).items()), cfg.output_format))
    return EXIT_OK


def cmd_autotopisms(cfg, args, out):
    L = _load(cfg, args.table)
    budget = args.budget or cfg.autotopism_budget
    if args.count_only:
        count = autotopism_group(L, budget=budget, count_only=True)
        out.write(format_report({"autotopisms": count}, cfg.output_format))
        return EXIT_OK
    triples = autotopism_group(L, budget=budget)
    if cfg.output_format == "json":
        out.write(_records([{"U": list(t.U), "V": list(t.V), "W": list(t.W)} for t in triples], "json"))
    else:
        out.write(write_triples(triples))
    return EXIT_OK


def _pair(text):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--principal expects a,b; got {text!r}") from None
    return a, b


def cmd_isotope(cfg, args, out):
    L = _load(cfg, args.table)
    if args.principal:
        a, b = _pair(args.principal)
        if not (0 <= a < L.order and 0 <= b < L.order):
            raise UsageError(f"elements must lie in 0..{L.order - 1}")
        grid, is_loop = principal_isotope(L, a, b).table, True
    else:
        try:
            with open(args.triple) as fh:
                triples = read_triples(fh.read())
        except OSError as exc:
            raise TableFormatError(f"cannot read {args.triple}: {exc.strerror}") from None
        if len(triples) != 1:
            raise TableFormatError(f"expected one triple, found {len(triples)}")
        t = triples[0]
        grid, is_loop = isotope(L, t.U, t.V, t.W)
    if cfg.output_format == "json":
        out.write(_records([{"is_loop": is_loop, "table": [[int(v) for v in row] for row in grid]}], "json"))
    else:
        n = len(grid)
        out.write(f"{n}\n" + "".join(" ".join(str(int(v)) for v in row) + "\n" for row in grid))
    if not is_loop:
        print("result is a quasigroup without identity", file=sys.stderr)
        return EXIT_FALSE
    return EXIT_OK


def cmd_search(cfg, args, out):
    constraints = list(args.identity or []) + list(args.prop or [])
    spec = GenerationSpec(args.order, constraints, limit=args.limit, up_to_isomorphism=args.up_to_iso)
    try:
        loops = list(generate(spec, budget=cfg.search_budget))
    except IdentitySyntaxError as exc:
        raise UsageError(f"identity syntax: {exc}") from None
    except UnknownName as exc:
        raise UsageError(str(exc)) from None
    if cfg.output_format == "json":
        out.write(_records([{"order": L.order, "table": L.table.tolist()} for L in loops], "json"))
    else:
        out.write(write_stream(loops))
    return EXIT_OK


def cmd_verify(cfg, args, out):
    if args.max_order > cfg.search_budget:
        raise BudgetExceeded(args.max_order, cfg.search_budget)
    results = proposition_suite(suite_catalog(args.max_order))
    if cfg.output_format == "json":
        recs = []
        for r in results:
            rec = {"id": r.id, "status": "PASS" if r.passed else "FAIL", "tested": r.tested, "vacuous": r.vacuous}
            if not r.passed:
                _, key, w = r.failures[0]
                rec.update(loop=key_text(key), witness=format_witness(w), failures=len(r.failures))
            recs.append(rec)
        out.write(_records(recs, "json"))
    else:
        out.write("".join(r.line() + "\n" for r in results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


def cmd_hunt(cfg, args, out):
    if args.max_order > cfg.search_budget:
        raise BudgetExceeded(args.max_order, cfg.search_budget)
    res = hunt_osborn(args.max_order, budget=cfg.search_budget)
    if cfg.output_format == "json":
        rec = {"found": res.found, "examined": {str(k): v for k, v in res.examined.items()}}
        if res.found:
            rec["table"] = res.witness.table.tolist()
            rec["key"] = key_text(canonical_key(res.witness))
        out.write(_records([rec], "json"))
    elif res.found:
        out.write(f"found: order {res.witness.order} key {key_text(canonical_key(res.witness))}\n")
        out.write(write_table(res.witness))
    else:
        for n, k in res.examined.items():
            out.write(f"order {n}: {k} C-loop classes examined, none non-associative and Osborn\n")
        out.write(f"exhausted: no witness up to order {args.max_order}\n")
    return EXIT_OK if res.found else EXIT_FALSE


# --- parser ------------------------------------------------------------------------------


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="loopkit", description="Finite loop toolkit.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-table-order", type=_positive, default=MAX_ORDER, help="largest table accepted on input")
    p.add_argument("--autotopism-budget", type=_positive, default=8)
    p.add_argument("--search-budget", type=_positive, default=8)
    p.add_argument("--workers", type=_positive, default=None, help=f"worker count (default from ${WORKERS_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="report named properties")
    s.add_argument("table")
    s.add_argument("--props", help="comma-separated property names")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("identity", help="test one identity")
    s.add_argument("table")
    s.add_argument("identity")
    s.set_defaults(func=cmd_identity)

    s = sub.add_parser("structure", help="nuclei, center and special sets")
    s.add_argument("table")
    s.set_defaults(func=cmd_structure)

    s = sub.add_parser("autotopisms", help="list the autotopism group")
    s.add_argument("table")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--budget", type=_positive)
    s.set_defaults(func=cmd_autotopisms)

    s = sub.add_parser("isotope", help="principal or general isotope")
    s.add_argument("table")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--principal", metavar="A,B")
    g.add_argument("--triple", metavar="PERMFILE")
    s.set_defaults(func=cmd_isotope)

    s = sub.add_parser("search", help="generate loops")
    s.add_argument("--order", type=_positive, required=True)
    s.add_argument("--identity", action="append")
    s.add_argument("--prop", action="append")
    s.add_argument("--limit", type=_positive)
    s.add_argument("--up-to-iso", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify-paper", help="run the proposition suite")
    s.add_argument("--max-order", type=_positive, default=6)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("hunt-osborn", help="look for a non-associative Osborn C-loop")
    s.add_argument("--max-order", type=_positive, default=8)
    s.set_defaults(func=cmd_hunt)
    return p


def _workers(args):
    if args.workers is not None:
        return args.workers
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"${WORKERS_ENV} must be an integer, got {env!r}") from None
    return 1


def run(argv):
    """Run one command; returns ``(exit_code, stdout_text, stderr_text)``."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stderr(err):
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0), out.getvalue(), err.getvalue()
        try:
            cfg = CliConfig(
                max_order=args.max_table_order,
                autotopism_budget=args.autotopism_budget,
                search_budget=args.search_budget,
                workers=_workers(args),
                output_format=args.format,
            )
            code = args.func(cfg, args, out)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = EXIT_USAGE
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = EXIT_BUDGET
        except (TableFormatError, LoopError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = EXIT_FORMAT
    return code, out.getvalue(), err.getvalue()


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stdout.flush()
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
