"""Command-line front end: ``curveh analyze | construct | verify | batch``.

Reports are JSON documents (``schema: 1``) by default; ``--table`` renders
the same document as aligned text.  Exit codes: 0 success, 1 a theorem
check failed, 2 parse error, 3 non-reduced input, 4 uncertified result,
5 genericity certification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from pathlib import Path
from typing import Sequence

from .algebra import NonHomogeneousError, ParseError, parse_poly, render
from .arrangements import (
    Arrangement,
    GenericityError,
    add_generic_conic,
    add_generic_line,
    add_line_through_one_double_point,
    build_double_pencil,
    build_near_pencil,
    catalog,
    catalog_names,
    intersection_profile,
    read_arrangement,
    theorem_ll_check,
    write_arrangement,
)
from .hierarchy import CurveReport, analyze
from .jacobian import ModularDisagreement, NonReducedError, UncertifiedError
from .verify import (
    FAIL,
    check_generic_union,
    check_ll,
    default_suite,
    summarize,
    theorem_ids,
)

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_NONREDUCED, EXIT_UNCERTIFIED, EXIT_GENERICITY = 0, 1, 2, 3, 4, 5


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# report documents
# ---------------------------------------------------------------------------

def report_dict(report: CurveReport) -> dict:
    res = report.resolution
    out = {
        "degree": report.d,
        "class": report.class_label,
        "type": report.type_t,
        "m": res.m,
        "exponents": list(res.exponents),
        "relation_degrees": list(res.relation_degrees),
        "shifts": list(res.shifts),
        "tau": report.tau,
        "tau_euler_characteristic": report.tau_euler,
        "nu": report.nu,
        "sigma": report.sigma,
        "generators": [
            {"degree": g.degree, "components": g.as_strings()} for g in res.generators
        ],
        "tables": {
            "hf": list(report.milnor.hf),
            "n": list(report.jacobian_module.n) if report.jacobian_module else None,
        },
        "certificates": {
            "hilbert_series": res.certified,
            "hilbert_series_failures": list(res.certificate_failures),
            "tau_stabilization_degree": report.milnor.stabilization_degree,
            "field": report.field_name,
        },
        "checks": dict(sorted(report.checks.items())),
    }
    return out


def _stated_comparison(expected: dict, doc: dict) -> dict:
    """Compare catalog stated values with the computation; mismatches are flagged."""
    computed = {
        "exponents": tuple(doc["exponents"]),
        "class": doc["class"],
        "type": doc["type"],
        "tau": doc["tau"],
        "nu": doc["nu"],
        "free": doc["type"] == 0,
        "tau_formula": doc["tau"],
        "profile": doc.get("profile"),
        "tau_stated": doc["tau"],
    }
    out = {}
    for key, value in expected.items():
        if key == "profile":
            value = {f"t{r}": c for r, c in sorted(value.items())}
        if key == "added_conic_points":
            continue
        got = computed.get(key)
        if isinstance(value, tuple):
            value = list(value)
            got = list(got) if got is not None else None
        out[key] = {"stated": value, "computed": got, "agrees": value == got}
    return out


def build_document(
    source: dict,
    f,
    arrangement: Arrangement | None = None,
    kmax: int | None = None,
    prime_fast: bool = False,
    saturation: bool = True,
    seed: int | None = None,
    timings: bool = False,
    expected: dict | None = None,
) -> dict:
    start = time.perf_counter()
    report = analyze(f, k_max=kmax, prime_fast=prime_fast, saturation=saturation)
    elapsed = time.perf_counter() - start
    doc = {"schema": SCHEMA, "input": source, "curve": render(f)}
    doc.update(report_dict(report))
    if arrangement is not None:
        doc["arrangement"] = write_arrangement(arrangement).splitlines()
        doc["certificates"]["genericity"] = [c.as_dict() for c in arrangement.certificates]
        if arrangement.is_line_arrangement and len(arrangement.lines) >= 2:
            prof = intersection_profile(arrangement)
            doc["profile"] = prof.as_dict()
            doc["max_multiplicity"] = prof.max_multiplicity
            doc["tau_from_profile"] = prof.weighted_sum(2)
            if report.type_t == 2 and report.resolution.certified:
                doc["enumerative_bounds"] = theorem_ll_check(prof, report).as_dict()
    if expected:
        doc["stated"] = _stated_comparison(expected, doc)
    doc["seed"] = seed
    if timings:
        doc["timings"] = {"analysis_seconds": round(elapsed, 3)}
    return doc


def _resolve_input(text: str | None, catalog_name: str | None, file: str | None):
    """Return (source echo, polynomial, arrangement or None, expected values)."""
    if catalog_name:
        try:
            entry = catalog(catalog_name)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        return {"catalog": catalog_name}, entry.curve, entry.arrangement, entry.expected
    if file:
        try:
            arr = read_arrangement(Path(file).read_text())
        except (OSError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        return {"file": file}, arr.defining_poly, arr, None
    if text is None:
        raise InputError("no input given")
    return {"polynomial": text}, parse_poly(text), None, None


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True)


def render_table(doc: dict) -> str:
    """Aligned text view of a report document."""
    rows: list[tuple[str, str]] = []
    for key in ("input", "curve", "degree", "class", "type", "m", "exponents", "relation_degrees",
                "shifts", "tau", "tau_euler_characteristic", "nu", "sigma", "profile", "max_multiplicity", "seed"):
        if key in doc:
            rows.append((key, json.dumps(doc[key], sort_keys=True)))
    tables = doc.get("tables", {})
    for name in ("hf", "n"):
        if tables.get(name) is not None:
            rows.append((name, " ".join(str(v) for v in tables[name])))
    rows.append(("hilbert_series_certificate", str(doc["certificates"]["hilbert_series"])))
    for cert in doc["certificates"].get("genericity", []):
        rows.append(("genericity", f"{cert['kind']} {cert['count']}/{cert['expected']}"))
    bad = [k for k, v in doc.get("checks", {}).items() if not v]
    rows.append(("checks", "all pass" if not bad else "FAILED: " + ", ".join(bad)))
    for key, cmp in doc.get("stated", {}).items():
        mark = "ok" if cmp["agrees"] else "DIFFERS"
        rows.append((f"stated {key}", f"{cmp['stated']} vs computed {cmp['computed']} ({mark})"))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _emit(doc: dict, table: bool, out=None) -> None:
    out = out or sys.stdout
    out.write((render_table(doc) if table else dumps(doc)) + "\n")


def _error(kind: str, exc: Exception, code: int) -> int:
    sys.stderr.write(f"error ({kind}): {exc}\n")
    return code


def _guarded(fn):
    """Map library exceptions onto the documented exit codes."""
    def wrapper(args) -> int:
        try:
            return fn(args)
        except (ParseError, NonHomogeneousError, InputError) as exc:
            return _error("parse", exc, EXIT_PARSE)
        except NonReducedError as exc:
            return _error("non-reduced", exc, EXIT_NONREDUCED)
        except (UncertifiedError, ModularDisagreement) as exc:
            return _error("uncertified", exc, EXIT_UNCERTIFIED)
        except GenericityError as exc:
            return _error("certification", exc, EXIT_GENERICITY)
    return wrapper


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

@_guarded
def cmd_analyze(args) -> int:
    source, f, arr, expected = _resolve_input(args.input, args.catalog, args.file)
    doc = build_document(source, f, arr, args.kmax, args.prime_fast, not args.no_saturation,
                         timings=args.timings, expected=expected)
    _emit(doc, args.table)
    return EXIT_OK


def _base_arrangement(args) -> tuple[dict, Arrangement]:
    kind, params = args.construction, args.params
    try:
        if kind == "double-pencil":
            n1, n2 = (int(p) for p in params)
            return {"double-pencil": [n1, n2]}, build_double_pencil(n1, n2)
        if kind == "near-pencil":
            (n,) = (int(p) for p in params)
            return {"near-pencil": n}, build_near_pencil(n)
        if kind == "catalog":
            (name,) = params
            entry = catalog(name)
            if entry.arrangement is None:
                raise InputError(f"catalog entry {name!r} is not an arrangement")
            return {"catalog": name}, entry.arrangement
        if kind == "file":
            (path,) = params
            return {"file": path}, read_arrangement(Path(path).read_text())
    except (ValueError, KeyError, OSError) as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown construction {kind!r}")


@_guarded
def cmd_construct(args) -> int:
    rng = random.Random(args.seed)
    source, arr = _base_arrangement(args)
    steps = []
    if args.add_node_line:
        nodes = intersection_profile(arr).nodes()
        if not nodes:
            raise InputError("arrangement has no double points")
        idx = 0 if args.node is None else args.node
        if not 0 <= idx < len(nodes):
            raise InputError(f"--node must be in 0..{len(nodes) - 1}")
        node = nodes[idx]
        arr = add_line_through_one_double_point(arr, node, rng)
        steps.append("node-line")
    for _ in range(args.add_generic_line):
        arr = add_generic_line(arr, rng)
        steps.append("generic-line")
    for _ in range(args.add_generic_conic):
        arr = add_generic_conic(arr, rng)
        steps.append("generic-conic")
    source = dict(source, steps=steps)
    if args.out:
        Path(args.out).write_text(write_arrangement(arr))
    doc = build_document(source, arr.defining_poly, arr, args.kmax, args.prime_fast,
                         not args.no_saturation, seed=args.seed, timings=args.timings)
    _emit(doc, args.table)
    return EXIT_OK


_EXAMPLES = {
    "ex10": ("x^2+y^2+z^2", "x"),
}


@_guarded
def cmd_verify(args) -> int:
    if args.catalog:
        if args.theorem != "ll":
            raise InputError("--catalog applies to the 'll' check")
        entry = catalog(args.catalog)
        if entry.arrangement is None or not entry.arrangement.is_line_arrangement:
            raise InputError(f"{args.catalog!r} is not a line arrangement")
        checks = [check_ll(entry.arrangement, args.catalog)]
    elif args.example:
        if args.theorem != "thm10" or args.example not in _EXAMPLES:
            raise InputError("--example supports: thm10 --example ex10")
        f1, f2 = (parse_poly(s) for s in _EXAMPLES[args.example])
        checks = [check_generic_union(f1, f2)]
    else:
        try:
            checks = default_suite(args.theorem, args.trials, args.seed, args.workers)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
    for c in checks:
        sys.stdout.write(c.to_json() + "\n")
    summary = summarize(checks)
    sys.stdout.write(dumps({"schema": SCHEMA, "summary": summary, "theorem": args.theorem,
                            "trials": args.trials, "seed": args.seed}) + "\n")
    return EXIT_FAIL if summary[FAIL] else EXIT_OK


def _batch_line(line: str, args) -> tuple[dict, int]:
    line = line.strip()
    if line.startswith("catalog:"):
        spec = dict(catalog=line.split(":", 1)[1].strip(), file=None, input=None)
    elif line.startswith("file:"):
        spec = dict(catalog=None, file=line.split(":", 1)[1].strip(), input=None)
    else:
        spec = dict(catalog=None, file=None, input=line)
    try:
        source, f, arr, expected = _resolve_input(spec["input"], spec["catalog"], spec["file"])
        doc = build_document(source, f, arr, args.kmax, args.prime_fast, not args.no_saturation,
                             timings=args.timings, expected=expected)
        return doc, EXIT_OK
    except (ParseError, NonHomogeneousError, InputError) as exc:
        code, kind, message = EXIT_PARSE, "parse", str(exc)
    except NonReducedError as exc:
        code, kind, message = EXIT_NONREDUCED, "non-reduced", str(exc)
    except (UncertifiedError, ModularDisagreement) as exc:
        code, kind, message = EXIT_UNCERTIFIED, "uncertified", str(exc)
    return {"schema": SCHEMA, "input": line, "error": {"kind": kind, "message": message, "exit_code": code}}, code


@_guarded
def cmd_batch(args) -> int:
    try:
        text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    worst = EXIT_OK
    for raw in text.splitlines():
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        doc, code = _batch_line(raw, args)
        if code and not worst:
            worst = code
        _emit(doc, args.table and "error" not in doc)
    return worst


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _analysis_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kmax", type=int, default=None,
                   help="generator scan bound (default 2d-2, or $CURVEH_KMAX)")
    p.add_argument("--prime-fast", action="store_true",
                   help="compute ranks modulo two primes and require agreement")
    p.add_argument("--no-saturation", action="store_true", help="skip the Jacobian module")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not deterministic)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", help="JSON output (default)")
    fmt.add_argument("--table", dest="table", action="store_true", help="aligned text output")
    p.set_defaults(table=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curveh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one curve")
    p.add_argument("input", nargs="?", help="homogeneous polynomial in x, y, z")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--catalog", metavar="NAME", help=f"named curve: {', '.join(catalog_names())}")
    src.add_argument("--file", metavar="PATH", help="arrangement file")
    _analysis_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build an arrangement and analyze it")
    p.add_argument("construction", choices=["double-pencil", "near-pencil", "catalog", "file"])
    p.add_argument("params", nargs="*")
    p.add_argument("--add-node-line", action="store_true", help="add a line through one double point")
    p.add_argument("--node", type=int, default=None, help="index of the double point (sorted order)")
    p.add_argument("--add-generic-line", type=int, default=0, metavar="K")
    p.add_argument("--add-generic-conic", type=int, default=0, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", help="write the arrangement file here")
    _analysis_flags(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("theorem", choices=theorem_ids())
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--catalog", metavar="NAME")
    p.add_argument("--example", metavar="NAME")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="analyze a file of inputs, one per line")
    p.add_argument("path", help="input file ('-' for stdin); lines are polynomials, catalog:NAME or file:PATH")
    _analysis_flags(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    env = os.environ.get("CURVEH_KMAX")
    if env and not (env.strip().isdigit() and int(env) > 0):
        sys.stderr.write(f"error (parse): CURVEH_KMAX must be a positive integer, got {env!r}\n")
        return EXIT_PARSE
    if args.command == "analyze" and not (args.input or args.catalog or args.file):
        sys.stderr.write("error (parse): analyze needs a polynomial, --catalog or --file\n")
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
