"""Command-line front end.

Exit codes: 0 success, 1 invariant violation or failed verification,
2 parse/usage error, 3 instance exceeds the size caps (override with
``--force``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import QuotientModule, intersect, radical, zero_ideal
from .bounds import bound_report
from .errors import DomainError, InvariantViolation, PreconditionError, SizeLimitError
from .experiments import SUITES, run_suites
from .parsing import ParseError, format_ideal, parse_decomposition, parse_ideals
from .poset import INFINITE, Box, characteristic_poset, default_box, sdepth_with_witness
from .stanley import (
    decomposition_error,
    decomposition_from_partition,
    sdepth_of_decomposition,
    transfer_with_report,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3

VERBS = ("sdepth", "radical", "intersect", "bounds", "decomp", "verify", "transfer", "experiment")


def _depth(v):
    return "infinite" if v == INFINITE else int(v)


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("STANLEY_THREADS", "1"))


def _check_caps(args, n: int, box: Box | None = None, module: QuotientModule | None = None) -> None:
    if args.force:
        return
    if n > args.max_vars:
        raise SizeLimitError(f"{n} variables exceeds the cap of {args.max_vars}")
    if box is not None and module is not None and box.size > args.max_cells:
        if box.size > 256 * args.max_cells:
            raise SizeLimitError(f"box with {box.size} cells is far beyond the cap of {args.max_cells}")
        cells = len(characteristic_poset(module, box))
        if cells > args.max_cells:
            raise SizeLimitError(f"characteristic poset has {cells} cells, cap is {args.max_cells}")


def _module(args, extra: list[str] = ()) -> tuple[QuotientModule, list]:
    texts = [args.ideal] + ([args.modulo] if args.modulo else []) + list(extra)
    ideals = parse_ideals(texts, args.n)
    J = ideals[0]
    I = ideals[1] if args.modulo else zero_ideal(J.n)
    return QuotientModule(J, I), ideals[1 + bool(args.modulo):]


def _box(args, module: QuotientModule) -> Box:
    if not args.box:
        return default_box(module)
    g = tuple(int(x) for x in args.box.split(","))
    if len(g) != module.n:
        raise PreconditionError(f"box has {len(g)} entries, ring has {module.n} variables")
    return Box(g)


def _decomp_payload(D) -> dict:
    return {"module": str(D.module), "sdepth": _depth(sdepth_of_decomposition(D)), "spaces": D.to_json()}


# each command returns (exit code, payload for json, text)

def cmd_sdepth(args):
    module, _ = _module(args)
    box = _box(args, module)
    _check_caps(args, module.n, box, module)
    value, partition = sdepth_with_witness(module, box, threads=_threads(args))
    payload = {"verb": "sdepth", "module": str(module), "n": module.n, "sdepth": _depth(value)}
    text = str(_depth(value))
    if args.witness:
        D = decomposition_from_partition(partition, module)
        payload["witness"] = D.to_json()
        text += "\n" + D.to_lines()
    return EXIT_OK, payload, text


def cmd_decomp(args):
    args.witness = True
    code, payload, text = cmd_sdepth(args)
    payload["verb"] = "decomp"
    return code, payload, text


def cmd_radical(args):
    module, _ = _module(args)
    if args.modulo:
        rad = module.radical()
        out = f"{format_ideal(rad.J)} / {format_ideal(rad.I)}"
    else:
        out = format_ideal(radical(module.J))
    return EXIT_OK, {"verb": "radical", "n": module.n, "result": out}, out


def cmd_intersect(args):
    ideals = parse_ideals(args.ideals, args.n)
    out = ideals[0]
    for other in ideals[1:]:
        out = intersect(out, other)
    text = format_ideal(out)
    return EXIT_OK, {"verb": "intersect", "n": out.n, "result": text}, text


def cmd_bounds(args):
    Q, Q2 = parse_ideals([args.Q, args.Q2], args.n)
    if args.exact:
        module = QuotientModule.of_ideal(intersect(Q, Q2))
        _check_caps(args, Q.n, default_box(module), module)
    report = bound_report(Q, Q2, compute_exact=args.exact, threads=_threads(args), check=False)
    code = EXIT_VIOLATION if report.violations() else EXIT_OK
    payload = {"verb": "bounds", **report.as_dict(), "violations": report.violations()}
    text = report.to_table()
    if report.violations():
        text += "\n" + "\n".join(f"VIOLATION: {v}" for v in report.violations())
    return code, payload, text


def _read_decomposition(args):
    module, _ = _module(args)
    return parse_decomposition(Path(args.file).read_text(encoding="utf-8"), module)


def cmd_verify(args):
    D = _read_decomposition(args)
    witness = decomposition_error(D)
    payload = {"verb": "verify", "module": str(D.module), "valid": witness is None,
               "witness": list(witness) if witness is not None else None,
               "sdepth": _depth(sdepth_of_decomposition(D))}
    if witness is None:
        text = f"valid Stanley decomposition of {D.module}, sdepth {payload['sdepth']}"
        return EXIT_OK, payload, text
    return EXIT_VIOLATION, payload, f"INVALID: degree {witness} is not counted exactly once"


def cmd_transfer(args):
    D = _read_decomposition(args)
    m = D.module
    a = args.power
    if a is None:
        a = max([1] + list(m.max_exponents()) + [max(s.u.exps) for s in D.spaces])
    report = transfer_with_report(D, a)
    out = report.decomposition
    witness = decomposition_error(out)
    payload = {
        "verb": "transfer",
        "power": a,
        "source": _decomp_payload(D),
        "result": _decomp_payload(out),
        "discarded": [{"generator": str(s.u), "freeVars": [f"x{j + 1}" for j in sorted(s.Z)]}
                      for s in report.discarded],
        "valid": witness is None,
    }
    lines = [f"# {out.module}  (power {a}, sdepth {payload['result']['sdepth']})", out.to_lines()]
    if report.discarded:
        lines.append("# discarded: " + "; ".join(str(s) for s in report.discarded))
    if witness is not None:
        lines.append(f"INVALID: degree {witness} is not counted exactly once")
        return EXIT_VIOLATION, payload, "\n".join(lines)
    return EXIT_OK, payload, "\n".join(lines)


def cmd_experiment(args):
    names = args.suite or list(SUITES)
    results = run_suites(names, seed=args.seed, count=args.count, max_n=args.max_n, threads=_threads(args))
    ok = all(r.ok for r in results)
    payload = {"verb": "experiment", "seed": args.seed, "ok": ok, "suites": [r.as_dict() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.cases} cases, "
                     f"{len(r.violations)} violations ({r.seconds:.2f}s)")
        lines.extend(f"    {v}" for v in r.violations[:20])
    return (EXIT_OK if ok else EXIT_VIOLATION), payload, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for the partition search (default: $STANLEY_THREADS or 1)")
    common.add_argument("--force", action="store_true", help="ignore the size caps")
    common.add_argument("--max-vars", type=int, default=10)
    common.add_argument("--max-cells", type=int, default=4096)
    common.add_argument("--n", type=int, default=None, help="number of variables (default: inferred)")

    module_args = argparse.ArgumentParser(add_help=False)
    module_args.add_argument("ideal", help="ideal J, e.g. '(x1^2, x1*x2)'")
    module_args.add_argument("--modulo", metavar="I", help="ideal I inside J; the module is J/I")

    parser = argparse.ArgumentParser(prog="stanleydepth", description="Stanley depth of monomial ideals and quotients.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("sdepth", parents=[common, module_args], help="exact Stanley depth")
    p.add_argument("--witness", action="store_true", help="also print an optimal decomposition")
    p.add_argument("--box", help="comma-separated box ceilings overriding the tight box")
    p.set_defaults(func=cmd_sdepth)

    p = sub.add_parser("decomp", parents=[common, module_args], help="an optimal Stanley decomposition")
    p.add_argument("--box")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("radical", parents=[common, module_args], help="radical of an ideal or module")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("intersect", parents=[common], help="intersection of ideals")
    p.add_argument("ideals", nargs="+")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("bounds", parents=[common], help="bound report for Q ∩ Q' with Q, Q' primary")
    p.add_argument("Q")
    p.add_argument("Q2")
    p.add_argument("--exact", action="store_true", help="also compute the exact depth and check every bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="check a decomposition file")
    p.add_argument("file")
    p.add_argument("ideal")
    p.add_argument("--modulo", metavar="I")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transfer", parents=[common], help="pull a decomposition back to the radical module")
    p.add_argument("file")
    p.add_argument("ideal")
    p.add_argument("--modulo", metavar="I")
    p.add_argument("--power", type=int, default=None, help="substitution power (default: largest exponent)")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("experiment", parents=[common], help="run randomized property suites")
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, text = args.func(args)
    except (ParseError, DomainError, PreconditionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"instance too large: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_TOO_LARGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
