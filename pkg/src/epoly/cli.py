"""``epoly`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exactpoly import NonExactDivision
from .typesum import (
    C_tau,
    E_total,
    H_tau,
    InvariantViolation,
    NonIntegerC,
    chi_degree,
    enumerate_types,
    is_palindromic,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
SUITES = ("hecke", "ctau", "brute", "quasi", "frobenius", "strata", "duality", "all")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _exponents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, default=None)
    common.add_argument("--g", type=_positive, default=None)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--m", type=_positive, default=None)
    common.add_argument("--exponents", type=_exponents, default=None)
    common.add_argument("--q", type=_positive, default=None)
    common.add_argument("--max-rank", type=_positive, default=None, dest="max_rank")

    p = argparse.ArgumentParser(prog="epoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("total", parents=[common], help="E-polynomial of the character variety")
    sub.add_parser("strata", parents=[common], help="per-stratum E-polynomials")
    sub.add_parser("types", parents=[common], help="principal-series types with chi(1), H, C")
    v = sub.add_parser("verify", parents=[common], help="run an identity suite")
    v.add_argument("suite", choices=SUITES)
    return p


def _meta(e) -> dict:
    return {
        "degree": len(e.coeffs) - 1,
        "leading_coefficient": e.lead,
        "palindromic": is_palindromic(e),
        "euler": e(1),
    }


def cmd_total(args, out) -> int:
    n, g = args.n or 1, args.g or 1
    e = E_total(n, g)
    meta = _meta(e)
    if args.format == "json":
        obj = {"n": n, "g": g, "polynomial": e.to_json_obj()}
        obj.update(meta)
        # values that can outgrow a double travel as decimal strings
        obj["leading_coefficient"] = str(meta["leading_coefficient"])
        obj["euler"] = str(meta["euler"])
        print(json.dumps(obj, sort_keys=True), file=out)
    elif args.format == "latex":
        print(f"E_{{{n}}}(q) = {e.latex()}", file=out)
        print(f"% degree {meta['degree']}, palindromic {str(meta['palindromic']).lower()}, E(1) = {meta['euler']}", file=out)
    else:
        print(e.render(), file=out)
        print(f"degree: {meta['degree']}", file=out)
        print(f"leading_coefficient: {meta['leading_coefficient']}", file=out)
        print(f"palindromic: {str(meta['palindromic']).lower()}", file=out)
        print(f"euler: {meta['euler']}", file=out)
    return EXIT_OK


def cmd_strata(args, out) -> int:
    from .strata import E_stratum, enumerate_subgroups, kernel_partition

    n, g = args.n or 1, args.g or 1
    subs = enumerate_subgroups(n)
    rows = []
    total = None
    for h in subs:
        e = E_stratum(h, g, subs)
        total = e if total is None else total + e
        rows.append((h, kernel_partition(h), e))
    expected = E_total(n, g)
    if total != expected:
        print(f"stratum sum {total} differs from E_total {expected}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        obj = {
            "n": n,
            "g": g,
            "strata": [
                {
                    "rank": h.rank,
                    "basis": h.vector_strings(),
                    "kernel_partition": [list(b) for b in kp.blocks],
                    "polynomial": e.to_json_obj(),
                }
                for h, kp, e in rows
            ],
            "sum": total.to_json_obj(),
            "sum_matches_total": True,
        }
        print(json.dumps(obj, sort_keys=True), file=out)
    elif args.format == "latex":
        print("\\begin{tabular}{lll}", file=out)
        print("rank & kernel partition & $E_{n,H}(q)$ \\\\ \\hline", file=out)
        for h, kp, e in rows:
            print(f"{h.rank} & ${kp}$ & ${e.latex()}$ \\\\", file=out)
        print(f"\\hline sum & & ${total.latex()}$ \\\\", file=out)
        print("\\end{tabular}", file=out)
    else:
        for h, kp, e in rows:
            print(f"{h.descriptor()}\t{kp}\t{e.render()}", file=out)
        print(f"sum\t\t{total.render()}", file=out)
    return EXIT_OK


def cmd_types(args, out) -> int:
    n = args.n or 1
    types = enumerate_types(n)
    rows = [(t, chi_degree(t), H_tau(t), C_tau(t)) for t in types]
    csum = sum(r[3] for r in rows)
    if args.format == "json":
        obj = {
            "n": n,
            "types": [
                {
                    "type": str(t),
                    "lambda": list(t.lam),
                    "alpha1": t.a1,
                    "alpha_eps": t.ae,
                    "chi_degree": chi.to_json_obj(),
                    "H": h.to_json_obj(),
                    "C": str(c),
                }
                for t, chi, h, c in rows
            ],
            "C_sum": str(csum),
        }
        print(json.dumps(obj, sort_keys=True), file=out)
    elif args.format == "latex":
        print("\\begin{tabular}{llll}", file=out)
        print("$\\tau$ & $\\chi_\\tau(1)$ & $H_\\tau(q)$ & $C_\\tau$ \\\\ \\hline", file=out)
        for t, chi, h, c in rows:
            num = chi.num.latex()
            chi_tex = num if chi.den == 1 else f"\\frac{{{num}}}{{{chi.den}}}"
            print(f"\\texttt{{{t}}} & ${chi_tex}$ & ${h.latex()}$ & ${c}$ \\\\", file=out)
        print("\\end{tabular}", file=out)
    else:
        for t, chi, h, c in rows:
            print(f"{t}\t{chi}\t{h.render()}\t{c}", file=out)
        print(f"# {len(rows)} types, sum of C = {csum}", file=out)
    return EXIT_OK


def _xi_specs(args, n: int):
    from .oracle.counting import XiSpec, validate_generic
    from .verify import DEFAULT_XI

    if args.m is None and args.exponents is None and args.q is None:
        return DEFAULT_XI.get(n, [])
    if args.m is None or args.exponents is None or args.q is None:
        raise UsageError("--m, --exponents and --q must be given together")
    spec = XiSpec(args.m, args.exponents, args.q)
    if spec.n != n:
        raise UsageError(f"--exponents has {spec.n} entries but --n is {n}")
    if not validate_generic(spec) or not spec.q_compatible():
        raise UsageError("xi is not generic or q is not 1 mod 2m")
    return [(spec.m, spec.exponents, spec.q)]


def cmd_verify(args, out) -> int:
    from . import verify

    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    checks = []
    for suite in suites:
        if suite == "hecke":
            checks += verify.suite_hecke(args.max_rank or 5)
        elif suite == "duality":
            for n in [args.n] if args.n else [1, 2, 3]:
                checks += verify.suite_duality(n)
        elif suite == "strata":
            for n in [args.n] if args.n else [1, 2, 3]:
                for g in [args.g] if args.g else [1, 2]:
                    checks += verify.suite_strata(n, g)
        elif suite == "ctau":
            for n in [args.n] if args.n else [1, 2, 3]:
                checks += verify.suite_ctau(n, _xi_specs(args, n))
        elif suite == "brute":
            q, m, g = args.q or 7, args.m or 3, args.g or 1
            exps = args.exponents or (1,)
            if len(exps) != 1:
                raise UsageError("brute force is for n = 1: give one exponent")
            from .oracle.counting import XiSpec, validate_generic

            if not validate_generic(XiSpec(m, exps, q)) or not XiSpec(m, exps, q).q_compatible():
                raise UsageError("xi is not generic or q is not 1 mod 2m")
            checks += verify.suite_brute(q, m, g, exps[0])
        elif suite == "quasi":
            qs = [args.q] if args.q else [5, 13, 17]
            if any(q % 4 != 1 for q in qs):
                raise UsageError("quasi needs q = 1 mod 4")
            for q in qs:
                checks += verify.suite_quasi(q, args.g or 1)
        elif suite == "frobenius":
            checks += verify.suite_frobenius([args.g] if args.g else (1, 2))
    for c in checks:
        print(c.line(), file=out)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} passed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"total": cmd_total, "strata": cmd_strata, "types": cmd_types, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"epoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonExactDivision, InvariantViolation, NonIntegerC) as exc:
        print(f"epoly: internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
