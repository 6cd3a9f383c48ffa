"""Command-line front end: exact reports and theory-vs-oracle sweeps.

All results go to standard output as compact JSON; `verify --format csv`
switches the sweep rows to semicolon-separated CSV.  Exit codes: 0 on
success, 1 when `verify` finds a disagreement that survives the second-prime
retry, 2 on usage errors.  The environment variable LEFLAB_PRIME overrides
the default modulus.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .modp import DEFAULT_PRIME
from .harness import SECOND_PRIME, SweepConfig, run_verification
from .linsys import PlaneSystem, system_dim
from .oracle import (
    DEFAULT_TRIALS,
    ExponentSpec,
    hilbert_function,
    lefschetz_scan,
    mult_rank_report,
    sample_ideal,
)
from . import theory


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list: {text!r}") from exc


def _default_prime() -> int:
    env = os.environ.get("LEFLAB_PRIME")
    return int(env) if env else DEFAULT_PRIME


def _add_common(sub: argparse.ArgumentParser, *, vars_default: int = 3) -> None:
    sub.add_argument("--vars", type=int, default=vars_default, help="number of variables")
    sub.add_argument("--prime", type=int, default=None, help="field modulus (default LEFLAB_PRIME or 2147483647)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sub.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leflab", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("hilbert", help="Hilbert function and regularity of the quotient")
    sub.add_argument("--powers", type=_parse_int_list, required=True)
    _add_common(sub)

    sub = subs.add_parser("rank", help="rank report for one power map in one degree")
    sub.add_argument("--powers", type=_parse_int_list, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)
    _add_common(sub)

    sub = subs.add_parser("scan", help="all degrees where a power map misses maximal rank")
    sub.add_argument("--powers", type=_parse_int_list, required=True)
    sub.add_argument("--k", type=int, required=True)
    _add_common(sub)

    sub = subs.add_parser("classify", help="closed-form verdict for k in {1,2,3}, three variables")
    sub.add_argument("--powers", type=_parse_int_list, required=True)
    sub.add_argument("--k", type=int, choices=(1, 2, 3), required=True)
    _add_common(sub)

    sub = subs.add_parser("slp", help="SLP/WLP corollaries for quadric or cubic generators")
    sub.add_argument("--powers", type=_parse_int_list, required=True)
    _add_common(sub)

    sub = subs.add_parser("linsys", help="dimension of a plane system with its reduction trace")
    sub.add_argument("--degree", type=int, required=True)
    sub.add_argument("--mults", type=_parse_int_list, default=())
    _add_common(sub)

    sub = subs.add_parser("verify", help="theory-vs-oracle sweep")
    sub.add_argument("--k", type=int, default=3)
    sub.add_argument("--specs", type=str, default=None, help="explicit specs, e.g. '3,3,3,3;2,4,4,4'")
    sub.add_argument("--s-min", type=int, default=4)
    sub.add_argument("--s-max", type=int, default=6)
    sub.add_argument("--a-min", type=int, default=2)
    sub.add_argument("--a-max", type=int, default=6)
    sub.add_argument("--second-prime", type=int, default=SECOND_PRIME)
    _add_common(sub)
    return parser


def _cmd_hilbert(args) -> int:
    spec = ExponentSpec(args.vars, args.powers)
    sample = sample_ideal(spec, prime=args.prime, seed=args.seed)
    hd = hilbert_function(sample)
    print(_dumps({"hf": list(hd.values), "reg": hd.regularity}))
    return 0


def _cmd_rank(args) -> int:
    spec = ExponentSpec(args.vars, args.powers)
    sample = sample_ideal(spec, prime=args.prime, seed=args.seed)
    rep = mult_rank_report(sample, args.k, args.degree, args.trials)
    print(
        _dumps(
            {
                "k": rep.k,
                "j": rep.j,
                "dim_domain": rep.dim_domain,
                "dim_codomain": rep.dim_codomain,
                "rank": rep.rank,
                "kernel": rep.kernel_dim,
                "cokernel": rep.cokernel_dim,
                "maximal": rep.is_maximal,
            }
        )
    )
    return 0


def _cmd_scan(args) -> int:
    spec = ExponentSpec(args.vars, args.powers)
    sample = sample_ideal(spec, prime=args.prime, seed=args.seed)
    failures = lefschetz_scan(sample, args.k, args.trials)
    print(_dumps({"k": args.k, "failures": [[j, d] for j, d in failures]}))
    return 0


def _cmd_classify(args) -> int:
    if args.vars != 3:
        raise ValueError("classify covers three variables; see `slp` for four")
    spec = ExponentSpec(3, args.powers)
    if args.k == 3:
        verdict = theory.classify_cube(spec)
    else:
        verdict = theory.classify_square(spec)
    print(_dumps({"status": verdict.status, "degrees": list(verdict.failing_degrees)}))
    return 0


def _cmd_slp(args) -> int:
    powers = args.powers
    if args.vars == 3:
        spec = ExponentSpec(3, powers)
        if 2 in powers or 1 in powers:
            verdict = (
                theory.slp_with_square_generator(spec)
                if 2 in powers
                else theory.Verdict(theory.MAXIMAL)
            )
            out = {"property": "SLP", "status": verdict.status, "degrees": [], "rule": "square-generator"}
        elif 3 in powers:
            rest = list(powers)
            rest.remove(3)
            report = theory.slp_after_cube_quotient(ExponentSpec(3, tuple(rest)))
            degrees = sorted(
                {f.degree for _, v in report.checks for f in v.failures}
            )
            out = {
                "property": "SLP",
                "status": theory.MAXIMAL if report.has_slp else theory.FAILS,
                "degrees": degrees,
                "rule": "cube-quotient",
                "checks": [[b, v.status] for b, v in report.checks],
            }
        else:
            raise ValueError("three-variable SLP results need a generator of degree 2 or 3")
    elif args.vars == 4:
        if min(powers) <= 2:
            verdict = theory.wlp_with_square_generator_4vars(ExponentSpec(4, powers))
            out = {"property": "WLP", "status": verdict.status, "degrees": [], "rule": "square-generator"}
        elif 3 in powers:
            rest = list(powers)
            rest.remove(3)
            if not rest or len(set(rest)) != 1:
                raise ValueError("four-variable cube result needs equal remaining powers")
            verdict = theory.wlp_cube_uniform_4vars(len(rest), rest[0])
            out = {
                "property": "WLP",
                "status": verdict.status,
                "degrees": list(verdict.failing_degrees),
                "rule": "cube-uniform",
            }
        else:
            raise ValueError("four-variable results need a generator of degree at most 3")
    else:
        raise ValueError("slp covers 3 or 4 variables")
    print(_dumps(out))
    return 0


def _trace_json(trace) -> list:
    out = []
    for step in trace.steps:
        entry = {"rule": step.rule, "before": str(step.before)}
        if step.after is not None:
            entry["after"] = str(step.after)
        if step.stripped:
            entry["stripped"] = step.stripped
        if step.rule == "terminal":
            entry["reason"] = step.reason
            entry["value"] = step.value
        out.append(entry)
    return out


def _cmd_linsys(args) -> int:
    sys_ = PlaneSystem(args.degree, args.mults)
    dim, trace = system_dim(sys_, prime=args.prime, seed=args.seed, trials=args.trials)
    print(_dumps({"dim": dim, "trace": _trace_json(trace)}))
    return 0


def _row_json(row) -> dict:
    return {
        "spec": list(row.exponents),
        "k": row.k,
        "theory_fail": [[j, d] for j, d in row.theory_failures],
        "oracle_fail": [[j, d] for j, d in row.oracle_failures],
        "agree": row.agree,
        "millis": row.millis,
    }


def _cmd_verify(args) -> int:
    specs = None
    if args.specs:
        specs = tuple(_parse_int_list(part) for part in args.specs.split(";") if part.strip())
    config = SweepConfig(
        num_vars=args.vars,
        k=args.k,
        specs=specs,
        s_range=(args.s_min, args.s_max),
        exp_range=(args.a_min, args.a_max),
        primes=(args.prime, args.second_prime),
        trials=args.trials,
        seed=args.seed,
        fmt=args.format,
    )
    rows, summary = run_verification(config)
    if config.fmt == "csv":
        lines = ["spec;k;theory_fail_degrees;oracle_fail_degrees;agree;millis"]
        for r in rows:
            lines.append(
                ";".join(
                    [
                        ",".join(str(a) for a in r.exponents),
                        str(r.k),
                        ",".join(str(j) for j, _ in r.theory_failures),
                        ",".join(str(j) for j, _ in r.oracle_failures),
                        "true" if r.agree else "false",
                        str(r.millis),
                    ]
                )
            )
        print("\n".join(lines))
    else:
        print(_dumps({"rows": [_row_json(r) for r in rows], "summary": summary}))
    return 1 if summary["disagreements"] else 0


_COMMANDS = {
    "hilbert": _cmd_hilbert,
    "rank": _cmd_rank,
    "scan": _cmd_scan,
    "classify": _cmd_classify,
    "slp": _cmd_slp,
    "linsys": _cmd_linsys,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if getattr(args, "prime", None) is None:
        args.prime = _default_prime()
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
