"""Command-line interface.

JSON (schema "ffdyn-report/1") is the stable machine surface; text output is
human-oriented and may change. Exit codes: 0 success, 1 verification failure
or resource cap, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complexity, dynamics, groupalg, seqgen, verify
from .errors import DomainError, ResourceLimitError
from .ffield import FieldSpec

SCHEMA = "ffdyn-report/1"


def _field_from_args(args) -> FieldSpec:
    if args.p is not None:
        mod = tuple(int(c) for c in args.mod.split(",")) if args.mod else None
        if args.e and args.e > 1:
            return FieldSpec.extension(args.p, args.e, mod)
        return FieldSpec.prime(args.p)
    if args.q is None:
        raise DomainError("either --q or --p/--e must be given")
    return FieldSpec.of_order(args.q)


def _sequences_from_args(args, spec: FieldSpec) -> list[groupalg.CyclicSeq]:
    if (args.seq is None) == (args.gen is None):
        raise DomainError("exactly one of --seq or --gen is required")
    if args.seq is not None:
        values = [int(v) for v in args.seq.split(",")]
        if args.n is not None and args.n != len(values):
            raise DomainError(f"--n {args.n} does not match {len(values)} values")
        return [groupalg.CyclicSeq(spec, values)]
    if args.n is None:
        raise DomainError("--gen requires --n")
    return seqgen.GeneratorSpec(args.gen, args.seed).build(spec, args.n)


def _operator_from_args(args, spec: FieldSpec, n: int) -> groupalg.DiffOperator:
    if args.op:
        coeffs = [int(c) for c in args.op.split(",")]
        return groupalg.build_operator(spec, n, coeffs)
    return groupalg.delta_operator(spec, n)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verdict_json(verdict: complexity.ComplexityVerdict) -> dict:
    return {
        "isDelta1": verdict.is_delta1,
        "isDelta2": verdict.is_delta2,
        "isDComplicated": verdict.is_d_complicated,
        "method": verdict.method,
        "witness": str(verdict.witness) if verdict.witness is not None else None,
    }


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# -- subcommand handlers ------------------------------------------------------


def _cmd_classify(args) -> int:
    spec = _field_from_args(args)
    seqs = _sequences_from_args(args, spec)
    reports = []
    for f in seqs:
        verdict = complexity.classify(f, op_cap=args.cap_ops, state_cap=args.cap_states)
        reports.append({"sequence": groupalg.seq_to_json(f),
                        "verdict": _verdict_json(verdict)})
    _emit(args, _dump({"schema": SCHEMA, "command": "classify", "results": reports}))
    return 0


def _cmd_orbit(args) -> int:
    spec = _field_from_args(args)
    f = _sequences_from_args(args, spec)[0]
    D = _operator_from_args(args, spec, f.n)
    try:
        s = dynamics.orbit_algebraic(D, f)
    except ResourceLimitError:
        # order computation hit the factoring cap; fall back to iteration
        # when the state space is small enough to walk
        if spec.q**f.n > args.cap_states:
            raise
        s = dynamics.orbit_brute(D, f, max_steps=args.cap_states)
    report = {
        "schema": SCHEMA, "command": "orbit",
        "sequence": groupalg.seq_to_json(f),
        "operator": str(D.op_poly),
        "preperiod": s.preperiod, "period": s.period,
        "attractorEntry": list(s.attractor_entry.value_encs),
    }
    _emit(args, _dump(report))
    return 0


def _cmd_spectrum(args) -> int:
    spec = _field_from_args(args)
    if args.n is None:
        raise DomainError("--n is required")
    D = _operator_from_args(args, spec, args.n)
    spectrum = dynamics.cycle_spectrum(D)
    if args.format == "csv":
        lines = ["length,count"] + [f"{k},{v}" for k, v in spectrum.items()]
        _emit(args, "\n".join(lines) + "\n")
        return 0
    report = {
        "schema": SCHEMA, "command": "spectrum",
        "q": spec.q, "n": args.n, "operator": str(D.op_poly),
        "stateCount": spec.q**args.n,
        "spectrum": {str(k): v for k, v in spectrum.items()},
    }
    _emit(args, _dump(report))
    return 0


def _cmd_graph(args) -> int:
    spec = _field_from_args(args)
    if args.n is None:
        raise DomainError("--n is required")
    D = _operator_from_args(args, spec, args.n)
    summary, succ = dynamics.build_graph(D, cap=args.cap_states)
    if args.format == "dot":
        _emit(args, dynamics.graph_dot(D, succ))
        return 0
    report = {
        "schema": SCHEMA, "command": "graph",
        "q": spec.q, "n": args.n, "operator": str(D.op_poly),
        "stateCount": summary.state_count,
        "spectrum": {str(k): v for k, v in summary.cycle_spectrum.items()},
        "attractorSize": summary.attractor_size,
        "treeDepth": summary.tree_depth,
        "treeShapeHash": summary.tree_shape_hash,
        "allTreesIsomorphic": summary.all_trees_isomorphic,
        "perNodeIndegree": summary.per_node_indegree,
    }
    _emit(args, _dump(report))
    return 0


def _cmd_census(args) -> int:
    spec = _field_from_args(args)
    if args.n is None:
        raise DomainError("--n is required")
    rep = complexity.census(spec, args.n, cap=args.cap_states)
    if args.format == "csv":
        lines = ["n,q,d,quota,censusCount,stateCount",
                 f"{rep.n},{rep.q},{rep.d},{rep.quota_formula},{rep.census_count},{rep.state_count}"]
        _emit(args, "\n".join(lines) + "\n")
        return 0
    report = {
        "schema": SCHEMA, "command": "census",
        "n": rep.n, "q": rep.q, "d": rep.d,
        "quotaFormula": str(rep.quota_formula),
        "censusCount": rep.census_count,
        "stateCount": rep.state_count,
        "censusQuota": str(rep.census_quota),
        "matchesFormula": rep.census_quota == rep.quota_formula,
    }
    _emit(args, _dump(report))
    return 0


def _cmd_gen(args) -> int:
    spec = _field_from_args(args)
    if args.n is None:
        raise DomainError("--n is required")
    if args.gen is None:
        raise DomainError("--gen is required")
    seqs = seqgen.GeneratorSpec(args.gen, args.seed).build(spec, args.n)
    if args.format == "text":
        _emit(args, "".join(groupalg.seq_text(f) + "\n" for f in seqs))
        return 0
    report = {"schema": SCHEMA, "command": "gen",
              "sequences": [groupalg.seq_to_json(f) for f in seqs]}
    _emit(args, _dump(report))
    return 0


def _cmd_verify(args) -> int:
    suite_fn = verify.SUITES[args.suite]
    report = suite_fn()
    report = {"schema": SCHEMA, "command": "verify", **report}
    if args.format == "text":
        lines = []
        for row in report["rows"]:
            status = row.get("status", "PASS" if row.get("ok", True) else "FAIL")
            detail = " ".join(f"{k}={v}" for k, v in row.items()
                              if k not in ("ok", "status"))
            lines.append(f"{status:4s} {detail}")
        lines.append(f"suite {report['suite']}: {'PASS' if report['ok'] else 'FAIL'}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump(report))
    return 0 if report["ok"] else 1


# -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffdyn",
        description="Finite-difference dynamics on cyclic sequences over GF(q)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=("json", "text")):
        p.add_argument("--q", type=int, help="field order (prime power)")
        p.add_argument("--p", type=int, help="characteristic (with --e/--mod)")
        p.add_argument("--e", type=int, default=1, help="extension degree")
        p.add_argument("--mod", help="extension modulus coefficients, low-to-high")
        p.add_argument("--n", type=int, help="sequence length")
        p.add_argument("--format", choices=fmt_choices, default="json")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        p.add_argument("--cap-states", type=int, default=2**20, dest="cap_states")
        p.add_argument("--cap-ops", type=int, default=2**16, dest="cap_ops")
        p.add_argument("--seed", type=int, help="PRNG seed for random generation")

    def add_seq_source(p):
        p.add_argument("--seq", help="comma-separated values for i = 1..n")
        p.add_argument("--gen", choices=seqgen._KINDS, help="named generator")

    p = sub.add_parser("classify", help="complexity verdict for sequences")
    add_common(p)
    add_seq_source(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("orbit", help="preperiod and period under an operator")
    add_common(p)
    add_seq_source(p)
    p.add_argument("--op", help="operator coefficients d_1..d_m")
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("spectrum", help="exact cycle spectrum (algebraic)")
    add_common(p, ("json", "csv"))
    p.add_argument("--op", help="operator coefficients d_1..d_m")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("graph", help="full functional graph (enumerative)")
    add_common(p, ("json", "dot"))
    p.add_argument("--op", help="operator coefficients d_1..d_m")
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("census", help="exhaustive quota census for prime n")
    add_common(p, ("json", "csv"))
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("gen", help="emit named sequences")
    add_common(p)
    p.add_argument("--gen", choices=seqgen._KINDS, required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="run a named verification sweep")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write output to FILE instead of stdout")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 1


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
