"""Command-line interface: model ingestion, ideal computations, verification reports.

Exit codes: 0 success / all checks passed, 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from mispec import __version__, snc
from mispec.documents import (
    DocumentError,
    ModelDocument,
    VerificationReport,
    load_model,
    load_report_dict,
    parse_rational,
    rational_str,
    render_report_lines,
    save_report,
)
from mispec.snc import MonomialModel, SncModel
from mispec.verify import SUITES, VerifyOptions, run_suites

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _as_snc(doc: ModelDocument) -> SncModel:
    if doc.kind == "snc":
        return doc.model
    model, _ = doc.model.to_snc()
    return model


def _vector_str(vec: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in vec) + ")"


def cmd_jumps(args: argparse.Namespace) -> int:
    doc = load_model(args.model)
    model = _as_snc(doc)
    cap = parse_rational(args.cap, "--cap")
    rows = snc.jumps_with_vectors(model, cap)
    for i, (m, before, after) in enumerate(rows, start=1):
        print(f"m_{i} = {rational_str(m)}\t{_vector_str(before)} -> {_vector_str(after)}")
    if args.out:
        payload = {
            "cap": rational_str(cap),
            "jumps": [{"index": i, "m": rational_str(m),
                       "before": list(before), "after": list(after)}
                      for i, (m, before, after) in enumerate(rows, start=1)],
        }
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_mi(args: argparse.Namespace) -> int:
    doc = load_model(args.model)
    model = _as_snc(doc)
    m = parse_rational(args.m, "--m")
    vec = snc.multiplier_coeffs(model, m)
    names = model.names
    print(f"m = {rational_str(m)}")
    for name, s in zip(names, vec):
        print(f"  {name}: {s}")
    return EXIT_OK


def cmd_lct(args: argparse.Namespace) -> int:
    doc = load_model(args.model)
    print(rational_str(snc.lct(_as_snc(doc))))
    return EXIT_OK


def cmd_restricted(args: argparse.Namespace) -> int:
    doc = load_model(args.model)
    model = _as_snc(doc)
    cap = parse_rational(args.cap, "--cap")
    try:
        data = snc.restricted_multiplier_ideal(model, args.p, cap)
        strict_left, strict_right = snc.inclusion_chain(model, args.p, cap)
    except ValueError as exc:
        raise DocumentError("--p", str(exc)) from None
    names = model.names
    pairs = sorted(sorted(names[i] for i in pair) for pair in data.pairs)
    print(f"jump index p = {data.jump_index}")
    print(f"base coefficients at m_(p-1): {_vector_str(data.base)}")
    print(f"intersection pairs: {pairs if pairs else '{}'}")
    print(f"strict at m_p: {strict_left}; strict below: {strict_right}")
    return EXIT_OK


def cmd_member(args: argparse.Namespace) -> int:
    doc = load_model(args.model)
    if doc.kind != "monomial":
        raise DocumentError("model", "membership needs a monomial model document")
    model: MonomialModel = doc.model
    try:
        beta = tuple(int(x) for x in args.beta.split(","))
    except ValueError:
        raise DocumentError("--beta", f"expected comma-separated integers, got {args.beta!r}") from None
    m = parse_rational(args.m, "--m")
    try:
        verdict = snc.monomial_membership(model, beta, m)
    except ValueError as exc:
        raise DocumentError("--beta", str(exc)) from None
    print("member" if verdict else "not-member")
    return EXIT_OK


def _load_params(path: str | None) -> dict:
    if not path:
        return {}
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise DocumentError("--params", f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError("--params", f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise DocumentError("--params", "must be a JSON object")
    return raw


def cmd_verify(args: argparse.Namespace) -> int:
    params = _load_params(args.params)
    opts = VerifyOptions(
        seed=args.seed if args.seed is not None else int(params.get("seed", 2024)),
        grid=args.grid if args.grid is not None else int(params.get("grid", 2048)),
        rel_tol=args.rel_tol if args.rel_tol is not None else float(params.get("relTol", 1e-3)),
        nakano_trials=int(params.get("nakanoTrials", 1000)),
        identity_trials=int(params.get("identityTrials", 200)),
        rt_samples=int(params.get("rtSamples", 100)),
    )
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = run_suites(names, opts)
    report = VerificationReport(
        suites=names,
        checks=checks,
        reproducibility={
            "seed": opts.seed, "grid": opts.grid, "relTol": opts.rel_tol,
            "nakanoTrials": opts.nakano_trials, "identityTrials": opts.identity_trials,
            "rtSamples": opts.rt_samples,
        },
    )
    if args.out:
        save_report(report, args.out)
    for line in render_report_lines(report.to_dict()):
        print(line)
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    raw = load_report_dict(args.report)
    for line in render_report_lines(raw):
        print(line)
    all_pass = all(c["status"] == "pass" for c in raw["checks"])
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mispec",
        description="Multiplier-ideal spectra on SNC models and numerical "
                    "verification of the analytic ingredients.")
    parser.add_argument("--version", action="version", version=f"mispec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jumps", help="jumping numbers with coefficient vectors")
    p.add_argument("model", help="model document (JSON)")
    p.add_argument("--cap", required=True, help="enumerate jumps up to this exact rational")
    p.add_argument("--out", help="write the table as JSON")
    p.set_defaults(fn=cmd_jumps)

    p = sub.add_parser("mi", help="ideal coefficient vector at a weight multiple")
    p.add_argument("model")
    p.add_argument("--m", required=True, help="exact rational weight multiple")
    p.set_defaults(fn=cmd_mi)

    p = sub.add_parser("lct", help="log canonical threshold (first jump)")
    p.add_argument("model")
    p.set_defaults(fn=cmd_lct)

    p = sub.add_parser("restricted", help="restricted-ideal data at jump index p")
    p.add_argument("model")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cap", required=True)
    p.set_defaults(fn=cmd_restricted)

    p = sub.add_parser("member", help="monomial ideal membership")
    p.add_argument("model")
    p.add_argument("--beta", required=True, help="comma-separated exponents")
    p.add_argument("--m", required=True)
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--params", help="JSON parameter document")
    p.add_argument("--seed", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--rel-tol", dest="rel_tol", type=float)
    p.add_argument("--out", help="write the verification report (JSON)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="re-render a stored verification report")
    p.add_argument("report")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
