"""Command line: ``build``, ``verify`` and ``decompose``.

Every flag can also be set through an environment variable
(``GELFAND_MODEL``, ``GELFAND_N``, ``GELFAND_Q0``, ...); explicit flags win.
Exit codes: 0 pass, 1 verification failure, 2 hypothesis or capacity failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from gelfand.linalg import ExactMatrix
from gelfand.model import ModelRep
from gelfand.scalars import QPoly, format_rational, parse_rational
from gelfand.semigroup.engine import HypothesisError
from gelfand.suites import (
    CapacityError,
    Options,
    build_rep,
    check_build_capacity,
    decompose_sn,
    model_kind,
    run_suite,
)

EXIT_PASS, EXIT_FAIL, EXIT_HYPOTHESIS = 0, 1, 2

ENV_PREFIX = "GELFAND_"


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_flag(name: str) -> bool:
    return _env(name, "").strip().lower() in {"1", "true", "yes", "on"}


def _parse_q0(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfand",
        description="Build and certify involution models of S_n, IS_n, F*_n, H_n(q) and I_n(q).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", default=_env("MODEL"), help="sn, isn, fstar, hecke, qrook or table:<path>")
    n_env = _env("N")
    common.add_argument("--n", type=int, default=int(n_env) if n_env else None)
    common.add_argument("--q0", type=_parse_q0, default=_parse_q0(_env("Q0", "2")), help="specialization P/Q")
    common.add_argument("--format", choices=("json", "csv"), default=_env("FORMAT", "json"))
    common.add_argument("--out", default=_env("OUT"), help="output file (default stdout)")
    common.add_argument("--deep", action="store_true", default=_env_flag("DEEP"), help="exhaustive checks")
    common.add_argument("--seed", type=int, default=int(_env("SEED", "0")), help="seed for sampled checks")
    common.add_argument(
        "--allow-large", action="store_true", default=_env_flag("ALLOW_LARGE"), help="lift the size bounds"
    )
    common.add_argument("--variant", choices=("ordered", "support"), default=_env("VARIANT", "ordered"))
    common.add_argument(
        "--no-timing", action="store_true", default=_env_flag("NO_TIMING"), help="omit timings from reports"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="export basis and generator matrices")
    sub.add_parser("verify", parents=[common], help="run the verification suite")
    sub.add_parser("decompose", parents=[common], help="sector characters of the S_n model")
    return parser


# -- serialization ---------------------------------------------------------------

def _entry_json(v):
    if isinstance(v, QPoly):
        return v.to_json()
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


def _entry_csv(v) -> str:
    if isinstance(v, QPoly):
        return "[" + ",".join(v.to_json()) + "]"
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _basis_json(w):
    return json.loads(json.dumps(w))


def _dense(m: ExactMatrix) -> list[list]:
    return [[_entry_json(v) for v in row] for row in m.to_rows()]


def rep_to_json(rep: ModelRep) -> dict:
    return {
        "model": rep.name,
        "n": rep.n,
        "dimension": rep.dim,
        "variant": rep.meta.get("variant"),
        "basis": [_basis_json(w) for w in rep.basis],
        "grading": list(rep.grading),
        "generators": {name: _dense(m) for name, m in rep.generators.items()},
    }


def rep_to_csv(rep: ModelRep) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["matrix", "row", "col", "value"])
    for k, w in enumerate(rep.basis):
        writer.writerow(["basis", k, rep.grading[k], json.dumps(_basis_json(w), separators=(",", ":"))])
    for name, m in rep.generators.items():
        for r, c, v in sorted(m.entries()):
            writer.writerow([name, r, c, _entry_csv(v)])
    return buf.getvalue()


def report_to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "status", "required"])
    for c in report.get("checks", []):
        writer.writerow([c["name"], c["status"], c["required"]])
    writer.writerow(["overall", report["status"], True])
    return buf.getvalue()


def decomposition_to_csv(data: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "dimension", "shape", "multiplicity"])
    for sector in data["sectors"]:
        for lam, v in sector["inner_products"].items():
            writer.writerow([sector["k"], sector["dimension"], lam, v])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


# -- commands --------------------------------------------------------------------

def _options(args: argparse.Namespace) -> Options:
    if not args.model:
        raise ValueError("--model is required")
    model_kind(args.model)
    return Options(
        model=args.model,
        n=args.n,
        q0=args.q0,
        deep=args.deep,
        seed=args.seed,
        allow_large=args.allow_large,
        variant=args.variant,
    )


def cmd_build(args: argparse.Namespace) -> int:
    opts = _options(args)
    try:
        rep = build_rep(opts)
    except HypothesisError as exc:
        failure = {"model": opts.model, "status": "hypothesis_failure", "failures": str(exc).split("; ")}
        _emit(_dump(failure), args.out)
        return EXIT_HYPOTHESIS
    text = rep_to_csv(rep) if args.format == "csv" else _dump(rep_to_json(rep))
    _emit(text, args.out)
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(_options(args))
    data = report.as_dict(timing=not args.no_timing)
    _emit(report_to_csv(data) if args.format == "csv" else _dump(data), args.out)
    return report.exit_code


def cmd_decompose(args: argparse.Namespace) -> int:
    opts = _options(args)
    if model_kind(opts.model) != "sn":
        raise ValueError("decompose supports only --model sn")
    if opts.n is None:
        raise ValueError("--n is required")
    check_build_capacity(opts)
    data = decompose_sn(opts.n)
    _emit(decomposition_to_csv(data) if args.format == "csv" else _dump(data), args.out)
    ok = all(s["matches_rs_shapes"] and s["multiplicity_free"] for s in data["sectors"])
    return EXIT_PASS if ok else EXIT_FAIL


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "decompose": cmd_decompose}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    raise SystemExit(main())
