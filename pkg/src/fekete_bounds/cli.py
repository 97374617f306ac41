"""Command-line front end.

Exit codes: 0 success, 1 a soundness violation was found, 2 invalid input.
Complex arguments are written ``re,im`` (``--gamma=-0.5,0.5`` when the value
starts with a minus sign).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import report
from .bounds import a2_bound, a3_bound, applicable_theorems, fs_bound
from .class_operator import ClassParams
from .errors import DomainError, UnsupportedError
from .extremal_oracle import OracleConfig, verify_config
from .minda_catalog import FAMILIES, MindaTarget, elliptic_k, minda_coeffs
from .sweep import ConfigError, load_sweep_config, run_sweep, standard_sweep_config

_CONSTRAINTS = {
    "half-plane": "none",
    "janowski": "-1 <= B < A <= 1",
    "order-beta": "0 <= beta < 1",
    "strong-beta": "0 < beta <= 1",
    "lemniscate": "none",
    "kanas-qk": "k >= 0; k > 1 needs 0 < t < 1",
}


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")


def _add_global(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--output", default=default, help="write the report to this path instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default=default, help="report format")


def _add_family_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--A", type=float, help="janowski A")
    p.add_argument("--B", type=float, help="janowski B")
    p.add_argument("--beta", type=float, help="order-beta / strong-beta parameter")
    p.add_argument("--k", type=float, help="kanas-qk k")
    p.add_argument("--t", type=float, help="kanas-qk auxiliary t in (0, 1), needed when k > 1")


def _target(family: str, args) -> MindaTarget:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    params = {name: getattr(args, name) for name in ("A", "B", "beta", "k", "t")}
    params = {k: v for k, v in params.items() if v is not None}
    return MindaTarget(family, params)


def _emit(text: str, args) -> None:
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_phi(args) -> int:
    target = _target(args.family, args)
    B1, B2 = minda_coeffs(target)
    info = {
        "family": target.family,
        "params": dict(target.params),
        "B1": B1,
        "B2": B2,
        "B3": target.B3,
        "constraints": _CONSTRAINTS[target.family],
    }
    if target.family == "kanas-qk" and target.params["k"] > 1:
        info["K_t"] = elliptic_k(target.params["t"])
    if args.format == "json":
        _emit(report.dumps(info), args)
        return 0
    lines = [f"family: {target.family}", f"params: {target.label() or '-'}"]
    lines += [f"B1: {report.fmt(B1)}", f"B2: {report.fmt(B2)}"]
    if info["B3"] is not None:
        lines.append(f"B3: {report.fmt(info['B3'])}")
    lines.append(f"constraints: {info['constraints']}")
    if "K_t" in info:
        lines.append(f"K(t): {report.fmt(info['K_t'])}  (modulus convention, t={report.fmt(target.params['t'])})")
    _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_bound(args) -> int:
    target = _target(args.phi, args)
    params = ClassParams(args.lam, args.gamma)
    B1, B2 = target.B1, target.B2
    mu = args.mu
    if args.theorem == "a2":
        doc = {"theorem": "a2", "value": a2_bound(params, B1), "branch": "a2", "intermediates": {"B1": B1}}
    elif args.theorem == "a3":
        doc = {"theorem": "a3", **a3_bound(params, B1, B2).to_dict()}
    elif args.theorem == "auto":
        reports = {t: fs_bound(t, params, B1, B2, mu) for t in applicable_theorems(params.gamma, mu)}
        best = min(reports, key=lambda t: reports[t].value)
        doc = {
            "theorem": "auto",
            "selected": best,
            "value": reports[best].value,
            "branch": reports[best].branch,
            "reports": {t: r.to_dict() for t, r in reports.items()},
        }
    else:
        doc = {"theorem": args.theorem, **fs_bound(args.theorem, params, B1, B2, mu).to_dict()}
    _emit(report.dumps(doc), args)
    return 0


def _records_text(records, fmt: str, columns=report.CSV_COLUMNS, extra_cols=None) -> str:
    if fmt == "json":
        docs = [r.to_dict() for r in records]
        if extra_cols:
            for d, extra in zip(docs, extra_cols):
                d.update(extra)
        return report.dumps(docs)
    rows = [r.row() for r in records]
    if extra_cols:
        rows = [row + list(extra.values()) for row, extra in zip(rows, extra_cols)]
    return report.csv_text(rows, columns)


def cmd_verify(args) -> int:
    if args.config is None:
        config = standard_sweep_config()
    else:
        path = Path(args.config)
        if not path.is_file():
            raise UsageError(f"config file not found: {path}")
        config = load_sweep_config(path)
    fmt = args.format or config.output_format
    out = args.output or config.output_path
    result = run_sweep(config, negate_bound=args.negate_bound, jobs=args.jobs)
    text = _records_text(result.records, fmt)
    summary = (
        f"rows={len(result.records)} sound={len(result.records) - result.unsound} "
        f"unsound={result.unsound} skipped={result.skipped} min_slack={report.fmt(result.min_slack)}\n"
    )
    if out:
        Path(out).write_text(text)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    return 1 if result.unsound else 0


def mu_grid(mu_min: float, mu_max: float, step: float) -> list[float]:
    if step <= 0:
        raise UsageError("--mu-step must be positive")
    if mu_min > mu_max:
        raise UsageError("empty mu range (--mu-min > --mu-max)")
    n = int(math.floor((mu_max - mu_min) / step + 1e-9)) + 1
    return [mu_min + i * step for i in range(n)]


def cmd_sweep_mu(args) -> int:
    target = _target(args.phi, args)
    params = ClassParams(args.lam, args.gamma)
    config = OracleConfig(args.radial_steps, args.angular_steps, args.refine_iterations)
    mus = mu_grid(args.mu_min, args.mu_max, args.mu_step)
    records, flags = [], []
    prev = None
    for mu in mus:
        rec = verify_config(params, target, complex(mu, 0.0), args.theorem, config)
        changed = prev is not None and rec.bound.branch != prev
        prev = rec.bound.branch
        records.append(rec)
        flags.append({"branch_changed": changed})
    text = _records_text(records, args.format or "csv", report.SWEEP_MU_COLUMNS, flags)
    _emit(text, args)
    return 1 if any(not r.sound for r in records) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fekete-bounds",
        description="Fekete-Szego bounds for bi-subordinate classes and their brute-force verification",
    )
    _add_global(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="show the coefficients of a target function")
    _add_global(p, suppress=True)
    p.add_argument("family", help=f"one of {', '.join(FAMILIES)}")
    _add_family_params(p)
    p.set_defaults(func=cmd_phi)

    def class_flags(p):
        p.add_argument("--lambda", dest="lam", type=float, required=True)
        p.add_argument("--gamma", type=parse_complex, required=True, help="re,im")
        p.add_argument("--phi", required=True, help=f"target family: {', '.join(FAMILIES)}")
        _add_family_params(p)

    p = sub.add_parser("bound", help="evaluate a closed-form bound")
    _add_global(p, suppress=True)
    class_flags(p)
    p.add_argument("--mu", type=parse_complex, default=0j, help="re,im")
    p.add_argument("--theorem", choices=("T1", "T2", "T3", "auto", "a2", "a3"), default="auto")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="run a sweep document (default: the bundled standard sweep)")
    _add_global(p, suppress=True)
    p.add_argument("config", nargs="?", help="sweep JSON document")
    p.add_argument("--negate-bound", action="store_true", help="harness self-test: flip the sign of every bound")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep-mu", help="tabulate bound and oracle over a mu range")
    _add_global(p, suppress=True)
    class_flags(p)
    p.add_argument("--mu-min", type=float, required=True)
    p.add_argument("--mu-max", type=float, required=True)
    p.add_argument("--mu-step", type=float, required=True)
    p.add_argument("--theorem", choices=("T1", "T2", "T3", "auto"), default="auto")
    p.add_argument("--radial-steps", type=int, default=60)
    p.add_argument("--angular-steps", type=int, default=96)
    p.add_argument("--refine-iterations", type=int, default=2)
    p.set_defaults(func=cmd_sweep_mu)
    return parser


_VALUE_FLAGS = ("--gamma", "--mu", "--lambda", "--mu-min", "--mu-max", "--mu-step", "--A", "--B", "--beta", "--k", "--t")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-0.5,0.5" as an option; fold it into "--gamma=-0.5,0.5"
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            try:
                parse_complex(argv[i + 1])
            except argparse.ArgumentTypeError:
                pass
            else:
                out.append(f"{tok}={argv[i + 1]}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except (UsageError, DomainError, UnsupportedError, ConfigError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
