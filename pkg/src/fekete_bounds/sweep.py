"""Sweep configuration documents and their execution.

A sweep document is one JSON object::

    {
      "targets":  [{"family": "janowski", "A": 1, "B": -1}, ...],
      "lambdas":  [0, 0.5, 1],
      "gammas":   [[re, im], ...],
      "mus":      [[re, im], ...],
      "theorems": ["T1", "T2", "T3"] | ["auto"],
      "oracle":   {"radial_steps": 60, ...},          (optional)
      "output":   {"format": "csv" | "json", "path": "..."}   (optional)
    }

Validation stops at the first bad entry and names it by path, e.g.
``targets[1].B``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from importlib import resources
from pathlib import Path

from .bounds import THEOREMS, theorem_applicable
from .class_operator import ClassParams
from .errors import DomainError
from .extremal_oracle import OracleConfig, oracle_max, verify_all, verify_config
from .minda_catalog import MindaTarget


class ConfigError(ValueError):
    """A sweep document failed validation; the message starts with the offending path."""


@dataclass(frozen=True)
class SweepConfig:
    targets: tuple
    lambdas: tuple
    gammas: tuple
    mus: tuple
    theorems: tuple
    oracle: OracleConfig = OracleConfig()
    output_format: str = "csv"
    output_path: str | None = None

    def combinations(self):
        for target in self.targets:
            for lam in self.lambdas:
                for gamma in self.gammas:
                    for mu in self.mus:
                        yield target, ClassParams(lam, gamma), mu


@dataclass
class SweepResult:
    records: list = field(default_factory=list)
    skipped: int = 0

    @property
    def unsound(self) -> int:
        return sum(not r.sound for r in self.records)

    @property
    def min_slack(self) -> float:
        return min((r.slack for r in self.records), default=float("nan"))


def _number(x, path: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {x!r}")
    return float(x)


def _complex(x, path: str) -> complex:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(float(x), 0.0)
    if not isinstance(x, list) or len(x) != 2:
        raise ConfigError(f"{path}: expected a [re, im] pair, got {x!r}")
    return complex(_number(x[0], f"{path}[0]"), _number(x[1], f"{path}[1]"))


def _list(doc: dict, key: str) -> list:
    if key not in doc:
        raise ConfigError(f"{key}: missing")
    v = doc[key]
    if not isinstance(v, list) or not v:
        raise ConfigError(f"{key}: expected a nonempty list")
    return v


def parse_sweep_config(doc) -> SweepConfig:
    if not isinstance(doc, dict):
        raise ConfigError("$: expected a JSON object")
    known = {"targets", "lambdas", "gammas", "mus", "theorems", "oracle", "output"}
    for key in doc:
        if key not in known:
            raise ConfigError(f"{key}: unknown key")

    targets = []
    for i, t in enumerate(_list(doc, "targets")):
        path = f"targets[{i}]"
        if not isinstance(t, dict) or "family" not in t:
            raise ConfigError(f"{path}.family: missing")
        params = {}
        for k, v in t.items():
            if k != "family":
                params[k] = _number(v, f"{path}.{k}")
        try:
            targets.append(MindaTarget(t["family"], params))
        except DomainError as exc:
            raise ConfigError(f"{path}: {exc}") from None

    lambdas = []
    for i, x in enumerate(_list(doc, "lambdas")):
        lam = _number(x, f"lambdas[{i}]")
        if not 0.0 <= lam <= 1.0:
            raise ConfigError(f"lambdas[{i}]: lambda must lie in [0, 1], got {lam}")
        lambdas.append(lam)

    gammas = []
    for i, x in enumerate(_list(doc, "gammas")):
        g = _complex(x, f"gammas[{i}]")
        if g == 0:
            raise ConfigError(f"gammas[{i}]: gamma must be nonzero")
        gammas.append(g)

    mus = [_complex(x, f"mus[{i}]") for i, x in enumerate(_list(doc, "mus"))]

    theorems = []
    for i, x in enumerate(_list(doc, "theorems")):
        if x not in THEOREMS + ("auto",):
            raise ConfigError(f"theorems[{i}]: expected one of T1, T2, T3, auto, got {x!r}")
        theorems.append(x)

    oracle = OracleConfig()
    if "oracle" in doc:
        o = doc["oracle"]
        if not isinstance(o, dict):
            raise ConfigError("oracle: expected an object")
        names = {f.name for f in fields(OracleConfig)}
        kwargs = {}
        for k, v in o.items():
            if k not in names:
                raise ConfigError(f"oracle.{k}: unknown key")
            kwargs[k] = _number(v, f"oracle.{k}")
            if k != "feasibility_tolerance":
                if kwargs[k] != int(kwargs[k]):
                    raise ConfigError(f"oracle.{k}: expected an integer")
                kwargs[k] = int(kwargs[k])
        try:
            oracle = OracleConfig(**kwargs)
        except DomainError as exc:
            raise ConfigError(f"oracle: {exc}") from None

    fmt, path = "csv", None
    if "output" in doc:
        out = doc["output"]
        if not isinstance(out, dict):
            raise ConfigError("output: expected an object")
        fmt = out.get("format", "csv")
        if fmt not in ("csv", "json"):
            raise ConfigError(f"output.format: expected csv or json, got {fmt!r}")
        path = out.get("path")
        if path is not None and not isinstance(path, str):
            raise ConfigError("output.path: expected a string")

    return SweepConfig(
        tuple(targets), tuple(lambdas), tuple(gammas), tuple(mus), tuple(theorems), oracle, fmt, path
    )


def load_sweep_config(path: str | Path) -> SweepConfig:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"$: invalid JSON ({exc})") from None
    return parse_sweep_config(doc)


def standard_sweep_config() -> SweepConfig:
    """The bundled soundness sweep (7 targets x 5 lambdas x 6 gammas x 8 mus)."""
    text = resources.files("fekete_bounds").joinpath("data/standard_sweep.json").read_text()
    return parse_sweep_config(json.loads(text))


def _run_one(args):
    target, params, mu, theorems, oracle_cfg, negate_bound = args
    oracle = oracle_max("fekete_szego", params, target.B1, target.B2, oracle_cfg, mu=mu)
    rows, skipped = [], 0
    for th in theorems:
        if th == "auto":
            rows.extend(verify_all(params, target, mu, oracle_cfg, oracle=oracle, negate_bound=negate_bound))
        elif theorem_applicable(th, params.gamma, mu):
            rows.append(verify_config(params, target, mu, th, oracle_cfg, oracle=oracle, negate_bound=negate_bound))
        else:
            skipped += 1
    return rows, skipped


def run_sweep(config: SweepConfig, *, negate_bound: bool = False, jobs: int = 1) -> SweepResult:
    """Evaluate every combination; the oracle runs once per (target, lambda, gamma, mu).

    Rows come back in configuration order whatever ``jobs`` is.
    """
    work = [(t, p, mu, config.theorems, config.oracle, negate_bound) for t, p, mu in config.combinations()]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_one, work, chunksize=8))
    else:
        parts = [_run_one(w) for w in work]
    result = SweepResult()
    for rows, skipped in parts:
        result.records.extend(rows)
        result.skipped += skipped
    return result
