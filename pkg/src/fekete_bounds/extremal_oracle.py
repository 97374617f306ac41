"""Brute-force maximization of coefficient functionals over the bi-class Schwarz data.

The search space is the set of (c1, c2) with |c1| <= 1, |c2| <= 1 - |c1|^2
whose induced inverse-side pair (d1, d2) = (-c1, d2(c1, c2)) obeys the same
condition.  Only (c1, c2) are gridded; d2 is determined by them.

The coarse grid is polar in both coefficients: ``radial_steps`` values of
|c1| in [0, 1] times ``angular_steps`` angles, and for each c1 the same
radial fractions of the admissible radius 1 - |c1|^2 for c2.  Refinement
re-grids a box in (|c1|, arg c1, |c2|, arg c2) around the incumbent whose
half-width starts at one coarse step and shrinks by 4 per iteration.

Ties go to the lexicographically smallest (|c1|, arg c1, |c2|, arg c2): the
kernel scans in that order and only replaces the incumbent on strict
improvement, so the result does not depend on evaluation schedule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numba
import numpy as np

from .bounds import BoundReport, applicable_theorems, fs_bound, theorem_applicable
from .class_operator import (
    ClassParams,
    SchwarzPair,
    forward_coefficients,
    fs_value,
    is_feasible_pair,
)
from .errors import DomainError
from .minda_catalog import MindaTarget

FUNCTIONALS = ("abs_a2", "abs_a3", "fekete_szego")
SOUNDNESS_TOL = 1e-9
REFINE_POINTS = 9
REFINE_SHRINK = 4.0

__all__ = [
    "OracleConfig",
    "OracleResult",
    "VerificationRecord",
    "is_feasible_pair",
    "oracle_max",
    "verify_config",
    "verify_all",
]


@dataclass(frozen=True)
class OracleConfig:
    radial_steps: int = 60
    angular_steps: int = 96
    refine_iterations: int = 2
    feasibility_tolerance: float = 1e-9

    def __post_init__(self):
        if int(self.radial_steps) < 8 or int(self.angular_steps) < 8:
            raise DomainError("radial_steps and angular_steps must be >= 8")
        if int(self.refine_iterations) < 0:
            raise DomainError("refine_iterations must be >= 0")
        if not (0.0 < float(self.feasibility_tolerance) <= 1e-3):
            raise DomainError("feasibility_tolerance must lie in (0, 1e-3]")


@dataclass(frozen=True)
class OracleResult:
    max_value: float
    witness: SchwarzPair
    induced_d2: complex
    evaluated_points: int
    feasible_fraction: float

    def to_dict(self) -> dict:
        return {
            "max_value": self.max_value,
            "witness": {"c1": self.witness.c1, "c2": self.witness.c2},
            "induced_d2": self.induced_d2,
            "evaluated_points": self.evaluated_points,
            "feasible_fraction": self.feasible_fraction,
        }


_forward_jit = numba.njit(cache=True)(forward_coefficients)


@numba.njit(cache=True)
def _scan(r1, t1, q2, t2, clip_mode, lam, gamma, B1, B2, mu, kind, tol):
    """Scan the tensor grid r1 x t1 x q2 x t2.

    clip_mode 0: |c2| = q2 * (1 - |c1|^2); clip_mode 1: |c2| = min(q2, 1 - |c1|^2).
    Returns (best squared value, i, j, k, l, feasible count); i = -1 if none.
    """
    cos1 = np.cos(t1)
    sin1 = np.sin(t1)
    cos2 = np.cos(t2)
    sin2 = np.sin(t2)
    best = -1.0
    bi = -1
    bj = -1
    bk = -1
    bl = -1
    nfeas = 0
    for i in range(r1.shape[0]):
        rad1 = r1[i]
        room = 1.0 - rad1 * rad1
        if room < 0.0:
            room = 0.0
        lim = (room + tol) * (room + tol)
        for j in range(t1.shape[0]):
            c1 = complex(rad1 * cos1[j], rad1 * sin1[j])
            a2, a3_0, d2_0 = _forward_jit(c1, 0j, lam, gamma, B1, B2)
            _, a3_1, d2_1 = _forward_jit(c1, 1.0 + 0j, lam, gamma, B1, B2)
            da3 = a3_1 - a3_0
            dd2 = d2_1 - d2_0
            if kind == 2:
                base = a3_0 - mu * a2 * a2
            else:
                base = a3_0
            a2sq = a2.real * a2.real + a2.imag * a2.imag
            for k in range(q2.shape[0]):
                if clip_mode == 0:
                    rad2 = q2[k] * room
                else:
                    rad2 = q2[k]
                    if rad2 > room:
                        rad2 = room
                    if rad2 < 0.0:
                        rad2 = 0.0
                for l in range(t2.shape[0]):
                    c2 = complex(rad2 * cos2[l], rad2 * sin2[l])
                    d2 = d2_0 + dd2 * c2
                    if d2.real * d2.real + d2.imag * d2.imag > lim:
                        continue
                    nfeas += 1
                    if kind == 0:
                        vv = a2sq
                    else:
                        v = base + da3 * c2
                        vv = v.real * v.real + v.imag * v.imag
                    if vv > best:
                        best = vv
                        bi = i
                        bj = j
                        bk = k
                        bl = l
    return best, bi, bj, bk, bl, nfeas


def _kind(functional: str) -> int:
    if functional not in FUNCTIONALS:
        raise DomainError(f"unknown functional {functional!r}; expected one of {FUNCTIONALS}")
    return FUNCTIONALS.index(functional)


def oracle_max(
    functional: str,
    params: ClassParams,
    B1: float,
    B2: float,
    config: OracleConfig = OracleConfig(),
    mu: complex = 0.0,
) -> OracleResult:
    """Grid maximum of |a2|, |a3| or |a3 - mu a2^2| over feasible Schwarz data."""
    kind = _kind(functional)
    lam, gamma = params.lam, params.gamma
    mu = complex(mu)
    tol = float(config.feasibility_tolerance)
    nr, na = int(config.radial_steps), int(config.angular_steps)

    r1 = np.linspace(0.0, 1.0, nr)
    ang = 2.0 * np.pi * np.arange(na) / na
    best, i, j, k, l, nfeas = _scan(r1, ang, r1, ang, 0, lam, gamma, float(B1), float(B2), mu, kind, tol)
    evaluated = nr * na * nr * na
    if i < 0:
        raise RuntimeError("oracle found no feasible point; (0, 0) should always be feasible")
    room = max(1.0 - r1[i] ** 2, 0.0)
    inc = [r1[i], ang[j], r1[k] * room, ang[l]]

    h = np.array([1.0 / (nr - 1), 2.0 * np.pi / na, 1.0 / (nr - 1), 2.0 * np.pi / na])
    offsets = np.linspace(-1.0, 1.0, REFINE_POINTS)
    for it in range(int(config.refine_iterations)):
        width = h / REFINE_SHRINK**it
        axes = [inc[a] + width[a] * offsets for a in range(4)]
        axes[0] = np.clip(axes[0], 0.0, 1.0)
        axes[2] = np.clip(axes[2], 0.0, 1.0)
        # the middle offset is exactly 0, so the incumbent itself is re-evaluated
        rb, ri, rj, rk, rl, rf = _scan(
            axes[0], axes[1], axes[2], axes[3], 1, lam, gamma, float(B1), float(B2), mu, kind, tol
        )
        evaluated += REFINE_POINTS**4
        nfeas += rf
        if ri >= 0 and rb > best:
            best = rb
            room = max(1.0 - axes[0][ri] ** 2, 0.0)
            inc = [axes[0][ri], axes[1][rj], min(max(axes[2][rk], 0.0), room), axes[3][rl]]

    c1 = complex(inc[0] * math.cos(inc[1]), inc[0] * math.sin(inc[1]))
    c2 = complex(inc[2] * math.cos(inc[3]), inc[2] * math.sin(inc[3]))
    # strict feasibility holds by construction up to rounding in the last digit
    c2_cap = max(1.0 - abs(c1) ** 2, 0.0)
    if abs(c2) > c2_cap:
        c2 = c2 * (c2_cap / abs(c2)) if abs(c2) > 0 else 0j
    witness = SchwarzPair(c1, c2)
    _, _, d2 = forward_coefficients(c1, c2, lam, gamma, float(B1), float(B2))
    return OracleResult(
        max_value=math.sqrt(best),
        witness=witness,
        induced_d2=complex(d2),
        evaluated_points=evaluated,
        feasible_fraction=nfeas / evaluated,
    )


@dataclass(frozen=True)
class VerificationRecord:
    target: MindaTarget
    params: ClassParams
    mu: complex
    theorem: str
    bound: BoundReport
    oracle: OracleResult
    slack: float
    sound: bool
    sharpness_ratio: float
    extra: dict = field(default_factory=dict)

    def row(self) -> list:
        """Values in the fixed CSV column order (see report.CSV_COLUMNS)."""
        return [
            self.target.family,
            self.target.label(),
            self.params.lam,
            self.params.gamma.real,
            self.params.gamma.imag,
            self.mu.real,
            self.mu.imag,
            self.theorem,
            self.bound.branch,
            self.bound.value,
            self.oracle.max_value,
            self.slack,
            self.sharpness_ratio,
            self.oracle.evaluated_points,
        ]

    def to_dict(self) -> dict:
        return {
            "family": self.target.family,
            "family_params": dict(self.target.params),
            "lambda": self.params.lam,
            "gamma": self.params.gamma,
            "mu": self.mu,
            "theorem": self.theorem,
            "bound": self.bound.to_dict(),
            "oracle": self.oracle.to_dict(),
            "slack": self.slack,
            "sound": self.sound,
            "sharpness_ratio": self.sharpness_ratio,
            **self.extra,
        }


def _record(target, params, mu, theorem, bound, oracle, negate_bound=False, extra=None):
    if negate_bound:
        bound = BoundReport(-bound.value, bound.branch, bound.intermediates, bound.notes)
    slack = bound.value - oracle.max_value
    ratio = oracle.max_value / bound.value if bound.value != 0 else math.inf
    return VerificationRecord(
        target, params, complex(mu), theorem, bound, oracle, slack, slack >= -SOUNDNESS_TOL, ratio, extra or {}
    )


def verify_config(
    params: ClassParams,
    target: MindaTarget,
    mu: complex,
    theorem: str = "auto",
    config: OracleConfig = OracleConfig(),
    *,
    oracle: OracleResult | None = None,
    negate_bound: bool = False,
) -> VerificationRecord:
    """Bound vs oracle for one configuration.

    ``theorem="auto"`` uses the smallest bound among the applicable theorems.
    A precomputed ``oracle`` result for the same configuration may be passed.
    """
    mu = complex(mu)
    if theorem == "auto":
        return verify_all(params, target, mu, config, oracle=oracle, negate_bound=negate_bound)[-1]
    if not theorem_applicable(theorem, params.gamma, mu):
        raise DomainError(f"{theorem} does not apply to gamma={params.gamma}, mu={mu}")
    B1, B2 = target.B1, target.B2
    bound = fs_bound(theorem, params, B1, B2, mu)
    if oracle is None:
        oracle = oracle_max("fekete_szego", params, B1, B2, config, mu=mu)
    return _record(target, params, mu, theorem, bound, oracle, negate_bound)


def verify_all(
    params: ClassParams,
    target: MindaTarget,
    mu: complex,
    config: OracleConfig = OracleConfig(),
    *,
    oracle: OracleResult | None = None,
    negate_bound: bool = False,
) -> list[VerificationRecord]:
    """One record per applicable theorem, then an ``auto`` record for the tightest."""
    mu = complex(mu)
    B1, B2 = target.B1, target.B2
    if oracle is None:
        oracle = oracle_max("fekete_szego", params, B1, B2, config, mu=mu)
    out = [
        verify_config(params, target, mu, t, config, oracle=oracle, negate_bound=negate_bound)
        for t in applicable_theorems(params.gamma, mu)
    ]
    # first minimum wins, in T1, T2, T3 order
    best = min(out, key=lambda r: r.bound.value)
    out.append(
        VerificationRecord(
            best.target, best.params, best.mu, "auto", best.bound, best.oracle,
            best.slack, best.sound, best.sharpness_ratio, {"selected": best.theorem},
        )
    )
    return out
