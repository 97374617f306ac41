"""Closed-form bounds for |a2|, |a3| and |a3 - mu a2^2| over bi-subordinate S(lambda, gamma; phi).

Every Fekete-Szego evaluator is split in two: ``branch_values_*`` computes the
formula of *every* branch at the given inputs, and ``fs_bound_*`` selects the
active one.  That keeps the branch formulas testable at their boundaries.

Conventions
-----------
* ``L`` is ``|B2/B1 - (1 - mu) X| + |B2/B1|`` with ``X = 4 B1 gamma (1+2lambda)/(1+lambda)^2``.
  The ``+(1 - mu)`` variant does not reproduce the |a3| bound at mu = 0 and
  is reported only as the intermediate ``L_plus``.
* ``theta = arg(gamma)``.  Only ``Re k1`` and ``|sin theta|`` enter the
  bound, so the opposite orientation gives identical values.
* Ties at branch boundaries go to the earlier branch in label order, so a
  mu sitting exactly on an upper threshold reports the middle branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .class_operator import ClassParams
from .errors import DomainError

THEOREMS = ("T1", "T2", "T3")

T1_BRANCHES = ("T1.L<=2", "T1.L>2")
T2_BRANCHES = (
    "T2.case1.mu<=1",
    "T2.case1.mu>1",
    "T2.case2.mu<=1-F",
    "T2.case2.middle",
    "T2.case2.mu>=1+F",
)
T3_BRANCHES = (
    "T3.case1.mu<=1-Rek1",
    "T3.case1.mu>1-Rek1",
    "T3.case2.mu<=1-Rek1+N",
    "T3.case2.middle",
    "T3.case2.mu>=1-Rek1-N",
)
A3_BRANCHES = ("a3.max=2", "a3.max=|s|+|t|")


@dataclass(frozen=True)
class BoundReport:
    value: float
    branch: str
    intermediates: dict = field(default_factory=dict)
    notes: tuple = ()

    def to_dict(self) -> dict:
        from .report import jsonable

        out = {
            "value": jsonable(self.value),
            "branch": self.branch,
            "intermediates": {k: jsonable(v) for k, v in self.intermediates.items()},
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def lemma_rhs(s: complex, c1_abs: float) -> float:
    """Right-hand side of |c2 - s c1^2| <= 1 + (|s| - 1)|c1|^2."""
    if not (0.0 <= c1_abs <= 1.0):
        raise DomainError(f"|c1| must lie in [0, 1], got {c1_abs}")
    return 1.0 + (abs(s) - 1.0) * c1_abs * c1_abs


def _x_factor(params: ClassParams, B1: float) -> complex:
    lam = params.lam
    return 4.0 * B1 * params.gamma * (1.0 + 2.0 * lam) / (1.0 + lam) ** 2


def _check_b1(B1: float) -> None:
    if not B1 > 0:
        raise DomainError(f"B1 must be positive, got {B1}")


def a2_bound(params: ClassParams, B1: float) -> float:
    _check_b1(B1)
    return abs(params.gamma) * B1 / (1.0 + params.lam)


def a3_bound(params: ClassParams, B1: float, B2: float) -> BoundReport:
    _check_b1(B1)
    t = B2 / B1
    s = t - _x_factor(params, B1)
    m = abs(s) + abs(t)
    scale = abs(params.gamma) * B1 / (4.0 * (1.0 + 2.0 * params.lam))
    if m <= 2.0:
        value, branch = 2.0 * scale, A3_BRANCHES[0]
    else:
        value, branch = m * scale, A3_BRANCHES[1]
    return BoundReport(value, branch, {"s": s, "t": t, "B1": float(B1), "B2": float(B2)})


# -- T1: complex gamma, complex mu ---------------------------------------


def t1_L(params: ClassParams, B1: float, B2: float, mu: complex) -> float:
    t = B2 / B1
    return abs(t - (1.0 - mu) * _x_factor(params, B1)) + abs(t)


def branch_values_t1(params: ClassParams, B1: float, B2: float, mu: complex) -> dict[str, float]:
    _check_b1(B1)
    scale = B1 * abs(params.gamma) / (4.0 * (1.0 + 2.0 * params.lam))
    L = t1_L(params, B1, B2, complex(mu))
    return {T1_BRANCHES[0]: 2.0 * scale, T1_BRANCHES[1]: L * scale}


def fs_bound_t1(params: ClassParams, B1: float, B2: float, mu: complex) -> BoundReport:
    mu = complex(mu)
    values = branch_values_t1(params, B1, B2, mu)
    t = B2 / B1
    L = t1_L(params, B1, B2, mu)
    L_plus = abs(t + (1.0 - mu) * _x_factor(params, B1)) + abs(t)
    branch = T1_BRANCHES[0] if L <= 2.0 else T1_BRANCHES[1]
    return BoundReport(
        values[branch],
        branch,
        {"L": L, "L_plus": L_plus, "t": t, "B1": float(B1), "B2": float(B2)},
        ("L uses -(1-mu); L_plus (the +(1-mu) variant) disagrees with a3_bound at mu=0",),
    )


# -- T2: real gamma > 0, real mu ------------------------------------------


def _real(x: complex, name: str) -> float:
    x = complex(x)
    if x.imag != 0.0:
        raise DomainError(f"{name} must be real here, got {x}")
    return x.real


def _t2_gamma(params: ClassParams) -> float:
    g = params.gamma
    if g.imag != 0.0 or g.real <= 0.0:
        raise DomainError(f"T2 needs real gamma > 0, got {g}")
    return g.real


def t2_F(params: ClassParams, B1: float, B2: float) -> float:
    lam = params.lam
    g = _t2_gamma(params)
    return (1.0 + lam) ** 2 * (B1 - abs(B2)) / (2.0 * g * B1 * B1 * (1.0 + 2.0 * lam))


def branch_values_t2(params: ClassParams, B1: float, B2: float, mu: float) -> dict[str, float]:
    _check_b1(B1)
    mu = _real(mu, "mu")
    g = _t2_gamma(params)
    lam = params.lam
    base = g * abs(B2) / (2.0 * (1.0 + 2.0 * lam))
    slope = g * g * B1 * B1 / (1.0 + lam) ** 2
    low = base - (mu - 1.0) * slope
    high = base + (mu - 1.0) * slope
    return {
        T2_BRANCHES[0]: low,
        T2_BRANCHES[1]: high,
        T2_BRANCHES[2]: low,
        T2_BRANCHES[3]: g * B1 / (2.0 * (1.0 + 2.0 * lam)),
        T2_BRANCHES[4]: high,
    }


def fs_bound_t2(params: ClassParams, B1: float, B2: float, mu: float) -> BoundReport:
    values = branch_values_t2(params, B1, B2, mu)
    mu = _real(mu, "mu")
    F = t2_F(params, B1, B2)
    if abs(B2) >= B1:
        branch = T2_BRANCHES[0] if mu <= 1.0 else T2_BRANCHES[1]
    elif mu <= 1.0 - F:
        branch = T2_BRANCHES[2]
    elif mu > 1.0 + F:
        branch = T2_BRANCHES[4]
    else:
        branch = T2_BRANCHES[3]
    return BoundReport(values[branch], branch, {"F": F, "B1": float(B1), "B2": float(B2)})


# -- T3: complex gamma, real mu -------------------------------------------


def t3_quantities(params: ClassParams, B1: float, B2: float) -> dict:
    """theta, k1, N and the case indicator for T3."""
    _check_b1(B1)
    lam = params.lam
    g = params.gamma
    ag = abs(g)
    theta = cmath.phase(g)
    ssin = abs(math.sin(theta))
    denom = 4.0 * B1 * B1 * ag * (1.0 + 2.0 * lam)
    k1 = B2 * (1.0 + lam) ** 2 * cmath.exp(1j * theta) / denom
    N = (1.0 + lam) ** 2 * (abs(B2) * (1.0 + ssin) - 2.0 * B1) / denom
    indicator = abs(B2) * (1.0 + ssin) / (2.0 * B1)
    return {"theta": theta, "k1": k1, "N": N, "indicator": indicator}


def branch_values_t3(params: ClassParams, B1: float, B2: float, mu: float) -> dict[str, float]:
    mu = _real(mu, "mu")
    q = t3_quantities(params, B1, B2)
    lam = params.lam
    ag = abs(params.gamma)
    ssin = abs(math.sin(q["theta"]))
    G = ag * ag * B1 * B1 / (1.0 + lam) ** 2
    tail = ag * abs(B2) * (1.0 + ssin) / (4.0 * (1.0 + 2.0 * lam))
    u = 1.0 - mu - q["k1"].real
    low = G * u + tail
    high = tail - G * u
    return {
        T3_BRANCHES[0]: low,
        T3_BRANCHES[1]: high,
        T3_BRANCHES[2]: low,
        T3_BRANCHES[3]: ag * B1 / (2.0 * (1.0 + 2.0 * lam)),
        T3_BRANCHES[4]: high,
    }


def fs_bound_t3(params: ClassParams, B1: float, B2: float, mu: float) -> BoundReport:
    values = branch_values_t3(params, B1, B2, mu)
    mu = _real(mu, "mu")
    q = t3_quantities(params, B1, B2)
    rek1, N = q["k1"].real, q["N"]
    if q["indicator"] >= 1.0:
        branch = T3_BRANCHES[0] if mu <= 1.0 - rek1 else T3_BRANCHES[1]
    elif mu <= 1.0 - rek1 + N:
        branch = T3_BRANCHES[2]
    elif mu > 1.0 - rek1 - N:
        branch = T3_BRANCHES[4]
    else:
        branch = T3_BRANCHES[3]
    return BoundReport(
        values[branch],
        branch,
        {"theta": q["theta"], "k1": q["k1"], "N": N, "B1": float(B1), "B2": float(B2)},
    )


# -- dispatch --------------------------------------------------------------------


def theorem_applicable(theorem: str, gamma: complex, mu: complex) -> bool:
    gamma, mu = complex(gamma), complex(mu)
    if theorem == "T1":
        return True
    if theorem == "T2":
        return gamma.imag == 0.0 and gamma.real > 0.0 and mu.imag == 0.0
    if theorem == "T3":
        return mu.imag == 0.0
    raise DomainError(f"unknown theorem {theorem!r}")


def applicable_theorems(gamma: complex, mu: complex) -> list[str]:
    return [t for t in THEOREMS if theorem_applicable(t, gamma, mu)]


def fs_bound(theorem: str, params: ClassParams, B1: float, B2: float, mu: complex) -> BoundReport:
    if not theorem_applicable(theorem, params.gamma, mu):
        raise DomainError(f"{theorem} does not apply to gamma={params.gamma}, mu={mu}")
    if theorem == "T1":
        return fs_bound_t1(params, B1, B2, mu)
    if theorem == "T2":
        return fs_bound_t2(params, B1, B2, complex(mu).real)
    return fs_bound_t3(params, B1, B2, complex(mu).real)


# -- corollaries (independent, literal transcriptions) --------------------------

COROLLARIES = ("C1", "C2", "C3", "C4")
VARIANTS = ("complex_mu", "real_gamma", "complex_gamma_real_mu")


def _janowski_args(args: dict) -> tuple[float, float]:
    try:
        A, B = float(args["A"]), float(args["B"])
    except KeyError as exc:
        raise DomainError(f"missing corollary argument {exc.args[0]!r}") from None
    if not (-1.0 <= B < A <= 1.0):
        raise DomainError(f"need -1 <= B < A <= 1, got A={A}, B={B}")
    return A, B


def _gamma_arg(args: dict, default: complex | None = None) -> complex:
    g = args.get("gamma", default)
    if g is None:
        raise DomainError("missing corollary argument 'gamma'")
    g = complex(g)
    if g == 0:
        raise DomainError("gamma must be nonzero")
    return g


def _pick3(mu: float, lo: float, hi: float, values: tuple, labels: tuple):
    if mu <= lo:
        i = 0
    elif mu > hi:
        i = 2
    else:
        i = 1
    return values[i], labels[i]


def corollary_bound(which: str, variant: str, args: dict, mu: complex) -> BoundReport:
    """Printed corollary formulas, transcribed as displayed.

    C1/C2 take ``A``, ``B`` (Janowski, lambda = 0 / 1); their first two
    variants have gamma = 1 built in, the third reads theta from ``gamma``
    (default 1).  C3/C4 take ``gamma`` (half-plane, lambda = 0 / 1).  This is
    deliberately not derived from the theorem evaluators.
    """
    if which not in COROLLARIES:
        raise DomainError(f"unknown corollary {which!r}")
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    mu = complex(mu)
    tag = f"{which}.{variant}"
    if variant != "complex_mu":
        mu_r = _real(mu, "mu")

    if which in ("C1", "C2"):
        A, B = _janowski_args(args)
        d = A - B
        aB = abs(B)
        if which == "C1":
            c_lin, mid, div, c_sq, f_div = 4.0, d / 2.0, 4.0, d * d, 2.0
        else:
            c_lin, mid, div, c_sq, f_div = 3.0, d / 6.0, 12.0, d * d / 4.0, 1.5
        if variant == "complex_mu":
            Lc = aB + abs(c_lin * (1.0 - mu) * d - B)
            if Lc <= 2.0:
                return BoundReport(mid, f"{tag}.middle", {"L": Lc})
            return BoundReport(d / div * Lc, f"{tag}.upper", {"L": Lc})
        if variant == "real_gamma":
            base = aB * d / (2.0 if which == "C1" else 6.0)
            F = (1.0 - aB) / (f_div * d)
            vals = (base - (mu_r - 1.0) * c_sq, mid, base + (mu_r - 1.0) * c_sq)
            v, lab = _pick3(mu_r, 1.0 - F, 1.0 + F, vals, ("low", "middle", "high"))
            return BoundReport(v, f"{tag}.{lab}", {"F": F})
        theta = cmath.phase(_gamma_arg(args, 1.0))
        ssin, cth = abs(math.sin(theta)), math.cos(theta)
        if which == "C1":
            p1 = (aB * (1.0 + ssin - cth) - 2.0) / (4.0 * d)
            p2 = (aB * (1.0 + ssin + cth) - 2.0) / (4.0 * d)
            low = d * d * (1.0 - mu_r) + aB * d * (1.0 + ssin - cth) / 4.0
            high = aB * d * (1.0 + ssin + cth) / 4.0 - d * d * (1.0 - mu_r)
        else:
            p1 = (aB * (1.0 + ssin - cth) - 2.0) / (3.0 * d)
            p2 = (aB * (1.0 + ssin + cth) - 2.0) / (3.0 * d)
            low = (1.0 - mu_r) * d * d / 4.0 + aB * d * (1.0 + ssin - 4.0 / 3.0 * cth) / 12.0
            high = aB * d * (1.0 + ssin + 4.0 / 3.0 * cth) / 12.0 - (1.0 - mu_r) * d * d / 4.0
        v, lab = _pick3(mu_r, 1.0 + p1, 1.0 - p2, (low, mid, high), ("low", "middle", "high"))
        return BoundReport(v, f"{tag}.{lab}", {"theta": theta, "psi1": p1, "psi2": p2})

    g = _gamma_arg(args)
    ag = abs(g)
    c8 = 8.0 if which == "C3" else 6.0
    mid = ag if which == "C3" else ag / 3.0
    if variant == "complex_mu":
        w = abs(1.0 + (1.0 - mu) * c8 * g)
        if w <= 1.0:
            return BoundReport(mid, f"{tag}.middle", {"w": w})
        return BoundReport(ag / 2.0 * (w + 1.0), f"{tag}.upper", {"w": w})
    if variant == "real_gamma":
        if g.imag != 0.0 or g.real <= 0.0:
            raise DomainError(f"real_gamma variant needs real gamma > 0, got {g}")
        gr = g.real
        if which == "C3":
            base, slope = gr, 4.0 * gr * gr
        else:
            base, slope = gr / 3.0, gr * gr
        if mu_r <= 1.0:
            return BoundReport(base - (mu_r - 1.0) * slope, f"{tag}.low", {})
        return BoundReport(base + (mu_r - 1.0) * slope, f"{tag}.high", {})
    theta = cmath.phase(g)
    ssin, cth = abs(math.sin(theta)), math.cos(theta)
    p1 = (ssin - cth - 1.0) / (c8 * ag)
    p2 = (ssin + cth - 1.0) / (c8 * ag)
    quad = 4.0 * ag * ag if which == "C3" else ag * ag
    lin_div = 2.0 if which == "C3" else 6.0
    low = quad * (1.0 - mu_r) + ag * (1.0 + ssin - cth) / lin_div
    high = ag * (1.0 + ssin - cth) / lin_div - quad * (1.0 - mu_r)
    v, lab = _pick3(mu_r, 1.0 + p1, 1.0 - p2, (low, mid, high), ("low", "middle", "high"))
    return BoundReport(v, f"{tag}.{lab}", {"theta": theta, "psi1": p1, "psi2": p2})
