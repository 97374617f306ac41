"""Ma-Minda target functions phi(z) = 1 + B1 z + B2 z^2 + ...

Families are addressed by stable string ids (``half-plane``, ``janowski``,
``order-beta``, ``strong-beta``, ``lemniscate``, ``kanas-qk``).

Elliptic-integral convention: :func:`elliptic_k` takes the *modulus* ``m``,
``K(m) = int_0^{pi/2} dtheta / sqrt(1 - m^2 sin^2 theta)``.  Libraries that
take the parameter (``scipy.special.ellipk``) expect ``m**2`` instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, UnsupportedError
from .power_series import MAX_ORDER, TruncatedSeries, series_exp

FAMILIES = ("half-plane", "janowski", "order-beta", "strong-beta", "lemniscate", "kanas-qk")

# which keyword parameters each family takes, and which are required
_FAMILY_PARAMS = {
    "half-plane": ((), ()),
    "janowski": (("A", "B"), ("A", "B")),
    "order-beta": (("beta",), ("beta",)),
    "strong-beta": (("beta",), ("beta",)),
    "lemniscate": ((), ()),
    "kanas-qk": (("k", "t"), ("k",)),
}


def elliptic_k(m: float) -> float:
    """Complete elliptic integral of the first kind, modulus convention, via AGM."""
    m = float(m)
    if not (0.0 <= m < 1.0):
        raise DomainError(f"elliptic_k needs modulus in [0, 1), got {m}")
    a, b = 1.0, math.sqrt(1.0 - m * m)
    for _ in range(64):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def qk_coeffs(k: float, t: float | None = None) -> tuple[float, float]:
    """First two Taylor coefficients (Q1, Q2) of the conic-domain map q_k.

    For ``k > 1`` the auxiliary ``t`` in (0, 1) must be supplied; its relation
    to ``k`` is not computed here.
    """
    k = float(k)
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if k < 1:
        bb = (2.0 / math.pi) * math.acos(k)
        q1 = 2.0 * bb * bb / (1.0 - k * k)
        return q1, (bb * bb + 2.0) / 3.0 * q1
    if k == 1:
        q1 = 8.0 / math.pi**2
        return q1, 2.0 / 3.0 * q1
    if t is None:
        raise DomainError("kanas-qk with k > 1 needs t")
    t = float(t)
    if not (0.0 < t < 1.0):
        raise DomainError(f"t must lie in (0, 1), got {t}")
    kt = elliptic_k(t)
    root = math.sqrt(t) * (1.0 + t)
    q1 = math.pi**2 / (4.0 * (k * k - 1.0) * root * kt * kt)
    q2 = (4.0 * kt * kt * (t * t + 6.0 * t + 1.0) - math.pi**2) / (24.0 * root * kt * kt) * q1
    return q1, q2


@dataclass(frozen=True)
class MindaTarget:
    family: str
    params: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        allowed, required = _FAMILY_PARAMS[self.family]
        params = {k: v for k, v in self.params.items() if v is not None}
        for name in params:
            if name not in allowed:
                raise DomainError(f"family {self.family!r} takes no parameter {name!r}")
        for name in required:
            if name not in params:
                raise DomainError(f"family {self.family!r} needs parameter {name!r}")
        params = {k: float(v) for k, v in params.items()}
        object.__setattr__(self, "params", params)
        _validate(self.family, params)

    # convenience constructors
    @classmethod
    def half_plane(cls):
        return cls("half-plane")

    @classmethod
    def janowski(cls, A: float, B: float):
        return cls("janowski", {"A": A, "B": B})

    @classmethod
    def order_beta(cls, beta: float):
        return cls("order-beta", {"beta": beta})

    @classmethod
    def strong_beta(cls, beta: float):
        return cls("strong-beta", {"beta": beta})

    @classmethod
    def lemniscate(cls):
        return cls("lemniscate")

    @classmethod
    def kanas_qk(cls, k: float, t: float | None = None):
        return cls("kanas-qk", {"k": k, "t": t})

    @property
    def B1(self) -> float:
        return minda_coeffs(self)[0]

    @property
    def B2(self) -> float:
        return minda_coeffs(self)[1]

    @property
    def B3(self) -> float | None:
        p = self.params
        if self.family == "half-plane":
            return 2.0
        if self.family == "janowski":
            return p["B"] ** 2 * (p["A"] - p["B"])
        if self.family == "order-beta":
            return 2.0 * (1.0 - p["beta"])
        return None

    def label(self) -> str:
        """Stable ``name=value`` rendering of the parameters, ``;``-separated."""
        return ";".join(f"{k}={format(v, '.15g')}" for k, v in sorted(self.params.items()))


def _validate(family: str, p: dict) -> None:
    if family == "janowski":
        A, B = p["A"], p["B"]
        if not (-1.0 <= B < A <= 1.0):
            raise DomainError(f"janowski needs -1 <= B < A <= 1, got A={A}, B={B}")
    elif family == "order-beta":
        if not (0.0 <= p["beta"] < 1.0):
            raise DomainError(f"order-beta needs 0 <= beta < 1, got {p['beta']}")
    elif family == "strong-beta":
        if not (0.0 < p["beta"] <= 1.0):
            raise DomainError(f"strong-beta needs 0 < beta <= 1, got {p['beta']}")
    elif family == "kanas-qk":
        k = p["k"]
        if k < 0:
            raise DomainError(f"kanas-qk needs k >= 0, got {k}")
        if k > 1:
            t = p.get("t")
            if t is None or not (0.0 < t < 1.0):
                raise DomainError(f"kanas-qk with k > 1 needs t in (0, 1), got {t}")


def minda_coeffs(target: MindaTarget) -> tuple[float, float]:
    p = target.params
    fam = target.family
    if fam == "half-plane":
        return 2.0, 2.0
    if fam == "janowski":
        b1 = p["A"] - p["B"]
        return b1, -p["B"] * b1
    if fam == "order-beta":
        b = 2.0 * (1.0 - p["beta"])
        return b, b
    if fam == "strong-beta":
        return 2.0 * p["beta"], 2.0 * p["beta"] ** 2
    if fam == "lemniscate":
        return 0.5, -0.125
    return qk_coeffs(p["k"], p.get("t"))


def minda_series(target: MindaTarget, order: int) -> TruncatedSeries:
    """Taylor expansion of phi about 0 up to ``order``."""
    if not (0 <= order <= MAX_ORDER):
        raise DomainError(f"order must lie in [0, {MAX_ORDER}], got {order}")
    p = target.params
    fam = target.family
    n = np.arange(order + 1)
    if fam == "half-plane":
        c = np.where(n == 0, 1.0, 2.0)
    elif fam == "janowski":
        A, B = p["A"], p["B"]
        c = np.where(n == 0, 1.0, (A - B) * (-B) ** np.maximum(n - 1, 0))
    elif fam == "order-beta":
        c = np.where(n == 0, 1.0, 2.0 * (1.0 - p["beta"]))
    elif fam == "strong-beta":
        # ((1+z)/(1-z))^beta = exp(2 beta atanh z)
        atanh = np.where(n % 2 == 1, 1.0 / np.maximum(n, 1), 0.0)
        return series_exp(TruncatedSeries(order, 2.0 * p["beta"] * atanh))
    elif fam == "lemniscate":
        c = np.ones(order + 1)
        for k in range(1, order + 1):
            c[k] = c[k - 1] * (0.5 - (k - 1)) / k
    else:
        if order > 2:
            raise UnsupportedError("kanas-qk has closed-form coefficients only up to order 2")
        q1, q2 = qk_coeffs(p["k"], p.get("t"))
        c = np.array([1.0, q1, q2])[: order + 1]
    return TruncatedSeries(order, c.astype(np.complex128))


def minda_value(target: MindaTarget, z: complex) -> complex:
    """Closed-form phi(z) for |z| < 1 (principal branches)."""
    p = target.params
    fam = target.family
    if fam == "half-plane":
        return (1 + z) / (1 - z)
    if fam == "janowski":
        return (1 + p["A"] * z) / (1 + p["B"] * z)
    if fam == "order-beta":
        return (1 + (1 - 2 * p["beta"]) * z) / (1 - z)
    if fam == "strong-beta":
        return ((1 + z) / (1 - z)) ** p["beta"]
    if fam == "lemniscate":
        return cmath.sqrt(1 + z)
    raise UnsupportedError("kanas-qk has no closed-form evaluation here")
