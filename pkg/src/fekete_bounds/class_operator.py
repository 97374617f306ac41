"""The subordination operator of S(lambda, gamma; phi) and its coefficient system.

For a normalized ``f = z + a2 z^2 + a3 z^3 + ...`` the class is defined by

    1 + (1/gamma) * [ (z f' + lambda z^2 f'') / ((1 - lambda) f + lambda z f') - 1 ]  <  phi(z)

which is ``z f'/f`` at lambda = 0 and ``1 + z f''/f'`` at lambda = 1.  Equating
the first two coefficients with ``phi(u(z))``, ``u = c1 z + c2 z^2 + ...``, and
likewise for ``g = f^{-1}`` with ``v = d1 w + d2 w^2 + ...``, gives

    (1+lambda) a2 / gamma                          = B1 c1
    [2(1+2lambda) a3 - (1+lambda)^2 a2^2] / gamma  = B1 c2 + B2 c1^2
    -(1+lambda) a2 / gamma                         = B1 d1
    [-2(1+2lambda) a3 + (3+6lambda-lambda^2) a2^2] / gamma = B1 d2 + B2 d1^2
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .power_series import TruncatedSeries, series_derivative, series_div

FEASIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class ClassParams:
    lam: float
    gamma: complex

    def __post_init__(self):
        lam = float(self.lam)
        gamma = complex(self.gamma)
        if not (0.0 <= lam <= 1.0):
            raise DomainError(f"lambda must lie in [0, 1], got {lam}")
        if gamma == 0:
            raise DomainError("gamma must be nonzero")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "gamma", gamma)


def is_feasible_pair(c1: complex, c2: complex, tol: float = FEASIBILITY_TOL) -> bool:
    """Two-coefficient Schur condition for a Schwarz function c1 z + c2 z^2 + ..."""
    a = abs(c1)
    return a <= 1.0 + tol and abs(c2) <= 1.0 - a * a + tol


@dataclass(frozen=True)
class SchwarzPair:
    c1: complex
    c2: complex

    def __post_init__(self):
        c1, c2 = complex(self.c1), complex(self.c2)
        if not is_feasible_pair(c1, c2):
            raise DomainError(f"({c1}, {c2}) violates |c1| <= 1, |c2| <= 1 - |c1|^2")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)


def forward_coefficients(c1, c2, lam, gamma, B1, B2):
    """(a2, a3, d2) from the Schwarz data (c1, c2); d1 is always -c1.

    Plain scalar arithmetic so the same function can be jit-compiled by the
    oracle kernel.
    """
    one_l = 1.0 + lam
    one_2l = 1.0 + 2.0 * lam
    a2 = gamma * B1 * c1 / one_l
    a2sq = a2 * a2
    a3 = (gamma * (B1 * c2 + B2 * c1 * c1) + one_l * one_l * a2sq) / (2.0 * one_2l)
    d1 = -c1
    d2 = ((3.0 + 6.0 * lam - lam * lam) * a2sq - 2.0 * one_2l * a3 - gamma * B2 * d1 * d1) / (gamma * B1)
    return a2, a3, d2


def schwarz_to_a(pair: SchwarzPair, params: ClassParams, B1: float, B2: float) -> tuple[complex, complex]:
    a2, a3, _ = forward_coefficients(pair.c1, pair.c2, params.lam, params.gamma, B1, B2)
    return a2, a3


def induced_inverse_schwarz(pair: SchwarzPair, params: ClassParams, B1: float, B2: float) -> tuple[complex, complex]:
    """(d1, d2) forced on the inverse side; may be infeasible."""
    _, _, d2 = forward_coefficients(pair.c1, pair.c2, params.lam, params.gamma, B1, B2)
    return -pair.c1, d2


def fs_value(a2: complex, a3: complex, mu: complex) -> float:
    return abs(a3 - mu * a2 * a2)


def operator_coefficients(a2: complex, a3: complex, params: ClassParams) -> tuple[complex, complex]:
    """Closed-form coefficients of z and z^2 in the operator image of f."""
    lam, gamma = params.lam, params.gamma
    c1 = (1.0 + lam) * a2 / gamma
    c2 = (2.0 * (1.0 + 2.0 * lam) * a3 - (1.0 + lam) ** 2 * a2 * a2) / gamma
    return c1, c2


def _times_z(s: TruncatedSeries, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs([0.0, *s.coeffs], order)


def operator_expand(f: TruncatedSeries, params: ClassParams) -> TruncatedSeries:
    """Series of the class operator applied to ``f``, to order ``f.order - 1``.

    Numerator and denominator are divided by z before the quotient, which
    leaves the denominator with constant term 1 for every lambda in [0, 1].
    """
    if f.order < 3:
        raise DomainError("operator_expand needs f of order >= 3")
    if f[0] != 0 or f[1] != 1:
        raise DomainError("operator_expand needs a normalized f = z + a2 z^2 + ...")
    n = f.order
    lam = params.lam
    fp = series_derivative(f)
    fpp = series_derivative(fp)
    zfp = _times_z(fp, n)
    z2fpp = _times_z(_times_z(fpp, n - 1), n)
    num = (zfp + lam * z2fpp).shift_down()
    den = ((1.0 - lam) * f + lam * zfp).shift_down()
    q = series_div(num, den)
    return 1.0 + (q - 1.0) / params.gamma
