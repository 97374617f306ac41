"""Truncated power series over complex doubles.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0 .. c_N``; everything
above ``z**N`` is unknown.  Binary arithmetic keeps the smaller of the two
orders.  Composition and reversion keep the order of the outer (resp. base)
operand, treating the inner series as a polynomial past its own order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError

MAX_ORDER = 16
DEFAULT_ORDER = 3

# structural identities (round trips, quotient checks)
STRUCTURAL_TOL = 1e-12
# agreement between two independent code paths
CROSS_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    order: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not (0 <= self.order <= MAX_ORDER):
            raise DomainError(f"order must lie in [0, {MAX_ORDER}], got {self.order}")
        c = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if c.shape[0] != self.order + 1:
            raise DomainError(
                f"order {self.order} needs {self.order + 1} coefficients, got {c.shape[0]}"
            )
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[complex], order: int | None = None) -> "TruncatedSeries":
        """Build a series from leading coefficients, zero-padding up to ``order``."""
        c = list(coeffs)
        if order is None:
            order = len(c) - 1
        if len(c) > order + 1:
            c = c[: order + 1]
        c = c + [0.0] * (order + 1 - len(c))
        return cls(order, np.asarray(c, dtype=np.complex128))

    @classmethod
    def constant(cls, value: complex, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series ``z`` (order >= 1)."""
        return cls.from_coeffs([0.0, 1.0], order)

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __len__(self) -> int:
        return self.order + 1

    def __add__(self, other):
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, -self.coeffs)

    def __sub__(self, other):
        return series_add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return series_add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if np.isscalar(other):
            return TruncatedSeries(self.order, self.coeffs * complex(other))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if np.isscalar(other):
            return TruncatedSeries(self.order, self.coeffs / complex(other))
        return series_div(self, other)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise DomainError(f"cannot raise order {self.order} to {order} by truncation")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def shift_down(self) -> "TruncatedSeries":
        """Divide by ``z``; the constant term must vanish."""
        if self.coeffs[0] != 0:
            raise DomainError("shift_down needs a zero constant term")
        if self.order == 0:
            return TruncatedSeries(0, [0.0])
        return TruncatedSeries(self.order - 1, self.coeffs[1:])

    def evaluate(self, z: complex) -> complex:
        """Horner evaluation of the stored polynomial part."""
        acc = 0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return complex(acc)

    def allclose(self, other: "TruncatedSeries", tol: float = STRUCTURAL_TOL) -> bool:
        n = min(self.order, other.order)
        return bool(np.all(np.abs(self.coeffs[: n + 1] - other.coeffs[: n + 1]) <= tol))

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"TruncatedSeries(order={self.order}, [{terms}])"


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(complex(x), order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(n, a.coeffs[: n + 1] + b.coeffs[: n + 1])


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    prod = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1]
    return TruncatedSeries(n, prod)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``a / b``; ``b`` must have a nonzero constant term."""
    b0 = b.coeffs[0]
    if b0 == 0:
        raise DomainError("divisor has zero constant term")
    n = min(a.order, b.order)
    q = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        acc = a.coeffs[k]
        for j in range(k):
            acc -= q[j] * b.coeffs[k - j]
        q[k] = acc / b0
    return TruncatedSeries(n, q)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` to the order of ``outer``.

    ``inner`` must have zero constant term.  If ``inner`` is shorter than
    ``outer`` it is zero-padded, i.e. read as a polynomial.
    """
    if inner.coeffs[0] != 0:
        raise DomainError("inner series must have zero constant term")
    n = outer.order
    w = TruncatedSeries.from_coeffs(inner.coeffs[: n + 1], n)
    acc = TruncatedSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        c = series_mul(acc, w).coeffs.copy()
        c[0] += outer.coeffs[k]
        acc = TruncatedSeries(n, c)
    return acc


def series_reversion(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``g`` of a normalized ``f = z + a2 z^2 + ...``.

    Coefficients are fixed one at a time so that ``f(g(w)) = w``; for a
    normalized series this is the same ``g`` that satisfies ``g(f(z)) = z``.
    """
    if f.order < 1 or f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise DomainError("reversion needs a normalized series z + a2 z^2 + ...")
    n = f.order
    g = TruncatedSeries.identity(n)
    for k in range(2, n + 1):
        residual = series_compose(f, g).coeffs[k]
        c = g.coeffs.copy()
        c[k] -= residual
        g = TruncatedSeries(n, c)
    return g


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    if f.order == 0:
        return TruncatedSeries(0, [0.0])
    k = np.arange(1, f.order + 1)
    return TruncatedSeries(f.order - 1, f.coeffs[1:] * k)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``exp(f)`` for ``f`` with zero constant term (used for real powers)."""
    if f.coeffs[0] != 0:
        raise DomainError("series_exp needs a zero constant term")
    n = f.order
    e = np.zeros(n + 1, dtype=np.complex128)
    e[0] = 1.0
    # e' = f' e  ->  k e_k = sum_j j f_j e_{k-j}
    for k in range(1, n + 1):
        e[k] = sum(j * f.coeffs[j] * e[k - j] for j in range(1, k + 1)) / k
    return TruncatedSeries(n, e)
