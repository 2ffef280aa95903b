"""Truncated Laurent series in eps = s - s0 with log-polynomial coefficients.

The residue engine multiplies local expansions of Gamma(s), the zeta
factors and x^{-s} around a candidate pole.  Expanding x^{-s} brings in
powers of log x, so series coefficients are polynomials in L = log x and
the eps^{-1} coefficient of the product is exactly the residue's
log-polynomial.

Truncation bookkeeping: a series stores its valuation v and a contiguous
window of trusted coefficients [v, v + len(coeffs)).  Everything below v
is known zero, everything at or above `order` = v + len(coeffs) is
unknown.  Addition trusts the window overlap; multiplication trusts
min(len1, len2) coefficients starting at v1 + v2.  A series whose
explicit coefficients are all zero collapses to coeffs=() with valuation
equal to its order marker.

Out of scope here by design: composition/reversion, and any knowledge of
where the coefficients come from.  Gamma/zeta expansions are built in
specfun, pole bookkeeping lives in expansion.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from math import factorial

from .errors import InsufficientOrderError, NotInvertibleError, UsageError

__all__ = ["LogPolynomial", "LaurentSeries", "x_power_series"]


def _as_complex(c) -> complex:
    if isinstance(c, numbers.Complex):
        return complex(c)
    raise TypeError(f"expected a number, got {type(c).__name__}")


@dataclass(frozen=True)
class LogPolynomial:
    """Polynomial in L = log x with complex coefficients, lowest degree first.

    Canonical form has no trailing zero coefficients; the zero polynomial
    is the empty tuple (degree -1).
    """

    coeffs: tuple[complex, ...] = ()

    def __post_init__(self):
        cs = tuple(_as_complex(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def const(cls, c) -> "LogPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LogPolynomial") -> "LogPolynomial":
        if not isinstance(other, LogPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LogPolynomial(tuple(out))

    def __neg__(self) -> "LogPolynomial":
        return LogPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LogPolynomial") -> "LogPolynomial":
        if not isinstance(other, LogPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LogPolynomial):
            if self.is_zero or other.is_zero:
                return LogPolynomial()
            out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return LogPolynomial(tuple(out))
        if isinstance(other, numbers.Complex):
            z = complex(other)
            return LogPolynomial(tuple(c * z for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, logx: complex) -> complex:
        # Horner, highest degree first
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * logx + c
        return acc

    def coefficient(self, k: int) -> complex:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j


_ZERO_POLY = LogPolynomial()


def _as_logpoly(c) -> LogPolynomial:
    if isinstance(c, LogPolynomial):
        return c
    return LogPolynomial.const(c)


@dataclass(frozen=True)
class LaurentSeries:
    """Window of trusted Laurent coefficients around a base point.

    coeffs[k] multiplies eps^(valuation + k).  Invariant: if coeffs is
    nonempty its first entry is a nonzero polynomial.  The zero series
    keeps coeffs=() and uses `valuation` as its order marker (first power
    about which nothing is known).
    """

    s0: complex
    valuation: int
    coeffs: tuple[LogPolynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "s0", _as_complex(self.s0))
        cs = tuple(_as_logpoly(c) for c in self.coeffs)
        v = self.valuation
        while cs and cs[0].is_zero:
            cs = cs[1:]
            v += 1
        if not cs:
            # all-zero window: v has advanced to the order marker
            v = self.valuation + len(self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "valuation", v)

    # ---- structure ----

    @property
    def order(self) -> int:
        """First power outside the trusted window."""
        return self.valuation + len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @classmethod
    def zero(cls, s0, order: int) -> "LaurentSeries":
        return cls(s0, order, ())

    @classmethod
    def from_scalars(cls, s0, valuation: int, scalars) -> "LaurentSeries":
        return cls(s0, valuation, tuple(_as_logpoly(c) for c in scalars))

    def coefficient(self, k: int) -> LogPolynomial:
        if k >= self.order:
            raise InsufficientOrderError(
                f"coefficient of eps^{k} requested, trusted window ends at {self.order}"
            )
        if k < self.valuation:
            return _ZERO_POLY
        return self.coeffs[k - self.valuation]

    def residue(self) -> LogPolynomial:
        """Coefficient of eps^{-1}, the residue's log-polynomial."""
        return self.coefficient(-1)

    def truncate(self, order: int) -> "LaurentSeries":
        if order >= self.order:
            return self
        keep = max(0, order - self.valuation)
        return LaurentSeries(self.s0, self.valuation, self.coeffs[:keep])

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by eps^k."""
        return LaurentSeries(self.s0, self.valuation + k, self.coeffs)

    # ---- ring operations ----

    def _check_base(self, other: "LaurentSeries"):
        if self.s0 != other.s0:
            raise UsageError(
                f"base point mismatch: {self.s0} vs {other.s0}"
            )

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check_base(other)
        hi = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        if hi <= lo:
            return LaurentSeries.zero(self.s0, hi)
        out = [_ZERO_POLY] * (hi - lo)
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                k = src.valuation + i
                if k < hi:
                    out[k - lo] = out[k - lo] + c
        return LaurentSeries(self.s0, lo, tuple(out))

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.s0, self.valuation, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (LogPolynomial, numbers.Complex)):
            scaled = tuple(c * other for c in self.coeffs)
            return LaurentSeries(self.s0, self.valuation, scaled)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        self._check_base(other)
        if self.is_zero or other.is_zero:
            # zero's valuation is its order marker; the product is known
            # zero through order_zero + valuation_other
            return LaurentSeries.zero(self.s0, self.valuation + other.valuation)
        n = min(len(self.coeffs), len(other.coeffs))
        out = [_ZERO_POLY] * n
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.s0, self.valuation + other.valuation, tuple(out))

    __rmul__ = __mul__

    def inverse(self, order: int) -> "LaurentSeries":
        """Multiplicative inverse trusted through eps^order.

        Requires a nonzero constant (L-free) leading coefficient; the
        inverse of a series starting with a genuine log-polynomial is not
        a Laurent series of this shape.
        """
        if self.is_zero:
            raise NotInvertibleError("cannot invert the zero series")
        lead = self.coeffs[0]
        if lead.degree != 0:
            raise NotInvertibleError(
                f"leading coefficient has log-degree {lead.degree}, need a constant"
            )
        c0 = lead.coefficient(0)
        n = order + 1  # window length so that f * inverse = 1 + O(eps^{order+1})
        if n < 1:
            raise InsufficientOrderError(f"nonpositive inverse window (order={order})")
        if n > len(self.coeffs):
            raise InsufficientOrderError(
                f"inverse to eps^{order} needs {n} trusted coefficients, have {len(self.coeffs)}"
            )
        inv0 = LogPolynomial.const(1.0 / c0)
        out = [inv0]
        for k in range(1, n):
            acc = _ZERO_POLY
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(acc * (-1.0 / c0))
        return LaurentSeries(self.s0, -self.valuation, tuple(out))

    def __call__(self, eps: complex, logx: complex = 0.0) -> complex:
        """Evaluate the windowed sum at a concrete eps (diagnostics only)."""
        acc = 0j
        for i, c in enumerate(self.coeffs):
            acc += c(logx) * eps ** (self.valuation + i)
        return acc


def x_power_series(s0, order: int) -> LaurentSeries:
    """Expansion of x^{-s} / x^{-s0} around s0: sum_k (-L)^k eps^k / k!.

    The x^{-s0} prefactor is the caller's business (it becomes the term's
    x-exponent); what rides along here is pure log-polynomial data.
    """
    cs = []
    for k in range(order + 1):
        poly = (0j,) * k + ((-1.0) ** k / factorial(k),)
        cs.append(LogPolynomial(poly))
    return LaurentSeries(s0, 0, tuple(cs))
