"""Double-precision special-function kernel.

Gamma, digamma/polygamma, zeta and zeta derivatives, Bernoulli numbers,
Stieltjes constants, Glaisher's constant, and local Taylor/Laurent
windows of Gamma and zeta at arbitrary base points.  Four classical
kernels underneath:

* Bernoulli numbers as exact fractions from the defining recurrence
  sum_{j=0}^{m} C(m+1,j) B_j = 0.
* Gamma by a 15-term Lanczos rational approximation (g = 607/128) for
  Re(z) >= 1/2 and the reflection formula Gamma(z)Gamma(1-z) =
  pi/sin(pi z) on the left half-plane.
* zeta by Euler-Maclaurin,
      zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
                + sum_{k<=K} B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1},
  for Re(s) >= 1/2, and the functional equation
      zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  on the left.
* Stieltjes constants by the Euler-Maclaurin accelerated limit of
  sum_{k<=m} (log k)^n/k - (log m)^{n+1}/(n+1).

Derivatives are never finite-differenced.  The Euler-Maclaurin sum is run
on truncated Taylor jets (termwise exact differentiation), and left of
the critical strip the jets compose through the functional equation.
sin(pi z) is reduced about the nearest integer, so trivial zeros of zeta
and the pole detection of Gamma are exact rather than 1e-13 noise.

The local-expansion routines return LaurentSeries values so the residue
engine can multiply them directly.  Gamma point values (Lanczos) and
Gamma local series (exact log-series of Gamma(1+eps), exponentiated) are
deliberately independent routes; tests compare them against each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import CapacityError, PoleError, UsageError
from .laurent import LaurentSeries, LogPolynomial

__all__ = [
    "SpecialValueCache",
    "default_cache",
    "bernoulli",
    "gamma",
    "digamma",
    "polygamma",
    "zeta",
    "zeta_derivative",
    "stieltjes",
    "gamma_laurent",
    "zeta_laurent",
]

POLE_TOL = 1e-12  # snap distance to an exceptional point

_BERNOULLI_LIMIT = 128  # exact B_0 .. B_128 (cache bound 2M with M=64)
_STIELTJES_CUTOFF = 64  # base cutoff m for the accelerated limit
_ZETA_N = 40            # Euler-Maclaurin cutoff (raised with |Im s|)
_ZETA_K = 12            # number of Bernoulli correction terms


# ---- Bernoulli numbers ----

@lru_cache(maxsize=None)
def _bernoulli_table(count: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 solved for B_m
    bs = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        for j in range(m):
            if bs[j]:
                acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return tuple(bs)


@lru_cache(maxsize=None)
def _bern_float(m: int) -> float:
    return float(_bernoulli_table(_BERNOULLI_LIMIT + 1)[m])


# B_{2k}/(2k)! for the Euler-Maclaurin corrections
_BERN_OVER_FACT = None


def _bern_over_fact(k: int) -> float:
    global _BERN_OVER_FACT
    if _BERN_OVER_FACT is None:
        _BERN_OVER_FACT = tuple(
            float(_bernoulli_table(2 * _ZETA_K + 3)[2 * j] / factorial(2 * j))
            for j in range(_ZETA_K + 2)
        )
    return _BERN_OVER_FACT[k]


# ---- pole bookkeeping ----

def _nearest_nonpositive_int(s: complex):
    """The integer -n if s sits within POLE_TOL of it, else None."""
    m = round(s.real)
    if m <= 0 and abs(s - m) <= POLE_TOL:
        return m
    return None


def _sinpi(z: complex) -> complex:
    # reduce about the nearest integer so integer z maps to exactly 0
    m = round(z.real)
    s = cmath.sin(math.pi * (z - m))
    return -s if (m & 1) else s


def _cospi(z: complex) -> complex:
    m = round(z.real)
    c = cmath.cos(math.pi * (z - m))
    return -c if (m & 1) else c


# ---- Gamma ----

# Lanczos coefficients for g = 607/128, 15 terms (Godfrey's set).
_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def _lanczos(z: complex) -> complex:
    # valid for Re(z) >= 0.5
    w = z - 1.0
    acc = complex(_LANCZOS_C[0])
    for k in range(1, 15):
        acc += _LANCZOS_C[k] / (w + k)
    t = w + (_LANCZOS_G + 0.5)
    return _SQRT_TWO_PI * t ** (w + 0.5) * cmath.exp(-t) * acc


def gamma(s) -> complex:
    """Gamma(s) for complex s, poles detected within POLE_TOL."""
    s = complex(s)
    p = _nearest_nonpositive_int(s)
    if p is not None:
        raise PoleError(f"gamma pole at {p}", p)
    if s.real < 0.5:
        return math.pi / (_sinpi(s) * _lanczos(1.0 - s))
    return _lanczos(s)


# ---- digamma / polygamma ----

_PSI_SHIFT = 18.0
_PSI_TERMS = 14


def _digamma_raw(z: complex) -> complex:
    acc = 0j
    while z.real < _PSI_SHIFT:
        acc -= 1.0 / z
        z = z + 1.0
    # psi(z) ~ log z - 1/(2z) - sum B_{2k}/(2k) z^{-2k}
    out = cmath.log(z) - 0.5 / z
    z2 = 1.0 / (z * z)
    zp = z2
    for k in range(1, _PSI_TERMS + 1):
        out -= _bern_float(2 * k) / (2 * k) * zp
        zp *= z2
    return out + acc


def _polygamma_raw(m: int, z: complex) -> complex:
    if m == 0:
        return _digamma_raw(z)
    sgn = -1.0 if (m % 2 == 0) else 1.0  # (-1)^{m+1} for the shift terms
    fm = float(factorial(m))
    acc = 0j
    while z.real < _PSI_SHIFT:
        acc += sgn * fm / z ** (m + 1)
        z = z + 1.0
    # psi^{(m)}(z) ~ (-1)^{m-1} [ (m-1)!/z^m + m!/(2 z^{m+1})
    #                             + sum_k B_{2k} (2k+m-1)!/((2k)! z^{2k+m}) ]
    s = factorial(m - 1) / z ** m + fm / (2.0 * z ** (m + 1))
    for k in range(1, _PSI_TERMS + 1):
        s += (
            _bern_float(2 * k)
            * factorial(2 * k + m - 1)
            / factorial(2 * k)
            / z ** (2 * k + m)
        )
    return acc + (-1.0) ** (m - 1) * s


def digamma(s) -> complex:
    s = complex(s)
    p = _nearest_nonpositive_int(s)
    if p is not None:
        raise PoleError(f"digamma pole at {p}", p)
    return _digamma_raw(s)


def polygamma(m: int, s) -> complex:
    """m-th derivative of digamma, m <= 6."""
    if m < 0:
        raise UsageError("polygamma order must be non-negative")
    if m > 6:
        raise CapacityError(f"polygamma order {m} beyond supported 6")
    s = complex(s)
    p = _nearest_nonpositive_int(s)
    if p is not None:
        raise PoleError(f"polygamma pole at {p}", p)
    return _polygamma_raw(m, s)


# ---- zeta: scalar ----

def _zeta_em_scalar(s: complex) -> complex:
    # Euler-Maclaurin on Re(s) >= 1/2; cutoff grows with |Im s| to keep
    # the correction series convergent-looking through K terms
    N = _ZETA_N
    ti = abs(s.imag)
    if ti + 10.0 > N:
        N = int(ti) + 10
    acc = 0j
    for n in range(1, N):
        acc += n ** (-s)
    t = N ** (-s)
    out = acc + N * t / (s - 1.0) + 0.5 * t
    poch = s  # (s)_1
    Np = t / N
    NN = float(N) * N
    for k in range(1, _ZETA_K + 1):
        out += _bern_over_fact(k) * poch * Np
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        Np = Np / NN
    return out


def zeta(s) -> complex:
    """Riemann zeta, Euler-Maclaurin right of the critical line and the
    functional equation left of it."""
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta pole at 1", 1)
    if s.real >= 0.5:
        return _zeta_em_scalar(s)
    return (
        2.0 ** s
        * math.pi ** (s - 1.0)
        * _sinpi(0.5 * s)
        * _lanczos(1.0 - s)
        * _zeta_em_scalar(1.0 - s)
    )


# ---- jet helpers (truncated Taylor arithmetic on plain lists) ----

def _jet_mul(a, b, m: int):
    out = [0j] * (m + 1)
    for i, ai in enumerate(a):
        if i > m or ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > m:
                break
            out[i + j] += ai * bj
    return out


def _jet_exp(a, m: int):
    # exp of a jet; the constant part is folded out as a scalar factor
    e0 = cmath.exp(a[0])
    out = [1.0 + 0j] + [0j] * m
    for k in range(1, m + 1):
        acc = 0j
        for j in range(1, k + 1):
            if j < len(a) and a[j] != 0:
                acc += j * a[j] * out[k - j]
        out[k] = acc / k
    return [e0 * c for c in out]


def _jet_recip(a, m: int):
    c0 = a[0]
    out = [1.0 / c0] + [0j] * m
    for k in range(1, m + 1):
        acc = 0j
        for j in range(1, k + 1):
            if j < len(a):
                acc += a[j] * out[k - j]
        out[k] = -acc / c0
    return out


def _exp_jet_of(base: float, scale: complex, m: int):
    # jet of base^{scale + mu}: base^scale * (log base)^k / k!
    lead = base ** scale
    lb = math.log(base)
    f = 1.0
    out = []
    for k in range(m + 1):
        out.append(lead * f)
        f *= lb / (k + 1)
    return out


def _zeta_em_jet(s0: complex, m: int):
    """Taylor coefficients of zeta at s0 (Re >= 1/2) through order m,
    by running Euler-Maclaurin on jets in mu = s - s0."""
    N = _ZETA_N
    ti = abs(s0.imag)
    if ti + 10.0 > N:
        N = int(ti) + 10
    out = [0j] * (m + 1)
    for n in range(1, N):
        p = n ** (-s0)
        ln = math.log(n)
        f = 1.0
        for k in range(m + 1):
            out[k] += p * f
            f *= -ln / (k + 1)
    # t = jet of N^{-s0-mu}
    lead = N ** (-s0)
    lnN = math.log(N)
    t = []
    f = 1.0
    for k in range(m + 1):
        t.append(lead * f)
        f *= -lnN / (k + 1)
    # N^{1-s0-mu} / (s0 - 1 + mu)
    pole_jet = [s0 - 1.0] + ([1.0 + 0j] if m >= 1 else [])
    rec = _jet_recip(pole_jet, m)
    term = _jet_mul([N * c for c in t], rec, m)
    for k in range(m + 1):
        out[k] += term[k] + 0.5 * t[k]
    # corrections B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    poch = ([s0] + [1.0 + 0j])[: m + 1]  # jet of (s0 + mu)
    for k in range(1, _ZETA_K + 1):
        coeff = _bern_over_fact(k) * float(N) ** (1 - 2 * k)
        contrib = _jet_mul(poch, t, m)
        for i in range(m + 1):
            out[i] += coeff * contrib[i]
        lin1 = [s0 + (2 * k - 1), 1.0 + 0j]
        lin2 = [s0 + 2 * k, 1.0 + 0j]
        poch = _jet_mul(_jet_mul(poch, lin1, m), lin2, m)
    return out


@lru_cache(maxsize=64)
def _gamma_one_taylor(m: int) -> tuple[complex, ...]:
    # Gamma(1 + eps) from log Gamma(1+eps) = -gamma eps + sum (-1)^k zeta(k) eps^k / k
    a = [0j] * (m + 1)
    if m >= 1:
        a[1] = -_stieltjes_all()[0]
    for k in range(2, m + 1):
        a[k] = (-1.0) ** k * _zeta_em_scalar(complex(k)) / k
    return tuple(_jet_exp(a, m))


def _gamma_taylor_regular(w0: complex, m: int):
    # Gamma(w0 + eta) = Gamma(w0) exp( sum psi^{(j-1)}(w0) eta^j / j! )
    a = [0j] * (m + 1)
    for j in range(1, m + 1):
        a[j] = _polygamma_raw(j - 1, w0) / factorial(j)
    jet = _jet_exp(a, m)
    g0 = gamma(w0)
    return [g0 * c for c in jet]


def _flip(jet):
    # substitute mu -> -mu
    return [c * (-1.0) ** k for k, c in enumerate(jet)]


def _zeta_taylor_origin(m: int):
    # zeta(mu) near 0 through the functional equation; the sin factor's
    # zero cancels zeta's pole at argument 1, so work with
    # u = sin(pi mu/2)/mu and v = mu zeta(1-mu) = -1 + sum gamma_n mu^{n+1}/n!
    u = [0j] * (m + 1)
    for j in range(0, m + 1, 2):
        u[j] = (-1.0) ** (j // 2) * (math.pi / 2.0) ** (j + 1) / factorial(j + 1)
    g = _stieltjes_all()
    v = [0j] * (m + 1)
    v[0] = -1.0 + 0j
    for k in range(1, m + 1):
        v[k] = g[k - 1] / factorial(k - 1)
    two = _exp_jet_of(2.0, 0j, m)
    pi_ = _exp_jet_of(math.pi, -1.0 + 0j, m)
    gam = _flip(_gamma_one_taylor(m))  # Gamma(1 - mu)
    out = _jet_mul(two, pi_, m)
    out = _jet_mul(out, u, m)
    out = _jet_mul(out, v, m)
    return _jet_mul(out, gam, m)


def _zeta_taylor(s0: complex, m: int):
    """Taylor coefficients c_0..c_m of zeta at s0 != 1."""
    if s0.real >= 0.5:
        return _zeta_em_jet(s0, m)
    if abs(s0) <= POLE_TOL:
        return _zeta_taylor_origin(m)
    # chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s); zeta = chi * zeta(1-s)
    two = _exp_jet_of(2.0, s0, m)
    pi_ = _exp_jet_of(math.pi, s0 - 1.0, m)
    # sin(pi(s0+mu)/2): derivatives cycle through the quarter turns
    sh = 0.5 * s0
    cyc = (_sinpi(sh), _cospi(sh), -_sinpi(sh), -_cospi(sh))
    sin_jet = []
    f = 1.0
    for k in range(m + 1):
        sin_jet.append(cyc[k % 4] * f)
        f *= (math.pi / 2.0) / (k + 1)
    gam = _flip(_gamma_taylor_regular(1.0 - s0, m))
    zet = _flip(_zeta_em_jet(1.0 - s0, m))
    out = _jet_mul(two, pi_, m)
    out = _jet_mul(out, sin_jet, m)
    out = _jet_mul(out, gam, m)
    return _jet_mul(out, zet, m)


def zeta_derivative(s, m: int) -> complex:
    """m-th derivative of zeta at s, termwise-differentiated kernel."""
    if m < 0:
        raise UsageError("derivative order must be non-negative")
    if m > 6:
        raise CapacityError(f"zeta derivative order {m} beyond supported 6")
    s = complex(s)
    if abs(s - 1.0) <= POLE_TOL:
        raise PoleError("zeta pole at 1", 1)
    if m == 0:
        return zeta(s)
    return _zeta_taylor(s, m)[m] * factorial(m)


# ---- Stieltjes constants and Glaisher ----

def _stieltjes_limit(n: int, cutoff: int, terms: int = 12) -> float:
    """gamma_n by Euler-Maclaurin acceleration of its defining limit."""
    m = cutoff
    s = 0.0
    for k in range(1, m + 1):
        s += math.log(k) ** n / k
    lm = math.log(m)
    s -= lm ** (n + 1) / (n + 1)
    s -= lm ** n / (2.0 * m)
    # f(t) = (log t)^n / t;  f^{(j)}(t) = t^{-(j+1)} sum_i c[j][i] (log t)^i
    # with c[j+1][i] = (i+1) c[j][i+1] - (j+1) c[j][i]
    row = [0.0] * (n + 1)
    row[n] = 1.0
    rows = [row]
    for j in range(2 * terms):
        prev = rows[-1]
        nxt = [0.0] * (n + 1)
        for i in range(n + 1):
            v = -(j + 1) * prev[i]
            if i + 1 <= n:
                v += (i + 1) * prev[i + 1]
            nxt[i] = v
        rows.append(nxt)
    for k in range(1, terms + 1):
        j = 2 * k - 1
        fj = sum(rows[j][i] * lm ** i for i in range(n + 1)) / float(m) ** (j + 1)
        s -= _bern_float(2 * k) / factorial(2 * k) * fj
    return s


def _glaisher_log_limit(m0: int = 24, terms: int = 12) -> float:
    """log A as the accelerated limit of
    sum_{k<=n} k log k - (n^2/2 + n/2 + 1/12) log n + n^2/4."""
    s = sum(k * math.log(k) for k in range(2, m0))
    lm = math.log(m0)
    val = s - 0.5 * m0 * m0 * lm + 0.25 * m0 * m0 + 0.5 * m0 * lm - (lm + 1.0) / 12.0
    # remaining corrections use f(t) = t log t, f^{(2k-1)}(t) = -(2k-3)!/t^{2k-2}
    for k in range(2, terms + 2):
        val += _bern_float(2 * k) / factorial(2 * k) * factorial(2 * k - 3) / float(m0) ** (2 * k - 2)
    return val


# ---- value cache ----

@dataclass(frozen=True)
class SpecialValueCache:
    """Immutable numeric context shared by the kernels.

    stieltjes holds gamma_0..gamma_6; the public accessor serves n <= 4,
    the extra entries feed zeta's Laurent window at its pole (order up
    to 6 needs gamma_6).  zeta_em_params records the (cutoff, correction
    order) the Euler-Maclaurin kernel runs with.
    """

    bernoulli: tuple[Fraction, ...]   # B_0 .. B_128, exact
    stieltjes: tuple[float, ...]      # gamma_0 .. gamma_6
    glaisher_log: float               # log A = 1/12 - zeta'(-1)
    zeta_em_params: tuple[int, int] = (_ZETA_N, _ZETA_K)


@lru_cache(maxsize=1)
def default_cache() -> SpecialValueCache:
    bern = _bernoulli_table(_BERNOULLI_LIMIT + 1)
    stj = tuple(_stieltjes_limit(n, _STIELTJES_CUTOFF) for n in range(7))
    return SpecialValueCache(bern, stj, _glaisher_log_limit(), (_ZETA_N, _ZETA_K))


def _stieltjes_all() -> tuple[float, ...]:
    return default_cache().stieltjes


def bernoulli(m: int, cache: SpecialValueCache | None = None) -> Fraction:
    """Exact Bernoulli number B_m (convention B_1 = -1/2)."""
    if m < 0:
        raise UsageError("Bernoulli index must be non-negative")
    cache = cache or default_cache()
    if m >= len(cache.bernoulli):
        raise CapacityError(
            f"B_{m} beyond cache bound {len(cache.bernoulli) - 1}"
        )
    return cache.bernoulli[m]


def stieltjes(n: int, cache: SpecialValueCache | None = None) -> float:
    """Stieltjes constant gamma_n, n <= 4 (gamma_0 is Euler's constant)."""
    if n < 0:
        raise UsageError("Stieltjes index must be non-negative")
    if n > 4:
        raise CapacityError(f"gamma_{n} beyond supported 4")
    cache = cache or default_cache()
    return cache.stieltjes[n]


def glaisher_log(cache: SpecialValueCache | None = None) -> float:
    """log A, Glaisher's constant, from its own product limit."""
    cache = cache or default_cache()
    return cache.glaisher_log


# ---- local expansions ----

def gamma_laurent(s0, order: int) -> LaurentSeries:
    """Laurent window of Gamma at s0 through eps^order.

    At a pole -n the window is the exact Taylor series of Gamma(1+eps)
    divided by the polynomial eps (eps-1) ... (eps-n) coming from the
    recurrence Gamma(s) = Gamma(s+n+1) / prod_{j<=n} (s+j); at regular
    points it is a plain Taylor series through psi/polygamma.  The pole
    route shares nothing with the Lanczos point values.
    """
    if order < 0:
        raise UsageError("order must be non-negative")
    if order > 8:
        raise CapacityError(f"gamma_laurent order {order} beyond supported 8")
    s0 = complex(s0)
    p = _nearest_nonpositive_int(s0)
    if p is not None:
        n = -p
        num = LaurentSeries.from_scalars(s0, 0, _gamma_one_taylor(order + 1))
        q = [1.0 + 0j]  # prod_{i=1..n} (eps - i), constant term first
        for i in range(1, n + 1):
            nxt = [0j] * (len(q) + 1)
            for d, cq in enumerate(q):
                nxt[d] += cq * (-float(i))
                nxt[d + 1] += cq
            q = nxt
        pad = (order + 3) - len(q)
        den = LaurentSeries.from_scalars(s0, 1, tuple(q) + (0j,) * pad)
        inv = den.inverse(order + 1)
        return (num * inv).truncate(order + 1)
    jets = _gamma_taylor_regular(s0, order)
    return LaurentSeries.from_scalars(s0, 0, jets)


def zeta_laurent(s0, order: int) -> LaurentSeries:
    """Laurent window of zeta at s0 through eps^order.

    At the pole s0=1 this is the Stieltjes expansion
    1/eps + sum (-1)^n gamma_n eps^n / n!; elsewhere a Taylor window.
    """
    if order < 0:
        raise UsageError("order must be non-negative")
    if order > 6:
        raise CapacityError(f"zeta_laurent order {order} beyond supported 6")
    s0 = complex(s0)
    if abs(s0 - 1.0) <= POLE_TOL:
        g = _stieltjes_all()
        cs = [1.0 + 0j]
        for n in range(order + 1):
            cs.append((-1.0) ** n * g[n] / factorial(n))
        return LaurentSeries.from_scalars(s0, -1, cs)
    return LaurentSeries.from_scalars(s0, 0, _zeta_taylor(s0, order))
