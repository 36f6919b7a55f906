"""Exponential and periodic n-series shared by the Fourier formulas.

``exp_block`` sums  sum_{n>=1} n^p e^{2 pi i n E} / prod_j (1 - e^{2 pi i n P_j})
with Im E > 0 and Im P_j > 0, truncating on an explicit geometric bound.

``signed_block`` rewrites factors with |e^{2 pi i P}| > 1 into that shape:
1/(1 - Q^n) = -Q^{-n} / (1 - Q^{-n}).
"""
import cmath
import math

import numpy as np

from .dcx import gamma
from .errors import ConvergenceError, DomainError

TWO_PI = 2.0 * math.pi
NMAX = 2_000_000


def _terms_needed(p, lam, guard, tol):
    """Smallest-ish N with guard * sum_{n>N} n^p e^{-lam n} <= tol * peak."""
    peak_n = max(1.0, p / lam) if p > 0 else 1.0
    log_peak = p * math.log(peak_n) - lam * peak_n
    n = peak_n
    target = math.log(tol) + log_peak
    for _ in range(200):
        nn = n + 1.0
        ratio = math.exp(p * math.log1p(1.0 / nn) - lam) if p > 0 else math.exp(-lam)
        if ratio < 1.0:
            log_tail = p * math.log(nn) - lam * nn - math.log1p(-ratio) + math.log(guard)
            if log_tail <= target:
                return int(math.ceil(n))
        n = n * 1.5 + 8.0
        if n > NMAX:
            break
    raise ConvergenceError("exponential block needs more than %d terms" % NMAX)


def exp_block(power, E, P=(), tol=1e-17):
    """Returns (value, tail_bound, terms)."""
    E = complex(E)
    lam = TWO_PI * E.imag
    if not lam > 0:
        raise DomainError("exponent %r not in the upper half-plane" % E)
    guard = 1.0
    for v in P:
        v = complex(v)
        if not v.imag > 0:
            raise DomainError("period %r not in the upper half-plane" % v)
        guard /= -math.expm1(-TWO_PI * v.imag)
    power = complex(power)
    N = _terms_needed(power.real, lam, guard, tol)
    n = np.arange(1, N + 1, dtype=float)
    logn = np.log(n)
    terms = np.exp(power * logn + 2j * math.pi * E * n)
    for v in P:
        terms = terms / (1.0 - np.exp(2j * math.pi * complex(v) * n))
    value = complex(terms.sum())
    peak = float(np.abs(terms).max()) if N else 0.0
    return value, tol * peak, N


def signed_block(power, z_k, omega_jk, sign, tol=1e-17):
    """sum_n n^power e^{sign 2 pi i n z_k} prod_j (1 - e^{sign 2 pi i n omega_jk})^{-1}."""
    E = sign * complex(z_k)
    coef = 1.0
    P = []
    for v in omega_jk:
        v = sign * complex(v)
        if abs(v.imag) <= 1e-14 * abs(v):
            raise DomainError("two parameters share an argument")
        if v.imag > 0:
            P.append(v)
        else:
            E -= v
            P.append(-v)
            coef = -coef
    if not E.imag > 0:
        raise DomainError("Fourier block diverges: effective exponent %r" % E)
    value, err, N = exp_block(power, E, P, tol)
    return coef * value, err, N


def _eulerian_polylogs(rho, K):
    """Abel values of sum_{j>=1} j^k rho^j for k = 1..K (rho != 1)."""
    out = []
    row = [1]
    one_minus = 1.0 - rho
    for k in range(1, K + 1):
        if k > 1:
            new = [0] * k
            for m in range(k):
                a = (k - m) * row[m - 1] if m >= 1 else 0
                b = (m + 1) * row[m] if m < len(row) else 0
                new[m] = a + b
            row = new
        acc = 0j
        for m in reversed(range(len(row))):
            acc = acc * rho + row[m]
        out.append(acc * rho / one_minus ** (k + 1))
    return out


def _zeta_above_one(sigma):
    if sigma.real > 40:
        n = np.arange(1, 8, dtype=float)
        return complex(np.exp(-sigma * np.log(n)).sum())
    # barnes imports this module, so the lattice summation is fetched lazily
    from .barnes import _lattice_zeta
    from .dcx import from_principal
    from .params import ParameterVector
    return _lattice_zeta(sigma, from_principal(1.0), ParameterVector([1.0]), 1e-17)[0]


def _growing_periodic_sum(p, a, kmax=400):
    """Abel value for Re p > 0 and 0 < |a| <= 1/2 from the expansion in mu = 2 pi i a,

        Li_{-p}(e^mu) = Gamma(1+p) (-mu)^{-1-p} + sum_k zeta(-p-k) mu^k / k!,

    with zeta(-p-k) taken from zeta(1+p+k) by the functional equation.  The
    head-and-tail sum would cancel terms of size N^p here.
    """
    g = gamma(1 + p)
    mu = 2j * math.pi * a
    total = g * cmath.exp((-1 - p) * cmath.log(-mu))
    coef = 2 * TWO_PI ** (-1 - p) * g
    ratio = 1 + 0j
    for k in range(kmax):
        sigma = 1 + p + k
        size = coef * ratio * _zeta_above_one(sigma)
        total += size * cmath.cos(0.5 * math.pi * sigma)
        # the cosine vanishes on every other k for integer p, so bound by the envelope
        envelope = abs(size) * max(1.0, math.exp(0.5 * math.pi * abs(sigma.imag)))
        # later terms shrink at least like |a| (k + 1 + |p|) / (k + 1)
        step = abs(a) * (k + 2 + abs(p)) / (k + 2)
        if k > abs(p) and step < 0.9 and envelope * step / (1 - step) < 1e-17 * abs(total):
            return total, envelope, k + 1
        ratio *= sigma / (k + 1) * (1j * a)
    raise ConvergenceError("periodic sum expansion did not settle")


def periodic_sum(power, a, K=24):
    """Abel-summed  sum_{n>=1} n^power e^{2 pi i n a}  for real a not in Z.

    This is entire in ``power``.  A long partial sum is followed by the
    expansion of the tail in powers of 1/N with polylogarithms of negative
    order as coefficients.
    """
    a = float(a)
    a -= math.floor(a + 0.5)
    d = abs(a)
    if d < 1e-8:
        raise DomainError("periodic sum needs a non-integer frequency")
    power = complex(power)
    if power.real > 0:
        return _growing_periodic_sum(power, a)
    N = int(min(max(8.0, (K + abs(power)) / (math.pi * d)), NMAX))
    rho = cmath.exp(2j * math.pi * a)
    n = np.arange(1, N + 1, dtype=float)
    head = complex(np.exp(power * np.log(n) + 2j * math.pi * a * n).sum())
    x0 = float(N + 1)
    lis = _eulerian_polylogs(rho, K)
    tail = x0 ** power / (1.0 - rho)
    binom = 1 + 0j
    last = abs(tail)
    for k in range(1, K + 1):
        binom *= (power - k + 1) / k
        term = binom * x0 ** (power - k) * lis[k - 1]
        tail += term
        last = abs(term)
    tail *= cmath.exp(2j * math.pi * a * x0)
    return head + tail, last, N
