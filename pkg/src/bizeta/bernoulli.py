"""Bernoulli numbers and multiple Bernoulli polynomials.

B_{r,n}(z | w) is the coefficient of t^n/n! in

    t^r e^{zt} / prod_j (e^{w_j t} - 1).

Each factor w_j t / (e^{w_j t} - 1) is expanded from cached Bernoulli
numbers, never by series division, so widely different |w_j| do not lose
digits to cancellation.
"""
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError
from .params import as_vector

MAX_INDEX = 64

_lock = threading.Lock()
_exact = None
_floats = None


def _table():
    global _exact, _floats
    if _floats is None:
        with _lock:
            if _floats is None:
                # sum_{k<=m} C(m+1, k) B_k = 0, with B_1 = -1/2
                b = [Fraction(1)]
                for m in range(1, MAX_INDEX + 1):
                    acc = Fraction(0)
                    for k in range(m):
                        acc += math.comb(m + 1, k) * b[k]
                    b.append(-acc / (m + 1))
                _exact = tuple(b)
                _floats = tuple(float(x) for x in b)
    return _floats


def bernoulli_number(m):
    """Classical B_m (B_1 = -1/2), 0 <= m <= 64."""
    if m < 0 or m != int(m):
        raise RangeError("Bernoulli index must be a nonnegative integer")
    if m > MAX_INDEX:
        raise RangeError("Bernoulli numbers are tabulated up to m = %d" % MAX_INDEX)
    return _table()[int(m)]


def bernoulli_exact(m):
    bernoulli_number(m)
    return _exact[int(m)]


class TruncatedSeries:
    """Power series in t kept to a fixed order L."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [complex(c) for c in coeffs]

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __mul__(self, other):
        L = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0j] * (L + 1)
        for i in range(L + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(L + 1 - i):
                out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    @classmethod
    def one(cls, L):
        return cls([1.0] + [0.0] * L)

    @classmethod
    def exp(cls, z, L):
        c = [1 + 0j]
        for k in range(1, L + 1):
            c.append(c[-1] * z / k)
        return cls(c)

    @classmethod
    def todd(cls, w, L):
        """Expansion of w t / (e^{w t} - 1)."""
        if L > MAX_INDEX:
            raise RangeError("series order %d exceeds %d" % (L, MAX_INDEX))
        tab = _table()
        c = []
        p = 1 + 0j
        fact = 1.0
        for m in range(L + 1):
            if m:
                p *= w
                fact *= m
            c.append(tab[m] * p / fact)
        return cls(c)


def _omegas(omegas, r):
    omegas = as_vector(omegas)
    if r is not None and r != len(omegas):
        raise DomainError("r = %d but %d parameters given" % (r, len(omegas)))
    vals = omegas.values
    for v in vals:
        if v == 0:
            raise DomainError("zero period")
    return vals


def _kernel(vals, L):
    s = TruncatedSeries.one(L)
    for w in vals:
        s = s * TruncatedSeries.todd(w, L)
    return s


def _volume(vals):
    p = 1 + 0j
    for w in vals:
        p *= w
    return p


def multiple_bernoulli(r, n, z, omegas):
    """B_{r,n}(z | omegas) by coefficient extraction."""
    if n < 0 or n > 60:
        raise RangeError("order n must lie in 0..60")
    vals = _omegas(omegas, r)
    ser = _kernel(vals, n) * TruncatedSeries.exp(complex(z), n)
    return math.factorial(n) * ser.coeffs[n] / _volume(vals)


@dataclass(frozen=True)
class BernoulliPoly:
    r: int
    n: int
    omegas: object
    coeffs_in_z: tuple

    def __call__(self, z):
        acc = 0j
        for c in reversed(self.coeffs_in_z):
            acc = acc * z + c
        return acc

    def derivative(self):
        c = self.coeffs_in_z
        return BernoulliPoly(self.r, self.n - 1, self.omegas,
                             tuple(k * c[k] for k in range(1, len(c))))


def multiple_bernoulli_poly(r, n, omegas):
    if n < 0 or n > 60:
        raise RangeError("order n must lie in 0..60")
    vals = _omegas(omegas, r)
    p = _kernel(vals, n).coeffs
    vol = _volume(vals)
    nf = math.factorial(n)
    coeffs = tuple(nf / math.factorial(l) * p[n - l] / vol for l in range(n + 1))
    return BernoulliPoly(r, n, as_vector(omegas), coeffs)


def tail_coefficients(omegas, K):
    """(-1)^n B_{r,n}(0 | omegas) / n! for n = 0..K.

    These are the Taylor coefficients of t^r / prod(1 - e^{-w_j t}), which
    drive the large-argument expansion of the lattice zeta sum.
    """
    vals = _omegas(omegas, None)
    p = _kernel(vals, K).coeffs
    vol = _volume(vals)
    return [(-1) ** k * p[k] / vol for k in range(K + 1)]
