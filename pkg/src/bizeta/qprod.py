"""Lattice q-shifted factorials, eta and Lambert series.

    (x; q)_{r,oo} = prod_{m in N_0^r} (1 - q_1^{m_1} ... q_r^{m_r} x)

The product is accumulated as a sum of logarithms, one shell
m_1 + ... + m_r = d at a time, and exponentiated once at the end.
"""
import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._blocks import exp_block
from .bernoulli import multiple_bernoulli
from .errors import ConvergenceError, DomainError, ZeroFactorError
from .params import as_vector, check_orc

DEFAULT_TOL = 1e-15
MAX_SHELLS = 4000
MAX_POINTS = 20_000_000


@dataclass(frozen=True)
class QData:
    x: complex
    qs: tuple
    l: int = None

    def __init__(self, x, qs=(), l=None):
        object.__setattr__(self, "x", complex(x))
        object.__setattr__(self, "qs", tuple(complex(q) for q in qs))
        object.__setattr__(self, "l", l)

    @property
    def r(self):
        return len(self.qs)


@lru_cache(maxsize=256)
def _compositions(d, r):
    """All m in N_0^r with |m| = d, one per row."""
    if r == 1:
        return np.array([[d]], dtype=np.int64)
    blocks = []
    for first in range(d, -1, -1):
        rest = _compositions(d - first, r - 1)
        col = np.full((rest.shape[0], 1), first, dtype=np.int64)
        blocks.append(np.hstack([col, rest]))
    return np.vstack(blocks)


def _tail_after(d, r, rho):
    """Upper bound for sum_{e > d} C(e + r - 1, r - 1) rho^e."""
    total = 0.0
    e = d + 1
    term = math.comb(e + r - 1, r - 1) * rho ** e
    while True:
        total += term
        nxt = term * rho * (e + r) / (e + 1)
        e += 1
        if nxt < 1e-18 * total or nxt == 0.0:
            # ratio is below rho*(1 + (r-1)/e) from here on
            ratio = rho * (e + r) / (e + 1)
            return total + nxt / (1.0 - ratio) if ratio < 1 else math.inf
        term = nxt


def _shells(x, qs):
    """Yields (d, sum of log(1 - q^m x) over |m| = d, number of factors)."""
    r = len(qs)
    logq = np.array([cmath.log(q) for q in qs])
    d = 0
    while True:
        m = _compositions(d, r)
        w = x * np.exp(m @ logq)
        f = 1.0 - w
        if np.any(f == 0):
            raise ZeroFactorError("a factor of the product vanishes")
        yield d, complex(np.log(f).sum()), len(w)
        d += 1


def _check_inside(qs):
    for q in qs:
        if not abs(q) < 1.0:
            raise DomainError("plain factorial needs |q| < 1, got %r" % q)


def log_qpoch_multi(d, tol=DEFAULT_TOL):
    """(log of the product, bound on the neglected tail, factors used)."""
    x, qs = d.x, d.qs
    if d.r == 0:
        if x == 1:
            raise ZeroFactorError("1 - x vanishes")
        return cmath.log(1 - x), 0.0, 1
    _check_inside(qs)
    if x == 0:
        return 0j, 0.0, 0
    rho = max(abs(q) for q in qs)
    ax = abs(x)
    acc = 0j
    used = 0
    for shell, s, n in _shells(x, qs):
        acc += s
        used += n
        lead = ax * rho ** (shell + 1)
        if lead < 0.5:
            bound = ax * _tail_after(shell, d.r, rho) / (1.0 - lead)
            if bound <= tol:
                return acc, bound, used
        if shell >= MAX_SHELLS or used > MAX_POINTS:
            raise ConvergenceError("q-product did not converge within %d shells" % shell)


def qpoch_multi(d, tol=DEFAULT_TOL):
    """(x; q)_{r,oo} for |q_k| < 1."""
    if not isinstance(d, QData):
        raise TypeError("expected QData")
    if d.r == 0:
        if d.x == 1:
            raise ZeroFactorError("1 - x vanishes")
        return 1 - d.x
    return cmath.exp(log_qpoch_multi(d, tol)[0])


def _split(qs, l):
    big = [abs(q) > 1.0 for q in qs]
    if any(abs(q) == 1.0 for q in qs):
        raise DomainError("an entry has modulus one")
    count = sum(big)
    if l is None:
        l = count
    if l != count or any(big[l:]) or not all(big[:l]):
        raise DomainError("entries with |q| > 1 must come first (expected l = %d)" % count)
    return l


def qpoch_tilde(d, tol=DEFAULT_TOL):
    """Generalised factorial for entries on both sides of the unit circle.

    With |q_k| > 1 for k <= l and |q_k| < 1 otherwise,
    (x; q)~ = ((q_1 ... q_l)^{-1} x ; q_1^{-1}, ..., q_l^{-1}, q_{l+1}, ...)^{(-1)^l}.
    """
    l = _split(d.qs, d.l)
    x = d.x
    flipped = []
    for k, q in enumerate(d.qs):
        if k < l:
            x /= q
            flipped.append(1.0 / q)
        else:
            flipped.append(q)
    v = qpoch_multi(QData(x, flipped), tol)
    return 1.0 / v if l % 2 else v


def dedekind_eta(tau, tol=DEFAULT_TOL):
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError("tau must lie in the upper half-plane")
    q = cmath.exp(2j * math.pi * tau)
    return cmath.exp(1j * math.pi * tau / 12) * qpoch_multi(QData(q, [q]), tol)


def lambert_series(power, tau, tol=1e-17):
    """sum_{n >= 1} n^power q^n / (1 - q^n), q = e^{2 pi i tau}."""
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError("tau must lie in the upper half-plane")
    return exp_block(power, tau, [tau], tol)[0]


def lambert_sum(N, tau, tol=1e-17):
    """sum n^{2N-1} q^n / (1 - q^n)."""
    if N < 1:
        raise DomainError("N must be a positive integer")
    return lambert_series(2 * N - 1, tau, tol)


def iseki_product(sign, z, omegas, tol=DEFAULT_TOL):
    """prod_k (x_k; q_k-hat)~ for sign +, prod_k (x_k^{-1}; q_k-hat^{-1})~ for sign -.

    Periods must be in the upper half-plane with increasing arguments, so
    the entries q_jk, j < k, are the large ones.  For sign - the large
    entries are j > k and are moved to the front; the lattice product does
    not depend on the order of its bases.
    """
    om = as_vector(omegas)
    if not all(v.imag > 0 for v in om.values):
        raise DomainError("periods must lie in the upper half-plane")
    if not check_orc(om):
        raise DomainError("periods must have strictly increasing arguments")
    z = complex(z)
    vals = om.values
    r = len(vals)
    total = 1 + 0j
    for k in range(r):
        wk = vals[k]
        x = cmath.exp(2j * math.pi * z / wk)
        before = [cmath.exp(2j * math.pi * vals[j] / wk) for j in range(k)]
        after = [cmath.exp(2j * math.pi * vals[j] / wk) for j in range(k + 1, r)]
        if sign > 0:
            d = QData(x, before + after, l=k)
        else:
            d = QData(1.0 / x, [1.0 / q for q in after] + [1.0 / q for q in before],
                      l=r - 1 - k)
        total *= qpoch_tilde(d, tol)
    return total


def iseki_phase(sign, z, omegas):
    """exp(+-(-1)^r pi i / r! B_{r,r}(z | w)), the factor in front of the product."""
    om = as_vector(omegas)
    r = len(om)
    b = multiple_bernoulli(r, r, complex(z), om)
    e = (-1) ** r if sign > 0 else (-1) ** (r - 1)
    return cmath.exp(e * 1j * math.pi / math.factorial(r) * b)
