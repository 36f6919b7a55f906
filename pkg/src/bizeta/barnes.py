"""Barnes multiple zeta function.

    zeta_r(s, z | w) = sum_{m in N_0^r} (z + m_1 w_1 + ... + m_r w_r)^{-s}

Three evaluation routes are provided:

* lattice summation (``barnes_zeta_direct``): a finite box of lattice points
  plus, for every face of the box, the large-argument expansion of the
  remaining lower-rank sum.  The same machinery continues analytically in s
  and is exposed as ``barnes_zeta_asymptotic``.
* the exponentially convergent Fourier form on the open zonotope D
  (``barnes_zeta_fourier``), reached from other z by unit shifts;
* closed forms at s = 1 - m and for the residues at s = 1..r.

Arguments of lattice points are taken continuously inside the sector
spanned by the directed arguments of the generators, so rotating every
input by theta multiplies the value by e^{-i theta s}.
"""
import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._blocks import periodic_sum, signed_block
from .bernoulli import multiple_bernoulli, tail_coefficients
from .dcx import DirectedComplex, cpow, from_principal, gamma, in_window
from .errors import (BoundaryError, ConvergenceError, DomainError, PoleError,
                     ReductionError)
from .params import ParameterVector, as_vector, check_oc, cone_margin, hat

EPS_INT = 1e-6
MAX_SHIFTS = 64
DEFAULT_TOL = 1e-13


@dataclass(frozen=True)
class EvalResult:
    value: complex
    err_estimate: float
    terms_used: int
    method: str

    def as_dict(self):
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "err_estimate": self.err_estimate,
            "terms_used": self.terms_used,
            "method": self.method,
        }


@dataclass(frozen=True)
class BarnesRequest:
    s: complex
    z: DirectedComplex
    omegas: ParameterVector

    def __init__(self, s, z, omegas):
        object.__setattr__(self, "s", complex(s))
        object.__setattr__(self, "z", from_principal(z))
        object.__setattr__(self, "omegas", as_vector(omegas))

    @property
    def r(self):
        return len(self.omegas)


def _nearest_int(s):
    n = round(s.real)
    if abs(s - n) < EPS_INT:
        return int(n)
    return None


# ---------------------------------------------------------------------------
# lattice summation with large-argument tails


def _pochhammer_ratios(s, k, K):
    """Gamma(s + n - k) / Gamma(s) for n = 0..K, as rational functions of s."""
    out = []
    for n in range(K + 1):
        if n >= k:
            v = 1 + 0j
            for i in range(n - k):
                v *= s + i
        else:
            d = 1 + 0j
            for i in range(n - k, 0):
                d *= s + i
            if d == 0:
                raise PoleError("lattice tail has a pole at s = %r" % s)
            v = 1.0 / d
        out.append(v)
    return out


def _tail_expansion(s, W, gens, tol_abs, kmax=60):
    """sum over W of zeta_k(s, W | gens) via its large-|W| expansion.

    zeta_k(s, w) ~ sum_n c_n Gamma(s+n-k)/Gamma(s) w^{k-s-n},
    c_n = (-1)^n B_{k,n}(0 | gens) / n!.  Summation stops at the first
    order whose contribution drops under tol_abs, or where the divergent
    asymptotic series starts to grow.
    """
    k = len(gens)
    coeffs = tail_coefficients(ParameterVector(gens), kmax)
    ratios = _pochhammer_ratios(s, k, kmax)
    logw = np.log(W)
    pw = np.exp((k - s) * logw)
    inv = 1.0 / W
    acc = 0j
    best = math.inf
    last = math.inf
    used = 0
    for n in range(kmax + 1):
        c = coeffs[n] * ratios[n]
        if c != 0:
            t = c * pw
            mag = float(np.abs(t).sum())
            if n > k + 2 and mag > 4.0 * best:
                break
            acc += complex(t.sum())
            used = n + 1
            last = mag
            best = min(best, mag)
            if n >= k and mag <= tol_abs:
                break
        pw = pw * inv
    return acc, last, used * W.size


def _lattice_zeta(s, z, omegas, tol):
    """Box sum plus face expansions; valid for every s off the poles."""
    s = complex(s)
    vals = omegas.values
    args = omegas.args
    lo, hi = min(args), max(args)
    if hi - lo >= math.pi:
        raise DomainError("generators do not fit in an open half-plane")
    phi = 0.5 * (lo + hi)
    za = z.argument
    if max(hi, za) - min(lo, za) > math.pi + 1e-12:
        raise DomainError("z and the generators violate the one-side condition")
    rot = cmath.exp(-1j * phi)
    zr = cmath.rect(z.modulus, za - phi)
    gens = [v * rot for v in vals]
    reach = [g.real for g in gens]
    wmax = max(abs(v) for v in vals)
    depth = math.log(1.0 / tol) + 6.0
    target = depth * wmax / (2 * math.pi) + max(0.0, -zr.real)
    sizes = [max(2, int(math.ceil(target / c))) for c in reach]
    r = len(gens)

    grids = np.meshgrid(*[np.arange(M, dtype=float) for M in sizes], indexing="ij")
    W = np.full(grids[0].shape, zr, dtype=complex)
    for g, m in zip(gens, grids):
        W = W + g * m
    if np.any(W == 0):
        raise DomainError("a lattice point coincides with the origin")
    box = complex(np.exp(-s * np.log(W)).sum())
    terms = W.size
    scale = max(abs(box), float(np.abs(np.exp(-s * np.log(W.ravel()[:1])))[0]), 1e-300)
    tol_abs = tol * scale
    total = box
    err = 0.0
    for size in range(1, r + 1):
        for S in itertools.combinations(range(r), size):
            rest = [j for j in range(r) if j not in S]
            base = zr + sum(sizes[j] * gens[j] for j in S)
            if rest:
                sub = np.meshgrid(*[np.arange(sizes[j], dtype=float) for j in rest],
                                  indexing="ij")
                Wf = np.full(sub[0].shape, base, dtype=complex)
                for j, m in zip(rest, sub):
                    Wf = Wf + gens[j] * m
                Wf = Wf.ravel()
            else:
                Wf = np.array([base])
            val, e, used = _tail_expansion(s, Wf, [gens[j] for j in S], tol_abs / (2 ** r))
            total += val
            err += e
            terms += used
    value = cmath.exp(-1j * s * phi) * total
    return value, abs(cmath.exp(-1j * s * phi)) * (err + 1e-16 * terms ** 0.5 * scale), terms


def barnes_zeta_direct(req, tol=DEFAULT_TOL):
    """Lattice summation, contract region Re s > r + 1/2."""
    s, z, om = req.s, req.z, req.omegas
    r = len(om)
    if r == 0:
        return EvalResult(cpow(z, -s), 0.0, 1, "direct")
    if not s.real > r + 0.5:
        raise ConvergenceError("direct summation needs Re s > r + 1/2")
    if not check_oc(z, om):
        raise DomainError("one-side condition fails")
    value, err, terms = _lattice_zeta(s, z, om, tol)
    return EvalResult(value, err, terms, "direct")


def barnes_zeta_asymptotic(req, tol=DEFAULT_TOL):
    """Same lattice machinery, used as an analytic continuation in s."""
    s, z, om = req.s, req.z, req.omegas
    r = len(om)
    if r == 0:
        return EvalResult(cpow(z, -s), 0.0, 1, "direct")
    n = _nearest_int(s)
    if n is not None and 1 <= n <= r:
        raise PoleError("zeta_%d has a pole at s = %d" % (r, n))
    value, err, terms = _lattice_zeta(s, z, om, tol)
    return EvalResult(value, err, terms, "asymptotic")


# ---------------------------------------------------------------------------
# closed forms


def barnes_special_value(m, z, omegas):
    """zeta_r(1 - m, z | w) = (-1)^r (m-1)!/(m+r-1)! B_{r, r+m-1}(z | w)."""
    omegas = as_vector(omegas)
    r = len(omegas)
    if r < 1:
        raise DomainError("closed form needs r >= 1")
    if m < 1:
        raise DomainError("m must be a positive integer")
    z = complex(z.value if isinstance(z, DirectedComplex) else z)
    b = multiple_bernoulli(r, r + m - 1, z, omegas)
    return (-1) ** r * math.factorial(m - 1) / math.factorial(m + r - 1) * b


def barnes_residue(m, z, omegas):
    """Residue of zeta_r(s, z | w) at s = m, 1 <= m <= r."""
    omegas = as_vector(omegas)
    r = len(omegas)
    if not 1 <= m <= r:
        raise DomainError("residues sit at s = 1..%d" % r)
    z = complex(z.value if isinstance(z, DirectedComplex) else z)
    b = multiple_bernoulli(r, r - m, z, omegas)
    return (-1) ** (r - m) / (math.factorial(m - 1) * math.factorial(r - m)) * b


# ---------------------------------------------------------------------------
# Fourier form on the cone


def _require_fourier_domain(z, om):
    for v in om.values:
        if not v.imag > 0:
            raise DomainError("Fourier form needs every period in the upper half-plane")
    margin = cone_margin(complex(z), om)
    scale = sum(abs(v) for v in om.values)
    if margin <= 1e-9 * scale:
        if margin >= -1e-9 * scale:
            raise BoundaryError("z lies on the boundary of the cone")
        raise DomainError("z is outside the cone")


def _fourier_sums(s, z, om):
    """(A_plus, A_minus, terms): the two k-sums of the Fourier form."""
    r = len(om)
    zc = complex(z)
    if r == 1:
        w = om[0]
        a = (zc / w.value).real
        pw = cpow(w, -s)
        ap, _, n1 = periodic_sum(s - 1, a)
        am, _, n2 = periodic_sum(s - 1, -a)
        return pw * ap, pw * am, n1 + n2
    vals = om.values
    ap = am = 0j
    terms = 0
    for k in range(r):
        wk = vals[k]
        zk = zc / wk
        ojk = [vals[j] / wk for j in range(r) if j != k]
        pw = cpow(om[k], -s)
        bp, _, n1 = signed_block(s - 1, zk, ojk, +1)
        bm, _, n2 = signed_block(s - 1, zk, ojk, -1)
        ap += pw * bp
        am += pw * bm
        terms += n1 + n2
    return ap, am, terms


def _fourier_value(s, z, om):
    ap, am, terms = _fourier_sums(s, z, om)
    pref = (2 * math.pi) ** (s - 1) * gamma(1 - s)
    ph = cmath.exp(0.5j * math.pi * (s - 1))
    return pref * (ph * ap + am / ph), terms


def _limit(fn, s0, h=1e-3):
    """Removable singularity at s0: symmetric averages with Richardson."""
    a1 = 0.5 * (fn(s0 + h) + fn(s0 - h))
    a2 = 0.5 * (fn(s0 + 2 * h) + fn(s0 - 2 * h))
    return (4 * a1 - a2) / 3, abs(a1 - a2)


def barnes_zeta_fourier(req, tol=DEFAULT_TOL, closed_forms=True):
    """Fourier form, valid for z in the open zonotope D with periods in H.

    At s = 1 - m the series itself is finite (Gamma(1 - s) = (m-1)!); with
    ``closed_forms`` off it is summed there instead of returning the
    Bernoulli value.
    """
    s, z, om = req.s, req.z, req.omegas
    r = len(om)
    if r < 1:
        raise DomainError("Fourier form needs r >= 1")
    _require_fourier_domain(z.value, om)
    n = _nearest_int(s)
    if n is not None:
        if n <= 0 and closed_forms:
            v = barnes_special_value(1 - n, z, om)
            return EvalResult(v, 0.0, 0, "special-value")
        if n <= 0:
            v, terms = _fourier_value(complex(n), z.value, om)
            return EvalResult(v, tol * abs(v), terms, "fourier")
        if n <= r:
            raise PoleError("zeta_%d has a pole at s = %d" % (r, n))
        v, err = _limit(lambda t: _fourier_value(t, z.value, om)[0], complex(n))
        return EvalResult(v, err, 0, "fourier")
    v, terms = _fourier_value(s, z.value, om)
    return EvalResult(v, tol * abs(v), terms, "fourier")


# ---------------------------------------------------------------------------
# dispatcher


def _coordinates(z, vals):
    """Real coefficients a with sum a_k w_k = z, chosen near (1/2, ..., 1/2)."""
    r = len(vals)
    if r == 1:
        q = z / vals[0]
        if abs(q.imag) > 1e-12 * (1 + abs(q)):
            raise ReductionError("z is not on the line of the single period")
        return np.array([q.real])
    A = np.array([[v.real for v in vals], [v.imag for v in vals]])
    half = np.full(r, 0.5)
    rhs = np.array([z.real, z.imag]) - A @ half
    a = half + np.linalg.pinv(A) @ rhs
    if r == 2:
        return a
    # free directions: push fractional parts away from integers
    _, _, vt = np.linalg.svd(A)
    null = vt[2:]
    best, best_a = -1.0, a
    for coeffs in itertools.product(np.linspace(-0.5, 0.5, 21), repeat=min(len(null), 2)):
        cand = a + sum(c * v for c, v in zip(coeffs, null))
        frac = cand - np.floor(cand)
        score = float(np.min(np.minimum(frac, 1 - frac)))
        if score > best + 1e-12:
            best, best_a = score, cand
    return best_a


def _shift_plan(z, om, order=None):
    vals = om.values
    a = _coordinates(complex(z), vals)
    shifts = [int(math.floor(x)) for x in a]
    frac = [x - n for x, n in zip(a, shifts)]
    if min(min(f, 1 - f) for f in frac) < 1e-9:
        raise ReductionError("z lies on a translate of the cone boundary")
    if sum(abs(n) for n in shifts) > MAX_SHIFTS:
        raise ReductionError("more than %d unit shifts needed" % MAX_SHIFTS)
    ks = list(order) if order is not None else list(range(len(vals)))
    return [(k, shifts[k]) for k in ks]


def _direct_point(w, center):
    return in_window(w, center - math.pi, center + math.pi - 1e-15)


def _reduce_and_evaluate(s, z, om, tol, order):
    plan = _shift_plan(z.value, om, order)
    vals = om.values
    point = z.value
    total = 0j
    err = 0.0
    terms = 0
    nshift = 0
    for k, n in plan:
        sub = hat(om, k + 1)
        for _ in range(abs(n)):
            if n > 0:
                point = point - vals[k]
                res = barnes_zeta(BarnesRequest(s, _direct_point(point, math.pi / 2), sub), tol)
                total -= res.value
            else:
                res = barnes_zeta(BarnesRequest(s, _direct_point(point, math.pi / 2), sub), tol)
                total += res.value
                point = point + vals[k]
            err += res.err_estimate
            terms += res.terms_used
            nshift += 1
    _require_fourier_domain(point, om)
    fz, fterms = _fourier_value(s, point, om)
    total += fz
    return total, err + tol * abs(fz), terms + fterms, nshift


def barnes_zeta(req, tol=DEFAULT_TOL, fallback=True, order=None):
    """Evaluate zeta_r(s, z | w) anywhere off the poles.

    Re s > r + 1/2 goes to lattice summation.  Otherwise every input is
    rotated so the periods sit symmetrically in the upper half-plane, z is
    moved into the cone D by unit shifts (each shift costs one rank r-1
    evaluation) and the Fourier form is summed.  Points that no shift can
    bring inside D, such as lattice translates of the cone edges, use the
    lattice expansion as a continuation when ``fallback`` is set.
    """
    s, z, om = req.s, req.z, req.omegas
    r = len(om)
    if r == 0:
        return EvalResult(cpow(z, -s), 0.0, 1, "direct")
    if not check_oc(z, om):
        raise DomainError("one-side condition fails for (z, omegas)")
    if s.real > r + 0.5:
        return barnes_zeta_direct(req, tol)
    n = _nearest_int(s)
    if n is not None:
        if n <= 0:
            return EvalResult(barnes_special_value(1 - n, z, om), 0.0, 0, "special-value")
        raise PoleError("zeta_%d has a pole at s = %d" % (r, n))
    args = om.args
    theta = math.pi / 2 - 0.5 * (max(args) + min(args))
    zr = DirectedComplex(z.modulus, z.argument + theta)
    omr = om.rotated(theta)
    sorted_args = sorted(omr.args)
    distinct = all(b - a > 1e-12 for a, b in zip(sorted_args, sorted_args[1:]))
    try:
        if not distinct:
            raise ReductionError("periods with equal arguments")
        value, err, terms, nshift = _reduce_and_evaluate(s, zr, omr, tol, order)
        method = "reduction" if nshift else "fourier"
    except (ReductionError, BoundaryError, DomainError) as exc:
        if not fallback:
            if isinstance(exc, ReductionError):
                raise
            raise ReductionError(str(exc)) from exc
        return barnes_zeta_asymptotic(req, tol)
    factor = cpow(DirectedComplex(1.0, theta), s)
    return EvalResult(factor * value, abs(factor) * err, terms, method)


# ---------------------------------------------------------------------------
# multiple gamma


def log_multiple_gamma(z, omegas, h=1e-3, tol=DEFAULT_TOL):
    """d/ds zeta_r(s, z | w) at s = 0 by a Richardson-extrapolated central difference.

    Returns (value, estimate of the discretisation error).
    """
    z = from_principal(z)
    om = as_vector(omegas)

    def zeta(t):
        return barnes_zeta(BarnesRequest(t, z, om), tol).value

    d1 = (zeta(h) - zeta(-h)) / (2 * h)
    d2 = (zeta(2 * h) - zeta(-2 * h)) / (4 * h)
    return (4 * d1 - d2) / 3, abs(d1 - d2) / 3


def multiple_gamma(z, omegas, h=1e-3, tol=DEFAULT_TOL):
    """Gamma_r(z | w) = exp(d/ds zeta_r(0, z | w))."""
    return cmath.exp(log_multiple_gamma(z, omegas, h, tol)[0])
