"""Identity verification suite.

Each check evaluates both sides of an identity through different code
paths and records the residual.  Suites draw their random parameters from
``numpy.random.default_rng([seed, suite_index])`` so any subset of suites
reproduces the same samples as a full run.
"""
import cmath
import math
import time
from dataclasses import dataclass, field, replace

import numpy as np

from ._blocks import periodic_sum, signed_block
from .barnes import (BarnesRequest, barnes_residue, barnes_special_value,
                     barnes_zeta, barnes_zeta_asymptotic, barnes_zeta_direct,
                     barnes_zeta_fourier, log_multiple_gamma)
from .bernoulli import bernoulli_number, multiple_bernoulli, multiple_bernoulli_poly
from .bilateral import (BilateralRequest, f_deriv_nonpos, f_minus, f_minus_barnes,
                        f_minus_xi, f_plus, f_plus_barnes, f_plus_xi, g_function,
                        xi, xi_deriv_nonpos, xi_fourier_normal, xi_series)
from .dcx import DirectedComplex, cpow, from_principal, gamma
from .errors import UnknownSuiteError
from .params import UP, ParameterVector, as_vector, hat, neg_range
from .qprod import (QData, dedekind_eta, iseki_phase, iseki_product, lambert_series,
                    lambert_sum, qpoch_multi)

FD_TOL = 1e-6
FD_STEP = 1e-3
TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tol: float
    passed: bool
    elapsed_ms: float = field(default=0.0, compare=False)

    def as_dict(self):
        return {
            "name": self.name,
            "params": dict(self.params),
            "lhs": {"re": self.lhs.real, "im": self.lhs.imag},
            "rhs": {"re": self.rhs.real, "im": self.rhs.imag},
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tol": self.tol,
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }


def _fmt(v):
    if isinstance(v, str):
        return v
    if isinstance(v, DirectedComplex):
        return "%.17g@%.17g" % (v.modulus, v.argument)
    if isinstance(v, ParameterVector):
        return ",".join(_fmt(e) for e in v.entries)
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(e) for e in v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    c = complex(v)
    if c.imag == 0:
        return "%.17g" % c.real
    return "%.17g%+.17gi" % (c.real, c.imag)


def compare(name, params, lhs, rhs, tol, started=None):
    """Residuals and the pass rule: relative, or absolute for small values."""
    lhs, rhs = complex(lhs), complex(rhs)
    diff = abs(lhs - rhs)
    big = max(abs(lhs), abs(rhs))
    rel = diff / big if big > 0 else 0.0
    ok = rel <= tol or (diff <= tol and big < 1.0)
    if not (math.isfinite(diff) and math.isfinite(big)):
        ok = False
    ms = (time.perf_counter() - started) * 1e3 if started is not None else 0.0
    return IdentityReport(name, {k: _fmt(v) for k, v in params.items()}, lhs, rhs,
                          diff, rel, tol, bool(ok), ms)


def _derivative(fn, s0, h=FD_STEP):
    """Fourth-order central difference."""
    return (8 * (fn(s0 + h) - fn(s0 - h)) - (fn(s0 + 2 * h) - fn(s0 - 2 * h))) / (12 * h)


def _limit(fn, s0, h=FD_STEP):
    a1 = 0.5 * (fn(s0 + h) + fn(s0 - h))
    a2 = 0.5 * (fn(s0 + 2 * h) + fn(s0 - 2 * h))
    return (4 * a1 - a2) / 3


def riemann_zeta(s):
    """zeta(s) as the rank-one Barnes zeta at z = 1."""
    return barnes_zeta(BarnesRequest(s, 1.0, [1.0])).value


# ---------------------------------------------------------------------------
# checks


def check_lipschitz(s, z, omega0, tol):
    t0 = time.perf_counter()
    req = BilateralRequest(s, z, omega0, [])
    return compare("lipschitz", {"s": s, "z": z, "omega0": omega0},
                   xi_series(req).value, xi(req).value, tol, t0)


def check_fourier_xi(s, z, omega0, omegas, tol):
    t0 = time.perf_counter()
    req = BilateralRequest(s, z, omega0, omegas)
    return compare("fourier_xi", {"s": s, "z": z, "omega0": omega0, "omegas": omegas},
                   xi_series(req).value, xi(req).value, tol, t0)


def check_xi_zero(m, z, omegas, tol):
    """Value at s = 1 - m: exact zero by contract vs the symmetric limit."""
    t0 = time.perf_counter()
    s0 = complex(1 - m)
    exact = xi_fourier_normal(s0, z, omegas).value
    near = _limit(lambda t: xi_fourier_normal(t, z, omegas).value, s0)
    return compare("xi_zero", {"m": m, "z": z, "omegas": omegas}, exact, near,
                   max(tol, FD_TOL), t0)


def check_xi_zero_deriv(m, z, omegas, tol):
    t0 = time.perf_counter()
    s0 = complex(1 - m)
    fd = _derivative(lambda t: xi_fourier_normal(t, z, omegas).value, s0)
    return compare("xi_zero_deriv", {"m": m, "z": z, "omegas": omegas}, fd,
                   xi_deriv_nonpos(m, z, omegas), max(tol, FD_TOL), t0)


def check_qfact_deriv(z, omegas, tol):
    t0 = time.perf_counter()
    lhs = cmath.exp(-xi_deriv_nonpos(1, z, omegas))
    x = cmath.exp(2j * math.pi * z)
    qs = [cmath.exp(2j * math.pi * complex(w)) for w in omegas]
    return compare("qfact_deriv", {"z": z, "omegas": omegas}, lhs,
                   qpoch_multi(QData(x, qs)), tol, t0)


def check_reflection(z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    r = len(om)
    one = from_principal(1.0)
    first, _ = log_multiple_gamma(z, ParameterVector((one,) + om.entries))
    down = neg_range(om, 1, r, "down") if r else om
    second, _ = log_multiple_gamma(1 - z, ParameterVector((one,) + down.entries))
    lhs = cmath.exp(-first - second)
    b = multiple_bernoulli(r + 1, r + 1, z, [1.0] + list(om.values))
    x = cmath.exp(2j * math.pi * z)
    qs = [cmath.exp(2j * math.pi * w) for w in om.values]
    rhs = cmath.exp((-1) ** (r + 1) * 1j * math.pi / math.factorial(r + 1) * b)
    rhs *= qpoch_multi(QData(x, qs))
    return compare("reflection", {"z": z, "omegas": om}, lhs, rhs, max(tol, FD_TOL), t0)


_F_ROUTES = {
    ("plus", "barnes"): (f_plus, f_plus_barnes),
    ("plus", "xi"): (f_plus, f_plus_xi),
    ("minus", "barnes"): (f_minus, f_minus_barnes),
    ("minus", "xi"): (f_minus, f_minus_xi),
}


def check_f_routes(sign, route, s, z, omegas, tol):
    t0 = time.perf_counter()
    fourier, other = _F_ROUTES[(sign, route)]
    return compare("f_routes", {"sign": sign, "route": route, "s": s, "z": z,
                              "omegas": omegas},
                   fourier(s, z, omegas).value, other(s, z, omegas), tol, t0)


def check_eta_inversion(tau, tol):
    t0 = time.perf_counter()
    tau = complex(tau)
    lhs = dedekind_eta(-1 / tau)
    rhs = cmath.sqrt(tau / 1j) * dedekind_eta(tau)
    return compare("eta", {"tau": tau}, lhs, rhs, tol, t0)


def check_ramanujan(N, tau, tol):
    t0 = time.perf_counter()
    tau = complex(tau)
    half = 0.5 * riemann_zeta(2 * N + 1)
    p = -2 * N - 1
    lhs = half + lambert_series(p, tau)
    b = multiple_bernoulli(2, 2 + 2 * N, 0.0, [tau, 1.0])
    rhs = tau ** (2 * N) * (half + lambert_series(p, -1 / tau))
    rhs += 0.5 * (2j * math.pi) ** (2 * N + 1) / math.factorial(2 * N + 2) * b
    return compare("ramanujan", {"N": N, "tau": tau}, lhs, rhs, tol, t0)


def check_eisenstein(N, tau, tol):
    t0 = time.perf_counter()
    tau = complex(tau)
    c = bernoulli_number(2 * N) / (4 * N)
    lhs = lambert_sum(N, -1 / tau) - c
    rhs = tau ** (2 * N) * (lambert_sum(N, tau) - c)
    if N == 1:
        rhs -= tau / (4j * math.pi)
    return compare("eisenstein", {"N": N, "tau": tau}, lhs, rhs, tol, t0)


def check_zeta_difference(s, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    w1, w2 = om.entries
    lhs = (barnes_zeta(BarnesRequest(s, w1, om)).value
           - barnes_zeta(BarnesRequest(s, w2, om)).value)
    rhs = (cpow(w1, -s) - cpow(w2, -s)) * riemann_zeta(s)
    return compare("zeta_difference", {"s": s, "omegas": om}, lhs, rhs, tol, t0)


def check_even_point_pole(N, z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)

    def fn(t):
        return (1 - cmath.exp(1j * math.pi * t)) * barnes_zeta(BarnesRequest(t, z, om)).value

    lhs = _limit(fn, complex(2 * N))
    w1, w2 = om.values
    rhs = -1j * math.pi / (w1 * w2) if N == 1 else 0j
    return compare("even_point_pole", {"N": N, "z": z, "omegas": om}, lhs, rhs,
                   max(tol, FD_TOL), t0)


def check_g_closed_forms(part, N, tau, tol):
    """part 'd0': dg/ds(0); 'dneg': dg/ds(-2N); 'value': g(2N)."""
    t0 = time.perf_counter()
    tau = complex(tau)

    def g(t):
        return g_function(t, tau).value

    if part == "d0":
        lhs = _derivative(g, 0j)
        rhs = (-1j * math.pi / 4 + 1j * math.pi / 12 * (tau + 1 / tau)
               + 0.5 * cmath.log(tau))
        eff = max(tol, FD_TOL)
    elif part == "dneg":
        lhs = _derivative(g, complex(-2 * N))
        b = multiple_bernoulli(2, 2 + 2 * N, 0.0, [1.0, tau])
        rhs = 1j * math.pi * b / ((2 * N + 2) * (2 * N + 1))
        rhs += ((-1) ** N / 2 * (tau ** (2 * N) - 1) * math.factorial(2 * N)
                * TWO_PI ** (-2 * N) * riemann_zeta(2 * N + 1))
        eff = max(tol, FD_TOL)
    else:
        lhs = g(complex(2 * N))
        rhs = (tau ** (-2 * N) - 1) * (-0.5 * bernoulli_number(2 * N)
                                       / math.factorial(2 * N) * (2j * math.pi) ** (2 * N))
        if N == 1:
            rhs += 1j * math.pi / tau
        eff = tol
    return compare("g_values", {"part": part, "N": N, "tau": tau}, lhs, rhs, eff, t0)


def check_barnes_fourier(s, z, omegas, tol):
    t0 = time.perf_counter()
    req = BarnesRequest(s, z, omegas)
    return compare("barnes_fourier", {"s": s, "z": z, "omegas": omegas},
                   barnes_zeta_fourier(req).value, barnes_zeta_direct(req).value, tol, t0)


def check_barnes_special(m, z, omegas, tol):
    t0 = time.perf_counter()
    req = BarnesRequest(1 - m, z, omegas)
    series = barnes_zeta_fourier(req, closed_forms=False).value
    return compare("barnes_special", {"m": m, "z": z, "omegas": omegas}, series,
                   barnes_special_value(m, z, omegas), tol, t0)


def check_barnes_residue(m, z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)

    def fn(t):
        return (t - m) * barnes_zeta(BarnesRequest(t, z, om)).value

    return compare("barnes_residue", {"m": m, "z": z, "omegas": om},
                   _limit(fn, complex(m)), barnes_residue(m, z, om), max(tol, FD_TOL), t0)


def check_hurwitz_fe(s, a, omega1, tol):
    t0 = time.perf_counter()
    w = from_principal(omega1)
    z = DirectedComplex(a * w.modulus, w.argument)
    lhs = barnes_zeta_asymptotic(BarnesRequest(s, z, [w])).value
    ph = cmath.exp(0.5j * math.pi * (s - 1))
    body = ph * periodic_sum(s - 1, a)[0] + periodic_sum(s - 1, -a)[0] / ph
    rhs = TWO_PI ** (s - 1) * gamma(1 - s) * cpow(w, -s) * body
    return compare("hurwitz_fe", {"s": s, "a": a, "omega1": omega1}, lhs, rhs, tol, t0)


def _two_sided_blocks(power, z, vals, weight):
    """sum_k weight(k) * sum_{n != 0} n^power e^{2 pi i n z_k} prod_j (1 - e^{2 pi i n w_jk})^{-1}."""
    total = 0j
    for k, wk in enumerate(vals):
        zk = z / wk
        ojk = [vals[j] / wk for j in range(len(vals)) if j != k]
        if not ojk:
            plus = periodic_sum(power, zk.real)[0]
            minus = periodic_sum(power, -zk.real)[0]
        else:
            plus = signed_block(power, zk, ojk, +1)[0]
            minus = signed_block(power, zk, ojk, -1)[0]
        total += weight(k) * (plus + (-1) ** power * minus)
    return total


def check_bernoulli_fourier(m, z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    r = len(om)
    z = complex(z)
    lhs = multiple_bernoulli(r, m, z, om)
    body = _two_sided_blocks(r - 1 - m, z, om.values, lambda k: cpow(om[k], m - r))
    rhs = (-1) ** r * (2j * math.pi) ** (r - 1 - m) * math.factorial(m) * body
    return compare("bernoulli_fourier", {"m": m, "z": z, "omegas": om}, lhs, rhs, tol, t0)


def check_bernoulli_vanish(m, z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    r = len(om)
    lhs = _two_sided_blocks(r + m - 1, complex(z), om.values,
                            lambda k: cpow(om[k], -(r + m)))
    return compare("bernoulli_vanish", {"m": m, "z": z, "omegas": om}, lhs, 0j, tol, t0)


def _iseki_f(s, z, om):
    r = len(om)
    far = sum(om.values) - z
    return (barnes_zeta(BarnesRequest(s, z, om)).value
            + (-1) ** (r - 1) * barnes_zeta(BarnesRequest(s, far, om)).value)


def _iseki_series(sign, N, z, om):
    r = len(om)
    b = multiple_bernoulli(r, r + 2 * N, z, om)
    e = (-1) ** (r + 1) if sign == "plus" else (-1) ** r
    front = e * 1j * math.pi * math.factorial(2 * N) / math.factorial(2 * N + r) * b
    return front + f_deriv_nonpos(+1 if sign == "plus" else -1, 2 * N, z, om)


def check_iseki_deriv(sign, N, z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    z = complex(z)
    lhs = _derivative(lambda t: _iseki_f(t, z, om), complex(-2 * N))
    return compare("iseki_deriv", {"sign": sign, "N": N, "z": z, "omegas": om}, lhs,
                   _iseki_series(sign, N, z, om), max(tol, FD_TOL), t0)


def check_iseki_product(sign, z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    z = complex(z)
    lhs = cmath.exp(-_iseki_series(sign, 0, z, om))
    sg = +1 if sign == "plus" else -1
    rhs = iseki_phase(sg, z, om) * iseki_product(sg, z, om, tol=1e-16)
    return compare("iseki_product", {"sign": sign, "z": z, "omegas": om}, lhs, rhs, tol, t0)


def check_iseki_both_products(z, omegas, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    z = complex(z)
    lhs = iseki_phase(+1, z, om) * iseki_product(+1, z, om, tol=1e-16)
    rhs = iseki_phase(-1, z, om) * iseki_product(-1, z, om, tol=1e-16)
    return compare("iseki_products", {"z": z, "omegas": om}, lhs, rhs, tol, t0)


def check_bernoulli_identity(identity, r, n, z, omegas, c, j, tol):
    """One of the six polynomial identities, numbered 1..6."""
    t0 = time.perf_counter()
    om = as_vector(omegas)
    vals = om.values
    z = complex(z)

    def B(rr, nn, zz, ww):
        return multiple_bernoulli(rr, nn, zz, ww)

    if identity == 1:
        lhs = B(r, n, c * z, [c * w for w in vals])
        rhs = c ** (n - r) * B(r, n, z, vals)
    elif identity == 2:
        lhs = B(r, n, sum(vals) - z, vals)
        rhs = (-1) ** n * B(r, n, z, vals)
    elif identity == 3:
        lhs = B(r, n, z + vals[j - 1], vals) - B(r, n, z, vals)
        rhs = n * B(r - 1, n - 1, z, hat(om, j))
    elif identity == 4:
        lhs = B(r, n, z, neg_range(om, j, j, UP))
        rhs = -B(r, n, z + vals[j - 1], vals)
    elif identity == 5:
        lhs = B(r, n, z, vals) + B(r, n, z, neg_range(om, j, j, UP))
        rhs = -n * B(r - 1, n - 1, z, hat(om, j))
    elif identity == 6:
        lhs = multiple_bernoulli_poly(r, n, om).derivative()(z)
        rhs = n * B(r, n - 1, z, vals)
    else:
        raise ValueError("identity must be 1..6")
    return compare("bernoulli_identities", {"identity": identity, "r": r, "n": n, "z": z,
                                         "omegas": om, "c": c, "j": j}, lhs, rhs, tol, t0)


def check_homogeneity(s, z, omegas, alpha, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    zd = from_principal(z)
    lhs = barnes_zeta(BarnesRequest(s, alpha * zd, om.scaled(alpha))).value
    rhs = cpow(alpha, -s) * barnes_zeta_asymptotic(BarnesRequest(s, zd, om)).value
    return compare("homogeneity", {"s": s, "z": z, "omegas": om, "alpha": alpha},
                   lhs, rhs, tol, t0)


def check_barnes_shift(s, z, omegas, k, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    z = complex(z)
    moved = barnes_zeta_asymptotic(BarnesRequest(s, z + om.values[k - 1], om)).value
    lower = barnes_zeta(BarnesRequest(s, z, hat(om, k))).value
    rhs = barnes_zeta(BarnesRequest(s, z, om)).value
    return compare("barnes_shift", {"s": s, "z": z, "omegas": om, "k": k},
                   moved + lower, rhs, tol, t0)


def _moved(z, w):
    """z + w kept in the directed window of z's half-plane."""
    v = z.value + complex(w)
    return DirectedComplex(abs(v), z.argument + cmath.phase(v / z.value))


def check_xi_period(s, z, omega0, omegas, tol):
    t0 = time.perf_counter()
    lhs = xi(BilateralRequest(s, _moved(z, omega0.value), omega0, omegas)).value
    rhs = xi_series(BilateralRequest(s, z, omega0, omegas)).value
    return compare("xi_period", {"s": s, "z": z, "omega0": omega0, "omegas": omegas},
                   lhs, rhs, tol, t0)


def check_xi_shift(s, z, omega0, omegas, k, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    lhs = xi(BilateralRequest(s, _moved(z, om.values[k - 1]), omega0, om)).value
    rhs = (xi_series(BilateralRequest(s, z, omega0, om)).value
           - xi_series(BilateralRequest(s, z, omega0, hat(om, k))).value)
    return compare("xi_shift", {"s": s, "z": z, "omega0": omega0, "omegas": om, "k": k},
                   lhs, rhs, tol, t0)


def check_xi_multiplication(s, z, omega0, omegas, alpha, tol):
    t0 = time.perf_counter()
    om = as_vector(omegas)
    lhs = xi_series(BilateralRequest(s, alpha * z, alpha * omega0, om.scaled(alpha))).value
    rhs = cpow(alpha, -s) * xi(BilateralRequest(s, z, omega0, om)).value
    return compare("xi_multiplication", {"s": s, "z": z, "omega0": omega0,
                                         "omegas": om, "alpha": alpha}, lhs, rhs, tol, t0)


# ---------------------------------------------------------------------------
# sampling


def _orc_periods(rng, r, gap=0.35, lo=0.25, hi=math.pi - 0.25):
    """Periods in H with increasing arguments at least ``gap`` apart."""
    while True:
        args = np.sort(rng.uniform(lo, hi, r))
        if r < 2 or np.min(np.diff(args)) >= gap:
            break
    mods = rng.uniform(0.8, 1.3, r)
    return [cmath.rect(float(m), float(a)) for m, a in zip(mods, args)]


def _cone_point(rng, periods):
    a = rng.uniform(0.2, 0.8, len(periods))
    return complex(sum(float(x) * w for x, w in zip(a, periods)))


def _tau(rng):
    return complex(float(rng.uniform(-0.8, 0.8)), float(rng.uniform(0.6, 2.5)))


def _s(rng, lo, hi, im=1.0):
    return complex(float(rng.uniform(lo, hi)), float(rng.uniform(-im, im)))


def _bilateral_sample(rng, r, top_max=math.pi):
    """(z, omega0, omegas) satisfying the strong one-side condition with margin."""
    top = float(rng.uniform(0.6, top_max))
    omega0 = DirectedComplex(float(rng.uniform(0.8, 1.3)), top)
    while True:
        phis = np.sort(rng.uniform(0.35, math.pi - 0.35, r))
        if r < 2 or np.min(np.diff(phis)) >= 0.25:
            break
    omegas = ParameterVector([DirectedComplex(float(rng.uniform(0.8, 1.3)), top - float(p))
                              for p in phis])
    z = DirectedComplex(float(rng.uniform(0.5, 1.5)),
                        top - float(rng.uniform(0.35, math.pi - 0.35)))
    return z, omega0, omegas


def _upper_sample(rng, r):
    """z and periods in the upper half-plane (normalised bilateral data)."""
    z = complex(float(rng.uniform(-0.5, 0.5)), float(rng.uniform(0.3, 1.0)))
    om = [complex(float(rng.uniform(-0.6, 0.6)), float(rng.uniform(0.5, 1.2)))
          for _ in range(r)]
    return z, om


# ---------------------------------------------------------------------------
# suites


def _suite_lipschitz(rng, tol):
    out = []
    for _ in range(3):
        z, w0, _ = _bilateral_sample(rng, 0)
        out.append(check_lipschitz(_s(rng, 1.6, 4.0), z, w0, tol))
    return out


def _suite_fourier_xi(rng, tol):
    out = []
    for r in (1, 2, 3):
        z, w0, om = _bilateral_sample(rng, r)
        out.append(check_fourier_xi(_s(rng, r + 1.6, r + 4.0), z, w0, om, tol))
    return out


def _suite_xi_zero(rng, tol):
    out = []
    for m in range(1, 6):
        z, om = _upper_sample(rng, 1 + m % 2)
        out.append(check_xi_zero(m, z, om, tol))
        out.append(check_xi_zero_deriv(m, z, om, tol))
    return out


def _suite_qfact_deriv(rng, tol):
    return [check_qfact_deriv(*_upper_sample(rng, r), tol) for r in (0, 1, 2)]


def _suite_reflection(rng, tol):
    out = []
    for r in (1, 2):
        om = [complex(float(rng.uniform(-0.5, 0.5)), float(rng.uniform(0.7, 1.3)))
              for _ in range(r)]
        for z in (0.3, 0.5, 0.71):
            out.append(check_reflection(z, om, tol))
    return out


def _suite_f_routes(rng, tol):
    out = []
    for r in (2, 3):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        high = _s(rng, r + 1.6, r + 3.0)
        low = _s(rng, -2.5, r - 0.2)
        for sign in ("plus", "minus"):
            out.append(check_f_routes(sign, "barnes", high, z, om, tol))
            out.append(check_f_routes(sign, "xi", high, z, om, tol))
            out.append(check_f_routes(sign, "xi", low, z, om, tol))
    return out


ETA_POINTS = (1j, 0.3 + 1.2j, -0.4 + 0.8j, 1.7 + 0.6j)
RAMANUJAN_POINTS = (1j, 0.2 + 1.1j)


def _suite_eta(rng, tol):
    taus = list(ETA_POINTS) + [_tau(rng) for _ in range(2)]
    return [check_eta_inversion(t, tol) for t in taus]


def _suite_ramanujan(rng, tol):
    taus = list(RAMANUJAN_POINTS) + [_tau(rng)]
    return [check_ramanujan(N, t, tol) for N in (1, 2) for t in taus]


def _suite_eisenstein(rng, tol):
    taus = list(RAMANUJAN_POINTS) + [_tau(rng)]
    return [check_eisenstein(N, t, tol) for N in (1, 2, 3) for t in taus]


def _suite_zeta_difference(rng, tol):
    om = _orc_periods(rng, 2)
    out = [check_zeta_difference(s, om, tol) for s in (2.5, 3.2, -0.7, _s(rng, -1.5, 1.5))]
    z = _cone_point(rng, om)
    out += [check_even_point_pole(N, z, om, tol) for N in (1, 2)]
    return out


def _suite_g_values(rng, tol):
    out = []
    for tau in (0.3 + 1.2j, _tau(rng)):
        out.append(check_g_closed_forms("d0", 0, tau, tol))
        for N in (1, 2):
            out.append(check_g_closed_forms("dneg", N, tau, tol))
            out.append(check_g_closed_forms("value", N, tau, tol))
    return out


def _suite_barnes_fourier(rng, tol):
    out = []
    for r in (2, 3):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        out.append(check_barnes_fourier(_s(rng, r + 0.6, r + 3.0), z, om, tol))
        for m in (1, 2, 3):
            out.append(check_barnes_special(m, z, om, tol))
        out.append(check_barnes_residue(r, z, om, tol))
    return out


def _suite_hurwitz_fe(rng, tol):
    out = []
    for _ in range(3):
        w = cmath.rect(float(rng.uniform(0.7, 1.4)), float(rng.uniform(-1.2, 1.2)))
        out.append(check_hurwitz_fe(_s(rng, -3.0, -0.2), float(rng.uniform(0.1, 0.9)),
                                    w, tol))
    return out


def _suite_bernoulli_fourier(rng, tol):
    out = []
    w = complex(float(rng.uniform(-0.5, 0.5)), float(rng.uniform(0.7, 1.3)))
    a = float(rng.uniform(0.15, 0.85))
    for m in (1, 2):
        out.append(check_bernoulli_fourier(m, a * w, [w], tol))
    for r in (2, 3):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        for m in (0, r, r + 2):
            out.append(check_bernoulli_fourier(m, z, om, tol))
    return out


def _suite_bernoulli_vanish(rng, tol):
    out = []
    for r in (2, 3):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        for m in (1, 2):
            out.append(check_bernoulli_vanish(m, z, om, tol))
    return out


def _suite_iseki(rng, tol):
    out = []
    for r in (2, 3):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        for N in (0, 1):
            for sign in ("plus", "minus"):
                out.append(check_iseki_deriv(sign, N, z, om, tol))
        for sign in ("plus", "minus"):
            out.append(check_iseki_product(sign, z, om, tol))
        out.append(check_iseki_both_products(z, om, tol))
    return out


def _suite_bernoulli_identities(rng, tol):
    out = []
    for r in (1, 2, 3):
        om = [complex(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1))) + 0.3
              for _ in range(r)]
        z = complex(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
        c = complex(float(rng.uniform(0.5, 1.5)), float(rng.uniform(-1, 1)))
        n = int(rng.integers(2, 7))
        j = int(rng.integers(1, r + 1))
        for identity in range(1, 7):
            out.append(check_bernoulli_identity(identity, r, n, z, om, c, j, tol))
    return out


def _suite_homogeneity_shift(rng, tol):
    out = []
    for r in (1, 2):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        alpha = DirectedComplex(float(rng.uniform(0.6, 1.6)), float(rng.uniform(-0.2, 0.2)))
        out.append(check_homogeneity(_s(rng, -1.5, r - 0.2), z, om, alpha, tol))
    for r in (2, 3):
        om = _orc_periods(rng, r)
        z = _cone_point(rng, om)
        k = int(rng.integers(1, r + 1))
        out.append(check_barnes_shift(_s(rng, 0.2, r - 0.2), z, om, k, tol))
    z, w0, om = _bilateral_sample(rng, 2, top_max=math.pi - 0.2)
    s = _s(rng, 3.6, 5.0)
    out.append(check_xi_period(s, z, w0, om, tol))
    out.append(check_xi_shift(s, z, w0, om, 1, tol))
    alpha = DirectedComplex(float(rng.uniform(0.6, 1.6)), float(rng.uniform(-0.15, 0.15)))
    out.append(check_xi_multiplication(s, z, w0, om, alpha, tol))
    return out


SUITES = {
    "lipschitz": _suite_lipschitz,
    "fourier_xi": _suite_fourier_xi,
    "xi_zero": _suite_xi_zero,
    "qfact_deriv": _suite_qfact_deriv,
    "reflection": _suite_reflection,
    "f_routes": _suite_f_routes,
    "eta": _suite_eta,
    "ramanujan": _suite_ramanujan,
    "eisenstein": _suite_eisenstein,
    "zeta_difference": _suite_zeta_difference,
    "g_values": _suite_g_values,
    "barnes_fourier": _suite_barnes_fourier,
    "hurwitz_fe": _suite_hurwitz_fe,
    "bernoulli_fourier": _suite_bernoulli_fourier,
    "bernoulli_vanish": _suite_bernoulli_vanish,
    "iseki": _suite_iseki,
    "bernoulli_identities": _suite_bernoulli_identities,
    "homogeneity_shift": _suite_homogeneity_shift,
}

ALIASES = {"eta_inversion": "eta"}

SUITE_NAMES = tuple(SUITES)


def resolve_suites(suites):
    if not suites:
        return list(SUITE_NAMES)
    names = []
    for name in suites:
        key = ALIASES.get(name, name)
        if key not in SUITES:
            raise UnknownSuiteError("unknown suite %r" % name)
        if key not in names:
            names.append(key)
    return sorted(names, key=SUITE_NAMES.index)


def run_suite(seed=42, tol=1e-8, suites=None, timing=False):
    """Reports for the requested suites, in catalog order.

    Without ``timing`` every elapsed_ms is 0 so repeated runs are identical.
    """
    reports = []
    for name in resolve_suites(suites):
        rng = np.random.default_rng([int(seed), SUITE_NAMES.index(name)])
        for rep in SUITES[name](rng, tol):
            if rep.name != name:
                rep = replace(rep, name="%s/%s" % (name, rep.name))
            if not timing:
                rep = replace(rep, elapsed_ms=0.0)
            reports.append(rep)
    return reports
