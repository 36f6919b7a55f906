"""Bilateral multiple zeta functions and the f-plus/f-minus combinations.

    xi_{r+1}(s, z | w0; w) = zeta_{r+1}(s, z + w0 | w0, w)
                           + zeta_{r+1}(s, z | e^{-pi i} w0, w)

is entire in s and periodic in z with period w0.  After normalising w0 to
e^{pi i} it has an exponentially convergent Lipschitz-type expansion, which
is the production route here; the defining lattice sums are kept for
cross-checks.
"""
import cmath
import math
from dataclasses import dataclass

from ._blocks import exp_block, periodic_sum, signed_block
from .barnes import (DEFAULT_TOL, BarnesRequest, EvalResult, _lattice_zeta,
                     barnes_zeta)
from .dcx import (DirectedComplex, E_MINUS_PI, cpow, from_principal, in_window,
                  rgamma)
from .errors import ConvergenceError, DomainError
from .params import (ParameterVector, as_vector, check_soc, hat, in_cone_D,
                     in_sector_Dminus, in_sector_Dplus, neg_range, sum_range, DOWN)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class BilateralRequest:
    s: complex
    z: DirectedComplex
    omega0: DirectedComplex
    omegas: ParameterVector

    def __init__(self, s, z, omega0, omegas):
        object.__setattr__(self, "s", complex(s))
        omega0 = from_principal(omega0)
        top = omega0.argument
        if isinstance(z, DirectedComplex):
            zd = z
        else:
            zd = in_window(z, top - math.pi - 1e-12, top + 1e-12)
        object.__setattr__(self, "z", zd)
        object.__setattr__(self, "omega0", omega0)
        object.__setattr__(self, "omegas", as_vector(omegas))
        if not check_soc(zd, omega0, self.omegas):
            raise DomainError("strong one-side condition fails")

    @property
    def r(self):
        return len(self.omegas)


def _is_nonpositive_integer(s):
    return s.imag == 0.0 and s.real <= 0 and s.real == math.floor(s.real)


def xi_series(req, tol=DEFAULT_TOL):
    """Sum of the two defining Barnes lattice sums (Re s > r + 3/2)."""
    s, z, w0, om = req.s, req.z, req.omega0, req.omegas
    r = len(om)
    if not s.real > r + 1.5:
        raise ConvergenceError("series form needs Re s > r + 3/2")
    top = w0.argument
    shifted = in_window(z.value + w0.value, top - math.pi - 1e-12, top + 1e-12)
    first = _lattice_zeta(s, shifted, ParameterVector((w0,) + om.entries), tol)
    down = DirectedComplex(w0.modulus, top - math.pi)
    second = _lattice_zeta(s, z, ParameterVector((down,) + om.entries), tol)
    return EvalResult(first[0] + second[0], first[1] + second[1],
                      first[2] + second[2], "direct")


def _in_upper(values):
    return all(complex(v).imag > 0 for v in values)


def xi_fourier_normal(s, z, omegas, tol=DEFAULT_TOL):
    """xi_{r+1}(s, z | e^{pi i}; w) for z and every w_j in the upper half-plane."""
    s = complex(s)
    z = complex(z.value if isinstance(z, DirectedComplex) else z)
    vals = as_vector(omegas).values if len(omegas) else []
    if not z.imag > 0 or not _in_upper(vals):
        raise DomainError("normalised expansion needs z and all periods in H")
    if _is_nonpositive_integer(s):
        return EvalResult(0j, 0.0, 0, "fourier")
    total, err, n = exp_block(s - 1, z, vals)
    pref = cmath.exp(-0.5j * math.pi * s) * (TWO_PI ** s) * rgamma(s)
    return EvalResult(pref * total, abs(pref) * err, n, "fourier")


def _normaliser(omega0):
    """alpha = e^{pi i} / w0 as a directed number."""
    return DirectedComplex(1.0 / omega0.modulus, math.pi - omega0.argument)


def xi(req, tol=DEFAULT_TOL):
    """xi_{r+1}(s, z | w0; w) through the normalised expansion when possible."""
    s, z, w0, om = req.s, req.z, req.omega0, req.omegas
    alpha = _normaliser(w0)
    az = alpha * z
    aw = [alpha * w for w in om]
    if math.sin(az.argument) > 1e-12 and _in_upper(w.value for w in aw):
        inner = xi_fourier_normal(s, az.value, ParameterVector(aw), tol)
        factor = cpow(alpha, s)
        return EvalResult(factor * inner.value, abs(factor) * inner.err_estimate,
                          inner.terms_used, "fourier")
    if s.real > len(om) + 1.5:
        return xi_series(req, tol)
    raise DomainError("z on the edge of the strip and Re s too small for the series")


def xi_deriv_nonpos(m, z, omegas, tol=DEFAULT_TOL):
    """d/ds xi_{r+1}(s, z | e^{pi i}; w) at s = 1 - m."""
    if m < 1:
        raise DomainError("m must be a positive integer")
    z = complex(z)
    vals = as_vector(omegas).values if len(omegas) else []
    if not z.imag > 0 or not _in_upper(vals):
        raise DomainError("derivative series needs z and all periods in H")
    total, _, _ = exp_block(-m, z, vals)
    return math.factorial(m - 1) / (2j * math.pi) ** (m - 1) * total


# ---------------------------------------------------------------------------
# f-plus / f-minus


def _check_distinct(om):
    args = sorted(om.args)
    if any(b - a <= 1e-12 for a, b in zip(args, args[1:])):
        raise DomainError("two periods share an argument")


def _region_ok(z, om, sign, s):
    sorted_om = ParameterVector(sorted(om.entries, key=lambda w: w.argument))
    if in_cone_D(z, sorted_om):
        return True
    sector = in_sector_Dplus if sign > 0 else in_sector_Dminus
    return sector(z, sorted_om)


def _f_blocks(s_minus_1, z, om, sign, power_of_omega):
    """sum_k w_k^{power} * sum_n n^{s-1} e^{sign 2 pi i n z_k} prod_{j != k} (...)^{-1}."""
    vals = om.values
    z = complex(z)
    total = 0j
    terms = 0
    for k, wk in enumerate(vals):
        zk = z / wk
        ojk = [vals[j] / wk for j in range(len(vals)) if j != k]
        b, _, n = signed_block(s_minus_1, zk, ojk, sign)
        total += cpow(om[k], power_of_omega) * b
        terms += n
    return total, terms


def _f_signed(s, z, omegas, sign, tol):
    s = complex(s)
    om = as_vector(omegas)
    z = complex(z.value if isinstance(z, DirectedComplex) else z)
    if not _in_upper(om.values):
        raise DomainError("periods must lie in the upper half-plane")
    _check_distinct(om)
    if not _region_ok(z, om, sign, s):
        raise DomainError("z outside D and the adjacent sector")
    if _is_nonpositive_integer(s):
        return EvalResult(0j, 0.0, 0, "fourier")
    pref = cmath.exp(0.5j * math.pi * s) * TWO_PI ** s * rgamma(s)
    if len(om) == 1:
        zk = z / om.values[0]
        if sign * zk.imag > 1e-12:
            body, _, n = exp_block(s - 1, sign * zk)
        elif s.real < -0.1:
            body, _, n = periodic_sum(s - 1, sign * zk.real)
        else:
            raise DomainError("rank one on the segment needs Re s < -0.1")
        val = pref * cpow(om[0], -s) * body
        return EvalResult(val, tol * abs(val), n, "fourier")
    body, n = _f_blocks(s - 1, z, om, sign, -s)
    val = pref * body
    return EvalResult(val, tol * abs(val), n, "fourier")


def f_plus(s, z, omegas, tol=DEFAULT_TOL):
    return _f_signed(s, z, omegas, +1, tol)


def f_minus(s, z, omegas, tol=DEFAULT_TOL):
    return _f_signed(s, z, omegas, -1, tol)


def f_deriv_nonpos(sign, N, z, omegas, tol=DEFAULT_TOL):
    """d/ds f_{sign}(s, z | w) at s = -N, N >= 0, by its explicit series."""
    if N < 0:
        raise DomainError("N must be nonnegative")
    sign = +1 if sign in (+1, "+", "plus") else -1
    om = as_vector(omegas)
    if not _in_upper(om.values):
        raise DomainError("periods must lie in the upper half-plane")
    _check_distinct(om)
    m = N + 1
    body, _ = _f_blocks(-m, complex(z), om, sign, m - 1)
    return (-1) ** (m - 1) * math.factorial(m - 1) / (2j * math.pi) ** (m - 1) * body


def capital_F(s, z, omegas, tol=DEFAULT_TOL):
    """F = f_plus - e^{-pi i s} f_minus, equal to 2 i sin(pi s) zeta_r(s, z | w) on D."""
    s = complex(s)
    if not in_cone_D(complex(z), as_vector(omegas)):
        raise DomainError("F is defined here for z in the cone D")
    p = f_plus(s, z, omegas, tol)
    m = f_minus(s, z, omegas, tol)
    val = p.value - cmath.exp(-1j * math.pi * s) * m.value
    return EvalResult(val, p.err_estimate + m.err_estimate, p.terms_used + m.terms_used,
                      "fourier")


# definitional forms, used by the verification suite


def f_plus_barnes(s, z, omegas, tol=DEFAULT_TOL):
    """zeta_r(s, e^{-pi i} z | e^{-pi i} w) + (-1)^{r-1} zeta_r(s, |w| + e^{-pi i} z | w)."""
    om = as_vector(omegas)
    r = len(om)
    z = complex(z)
    zd = from_principal(z)
    first = barnes_zeta(BarnesRequest(s, E_MINUS_PI * zd, om.rotated(-math.pi)), tol)
    second = barnes_zeta(BarnesRequest(s, sum_range(om, 1, r) - z, om), tol)
    return first.value + (-1) ** (r - 1) * second.value


def f_minus_barnes(s, z, omegas, tol=DEFAULT_TOL):
    """zeta_r(s, z | w) + (-1)^{r-1} zeta_r(s, z + e^{-pi i} |w| | e^{-pi i} w)."""
    om = as_vector(omegas)
    r = len(om)
    z = complex(z)
    first = barnes_zeta(BarnesRequest(s, z, om), tol)
    tail_pt = E_MINUS_PI * from_principal(sum_range(om, 1, r) - z)
    second = barnes_zeta(BarnesRequest(s, tail_pt, om.rotated(-math.pi)), tol)
    return first.value + (-1) ** (r - 1) * second.value


def _xi_term(s, point, om, k, tol):
    wk = om[k - 1]
    rest = hat(neg_range(om, k, len(om), DOWN), k)
    zd = in_window(point, wk.argument - math.pi, wk.argument)
    return xi(BilateralRequest(s, zd, wk, rest), tol).value


def f_plus_xi(s, z, omegas, tol=DEFAULT_TOL):
    """Alternating sum of rank-r bilateral zetas equal to f_plus."""
    om = as_vector(omegas)
    z = complex(z)
    total = 0j
    for k in range(1, len(om) + 1):
        point = sum_range(om, 1, k - 1) - z
        total += (-1) ** (k - 1) * _xi_term(s, point, om, k, tol)
    return total


def f_minus_xi(s, z, omegas, tol=DEFAULT_TOL):
    """Alternating sum of rank-r bilateral zetas equal to f_minus."""
    om = as_vector(omegas)
    r = len(om)
    z = complex(z)
    total = 0j
    for k in range(1, r + 1):
        point = z - sum_range(om, k + 1, r)
        total += (-1) ** (r - k) * _xi_term(s, point, om, k, tol)
    return total


# ---------------------------------------------------------------------------


def g_function(s, tau, tol=DEFAULT_TOL):
    """g(s, tau) = xi_2(s, tau | e^{pi i}; tau) - xi_2(s, 1 | tau; 1)."""
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError("tau must lie in the upper half-plane")
    a = xi_fourier_normal(s, tau, ParameterVector([tau]), tol)
    b = xi(BilateralRequest(s, 1.0, tau, [1.0]), tol)
    return EvalResult(a.value - b.value, a.err_estimate + b.err_estimate,
                      a.terms_used + b.terms_used, "fourier")
