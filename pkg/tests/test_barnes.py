import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bizeta import (BarnesRequest, DirectedComplex, ParameterVector, barnes_residue,
                    barnes_special_value, barnes_zeta, barnes_zeta_asymptotic,
                    barnes_zeta_direct, barnes_zeta_fourier, cpow, log_multiple_gamma,
                    multiple_gamma)
from bizeta.errors import (BoundaryError, ConvergenceError, DomainError, PoleError,
                           ReductionError)
from bizeta.params import hat

PI2_OVER_6 = 1.6449340668482264  # zeta(2)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def e(t):
    return cmath.exp(1j * t)


def close(a, b, tol):
    """Relative, or absolute below unit size (the verify pass rule)."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def hurwitz(s, a):
    return complex(mpmath.zeta(mpmath.mpc(s), mpmath.mpf(a)))


def test_rank_zero_is_power():
    z = DirectedComplex(2.0, 2.5)
    for fn in (barnes_zeta, barnes_zeta_direct):
        res = fn(BarnesRequest(-1.3 + 0.4j, z, []))
        assert res.value == cpow(z, 1.3 - 0.4j)


def test_basel():
    res = barnes_zeta_direct(BarnesRequest(2, 1, [1]))
    assert res.method == "direct"
    assert rel(res.value, PI2_OVER_6) < 1e-12
    assert res.err_estimate >= 0


def test_rank_two_against_brute_force():
    w1, w2 = e(math.pi / 6), e(math.pi / 3)
    M = 2000
    m = np.arange(M + 1)
    pts = (w1 + w2) + m[:, None] * w1 + m[None, :] * w2
    brute = complex(np.sum(pts ** -4.0))
    # |z + m w| >= c |m|_1 with c = cos(pi/12); tail over |m|_inf > M
    c = math.cos(math.pi / 12)
    bound = 1.0 / (2 * c ** 4 * M ** 2)
    got = barnes_zeta(BarnesRequest(4, w1 + w2, [w1, w2])).value
    assert abs(got - brute) < bound


@pytest.mark.parametrize("s", [1.7, 2.5 + 1j, 0.5, -0.5 - 2j, -2.5, 3.25])
@pytest.mark.parametrize("a", [0.3, 1.0, 2.4])
def test_hurwitz(s, a):
    got = barnes_zeta(BarnesRequest(s, a, [1.0])).value
    assert rel(got, hurwitz(s, a)) < 1e-10


def test_hurwitz_special_value():
    res = barnes_zeta(BarnesRequest(-1, 1, [1]))
    assert res.method == "special-value"
    assert res.value == pytest.approx(-1 / 12, rel=1e-14)
    assert barnes_special_value(2, 1, [1]) == pytest.approx(-1 / 12, rel=1e-14)


@pytest.mark.parametrize("s", [0.5, -1.5 + 2j, 1.6 + 0.3j, 3.5, -3.2])
@pytest.mark.parametrize("z", [0.4, 1.3])
def test_colinear_rank_two(s, z):
    ref = hurwitz(s - 1, z) - (z - 1) * hurwitz(s, z)
    got = barnes_zeta(BarnesRequest(s, z, [1.0, 1.0])).value
    # equal arguments take the lattice continuation, whose box terms grow
    # like |w|^{-Re s}; the absolute error floor is around 1e-11
    assert close(got, ref, 1e-10)


@pytest.mark.parametrize("s", [0.5, -1.5 + 2j, 2.6, 4.5, -0.7])
@pytest.mark.parametrize("z", [0.4, 1.3])
def test_colinear_rank_three(s, z):
    ref = 0.5 * (hurwitz(s - 2, z) - (2 * z - 3) * hurwitz(s - 1, z)
                 + (z - 1) * (z - 2) * hurwitz(s, z))
    got = barnes_zeta(BarnesRequest(s, z, [1.0, 1.0, 1.0])).value
    assert close(got, ref, 1e-10)


def test_fourier_rank_one_half_period():
    w = DirectedComplex(1.2, 1.1)
    req = BarnesRequest(2.7, 0.5 * w, [w])
    f = barnes_zeta_fourier(req)
    assert f.method == "fourier"
    assert rel(f.value, barnes_zeta_direct(req).value) < 1e-10


def test_fourier_rank_two_centroid():
    om = [e(math.pi / 6), e(math.pi / 3)]
    req = BarnesRequest(3.3, sum(om) / 2, om)
    assert rel(barnes_zeta_fourier(req).value, barnes_zeta_direct(req).value) < 1e-9


def _orc(rng, r, gap=0.3):
    while True:
        phis = np.sort(rng.uniform(0.2, math.pi - 0.2, r))
        if r == 1 or np.min(np.diff(phis)) > gap:
            return [float(rng.uniform(0.7, 1.4)) * e(p) for p in phis]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_fourier_matches_direct_random(r):
    rng = np.random.default_rng(100 + r)
    worst = 0.0
    for _ in range(100):
        om = _orc(rng, r)
        a = rng.uniform(0.15, 0.85, r)
        z = complex(sum(x * w for x, w in zip(a, om)))
        s = complex(rng.uniform(r + 0.6, r + 3), rng.uniform(-2, 2))
        req = BarnesRequest(s, z, om)
        worst = max(worst, rel(barnes_zeta_fourier(req).value, barnes_zeta_direct(req).value))
    assert worst < 1e-8


@pytest.mark.parametrize("m", [1, 2, 3])
def test_special_value_is_limit(m):
    om = [0.9 * e(0.5), 1.1 * e(1.6)]
    z = 0.45 * om[0] + 0.6 * om[1]
    exact = barnes_special_value(m, z, om)
    t = 1e-4

    def f(x):
        return barnes_zeta(BarnesRequest(1 - m + x, z, om)).value

    approach = 2 * f(t) - f(2 * t)  # one-sided, first order removed
    assert abs(approach - exact) < 1e-8 * max(1.0, abs(exact))


def test_fourier_series_at_nonpositive_integers():
    om = [e(0.4), 1.3 * e(1.3), 0.8 * e(2.4)]
    z = 0.3 * om[0] + 0.5 * om[1] + 0.6 * om[2]
    for m in (1, 2, 3):
        req = BarnesRequest(1 - m, z, om)
        assert barnes_zeta_fourier(req).method == "special-value"
        series = barnes_zeta_fourier(req, closed_forms=False)
        assert series.method == "fourier"
        assert rel(series.value, barnes_special_value(m, z, om)) < 1e-10


def test_residue_closed_form():
    om = [e(0.5), 2 * e(1.2)]
    assert rel(barnes_residue(2, 0.3 + 0.7j, om), 1 / (om[0] * om[1])) < 1e-15
    with pytest.raises(DomainError):
        barnes_residue(3, 0.1, om)
    with pytest.raises(DomainError):
        barnes_residue(0, 0.1, om)


@pytest.mark.parametrize("r,m", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_residue_is_limit(r, m):
    om = [e(0.4), 1.2 * e(1.4), 0.9 * e(2.5)][:r]
    z = sum(0.4 * w for w in om) + 0.1 * om[0]
    h = 1e-3

    def g(t):
        return (t - m) * barnes_zeta(BarnesRequest(t, z, om)).value

    a1 = 0.5 * (g(m + h) + g(m - h))
    a2 = 0.5 * (g(m + 2 * h) + g(m - 2 * h))
    lim = (4 * a1 - a2) / 3
    assert abs(lim - barnes_residue(m, z, om)) < 1e-7 * max(1.0, abs(lim))


@pytest.mark.parametrize("N,expect_pole", [(1, True), (2, False)])
def test_double_even_point_limit(N, expect_pole):
    om = [e(0.6), 1.3 * e(1.9)]
    z = 0.5 * (om[0] + om[1])
    h = 1e-3

    def g(t):
        return (1 - cmath.exp(1j * math.pi * t)) * barnes_zeta(BarnesRequest(t, z, om)).value

    s0 = 2 * N
    a1 = 0.5 * (g(s0 + h) + g(s0 - h))
    a2 = 0.5 * (g(s0 + 2 * h) + g(s0 - 2 * h))
    lim = (4 * a1 - a2) / 3
    ref = -1j * math.pi / (om[0] * om[1]) if expect_pole else 0
    assert abs(lim - ref) < 1e-7


def _admissible(r):
    phis = st.lists(st.floats(0.3, math.pi - 0.3), min_size=r, max_size=r, unique=True)
    return st.tuples(phis, st.lists(st.floats(0.6, 1.5), min_size=r, max_size=r),
                     st.lists(st.floats(0.1, 1.6), min_size=r, max_size=r))


def _build(phis, mods, coefs):
    phis = sorted(phis)
    if any(b - a < 0.2 for a, b in zip(phis, phis[1:])):
        return None
    om = [m * e(p) for m, p in zip(mods, phis)]
    z = complex(sum(c * w for c, w in zip(coefs, om)))
    if any(abs(c - round(c)) < 0.05 for c in coefs):
        return None
    return om, z


@settings(max_examples=25)
@given(st.integers(1, 3).flatmap(_admissible),
       st.floats(-1.0, 1.0), st.floats(0.5, 2.0),
       st.builds(complex, st.floats(-2.5, 2.5), st.floats(-2, 2)))
def test_homogeneity(data, theta, scale, s):
    built = _build(*data)
    if built is None or abs(s - round(s.real)) < 0.05:
        return
    om, z = built
    args = [cmath.phase(w) for w in om] + [cmath.phase(z)]
    if max(args) + theta >= math.pi or min(args) + theta <= -math.pi:
        return
    alpha = DirectedComplex(scale, theta)
    zd = DirectedComplex(abs(z), cmath.phase(z))
    lhs = barnes_zeta(BarnesRequest(s, alpha * zd, ParameterVector(om).scaled(alpha))).value
    rhs = cpow(alpha, -s) * barnes_zeta(BarnesRequest(s, zd, om)).value
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


@settings(max_examples=25)
@given(st.integers(1, 3).flatmap(_admissible), st.integers(1, 3),
       st.builds(complex, st.floats(-2.5, 5.5), st.floats(-2, 2)))
def test_shift_relation(data, k, s):
    built = _build(*data)
    if built is None or abs(s - round(s.real)) < 0.05:
        return
    om, z = built
    r = len(om)
    k = min(k, r)
    if 0.95 < s.real < r + 0.05 and abs(s.imag) < 0.05:
        return
    moved = barnes_zeta(BarnesRequest(s, z + om[k - 1], om)).value
    lower = barnes_zeta(BarnesRequest(s, z, hat(ParameterVector(om), k))).value
    base = barnes_zeta(BarnesRequest(s, z, om)).value
    assert abs(moved + lower - base) <= 1e-10 * max(1.0, abs(base))


@pytest.mark.parametrize("s", [0.3 + 0.4j, -1.7, 1.5 - 1j])
def test_reduction_order_independent(s):
    om = [e(0.5), 1.2 * e(1.4), 0.8 * e(2.3)]
    z = 2.35 * om[0] + 1.6 * om[1] - 0.55 * om[2]
    a = barnes_zeta(BarnesRequest(s, z, om), order=(0, 1, 2))
    b = barnes_zeta(BarnesRequest(s, z, om), order=(2, 1, 0))
    assert a.method == b.method == "reduction"
    assert rel(a.value, b.value) < 1e-9


def test_reduction_order_independent_rank_two():
    om = [e(0.7), 1.4 * e(2.0)]
    z = -1.3 * om[0] + 2.2 * om[1]
    a = barnes_zeta(BarnesRequest(0.4, z, om), order=(0, 1)).value
    b = barnes_zeta(BarnesRequest(0.4, z, om), order=(1, 0)).value
    assert rel(a, b) < 1e-9


def test_edge_translate_uses_continuation():
    res = barnes_zeta(BarnesRequest(-0.5, 1.0, [1.0]))
    assert res.method == "asymptotic"
    assert rel(res.value, hurwitz(-0.5, 1.0)) < 1e-10
    with pytest.raises(ReductionError):
        barnes_zeta(BarnesRequest(-0.5, 1.0, [1.0]), fallback=False)


def test_asymptotic_route_matches_direct():
    om = [e(0.3), e(1.4)]
    req = BarnesRequest(4.2 - 1j, 0.3 + 0.9j, om)
    res = barnes_zeta_asymptotic(req)
    assert res.method == "asymptotic"
    assert rel(res.value, barnes_zeta_direct(req).value) < 1e-11


def test_errors():
    om = [e(0.5), e(1.5)]
    with pytest.raises(PoleError):
        barnes_zeta(BarnesRequest(1, 0.2 + 0.5j, om))
    with pytest.raises(PoleError):
        barnes_zeta(BarnesRequest(2, 0.2 + 0.5j, om))
    with pytest.raises(PoleError):
        barnes_zeta_fourier(BarnesRequest(2, 0.5 * sum(om), om))
    with pytest.raises(ConvergenceError):
        barnes_zeta_direct(BarnesRequest(2.4, 0.2 + 0.5j, om))
    with pytest.raises(DomainError):
        barnes_zeta(BarnesRequest(3, 1j, [-1 - 0.01j]))
    with pytest.raises(DomainError):
        barnes_zeta_fourier(BarnesRequest(0.5, -1.0, om))
    with pytest.raises(BoundaryError):
        barnes_zeta_fourier(BarnesRequest(0.5, om[0], om))
    with pytest.raises(DomainError):
        barnes_zeta_fourier(BarnesRequest(0.5, 0.5, [1.0]))


@pytest.mark.parametrize("z", [1.0, 0.35, 2.6])
def test_rank_one_gamma(z):
    ref = complex(mpmath.gamma(z) / mpmath.sqrt(2 * mpmath.pi))
    assert rel(multiple_gamma(z, [1.0]), ref) < 1e-9


def test_log_gamma_step_halving():
    om = [e(0.5), 1.3 * e(1.7)]
    z = 0.4 * om[0] + 0.7 * om[1]
    a, err = log_multiple_gamma(z, om)
    b, _ = log_multiple_gamma(z, om, h=5e-4)
    assert err >= 0
    assert rel(a, b) < 1e-8
