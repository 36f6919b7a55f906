import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bizeta import (QData, dedekind_eta, f_deriv_nonpos, iseki_product, lambert_sum,
                    qpoch_multi, qpoch_tilde)
from bizeta.errors import DomainError, ZeroFactorError
from bizeta.qprod import (_shells, _tail_after, iseki_phase, lambert_series,
                          log_qpoch_multi)

ETA_I = 0.7682254223260567  # Gamma(1/4) / (2 pi^{3/4})
ETA_AT = {  # independent high-precision product values
    0.3 + 1.2j: 0.7282998191384615 + 0.05694821566090456j,
}


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def e(t):
    return cmath.exp(1j * t)


def test_rank_zero_and_zero_argument():
    assert qpoch_multi(QData(0.3 + 0.2j)) == 1 - (0.3 + 0.2j)
    assert qpoch_multi(QData(0, [0.5, 0.2j])) == 1
    assert rel(qpoch_multi(QData(1e-30, [0.5, 0.9j])), 1) < 1e-15
    assert abs(qpoch_multi(QData(1e-8, [0.5])) - 1) < 3e-8


def test_euler_function_brute_force():
    q = cmath.exp(2j * math.pi * (0.05 + 0.5j))
    brute = 1 + 0j
    for m in range(1, 401):
        brute *= 1 - q ** m
    assert rel(qpoch_multi(QData(q, [q])), brute) < 1e-15


def test_log_tail_bound_dominates_remaining_shells():
    d = QData(0.6 + 0.3j, [0.55 * e(0.4), 0.3 * e(-2.0), 0.45j])
    full, bound, used = log_qpoch_multi(d, tol=1e-17)
    assert bound <= 1e-17 and used > 0
    rho = max(abs(q) for q in d.qs)
    partial = 0j
    for shell, s, _ in _shells(d.x, d.qs):
        partial += s
        lead = abs(d.x) * rho ** (shell + 1)
        declared = abs(d.x) * _tail_after(shell, d.r, rho) / (1 - lead)
        assert abs(full - partial) <= declared + 1e-15
        if shell == 25:
            break


def test_errors():
    with pytest.raises(DomainError):
        qpoch_multi(QData(0.1, [1.0]))
    with pytest.raises(DomainError):
        qpoch_multi(QData(0.1, [0.5, 1.2j]))
    with pytest.raises(ZeroFactorError):
        qpoch_multi(QData(1.0, [0.5]))
    with pytest.raises(ZeroFactorError):
        qpoch_multi(QData(1.0))
    with pytest.raises(TypeError):
        qpoch_multi((0.1, [0.5]))
    with pytest.raises(DomainError):
        qpoch_tilde(QData(0.1, [0.5, 2.0], l=1))
    with pytest.raises(DomainError):
        qpoch_tilde(QData(0.1, [2.0, 1j]))
    with pytest.raises(DomainError):
        qpoch_tilde(QData(0.1, [2.0, 0.5], l=0))


def test_tilde_without_large_entries_is_plain():
    d = QData(0.4 - 0.2j, [0.5j, -0.3])
    assert qpoch_tilde(d) == qpoch_multi(d)
    assert qpoch_tilde(QData(0.4 - 0.2j, [0.5j, -0.3], l=0)) == qpoch_multi(d)


def _box_product(x, qs):
    """prod over a box of (1 - q^m x), sized so every omitted factor is below 1e-18."""
    if not qs:
        return 1 - x
    sizes = [max(2, int(math.ceil(math.log(1e-18 / max(abs(x), 1.0)) / math.log(abs(q)))))
             for q in qs]
    grids = np.meshgrid(*[np.arange(M) for M in sizes], indexing="ij")
    w = np.full(grids[0].shape, x, dtype=complex)
    for q, m in zip(qs, grids):
        w = w * q ** m.astype(float)
    return complex(np.prod(1 - w))


def _orc_data():
    def build(r, gaps, mods, coefs):
        phis = np.cumsum([0.25] + list(gaps))[:r]
        om = [m * e(p) for m, p in zip(mods, phis)]
        z = complex(sum(c * w for c, w in zip(coefs, om)))
        return om, z
    return st.integers(2, 4).flatmap(lambda r: st.builds(
        build, st.just(r),
        st.lists(st.floats(0.45, (math.pi - 0.5) / 3), min_size=r - 1, max_size=r - 1),
        st.lists(st.floats(0.85, 1.2), min_size=r, max_size=r),
        st.lists(st.floats(0.1, 0.9), min_size=r, max_size=r)))


@settings(max_examples=50)
@given(_orc_data())
def test_tilde_factorial_normal_forms(data):
    om, z = data
    r = len(om)
    for k in range(r):
        wk = om[k]
        x = cmath.exp(2j * math.pi * z / wk)
        q = [cmath.exp(2j * math.pi * om[j] / wk) for j in range(r)]
        before, after = q[:k], q[k + 1:]
        small = [1 / v for v in before] + after

        # plus form: (x; q-hat)~ with the large entries j < k
        lhs = qpoch_tilde(QData(x, before + after, l=k))
        base = x
        for v in before:
            base /= v
        rhs = _box_product(base, small) ** ((-1) ** k)
        assert rel(lhs, rhs) < 1e-11

        # minus form: (1/x; 1/q-hat)~ with the large entries j > k
        lhs = qpoch_tilde(QData(1 / x, [1 / v for v in after] + [1 / v for v in before],
                                l=r - 1 - k))
        base = 1 / x
        for v in after:
            base *= v
        rhs = _box_product(base, small) ** ((-1) ** (r - 1 - k))
        assert rel(lhs, rhs) < 1e-11


def test_eta_at_i():
    assert rel(dedekind_eta(1j), ETA_I) < 1e-15
    for tau, ref in ETA_AT.items():
        assert rel(dedekind_eta(tau), ref) < 1e-14


@pytest.mark.parametrize("tau", [1j, 0.3 + 1.2j, -0.4 + 0.8j, 1.7 + 0.6j, 0.1 + 0.3j])
def test_eta_translation_and_nonvanishing(tau):
    lhs = dedekind_eta(tau + 1)
    assert rel(lhs, cmath.exp(1j * math.pi / 12) * dedekind_eta(tau)) < 1e-13
    assert abs(dedekind_eta(tau)) > 1e-2


def test_eta_rejects_lower_half_plane():
    with pytest.raises(DomainError):
        dedekind_eta(-1j)
    with pytest.raises(DomainError):
        lambert_sum(1, 0.5)
    with pytest.raises(DomainError):
        lambert_sum(0, 1j)


def test_lambert_brute_force():
    q = math.exp(-2 * math.pi)
    brute = sum(n * q ** n / (1 - q ** n) for n in range(1, 60))
    assert rel(lambert_sum(1, 1j), brute) < 1e-13


@pytest.mark.parametrize("N", [1, 2, 3])
def test_lambert_leading_term(N):
    tau = 0.37 + 8j
    q = cmath.exp(2j * math.pi * tau)
    assert abs(lambert_sum(N, tau) / q - 1) < 1e-6


def test_lambert_negative_power():
    tau = 0.2 + 0.9j
    q = cmath.exp(2j * math.pi * tau)
    brute = sum(n ** -3 * q ** n / (1 - q ** n) for n in range(1, 200))
    assert rel(lambert_series(-3, tau), brute) < 1e-14


def _iseki_data(r):
    phis = [0.4, 1.3, 2.3][:r]
    mods = [1.0, 1.25, 0.85][:r]
    om = [m * e(p) for m, p in zip(mods, phis)]
    z = complex(sum(c * w for c, w in zip([0.35, 0.6, 0.45], om)))
    return om, z


@pytest.mark.parametrize("r", [2, 3])
def test_iseki_plus_equals_minus(r):
    om, z = _iseki_data(r)
    a = iseki_phase(+1, z, om) * iseki_product(+1, z, om)
    b = iseki_phase(-1, z, om) * iseki_product(-1, z, om)
    assert rel(a, b) < 1e-9


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("sign", [+1, -1])
def test_iseki_product_is_exponentiated_derivative(r, sign):
    om, z = _iseki_data(r)
    lhs = cmath.exp(-f_deriv_nonpos(sign, 0, z, om))
    assert rel(lhs, iseki_product(sign, z, om)) < 1e-10


def test_iseki_rank_one():
    w = 1.3 * e(1.1)
    a = 0.37
    z = a * w
    plus = iseki_phase(+1, z, [w]) * iseki_product(+1, z, [w])
    minus = iseki_phase(-1, z, [w]) * iseki_product(-1, z, [w])
    ref_p = cmath.exp(-1j * math.pi * (z / w - 0.5)) * (1 - cmath.exp(2j * math.pi * a))
    ref_m = cmath.exp(1j * math.pi * (z / w - 0.5)) * (1 - cmath.exp(-2j * math.pi * a))
    assert rel(plus, ref_p) < 1e-14
    assert rel(minus, ref_m) < 1e-14
    assert rel(plus, minus) < 1e-14


def test_iseki_requires_order():
    with pytest.raises(DomainError):
        iseki_product(+1, 0.5j, [e(1.3), e(0.4)])
    with pytest.raises(DomainError):
        iseki_product(+1, 0.5j, [1.0, 1j])
