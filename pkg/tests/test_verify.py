import math

import numpy as np
import pytest

from bizeta import IdentityReport, run_suite
from bizeta.errors import UnknownSuiteError
from bizeta.verify import (SUITE_NAMES, _cone_point, _orc_periods, _tau, compare)


def test_pass_rule_relative():
    rep = compare("x", {}, 100.0, 100.0 + 1e-7, 1e-8)
    assert rep.rel_residual < 1e-8 and rep.passed
    rep = compare("x", {}, 100.0, 100.0 + 1e-5, 1e-8)
    assert not rep.passed


def test_pass_rule_absolute_only_for_small_values():
    assert compare("x", {}, 1e-12, 0.0, 1e-8).passed
    assert compare("x", {}, 0.5, 0.5 + 5e-9, 1e-8).passed
    # absolute residual below tol but the values are large and the relative one is not
    rep = compare("x", {}, 2e-9, -2e-9, 1e-8)
    assert rep.passed
    rep = compare("x", {}, 1.5, 1.5 + 5e-9, 1e-9)
    assert not rep.passed


def test_report_dict_has_schema():
    rep = compare("name", {"s": 2.0}, 1 + 1j, 1 + 1j, 1e-10)
    d = rep.as_dict()
    assert set(d) == {"name", "params", "lhs", "rhs", "abs_residual", "rel_residual",
                      "tol", "pass", "elapsed_ms"}
    assert d["pass"] is True
    assert isinstance(rep, IdentityReport)


def test_eta_suite_is_tight():
    reps = run_suite(seed=42, tol=1e-10, suites=["eta"])
    assert len(reps) >= 4
    assert all(r.name == "eta" for r in reps)
    assert max(r.rel_residual for r in reps) < 1e-12


def test_alias_and_dedupe():
    a = run_suite(seed=3, tol=1e-10, suites=["eta_inversion", "eta"])
    b = run_suite(seed=3, tol=1e-10, suites=["eta"])
    assert a == b


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite(suites=["nope"])
    with pytest.raises(KeyError):
        run_suite(suites=["eta", "nope"])


def test_catalog_order_and_subsets_reproduce_full_run():
    full = run_suite(seed=42, tol=1e-10)
    assert full == run_suite(seed=42, tol=1e-10, suites=[])
    prefixes = [r.name.split("/")[0] for r in full]
    order = [SUITE_NAMES.index(p) for p in prefixes]
    assert order == sorted(order)
    assert set(prefixes) == set(SUITE_NAMES)
    subset = run_suite(seed=42, tol=1e-10, suites=["ramanujan", "zeta_difference"])
    assert subset == [r for r in full if r.name.split("/")[0] in ("zeta_difference", "ramanujan")]


def test_repeatable_and_untimed():
    a = run_suite(seed=9, tol=1e-10, suites=["f_routes", "iseki"])
    b = run_suite(seed=9, tol=1e-10, suites=["f_routes", "iseki"])
    assert a == b
    assert [r.as_dict() for r in a] == [r.as_dict() for r in b]
    assert all(r.elapsed_ms == 0 for r in a)
    timed = run_suite(seed=9, tol=1e-10, suites=["eta"], timing=True)
    assert all(r.elapsed_ms >= 0 for r in timed)


@pytest.mark.parametrize("seed", [1, 42, 2024])
def test_everything_passes(seed):
    reps = run_suite(seed=seed, tol=1e-8)
    failed = [(r.name, r.rel_residual, r.tol) for r in reps if not r.passed]
    assert not failed


def test_samplers_respect_margins():
    rng = np.random.default_rng(0)
    for _ in range(200):
        om = _orc_periods(rng, 3)
        args = [math.atan2(w.imag, w.real) for w in om]
        assert all(b - a >= 0.05 for a, b in zip(args, args[1:]))
        tau = _tau(rng)
        assert 0.6 <= tau.imag <= 2.5
        z = _cone_point(rng, om)
        assert z.imag > 0
