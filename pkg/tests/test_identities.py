import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from spantree.identities import (
    FACTORIZATION_RTOL,
    LewinParams,
    eq3_check,
    eq3_params_from_eq4,
    eq4_check,
    eq5_check,
    factorization_check,
    g_ab_check,
    lewin_check,
    lewin_printed_report,
    run_suite,
    sample_lewin,
    sample_weights,
)
from spantree.specfun import catalan
from spantree.types import DomainError, IdentityReport, Weights


def test_lewin_anchor():
    r = lewin_check(LewinParams(1, 0, 1, 1))
    assert r.passed
    assert abs(r.lhs - math.pi * math.log(2)) <= 1e-9
    assert abs(r.rhs - 0.5 * math.pi * math.log(4)) <= 1e-15
    assert abs(r.extra["printed_rhs"] - math.pi * math.log(4)) <= 1e-15
    assert r.extra["matches"] == "corrected"
    p = lewin_printed_report(r)
    assert not p.passed
    assert abs(p.abs_diff - math.pi * math.log(2)) <= 1e-9


def test_lewin_constant_log():
    r = lewin_check(LewinParams(0, 0, 4, 1))
    assert r.passed
    assert abs(r.lhs - 0.5 * math.pi * math.log(4)) <= 1e-9


def test_lewin_random(rng):
    for _ in range(50):
        r = lewin_check(sample_lewin(rng), 1e-8)
        assert r.passed, r


def test_lewin_half_line_halving_fails_off_axis():
    # with beta != 0 the half-line integral is not half the full-line one
    r = lewin_check(LewinParams(2.0, 0.7, 1.5, 0.8))
    assert r.passed
    assert r.extra["half_line_halved_abs_diff"] > 0.1
    assert r.extra["printed_abs_diff"] > 1.0


@pytest.mark.parametrize("bad", [(1, 2, 1, 1), (-1, 0, 1, 1), (1, 0, 1, 0)])
def test_lewin_domain(bad):
    with pytest.raises(DomainError):
        LewinParams(*bad)


def test_eq3_at_right_angle():
    r = eq3_check(math.pi / 2, 1.7)
    assert r.lhs == 0.0 and abs(r.rhs) <= 1e-15


@pytest.mark.parametrize("theta, y", [(math.pi / 3, 1.0), (math.pi / 6, 2.0)])
def test_eq3_values(theta, y):
    r = eq3_check(theta, y, 1e-9)
    assert r.passed


def test_eq3_domain():
    with pytest.raises(DomainError):
        eq3_check(2.0, 1.0)
    with pytest.raises(DomainError):
        eq3_check(1.0, -1.0)


def test_eq4_values():
    r = eq4_check(0.3, 0.0)
    assert r.lhs == 0.0 and abs(r.rhs) <= 1e-15
    assert eq4_check(0.5, 1.0, 1e-9).passed
    assert eq4_check(0.9, 3.0, 1e-9).passed
    with pytest.raises(DomainError):
        eq4_check(1.0, 1.0)


def test_eq3_eq4_map(rng):
    for _ in range(10):
        a, b = rng.uniform(0.05, 0.95), rng.uniform(0.01, 5.0)
        r4 = eq4_check(a, b)
        r3 = eq3_check(*eq3_params_from_eq4(a, b))
        assert abs(r3.lhs - r4.lhs) <= 1e-9
        assert abs(r3.rhs - r4.rhs) <= 1e-9
        assert r3.passed and r4.passed


def test_g_ab_values():
    r = g_ab_check(0.4, 0.0)
    assert abs(r.lhs - 0.5 * math.pi * math.log(1.4)) <= 1e-10
    assert r.passed
    assert g_ab_check(0.5, 1.0, 1e-8).passed
    assert g_ab_check(0.3, 2.0, 1e-8).passed


def test_eq5_values():
    r = eq5_check(0.0, 1.0, 1.0)
    assert abs(r.lhs - 0.5 * math.pi * math.log(2)) <= 1e-10
    assert abs(r.rhs - 0.5 * math.pi * math.log(2)) <= 1e-15
    r = eq5_check(1.0, 1.0, 1.0, 1e-8)
    assert abs(r.rhs - 2 * catalan()) <= 1e-15
    assert r.passed


def test_eq5_random(rng):
    for _ in range(50):
        gamma = rng.uniform(0.2, 3)
        beta = rng.uniform(0, gamma)
        alpha = rng.uniform(-0.95 * gamma, gamma)
        assert eq5_check(alpha, beta, gamma, 1e-8).passed


def test_eq5_domain():
    with pytest.raises(DomainError):
        eq5_check(2.0, 0.5, 1.0)
    with pytest.raises(DomainError):
        eq5_check(1.0, 0.0, 1.0)


def test_factorization_fixed():
    w = Weights(1, 1, 1)
    r = factorization_check(w, 0.0, 1e-14)
    assert abs(r.lhs - (4 / 3 + 2 * math.sqrt(4 / 9))) <= 1e-15
    assert r.passed
    assert factorization_check(Weights(0.5, 0.3, 0.2), 1.0, 1e-12).passed


def test_factorization_random(rng):
    worst = 0.0
    for _ in range(1000):
        r = factorization_check(sample_weights(rng), rng.uniform(-10, 10))
        worst = max(worst, r.abs_diff)
    assert worst <= FACTORIZATION_RTOL


@settings(max_examples=60, deadline=None)
@given(
    st.floats(0.05, 1.0), st.floats(0.05, 1.0), st.floats(0.05, 1.0), st.floats(-10, 10)
)
def test_factorization_property(a, b, c, x):
    assert factorization_check(Weights(a, b, c), x).passed


def test_report_roundtrip():
    r = lewin_check(LewinParams(1.3, 0.2, 0.9, 0.7))
    again = IdentityReport.from_json(json.loads(json.dumps(r.to_json())))
    assert again == r


def test_suite_passes_and_records_errata():
    s = run_suite(seed=42, trials=10, tol=1e-7)
    assert s.ok, [r for r in s.reports if not r.passed]
    names = {e.identity_name for e in s.errata}
    assert {"lewin_printed", "green_printed_v1", "green_printed_v2", "green_printed_v4"} <= names
    anchor = [e for e in s.errata if e.identity_name == "lewin_printed" and e.trial == -1]
    assert len(anchor) == 1
    assert abs(anchor[0].abs_diff - math.pi * math.log(2)) <= 1e-9


def test_suite_deterministic():
    a = json.dumps(run_suite(42, 3, 1e-7).to_json())
    b = json.dumps(run_suite(42, 3, 1e-7).to_json())
    assert a == b
    assert a != json.dumps(run_suite(43, 3, 1e-7).to_json())


def test_suite_ordering():
    s = run_suite(7, 3, 1e-7)
    keys = [(r.identity_name, r.trial) for r in s.reports]
    assert keys == sorted(keys)


def test_suite_rejects_zero_trials():
    with pytest.raises(DomainError):
        run_suite(1, 0, 1e-7)
