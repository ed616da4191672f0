import math

import numpy as np
import pytest

from spantree.closedform import FOUR_PI2, chen_wu_per_site, f_ab_quad, w_closed, w_from_f
from spantree.quadrature import integrate_2d_periodic, w_oracle_semi
from spantree.specfun import catalan, ti2
from spantree.types import CWParams, DomainError, Weights

from conftest import CATALAN, ENTROPY_SQUARE, ENTROPY_TRIANGULAR, W_SQUARE, W_TRIANGULAR


def test_w_closed_square():
    expect = 16 * math.pi * CATALAN - 8 * math.pi ** 2 * math.log(2)
    assert abs(w_closed(Weights(0.5, 0.5, 0)) - expect) <= 1e-12
    assert abs(w_closed(Weights(0.5, 0.5, 0)) - W_SQUARE) <= 1e-12


def test_w_closed_triangular():
    expect = FOUR_PI2 * math.log(1 / (2 * math.sqrt(3))) + 24 * math.pi * ti2(1 / math.sqrt(3))
    assert abs(w_closed(Weights(1, 1, 1)) - expect) <= 1e-12
    assert abs(w_closed(Weights(1, 1, 1)) - W_TRIANGULAR) <= 1e-12


def test_w_closed_permutation_exact():
    vals = {w_closed(Weights(*p)) for p in ((0.2, 0.5, 0.3), (0.5, 0.2, 0.3), (0.3, 0.5, 0.2))}
    assert len(vals) == 1


def test_chen_wu_square():
    assert abs(chen_wu_per_site(CWParams(2, 2, 0)) - 4 * catalan() / math.pi) <= 1e-14
    assert abs(chen_wu_per_site(CWParams(2, 2, 0)) - ENTROPY_SQUARE) <= 1e-12


def test_chen_wu_triangular():
    expect = math.log(math.sqrt(3)) + 6 / math.pi * ti2(1 / math.sqrt(3))
    assert abs(chen_wu_per_site(CWParams(2, 2, 2)) - expect) <= 1e-14
    assert abs(chen_wu_per_site(CWParams(2, 2, 2)) - ENTROPY_TRIANGULAR) <= 1e-12


def test_chen_wu_homogeneity(rng):
    for _ in range(20):
        A, B, C = rng.uniform(0.1, 5, 3)
        base = chen_wu_per_site(CWParams(A, B, C))
        assert abs(chen_wu_per_site(CWParams(3 * A, 3 * B, 3 * C)) - math.log(3) - base) <= 1e-12


def test_chen_wu_reduces_to_w(rng):
    for _ in range(20):
        p = CWParams(*rng.uniform(0.1, 5, 3))
        via_w = math.log(p.total) + w_closed(p.normalized()) / FOUR_PI2
        assert abs(chen_wu_per_site(p) - via_w) <= 1e-12


def test_chen_wu_vs_direct_2d(rng):
    for _ in range(25):
        A, B, C = rng.uniform(0.1, 5, 3)
        f = lambda x, y: np.log(
            2 * (A * np.sin(x / 2) ** 2 + B * np.sin(y / 2) ** 2 + C * np.sin((x + y) / 2) ** 2)
        )
        r = integrate_2d_periodic(f, 1e-5)
        assert abs(chen_wu_per_site(CWParams(A, B, C)) - r.value / FOUR_PI2) <= 1e-4


def test_degenerate_params():
    with pytest.raises(DomainError):
        CWParams(1, 0, 0)
    with pytest.raises(DomainError):
        Weights(0, 0, 1)


@pytest.mark.parametrize("w", [Weights(0.5, 0.5, 0), Weights(1, 1, 1), Weights(0.5, 0.3, 0.2)])
def test_f_ab_bridge_fixed(w):
    r = f_ab_quad(w)
    assert abs(w_from_f(r.value) - w_closed(w)) <= 1e-8


def test_f_ab_bridge_random(rng):
    for _ in range(25):
        w = Weights(*rng.uniform(0.05, 1, 3))
        assert abs(w_from_f(f_ab_quad(w).value) - w_closed(w)) <= 1e-7


def test_oracle_agreement_random(rng):
    for _ in range(100):
        w = Weights(*rng.uniform(0.05, 1, 3))
        assert abs(w_closed(w) - w_oracle_semi(w, 1e-9).value) <= 1e-8


def test_boundary_continuity():
    w0 = w_closed(Weights(0.6, 0.4, 0.0))
    w1 = w_closed(Weights(0.6, 0.4, 1e-8))
    assert abs(w0 - w1) <= 1e-6


def test_square_limit_is_oracle_consistent():
    w = Weights(0.7, 0.3, 0.0)
    assert abs(w_closed(w) - w_oracle_semi(w, 1e-11).value) <= 1e-9
