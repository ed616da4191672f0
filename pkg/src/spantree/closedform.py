"""Closed form of the spanning-tree entropy function W(a, b).

    W(a, b) = int_0^{2pi} int_0^{2pi} ln[1 - a cos x - b cos y - c cos(x+y)] dx dy
            = 4 pi^2 ln(d/2) + 8 pi [Ti2(a/d) + Ti2(b/d) + Ti2(c/d)],

with c = 1 - a - b and d = sqrt(ab + bc + ca).
"""

from __future__ import annotations

import math

import numpy as np

from .quadrature import integrate_1d
from .specfun import ti2
from .types import CWParams, DomainError, QuadResult, Weights

FOUR_PI2 = 4.0 * math.pi ** 2


def w_closed(w: Weights) -> float:
    """W(a, b) from the Ti2 closed form.

    A zero weight contributes Ti2(0) = 0 (the square-lattice limit).  The
    weights are sorted first so the result is bitwise invariant under
    permutations of (a, b, c).
    """
    a, b, c = sorted(w.astuple())
    d = math.sqrt(a * b + b * c + c * a)
    if d == 0.0:
        raise DomainError("degenerate weights: d = 0")
    return FOUR_PI2 * math.log(0.5 * d) + 8.0 * math.pi * (ti2(a / d) + ti2(b / d) + ti2(c / d))


def chen_wu_per_site(p: CWParams) -> float:
    """(1/4pi^2) int int ln[A + B + C - A cos t - B cos f - C cos(t + f)].

    Evaluated as -ln(2S) + (2/pi)[Ti2(AS) + Ti2(BS) + Ti2(CS)] with
    S = 1/sqrt(AB + BC + CA).
    """
    A, B, C = sorted((p.A, p.B, p.C))
    q = A * B + B * C + C * A
    if q <= 0.0:
        raise DomainError("degenerate couplings: AB + BC + CA = 0")
    S = 1.0 / math.sqrt(q)
    return -math.log(2.0 * S) + (2.0 / math.pi) * (ti2(A * S) + ti2(B * S) + ti2(C * S))


def f_ab_quad(w: Weights, tol: float = 1e-11) -> QuadResult:
    """Single-integral representation F(a, b) by quadrature.

    F(a, b) = pi int_0^inf dz/(1+z^2)
              ln[(1-a) z^2 + (1+a) + 2 sqrt((ac + b(1-b)) z^2 + (1-b)(a+b))]

    and W(a, b) = -12 pi^2 ln 2 + 8 F(a, b).
    """
    a, b, c = w.astuple()
    k2 = a * c + b * (1.0 - b)
    k0 = (1.0 - b) * (a + b)

    def g(z):
        z2 = z * z
        return np.log((1.0 - a) * z2 + (1.0 + a) + 2.0 * np.sqrt(k2 * z2 + k0)) / (1.0 + z2)

    r = integrate_1d(g, 0.0, math.inf, tol / math.pi)
    return QuadResult(math.pi * r.value, math.pi * r.abs_err_est, r.n_evals)


def w_from_f(f_value: float) -> float:
    return -12.0 * math.pi ** 2 * math.log(2.0) + 8.0 * f_value
