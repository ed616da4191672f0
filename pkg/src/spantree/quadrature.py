"""
Numerical oracles.

``integrate_1d``
    Globally adaptive 15-point Gauss-Kronrod with bisection; semi-infinite
    ranges through the map x = lo + t/(1 - t).
``integrate_2d_periodic``
    Half-step offset product midpoint rule on the torus [0, 2pi]^2 with
    two-stage Richardson extrapolation in h^2, h^4.
``w_oracle_2d``, ``w_oracle_semi``, ``green_oracle``
    Direct and semi-analytic evaluations of the lattice double integrals.

Integrands are called with numpy arrays and must be vectorized.
"""

from __future__ import annotations

import heapq
import math
from typing import Callable, Sequence, Union

import numpy as np

from .types import ConvergenceError, DomainError, QuadResult, Weights

MAX_EVALS_1D = 1_000_000
MAX_GRID_2D = 4096

# QUADPACK qk15 abscissae / weights on [-1, 1].
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KWEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes (1, 3, 5, 7 from each end).
_GWEIGHTS = np.zeros(15)
_GWEIGHTS[[1, 3, 5]] = _WG[:3]
_GWEIGHTS[[9, 11, 13]] = _WG[2::-1]
_GWEIGHTS[7] = _WG[3]

_EPS = float(np.finfo(float).eps)


def _gk15(f: Callable, lo: float, hi: float) -> tuple[float, float]:
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    y = np.asarray(f(mid + half * _NODES), dtype=float)
    if not np.all(np.isfinite(y)):
        raise DomainError(f"integrand not finite on [{lo!r}, {hi!r}]")
    k = half * float(np.dot(_KWEIGHTS, y))
    g = half * float(np.dot(_GWEIGHTS, y))
    return k, abs(k - g)


def integrate_1d(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_evals: int = MAX_EVALS_1D,
) -> QuadResult:
    """Adaptive Gauss-Kronrod integral of a vectorized ``f`` over [lo, hi].

    ``hi`` may be ``math.inf``.  Nodes never touch the endpoints, so
    integrable endpoint singularities (log, square-root cusps) are
    resolved by repeated bisection toward them.

    Raises
    ------
    ConvergenceError
        When the summed error estimate is still above ``tol`` after
        ``max_evals`` integrand evaluations; ``err.best`` carries the
        estimate reached.
    """
    lo = float(lo)
    hi = float(hi)
    if not math.isfinite(lo) or math.isnan(hi):
        raise DomainError("lower limit must be finite")
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    if tol <= 0:
        raise DomainError("tol must be positive")

    if math.isinf(hi):
        g = f

        def f(t):  # noqa: F811
            s = 1.0 - t
            return g(lo + t / s) / (s * s)

        lo, hi = 0.0, 1.0

    value, err = _gk15(f, lo, hi)
    n_evals = 15
    heap = [(-err, lo, hi, value, err)]
    frozen = []  # intervals at floating resolution; cannot be refined
    total_err = err
    while total_err > tol and heap:
        if n_evals + 30 > max_evals:
            best = _finish(heap + frozen, n_evals)
            raise ConvergenceError(
                f"integrate_1d: error estimate {best.abs_err_est:.3g} > tol {tol:.3g} "
                f"after {n_evals} evaluations",
                best,
            )
        item = heapq.heappop(heap)
        _, a, b, v, e = item
        m = 0.5 * (a + b)
        if not (a < m < b) or (b - a) < 64 * _EPS * max(abs(a), abs(b), 1.0):
            frozen.append(item)
            total_err -= e
            continue
        v1, e1 = _gk15(f, a, m)
        v2, e2 = _gk15(f, m, b)
        n_evals += 30
        heapq.heappush(heap, (-e1, a, m, v1, e1))
        heapq.heappush(heap, (-e2, m, b, v2, e2))
        total_err += e1 + e2 - e
        if total_err <= tol:
            # re-sum to guard against drift in the running total
            total_err = math.fsum(it[4] for it in heap)
    return _finish(heap + frozen, n_evals)


def _finish(heap, n_evals: int) -> QuadResult:
    items = sorted(heap, key=lambda it: it[1])
    value = math.fsum(it[3] for it in items)
    err = math.fsum(it[4] for it in items)
    return QuadResult(value=value, abs_err_est=err, n_evals=n_evals)


def integrate_2d_periodic(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    tol: float = 1e-6,
    n_start: int = 64,
    max_n: int = MAX_GRID_2D,
) -> QuadResult:
    """Integral of a doubly 2pi-periodic ``f(x, y)`` over [0, 2pi]^2.

    ``f`` is called with a column of x values against a row of y values
    and must broadcast.  The grid is offset by half a step so the corner
    (0, 0) is never sampled; a logarithmic singularity there only
    contributes even powers of the step, which two Richardson stages
    remove.  The error estimate is the change between the last one-stage
    and two-stage extrapolants.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    n = n_start
    raw: list[float] = []
    n_evals = 0
    best = None
    while n <= max_n:
        raw.append(_offset_grid_sum(f, n))
        n_evals += n * n
        if len(raw) >= 3:
            r1_prev = (4.0 * raw[-2] - raw[-3]) / 3.0
            r1 = (4.0 * raw[-1] - raw[-2]) / 3.0
            r2 = (16.0 * r1 - r1_prev) / 15.0
            err = abs(r2 - r1) + 64 * _EPS * abs(r2)
            best = QuadResult(value=r2, abs_err_est=err, n_evals=n_evals)
            if err <= tol:
                return best
        n *= 2
    raise ConvergenceError(
        f"integrate_2d_periodic: tolerance {tol:.3g} not met at N={max_n}", best
    )


def _offset_grid_sum(f, n: int, block: int = 256) -> float:
    h = 2.0 * math.pi / n
    x = (np.arange(n) + 0.5) * h
    partial = []
    for start in range(0, n, block):
        vals = np.broadcast_to(f(x[start:start + block, None], x[None, :]), (min(block, n - start), n))
        partial.append(float(np.sum(vals)))
    return math.fsum(partial) * h * h


def lattice_delta(w: Weights, x, y):
    """Delta(a, b, c) = a(1 - cos x) + b(1 - cos y) + c(1 - cos(x + y)).

    Written with half-angle sines so no cancellation occurs near the
    origin.
    """
    return 2.0 * (
        w.a * np.sin(0.5 * x) ** 2
        + w.b * np.sin(0.5 * y) ** 2
        + w.c * np.sin(0.5 * (x + y)) ** 2
    )


def w_oracle_2d(w: Weights, tol: float = 1e-4) -> QuadResult:
    """Direct 2-D quadrature of ``ln[1 - a cos x - b cos y - c cos(x+y)]``."""
    return integrate_2d_periodic(lambda x, y: np.log(lattice_delta(w, x, y)), tol)


def _collapsed(w: Weights, x):
    # Integrating over y, 1 - a cos x - b cos y - c cos(x+y) = P - R cos(y + phi)
    # with P = 1 - a cos x and R^2 = b^2 + c^2 + 2bc cos x.  With s = 1 - cos x
    # one has P^2 - R^2 = s (2 d^2 + a^2 s) exactly.
    s = 2.0 * np.sin(0.5 * x) ** 2
    p = (w.b + w.c) + w.a * s
    disc = s * (2.0 * w.d ** 2 + w.a ** 2 * s)
    return s, p, disc


def w_oracle_semi(w: Weights, tol: float = 1e-10) -> QuadResult:
    """W(a, b) with the y-integral done in closed form.

    Uses  int_0^{2pi} ln(p - q cos t) dt = 2pi ln[(p + sqrt(p^2 - q^2))/2],
    leaving a 1-D integrand with a square-root cusp at x = 0.  The
    integrand is even about x = pi, so only [0, pi] is integrated.
    """

    def g(x):
        _, p, disc = _collapsed(w, x)
        return np.log(0.5 * (p + np.sqrt(disc)))

    r = integrate_1d(g, 0.0, math.pi, tol / (4.0 * math.pi))
    k = 4.0 * math.pi
    return QuadResult(k * r.value, k * r.abs_err_est, r.n_evals)


_NUMERATORS = {
    (1, 0, 0): 0, "a": 0, "I_a": 0,
    (0, 1, 0): 1, "b": 1, "I_b": 1,
    (0, 0, 1): 2, "c": 2, "I_c": 2,
}


def _numerator_index(numerator: Union[str, Sequence[int]]) -> int:
    key = numerator if isinstance(numerator, str) else tuple(int(v) for v in numerator)
    try:
        return _NUMERATORS[key]
    except KeyError:
        raise DomainError(f"unsupported numerator {numerator!r}") from None


def green_oracle(
    w: Weights, numerator: Union[str, Sequence[int]], tol: float = 1e-10
) -> QuadResult:
    """``int int Delta(e) / Delta(a, b, c)`` over the torus, for unit e.

    ``numerator`` selects e = (1,0,0), (0,1,0) or (0,0,1) (aliases "a",
    "b", "c").  The (0,1,0) and (0,0,1) cases are brought to (1,0,0) by
    the unimodular relabelings x <-> y and (x, y) -> (x + y, -y), which
    permute the weights as (a,b,c) -> (b,a,c) and (c,b,a).  After
    ``int dy / (p - q cos y) = 2pi / sqrt(p^2 - q^2)`` the remaining
    integrand (1 - cos x) 2pi / sqrt(P^2 - R^2) is bounded.
    """
    idx = _numerator_index(numerator)
    a, b, c = w.astuple()
    if idx == 1:
        a, b, c = b, a, c
    elif idx == 2:
        a, b, c = c, b, a
    ww = Weights(a, b, c)

    def g(x):
        s, _, disc = _collapsed(ww, x)
        return s / np.sqrt(disc)

    # even about x = pi
    r = integrate_1d(g, 0.0, math.pi, tol / (4.0 * math.pi))
    k = 4.0 * math.pi
    return QuadResult(k * r.value, k * r.abs_err_est, r.n_evals)
