"""
Anisotropic triangular-lattice Green-function limits.

With Delta(a, b, c) = a + b + c - a cos x - b cos y - c cos(x + y), the
integrals

    I_a = int int Delta(1,0,0)/Delta(a,b,c),  I_b = ... Delta(0,1,0) ...,
    I_c = ... Delta(0,0,1) ...

over [0, 2pi]^2 follow from derivatives of W along the simplex:

    dW/da (b fixed) = I_a - I_c,    dW/db (a fixed) = I_b - I_c,

together with a I_a + b I_b + c I_c = 4 pi^2.  Differentiating the Ti2
closed form of W gives

    dW/da = 8 pi [arctan(a/d)/a - arctan(c/d)/c],

so that I_x = (8 pi / x) arctan(x / d) for each weight x.
"""

from __future__ import annotations

import math

from .quadrature import green_oracle
from .types import DomainError, GreenValues, IdentityReport, Weights

FOUR_PI2 = 4.0 * math.pi ** 2
_SERIES_BELOW = 1e-8

VARIANT_LABELS = {
    1: "Delta(1,0,0)",
    2: "Delta(0,0,1)",
    3: "Delta(1,1,1)",
    4: "Delta(-1,1,0)",
}
VARIANT_TRUTH = {1: "I_a", 2: "I_c", 3: "I_a+I_b+I_c", 4: "I_b-I_a"}


def _atan_ratio(x: float, d: float) -> float:
    """arctan(x/d)/x, finite as x -> 0+ (limit 1/d)."""
    r = x / d
    if r < _SERIES_BELOW:
        return (1.0 - r * r / 3.0) / d
    return math.atan(r) / x


def _interior(w: Weights) -> tuple[float, float, float, float]:
    if not w.interior:
        raise DomainError("all three weights must be strictly positive")
    return w.a, w.b, w.c, w.d


def dW_da(w: Weights) -> float:
    """Partial derivative of W along the simplex with b held fixed."""
    a, _, c, d = _interior(w)
    return 8.0 * math.pi * (_atan_ratio(a, d) - _atan_ratio(c, d))


def dW_db(w: Weights) -> float:
    """Partial derivative of W along the simplex with a held fixed."""
    _, b, c, d = _interior(w)
    return 8.0 * math.pi * (_atan_ratio(b, d) - _atan_ratio(c, d))


def green_values(w: Weights) -> GreenValues:
    """Solve for (I_a, I_b, I_c) from the two derivatives and the normalization."""
    da = dW_da(w)
    db = dW_db(w)
    i_c = FOUR_PI2 - w.a * da - w.b * db
    return GreenValues(I_a=i_c + da, I_b=i_c + db, I_c=i_c)


def green_printed(variant: int, w: Weights) -> float:
    """The four closed forms of the Green-function limits, transcribed verbatim.

    These are comparison targets only; variants 1, 2 and 4 do not agree
    with the integrals they claim to evaluate (see ``green_compare``).
    """
    a, b, c, d = _interior(w)
    d2 = d * d
    at_a, at_b, at_c = math.atan(a / d), math.atan(b / d), math.atan(c / d)
    pi = math.pi
    if variant == 1:
        return (4 * pi / d2) * (b + c) * (
            pi / 2
            + (a * (b + c) + 2 * b * c) / (a * (b + c)) * at_a
            - math.atan((b + c) * d / (b * c + d2))
        )
    if variant == 2:
        return (4 * pi / d2) * (a + b) * (
            pi / 2
            + ((a + b) * c + 2 * a * b) / ((a + b) * c) * at_c
            - math.atan((a + b) * d / (a * b + d2))
        )
    if variant == 3:
        return (4 * pi ** 2 / d2) * (a + b + c) + (8 * pi / d2) * (
            (b * c - a * a) / a * at_a
            + (a * c - b * b) / b * at_b
            + (a * b - c * c) / c * at_c
        )
    if variant == 4:
        return (2 * pi ** 2 / d2) * (a - b) + (4 * pi / d2) * (
            (b - a) * at_c
            + (a + b + 2 * c * (a + b) / b) * at_b
            - (a + b + 2 * c + 2 * c * (a + b) / a) * at_a
        )
    raise DomainError(f"variant must be 1..4, got {variant!r}")


def variant_truth(variant: int, g: GreenValues) -> float:
    """Map GreenValues onto the integral named by a printed variant."""
    if variant == 1:
        return g.I_a
    if variant == 2:
        return g.I_c
    if variant == 3:
        return g.I_a + g.I_b + g.I_c
    if variant == 4:
        return g.I_b - g.I_a
    raise DomainError(f"variant must be 1..4, got {variant!r}")


def green_oracle_values(w: Weights, tol: float = 1e-11) -> tuple[GreenValues, float]:
    """All three components by quadrature, plus their summed error estimate."""
    ra, rb, rc = (green_oracle(w, k, tol) for k in ("a", "b", "c"))
    err = ra.abs_err_est + rb.abs_err_est + rc.abs_err_est
    return GreenValues(ra.value, rb.value, rc.value), err


def oracle_tolerance(value: float) -> float:
    return max(1e-6 * abs(value), 1e-5)


def green_compare(w: Weights, tol: float = 1e-4, trial: int = 0) -> list[IdentityReport]:
    """Cross-check the derivative route, the quadrature route and the printed forms.

    Reports named ``green_printed_v*`` compare each printed variant with
    the quadrature value of the integral it names (``extra`` also holds
    the derivative-route value).  A failed ``green_printed_v*`` report is
    an erratum of the printed formula, not of this package.
    """
    params = {"a": w.a, "b": w.b, "c": w.c}
    derived = green_values(w)
    oracle, oracle_err = green_oracle_values(w)
    reports = []
    for name in ("I_a", "I_b", "I_c"):
        dv = getattr(derived, name)
        ov = getattr(oracle, name)
        reports.append(
            IdentityReport.compare(
                f"green_derived_vs_oracle_{name}", params, dv, ov, oracle_tolerance(ov), trial=trial
            )
        )
    reports.append(
        IdentityReport.compare(
            "green_normalization_derived",
            params,
            w.a * derived.I_a + w.b * derived.I_b + w.c * derived.I_c,
            FOUR_PI2,
            1e-10,
            trial=trial,
        )
    )
    reports.append(
        IdentityReport.compare(
            "green_normalization_oracle",
            params,
            w.a * oracle.I_a + w.b * oracle.I_b + w.c * oracle.I_c,
            FOUR_PI2,
            max(oracle_err, 1e-10),
            trial=trial,
        )
    )
    for v in (1, 2, 3, 4):
        printed = green_printed(v, w)
        truth = variant_truth(v, oracle)
        reports.append(
            IdentityReport.compare(
                f"green_printed_v{v}",
                params,
                printed,
                truth,
                tol,
                trial=trial,
                extra={
                    "integral": VARIANT_LABELS[v],
                    "ground_truth": VARIANT_TRUTH[v],
                    "derived": variant_truth(v, derived),
                },
            )
        )
    return reports
