"""
Numerical verification of the intermediate identities behind the closed
form of W(a, b).

Every ``*_check`` evaluates the integral side by adaptive quadrature and
the closed side from ``ti2``/elementary functions, and returns an
``IdentityReport``.  ``run_suite`` draws seeded random parameters for all
of them and also collects the printed-formula discrepancies (errata).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closedform import FOUR_PI2, chen_wu_per_site, f_ab_quad, w_closed, w_from_f
from .green import green_compare
from .lattice import application_errata
from .quadrature import integrate_1d, w_oracle_semi
from .specfun import ti2
from .types import CWParams, DomainError, IdentityReport, Weights

FACTORIZATION_RTOL = 1e-11


def _quad_tol(tol: float) -> float:
    return min(max(tol * 1e-3, 1e-13), 1e-9)


# ---------------------------------------------------------------- Lewin lemma


@dataclass(frozen=True)
class LewinParams:
    alpha: float
    beta: float
    gamma: float
    d0: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.alpha, self.beta, self.gamma, self.d0)):
            raise DomainError("Lewin parameters must be finite")
        if self.alpha < 0 or self.gamma < 0 or self.d0 <= 0:
            raise DomainError("need alpha >= 0, gamma >= 0, d0 > 0")
        if self.alpha * self.gamma - self.beta ** 2 < 0:
            raise DomainError("need alpha*gamma - beta^2 >= 0")
        if self.gamma == 0 and self.alpha == 0:
            raise DomainError("quadratic vanishes identically")


def lewin_bracket(p: LewinParams) -> float:
    return p.alpha * p.d0 ** 2 + p.gamma + 2.0 * p.d0 * math.sqrt(p.alpha * p.gamma - p.beta ** 2)


def lewin_check(p: LewinParams, tol: float = 1e-7) -> IdentityReport:
    """The ln-quadratic integral against a Lorentzian.

    Checked form (holds for every valid beta):

        (1/2) int_{-inf}^{inf} ln(alpha w^2 + 2 beta w + gamma)/(w^2 + d0^2) dw
            = (pi / (2 d0)) ln[alpha d0^2 + gamma + 2 d0 sqrt(alpha gamma - beta^2)]

    which is the half-line integral with a halved right side when
    beta = 0.  The form as printed (half-line integral, unhalved right
    side) is evaluated too and lands in ``extra``.
    """
    def q(w):
        return p.alpha * w * w + 2.0 * p.beta * w + p.gamma

    d2 = p.d0 ** 2
    qt = _quad_tol(tol)
    sym = integrate_1d(lambda w: 0.5 * (np.log(q(w)) + np.log(q(-w))) / (w * w + d2), 0.0, math.inf, qt)
    if p.beta == 0.0:
        half = sym
    else:
        half = integrate_1d(lambda w: np.log(q(w)) / (w * w + d2), 0.0, math.inf, qt)
    log_br = math.log(lewin_bracket(p))
    rhs = math.pi / (2.0 * p.d0) * log_br
    printed_rhs = math.pi / p.d0 * log_br
    printed_diff = abs(half.value - printed_rhs)
    halved_diff = abs(half.value - rhs)
    corrected_diff = abs(sym.value - rhs)
    matches = [
        name
        for name, diff in (("corrected", corrected_diff), ("printed", printed_diff))
        if diff <= tol
    ]
    return IdentityReport.compare(
        "lewin",
        {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "d0": p.d0},
        sym.value,
        rhs,
        tol,
        extra={
            "half_line_lhs": half.value,
            "printed_rhs": printed_rhs,
            "printed_abs_diff": printed_diff,
            "half_line_halved_abs_diff": halved_diff,
            "log_bracket": log_br,
            "matches": ",".join(matches) or "none",
        },
    )


def lewin_printed_report(r: IdentityReport) -> IdentityReport:
    """The lemma exactly as printed, from a ``lewin_check`` report:
    half-line integral against (pi/d0) ln[...]."""
    return IdentityReport.compare(
        "lewin_printed",
        r.params,
        r.extra["half_line_lhs"],
        r.extra["printed_rhs"],
        r.tol,
        trial=r.trial,
        extra={"log_bracket": r.extra["log_bracket"]},
    )


# ------------------------------------------------------------ Ti2 identities


def _ab_params(theta: float, y: float) -> tuple[float, float]:
    root = 1.0 + math.sqrt(1.0 + y * y)
    return y / math.tan(0.5 * theta) / root, y * math.tan(0.5 * theta) / root


def eq3_check(theta: float, y: float, tol: float = 1e-7) -> IdentityReport:
    """int_1^{csc theta} arctan(y u)/sqrt(u^2 - 1) du = Ti2(A) - Ti2(B)."""
    if not (0.0 < theta <= 0.5 * math.pi) or not y > 0.0:
        raise DomainError("need 0 < theta <= pi/2 and y > 0")
    # u = cosh t removes the inverse-square-root endpoint singularity
    upper = math.acosh(1.0 / math.sin(theta))
    if upper > 0.0:
        lhs = integrate_1d(lambda t: np.arctan(y * np.cosh(t)), 0.0, upper, _quad_tol(tol)).value
    else:
        lhs = 0.0
    A, B = _ab_params(theta, y)
    return IdentityReport.compare("eq3", {"theta": theta, "y": y}, lhs, ti2(A) - ti2(B), tol)


def _ti2_pair(a: float, b: float) -> tuple[float, float]:
    r = math.sqrt(b * b + 1.0 - a * a)
    return (r + b) / (1.0 + a), (r - b) / (1.0 + a)


def _check_ab(a: float, b: float) -> None:
    if not (0.0 < a < 1.0) or not b >= 0.0 or not math.isfinite(b):
        raise DomainError("need 0 < a < 1 and finite b >= 0")


def eq4_check(a: float, b: float, tol: float = 1e-7) -> IdentityReport:
    """int_0^b arctan(r(x)/a)/r(x) dx, r = sqrt(x^2 - a^2 + 1), as a Ti2 difference."""
    _check_ab(a, b)

    def g(x):
        r = np.sqrt(x * x - a * a + 1.0)
        return np.arctan(r / a) / r

    lhs = integrate_1d(g, 0.0, b, _quad_tol(tol)).value if b > 0 else 0.0
    p, m = _ti2_pair(a, b)
    return IdentityReport.compare("eq4", {"a": a, "b": b}, lhs, ti2(p) - ti2(m), tol)


def eq3_params_from_eq4(a: float, b: float) -> tuple[float, float]:
    """(theta, y) at which the eq3_check integral coincides with the eq4_check one."""
    _check_ab(a, b)
    theta = math.asin(math.sqrt((1.0 - a * a) / (b * b - a * a + 1.0)))
    y = math.sqrt(1.0 / (a * a) - 1.0)
    return theta, y


def g_ab_check(a: float, b: float, tol: float = 1e-7) -> IdentityReport:
    """g(a, b) = int_0^inf ln[sqrt(b^2 (s^2+1) + 1) + a]/(s^2 + 1) ds in closed form."""
    _check_ab(a, b)

    def g(s):
        return np.log(np.sqrt(b * b * (s * s + 1.0) + 1.0) + a) / (s * s + 1.0)

    lhs = integrate_1d(g, 0.0, math.inf, _quad_tol(tol)).value
    p, m = _ti2_pair(a, b)
    rhs = 0.5 * math.pi * math.log1p(a) + ti2(p) - ti2(m)
    return IdentityReport.compare("g_ab", {"a": a, "b": b}, lhs, rhs, tol)


def eq5_rhs(alpha: float, beta: float, gamma: float) -> float:
    den = beta + math.sqrt(gamma * gamma - alpha * alpha)
    s = math.sqrt(gamma * gamma - beta * beta)
    return 0.5 * math.pi * math.log(den) + ti2((alpha + s) / den) + ti2((alpha - s) / den)


def eq5_check(alpha: float, beta: float, gamma: float, tol: float = 1e-7) -> IdentityReport:
    """int_0^inf ln[alpha + sqrt(beta^2 x^2 + gamma^2)]/(x^2 + 1) dx in closed form."""
    if not (gamma > 0 and gamma >= abs(alpha) and gamma >= beta >= 0):
        raise DomainError("need gamma > 0, gamma >= |alpha|, gamma >= beta >= 0")
    if beta == 0.0 and abs(alpha) == gamma:
        raise DomainError("closed form undefined for beta = 0, |alpha| = gamma")

    def g(x):
        return np.log(alpha + np.sqrt(beta * beta * x * x + gamma * gamma)) / (x * x + 1.0)

    lhs = integrate_1d(g, 0.0, math.inf, _quad_tol(tol)).value
    return IdentityReport.compare(
        "eq5", {"alpha": alpha, "beta": beta, "gamma": gamma}, lhs, eq5_rhs(alpha, beta, gamma), tol
    )


def factorization_check(w: Weights, x: float, tol: float = FACTORIZATION_RTOL) -> IdentityReport:
    """(1-a)x^2 + 1 + a + 2R = [a(1-a) + 2bc + (1-a)R][a + R] / (ac + b(1-b)).

    R = sqrt((ac + b(1-b)) x^2 + (1-b)(a+b)); the residual is relative.
    """
    a, b, c = w.astuple()
    k = a * c + b * (1.0 - b)
    if k == 0.0:
        raise DomainError("ac + b(1-b) = 0")
    R = math.sqrt(k * x * x + (1.0 - b) * (a + b))
    lhs = (1.0 - a) * x * x + 1.0 + a + 2.0 * R
    rhs = (a * (1.0 - a) + 2.0 * b * c + (1.0 - a) * R) * (a + R) / k
    return IdentityReport.compare(
        "factorization", {"a": a, "b": b, "c": c, "x": x}, lhs, rhs, tol, relative=True
    )


# ---------------------------------------------------------------------- suite


def sample_weights(rng: np.random.Generator) -> Weights:
    return Weights(*rng.uniform(0.05, 1.0, 3))


def sample_lewin(rng: np.random.Generator) -> LewinParams:
    alpha, gamma = rng.uniform(0.1, 3.0, 2)
    bmax = 0.99 * math.sqrt(alpha * gamma)
    return LewinParams(float(alpha), float(rng.uniform(-bmax, bmax)), float(gamma), float(rng.uniform(0.2, 3.0)))


@dataclass
class SuiteResult:
    reports: list
    errata: list
    seed: int
    trials: int

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict:
        return {"passed": self.passed, "failed": self.failed, "seed": self.seed, "trials": self.trials}

    def to_json(self) -> dict:
        return {
            "reports": [r.to_json() for r in self.reports],
            "errata": [r.to_json() for r in self.errata],
            "summary": self.summary(),
        }


# symmetric point, a = b points and a generic point for the printed Green forms
GREEN_FIXED_POINTS = (
    (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
    (0.25, 0.25, 0.5),
    (0.4, 0.4, 0.2),
    (0.5, 0.3, 0.2),
)


def _with_trial(r: IdentityReport, trial: int) -> IdentityReport:
    return IdentityReport(
        r.identity_name, r.params, r.lhs, r.rhs, r.abs_diff, r.tol, r.passed, trial, r.extra
    )


def _trial_reports(rng: np.random.Generator, trial: int, tol: float) -> list[IdentityReport]:
    out: list[IdentityReport] = []

    def add(r: IdentityReport) -> None:
        out.append(_with_trial(r, trial))

    lp = sample_lewin(rng)
    rl = lewin_check(lp, tol)
    add(rl)
    add(lewin_printed_report(rl))

    theta = float(rng.uniform(0.05, 0.5 * math.pi))
    y = float(rng.uniform(0.1, 5.0))
    add(eq3_check(theta, y, tol))

    a = float(rng.uniform(0.05, 0.95))
    b = float(rng.uniform(0.0, 5.0))
    r4 = eq4_check(a, b, tol)
    add(r4)
    th, yy = eq3_params_from_eq4(a, b)
    r3 = eq3_check(th, yy, tol)
    add(IdentityReport.compare("eq3_eq4_map", {"a": a, "b": b, "theta": th, "y": yy}, r3.lhs, r4.lhs, tol))

    a = float(rng.uniform(0.05, 0.95))
    b = float(rng.uniform(0.0, 5.0))
    add(g_ab_check(a, b, tol))

    gamma = float(rng.uniform(0.2, 3.0))
    beta = float(rng.uniform(0.0, gamma))
    alpha = float(rng.uniform(-0.95 * gamma, gamma))
    add(eq5_check(alpha, beta, gamma, tol))

    w = sample_weights(rng)
    x = float(rng.uniform(-10.0, 10.0))
    add(factorization_check(w, x, FACTORIZATION_RTOL))

    w = sample_weights(rng)
    params = {"a": w.a, "b": w.b, "c": w.c}
    wc = w_closed(w)
    add(IdentityReport.compare("w_closed_vs_semi", params, wc, w_oracle_semi(w, _quad_tol(tol)).value, tol))
    add(IdentityReport.compare("f_ab_bridge", params, w_from_f(f_ab_quad(w, _quad_tol(tol)).value), wc, tol))

    A, B, C = (float(v) for v in rng.uniform(0.1, 5.0, 3))
    cw = CWParams(A, B, C)
    add(
        IdentityReport.compare(
            "chen_wu_vs_w_closed",
            {"A": A, "B": B, "C": C},
            chen_wu_per_site(cw),
            math.log(cw.total) + w_closed(cw.normalized()) / FOUR_PI2,
            tol,
        )
    )

    w = sample_weights(rng)
    for r in green_compare(w, max(tol, 1e-4), trial):
        add(r)
    return out


def run_suite(seed: int = 42, trials: int = 10, tol: float = 1e-7) -> SuiteResult:
    """Run every identity check over ``trials`` seeded parameter draws.

    Printed-formula comparisons that fail go to ``errata`` and do not
    count as failures; every other report must pass.  Output ordering is
    by identity name, then trial index.
    """
    if int(trials) < 1:
        raise DomainError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    reports: list[IdentityReport] = []
    for t in range(int(trials)):
        reports.extend(_trial_reports(rng, t, tol))

    # fixed anchors, recorded as trial -1
    anchor = LewinParams(1.0, 0.0, 1.0, 1.0)
    rl = _with_trial(lewin_check(anchor, tol), -1)
    reports.append(rl)
    reports.append(lewin_printed_report(rl))
    for pt in GREEN_FIXED_POINTS:
        reports.extend(green_compare(Weights(*pt), max(tol, 1e-4), -1))
    reports.extend(application_errata(tol))

    reports.sort(key=lambda r: (r.identity_name, r.trial))
    kept, errata = [], []
    for r in reports:
        if _is_printed(r.identity_name) and not r.passed:
            errata.append(r)
        else:
            kept.append(r)
    return SuiteResult(kept, errata, int(seed), int(trials))


def _is_printed(name: str) -> bool:
    return "printed" in name
