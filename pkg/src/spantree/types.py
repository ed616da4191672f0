"""Value types shared across the package."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class ConvergenceError(RuntimeError):
    """Raised when a quadrature exhausts its budget before meeting tolerance.

    The best available estimate is kept on ``best`` so callers can still
    inspect it.
    """

    def __init__(self, message: str, best: Optional["QuadResult"] = None):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_err_est: float
    n_evals: int

    def __float__(self) -> float:
        return self.value


_NEG_TOL = 1e-15


def _check_weight_triple(vals: tuple[float, float, float], names: str) -> tuple[float, float, float]:
    out = []
    for name, v in zip(names, vals):
        v = float(v)
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")
        if v < -_NEG_TOL:
            raise DomainError(f"{name} must be nonnegative, got {v!r}")
        out.append(max(v, 0.0))
    if sum(1 for v in out if v == 0.0) > 1:
        raise DomainError(f"at most one of {', '.join(names)} may be zero")
    return out[0], out[1], out[2]


@dataclass(frozen=True, init=False)
class Weights:
    """Normalized lattice weights (a, b, c) with a + b + c = 1.

    ``Weights(a, b)`` takes ``c = 1 - a - b``; ``Weights(a, b, c)`` rescales
    the triple to unit sum.  Negative components (beyond rounding) and
    triples with two or more zeros are rejected.
    """

    a: float
    b: float
    c: float

    def __init__(self, a: float, b: float, c: Optional[float] = None):
        if c is None:
            c = 1.0 - float(a) - float(b)
        a, b, c = _check_weight_triple((a, b, c), "abc")
        total = a + b + c
        object.__setattr__(self, "a", a / total)
        object.__setattr__(self, "b", b / total)
        object.__setattr__(self, "c", c / total)

    @property
    def d(self) -> float:
        return math.sqrt(self.a * self.b + self.b * self.c + self.c * self.a)

    def astuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def interior(self) -> bool:
        return self.a > 0.0 and self.b > 0.0 and self.c > 0.0


@dataclass(frozen=True)
class CWParams:
    """Unnormalized nonnegative couplings (A, B, C) of the Chen-Wu form."""

    A: float
    B: float
    C: float

    def __post_init__(self):
        A, B, C = _check_weight_triple((self.A, self.B, self.C), "ABC")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    @property
    def S(self) -> float:
        return 1.0 / math.sqrt(self.A * self.B + self.B * self.C + self.C * self.A)

    @property
    def total(self) -> float:
        return self.A + self.B + self.C

    def normalized(self) -> Weights:
        return Weights(self.A, self.B, self.C)


@dataclass(frozen=True)
class GreenValues:
    """Green-function limits I_a, I_b, I_c (natural scale 4*pi**2)."""

    I_a: float
    I_b: float
    I_c: float

    def as_dict(self) -> dict:
        return {"I_a": self.I_a, "I_b": self.I_b, "I_c": self.I_c}


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one numerical identity check.

    ``passed`` is true exactly when ``abs_diff <= tol``.  ``extra`` holds
    auxiliary comparisons, e.g. an as-printed variant of the identity.
    """

    identity_name: str
    params: dict
    lhs: float
    rhs: float
    abs_diff: float
    tol: float
    passed: bool
    trial: int = 0
    extra: dict = field(default_factory=dict)

    @classmethod
    def compare(
        cls,
        name: str,
        params: dict,
        lhs: float,
        rhs: float,
        tol: float,
        *,
        relative: bool = False,
        trial: int = 0,
        extra: Optional[dict] = None,
    ) -> "IdentityReport":
        lhs = float(lhs)
        rhs = float(rhs)
        if not (math.isfinite(lhs) and math.isfinite(rhs)):
            raise DomainError(f"{name}: non-finite side (lhs={lhs!r}, rhs={rhs!r})")
        diff = abs(lhs - rhs)
        if relative:
            diff /= max(abs(lhs), abs(rhs), 1e-300)
        return cls(
            identity_name=name,
            params={k: float(v) for k, v in params.items()},
            lhs=lhs,
            rhs=rhs,
            abs_diff=diff,
            tol=float(tol),
            passed=bool(diff <= tol),
            trial=trial,
            extra=dict(extra or {}),
        )

    def to_json(self) -> dict:
        return {
            "identity_name": self.identity_name,
            "trial": self.trial,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "tol": self.tol,
            "pass": self.passed,
            "extra": dict(self.extra),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "IdentityReport":
        return cls(
            identity_name=obj["identity_name"],
            params=dict(obj["params"]),
            lhs=obj["lhs"],
            rhs=obj["rhs"],
            abs_diff=obj["abs_diff"],
            tol=obj["tol"],
            passed=obj["pass"],
            trial=obj.get("trial", 0),
            extra=dict(obj.get("extra", {})),
        )
