"""Closed-form evaluation of the lattice spanning-tree entropy function W(a, b)."""

from .closedform import chen_wu_per_site, f_ab_quad, w_closed
from .green import dW_da, dW_db, green_compare, green_printed, green_values
from .lattice import (
    IsingCouplings,
    entropy_square,
    entropy_triangular,
    ising_critical_free_energy,
)
from .quadrature import (
    green_oracle,
    integrate_1d,
    integrate_2d_periodic,
    w_oracle_2d,
    w_oracle_semi,
)
from .specfun import catalan, ti2
from .types import (
    ConvergenceError,
    CWParams,
    DomainError,
    GreenValues,
    IdentityReport,
    QuadResult,
    Weights,
)

__version__ = "0.1.0"

__all__ = [
    "CWParams",
    "ConvergenceError",
    "DomainError",
    "GreenValues",
    "IdentityReport",
    "IsingCouplings",
    "QuadResult",
    "Weights",
    "catalan",
    "chen_wu_per_site",
    "dW_da",
    "dW_db",
    "entropy_square",
    "entropy_triangular",
    "f_ab_quad",
    "green_compare",
    "green_oracle",
    "green_printed",
    "green_values",
    "integrate_1d",
    "integrate_2d_periodic",
    "ising_critical_free_energy",
    "ti2",
    "w_closed",
    "w_oracle_2d",
    "w_oracle_semi",
]
