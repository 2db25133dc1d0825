"""Poincare polynomials of configuration spaces in R^N and of the link model."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import stirling1
from .errors import ParameterError
from .exact_arith import IntPolynomial


@dataclass(frozen=True)
class ModelParams:
    """Ambient dimension ``N`` and number of strings ``ell``.

    N = 3 is accepted (the series identities are formal) but the
    convergence statements need N >= 4; see :attr:`convergent_regime`.
    """

    N: int
    ell: int

    def __post_init__(self):
        if self.N < 3:
            raise ParameterError(f"ambient dimension N must be >= 3, got {self.N}")
        if self.ell < 1:
            raise ParameterError(f"number of strings ell must be >= 1, got {self.ell}")

    @property
    def step(self) -> int:
        """Spacing N - 1 of the lattice degrees."""
        return self.N - 1

    @property
    def convergent_regime(self) -> bool:
        return self.N >= 4


@lru_cache(maxsize=None)
def conf_u_poly(k: int) -> IntPolynomial:
    """``(1 + u)(1 + 2u)...(1 + (k-1)u)`` in the variable u."""
    if k < 0:
        raise ParameterError(f"number of points must be >= 0, got {k}")
    p = IntPolynomial.constant(1, "u")
    for j in range(1, k):
        p = p * IntPolynomial((1, j), "u")
    return p


def _check_dim(N: int) -> None:
    if N < 3:
        raise ParameterError(f"ambient dimension N must be >= 3, got {N}")
    if N == 3:
        warnings.warn("N = 3: series are formal, convergence needs N >= 4", stacklevel=3)


def conf_poincare(k: int, N: int) -> IntPolynomial:
    """Poincare polynomial in x of the configuration space of k points in R^N."""
    _check_dim(N)
    return conf_u_poly(k).spread(N - 1, "x")


def link_term_poincare(p: int, params: ModelParams) -> IntPolynomial:
    """Poincare polynomial of the p-th term of the link model, i.e. of Conf(ell*p, R^N)."""
    if p < 0:
        raise ParameterError(f"cosimplicial degree must be >= 0, got {p}")
    return conf_poincare(params.ell * p, params.N)


def stirling_coefficient_check(k: int, N: int, j: int) -> bool:
    """Is the x^((N-1)j) coefficient of the Poincare polynomial equal to ``[k; k-j]``?"""
    return conf_poincare(k, N)[(N - 1) * j] == stirling1(k, k - j)
