from .bessel import K_SATURATION, bessel_k
from .design import maximin_lhs
from .linalg import CholeskySolveResult, cholesky_solve, sym_eig_small
from .quadrature import QuadratureRule, gauss_legendre_01, halton, tensor_or_qmc_rule
from .rng import SeededRng

__all__ = [
    "K_SATURATION",
    "bessel_k",
    "maximin_lhs",
    "CholeskySolveResult",
    "cholesky_solve",
    "sym_eig_small",
    "QuadratureRule",
    "gauss_legendre_01",
    "halton",
    "tensor_or_qmc_rule",
    "SeededRng",
]
