from .matern import MaternSpec, OrthonormalBasis, matern_eval, matern_gram, orthonormal_linear_basis
from .projection import ProjectedKernel, projected_kernel_eval
from .ridge import (
    KernelRidgeFitter,
    KernelRidgeModel,
    gcv_select_lambda,
    kernel_ridge_fit,
    rkhs_norm_sq,
)

__all__ = [
    "MaternSpec",
    "OrthonormalBasis",
    "matern_eval",
    "matern_gram",
    "orthonormal_linear_basis",
    "ProjectedKernel",
    "projected_kernel_eval",
    "KernelRidgeFitter",
    "KernelRidgeModel",
    "gcv_select_lambda",
    "kernel_ridge_fit",
    "rkhs_norm_sq",
]
