"""Kernel package for reachkit."""

from reachkit.kernel.base import KernelBase, KernelSpec
from reachkit.kernel.kernels import GaussianKernel, PolynomialKernel, kernel_eval, kernel_matrix, make_kernel

__all__ = [
    "GaussianKernel",
    "KernelBase",
    "KernelSpec",
    "PolynomialKernel",
    "kernel_eval",
    "kernel_matrix",
    "make_kernel",
]
