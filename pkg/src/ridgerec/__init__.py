"""Kernel ridge regression and matrix-factorization SGD on NumPy.

Hot loops run as numba-compiled kernels by default, with a pure-NumPy
fallback selected by the RIDGEREC_BACKEND environment variable.
"""

from .backend import HAVE_NUMBA, active_backend, use_backend
from .bench import DEFAULT_SEED, BenchRecord, gen_synthetic, time_fit
from .data_io import (
    ARCHIVE_VERSION,
    KIND_KERNEL_RIDGE,
    KIND_MF_SGD,
    load_matrix,
    load_model,
    load_ratings,
    load_vector,
    save_matrix,
    save_model,
    save_vector,
)
from .kernel_ridge import (
    FactorizationError,
    KernelRidgeConfig,
    KernelRidgeModel,
    fit_residual,
    kernel_matrix,
    krr_fit,
    krr_predict,
)
from .mf_sgd import EpochReport, MFConfig, MFModel, Rating

__version__ = "0.1.0"

__all__ = [
    "ARCHIVE_VERSION",
    "BenchRecord",
    "DEFAULT_SEED",
    "EpochReport",
    "FactorizationError",
    "HAVE_NUMBA",
    "KIND_KERNEL_RIDGE",
    "KIND_MF_SGD",
    "KernelRidgeConfig",
    "KernelRidgeModel",
    "MFConfig",
    "MFModel",
    "Rating",
    "active_backend",
    "fit_residual",
    "gen_synthetic",
    "kernel_matrix",
    "krr_fit",
    "krr_predict",
    "load_matrix",
    "load_model",
    "load_ratings",
    "load_vector",
    "save_matrix",
    "save_model",
    "save_vector",
    "time_fit",
    "use_backend",
]
