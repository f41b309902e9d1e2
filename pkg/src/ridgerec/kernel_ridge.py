"""Gaussian-kernel ridge regression.

Fitting centers the response, builds the RBF kernel matrix, and solves the
regularized symmetric system ``(K + lambda*I) alpha = y - mean(y)`` through
a Cholesky factorization (never an explicit inverse). Prediction is
``K(X_new, X_train) @ alpha + y_mean``.

A fitted :class:`KernelRidgeModel` is immutable (its arrays are marked
read-only), so concurrent prediction from multiple threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import _kernels


class FactorizationError(RuntimeError):
    """(K + lambda*I) could not be factored; possible only when lambda == 0
    and the kernel matrix is singular."""


@dataclass(frozen=True)
class KernelRidgeConfig:
    """Hyperparameters: regularization strength and kernel bandwidth."""

    lambda_: float
    sigma: float

    def __post_init__(self):
        if not self.lambda_ >= 0.0:
            raise ValueError("lambda must be non-negative.")
        if not self.sigma > 0.0:
            raise ValueError("sigma must be positive.")


@dataclass(frozen=True)
class KernelRidgeModel:
    """Fitted state: training inputs (n, d), dual coefficients (n,), response mean.

    A model with zero training rows counts as unfitted; predicting from it
    raises a RuntimeError.
    """

    config: KernelRidgeConfig
    x_train: np.ndarray
    alpha: np.ndarray
    y_mean: float


def _as_matrix(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be a 2-dimensional array, got {arr.ndim} dimension(s).")
    return np.ascontiguousarray(arr)


def _as_vector(y, name: str) -> np.ndarray:
    arr = np.asarray(y, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-dimensional array, got {arr.ndim} dimension(s).")
    return np.ascontiguousarray(arr)


def kernel_matrix(a, b, sigma: float) -> np.ndarray:
    """Gaussian RBF kernel matrix: entry (i, j) = exp(-||a_i - b_j||^2 / (2 sigma^2)).

    Squared distances are accumulated directly from row differences (not via
    the norm-expansion trick), so entries stay in (0, 1], the diagonal of
    ``kernel_matrix(a, a, sigma)`` is exactly 1, and that matrix is exactly
    symmetric by construction.
    """
    a = _as_matrix(a, "A")
    b = _as_matrix(b, "B")
    if not sigma > 0.0:
        raise ValueError("sigma must be positive.")
    if a.shape[1] != b.shape[1]:
        raise ValueError("A and B must have the same number of columns.")
    d2 = _kernels.pairwise_sq_dists(a, b)
    return np.exp(-d2 / (2.0 * sigma * sigma))


def krr_fit(x, y, config: KernelRidgeConfig) -> KernelRidgeModel:
    """Fit dual coefficients by solving (K + lambda*I) alpha = y - mean(y).

    The regularized matrix is factored with a Cholesky decomposition; for
    lambda > 0 it is positive definite, while lambda == 0 may fail on a
    singular kernel matrix, which surfaces as :class:`FactorizationError`.
    """
    x = _as_matrix(x, "X")
    y = _as_vector(y, "y")
    if x.shape[0] != y.shape[0]:
        raise ValueError(
            "Number of rows in X must match length of y. "
            f"(X rows: {x.shape[0]}, y length: {y.shape[0]})"
        )
    if x.shape[0] == 0:
        raise ValueError("X must contain at least one row.")

    y_mean = float(y.mean())
    y_centered = y - y_mean

    system = kernel_matrix(x, x, config.sigma)
    system[np.diag_indices_from(system)] += config.lambda_
    try:
        factor = scipy.linalg.cho_factor(system, lower=True, overwrite_a=True)
    except scipy.linalg.LinAlgError as exc:
        raise FactorizationError(
            "failed to factor (K + lambda*I); the kernel system is numerically singular."
        ) from exc
    alpha = scipy.linalg.cho_solve(factor, y_centered)

    x_train = x.copy()
    x_train.flags.writeable = False
    alpha.flags.writeable = False
    return KernelRidgeModel(config=config, x_train=x_train, alpha=alpha, y_mean=y_mean)


def krr_predict(model: KernelRidgeModel, x_new) -> np.ndarray:
    """Predict K(X_new, X_train) @ alpha + y_mean for each row of x_new."""
    if model.x_train.shape[0] == 0 or model.alpha.shape[0] == 0:
        raise RuntimeError("Model has not been fitted yet.")
    x_new = _as_matrix(x_new, "X_new")
    k_new = kernel_matrix(x_new, model.x_train, model.config.sigma)
    return k_new @ model.alpha + model.y_mean


def fit_residual(model: KernelRidgeModel, y) -> float:
    """Infinity-norm residual ||(K + lambda*I) alpha - y_c|| of the solved system.

    Recomputes the kernel matrix, so this costs as much as a fit without the
    factorization; intended for diagnostics.
    """
    y = _as_vector(y, "y")
    k = kernel_matrix(model.x_train, model.x_train, model.config.sigma)
    y_centered = y - model.y_mean
    residual = k @ model.alpha + model.config.lambda_ * model.alpha - y_centered
    return float(np.max(np.abs(residual)))
