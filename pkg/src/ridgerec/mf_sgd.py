"""Biased matrix factorization trained by per-observation SGD.

The model predicts ``mu + bu[u] + bi[i] + p_u . q_i``. Training shuffles
the observations each epoch with the model's own generator and applies the
bias updates (reading current bias values) followed by the factor-row
updates (reading pre-update row snapshots), in that exact order.

Training mutates the model and is single-threaded by contract: the update
order is part of the determinism guarantee. A model that is not being
trained is safe for concurrent reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels


@dataclass
class Rating:
    """One observed (user, item, value) triplet."""

    user: int = 0
    item: int = 0
    value: float = 0.0


@dataclass(frozen=True)
class EpochReport:
    """Training RMSE over the full input ratings after one epoch (1-based)."""

    epoch: int
    train_rmse: float


@dataclass(frozen=True)
class MFConfig:
    n_users: int
    n_items: int
    n_factors: int = 10
    lr: float = 0.01
    reg: float = 0.02
    n_epochs: int = 20
    seed: int = 42

    def __post_init__(self):
        if self.n_users <= 0 or self.n_items <= 0 or self.n_factors <= 0:
            raise ValueError("n_users, n_items, n_factors must be positive.")
        if not self.lr > 0.0:
            raise ValueError("learning rate must be positive.")
        if not self.reg >= 0.0:
            raise ValueError("regularization must be non-negative.")
        if self.n_epochs <= 0:
            raise ValueError("n_epochs must be positive.")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer.")


def _rating_arrays(ratings):
    users = np.asarray([r.user for r in ratings], dtype=np.int64)
    items = np.asarray([r.item for r in ratings], dtype=np.int64)
    values = np.asarray([r.value for r in ratings], dtype=np.float64)
    return users, items, values


class MFModel:
    """Factorization state: factor matrices p (n_users, k) and q (n_items, k),
    bias vectors bu and bi, and the global mean.

    Construction seeds a PCG64 generator and draws both factor matrices from
    Normal(0, 0.1) in a fixed order (user rows, then item rows). Per-epoch
    shuffles continue the same stream, so the seed fully determines training:
    two models built and fitted with identical config and ratings are
    bit-identical.
    """

    def __init__(self, config: MFConfig):
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self.p = self.rng.normal(0.0, 0.1, size=(config.n_users, config.n_factors))
        self.q = self.rng.normal(0.0, 0.1, size=(config.n_items, config.n_factors))
        self.bu = np.zeros(config.n_users)
        self.bi = np.zeros(config.n_items)
        self.global_mean = 0.0

    def _check_user(self, user):
        if not 0 <= user < self.config.n_users:
            raise IndexError(
                f"user index out of range. (user={user}, n_users={self.config.n_users})"
            )

    def _check_item(self, item):
        if not 0 <= item < self.config.n_items:
            raise IndexError(
                f"item index out of range. (item={item}, n_items={self.config.n_items})"
            )

    def _check_index_arrays(self, users, items):
        bad = np.flatnonzero((users < 0) | (users >= self.config.n_users))
        if bad.size:
            t = int(bad[0])
            raise IndexError(
                f"user index out of range. (user={int(users[t])} at ratings[{t}], "
                f"n_users={self.config.n_users})"
            )
        bad = np.flatnonzero((items < 0) | (items >= self.config.n_items))
        if bad.size:
            t = int(bad[0])
            raise IndexError(
                f"item index out of range. (item={int(items[t])} at ratings[{t}], "
                f"n_items={self.config.n_items})"
            )

    def fit(self, ratings, verbose: bool = False) -> list[EpochReport]:
        """Run n_epochs SGD passes; returns one report per epoch.

        With verbose=True, each epoch also prints
        ``[Epoch e/T] RMSE = r`` to standard output.
        """
        if len(ratings) == 0:
            raise ValueError("ratings must not be empty.")
        users, items, values = _rating_arrays(ratings)
        self._check_index_arrays(users, items)

        self.global_mean = float(values.mean())

        n_epochs = self.config.n_epochs
        order = np.arange(users.shape[0])
        reports = []
        for epoch in range(1, n_epochs + 1):
            self.rng.shuffle(order)
            _kernels.sgd_epoch(
                users[order], items[order], values[order],
                self.p, self.q, self.bu, self.bi,
                self.global_mean, self.config.lr, self.config.reg,
            )
            train_rmse = self._rmse_arrays(users, items, values)
            reports.append(EpochReport(epoch=epoch, train_rmse=train_rmse))
            if verbose:
                print(f"[Epoch {epoch}/{n_epochs}] RMSE = {train_rmse:.6g}")
        return reports

    def predict(self, user: int, item: int) -> float:
        """mu + bu[user] + bi[item] + p_user . q_item."""
        self._check_user(user)
        self._check_item(item)
        return float(
            self.global_mean
            + self.bu[user]
            + self.bi[item]
            + _kernels.row_dot(self.p, self.q, user, item)
        )

    def full_prediction(self) -> np.ndarray:
        """Dense (n_users, n_items) prediction matrix.

        Each entry is evaluated with the same expression as :meth:`predict`,
        so the matrix is bit-identical to the scalar calls.
        """
        return _kernels.full_prediction(self.p, self.q, self.bu, self.bi, self.global_mean)

    def rmse(self, ratings) -> float:
        """Root mean squared prediction error over the given ratings."""
        if len(ratings) == 0:
            raise ValueError("ratings must not be empty.")
        users, items, values = _rating_arrays(ratings)
        self._check_index_arrays(users, items)
        return self._rmse_arrays(users, items, values)

    def _rmse_arrays(self, users, items, values) -> float:
        total = _kernels.sse(
            users, items, values, self.p, self.q, self.bu, self.bi, self.global_mean
        )
        return math.sqrt(total / users.shape[0])
