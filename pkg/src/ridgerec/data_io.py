"""CSV ingestion and model archives.

CSV dialect: comma separator, ``.`` decimal point, optional trailing
newline, no quoting. Ratings files carry a ``user,item,value`` header;
matrices are headerless rectangular numeric CSV; vectors are a single
column.

Model archives are JSON documents ``{kind, version, payload}``. Floats are
written with shortest round-trip precision, so ``load_model(save_model(m))``
reproduces every field bit-exactly, including the MF model's generator
state (a reloaded model continues training exactly where the original
would have).
"""

from __future__ import annotations

import json
import math

import numpy as np

from .kernel_ridge import KernelRidgeConfig, KernelRidgeModel
from .mf_sgd import MFConfig, MFModel, Rating

ARCHIVE_VERSION = 1
KIND_KERNEL_RIDGE = "kernel_ridge"
KIND_MF_SGD = "mf_sgd"
RATINGS_HEADER = "user,item,value"


def _data_lines(path):
    """All lines of a text file, with one trailing newline tolerated."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    return lines


def load_ratings(path) -> list[Rating]:
    """Parse a `user,item,value` CSV into ratings, preserving file order."""
    lines = _data_lines(path)
    if not lines:
        raise ValueError(f"{path}: empty file, expected header '{RATINGS_HEADER}'.")
    header = lines[0].strip()
    if header != RATINGS_HEADER:
        raise ValueError(f"{path}: expected header '{RATINGS_HEADER}', got '{header}'.")
    ratings = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.strip().split(",")
        if len(parts) != 3:
            raise ValueError(
                f"{path}: line {lineno}: expected 3 comma-separated fields, got {len(parts)}."
            )
        try:
            user = int(parts[0])
            item = int(parts[1])
            value = float(parts[2])
        except ValueError:
            raise ValueError(
                f"{path}: line {lineno}: could not parse '{line.strip()}' as user,item,value."
            ) from None
        if user < 0 or item < 0:
            raise ValueError(f"{path}: line {lineno}: user and item must be non-negative.")
        if not math.isfinite(value):
            raise ValueError(f"{path}: line {lineno}: value must be finite.")
        ratings.append(Rating(user=user, item=item, value=value))
    return ratings


def load_matrix(path) -> np.ndarray:
    """Parse a headerless rectangular numeric CSV; empty file gives a (0, 0) array."""
    lines = _data_lines(path)
    rows = []
    ncols = None
    for lineno, line in enumerate(lines, start=1):
        parts = line.strip().split(",")
        if ncols is None:
            ncols = len(parts)
        elif len(parts) != ncols:
            raise ValueError(
                f"{path}: line {lineno}: expected {ncols} columns, got {len(parts)}."
            )
        row = []
        for col, part in enumerate(parts, start=1):
            try:
                row.append(float(part))
            except ValueError:
                raise ValueError(
                    f"{path}: line {lineno}, column {col}: could not parse '{part}' as a number."
                ) from None
        rows.append(row)
    if not rows:
        return np.empty((0, 0))
    return np.asarray(rows, dtype=np.float64)


def load_vector(path) -> np.ndarray:
    """Parse a single-column numeric CSV into a 1-D array."""
    matrix = load_matrix(path)
    if matrix.shape[0] == 0:
        return np.empty(0)
    if matrix.shape[1] != 1:
        raise ValueError(f"{path}: expected a single column, got {matrix.shape[1]}.")
    return matrix.reshape(-1)


def save_vector(path, vector) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in np.asarray(vector).reshape(-1):
            fh.write(repr(float(v)) + "\n")


def save_matrix(path, matrix) -> None:
    matrix = np.asarray(matrix)
    with open(path, "w", encoding="utf-8") as fh:
        for row in matrix:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def save_model(model, path) -> None:
    """Write a model archive; accepts a KernelRidgeModel or an MFModel."""
    if isinstance(model, KernelRidgeModel):
        doc = {
            "kind": KIND_KERNEL_RIDGE,
            "version": ARCHIVE_VERSION,
            "payload": {
                "lambda": float(model.config.lambda_),
                "sigma": float(model.config.sigma),
                "y_mean": model.y_mean,
                "alpha": model.alpha.tolist(),
                "x_train": model.x_train.tolist(),
            },
        }
    elif isinstance(model, MFModel):
        cfg = model.config
        doc = {
            "kind": KIND_MF_SGD,
            "version": ARCHIVE_VERSION,
            "payload": {
                "n_users": cfg.n_users,
                "n_items": cfg.n_items,
                "n_factors": cfg.n_factors,
                "lr": float(cfg.lr),
                "reg": float(cfg.reg),
                "n_epochs": cfg.n_epochs,
                "seed": cfg.seed,
                "global_mean": model.global_mean,
                "p": model.p.tolist(),
                "q": model.q.tolist(),
                "bu": model.bu.tolist(),
                "bi": model.bi.tolist(),
                "rng_state": model.rng.bit_generator.state,
            },
        }
    else:
        raise TypeError(f"cannot serialize object of type {type(model).__name__}.")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_model(path, expected_kind: str | None = None):
    """Read a model archive back; optionally require a specific kind."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    version = doc.get("version")
    if version != ARCHIVE_VERSION:
        raise ValueError(
            f"{path}: unsupported model archive version {version!r} "
            f"(this build reads version {ARCHIVE_VERSION})."
        )
    kind = doc.get("kind")
    if kind not in (KIND_KERNEL_RIDGE, KIND_MF_SGD):
        raise ValueError(f"{path}: unknown model kind {kind!r}.")
    if expected_kind is not None and kind != expected_kind:
        raise ValueError(
            f"{path}: model archive holds kind '{kind}', expected '{expected_kind}'."
        )
    payload = doc["payload"]
    if kind == KIND_KERNEL_RIDGE:
        config = KernelRidgeConfig(lambda_=payload["lambda"], sigma=payload["sigma"])
        x_train = np.asarray(payload["x_train"], dtype=np.float64)
        alpha = np.asarray(payload["alpha"], dtype=np.float64)
        x_train.flags.writeable = False
        alpha.flags.writeable = False
        return KernelRidgeModel(
            config=config, x_train=x_train, alpha=alpha, y_mean=float(payload["y_mean"])
        )
    config = MFConfig(
        n_users=payload["n_users"],
        n_items=payload["n_items"],
        n_factors=payload["n_factors"],
        lr=payload["lr"],
        reg=payload["reg"],
        n_epochs=payload["n_epochs"],
        seed=payload["seed"],
    )
    model = MFModel(config)
    model.p = np.asarray(payload["p"], dtype=np.float64)
    model.q = np.asarray(payload["q"], dtype=np.float64)
    model.bu = np.asarray(payload["bu"], dtype=np.float64)
    model.bi = np.asarray(payload["bi"], dtype=np.float64)
    model.global_mean = float(payload["global_mean"])
    model.rng.bit_generator.state = payload["rng_state"]
    return model
