"""Command-line front end for the fit / predict / benchmark workflows.

Every error path exits nonzero with a single-line ``error: ...`` diagnostic
on stderr; success paths exit zero.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

import numpy as np

from . import bench as bench_core
from . import data_io
from .backend import use_backend
from .kernel_ridge import KernelRidgeConfig, fit_residual, krr_fit, krr_predict
from .mf_sgd import MFConfig, MFModel


def _cmd_krr_fit(args) -> int:
    x = data_io.load_matrix(args.x)
    y = data_io.load_vector(args.y)
    config = KernelRidgeConfig(lambda_=args.lambda_, sigma=args.sigma)
    model = krr_fit(x, y, config)
    data_io.save_model(model, args.out)
    residual = fit_residual(model, y)
    print(
        f"n={x.shape[0]} d={x.shape[1]} lambda={config.lambda_:g} "
        f"sigma={config.sigma:g} residual={residual:.3e}"
    )
    return 0


def _cmd_krr_predict(args) -> int:
    model = data_io.load_model(args.model, expected_kind=data_io.KIND_KERNEL_RIDGE)
    x_new = data_io.load_matrix(args.x)
    if x_new.shape[0] == 0:
        predictions = np.empty(0)
    else:
        predictions = krr_predict(model, x_new)
    data_io.save_vector(args.out, predictions)
    print(f"wrote {predictions.shape[0]} prediction(s) to {args.out}")
    return 0


def _cmd_mf_fit(args) -> int:
    ratings = data_io.load_ratings(args.ratings)
    config = MFConfig(
        n_users=args.users,
        n_items=args.items,
        n_factors=args.factors,
        lr=args.lr,
        reg=args.reg,
        n_epochs=args.epochs,
        seed=args.seed,
    )
    model = MFModel(config)
    model.fit(ratings, verbose=True)
    data_io.save_model(model, args.out)
    print(f"global_mean={model.global_mean:g} wrote model to {args.out}")
    return 0


def _cmd_mf_predict(args) -> int:
    model = data_io.load_model(args.model, expected_kind=data_io.KIND_MF_SGD)
    print(repr(model.predict(args.user, args.item)))
    return 0


def _cmd_mf_full(args) -> int:
    model = data_io.load_model(args.model, expected_kind=data_io.KIND_MF_SGD)
    predictions = model.full_prediction()
    data_io.save_matrix(args.out, predictions)
    print(
        f"wrote {predictions.shape[0]}x{predictions.shape[1]} prediction matrix to {args.out}"
    )
    return 0


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip() != ""]
    except ValueError:
        raise ValueError(f"--sizes must be a comma-separated list of integers, got '{args.sizes}'.")
    if not sizes or any(n < 1 for n in sizes):
        raise ValueError("--sizes entries must be positive integers.")
    for name in ("dim", "ntest", "repeats"):
        if getattr(args, name) < 1:
            raise ValueError(f"--{name} must be positive.")
    config = KernelRidgeConfig(lambda_=args.lambda_, sigma=args.sigma)

    context = use_backend(args.backend) if args.backend else nullcontext()
    records = []
    with context:
        for n in sizes:
            x, y = bench_core.gen_synthetic(n, args.dim, seed=bench_core.DEFAULT_SEED)
            record = bench_core.time_fit(x, y, config, repeats=args.repeats)
            records.append(record)
            print(
                f"n={record.n} method={record.method} "
                f"fit_time_s={record.fit_time_s:.6f} repeats={record.repeats}"
            )
            # untimed held-out prediction pass, mirroring the fit/predict workflow
            x_test, _ = bench_core.gen_synthetic(args.ntest, args.dim, seed=bench_core.DEFAULT_SEED + 1)
            krr_predict(krr_fit(x, y, config), x_test)

    for prev, cur in zip(records, records[1:]):
        if cur.fit_time_s <= prev.fit_time_s:
            note = " (timer noise dominates at n <= 500)" if prev.n <= 500 else ""
            print(
                f"warning: fit time not increasing from n={prev.n} to n={cur.n}{note}",
                file=sys.stderr,
            )

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("n,method,fit_time_s\n")
        for record in records:
            fh.write(f"{record.n},{record.method},{record.fit_time_s!r}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ridgerec",
        description="Kernel ridge regression and matrix-factorization SGD workflows.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("krr-fit", help="fit a kernel ridge model from CSV inputs")
    p.add_argument("--x", required=True, metavar="CSV", help="training matrix, headerless CSV")
    p.add_argument("--y", required=True, metavar="CSV", help="response vector, single-column CSV")
    p.add_argument("--lambda", dest="lambda_", type=float, required=True,
                   help="regularization strength (>= 0)")
    p.add_argument("--sigma", type=float, required=True, help="kernel bandwidth (> 0)")
    p.add_argument("--out", required=True, metavar="MODEL", help="model archive to write")
    p.set_defaults(func=_cmd_krr_fit)

    p = sub.add_parser("krr-predict", help="predict with a fitted kernel ridge model")
    p.add_argument("--model", required=True, metavar="MODEL")
    p.add_argument("--x", required=True, metavar="CSV", help="inputs to predict at")
    p.add_argument("--out", required=True, metavar="CSV", help="one prediction per input row")
    p.set_defaults(func=_cmd_krr_predict)

    p = sub.add_parser("mf-fit", help="train a matrix factorization model on a ratings CSV")
    p.add_argument("--ratings", required=True, metavar="CSV", help="user,item,value rows")
    p.add_argument("--users", type=int, required=True, help="number of users")
    p.add_argument("--items", type=int, required=True, help="number of items")
    p.add_argument("--factors", type=int, default=10, help="latent dimension (default 10)")
    p.add_argument("--lr", type=float, default=0.01, help="learning rate (default 0.01)")
    p.add_argument("--reg", type=float, default=0.02, help="regularization (default 0.02)")
    p.add_argument("--epochs", type=int, default=20, help="training epochs (default 20)")
    p.add_argument("--seed", type=int, default=42, help="RNG seed (default 42)")
    p.add_argument("--out", required=True, metavar="MODEL")
    p.set_defaults(func=_cmd_mf_fit)

    p = sub.add_parser("mf-predict", help="print one prediction from a trained model")
    p.add_argument("--model", required=True, metavar="MODEL")
    p.add_argument("--user", type=int, required=True)
    p.add_argument("--item", type=int, required=True)
    p.set_defaults(func=_cmd_mf_predict)

    p = sub.add_parser("mf-full", help="write the dense user x item prediction matrix")
    p.add_argument("--model", required=True, metavar="MODEL")
    p.add_argument("--out", required=True, metavar="CSV")
    p.set_defaults(func=_cmd_mf_full)

    p = sub.add_parser("bench", help="time kernel ridge fits over a range of sample sizes")
    p.add_argument("--sizes", default="1000,2000,3000,4000",
                   help="comma-separated sample sizes (default 1000,2000,3000,4000)")
    p.add_argument("--dim", type=int, default=5, help="input dimension (default 5)")
    p.add_argument("--ntest", type=int, default=200,
                   help="rows in the untimed prediction pass (default 200)")
    p.add_argument("--lambda", dest="lambda_", type=float, default=1e-4,
                   help="regularization (default 1e-4)")
    p.add_argument("--sigma", type=float, default=1.0, help="bandwidth (default 1)")
    p.add_argument("--repeats", type=int, default=15,
                   help="fits averaged per size (default 15)")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None,
                   help="force a backend for this run (default: active backend)")
    p.add_argument("--out", required=True, metavar="CSV", help="n,method,fit_time_s rows")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
