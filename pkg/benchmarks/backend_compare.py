#!/usr/bin/env python3
"""Compare the numba and pure-NumPy backends on the two hot paths.

Times kernel ridge fits across sample sizes and one matrix-factorization
training run, under each backend. Unlike `ridgerec bench`, each backend is
warmed up before timing so JIT compilation does not land in the measured
repeats.
"""

import argparse
import time

import numpy as np

from ridgerec.backend import HAVE_NUMBA, active_backend, use_backend
from ridgerec.bench import gen_synthetic, time_fit
from ridgerec.kernel_ridge import KernelRidgeConfig, krr_fit
from ridgerec.mf_sgd import MFConfig, MFModel, Rating


def _mf_training_seconds(n_users, n_items, n_ratings, n_epochs, seed=0):
    rng = np.random.default_rng(seed)
    ratings = [
        Rating(int(rng.integers(0, n_users)), int(rng.integers(0, n_items)), float(rng.uniform(1, 5)))
        for _ in range(n_ratings)
    ]
    model = MFModel(MFConfig(n_users=n_users, n_items=n_items, n_epochs=n_epochs, seed=1))
    start = time.perf_counter()
    model.fit(ratings)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="500,1000,2000")
    parser.add_argument("--dim", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--mf-users", type=int, default=300)
    parser.add_argument("--mf-items", type=int, default=200)
    parser.add_argument("--mf-ratings", type=int, default=20000)
    parser.add_argument("--mf-epochs", type=int, default=20)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    config = KernelRidgeConfig(lambda_=1e-4, sigma=1.0)
    backends = ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]
    if not HAVE_NUMBA:
        print("numba not importable; only the numpy backend will run")

    results = {}
    for name in backends:
        with use_backend(name):
            assert active_backend() == name
            x0, y0 = gen_synthetic(8, args.dim, seed=1)
            krr_fit(x0, y0, config)  # warm-up: JIT compile / first-touch
            krr = [time_fit(*gen_synthetic(n, args.dim), config, repeats=args.repeats) for n in sizes]
            mf = _mf_training_seconds(args.mf_users, args.mf_items, args.mf_ratings, args.mf_epochs)
            results[name] = (krr, mf)

    print(f"\nKRR fit time (s), mean over {args.repeats} repeats, d={args.dim}")
    header = "backend " + "".join(f"{f'n={n}':>12}" for n in sizes)
    print(header)
    print("-" * len(header))
    for name in backends:
        row = "".join(f"{rec.fit_time_s:12.5f}" for rec in results[name][0])
        print(f"{name:<8}{row}")

    print(
        f"\nMF training time (s), {args.mf_ratings} ratings x {args.mf_epochs} epochs, "
        f"{args.mf_users}x{args.mf_items}, k=10"
    )
    for name in backends:
        print(f"{name:<8}{results[name][1]:12.5f}")


if __name__ == "__main__":
    main()
