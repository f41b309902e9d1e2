import { readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { formatRatingsCsv, parseMatrixCsv } from "./csv.js";
import { ArgumentError, CoreError } from "./errors.js";
import type { Rating } from "./rating.js";
import { runCore, withScratchDir } from "./runner.js";

export interface MatrixFactorizationOptions {
  n_users: number;
  n_items: number;
  n_factors?: number;
  lr?: number;
  reg?: number;
  n_epochs?: number;
  seed?: number;
}

interface MfPayload {
  global_mean: number;
  p: number[][];
  q: number[][];
  bu: number[];
  bi: number[];
}

/** Biased matrix-factorization SGD, backed by the compiled-core CLI.
 *
 * Keyword options and defaults follow the core's training surface:
 * n_factors=10, lr=0.01, reg=0.02, n_epochs=20, seed=42. Property accessors
 * return copies; before fit they return empty arrays / 0. `fit` blocks for
 * the duration of training (the core runs as a child process).
 */
export class MatrixFactorizationSGD {
  readonly n_users: number;
  readonly n_items: number;
  readonly n_factors: number;
  readonly lr: number;
  readonly reg: number;
  readonly n_epochs: number;
  readonly seed: number;

  private archiveText: string | null = null;
  private payload: MfPayload | null = null;

  constructor(options: MatrixFactorizationOptions) {
    const {
      n_users,
      n_items,
      n_factors = 10,
      lr = 0.01,
      reg = 0.02,
      n_epochs = 20,
      seed = 42,
    } = options;
    for (const [name, v] of Object.entries({ n_users, n_items, n_factors, n_epochs, seed })) {
      if (!Number.isInteger(v)) {
        throw new ArgumentError(`${name} must be an integer.`);
      }
    }
    // same validation (and messages) the core applies
    if (n_users <= 0 || n_items <= 0 || n_factors <= 0) {
      throw new CoreError("n_users, n_items, n_factors must be positive.");
    }
    if (!(lr > 0)) {
      throw new CoreError("learning rate must be positive.");
    }
    if (!(reg >= 0)) {
      throw new CoreError("regularization must be non-negative.");
    }
    if (n_epochs <= 0) {
      throw new CoreError("n_epochs must be positive.");
    }
    if (seed < 0) {
      throw new CoreError("seed must be a non-negative integer.");
    }
    this.n_users = n_users;
    this.n_items = n_items;
    this.n_factors = n_factors;
    this.lr = lr;
    this.reg = reg;
    this.n_epochs = n_epochs;
    this.seed = seed;
  }

  fit(ratings: Rating[], verbose = true): void {
    if (!Array.isArray(ratings)) {
      throw new ArgumentError("ratings must be an array of Rating objects.");
    }
    if (ratings.length === 0) {
      throw new CoreError("ratings must not be empty.");
    }
    const csv = formatRatingsCsv(ratings);
    const { archive, stdout } = withScratchDir((dir) => {
      const ratingsPath = join(dir, "ratings.csv");
      const modelPath = join(dir, "model.json");
      writeFileSync(ratingsPath, csv);
      const out = runCore([
        "mf-fit",
        "--ratings", ratingsPath,
        "--users", String(this.n_users),
        "--items", String(this.n_items),
        "--factors", String(this.n_factors),
        "--lr", String(this.lr),
        "--reg", String(this.reg),
        "--epochs", String(this.n_epochs),
        "--seed", String(this.seed),
        "--out", modelPath,
      ]);
      return { archive: readFileSync(modelPath, "utf8"), stdout: out };
    });
    if (verbose) {
      for (const line of stdout.split("\n")) {
        if (line.startsWith("[Epoch ")) {
          process.stdout.write(line + "\n");
        }
      }
    }
    this.archiveText = archive;
    this.payload = JSON.parse(archive).payload as MfPayload;
  }

  private requireFitted(): string {
    if (this.archiveText === null) {
      throw new CoreError("Model has not been fitted yet.");
    }
    return this.archiveText;
  }

  predict(user: number, item: number): number {
    if (!Number.isInteger(user) || !Number.isInteger(item)) {
      throw new ArgumentError("user and item must be integers.");
    }
    const archiveText = this.requireFitted();
    return withScratchDir((dir) => {
      const modelPath = join(dir, "model.json");
      writeFileSync(modelPath, archiveText);
      const out = runCore([
        "mf-predict",
        "--model", modelPath,
        "--user", String(user),
        "--item", String(item),
      ]);
      return Number(out.trim());
    });
  }

  full_prediction(): number[][] {
    const archiveText = this.requireFitted();
    return withScratchDir((dir) => {
      const modelPath = join(dir, "model.json");
      const outPath = join(dir, "full.csv");
      writeFileSync(modelPath, archiveText);
      runCore(["mf-full", "--model", modelPath, "--out", outPath]);
      return parseMatrixCsv(readFileSync(outPath, "utf8"));
    });
  }

  get user_factors(): number[][] {
    return this.payload ? this.payload.p.map((row) => [...row]) : [];
  }

  get item_factors(): number[][] {
    return this.payload ? this.payload.q.map((row) => [...row]) : [];
  }

  get user_bias(): number[] {
    return this.payload ? [...this.payload.bu] : [];
  }

  get item_bias(): number[] {
    return this.payload ? [...this.payload.bi] : [];
  }

  get global_mean(): number {
    return this.payload ? this.payload.global_mean : 0;
  }
}
