import { readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { formatMatrixCsv, formatVectorCsv, parseVectorCsv, requireMatrix, requireVector } from "./csv.js";
import { ArgumentError, CoreError } from "./errors.js";
import { runCore, withScratchDir } from "./runner.js";

interface KernelRidgePayload {
  lambda: number;
  sigma: number;
  y_mean: number;
  alpha: number[];
  x_train: number[][];
}

/** Gaussian-kernel ridge regression, backed by the compiled-core CLI.
 *
 * Property accessors (`alpha`, `x_train`, `y_mean`) return copies; mutating
 * a returned array never touches the fitted model. Before fit they return
 * empty arrays / 0, matching the core's default-constructed state.
 */
export class KernelRidge {
  readonly lambda_: number;
  readonly sigma: number;

  private archiveText: string | null = null;
  private payload: KernelRidgePayload | null = null;

  constructor(lambda_: number, sigma: number) {
    if (typeof lambda_ !== "number" || typeof sigma !== "number") {
      throw new ArgumentError("lambda_ and sigma must be numbers.");
    }
    // same validation (and messages) the core applies on fit
    if (!(lambda_ >= 0)) {
      throw new CoreError("lambda must be non-negative.");
    }
    if (!(sigma > 0)) {
      throw new CoreError("sigma must be positive.");
    }
    this.lambda_ = lambda_;
    this.sigma = sigma;
  }

  fit(X: number[][], y: number[]): void {
    requireMatrix(X, "X");
    requireVector(y, "y");
    const archive = withScratchDir((dir) => {
      const xPath = join(dir, "x.csv");
      const yPath = join(dir, "y.csv");
      const modelPath = join(dir, "model.json");
      writeFileSync(xPath, formatMatrixCsv(X));
      writeFileSync(yPath, formatVectorCsv(y));
      runCore([
        "krr-fit",
        "--x", xPath,
        "--y", yPath,
        "--lambda", String(this.lambda_),
        "--sigma", String(this.sigma),
        "--out", modelPath,
      ]);
      return readFileSync(modelPath, "utf8");
    });
    this.archiveText = archive;
    this.payload = JSON.parse(archive).payload as KernelRidgePayload;
  }

  predict(X_new: number[][]): number[] {
    if (this.archiveText === null) {
      throw new CoreError("Model has not been fitted yet.");
    }
    requireMatrix(X_new, "X_new");
    const archiveText = this.archiveText;
    return withScratchDir((dir) => {
      const modelPath = join(dir, "model.json");
      const xPath = join(dir, "x_new.csv");
      const outPath = join(dir, "pred.csv");
      writeFileSync(modelPath, archiveText); // exact bytes the core wrote
      writeFileSync(xPath, formatMatrixCsv(X_new));
      runCore(["krr-predict", "--model", modelPath, "--x", xPath, "--out", outPath]);
      return parseVectorCsv(readFileSync(outPath, "utf8"));
    });
  }

  get alpha(): number[] {
    return this.payload ? [...this.payload.alpha] : [];
  }

  get x_train(): number[][] {
    return this.payload ? this.payload.x_train.map((row) => [...row]) : [];
  }

  get y_mean(): number {
    return this.payload ? this.payload.y_mean : 0;
  }
}
