import { execFileSync } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { CoreError } from "./errors.js";

function pythonCommand(): string {
  return process.env.RIDGEREC_PYTHON ?? "python3";
}

/** Invoke one core CLI subcommand synchronously and return its stdout.
 *
 * Calls block the event loop for their duration (the core is an external
 * process, not an in-process extension, so there is no lock to release).
 * A nonzero exit becomes a CoreError carrying the core's diagnostic.
 */
export function runCore(args: string[]): string {
  try {
    return execFileSync(pythonCommand(), ["-m", "ridgerec", ...args], {
      encoding: "utf8",
      stdio: ["ignore", "pipe", "pipe"],
      maxBuffer: 256 * 1024 * 1024,
    });
  } catch (err) {
    const failure = err as NodeJS.ErrnoException & { stderr?: string; status?: number };
    if (failure.code === "ENOENT") {
      throw new Error(
        `could not launch the ridgerec core via '${pythonCommand()}'; ` +
          "install the Python package and/or set RIDGEREC_PYTHON",
      );
    }
    const stderr = (failure.stderr ?? "").trim();
    const lastLine = stderr.split("\n").filter((l) => l.trim() !== "").pop() ?? "";
    const message = lastLine.startsWith("error: ") ? lastLine.slice("error: ".length) : lastLine;
    throw new CoreError(message || `core exited with status ${failure.status}`);
  }
}

/** Run `fn` with a fresh scratch directory, removed afterwards. */
export function withScratchDir<T>(fn: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "ridgerec-"));
  try {
    return fn(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}
