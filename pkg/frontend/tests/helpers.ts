import { execFileSync } from "node:child_process";

/** Run a Python snippet against the installed core and parse its JSON stdout. */
export function pythonDirect<T>(code: string): T {
  const python = process.env.RIDGEREC_PYTHON ?? "python3";
  const out = execFileSync(python, ["-c", code], { encoding: "utf8" });
  return JSON.parse(out) as T;
}

/** Mirror of numpy.linspace's arithmetic: i * step + start, endpoint forced. */
export function linspace(start: number, stop: number, num: number): number[] {
  const step = (stop - start) / (num - 1);
  const values = Array.from({ length: num }, (_, i) => i * step + start);
  values[num - 1] = stop;
  return values;
}

export function assertSameNumbers(actual: number[], expected: number[]): void {
  if (actual.length !== expected.length) {
    throw new Error(`length mismatch: ${actual.length} vs ${expected.length}`);
  }
  actual.forEach((v, i) => {
    if (!Object.is(v, expected[i])) {
      throw new Error(`entry ${i} differs: ${v} vs ${expected[i]}`);
    }
  });
}

export function assertSameMatrix(actual: number[][], expected: number[][]): void {
  if (actual.length !== expected.length) {
    throw new Error(`row count mismatch: ${actual.length} vs ${expected.length}`);
  }
  actual.forEach((row, i) => assertSameNumbers(row, expected[i]));
}
