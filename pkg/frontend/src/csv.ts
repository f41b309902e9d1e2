import { ArgumentError } from "./errors.js";
import type { Rating } from "./rating.js";

// Numbers cross the process boundary as shortest round-trip decimals
// (JavaScript String(number)), which Python parses back to the identical
// double; the core writes its CSV output the same way. This is what makes
// binding results bit-identical to direct core calls.

export function requireMatrix(x: unknown, name: string): asserts x is number[][] {
  if (!Array.isArray(x) || x.some((row) => !Array.isArray(row))) {
    throw new ArgumentError(`${name} must be a 2-dimensional array (an array of rows).`);
  }
  const rows = x as unknown[][];
  const width = rows.length > 0 ? rows[0].length : 0;
  for (const row of rows) {
    if (row.length !== width) {
      throw new ArgumentError(`${name} rows must all have the same length.`);
    }
    for (const v of row) {
      if (typeof v !== "number") {
        throw new ArgumentError(`${name} entries must be numbers.`);
      }
    }
  }
}

export function requireVector(y: unknown, name: string): asserts y is number[] {
  if (!Array.isArray(y) || y.some((v) => typeof v !== "number" || Array.isArray(v))) {
    throw new ArgumentError(`${name} must be a 1-dimensional array of numbers.`);
  }
}

export function formatMatrixCsv(matrix: number[][]): string {
  return matrix.map((row) => row.map(String).join(",") + "\n").join("");
}

export function formatVectorCsv(vector: number[]): string {
  return vector.map((v) => String(v) + "\n").join("");
}

export function formatRatingsCsv(ratings: Rating[]): string {
  let text = "user,item,value\n";
  for (const [index, r] of ratings.entries()) {
    if (!Number.isInteger(r.user) || !Number.isInteger(r.item)) {
      throw new ArgumentError(`ratings[${index}] user and item must be integers.`);
    }
    if (typeof r.value !== "number" || !Number.isFinite(r.value)) {
      throw new ArgumentError(`ratings[${index}] value must be a finite number.`);
    }
    text += `${r.user},${r.item},${String(r.value)}\n`;
  }
  return text;
}

export function parseVectorCsv(text: string): number[] {
  return text
    .split("\n")
    .filter((line) => line.trim() !== "")
    .map(Number);
}

export function parseMatrixCsv(text: string): number[][] {
  return text
    .split("\n")
    .filter((line) => line.trim() !== "")
    .map((line) => line.split(",").map(Number));
}
