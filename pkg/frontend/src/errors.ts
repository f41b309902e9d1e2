/** Raised when the native core rejects an operation; carries the core's
 * single-line diagnostic verbatim. */
export class CoreError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "CoreError";
  }
}

/** Raised by binding-side argument validation (wrong shapes, wrong types)
 * before anything reaches the core. */
export class ArgumentError extends TypeError {
  constructor(message: string) {
    super(message);
    this.name = "ArgumentError";
  }
}
