export { ArgumentError, CoreError } from "./errors.js";
export { KernelRidge } from "./kernelRidge.js";
export { MatrixFactorizationSGD, type MatrixFactorizationOptions } from "./matrixFactorization.js";
export { Rating } from "./rating.js";
