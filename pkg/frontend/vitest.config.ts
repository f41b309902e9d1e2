import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // every core call spawns a Python process; allow for interpreter startup
    testTimeout: 180_000,
    hookTimeout: 180_000,
  },
});
