import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    // The e2e suite launches a real browser; individual tests there set
    // their own timeouts. This is the ceiling for everything else.
    testTimeout: 20_000,
    hookTimeout: 60_000,
  },
});
