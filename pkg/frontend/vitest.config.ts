import { defineConfig } from "vitest/config";

export default defineConfig({
  resolve: {
    // Source imports carry explicit .js extensions so the tsc output runs
    // directly in the browser; map them back to the .ts sources for tests.
    alias: [{ find: /^(\.{1,2}\/.*)\.js$/, replacement: "$1" }],
  },
  test: {
    include: ["tests/**/*.test.ts"],
  },
});
