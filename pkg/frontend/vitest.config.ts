import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    globalSetup: "./tests/service.setup.ts",
    testTimeout: 20000,
    hookTimeout: 30000,
  },
});
