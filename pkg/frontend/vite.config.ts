/// <reference types="vitest/config" />
import { defineConfig } from "vite";

// The ranking service runs separately (`chainsel serve --port 8080`); the dev
// server proxies /api there so the UI stays same-origin.
export default defineConfig({
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8080",
    },
  },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
  },
});
