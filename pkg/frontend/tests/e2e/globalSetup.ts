/** Starts the coverage service once for the whole e2e run. */

import { spawn, type ChildProcess } from "node:child_process";

const PORT = 8937;
export const BASE_URL = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | undefined;

async function waitForServer(url: string, timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${url}/api/session`, { method: "POST" });
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`service did not come up at ${url} within ${timeoutMs} ms`);
}

export async function setup(): Promise<void> {
  server = spawn(
    "python3",
    ["-m", "covertop.cli", "serve", "--port", String(PORT), "--host", "127.0.0.1"],
    { stdio: "ignore" },
  );
  server.on("exit", (code) => {
    if (code !== null && code !== 0) {
      console.error(`coverage service exited early with code ${code}`);
    }
  });
  await waitForServer(BASE_URL);
  process.env.COVERTOP_BASE_URL = BASE_URL;
}

export async function teardown(): Promise<void> {
  server?.kill("SIGTERM");
}
