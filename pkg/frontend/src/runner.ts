/** Subprocess bridge to the `localgraph` CLI.
 *
 * All numerics happen in the backing toolkit; this layer only builds
 * argument lists and parses stdout. Override the executable with the
 * LOCALGRAPH_CLI environment variable (may contain spaces, e.g.
 * "python3 -m localgraph.cli").
 */

import { spawnSync } from "node:child_process";

import { errorForExit } from "./errors.js";

function cliCommand(): string[] {
  const override = process.env.LOCALGRAPH_CLI;
  if (override && override.trim()) {
    return override.trim().split(/\s+/);
  }
  return ["localgraph"];
}

export function runCli(args: string[]): string {
  const [cmd, ...prefix] = cliCommand();
  const result = spawnSync(cmd, [...prefix, ...args], {
    encoding: "utf8",
    maxBuffer: 256 * 1024 * 1024,
  });
  if (result.error) {
    throw result.error;
  }
  if (result.status !== 0) {
    throw errorForExit(result.status ?? -1, result.stderr ?? "");
  }
  return result.stdout;
}
