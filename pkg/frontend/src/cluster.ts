/** Clustering operations, delegated to the toolkit. */

import { GraphHandle } from "./graph.js";
import { runCli } from "./runner.js";

export interface LocalClusterResult {
  cluster: number[];
  conductance: number;
}

function parseLocalClusterOutput(stdout: string): LocalClusterResult {
  const lines = stdout.trim().split("\n");
  const ids = lines[0]
    .split(",")
    .map((t) => t.trim())
    .filter((t) => t.length > 0)
    .map(Number);
  const conductance = Number(lines[1].split("=")[1]);
  return { cluster: ids, conductance };
}

function graphArgs(g: GraphHandle): string[] {
  g.ensureUsable();
  return ["--graph", g.path, "--format", g.format, "--mode", g.mode];
}

/** Cluster around a seed, sizing the search by a soft volume estimate. */
export function localCluster(
  g: GraphHandle,
  seedVertex: number,
  targetVolume: number,
): number[] {
  const out = runCli([
    "local-cluster", ...graphArgs(g),
    "--seed", String(seedVertex),
    "--target-volume", String(targetVolume),
  ]);
  return parseLocalClusterOutput(out).cluster;
}

/** Cluster around a seed with explicit push parameters. */
export function localClusterAcl(
  g: GraphHandle,
  seedVertex: number,
  alpha: number,
  epsilon: number,
): number[] {
  const out = runCli([
    "local-cluster", ...graphArgs(g),
    "--seed", String(seedVertex),
    "--alpha", String(alpha),
    "--epsilon", String(epsilon),
  ]);
  return parseLocalClusterOutput(out).cluster;
}

/** Partition every vertex into one of k clusters spectrally. */
export function spectralCluster(
  g: GraphHandle,
  k: number,
  rngSeed = 0,
): number[] {
  g.ensureUsable();
  const out = runCli([
    "spectral-cluster", "--graph", g.path, "--format", g.format,
    "--k", String(k), "--rng-seed", String(rngSeed),
  ]);
  const labels: number[] = [];
  for (const line of out.trim().split("\n")) {
    const [v, c] = line.split(" ").map(Number);
    labels[v] = c;
  }
  return labels;
}
