/** Random graph generation, written to files by the toolkit. */

import { readFileSync } from "node:fs";

import { Graph, inferFormat } from "./graph.js";
import { runCli } from "./runner.js";

export interface SbmSpec {
  k: number;
  clusterSize: number;
  p: number;
  q: number;
  rngSeed?: number;
}

export interface SbmResult {
  graph: Graph;
  /** Planted label per vertex, from the `<output>.labels` sidecar file. */
  labels: number[];
  labelsPath: string;
}

/** Sample a block-model graph to `outputPath` (format from extension). */
export function sbm(spec: SbmSpec, outputPath: string): SbmResult {
  runCli([
    "gen", "sbm", "--output", outputPath,
    "--k", String(spec.k),
    "--cluster-size", String(spec.clusterSize),
    "--p", String(spec.p),
    "--q", String(spec.q),
    "--rng-seed", String(spec.rngSeed ?? 0),
  ]);
  const labelsPath = `${outputPath}.labels`;
  const labels = readFileSync(labelsPath, "utf8")
    .trim()
    .split("\n")
    .filter((line) => line.length > 0)
    .map(Number);
  return { graph: new Graph(outputPath, inferFormat(outputPath)), labels, labelsPath };
}

/** Sample a G(n, p) graph to `outputPath` (format from extension). */
export function erdosRenyi(
  n: number,
  p: number,
  outputPath: string,
  rngSeed = 0,
): Graph {
  runCli([
    "gen", "er", "--output", outputPath,
    "--n", String(n), "--p", String(p), "--rng-seed", String(rngSeed),
  ]);
  return new Graph(outputPath, inferFormat(outputPath));
}
