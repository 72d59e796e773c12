/** Reading, writing, and converting graph files. */

import { AdjacencyListLocalGraph, Graph, GraphHandle, inferFormat } from "./graph.js";
import { runCli } from "./runner.js";

/** Open an EdgeList file as an in-memory graph handle. */
export function loadEdgelist(path: string): Graph {
  return new Graph(path, "edgelist");
}

/** Open an AdjacencyList file as an in-memory graph handle. */
export function loadAdjacencylist(path: string): Graph {
  return new Graph(path, "adjacencylist");
}

/** Open an AdjacencyList file for local on-disk access. */
export function openLocal(path: string): AdjacencyListLocalGraph {
  return new AdjacencyListLocalGraph(path);
}

/** Write the graph to an EdgeList file in canonical form. */
export function saveEdgelist(g: GraphHandle, path: string): Graph {
  g.ensureUsable();
  runCli([
    "convert", "--input", g.path, "--output", path,
    "--from", g.format, "--to", "edgelist",
  ]);
  return new Graph(path, "edgelist");
}

/** Write the graph to an AdjacencyList file in canonical form. */
export function saveAdjacencylist(g: GraphHandle, path: string): Graph {
  g.ensureUsable();
  runCli([
    "convert", "--input", g.path, "--output", path,
    "--from", g.format, "--to", "adjacencylist",
  ]);
  return new Graph(path, "adjacencylist");
}

/** Convert an EdgeList file to an AdjacencyList file. */
export function edgelistToAdjacencylist(inPath: string, outPath: string): void {
  runCli([
    "convert", "--input", inPath, "--output", outPath,
    "--from", "edgelist", "--to", "adjacencylist",
  ]);
}

/** Convert an AdjacencyList file to an EdgeList file. */
export function adjacencylistToEdgelist(inPath: string, outPath: string): void {
  runCli([
    "convert", "--input", inPath, "--output", outPath,
    "--from", "adjacencylist", "--to", "edgelist",
  ]);
}

/** Open a graph file, inferring the format from its extension. */
export function open(path: string): Graph {
  return new Graph(path, inferFormat(path));
}
