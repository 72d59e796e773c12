/** Graph handles.
 *
 * A handle is an opaque reference to graph data the toolkit can operate on:
 * a file in one of its two text formats, plus the access mode the
 * clustering commands should use. `Graph` loads into memory per operation;
 * `AdjacencyListLocalGraph` makes the toolkit query the file locally on
 * disk, which is the right choice for graphs too large to load.
 */

import { ReleasedHandleError, UsageError } from "./errors.js";

export type GraphFormat = "edgelist" | "adjacencylist";
export type AccessMode = "memory" | "disk";

export class GraphHandle {
  private released = false;

  constructor(
    public readonly path: string,
    public readonly format: GraphFormat,
    public readonly mode: AccessMode,
  ) {}

  /** Invalidate the handle; further operations throw instead of running. */
  release(): void {
    this.released = true;
  }

  ensureUsable(): void {
    if (this.released) {
      throw new ReleasedHandleError();
    }
  }
}

/** In-memory graph backed by a file in either format. */
export class Graph extends GraphHandle {
  constructor(path: string, format: GraphFormat) {
    super(path, format, "memory");
  }
}

/** Graph queried locally from a sorted AdjacencyList file on disk. */
export class AdjacencyListLocalGraph extends GraphHandle {
  constructor(path: string) {
    super(path, "adjacencylist", "disk");
  }
}

export function inferFormat(path: string): GraphFormat {
  if (path.endsWith(".el") || path.endsWith(".edgelist")) return "edgelist";
  if (path.endsWith(".al") || path.endsWith(".adjacencylist")) return "adjacencylist";
  throw new UsageError(`cannot infer graph format from ${path}`, 64);
}
