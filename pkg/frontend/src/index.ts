export * as graph from "./graph.js";
export * as cluster from "./cluster.js";
export * as graphio from "./graphio.js";
export * as random from "./random.js";
export {
  GraphToolError,
  IoError,
  ParseError,
  ReleasedHandleError,
  UnknownVertexError,
  UsageError,
} from "./errors.js";
