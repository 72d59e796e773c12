/** Errors mirroring the CLI's exit-code contract, message-preserving. */

export class GraphToolError extends Error {
  constructor(message: string, public readonly exitCode: number) {
    super(message);
    this.name = new.target.name;
  }
}

export class ParseError extends GraphToolError {}

export class IoError extends GraphToolError {}

export class UnknownVertexError extends GraphToolError {}

export class UsageError extends GraphToolError {}

export class ReleasedHandleError extends Error {
  constructor() {
    super("graph handle has been released");
    this.name = "ReleasedHandleError";
  }
}

export function errorForExit(code: number, stderr: string): GraphToolError {
  const message = stderr.trim() || `command failed with exit code ${code}`;
  switch (code) {
    case 1:
      return new ParseError(message, code);
    case 2:
      return new IoError(message, code);
    case 3:
      return new UnknownVertexError(message, code);
    case 64:
      return new UsageError(message, code);
    default:
      return new GraphToolError(message, code);
  }
}
