import type { ArrowData, QuiverData, SessionData } from "./types.js";

// Sessions are what the export button saves: the quiver you started
// from plus every vertex click, in order. The "quiver" member is
// exactly the command line's quiver format, so a session replays as
//
//   jq .quiver session.json | quiverlab mutate --quiver - --at 1,2,3 --json
//
// with --at taken from "sequence". The quiver parser over there is
// strict about unknown keys, which is why the whole session file is
// not itself a valid --quiver argument.

export class SessionFormatError extends Error {}

function asQuiver(value: unknown): QuiverData {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new SessionFormatError("quiver must be an object");
  }
  const record = value as Record<string, unknown>;
  const n = record["n"];
  if (typeof n !== "number" || !Number.isInteger(n) || n < 1) {
    throw new SessionFormatError("quiver.n must be a positive integer");
  }
  const arrows = record["arrows"];
  if (!Array.isArray(arrows)) {
    throw new SessionFormatError("quiver.arrows must be an array");
  }
  const parsed: ArrowData[] = arrows.map((arrow, idx) => {
    if (
      !Array.isArray(arrow) ||
      arrow.length !== 3 ||
      !arrow.every((v) => typeof v === "number" && Number.isInteger(v))
    ) {
      throw new SessionFormatError(`arrow ${idx} must be [source, target, mult]`);
    }
    return [arrow[0], arrow[1], arrow[2]];
  });
  return { n, arrows: parsed };
}

export function parseSession(text: string): SessionData {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    throw new SessionFormatError("session is not valid JSON");
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SessionFormatError("session must be an object");
  }
  const record = raw as Record<string, unknown>;
  const quiver = asQuiver(record["quiver"]);
  const sequence = record["sequence"];
  if (!Array.isArray(sequence)) {
    throw new SessionFormatError("sequence must be an array");
  }
  for (const k of sequence) {
    if (typeof k !== "number" || !Number.isInteger(k) || k < 1 || k > quiver.n) {
      throw new SessionFormatError(`click ${String(k)} is not a vertex of the quiver`);
    }
  }
  return { quiver, sequence: sequence as number[] };
}

export function sessionText(session: SessionData): string {
  return JSON.stringify(session, null, 2) + "\n";
}

/** The sequence the way the command line wants it, e.g. "1,2,3". */
export function sequenceArg(sequence: number[]): string {
  return sequence.join(",");
}
