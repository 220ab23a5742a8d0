import { ServiceClient } from "./api.js";
import { HistoryStack } from "./history.js";
import { fractionText } from "./pretty.js";
import type { QuiverData, SeedData, SessionData } from "./types.js";

export interface Snapshot {
  seed: SeedData;
  /** Clicks that produced this seed, starting from the session quiver. */
  sequence: number[];
  /** Canonical text of the variable each click created. */
  texts: string[];
  dynkinType: string | null;
}

/**
 * Holds one interactive mutation session: the quiver the user loaded,
 * the seed as it stands, and enough history for undo and redo. All
 * arithmetic happens on the server; this class only moves wire data
 * around, so its displayed strings always agree with a command line
 * replay of the same clicks.
 */
export class WorkbenchApp {
  private history = new HistoryStack<Snapshot>();
  private startQuiver: QuiverData | null = null;

  constructor(private client: ServiceClient) {}

  async load(quiver: QuiverData): Promise<Snapshot> {
    const response = await this.client.mutateSequence(quiver, []);
    this.startQuiver = quiver;
    const snapshot: Snapshot = {
      seed: response.seed,
      sequence: [],
      texts: [],
      dynkinType: response.dynkin_type,
    };
    this.history.init(snapshot);
    return snapshot;
  }

  get snapshot(): Snapshot {
    const current = this.history.current();
    if (!current) throw new Error("no quiver loaded");
    return current;
  }

  get loaded(): boolean {
    return this.history.current() !== undefined;
  }

  async clickVertex(k: number): Promise<Snapshot> {
    const before = this.snapshot;
    const response = await this.client.mutateSeed(before.seed, k);
    const step = response.steps[response.steps.length - 1];
    if (!step) throw new Error("server reported no mutation step");
    const snapshot: Snapshot = {
      seed: response.seed,
      sequence: [...before.sequence, k],
      texts: [...before.texts, step.text],
      dynkinType: response.dynkin_type,
    };
    this.history.push(snapshot);
    return snapshot;
  }

  undo(): Snapshot | undefined {
    return this.history.undo();
  }

  redo(): Snapshot | undefined {
    return this.history.redo();
  }

  canUndo(): boolean {
    return this.history.canUndo();
  }

  canRedo(): boolean {
    return this.history.canRedo();
  }

  /** Fraction form of the variable the most recent click created. */
  latestDisplay(): string {
    const { seed, sequence } = this.snapshot;
    const last = sequence[sequence.length - 1];
    if (last === undefined) return "";
    const poly = seed.cluster[last - 1];
    if (!poly) throw new Error(`seed has no entry for vertex ${last}`);
    return fractionText(poly);
  }

  /** Fraction form of every cluster entry, in vertex order. */
  clusterDisplay(): string[] {
    return this.snapshot.seed.cluster.map(fractionText);
  }

  exportSession(): SessionData {
    if (!this.startQuiver) throw new Error("no quiver loaded");
    return { quiver: this.startQuiver, sequence: [...this.snapshot.sequence] };
  }

  /** Replay a saved session click by click, rebuilding undo history. */
  async importSession(session: SessionData): Promise<Snapshot> {
    await this.load(session.quiver);
    let snapshot = this.snapshot;
    for (const k of session.sequence) {
      snapshot = await this.clickVertex(k);
    }
    return snapshot;
  }
}
