/** Composer state: one construction, its live report, and a mutation queue.
 *
 * Mutations (toggle, closure) run strictly one at a time; each one pushes
 * the new selection to the server and re-fetches the report and order
 * before the next starts, and selection/report/order are swapped into the
 * state together. The displayed report therefore always corresponds to the
 * displayed selection, and the violation panel never re-derives anything
 * client-side.
 */

import type { ApiClient } from './api';
import { ApiError } from './api';
import type { AssemblyReport, EdgeDoc, Finding, Fragment } from './types';

export interface ComposerState {
  fragments: Fragment[];
  methodId: string | null;
  selection: ReadonlySet<string>;
  report: AssemblyReport | null;
  order: string[] | null;
  notice: string | null;
  loading: boolean;
}

export type Listener = (state: ComposerState) => void;

function emptyState(): ComposerState {
  return {
    fragments: [],
    methodId: null,
    selection: new Set(),
    report: null,
    order: null,
    notice: null,
    loading: false,
  };
}

export class ComposerStore {
  private state: ComposerState = emptyState();
  private listeners: Listener[] = [];
  private queue: Promise<void> = Promise.resolve();

  constructor(private readonly api: ApiClient) {}

  getState(): ComposerState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(patch: Partial<ComposerState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  async init(methodName = 'untitled method'): Promise<void> {
    this.set({ loading: true, notice: null });
    try {
      const fragments = await this.api.listFragments();
      const methodId = await this.api.createMethod(methodName);
      const report = await this.api.getReport(methodId);
      const order = await this.api.getOrder(methodId);
      this.set({
        fragments,
        methodId,
        selection: new Set(),
        report,
        order,
        loading: false,
      });
    } catch (error) {
      this.set({ loading: false, notice: describe(error) });
    }
  }

  /** Queue one mutation; later mutations wait for this one's refresh. */
  private enqueue(mutation: () => Promise<void>): Promise<void> {
    const next = this.queue.then(mutation, mutation);
    this.queue = next.catch(() => undefined);
    return next;
  }

  toggle(fragmentId: string): Promise<void> {
    return this.enqueue(async () => {
      const methodId = this.state.methodId;
      if (!methodId) return;
      const chosen = new Set(this.state.selection);
      if (chosen.has(fragmentId)) {
        chosen.delete(fragmentId);
      } else {
        chosen.add(fragmentId);
      }
      await this.pushSelection(methodId, [...chosen]);
    });
  }

  applyClosure(): Promise<void> {
    return this.enqueue(async () => {
      const methodId = this.state.methodId;
      if (!methodId) return;
      try {
        const construction = await this.api.applyClosure(methodId);
        await this.refresh(methodId, construction.selection);
      } catch (error) {
        this.set({ notice: describe(error) });
      }
    });
  }

  private async pushSelection(methodId: string, chosen: string[]): Promise<void> {
    try {
      const construction = await this.api.putSelection(methodId, chosen);
      await this.refresh(methodId, construction.selection);
    } catch (error) {
      this.set({ notice: describe(error) });
    }
  }

  private async refresh(methodId: string, selection: string[]): Promise<void> {
    const report = await this.api.getReport(methodId);
    const order = await this.api.getOrder(methodId);
    // One swap: the rendered report always matches the rendered selection.
    this.set({ selection: new Set(selection), report, order, notice: null });
  }

  /** Findings whose mandatory side is unsatisfied, for the closure button. */
  missingMandatory(): Finding[] {
    return (this.state.report?.deontic ?? []).filter(
      (f) => f.code === 'MISSING_MANDATORY',
    );
  }

  /** Violated precedence edges keyed by the chosen successor. */
  violationsByFragment(): Map<string, EdgeDoc[]> {
    const index = new Map<string, EdgeDoc[]>();
    for (const edge of this.state.report?.precedence ?? []) {
      const existing = index.get(edge.after) ?? [];
      existing.push(edge);
      index.set(edge.after, existing);
    }
    return index;
  }

  /** Unsatisfied mandatory counterparts keyed by the chosen cell side. */
  mandatoryGapsByFragment(): Map<string, string[]> {
    const index = new Map<string, string[]>();
    for (const finding of this.missingMandatory()) {
      const chosen = this.state.selection.has(finding.cell.row)
        ? finding.cell.row
        : finding.cell.col;
      const missing = chosen === finding.cell.row ? finding.cell.col : finding.cell.row;
      const existing = index.get(chosen) ?? [];
      existing.push(missing);
      index.set(chosen, existing);
    }
    return index;
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return JSON.stringify(error.body);
  }
  return error instanceof Error ? error.message : String(error);
}
