/**
 * The rating session: one card at a time, drawn from the startups whose
 * panel (for this rater's class) is still below its minimum.
 *
 * State machine per card: compose three ratings -> submit.
 *   201 -> advance to the next card.
 *   409 -> inline note (someone/this rater already filled the slot), advance.
 *   422 -> inline field errors, ratings preserved for correction.
 *   network failure -> inline error + retry, ratings preserved.
 */

import { ApiClient, SubmitResult } from './api.js';
import { CrowdCard, Dimension, RaterIdentity, RatingDraft } from './types.js';

export type FlowPhase = 'loading' | 'rating' | 'submitting' | 'error' | 'done';

export interface FlowState {
  phase: FlowPhase;
  card: CrowdCard | null;
  draft: RatingDraft;
  /** Non-destructive inline message (409/422/network details). */
  notice: string | null;
  noticeFields: string[];
  completed: number;
  total: number;
  canRetry: boolean;
}

export type FlowListener = (state: FlowState) => void;

export class RatingFlow {
  private queue: string[] = [];
  private state: FlowState = {
    phase: 'loading',
    card: null,
    draft: {},
    notice: null,
    noticeFields: [],
    completed: 0,
    total: 0,
    canRetry: false,
  };

  constructor(private readonly api: ApiClient,
              private readonly rater: RaterIdentity,
              private readonly listener: FlowListener) {}

  snapshot(): FlowState {
    return { ...this.state, draft: { ...this.state.draft } };
  }

  private emit(patch: Partial<FlowState>): void {
    this.state = { ...this.state, ...patch };
    this.listener(this.snapshot());
  }

  /** Load coverage, build the uncovered-startup queue, show the first card. */
  async start(): Promise<void> {
    this.emit({ phase: 'loading', notice: null, noticeFields: [], canRetry: false });
    let coverage;
    try {
      coverage = await this.api.getCoverage();
    } catch (error) {
      this.emit({
        phase: 'error',
        notice: `could not reach the judgment service: ${message(error)}`,
        canRetry: true,
      });
      return;
    }
    this.queue = coverage.entries
      .filter((entry) => entry.rater_class === this.rater.raterClass && !entry.met)
      .map((entry) => entry.record_id);
    this.emit({ total: this.state.completed + this.queue.length });
    await this.advance();
  }

  private async advance(): Promise<void> {
    const next = this.queue.shift();
    if (next === undefined) {
      this.emit({ phase: 'done', card: null, draft: {} });
      return;
    }
    try {
      const card = await this.api.getCard(next);
      this.emit({ phase: 'rating', card, draft: {}, canRetry: false });
    } catch (error) {
      this.queue.unshift(next);
      this.emit({
        phase: 'error',
        notice: `could not load the next startup: ${message(error)}`,
        canRetry: true,
      });
    }
  }

  setRating(dimension: Dimension, value: number): void {
    if (this.state.phase !== 'rating') return;
    if (!Number.isInteger(value) || value < 1 || value > 7) return; // control enforces 1..7
    this.emit({ draft: { ...this.state.draft, [dimension]: value } });
  }

  canSubmit(): boolean {
    const draft = this.state.draft;
    return this.state.phase === 'rating'
      && draft.feasibility !== undefined
      && draft.scalability !== undefined
      && draft.desirability !== undefined;
  }

  async submit(): Promise<void> {
    if (!this.canSubmit() || this.state.card === null) return;
    const card = this.state.card;
    const draft = this.state.draft;
    this.emit({ phase: 'submitting', notice: null, noticeFields: [] });
    const result = await this.api.submitJudgment({
      rater_id: this.rater.raterId,
      rater_class: this.rater.raterClass,
      record_id: card.record_id,
      feasibility: draft.feasibility!,
      scalability: draft.scalability!,
      desirability: draft.desirability!,
    });
    await this.handle(result, card, draft);
  }

  private async handle(result: SubmitResult, card: CrowdCard, draft: RatingDraft): Promise<void> {
    switch (result.kind) {
      case 'stored':
        this.emit({ completed: this.state.completed + 1 });
        await this.advance();
        return;
      case 'duplicate':
        // slot already filled; surface the note and move on without loss
        this.emit({ notice: result.detail, noticeFields: [] });
        await this.advance();
        return;
      case 'rejected':
        this.emit({
          phase: 'rating',
          card,
          draft,
          notice: result.detail,
          noticeFields: result.fields,
        });
        return;
      case 'network':
        this.emit({
          phase: 'error',
          card,
          draft,
          notice: `submission failed: ${result.detail}`,
          canRetry: true,
        });
        return;
    }
  }

  /** Retry after a network failure without losing entered ratings. */
  async retry(): Promise<void> {
    if (!this.state.canRetry) return;
    if (this.state.card !== null && this.state.phase === 'error') {
      const card = this.state.card;
      const draft = this.state.draft;
      this.emit({ phase: 'rating', card, draft, canRetry: false, notice: null });
      if (this.canSubmit()) await this.submit();
      return;
    }
    await this.start();
  }
}

function message(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
