/**
 * Wire types shared with the judgment service, plus hand-rolled runtime
 * validators. Every outbound payload is validated against the judgment
 * wire schema before it is sent; inbound documents are validated before
 * they reach any view code.
 */

export const DIMENSIONS = ['feasibility', 'scalability', 'desirability'] as const;
export type Dimension = (typeof DIMENSIONS)[number];

export type RaterClass = 'nonexpert' | 'expert';

export interface RaterIdentity {
  raterId: string;
  raterClass: RaterClass;
}

export interface CardEntry {
  signal: string;
  format: string;
  content: string;
}

export interface CardSection {
  category: string;
  entries: CardEntry[];
}

export interface CrowdCard {
  record_id: string;
  schema_version: string;
  sections: CardSection[];
}

export interface CoverageEntry {
  record_id: string;
  rater_class: RaterClass;
  count: number;
  required_min: number;
  met: boolean;
}

export interface CoverageReport {
  ready: boolean;
  entries: CoverageEntry[];
}

export interface JudgmentPayload {
  rater_id: string;
  rater_class: RaterClass;
  record_id: string;
  feasibility: number;
  scalability: number;
  desirability: number;
}

/** Ratings being composed in the UI; undefined means "not set yet". */
export type RatingDraft = Partial<Record<Dimension, number>>;

function isObject(value: unknown): value is Record<string, unknown> {
  return typeof value === 'object' && value !== null && !Array.isArray(value);
}

function isRating(value: unknown): value is number {
  return typeof value === 'number' && Number.isInteger(value) && value >= 1 && value <= 7;
}

export function validateJudgmentPayload(value: unknown): string[] {
  const problems: string[] = [];
  if (!isObject(value)) return ['payload must be an object'];
  if (typeof value.rater_id !== 'string' || value.rater_id.length === 0) {
    problems.push('rater_id must be a non-empty string');
  }
  if (value.rater_class !== 'nonexpert' && value.rater_class !== 'expert') {
    problems.push('rater_class must be "nonexpert" or "expert"');
  }
  if (typeof value.record_id !== 'string' || value.record_id.length === 0) {
    problems.push('record_id must be a non-empty string');
  }
  for (const dimension of DIMENSIONS) {
    if (!isRating(value[dimension])) {
      problems.push(`${dimension} must be an integer from 1 to 7`);
    }
  }
  return problems;
}

export function parseCrowdCard(value: unknown): CrowdCard {
  if (!isObject(value) || typeof value.record_id !== 'string'
      || typeof value.schema_version !== 'string' || !Array.isArray(value.sections)) {
    throw new Error('malformed crowd card document');
  }
  const sections = value.sections.map((section) => {
    if (!isObject(section) || typeof section.category !== 'string'
        || !Array.isArray(section.entries)) {
      throw new Error('malformed card section');
    }
    const entries = section.entries.map((entry) => {
      if (!isObject(entry) || typeof entry.signal !== 'string'
          || typeof entry.format !== 'string' || typeof entry.content !== 'string') {
        throw new Error('malformed card entry');
      }
      return { signal: entry.signal, format: entry.format, content: entry.content };
    });
    return { category: section.category, entries };
  });
  return { record_id: value.record_id, schema_version: value.schema_version, sections };
}

export function parseCoverageReport(value: unknown): CoverageReport {
  if (!isObject(value) || typeof value.ready !== 'boolean' || !Array.isArray(value.entries)) {
    throw new Error('malformed coverage document');
  }
  const entries = value.entries.map((entry): CoverageEntry => {
    if (!isObject(entry) || typeof entry.record_id !== 'string'
        || (entry.rater_class !== 'nonexpert' && entry.rater_class !== 'expert')
        || typeof entry.count !== 'number' || typeof entry.required_min !== 'number'
        || typeof entry.met !== 'boolean') {
      throw new Error('malformed coverage entry');
    }
    return {
      record_id: entry.record_id,
      rater_class: entry.rater_class as RaterClass,
      count: entry.count,
      required_min: entry.required_min,
      met: entry.met,
    };
  });
  return { ready: value.ready, entries };
}
