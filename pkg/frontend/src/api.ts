/**
 * Typed client for the judgment service. Submission outcomes are
 * returned as a discriminated union so the flow can render 409/422
 * responses inline instead of throwing.
 */

import {
  CoverageReport,
  CrowdCard,
  JudgmentPayload,
  parseCoverageReport,
  parseCrowdCard,
  validateJudgmentPayload,
} from './types.js';

export type SubmitResult =
  | { kind: 'stored' }
  | { kind: 'duplicate'; detail: string }
  | { kind: 'rejected'; detail: string; fields: string[] }
  | { kind: 'network'; detail: string };

interface ValidationErrorItem {
  loc?: unknown[];
  msg?: string;
}

export class ApiClient {
  constructor(private readonly baseUrl: string,
              private readonly fetchImpl: typeof fetch = fetch) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, '') + path;
  }

  async getCoverage(): Promise<CoverageReport> {
    const response = await this.fetchImpl(this.url('/api/coverage'));
    if (!response.ok) throw new Error(`coverage request failed: ${response.status}`);
    return parseCoverageReport(await response.json());
  }

  async getCard(recordId: string): Promise<CrowdCard> {
    const response = await this.fetchImpl(
      this.url(`/api/startups/${encodeURIComponent(recordId)}/card`));
    if (!response.ok) throw new Error(`card request failed: ${response.status}`);
    return parseCrowdCard(await response.json());
  }

  /**
   * POST one judgment. The payload is validated against the wire schema
   * locally first; an invalid payload never leaves the client.
   */
  async submitJudgment(payload: JudgmentPayload): Promise<SubmitResult> {
    const problems = validateJudgmentPayload(payload);
    if (problems.length > 0) {
      return { kind: 'rejected', detail: problems.join('; '), fields: problems };
    }
    let response: Response;
    try {
      response = await this.fetchImpl(this.url('/api/judgments'), {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(payload),
      });
    } catch (error) {
      return { kind: 'network', detail: error instanceof Error ? error.message : String(error) };
    }
    if (response.status === 201) return { kind: 'stored' };
    if (response.status === 409) {
      const body = await response.json().catch(() => ({}));
      return { kind: 'duplicate', detail: stringDetail(body) };
    }
    if (response.status === 422) {
      const body = await response.json().catch(() => ({}));
      return {
        kind: 'rejected',
        detail: formatValidationErrors(body),
        fields: validationFields(body),
      };
    }
    return { kind: 'network', detail: `unexpected status ${response.status}` };
  }
}

function stringDetail(body: unknown): string {
  if (typeof body === 'object' && body !== null && 'detail' in body) {
    const detail = (body as { detail: unknown }).detail;
    if (typeof detail === 'string') return detail;
  }
  return 'request was rejected';
}

function validationItems(body: unknown): ValidationErrorItem[] {
  if (typeof body !== 'object' || body === null || !('detail' in body)) return [];
  const detail = (body as { detail: unknown }).detail;
  return Array.isArray(detail) ? (detail as ValidationErrorItem[]) : [];
}

export function validationFields(body: unknown): string[] {
  const fields = validationItems(body)
    .map((item) => item.loc?.[item.loc.length - 1])
    .filter((field): field is string => typeof field === 'string');
  return [...new Set(fields)];
}

export function formatValidationErrors(body: unknown): string {
  const items = validationItems(body);
  if (items.length === 0) return stringDetail(body);
  return items
    .map((item) => {
      const field = item.loc?.[item.loc.length - 1];
      return typeof field === 'string' ? `${field}: ${item.msg ?? 'invalid'}` : item.msg ?? 'invalid';
    })
    .join('; ');
}
