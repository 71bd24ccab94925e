import { JSDOM } from 'jsdom';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { RatingFlow } from '../src/flow.js';
import { renderApp } from '../src/ui.js';
import { CrowdCard } from '../src/types.js';

let dom: JSDOM;

beforeAll(() => {
  dom = new JSDOM('<!doctype html><html><body><div id="root"></div></body></html>');
  (globalThis as Record<string, unknown>).document = dom.window.document;
  (globalThis as Record<string, unknown>).HTMLElement = dom.window.HTMLElement;
});

afterAll(() => {
  delete (globalThis as Record<string, unknown>).document;
  delete (globalThis as Record<string, unknown>).HTMLElement;
});

function sampleCard(): CrowdCard {
  return {
    record_id: 'su-00042',
    schema_version: 'startup-signals/1',
    sections: [
      {
        category: 'Meta',
        entries: [
          { signal: 'Industry', format: 'Textual', content: 'fintech' },
          { signal: 'Firm Age', format: 'Numeric', content: '2.5 years' },
        ],
      },
      {
        category: 'Value Proposition',
        entries: [
          { signal: 'Product Innovativeness', format: 'Graphic and Textual',
            content: 'First-of-its-kind approach.' },
        ],
      },
    ],
  };
}

function mount(states?: { queue: string[] }) {
  const root = dom.window.document.getElementById('root') as HTMLElement;
  const api = new ApiClient('http://unused', (async () => {
    throw new Error('no network in this test');
  }) as unknown as typeof fetch);
  const flow: RatingFlow = new RatingFlow(
    api, { raterId: 'r', raterClass: 'nonexpert' },
    (state) => renderApp(root, flow, state));
  return { root, flow };
}

describe('card rendering', () => {
  it('renders sections, signals, format tags, and anchored Likert rows', () => {
    const { root, flow } = mount();
    renderApp(root, flow, {
      phase: 'rating', card: sampleCard(), draft: {}, notice: null,
      noticeFields: [], completed: 2, total: 10, canRetry: false,
    });

    const categories = [...root.querySelectorAll('.card-category')].map((n) => n.textContent);
    expect(categories).toEqual(['Meta', 'Value Proposition']);
    expect(root.querySelector('[data-testid="progress"]')?.textContent)
      .toBe('2 / 10 startups rated');

    const names = [...root.querySelectorAll('.signal-name')].map((n) => n.textContent);
    expect(names).toEqual(['IndustryTextual', 'Firm AgeNumeric',
                           'Product InnovativenessGraphic and Textual']);
    expect([...root.querySelectorAll('.signal-content')].map((n) => n.textContent))
      .toContain('First-of-its-kind approach.');

    // three dimensions x seven anchored points, constrained by the control
    const rows = root.querySelectorAll('.likert-row');
    expect(rows.length).toBe(3);
    for (const row of rows) {
      const inputs = row.querySelectorAll('input[type="radio"]');
      expect(inputs.length).toBe(7);
      expect([...inputs].map((i) => (i as HTMLInputElement).value))
        .toEqual(['1', '2', '3', '4', '5', '6', '7']);
    }
    expect(root.textContent).toContain('1 = very weak');
    expect(root.textContent).toContain('7 = very strong');
  });

  it('never renders anything label-like', () => {
    const { root, flow } = mount();
    renderApp(root, flow, {
      phase: 'rating', card: sampleCard(), draft: {}, notice: null,
      noticeFields: [], completed: 0, total: 1, canRetry: false,
    });
    const text = (root.textContent ?? '').toLowerCase();
    expect(text).not.toContain('label');
    expect(text).not.toContain('series a');
    expect(text).not.toContain('funded');
  });

  it('disables submit until every dimension is set', () => {
    const { root, flow } = mount();
    const base = {
      phase: 'rating' as const, card: sampleCard(), notice: null,
      noticeFields: [], completed: 0, total: 1, canRetry: false,
    };
    renderApp(root, flow, { ...base, draft: {} });
    let submit = root.querySelector('[data-testid="submit"]') as HTMLButtonElement;
    expect(submit.disabled).toBe(true);

    renderApp(root, flow, { ...base, draft: { feasibility: 3, scalability: 4 } });
    submit = root.querySelector('[data-testid="submit"]') as HTMLButtonElement;
    expect(submit.disabled).toBe(true);
  });

  it('marks 422 field errors on the offending row and shows the notice', () => {
    const { root, flow } = mount();
    renderApp(root, flow, {
      phase: 'rating', card: sampleCard(),
      draft: { feasibility: 4, scalability: 4, desirability: 4 },
      notice: 'feasibility: must be <= 7', noticeFields: ['feasibility'],
      completed: 0, total: 1, canRetry: false,
    });
    const alert = root.querySelector('[role="alert"]');
    expect(alert?.textContent).toContain('feasibility');
    const marked = root.querySelector('.likert-row.field-error') as HTMLElement;
    expect(marked.dataset.dimension).toBe('feasibility');
  });

  it('shows retry after a network failure and done at the end', () => {
    const { root, flow } = mount();
    renderApp(root, flow, {
      phase: 'error', card: sampleCard(), draft: {}, notice: 'submission failed: down',
      noticeFields: [], completed: 0, total: 1, canRetry: true,
    });
    expect(root.querySelector('[data-testid="retry"]')).not.toBeNull();

    renderApp(root, flow, {
      phase: 'done', card: null, draft: {}, notice: null,
      noticeFields: [], completed: 1, total: 1, canRetry: false,
    });
    expect(root.querySelector('[data-testid="done"]')?.textContent)
      .toContain('All startups covered');
  });
});
