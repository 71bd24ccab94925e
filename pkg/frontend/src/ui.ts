/**
 * DOM rendering: the crowd card with its five sections and format tags,
 * three anchored 7-point Likert rows, a completeness-gated submit
 * button, a progress indicator, and an inline notice region.
 */

import { RatingFlow, FlowState } from './flow.js';
import { DIMENSIONS, Dimension } from './types.js';

const DIMENSION_LABELS: Record<Dimension, string> = {
  feasibility: 'Feasibility',
  scalability: 'Scalability',
  desirability: 'Desirability',
};

const ANCHOR_LOW = '1 = very weak';
const ANCHOR_HIGH = '7 = very strong';

export function renderApp(root: HTMLElement, flow: RatingFlow, state: FlowState): void {
  root.textContent = '';

  const progress = el('div', 'progress');
  progress.dataset.testid = 'progress';
  progress.textContent = state.total > 0
    ? `${state.completed} / ${state.total} startups rated`
    : 'loading startups...';
  root.appendChild(progress);

  if (state.notice !== null) {
    const notice = el('div', 'notice');
    notice.setAttribute('role', 'alert');
    notice.dataset.testid = 'notice';
    notice.textContent = state.notice;
    root.appendChild(notice);
  }

  if (state.phase === 'error' && state.canRetry) {
    const retry = document.createElement('button');
    retry.dataset.testid = 'retry';
    retry.textContent = 'Retry';
    retry.addEventListener('click', () => void flow.retry());
    root.appendChild(retry);
    return;
  }

  if (state.phase === 'done') {
    const done = el('div', 'done');
    done.dataset.testid = 'done';
    done.textContent = 'All startups covered. Thank you!';
    root.appendChild(done);
    return;
  }

  if (state.card === null) return;

  const card = el('article', 'card');
  card.dataset.testid = 'card';
  card.dataset.recordId = state.card.record_id;

  const heading = el('h2', 'card-title');
  heading.textContent = `Startup ${state.card.record_id}`;
  card.appendChild(heading);

  for (const section of state.card.sections) {
    const block = el('section', 'card-section');
    const title = el('h3', 'card-category');
    title.textContent = section.category;
    block.appendChild(title);

    const list = el('dl', 'signals');
    for (const entry of section.entries) {
      const term = el('dt', 'signal-name');
      term.textContent = entry.signal;
      const tag = el('span', 'format-tag');
      tag.textContent = entry.format;
      term.appendChild(tag);
      const detail = el('dd', 'signal-content');
      detail.textContent = entry.content;
      list.appendChild(term);
      list.appendChild(detail);
    }
    block.appendChild(list);
    card.appendChild(block);
  }
  root.appendChild(card);

  const form = el('form', 'rating-form');
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void flow.submit();
  });

  for (const dimension of DIMENSIONS) {
    form.appendChild(renderLikertRow(flow, state, dimension));
  }

  const submit = document.createElement('button');
  submit.type = 'submit';
  submit.dataset.testid = 'submit';
  submit.textContent = state.phase === 'submitting' ? 'Submitting...' : 'Submit rating';
  submit.disabled = !flow.canSubmit() || state.phase === 'submitting';
  form.appendChild(submit);

  root.appendChild(form);
}

function renderLikertRow(flow: RatingFlow, state: FlowState, dimension: Dimension): HTMLElement {
  const row = el('fieldset', 'likert-row');
  row.dataset.dimension = dimension;
  if (state.noticeFields.includes(dimension)) row.classList.add('field-error');

  const legend = el('legend', 'likert-label');
  legend.textContent = DIMENSION_LABELS[dimension];
  row.appendChild(legend);

  const low = el('span', 'anchor');
  low.textContent = ANCHOR_LOW;
  row.appendChild(low);

  // all seven anchored points as radio controls: the control itself
  // constrains ratings to 1..7
  for (let value = 1; value <= 7; value += 1) {
    const label = el('label', 'likert-point') as HTMLLabelElement;
    const input = document.createElement('input');
    input.type = 'radio';
    input.name = `likert-${dimension}`;
    input.value = String(value);
    input.checked = state.draft[dimension] === value;
    input.addEventListener('change', () => flow.setRating(dimension, value));
    label.appendChild(input);
    label.appendChild(document.createTextNode(String(value)));
    row.appendChild(label);
  }

  const high = el('span', 'anchor');
  high.textContent = ANCHOR_HIGH;
  row.appendChild(high);
  return row;
}

function el(tag: string, className: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}
