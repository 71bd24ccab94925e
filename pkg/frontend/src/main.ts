/**
 * Bootstrap: collect the rater identity, then run the one-card-at-a-time
 * rating flow against the judgment service.
 */

import { ApiClient } from './api.js';
import { RatingFlow } from './flow.js';
import { RaterClass, RaterIdentity } from './types.js';
import { renderApp } from './ui.js';

export function startSession(root: HTMLElement, baseUrl: string, rater: RaterIdentity): RatingFlow {
  const api = new ApiClient(baseUrl);
  const flow: RatingFlow = new RatingFlow(api, rater, (state) => renderApp(root, flow, state));
  void flow.start();
  return flow;
}

export function mountIdentityForm(root: HTMLElement, baseUrl: string): void {
  const form = document.createElement('form');
  form.className = 'identity-form';

  const idLabel = document.createElement('label');
  idLabel.textContent = 'Rater id ';
  const idInput = document.createElement('input');
  idInput.name = 'rater_id';
  idInput.required = true;
  idInput.placeholder = 'e.g. jane-doe';
  idLabel.appendChild(idInput);

  const classLabel = document.createElement('label');
  classLabel.textContent = ' I am ';
  const classSelect = document.createElement('select');
  classSelect.name = 'rater_class';
  for (const [value, text] of [['nonexpert', 'a non-expert'], ['expert', 'a domain expert']]) {
    const option = document.createElement('option');
    option.value = value as string;
    option.textContent = text as string;
    classSelect.appendChild(option);
  }
  classLabel.appendChild(classSelect);

  const begin = document.createElement('button');
  begin.type = 'submit';
  begin.textContent = 'Start rating';

  form.appendChild(idLabel);
  form.appendChild(classLabel);
  form.appendChild(begin);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const raterId = idInput.value.trim();
    if (raterId.length === 0) return;
    startSession(root, baseUrl, {
      raterId,
      raterClass: classSelect.value as RaterClass,
    });
  });

  root.textContent = '';
  root.appendChild(form);
}

declare global {
  interface Window {
    __HI_AUTOSTART__?: boolean;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app') !== null
    && window.__HI_AUTOSTART__ !== false) {
  const root = document.getElementById('app') as HTMLElement;
  mountIdentityForm(root, window.location.origin);
}
