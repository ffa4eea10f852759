// Pure HTML rendering of a ViewModel. The app sets innerHTML from these
// strings and wires events by delegation, which keeps rendering testable
// without a browser.

import type { ErrorPayload } from './api.js';
import type { ViewModel } from './model.js';

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function renderGraph(vm: ViewModel): string {
  const byId = new Map(vm.vertices.map((v) => [v.id, v]));
  const edges = vm.edges
    .map(([from, to]) => {
      const a = byId.get(from);
      const b = byId.get(to);
      if (!a || !b) return '';
      return (
        `<line x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" ` +
        'stroke="#778" stroke-width="1.5" marker-end="url(#arrow)"></line>'
      );
    })
    .join('');
  const nodes = vm.vertices
    .map((v) => {
      const cls = v.frozen ? 'vertex frozen' : 'vertex mutable';
      const clickable = v.frozen ? '' : ` data-vertex="${v.id}"`;
      return (
        `<g class="${cls}"${clickable}>` +
        `<circle cx="${v.x}" cy="${v.y}" r="18"></circle>` +
        `<text x="${v.x}" y="${v.y + 4}" text-anchor="middle">` +
        `${escapeHtml(v.name)}</text></g>`
      );
    })
    .join('');
  return (
    '<svg id="graph" viewBox="0 0 400 400" width="400" height="400">' +
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="22" refY="5" ' +
    'markerWidth="7" markerHeight="7" orient="auto-start-reverse">' +
    '<path d="M 0 0 L 10 5 L 0 10 z" fill="#778"></path></marker></defs>' +
    `${edges}${nodes}</svg>`
  );
}

function listItems(values: string[], cls: string): string {
  return values
    .map((value) => `<li class="${cls}">${escapeHtml(value)}</li>`)
    .join('');
}

export function renderSession(vm: ViewModel): string {
  const badges = vm.badges
    .map(
      (badge) =>
        `<span class="badge ${badge.on ? 'on' : 'off'}">` +
        `${escapeHtml(badge.label)}: ${badge.on ? 'yes' : 'no'}</span>`,
    )
    .join(' ');
  const history = vm.history.length
    ? vm.history.map((k) => `<span class="step">${k}</span>`).join(' ')
    : '<em>initial seed</em>';
  return `
  <section id="session" data-session="${escapeHtml(vm.sessionId)}">
    <div class="columns">
      <div class="graph-pane">
        ${renderGraph(vm)}
        <p class="hint">click an exchangeable vertex to mutate</p>
      </div>
      <div class="panels">
        <h3>Cluster variables</h3>
        <ol id="expressions">${listItems(vm.expressions, 'expression')}</ol>
        <h3>${vm.kind === 'lp' ? 'Exchange Laurent polynomials' : 'Exchange polynomials'}</h3>
        <ol id="exchange">${listItems(vm.exchangePolynomials, 'poly')}</ol>
        <h3>Structure</h3>
        <p id="badges">${badges}</p>
        <h3>Class group</h3>
        <p id="classgroup">${escapeHtml(vm.classGroupLabel)}</p>
        <h3>History</h3>
        <p id="history">${history}</p>
        <button id="undo" ${vm.history.length ? '' : 'disabled'}>undo</button>
      </div>
    </div>
  </section>`;
}

export function renderError(payload: ErrorPayload): string {
  const details = payload.violations?.length
    ? `<ul>${payload.violations
        .map((violation) => `<li>${escapeHtml(violation)}</li>`)
        .join('')}</ul>`
    : escapeHtml(payload.precondition ?? payload.detail ?? '');
  return `<div id="error" class="error"><strong>${escapeHtml(
    payload.error ?? 'error',
  )}</strong>${details}</div>`;
}

export function renderToast(message: string): string {
  return `<div class="toast">${escapeHtml(message)}</div>`;
}
