// ViewModel: a pure projection of the last service response. No arithmetic
// is performed client-side; strings from the service are kept verbatim so
// the display round-trips character for character.

import type { ClassGroupPayload, SessionView } from './api.js';

export interface VertexLayout {
  id: number;
  name: string;
  frozen: boolean;
  x: number;
  y: number;
}

export interface Badge {
  label: string;
  on: boolean;
}

export interface ViewModel {
  sessionId: string;
  kind: 'generalized' | 'lp';
  vertices: VertexLayout[];
  edges: [number, number][];
  expressions: string[];
  exchangePolynomials: string[];
  badges: Badge[];
  classGroupLabel: string;
  history: number[];
}

// Deterministic circular layout (by vertex index) so renders and
// screenshots are reproducible.
export function circularLayout(
  count: number,
  index: number,
  radius = 150,
  center = 200,
): { x: number; y: number } {
  const angle = (2 * Math.PI * index) / Math.max(count, 1) - Math.PI / 2;
  return {
    x: Math.round(center + radius * Math.cos(angle)),
    y: Math.round(center + radius * Math.sin(angle)),
  };
}

export function classGroupLabel(payload: ClassGroupPayload): string {
  if (payload.preconditions_not_met) {
    return `unavailable: ${payload.preconditions_not_met.join(', ')}`;
  }
  const parts: string[] = [];
  const free = payload.free_rank ?? 0;
  if (free === 1) {
    parts.push('Z');
  } else if (free > 1) {
    parts.push(`Z^${free}`);
  }
  for (const n of payload.torsion ?? []) {
    parts.push(`Z/${n}Z`);
  }
  return parts.length ? parts.join(' x ') : 'trivial';
}

export function projectView(view: SessionView): ViewModel {
  const count = view.graph.vertices.length;
  const vertices = view.graph.vertices.map((vertex, index) => ({
    ...vertex,
    ...circularLayout(count, index),
  }));
  const badges: Badge[] = [];
  if (view.kind === 'generalized') {
    badges.push({ label: 'acyclic', on: view.acyclic === true });
    badges.push({ label: 'coprime', on: view.coprime === true });
  } else {
    badges.push({
      label: 'sign-skew symmetric',
      on: view.sign_skew_symmetric === true,
    });
  }
  return {
    sessionId: view.session,
    kind: view.kind,
    vertices,
    edges: view.graph.edges,
    expressions: view.expressions,
    exchangePolynomials:
      view.exchange_polynomials ?? view.exchange_laurent ?? [],
    badges,
    classGroupLabel: classGroupLabel(view.class_group),
    history: view.history,
  };
}
