// Browser entry point: seed loading, vertex clicks, undo. State is the
// session id plus the last rendered ViewModel; every render comes from a
// fresh service response (optimistic updates are deliberately absent).

import { ApiError, ExplorerClient, type SessionView } from './api.js';
import { projectView } from './model.js';
import { renderError, renderSession, renderToast } from './render.js';

const DEFAULT_BASE = 'http://127.0.0.1:8642';

const EXAMPLE_SEED = {
  ring: 'Q',
  n: 2,
  m: 0,
  names: ['x1', 'x2'],
  B: [
    [0, -2],
    [1, 0],
  ],
  d: [1, 2],
  rho: [
    ['1', '1'],
    ['1', '2', '1'],
  ],
};

export class ExplorerApp {
  private sessionId: string | null = null;

  constructor(
    private readonly client: ExplorerClient,
    private readonly root: HTMLElement,
    private readonly sessionPane: HTMLElement,
    private readonly errorPane: HTMLElement,
  ) {}

  async loadSeed(text: string): Promise<void> {
    let seed: unknown;
    try {
      seed = JSON.parse(text);
    } catch (error) {
      this.errorPane.innerHTML = renderError({
        error: 'malformed-json',
        detail: String(error),
      });
      return;
    }
    try {
      const view = await this.client.createSession(seed);
      this.sessionId = view.session;
      this.show(view);
    } catch (error) {
      this.sessionId = null;
      this.sessionPane.innerHTML = '';
      this.showError(error);
    }
  }

  async clickMutate(vertex: number): Promise<void> {
    if (!this.sessionId) return;
    try {
      this.show(await this.client.mutate(this.sessionId, vertex));
    } catch (error) {
      this.showError(error);
    }
  }

  async clickUndo(): Promise<void> {
    if (!this.sessionId) return;
    try {
      this.show(await this.client.undo(this.sessionId));
    } catch (error) {
      this.showError(error);
    }
  }

  private show(view: SessionView): void {
    this.errorPane.innerHTML = '';
    this.sessionPane.innerHTML = renderSession(projectView(view));
  }

  private showError(error: unknown): void {
    if (error instanceof ApiError) {
      this.errorPane.innerHTML = renderError(error.payload);
    } else {
      this.errorPane.innerHTML = renderToast(String(error));
    }
  }
}

export function mount(root: HTMLElement): ExplorerApp {
  root.innerHTML = `
    <h1>Mutation explorer</h1>
    <div class="loader">
      <textarea id="seed-input" rows="7" spellcheck="false"></textarea>
      <div>
        <label>service <input id="base-url" value="${DEFAULT_BASE}"></label>
        <button id="load">load seed</button>
      </div>
    </div>
    <div id="error-pane"></div>
    <div id="session-pane"></div>`;
  const input = root.querySelector<HTMLTextAreaElement>('#seed-input')!;
  const base = root.querySelector<HTMLInputElement>('#base-url')!;
  const sessionPane = root.querySelector<HTMLElement>('#session-pane')!;
  const errorPane = root.querySelector<HTMLElement>('#error-pane')!;
  input.value = JSON.stringify(EXAMPLE_SEED, null, 1);

  let app = new ExplorerApp(
    new ExplorerClient(base.value),
    root,
    sessionPane,
    errorPane,
  );
  base.addEventListener('change', () => {
    app = new ExplorerApp(
      new ExplorerClient(base.value),
      root,
      sessionPane,
      errorPane,
    );
  });
  root.querySelector('#load')!.addEventListener('click', () => {
    void app.loadSeed(input.value);
  });
  root.addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const vertexGroup = target.closest<HTMLElement>('[data-vertex]');
    if (vertexGroup) {
      void app.clickMutate(Number(vertexGroup.dataset.vertex));
      return;
    }
    if (target.id === 'undo') {
      void app.clickUndo();
    }
  });
  return app;
}

if (typeof document !== 'undefined') {
  const root = document.getElementById('app');
  if (root) {
    mount(root);
  }
}
