/** End-to-end checks against a live engine spawned for the suite.
 *
 * Skips (with a console notice) when the `smeforge` CLI is not installed in
 * the environment, so the unit suite stays runnable on its own.
 */

import { type ChildProcess, spawn } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { HttpApiClient } from '../src/api';
import { groupCatalog } from '../src/catalog';
import { ComposerStore } from '../src/store';

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | null = null;
let ready = false;

async function waitForServer(timeoutMs: number): Promise<boolean> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/fragments`);
      if (response.ok) return true;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  return false;
}

beforeAll(async () => {
  server = spawn('smeforge', ['serve', '--port', String(PORT)], {
    stdio: 'ignore',
  });
  server.on('error', () => {
    server = null;
  });
  ready = await waitForServer(15000);
  if (!ready) {
    console.warn('smeforge server unavailable; skipping end-to-end tests');
  }
});

afterAll(() => {
  server?.kill();
});

describe('composer against the live engine', () => {
  it('toggling updates the violation panel to match a direct report fetch', async (ctx) => {
    if (!ready) return ctx.skip();
    const api = new HttpApiClient(BASE);
    const store = new ComposerStore(api);
    await store.init('e2e toggles');

    await store.toggle('discover-necessary-web-services');

    const state = store.getState();
    const direct = await fetch(`${BASE}/methods/${state.methodId}/report`).then((r) =>
      r.json(),
    );
    expect(state.report).toEqual(direct);

    const badges = store.violationsByFragment().get('discover-necessary-web-services');
    expect(badges?.map((b) => b.before)).toContain('identify-services');
  });

  it('the closure button resolves every missing-mandatory finding', async (ctx) => {
    if (!ready) return ctx.skip();
    const api = new HttpApiClient(BASE);
    const store = new ComposerStore(api);
    await store.init('e2e closure');

    await store.toggle('requirements-engineering');
    expect(store.missingMandatory().length).toBeGreaterThan(0);

    await store.applyClosure();
    expect(store.missingMandatory()).toEqual([]);
    expect(store.getState().selection.has('identify-user-requirements')).toBe(true);
  });

  it('catalog groups the live repository with four design tasks', async (ctx) => {
    if (!ready) return ctx.skip();
    const api = new HttpApiClient(BASE);
    const fragments = await api.listFragments();
    const design = groupCatalog(fragments).find((g) => g.processName === 'Design Services');
    expect(design?.tasks).toHaveLength(4);
  });

  it('toggling a fragment twice restores the pre-toggle report', async (ctx) => {
    if (!ready) return ctx.skip();
    const api = new HttpApiClient(BASE);
    const store = new ComposerStore(api);
    await store.init('e2e involution');

    await store.toggle('design-services');
    const before = store.getState().report;
    await store.toggle('identify-services');
    await store.toggle('identify-services');
    expect(store.getState().report).toEqual(before);
  });
});
