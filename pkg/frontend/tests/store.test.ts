import { describe, expect, it } from 'vitest';

import type { ApiClient } from '../src/api';
import { ComposerStore } from '../src/store';
import type {
  AssemblyReport,
  ConstructionDoc,
  Finding,
  Fragment,
} from '../src/types';

const FRAGMENTS: Fragment[] = [
  {
    id: 'requirements-engineering',
    name: 'Requirements Engineering',
    kind: 'process',
    description: '',
    origin: 'so-extension',
  },
  {
    id: 'identify-user-requirements',
    name: 'Identify user requirements',
    kind: 'task',
    description: '',
    origin: 'opf-baseline',
  },
  {
    id: 'specify-service-level-agreement',
    name: 'Specify Service Level Agreement',
    kind: 'task',
    description: '',
    origin: 'so-extension',
    owner_process: 'requirements-engineering',
  },
  {
    id: 'identify-services',
    name: 'Identify Services',
    kind: 'task',
    description: '',
    origin: 'so-extension',
    owner_process: 'design-services',
  },
  {
    id: 'discover-necessary-web-services',
    name: 'Discover Necessary Web Services',
    kind: 'task',
    description: '',
    origin: 'so-extension',
    owner_process: 'reuse-engineering',
  },
];

/** Mandatory counterparts of the sample process, as the engine would pull them. */
const MANDATED = ['identify-user-requirements', 'specify-service-level-agreement'];

class ScriptedApi implements ApiClient {
  selection: string[] = [];
  putCount = 0;
  reportCount = 0;

  async listFragments(): Promise<Fragment[]> {
    return FRAGMENTS;
  }

  async getFragment(): Promise<never> {
    throw new Error('not scripted');
  }

  async createMethod(): Promise<string> {
    return 'm1';
  }

  async putSelection(_: string, chosen: string[]): Promise<ConstructionDoc> {
    this.putCount += 1;
    this.selection = [...chosen].sort();
    return this.construction();
  }

  async applyClosure(): Promise<ConstructionDoc> {
    if (this.selection.includes('requirements-engineering')) {
      this.selection = [...new Set([...this.selection, ...MANDATED])].sort();
    }
    return this.construction();
  }

  /** Report derived from the server-side selection, never from UI state. */
  async getReport(): Promise<AssemblyReport> {
    this.reportCount += 1;
    const deontic: Finding[] = [];
    if (this.selection.includes('requirements-engineering')) {
      for (const counterpart of MANDATED) {
        if (!this.selection.includes(counterpart)) {
          deontic.push({
            severity: 'error',
            code: 'MISSING_MANDATORY',
            cell: { row: 'requirements-engineering', col: counterpart, value: 'M' },
          });
        }
      }
    }
    const precedence = [];
    if (
      this.selection.includes('discover-necessary-web-services') &&
      !this.selection.includes('identify-services')
    ) {
      precedence.push({
        before: 'identify-services',
        after: 'discover-necessary-web-services',
        source: '',
      });
    }
    return { ok: deontic.length === 0 && precedence.length === 0, deontic, structural: [], precedence };
  }

  async getOrder(): Promise<string[] | null> {
    return null;
  }

  async coverage(): Promise<never> {
    throw new Error('not scripted');
  }

  async usability(): Promise<never> {
    throw new Error('not scripted');
  }

  private construction(): ConstructionDoc {
    return { id: 'm1', name: 'test', selection: this.selection, stage_of: {}, notes: '' };
  }
}

async function freshStore() {
  const api = new ScriptedApi();
  const store = new ComposerStore(api);
  await store.init();
  return { api, store };
}

describe('ComposerStore', () => {
  it('renders exactly the report the API returned for the displayed selection', async () => {
    const { api, store } = await freshStore();
    await store.toggle('discover-necessary-web-services');

    const direct = await api.getReport();
    expect(store.getState().report).toEqual(direct);
    const badges = store.violationsByFragment().get('discover-necessary-web-services');
    expect(badges?.map((b) => b.before)).toEqual(['identify-services']);
  });

  it('toggling twice restores the pre-toggle state', async () => {
    const { store } = await freshStore();
    await store.toggle('identify-services');
    const once = store.getState();
    await store.toggle('discover-necessary-web-services');
    await store.toggle('discover-necessary-web-services');
    const back = store.getState();
    expect([...back.selection].sort()).toEqual([...once.selection].sort());
    expect(back.report).toEqual(once.report);
  });

  it('closure resolves every missing-mandatory finding', async () => {
    const { store } = await freshStore();
    await store.toggle('requirements-engineering');
    expect(store.missingMandatory().map((f) => f.cell.col).sort()).toEqual(MANDATED);
    expect(store.mandatoryGapsByFragment().get('requirements-engineering')?.sort()).toEqual(
      MANDATED,
    );

    await store.applyClosure();
    expect(store.missingMandatory()).toEqual([]);
    expect(store.getState().selection.has('identify-user-requirements')).toBe(true);
    expect(store.getState().report?.ok).toBe(true);
  });

  it('queues rapid toggles so the final state matches the final selection', async () => {
    const { api, store } = await freshStore();
    const burst = [
      store.toggle('identify-services'),
      store.toggle('discover-necessary-web-services'),
      store.toggle('identify-services'),
    ];
    await Promise.all(burst);
    expect([...store.getState().selection].sort()).toEqual(['discover-necessary-web-services']);
    expect(api.putCount).toBe(3);
    expect(store.getState().report).toEqual(await api.getReport());
  });

  it('surfaces API error bodies in the notice area', async () => {
    const { api } = await freshStore();
    const failing = Object.create(api) as ScriptedApi;
    failing.putSelection = async () => {
      const { ApiError } = await import('../src/api');
      throw new ApiError(404, { error: 'UNKNOWN_ID', detail: 'unknown fragment' });
    };
    const flaky = new ComposerStore(failing);
    await flaky.init();
    await flaky.toggle('ghost');
    expect(flaky.getState().notice).toContain('UNKNOWN_ID');
  });
});
