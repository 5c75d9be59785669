import { readFileSync } from 'node:fs';
import { describe, expect, it } from 'vitest';

import { filterCatalog, groupCatalog, matchesSearch } from '../src/catalog';
import type { Fragment } from '../src/types';

const seed = JSON.parse(
  readFileSync(new URL('../../src/smeforge/seed/so-fragments.json', import.meta.url), 'utf-8'),
) as { fragments: Fragment[] };

describe('groupCatalog', () => {
  it('shows the Design Services group with its four tasks', () => {
    const groups = groupCatalog(seed.fragments);
    const design = groups.find((g) => g.processName === 'Design Services');
    expect(design).toBeDefined();
    expect(design!.tasks.map((t) => t.id).sort()).toEqual([
      'classify-services',
      'evaluate-quality-of-designed-services',
      'identify-services',
      'specify-details-of-services',
    ]);
  });

  it('places every owned task under exactly one process', () => {
    const groups = groupCatalog(seed.fragments);
    const placed = groups.flatMap((g) => (g.processId ? g.tasks.map((t) => t.id) : []));
    const owned = seed.fragments.filter((f) => f.kind === 'task' && f.owner_process);
    expect(placed.sort()).toEqual(owned.map((f) => f.id).sort());
  });

  it('collects unowned tasks into a trailing group', () => {
    const groups = groupCatalog(seed.fragments);
    const trailing = groups[groups.length - 1];
    expect(trailing.processName).toBe('Other tasks');
    expect(trailing.tasks.map((t) => t.id)).toContain('identify-user-requirements');
  });

  it('returns nothing for an empty repository', () => {
    expect(groupCatalog([])).toEqual([]);
  });
});

describe('search', () => {
  it('matches the same set as an independent name/alias filter', () => {
    const needle = 'wrapper';
    const got = filterCatalog(seed.fragments, needle).map((f) => f.id);
    const oracle = seed.fragments
      .filter((f) =>
        [f.name, ...(f.aliases ?? [])].some((label) =>
          label.toLowerCase().includes(needle),
        ),
      )
      .map((f) => f.id);
    expect(got.sort()).toEqual(oracle.sort());
    expect(got).toContain('implement-necessary-wrappers');
  });

  it('matches aliases', () => {
    const sla = seed.fragments.find((f) => f.id === 'specify-service-level-agreement')!;
    expect(matchesSearch(sla, 'specify sla')).toBe(true);
    expect(matchesSearch(sla, 'zzz')).toBe(false);
  });

  it('treats a blank query as match-all', () => {
    expect(filterCatalog(seed.fragments, '  ')).toHaveLength(seed.fragments.length);
  });
});
