/** Pure catalog helpers: grouping by process and name/alias search. */

import type { Fragment } from './types';

export interface CatalogGroup {
  processId: string | null;
  processName: string;
  tasks: Fragment[];
}

/**
 * Group task fragments under their owning process, in process name order.
 * Tasks with no declared owner land in a trailing "Other tasks" group.
 */
export function groupCatalog(fragments: Fragment[]): CatalogGroup[] {
  const processes = fragments
    .filter((f) => f.kind === 'process')
    .sort((a, b) => a.name.localeCompare(b.name));
  const tasks = fragments.filter((f) => f.kind === 'task');

  const groups: CatalogGroup[] = processes.map((process) => ({
    processId: process.id,
    processName: process.name,
    tasks: tasks
      .filter((t) => t.owner_process === process.id)
      .sort((a, b) => a.name.localeCompare(b.name)),
  }));

  const orphans = tasks
    .filter((t) => !t.owner_process)
    .sort((a, b) => a.name.localeCompare(b.name));
  if (orphans.length > 0) {
    groups.push({ processId: null, processName: 'Other tasks', tasks: orphans });
  }
  return groups.filter((g) => g.tasks.length > 0 || g.processId !== null);
}

/** Case-insensitive substring match over name and aliases. */
export function matchesSearch(fragment: Fragment, needle: string): boolean {
  const lowered = needle.trim().toLowerCase();
  if (!lowered) return true;
  const labels = [fragment.name, ...(fragment.aliases ?? [])];
  return labels.some((label) => label.toLowerCase().includes(lowered));
}

export function filterCatalog(fragments: Fragment[], needle: string): Fragment[] {
  return fragments.filter((f) => matchesSearch(f, needle));
}
