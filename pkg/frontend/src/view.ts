/** DOM rendering: catalog left, construction and report right, metrics drawer. */

import type { ApiClient } from './api';
import { filterCatalog, groupCatalog } from './catalog';
import type { ComposerState, ComposerStore } from './store';
import type { Fragment, FragmentDetail } from './types';

const KIND_BADGES: Record<string, string> = {
  technique: 'technique',
  producer: 'producer',
  work_product: 'work product',
};

export class ComposerView {
  private search = '';
  private expanded = new Set<string>();
  private detailCache = new Map<string, FragmentDetail>();

  constructor(
    private readonly root: HTMLElement,
    private readonly store: ComposerStore,
    private readonly api: ApiClient,
  ) {
    store.subscribe(() => this.render());
  }

  render(): void {
    const state = this.store.getState();
    this.root.replaceChildren(
      this.renderCatalog(state),
      this.renderWorkbench(state),
      this.renderMetricsDrawer(),
    );
  }

  private renderCatalog(state: ComposerState): HTMLElement {
    const panel = el('section', 'catalog');
    panel.append(el('h2', '', 'Fragment catalog'));

    const searchBox = document.createElement('input');
    searchBox.type = 'search';
    searchBox.placeholder = 'Search fragments';
    searchBox.value = this.search;
    searchBox.addEventListener('input', () => {
      this.search = searchBox.value;
      this.render();
    });
    panel.append(searchBox);

    if (state.loading) {
      panel.append(el('p', 'empty', 'Loading repository...'));
      return panel;
    }
    if (state.notice && state.fragments.length === 0) {
      panel.append(el('p', 'notice', `Cannot reach the API: ${state.notice}`));
      return panel;
    }
    if (state.fragments.length === 0) {
      panel.append(el('p', 'empty', 'The repository is empty.'));
      return panel;
    }

    const visible = new Set(filterCatalog(state.fragments, this.search).map((f) => f.id));
    const violations = this.store.violationsByFragment();
    const gaps = this.store.mandatoryGapsByFragment();

    for (const group of groupCatalog(state.fragments)) {
      const tasks = group.tasks.filter((t) => visible.has(t.id));
      if (tasks.length === 0 && this.search) continue;
      const section = el('div', 'group');
      const heading = el('h3', '', group.processName);
      if (group.processId) {
        heading.append(this.toggleButton(state, group.processId));
        for (const missing of gaps.get(group.processId) ?? []) {
          heading.append(el('span', 'badge error', `missing ${missing}`));
        }
      }
      section.append(heading);
      for (const task of tasks) {
        section.append(
          this.renderTaskRow(state, task, violations.get(task.id), gaps.get(task.id)),
        );
      }
      panel.append(section);
    }
    return panel;
  }

  private toggleButton(state: ComposerState, fragmentId: string): HTMLElement {
    const chosen = state.selection.has(fragmentId);
    const button = el('button', chosen ? 'toggle on' : 'toggle', chosen ? 'remove' : 'add');
    button.addEventListener('click', () => void this.store.toggle(fragmentId));
    return button;
  }

  private renderTaskRow(
    state: ComposerState,
    task: Fragment,
    violations: { before: string }[] | undefined,
    gaps: string[] | undefined,
  ): HTMLElement {
    const row = el('div', state.selection.has(task.id) ? 'task selected' : 'task');
    const label = el('span', 'name', task.name);
    label.addEventListener('click', () => void this.expand(task.id));
    row.append(this.toggleButton(state, task.id), label);

    for (const violation of violations ?? []) {
      row.append(el('span', 'badge error', `needs ${violation.before} first`));
    }
    for (const missing of gaps ?? []) {
      row.append(el('span', 'badge error', `missing ${missing}`));
    }
    if (this.expanded.has(task.id)) {
      const detail = this.detailCache.get(task.id);
      if (detail) row.append(this.renderDetail(detail));
    }
    return row;
  }

  private async expand(taskId: string): Promise<void> {
    if (this.expanded.has(taskId)) {
      this.expanded.delete(taskId);
      this.render();
      return;
    }
    this.expanded.add(taskId);
    if (!this.detailCache.has(taskId)) {
      this.detailCache.set(taskId, await this.api.getFragment(taskId));
    }
    this.render();
  }

  private renderDetail(detail: FragmentDetail): HTMLElement {
    const body = el('div', 'detail');
    for (const cell of detail.cells) {
      const other = cell.row === detail.fragment.id ? cell.col : cell.row;
      const kind = KIND_BADGES[this.kindOf(other) ?? ''] ?? this.kindOf(other) ?? '';
      body.append(el('div', 'element', `${other} [${kind} ${cell.value}]`));
    }
    if (detail.predecessors.length) {
      body.append(el('div', 'element', `after: ${detail.predecessors.join(', ')}`));
    }
    if (detail.successors.length) {
      body.append(el('div', 'element', `before: ${detail.successors.join(', ')}`));
    }
    return body;
  }

  private kindOf(fragmentId: string): string | undefined {
    return this.store.getState().fragments.find((f) => f.id === fragmentId)?.kind;
  }

  private renderWorkbench(state: ComposerState): HTMLElement {
    const panel = el('section', 'workbench');
    panel.append(el('h2', '', 'Construction'));
    if (state.notice) {
      panel.append(el('p', 'notice', state.notice));
    }

    const chosen = [...state.selection].sort();
    panel.append(el('p', 'count', `${chosen.length} fragment(s) selected`));
    const list = el('div', 'chosen');
    for (const id of chosen) {
      const item = el('span', 'chip', id);
      item.addEventListener('click', () => void this.store.toggle(id));
      list.append(item);
    }
    panel.append(list);

    const report = state.report;
    const reportBox = el('div', 'report');
    reportBox.append(el('h3', '', 'Validation'));
    if (!report) {
      reportBox.append(el('p', 'empty', 'No report yet.'));
    } else {
      reportBox.append(el('p', report.ok ? 'ok' : 'not-ok', report.ok ? 'ok' : 'not ok'));
      for (const finding of report.deontic) {
        reportBox.append(
          el(
            'div',
            `finding ${finding.severity}`,
            `${finding.code}: ${finding.cell.row} -> ${finding.cell.col} [${finding.cell.value}]`,
          ),
        );
      }
      for (const issue of report.structural) {
        reportBox.append(el('div', 'finding error', `${issue.code} ${issue.subjects.join(' ')}`));
      }
      for (const edge of report.precedence) {
        reportBox.append(el('div', 'finding error', `PRECEDENCE: ${edge.before} -> ${edge.after}`));
      }
      if (this.store.missingMandatory().length > 0) {
        const button = el('button', 'closure', 'Apply mandatory closure');
        button.addEventListener('click', () => void this.store.applyClosure());
        reportBox.append(button);
      }
    }
    panel.append(reportBox);

    if (state.order) {
      const orderBox = el('div', 'order');
      orderBox.append(el('h3', '', 'Task order'));
      state.order.forEach((taskId, index) => {
        orderBox.append(el('div', 'element', `${index + 1}. ${taskId}`));
      });
      panel.append(orderBox);
    }
    return panel;
  }

  private renderMetricsDrawer(): HTMLElement {
    const drawer = el('section', 'metrics');
    drawer.append(el('h2', '', 'Metrics'));
    const input = document.createElement('textarea');
    input.placeholder = 'Paste a corpus or project document (JSON)';
    const output = el('pre', 'metrics-output');

    const run = async (kind: 'coverage' | 'usability') => {
      try {
        const doc = JSON.parse(input.value);
        const result =
          kind === 'coverage' ? await this.api.coverage(doc) : await this.api.usability(doc);
        output.textContent = JSON.stringify(result, null, 2);
      } catch (error) {
        output.textContent = error instanceof Error ? error.message : String(error);
      }
    };

    const coverageButton = el('button', '', 'Coverage');
    coverageButton.addEventListener('click', () => void run('coverage'));
    const usabilityButton = el('button', '', 'Usability');
    usabilityButton.addEventListener('click', () => void run('usability'));

    drawer.append(input, coverageButton, usabilityButton, output);
    return drawer;
  }
}

function el(tag: string, className = '', text = ''): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}
