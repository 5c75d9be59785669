"""Constructing and validating a project-specific method.

A construction is an immutable value: a named selection of fragment ids
plus an optional task-to-stage placement. Validation never mutates or
auto-repairs; gaps show up in the report and the caller decides whether to
apply the mandatory closure. Ordering and export require a clean report.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping, Optional

from smeforge.deontic import (
    DeonticFinding,
    error_findings,
    required_closure,
    selection_findings,
)
from smeforge.errors import CycleError, PreconditionError, UnknownIdError
from smeforge.metamodel import FragmentKind
from smeforge.repository import (
    PrecedenceConstraint,
    Repository,
    find_cycle,
)


@dataclass(frozen=True)
class MethodConstruction:
    name: str
    selection: frozenset[str] = frozenset()
    stage_of: Mapping[str, str] = field(default_factory=dict)
    notes: str = ""


@dataclass(frozen=True)
class StructuralIssue:
    code: str  # ORPHAN_TASK | EMPTY_METHOD
    subjects: tuple[str, ...]


@dataclass(frozen=True)
class AssemblyReport:
    deontic: tuple[DeonticFinding, ...]
    structural: tuple[StructuralIssue, ...]
    precedence: tuple[PrecedenceConstraint, ...]

    @property
    def ok(self) -> bool:
        return (
            not error_findings(self.deontic)
            and not self.structural
            and not self.precedence
        )


def toggle_fragment(
    construction: MethodConstruction,
    repo: Repository,
    fragment_id: str,
    include: bool,
) -> MethodConstruction:
    """Add or remove one fragment, returning a new construction.

    Removing a task also drops its stage placement. Closure is never applied
    automatically; validation reports the gaps instead.
    """
    repo.fragment(fragment_id)  # raises UNKNOWN_ID
    if include:
        selection = construction.selection | {fragment_id}
        stage_of = dict(construction.stage_of)
    else:
        selection = construction.selection - {fragment_id}
        stage_of = {k: v for k, v in construction.stage_of.items() if k != fragment_id}
    return replace(construction, selection=selection, stage_of=stage_of)


def with_selection(
    construction: MethodConstruction, repo: Repository, chosen: Iterable[str]
) -> MethodConstruction:
    """Replace the whole selection, pruning stage placements of dropped tasks."""
    selection = frozenset(chosen)
    for fragment_id in sorted(selection):
        repo.fragment(fragment_id)
    stage_of = {k: v for k, v in construction.stage_of.items() if k in selection}
    return replace(construction, selection=selection, stage_of=stage_of)


def assign_stage(
    construction: MethodConstruction,
    repo: Repository,
    task_id: str,
    stage_id: Optional[str],
) -> MethodConstruction:
    """Place a chosen task in a lifecycle stage (or clear it with None)."""
    if task_id not in construction.selection or repo.kind_of(task_id) is not FragmentKind.TASK:
        raise UnknownIdError(
            f"{task_id!r} is not a chosen task", subjects=[task_id]
        )
    stage_of = dict(construction.stage_of)
    if stage_id is None:
        stage_of.pop(task_id, None)
    else:
        if repo.kind_of(stage_id) is not FragmentKind.STAGE:
            raise UnknownIdError(
                f"{stage_id!r} is not a stage fragment", subjects=[stage_id]
            )
        stage_of[task_id] = stage_id
    return replace(construction, stage_of=stage_of)


def apply_closure(
    construction: MethodConstruction, repo: Repository
) -> MethodConstruction:
    return with_selection(
        construction, repo, required_closure(repo, construction.selection)
    )


def chosen_tasks(construction: MethodConstruction, repo: Repository) -> list[str]:
    return sorted(
        i for i in construction.selection if repo.kind_of(i) is FragmentKind.TASK
    )


def validate_method(
    construction: MethodConstruction, repo: Repository
) -> AssemblyReport:
    """Pure check of a construction against the repository.

    Structural issues: EMPTY_METHOD when no task is chosen, ORPHAN_TASK for
    each chosen task whose declared owning process is not chosen (tasks
    without a declared owner are exempt). Precedence lists every edge whose
    successor is chosen while its predecessor is not.
    """
    deontic = tuple(selection_findings(repo, construction.selection))

    structural: list[StructuralIssue] = []
    tasks = chosen_tasks(construction, repo)
    if not tasks:
        structural.append(StructuralIssue("EMPTY_METHOD", ()))
    for task_id in tasks:
        owner = repo.fragment(task_id).owner_process
        if owner is not None and owner not in construction.selection:
            structural.append(StructuralIssue("ORPHAN_TASK", (task_id,)))

    violated = tuple(
        e
        for e in sorted(repo.precedence, key=lambda e: (e.before, e.after))
        if e.after in construction.selection and e.before not in construction.selection
    )
    return AssemblyReport(deontic, tuple(structural), violated)


def _stage_rank(construction: MethodConstruction, repo: Repository) -> dict[str, int]:
    stages = [f.id for f in repo.fragments if f.kind is FragmentKind.STAGE]
    rank = {stage_id: i for i, stage_id in enumerate(stages)}
    unstaged = len(stages)
    return {
        task_id: rank.get(construction.stage_of.get(task_id, ""), unstaged)
        for task_id in construction.selection
    }


def order_tasks(construction: MethodConstruction, repo: Repository) -> list[str]:
    """Order the chosen tasks so every precedence edge points forward.

    Requires a violation-free selection. Ties break by stage placement (in
    the repository's stage declaration order), then id, so the output is a
    deterministic permutation of the chosen tasks.
    """
    report = validate_method(construction, repo)
    if report.precedence:
        edges = ", ".join(f"{e.before} -> {e.after}" for e in report.precedence)
        raise PreconditionError(
            f"selection violates precedence: {edges}",
            subjects=[i for e in report.precedence for i in (e.before, e.after)],
        )

    tasks = chosen_tasks(construction, repo)
    task_set = set(tasks)
    edges = [
        (e.before, e.after)
        for e in repo.precedence
        if e.before in task_set and e.after in task_set
    ]
    cycle = find_cycle(edges)
    if cycle:
        raise CycleError(
            "precedence cycle among chosen tasks: " + " -> ".join(cycle),
            subjects=cycle,
        )

    rank = _stage_rank(construction, repo)
    indegree = {t: 0 for t in tasks}
    successors: dict[str, list[str]] = {t: [] for t in tasks}
    for before, after in edges:
        indegree[after] += 1
        successors[before].append(after)

    ready = [(rank[t], t) for t in tasks if indegree[t] == 0]
    heapq.heapify(ready)
    ordered: list[str] = []
    while ready:
        _, task_id = heapq.heappop(ready)
        ordered.append(task_id)
        for successor in successors[task_id]:
            indegree[successor] -= 1
            if indegree[successor] == 0:
                heapq.heappush(ready, (rank[successor], successor))
    return ordered


def export_method(
    construction: MethodConstruction, repo: Repository
) -> dict[str, Any]:
    """Render a valid construction as a processes/tasks/elements document.

    One section per chosen process, its chosen tasks in execution order,
    and per task the techniques, producers, and work products its deontic
    cells link to.
    """
    report = validate_method(construction, repo)
    if not report.ok:
        raise PreconditionError("method fails validation; fix the report first")

    order = order_tasks(construction, repo)
    position = {task_id: i for i, task_id in enumerate(order)}

    def task_section(task_id: str) -> dict[str, Any]:
        techniques, producers, work_products = [], [], []
        for cell in repo.cells:
            if cell.row == task_id:
                col_kind = repo.kind_of(cell.col)
                if col_kind is FragmentKind.TECHNIQUE:
                    techniques.append(cell.col)
                elif col_kind is FragmentKind.WORK_PRODUCT:
                    work_products.append(cell.col)
            elif cell.col == task_id and repo.kind_of(cell.row) is FragmentKind.PRODUCER:
                producers.append(cell.row)
        return {
            "id": task_id,
            "techniques": sorted(techniques),
            "producers": sorted(producers),
            "work_products": sorted(work_products),
        }

    linked: dict[str, set[str]] = {}
    for task_id in order:
        owner = repo.fragment(task_id).owner_process
        if owner is not None:
            linked.setdefault(owner, set()).add(task_id)
    for cell in repo.cells:
        if (
            repo.kind_of(cell.row) is FragmentKind.PROCESS
            and cell.col in position
        ):
            linked.setdefault(cell.row, set()).add(cell.col)

    processes = []
    for process_id in sorted(
        i for i in construction.selection if repo.kind_of(i) is FragmentKind.PROCESS
    ):
        section_tasks = sorted(linked.get(process_id, ()), key=position.__getitem__)
        processes.append(
            {
                "id": process_id,
                "tasks": [task_section(t) for t in section_tasks],
            }
        )

    return {
        "name": construction.name,
        "processes": processes,
        "task_order": order,
    }


# --- wire/document forms ----------------------------------------------------


def finding_to_doc(finding: DeonticFinding) -> dict[str, Any]:
    return {
        "severity": finding.severity.value,
        "code": finding.code.value,
        "cell": {
            "row": finding.cell.row,
            "col": finding.cell.col,
            "value": finding.cell.value.value,
        },
    }


def report_to_doc(report: AssemblyReport) -> dict[str, Any]:
    return {
        "ok": report.ok,
        "deontic": [finding_to_doc(f) for f in report.deontic],
        "structural": [
            {"code": s.code, "subjects": list(s.subjects)} for s in report.structural
        ],
        "precedence": [
            {"before": e.before, "after": e.after, "source": e.source}
            for e in report.precedence
        ],
    }


def construction_to_doc(construction: MethodConstruction) -> dict[str, Any]:
    return {
        "name": construction.name,
        "selection": sorted(construction.selection),
        "stage_of": {k: construction.stage_of[k] for k in sorted(construction.stage_of)},
        "notes": construction.notes,
    }


def export_to_text(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
