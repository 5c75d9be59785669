"""Deontic-matrix semantics over a fragment selection.

Mandatory cells pull the finer-grained side of a relation into a selection
(:func:`required_closure`); forbidden cells exclude co-presence; recommended
and discouraged cells only ever produce advisory findings.

Which side of a cell creates the obligation follows the granularity of the
pair: the coarser fragment governs. A chosen process mandates its tasks, a
chosen task mandates its techniques, work products, and producers, and a
chosen work product mandates its language. Producer/work-product cells are
purely advisory and never produce errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from smeforge.metamodel import DeonticValue, FragmentKind
from smeforge.repository import DeonticCell, Repository


class FindingSeverity(str, Enum):
    ERROR = "error"
    WARNING = "warning"
    SUGGESTION = "suggestion"


class FindingCode(str, Enum):
    MISSING_MANDATORY = "MISSING_MANDATORY"
    FORBIDDEN_PRESENT = "FORBIDDEN_PRESENT"
    DISCOURAGED_PRESENT = "DISCOURAGED_PRESENT"
    RECOMMENDED_ABSENT = "RECOMMENDED_ABSENT"


SEVERITY_OF = {
    FindingCode.MISSING_MANDATORY: FindingSeverity.ERROR,
    FindingCode.FORBIDDEN_PRESENT: FindingSeverity.ERROR,
    FindingCode.DISCOURAGED_PRESENT: FindingSeverity.WARNING,
    FindingCode.RECOMMENDED_ABSENT: FindingSeverity.SUGGESTION,
}

_CODE_ORDER = {code: i for i, code in enumerate(FindingCode)}


@dataclass(frozen=True)
class DeonticFinding:
    severity: FindingSeverity
    code: FindingCode
    cell: DeonticCell


def _finding(code: FindingCode, cell: DeonticCell) -> DeonticFinding:
    return DeonticFinding(SEVERITY_OF[code], code, cell)


# For each legal pair, which side governs the obligation ("row" or "col").
# Producer/work-product has no governing side: advisory only.
_GOVERNOR: dict[tuple[FragmentKind, FragmentKind], Optional[str]] = {
    (FragmentKind.PROCESS, FragmentKind.TASK): "row",
    (FragmentKind.TASK, FragmentKind.TECHNIQUE): "row",
    (FragmentKind.TASK, FragmentKind.WORK_PRODUCT): "row",
    (FragmentKind.PRODUCER, FragmentKind.TASK): "col",
    (FragmentKind.WORK_PRODUCT, FragmentKind.LANGUAGE): "row",
    (FragmentKind.PRODUCER, FragmentKind.WORK_PRODUCT): None,
}


def _governed_sides(repo: Repository, cell: DeonticCell) -> Optional[tuple[str, str]]:
    """Return (governor id, counterpart id) or None for advisory-only pairs."""
    side = _GOVERNOR[(repo.kind_of(cell.row), repo.kind_of(cell.col))]
    if side is None:
        return None
    if side == "row":
        return cell.row, cell.col
    return cell.col, cell.row


def _check_selection(repo: Repository, chosen: Iterable[str]) -> frozenset[str]:
    ids = frozenset(chosen)
    for fragment_id in sorted(ids):
        repo.fragment(fragment_id)  # raises UNKNOWN_ID
    return ids


def required_closure(repo: Repository, chosen: Iterable[str]) -> frozenset[str]:
    """Least fixed point of the mandatory-pull rule over a selection.

    Whenever a chosen fragment governs a mandatory cell, the counterpart is
    added; repeats until stable. Monotonic and idempotent; the result is
    always a superset of the input.
    """
    selected = set(_check_selection(repo, chosen))
    pulls: dict[str, list[str]] = {}
    for cell in repo.cells:
        if cell.value is not DeonticValue.MANDATORY:
            continue
        sides = _governed_sides(repo, cell)
        if sides is None:
            continue
        governor, counterpart = sides
        pulls.setdefault(governor, []).append(counterpart)

    worklist = list(selected)
    while worklist:
        fragment_id = worklist.pop()
        for counterpart in pulls.get(fragment_id, ()):
            if counterpart not in selected:
                selected.add(counterpart)
                worklist.append(counterpart)
    return frozenset(selected)


def selection_findings(repo: Repository, chosen: Iterable[str]) -> list[DeonticFinding]:
    """Report every deontic obligation the selection violates or ignores.

    MISSING_MANDATORY and FORBIDDEN_PRESENT are errors, DISCOURAGED_PRESENT
    a warning, RECOMMENDED_ABSENT a suggestion; optional cells never produce
    findings. Output order is deterministic: by (code, row, col).
    """
    ids = _check_selection(repo, chosen)
    findings: list[DeonticFinding] = []
    for cell in repo.cells:
        sides = _governed_sides(repo, cell)
        if cell.value is DeonticValue.MANDATORY:
            if sides is None:
                continue
            governor, counterpart = sides
            if governor in ids and counterpart not in ids:
                findings.append(_finding(FindingCode.MISSING_MANDATORY, cell))
        elif cell.value is DeonticValue.FORBIDDEN:
            # Co-presence is the violation regardless of direction, but
            # advisory-only pairs never produce errors.
            if sides is None:
                continue
            if cell.row in ids and cell.col in ids:
                findings.append(_finding(FindingCode.FORBIDDEN_PRESENT, cell))
        elif cell.value is DeonticValue.DISCOURAGED:
            if cell.row in ids and cell.col in ids:
                findings.append(_finding(FindingCode.DISCOURAGED_PRESENT, cell))
        elif cell.value is DeonticValue.RECOMMENDED:
            if sides is None:
                continue
            governor, counterpart = sides
            if governor in ids and counterpart not in ids:
                findings.append(_finding(FindingCode.RECOMMENDED_ABSENT, cell))
    findings.sort(key=lambda f: (_CODE_ORDER[f.code], f.cell.row, f.cell.col))
    return findings


def error_findings(findings: Iterable[DeonticFinding]) -> list[DeonticFinding]:
    return [f for f in findings if f.severity is FindingSeverity.ERROR]
