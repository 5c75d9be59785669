"""Kind system and legality rules for method fragments.

A fragment is one of seven kinds. Work units come in three granularities
(process, task, technique); the remaining kinds are work product, producer,
language, and stage. Deontic relations are only meaningful between certain
ordered kind pairs; :func:`classify_pair` is the single authority on which
pairs those are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from smeforge.repository import MethodFragment


class FragmentKind(str, Enum):
    """The seven kinds of repository entry."""

    PROCESS = "process"
    TASK = "task"
    TECHNIQUE = "technique"
    WORK_PRODUCT = "work_product"
    PRODUCER = "producer"
    LANGUAGE = "language"
    STAGE = "stage"


#: The three abstraction levels of work units, coarse to fine.
WORK_UNIT_KINDS = (FragmentKind.PROCESS, FragmentKind.TASK, FragmentKind.TECHNIQUE)


class DeonticValue(str, Enum):
    """Five-scale relation strength between two fragments.

    MANDATORY and FORBIDDEN carry hard validation force; RECOMMENDED and
    DISCOURAGED are advisory; OPTIONAL is neutral and never reported on.
    """

    MANDATORY = "M"
    RECOMMENDED = "R"
    OPTIONAL = "O"
    DISCOURAGED = "D"
    FORBIDDEN = "F"


class PairLegality(str, Enum):
    LEGAL = "legal"
    ILLEGAL = "illegal"


#: The six ordered kind pairs a deontic cell may relate. The orientation is
#: canonical: the first-listed kind is the row, the second the column, and
#: reversed pairs are illegal.
LEGAL_PAIRS: frozenset[tuple[FragmentKind, FragmentKind]] = frozenset(
    {
        (FragmentKind.PROCESS, FragmentKind.TASK),
        (FragmentKind.TASK, FragmentKind.TECHNIQUE),
        (FragmentKind.PRODUCER, FragmentKind.TASK),
        (FragmentKind.TASK, FragmentKind.WORK_PRODUCT),
        (FragmentKind.PRODUCER, FragmentKind.WORK_PRODUCT),
        (FragmentKind.WORK_PRODUCT, FragmentKind.LANGUAGE),
    }
)


def classify_pair(row_kind: FragmentKind, col_kind: FragmentKind) -> PairLegality:
    """Classify an ordered (row kind, column kind) pair.

    Total and deterministic: exactly six of the 49 ordered pairs are legal.
    """
    if (row_kind, col_kind) in LEGAL_PAIRS:
        return PairLegality.LEGAL
    return PairLegality.ILLEGAL


#: Fragment ids are lowercase hyphenated slugs, at most 80 characters.
MAX_ID_LENGTH = 80
SLUG_PATTERN = re.compile(r"[a-z0-9]+(-[a-z0-9]+)*\Z")


def is_valid_id(fragment_id: str) -> bool:
    return (
        0 < len(fragment_id) <= MAX_ID_LENGTH
        and SLUG_PATTERN.match(fragment_id) is not None
    )


def slugify(name: str) -> str:
    """Derive the canonical slug id from a display name."""
    slug = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    return slug[:MAX_ID_LENGTH].rstrip("-")


@dataclass(frozen=True)
class ValidationIssue:
    """One problem found on a single fragment."""

    code: str
    message: str


def validate_fragment(fragment: "MethodFragment") -> list[ValidationIssue]:
    """Check one fragment for metamodel conformance.

    Problems are returned as report entries, never raised; the input is not
    mutated. An empty report means the id is a well-formed slug, the kind is
    a valid :class:`FragmentKind`, and the name is non-empty.
    """
    issues: list[ValidationIssue] = []
    if not fragment.id or not is_valid_id(fragment.id):
        issues.append(
            ValidationIssue(
                "BAD_ID",
                f"id {fragment.id!r} is not a lowercase hyphenated slug "
                f"of at most {MAX_ID_LENGTH} characters",
            )
        )
    if not isinstance(fragment.kind, FragmentKind):
        issues.append(
            ValidationIssue("BAD_KIND", f"kind {fragment.kind!r} is not a fragment kind")
        )
    if not fragment.name or not fragment.name.strip():
        issues.append(ValidationIssue("EMPTY_NAME", f"fragment {fragment.id!r} has no name"))
    return issues
