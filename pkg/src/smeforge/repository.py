"""Fragment repository: loading, validation, persistence, and queries.

A repository is an immutable value holding fragments, the deontic cells
relating them, and precedence edges between tasks. Loading enforces every
invariant; mutation happens only by constructing a new repository. The file
format is JSON with a fixed field layout (see :func:`save_repository` for
the canonical ordering that makes serialization deterministic).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Iterator, Mapping, Optional

from smeforge.errors import IntegrityError, ParseError, SchemaError, UnknownIdError
from smeforge.metamodel import (
    DeonticValue,
    FragmentKind,
    PairLegality,
    classify_pair,
    validate_fragment,
)


class Origin(str, Enum):
    """Where a fragment comes from.

    ``SO_EXTENSION`` entries are the service-oriented additions this
    repository is about; ``OPF_BASELINE`` entries are stubs for fragments
    defined in the pre-existing OPEN Process Framework repository.
    """

    SO_EXTENSION = "so-extension"
    OPF_BASELINE = "opf-baseline"


@dataclass(frozen=True)
class MethodFragment:
    """One repository entry."""

    id: str
    name: str
    kind: FragmentKind
    description: str = ""
    origin: Origin = Origin.SO_EXTENSION
    owner_process: Optional[str] = None
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True)
class DeonticCell:
    """A (row fragment, column fragment, value) relation."""

    row: str
    col: str
    value: DeonticValue


@dataclass(frozen=True)
class PrecedenceConstraint:
    """A before -> after edge between two task fragments."""

    before: str
    after: str
    source: str = ""


@dataclass(frozen=True)
class RepositoryMeta:
    name: str
    version: str


@dataclass(frozen=True, eq=False)
class Repository:
    """Immutable collection of fragments, cells, and precedence edges.

    Construct via :meth:`build` (validating) or :func:`load_repository`;
    the raw dataclass constructor performs no invariant checks.
    """

    meta: RepositoryMeta
    fragments: tuple[MethodFragment, ...]
    cells: tuple[DeonticCell, ...]
    precedence: tuple[PrecedenceConstraint, ...]

    @classmethod
    def build(
        cls,
        meta: RepositoryMeta,
        fragments: Iterable[MethodFragment],
        cells: Iterable[DeonticCell] = (),
        precedence: Iterable[PrecedenceConstraint] = (),
    ) -> "Repository":
        repo = cls(meta, tuple(fragments), tuple(cells), tuple(precedence))
        check_repository(repo)
        return repo

    @property
    def by_id(self) -> Mapping[str, MethodFragment]:
        index = self.__dict__.get("_by_id")
        if index is None:
            index = {f.id: f for f in self.fragments}
            self.__dict__["_by_id"] = index
        return index

    def fragment(self, fragment_id: str) -> MethodFragment:
        try:
            return self.by_id[fragment_id]
        except KeyError:
            raise UnknownIdError(
                f"unknown fragment id {fragment_id!r}", subjects=[fragment_id]
            ) from None

    def kind_of(self, fragment_id: str) -> FragmentKind:
        return self.fragment(fragment_id).kind

    def __contains__(self, fragment_id: str) -> bool:
        return fragment_id in self.by_id

    def __iter__(self) -> Iterator[MethodFragment]:
        return iter(self.fragments)

    def __eq__(self, other: object) -> bool:
        # Structural equality: collection order is irrelevant, so a
        # repository equals its canonically re-ordered twin.
        if not isinstance(other, Repository):
            return NotImplemented
        return (
            self.meta == other.meta
            and frozenset(self.fragments) == frozenset(other.fragments)
            and frozenset(self.cells) == frozenset(other.cells)
            and frozenset(self.precedence) == frozenset(other.precedence)
        )

    __hash__ = None  # type: ignore[assignment]


def check_repository(repo: Repository) -> None:
    """Raise :class:`IntegrityError` unless every repository invariant holds."""
    problems: list[str] = []
    subjects: list[str] = []

    seen: set[str] = set()
    for fragment in repo.fragments:
        if fragment.id in seen:
            problems.append(f"duplicate fragment id {fragment.id!r}")
            subjects.append(fragment.id)
        seen.add(fragment.id)
        for issue in validate_fragment(fragment):
            problems.append(f"fragment {fragment.id!r}: {issue.code}: {issue.message}")
            subjects.append(fragment.id)

    by_id = {f.id: f for f in repo.fragments}

    # Names and aliases share one case-insensitive namespace across fragments.
    label_owner: dict[str, str] = {}
    for fragment in repo.fragments:
        for label in (fragment.name, *fragment.aliases):
            key = label.strip().lower()
            owner = label_owner.get(key)
            if owner is not None and owner != fragment.id:
                problems.append(
                    f"label {label!r} of {fragment.id!r} collides with {owner!r}"
                )
                subjects.extend([fragment.id, owner])
            else:
                label_owner[key] = fragment.id

    for fragment in repo.fragments:
        if fragment.owner_process is None:
            continue
        if fragment.kind is not FragmentKind.TASK:
            problems.append(
                f"fragment {fragment.id!r} has owner_process but is not a task"
            )
            subjects.append(fragment.id)
        owner = by_id.get(fragment.owner_process)
        if owner is None:
            problems.append(
                f"fragment {fragment.id!r} references missing owner_process "
                f"{fragment.owner_process!r}"
            )
            subjects.append(fragment.id)
        elif owner.kind is not FragmentKind.PROCESS:
            problems.append(
                f"owner_process {fragment.owner_process!r} of {fragment.id!r} "
                "is not a process"
            )
            subjects.append(fragment.id)

    seen_cells: set[tuple[str, str]] = set()
    for cell in repo.cells:
        missing = [i for i in (cell.row, cell.col) if i not in by_id]
        if missing:
            problems.append(
                f"cell ({cell.row!r}, {cell.col!r}) references missing ids {missing}"
            )
            subjects.extend(missing)
            continue
        row_kind = by_id[cell.row].kind
        col_kind = by_id[cell.col].kind
        if classify_pair(row_kind, col_kind) is PairLegality.ILLEGAL:
            problems.append(
                f"cell ({cell.row!r}, {cell.col!r}) relates illegal kind pair "
                f"({row_kind.value}, {col_kind.value})"
            )
            subjects.extend([cell.row, cell.col])
        if (cell.row, cell.col) in seen_cells:
            problems.append(f"duplicate cell ({cell.row!r}, {cell.col!r})")
            subjects.extend([cell.row, cell.col])
        seen_cells.add((cell.row, cell.col))

    seen_edges: set[tuple[str, str]] = set()
    for edge in repo.precedence:
        missing = [i for i in (edge.before, edge.after) if i not in by_id]
        if missing:
            problems.append(
                f"edge ({edge.before!r}, {edge.after!r}) references missing ids {missing}"
            )
            subjects.extend(missing)
            continue
        if edge.before == edge.after:
            problems.append(f"edge ({edge.before!r}, {edge.after!r}) is a self-loop")
            subjects.append(edge.before)
        for endpoint in (edge.before, edge.after):
            if by_id[endpoint].kind is not FragmentKind.TASK:
                problems.append(
                    f"edge endpoint {endpoint!r} is not a task"
                )
                subjects.append(endpoint)
        if (edge.before, edge.after) in seen_edges:
            problems.append(f"duplicate edge ({edge.before!r}, {edge.after!r})")
            subjects.extend([edge.before, edge.after])
        seen_edges.add((edge.before, edge.after))

    cycle = find_cycle((e.before, e.after) for e in repo.precedence)
    if cycle:
        problems.append("precedence cycle: " + " -> ".join(cycle))
        subjects.extend(cycle)

    if problems:
        raise IntegrityError("; ".join(problems), subjects=subjects)


def find_cycle(edges: Iterable[tuple[str, str]]) -> list[str]:
    """Return the node ids of one directed cycle, or [] if the graph is acyclic.

    Iterative DFS, so arbitrarily long chains cannot exhaust the stack.
    """
    adjacency: dict[str, list[str]] = {}
    for before, after in edges:
        adjacency.setdefault(before, []).append(after)
        adjacency.setdefault(after, [])

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {node: WHITE for node in adjacency}

    for start in sorted(adjacency):
        if color[start] != WHITE:
            continue
        color[start] = GRAY
        path = [start]
        pending = [iter(adjacency[start])]
        while pending:
            advanced = False
            for successor in pending[-1]:
                if color[successor] == GRAY:
                    return path[path.index(successor):]
                if color[successor] == WHITE:
                    color[successor] = GRAY
                    path.append(successor)
                    pending.append(iter(adjacency[successor]))
                    advanced = True
                    break
            if not advanced:
                color[path.pop()] = BLACK
                pending.pop()
    return []


# --- persistence -----------------------------------------------------------

_FRAGMENT_FIELDS = {"id", "name", "kind", "description", "origin", "owner_process", "aliases"}
_CELL_FIELDS = {"row", "col", "value"}
_EDGE_FIELDS = {"before", "after", "source"}


def _expect(obj: Any, typ: type, where: str) -> Any:
    if not isinstance(obj, typ):
        raise SchemaError(f"{where}: expected {typ.__name__}, got {type(obj).__name__}")
    return obj


def _expect_str(mapping: Mapping[str, Any], key: str, where: str) -> str:
    if key not in mapping:
        raise SchemaError(f"{where}: missing field {key!r}")
    return _expect(mapping[key], str, f"{where}.{key}")


def _parse_fragment(doc: Mapping[str, Any], where: str) -> MethodFragment:
    unknown = set(doc) - _FRAGMENT_FIELDS
    if unknown:
        raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")
    kind_raw = _expect_str(doc, "kind", where)
    try:
        kind = FragmentKind(kind_raw)
    except ValueError:
        raise SchemaError(f"{where}: unknown kind {kind_raw!r}") from None
    origin_raw = _expect_str(doc, "origin", where)
    try:
        origin = Origin(origin_raw)
    except ValueError:
        raise SchemaError(f"{where}: unknown origin {origin_raw!r}") from None
    aliases_raw = doc.get("aliases", [])
    _expect(aliases_raw, list, f"{where}.aliases")
    aliases = tuple(_expect(a, str, f"{where}.aliases[]") for a in aliases_raw)
    owner = doc.get("owner_process")
    if owner is not None:
        _expect(owner, str, f"{where}.owner_process")
    return MethodFragment(
        id=_expect_str(doc, "id", where),
        name=_expect_str(doc, "name", where),
        kind=kind,
        description=_expect_str(doc, "description", where),
        origin=origin,
        owner_process=owner,
        aliases=aliases,
    )


def _parse_cell(doc: Mapping[str, Any], where: str) -> DeonticCell:
    unknown = set(doc) - _CELL_FIELDS
    if unknown:
        raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")
    value_raw = _expect_str(doc, "value", where)
    try:
        value = DeonticValue(value_raw)
    except ValueError:
        raise SchemaError(f"{where}: unknown deontic value {value_raw!r}") from None
    return DeonticCell(
        row=_expect_str(doc, "row", where),
        col=_expect_str(doc, "col", where),
        value=value,
    )


def _parse_edge(doc: Mapping[str, Any], where: str) -> PrecedenceConstraint:
    unknown = set(doc) - _EDGE_FIELDS
    if unknown:
        raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")
    return PrecedenceConstraint(
        before=_expect_str(doc, "before", where),
        after=_expect_str(doc, "after", where),
        source=_expect_str(doc, "source", where),
    )


def parse_json(text: str, where: str = "document") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{where}: {exc}") from None


def load_repository(text: str) -> Repository:
    """Parse and validate a repository document.

    Loading is loss-free: every field of every entry is preserved. Raises
    PARSE_ERROR for malformed JSON, SCHEMA_ERROR for shape problems, and
    INTEGRITY_ERROR (naming the offending ids) for invariant violations.
    """
    doc = parse_json(text, "repository")
    _expect(doc, dict, "repository")
    unknown = set(doc) - {"meta", "fragments", "deontic_cells", "precedence"}
    if unknown:
        raise SchemaError(f"repository: unknown fields {sorted(unknown)}")
    meta_doc = doc.get("meta")
    if meta_doc is None:
        raise SchemaError("repository: missing field 'meta'")
    _expect(meta_doc, dict, "repository.meta")
    meta = RepositoryMeta(
        name=_expect_str(meta_doc, "name", "repository.meta"),
        version=_expect_str(meta_doc, "version", "repository.meta"),
    )
    fragments = [
        _parse_fragment(_expect(f, dict, f"fragments[{i}]"), f"fragments[{i}]")
        for i, f in enumerate(_expect(doc.get("fragments", []), list, "fragments"))
    ]
    cells = [
        _parse_cell(_expect(c, dict, f"deontic_cells[{i}]"), f"deontic_cells[{i}]")
        for i, c in enumerate(_expect(doc.get("deontic_cells", []), list, "deontic_cells"))
    ]
    precedence = [
        _parse_edge(_expect(e, dict, f"precedence[{i}]"), f"precedence[{i}]")
        for i, e in enumerate(_expect(doc.get("precedence", []), list, "precedence"))
    ]
    return Repository.build(meta, fragments, cells, precedence)


def fragment_to_doc(fragment: MethodFragment) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "id": fragment.id,
        "name": fragment.name,
        "kind": fragment.kind.value,
        "description": fragment.description,
        "origin": fragment.origin.value,
    }
    if fragment.owner_process is not None:
        doc["owner_process"] = fragment.owner_process
    if fragment.aliases:
        doc["aliases"] = list(fragment.aliases)
    return doc


def repository_to_doc(repo: Repository) -> dict[str, Any]:
    """Canonical document form: fragments by id, cells by (row, col), edges
    by (before, after)."""
    return {
        "meta": {"name": repo.meta.name, "version": repo.meta.version},
        "fragments": [
            fragment_to_doc(f) for f in sorted(repo.fragments, key=lambda f: f.id)
        ],
        "deontic_cells": [
            {"row": c.row, "col": c.col, "value": c.value.value}
            for c in sorted(repo.cells, key=lambda c: (c.row, c.col))
        ],
        "precedence": [
            {"before": e.before, "after": e.after, "source": e.source}
            for e in sorted(repo.precedence, key=lambda e: (e.before, e.after))
        ],
    }


def save_repository(repo: Repository) -> str:
    """Serialize to the canonical form; saving twice is byte-identical."""
    return json.dumps(repository_to_doc(repo), indent=2, ensure_ascii=False) + "\n"


# --- queries ----------------------------------------------------------------


def query(
    repo: Repository,
    *,
    kind: Optional[FragmentKind] = None,
    origin: Optional[Origin] = None,
    owner_process: Optional[str] = None,
    name_contains: Optional[str] = None,
) -> list[MethodFragment]:
    """Return the fragments matching every provided filter, sorted by id.

    ``name_contains`` matches case-insensitively against the name and any
    alias; an empty filter returns all fragments.
    """
    needle = name_contains.lower() if name_contains is not None else None
    results = []
    for fragment in repo.fragments:
        if kind is not None and fragment.kind is not kind:
            continue
        if origin is not None and fragment.origin is not origin:
            continue
        if owner_process is not None and fragment.owner_process != owner_process:
            continue
        if needle is not None:
            labels = (fragment.name, *fragment.aliases)
            if not any(needle in label.lower() for label in labels):
                continue
        results.append(fragment)
    return sorted(results, key=lambda f: f.id)


@dataclass(frozen=True)
class Relations:
    """Everything directly connected to one fragment."""

    cells: tuple[DeonticCell, ...]
    predecessors: tuple[str, ...]
    successors: tuple[str, ...]


def relations_of(repo: Repository, fragment_id: str) -> Relations:
    """All deontic cells touching the fragment plus its precedence edges."""
    repo.fragment(fragment_id)  # raises UNKNOWN_ID
    cells = tuple(
        sorted(
            (c for c in repo.cells if fragment_id in (c.row, c.col)),
            key=lambda c: (c.row, c.col),
        )
    )
    predecessors = tuple(
        sorted(e.before for e in repo.precedence if e.after == fragment_id)
    )
    successors = tuple(
        sorted(e.after for e in repo.precedence if e.before == fragment_id)
    )
    return Relations(cells, predecessors, successors)
