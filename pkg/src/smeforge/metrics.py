"""Coverage metrics over a corpus of existing methodologies.

Each corpus entry lists the tasks of one methodology and the repository
fragments each task maps to. Method coverage for an entry is the exact
rational NT / SMF, where NT is the entry's task count and SMF counts the
service-oriented task fragments in the evaluated fragment set. Displayed
values truncate (never round) at three decimals. Domain coverage is the
binary question of whether every task of every entry maps to at least one
fragment; the stricter all-ratios-equal-one reading is exposed separately
as ``dc_literal``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Any, Mapping

from smeforge.errors import (
    EmptyFragmentSetError,
    SchemaError,
    UnknownFragmentError,
)
from smeforge.metamodel import FragmentKind
from smeforge.repository import Origin, Repository, parse_json


@dataclass(frozen=True)
class SdmTask:
    name: str
    fragments: tuple[str, ...] = ()


@dataclass(frozen=True)
class SdmCorpusEntry:
    name: str
    tasks: tuple[SdmTask, ...]

    @property
    def nt(self) -> int:
        return len(self.tasks)


@dataclass(frozen=True)
class Corpus:
    entries: tuple[SdmCorpusEntry, ...]

    @property
    def n(self) -> int:
        return len(self.entries)


def truncate_thousandths(value: Fraction) -> str:
    """Truncate toward zero at three decimals: 3/16 -> "0.187"."""
    thousandths = (value.numerator * 1000) // value.denominator
    return f"{thousandths // 1000}.{thousandths % 1000:03d}"


def default_fragment_set(repo: Repository) -> frozenset[str]:
    """The full evaluated set: every service-oriented fragment id."""
    return frozenset(
        f.id for f in repo.fragments if f.origin is Origin.SO_EXTENSION
    )


def counted_task_fragments(repo: Repository, fragment_set: AbstractSet[str]) -> int:
    """SMF: service-oriented task fragments within the evaluated set."""
    return sum(
        1
        for fragment_id in fragment_set
        if fragment_id in repo
        and repo.fragment(fragment_id).kind is FragmentKind.TASK
        and repo.fragment(fragment_id).origin is Origin.SO_EXTENSION
    )


@dataclass(frozen=True)
class MethodCoverage:
    nt: int
    smf: int
    mc_exact: Fraction
    mc_display: str
    fully_covered: bool


def method_coverage(
    entry: SdmCorpusEntry,
    fragment_set: AbstractSet[str],
    repo: Repository,
) -> MethodCoverage:
    """Coverage of one methodology by the evaluated fragment set.

    Every mapped fragment must be in the set or be a baseline stub known to
    the repository; baseline stubs never count toward SMF.
    """
    smf = counted_task_fragments(repo, fragment_set)
    if smf == 0:
        raise EmptyFragmentSetError(
            "fragment set contains no service-oriented task fragments"
        )
    for task in entry.tasks:
        for fragment_id in task.fragments:
            if fragment_id in fragment_set:
                continue
            if (
                fragment_id in repo
                and repo.fragment(fragment_id).origin is Origin.OPF_BASELINE
            ):
                continue
            raise UnknownFragmentError(
                f"entry {entry.name!r}, task {task.name!r}: "
                f"fragment {fragment_id!r} is neither in the evaluated set "
                "nor a known baseline stub",
                subjects=[fragment_id],
            )
    mc_exact = Fraction(entry.nt, smf)
    return MethodCoverage(
        nt=entry.nt,
        smf=smf,
        mc_exact=mc_exact,
        mc_display=truncate_thousandths(mc_exact),
        fully_covered=all(task.fragments for task in entry.tasks),
    )


@dataclass(frozen=True)
class SdmCoverageRow:
    name: str
    nt: int
    smf: int
    mc_exact: Fraction
    mc_display: str
    fully_covered: bool


@dataclass(frozen=True)
class CoverageReport:
    per_sdm: tuple[SdmCoverageRow, ...]
    dc: int
    dc_literal: int


def domain_coverage(
    corpus: Corpus,
    fragment_set: AbstractSet[str],
    repo: Repository,
) -> CoverageReport:
    """Per-entry coverage plus the binary domain-coverage verdicts."""
    rows = []
    for entry in corpus.entries:
        mc = method_coverage(entry, fragment_set, repo)
        rows.append(
            SdmCoverageRow(
                name=entry.name,
                nt=mc.nt,
                smf=mc.smf,
                mc_exact=mc.mc_exact,
                mc_display=mc.mc_display,
                fully_covered=mc.fully_covered,
            )
        )
    dc = 1 if rows and all(r.fully_covered for r in rows) else 0
    dc_literal = 1 if rows and all(r.mc_exact == 1 for r in rows) else 0
    return CoverageReport(tuple(rows), dc, dc_literal)


def corpus_report(
    corpus: Corpus,
    fragment_set: AbstractSet[str],
    repo: Repository,
    fmt: str = "table",
) -> str:
    """Render domain coverage as a human table or a machine document."""
    report = domain_coverage(corpus, fragment_set, repo)
    if fmt == "machine":
        return json.dumps(coverage_report_to_doc(report), indent=2, ensure_ascii=False) + "\n"
    width = max([len("SDM"), *(len(r.name) for r in report.per_sdm)])
    lines = [f"{'SDM':<{width}}  {'NT':>3}  {'SMF':>3}  MC"]
    for row in report.per_sdm:
        lines.append(f"{row.name:<{width}}  {row.nt:>3}  {row.smf:>3}  {row.mc_display}")
    lines.append(f"DC = {report.dc}")
    return "\n".join(lines) + "\n"


# --- wire/document forms ----------------------------------------------------


def coverage_report_to_doc(report: CoverageReport) -> dict[str, Any]:
    return {
        "per_sdm": [
            {
                "name": row.name,
                "nt": row.nt,
                "smf": row.smf,
                "mc_exact": {
                    "numerator": row.mc_exact.numerator,
                    "denominator": row.mc_exact.denominator,
                },
                "mc_display": row.mc_display,
                "fully_covered": row.fully_covered,
            }
            for row in report.per_sdm
        ],
        "dc": report.dc,
        "dc_literal": report.dc_literal,
    }


def coverage_report_from_doc(doc: Mapping[str, Any]) -> CoverageReport:
    rows = tuple(
        SdmCoverageRow(
            name=row["name"],
            nt=row["nt"],
            smf=row["smf"],
            mc_exact=Fraction(
                row["mc_exact"]["numerator"], row["mc_exact"]["denominator"]
            ),
            mc_display=row["mc_display"],
            fully_covered=row["fully_covered"],
        )
        for row in doc["per_sdm"]
    )
    return CoverageReport(rows, doc["dc"], doc["dc_literal"])


def load_corpus(text: str) -> Corpus:
    """Parse a corpus file: {"sdms": [{"name", "tasks": [...]}, ...]}."""
    return load_corpus_doc(parse_json(text, "corpus"))


def load_corpus_doc(doc: Any) -> Corpus:
    if not isinstance(doc, dict) or "sdms" not in doc:
        raise SchemaError("corpus: expected an object with an 'sdms' list")
    entries = []
    seen_names: set[str] = set()
    for i, entry_doc in enumerate(doc["sdms"]):
        where = f"sdms[{i}]"
        if not isinstance(entry_doc, dict):
            raise SchemaError(f"{where}: expected object")
        name = entry_doc.get("name")
        tasks_doc = entry_doc.get("tasks")
        if not isinstance(name, str) or not isinstance(tasks_doc, list):
            raise SchemaError(f"{where}: requires string 'name' and list 'tasks'")
        if name in seen_names:
            raise SchemaError(f"{where}: duplicate entry name {name!r}")
        seen_names.add(name)
        if not tasks_doc:
            raise SchemaError(f"{where}: an entry needs at least one task")
        tasks = []
        seen_tasks: set[str] = set()
        for j, task_doc in enumerate(tasks_doc):
            task_where = f"{where}.tasks[{j}]"
            if not isinstance(task_doc, dict) or not isinstance(task_doc.get("name"), str):
                raise SchemaError(f"{task_where}: requires string 'name'")
            task_name = task_doc["name"]
            if task_name in seen_tasks:
                raise SchemaError(f"{task_where}: duplicate task name {task_name!r}")
            seen_tasks.add(task_name)
            fragments_doc = task_doc.get("fragments", [])
            if not isinstance(fragments_doc, list) or not all(
                isinstance(f, str) for f in fragments_doc
            ):
                raise SchemaError(f"{task_where}: 'fragments' must be a list of ids")
            tasks.append(SdmTask(task_name, tuple(fragments_doc)))
        entries.append(SdmCorpusEntry(name, tuple(tasks)))
    return Corpus(tuple(entries))
