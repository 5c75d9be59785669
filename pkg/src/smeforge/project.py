"""Usability of the fragment repository against one project's method needs.

A project file lists the requirements a tailored method must satisfy and,
per requirement, the task and technique fragments chosen to satisfy it. A
requirement counts as met when at least one task fragment is mapped to it;
techniques alone do not satisfy a requirement. Usability is the percentage
of requirements met, kept exact as a rational and truncated for display.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from smeforge.errors import NoRequirementsError, SchemaError, UnknownFragmentError
from smeforge.repository import Repository, parse_json


@dataclass(frozen=True)
class Requirement:
    id: str
    title: str
    explanation: str = ""
    tasks: tuple[str, ...] = ()
    techniques: tuple[str, ...] = ()

    @property
    def met(self) -> bool:
        return bool(self.tasks)


@dataclass(frozen=True)
class ProjectSpec:
    name: str
    requirements: tuple[Requirement, ...]


@dataclass(frozen=True)
class UsabilityReport:
    total: int
    met: int
    percent_exact: Fraction
    percent_display: int
    unmet: tuple[str, ...]
    implied_selection: frozenset[str]


def usability(project: ProjectSpec) -> UsabilityReport:
    """Usability percentage: 100 * met / total, truncated toward zero."""
    total = len(project.requirements)
    if total == 0:
        raise NoRequirementsError(f"project {project.name!r} has no requirements")
    met = sum(1 for r in project.requirements if r.met)
    implied = frozenset(
        fragment_id
        for r in project.requirements
        for fragment_id in (*r.tasks, *r.techniques)
    )
    return UsabilityReport(
        total=total,
        met=met,
        percent_exact=Fraction(100 * met, total),
        percent_display=(100 * met) // total,
        unmet=tuple(r.id for r in project.requirements if not r.met),
        implied_selection=implied,
    )


def project_report(project: ProjectSpec, repo: Repository, fmt: str = "table") -> str:
    """Per-requirement mapping table followed by the usability figures.

    Every mapped fragment id must resolve in the repository.
    """
    for requirement in project.requirements:
        for fragment_id in (*requirement.tasks, *requirement.techniques):
            if fragment_id not in repo:
                raise UnknownFragmentError(
                    f"requirement {requirement.id}: unknown fragment {fragment_id!r}",
                    subjects=[requirement.id, fragment_id],
                )
    report = usability(project)
    if fmt == "machine":
        return (
            json.dumps(project_report_to_doc(project, report), indent=2, ensure_ascii=False)
            + "\n"
        )
    lines = [f"Project: {project.name}"]
    for requirement in project.requirements:
        lines.append(f"{requirement.id}  {requirement.title}")
        if requirement.explanation:
            lines.append(f"    {requirement.explanation}")
        if requirement.met:
            task_names = ", ".join(repo.fragment(i).name for i in requirement.tasks)
            lines.append(f"    Tasks: {task_names}")
            if requirement.techniques:
                technique_names = ", ".join(
                    repo.fragment(i).name for i in requirement.techniques
                )
                lines.append(f"    Techniques: {technique_names}")
        else:
            lines.append("    Not supported")
    lines.append(
        f"Usability(%) = {report.met} / {report.total} ({report.percent_display}%)"
    )
    if report.unmet:
        lines.append("Unmet: " + ", ".join(report.unmet))
    return "\n".join(lines) + "\n"


# --- wire/document forms ----------------------------------------------------


def usability_to_doc(report: UsabilityReport) -> dict[str, Any]:
    return {
        "total": report.total,
        "met": report.met,
        "percent_exact": {
            "numerator": report.percent_exact.numerator,
            "denominator": report.percent_exact.denominator,
        },
        "percent_display": report.percent_display,
        "unmet": list(report.unmet),
        "implied_selection": sorted(report.implied_selection),
    }


def project_report_to_doc(project: ProjectSpec, report: UsabilityReport) -> dict[str, Any]:
    return {
        "name": project.name,
        "requirements": [
            {
                "id": r.id,
                "title": r.title,
                "explanation": r.explanation,
                "tasks": list(r.tasks),
                "techniques": list(r.techniques),
                "met": r.met,
            }
            for r in project.requirements
        ],
        "usability": usability_to_doc(report),
    }


def load_project(text: str) -> ProjectSpec:
    """Parse a project file: {"name", "requirements": [...]}."""
    return load_project_doc(parse_json(text, "project"))


def load_project_doc(doc: Any) -> ProjectSpec:
    if not isinstance(doc, dict) or not isinstance(doc.get("name"), str):
        raise SchemaError("project: expected an object with a string 'name'")
    requirements_doc = doc.get("requirements")
    if not isinstance(requirements_doc, list):
        raise SchemaError("project: 'requirements' must be a list")
    requirements = []
    seen: set[str] = set()
    for i, req_doc in enumerate(requirements_doc):
        where = f"requirements[{i}]"
        if not isinstance(req_doc, dict):
            raise SchemaError(f"{where}: expected object")
        req_id = req_doc.get("id")
        title = req_doc.get("title")
        if not isinstance(req_id, str) or not isinstance(title, str):
            raise SchemaError(f"{where}: requires string 'id' and 'title'")
        if req_id in seen:
            raise SchemaError(f"{where}: duplicate requirement id {req_id!r}")
        seen.add(req_id)
        explanation = req_doc.get("explanation", "")
        if not isinstance(explanation, str):
            raise SchemaError(f"{where}: 'explanation' must be a string")
        lists = {}
        for key in ("tasks", "techniques"):
            values = req_doc.get(key, [])
            if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
                raise SchemaError(f"{where}: {key!r} must be a list of ids")
            lists[key] = tuple(values)
        requirements.append(
            Requirement(req_id, title, explanation, lists["tasks"], lists["techniques"])
        )
    return ProjectSpec(doc["name"], tuple(requirements))
