from __future__ import annotations

import json
from fractions import Fraction

import pytest

from smeforge.errors import NoRequirementsError, SchemaError, UnknownFragmentError
from smeforge.project import (
    ProjectSpec,
    Requirement,
    load_project,
    project_report,
    usability,
)


def test_case1_is_fully_usable(case1_project):
    report = usability(case1_project)
    assert report.total == 7 and report.met == 7
    assert report.percent_display == 100
    assert report.percent_exact == 100
    assert report.unmet == ()


def test_case2_usability(case2_project):
    report = usability(case2_project)
    assert report.total == 6 and report.met == 4
    assert report.percent_display == 66
    assert report.percent_exact == Fraction(200, 3)
    assert abs(float(report.percent_exact) - 200 / 3) < 1e-9
    assert report.unmet == ("#R5", "#R6")


def test_all_requirements_unmapped_scores_zero():
    project = ProjectSpec(
        "empty", tuple(Requirement(f"#R{i}", f"req {i}") for i in range(1, 4))
    )
    report = usability(project)
    assert report.met == 0 and report.percent_display == 0
    assert report.percent_exact == 0
    assert report.unmet == ("#R1", "#R2", "#R3")


def test_no_requirements_is_an_error():
    with pytest.raises(NoRequirementsError):
        usability(ProjectSpec("null", ()))


def test_techniques_alone_do_not_satisfy():
    project = ProjectSpec(
        "p", (Requirement("#R1", "only technique", techniques=("top-down",)),)
    )
    report = usability(project)
    assert report.met == 0 and report.unmet == ("#R1",)


def test_full_marks_iff_no_unmet(case1_project, case2_project):
    for project in (case1_project, case2_project):
        report = usability(project)
        assert (report.percent_display == 100) == (report.unmet == ())
        assert (report.met == report.total) == (report.unmet == ())


def test_usability_is_order_independent(case2_project):
    reversed_project = ProjectSpec(
        case2_project.name, tuple(reversed(case2_project.requirements))
    )
    assert usability(case2_project).met == usability(reversed_project).met
    assert usability(case2_project).percent_exact == usability(reversed_project).percent_exact


def test_implied_selection_union(case1_project, seed_repo):
    report = usability(case1_project)
    assert "specify-service-level-agreement" in report.implied_selection
    assert "create-sla-contract" in report.implied_selection
    assert report.implied_selection <= {f.id for f in seed_repo.fragments}


def test_case1_report_lists_first_requirement_mappings(case1_project, seed_repo):
    r1 = case1_project.requirements[0]
    assert r1.id == "#R1"
    assert r1.tasks == (
        "specify-service-level-agreement",
        "discover-necessary-web-services",
        "monitor-operational-web-services",
    )
    text = project_report(case1_project, seed_repo)
    assert text.count("#R") >= 7
    assert "Usability(%) = 7 / 7 (100%)" in text
    assert "Not supported" not in text


def test_case2_report_marks_unsupported_rows(case2_project, seed_repo):
    text = project_report(case2_project, seed_repo)
    assert text.count("Not supported") == 2
    assert "Usability(%) = 4 / 6 (66%)" in text
    assert "Unmet: #R5, #R6" in text


def test_report_with_unknown_fragment(seed_repo):
    project = ProjectSpec("p", (Requirement("#R1", "bad", tasks=("ghost-task",)),))
    with pytest.raises(UnknownFragmentError) as excinfo:
        project_report(project, seed_repo)
    assert "#R1" in excinfo.value.subjects and "ghost-task" in excinfo.value.subjects


def test_machine_report_is_json(case2_project, seed_repo):
    doc = json.loads(project_report(case2_project, seed_repo, "machine"))
    assert doc["usability"]["percent_display"] == 66
    assert doc["usability"]["unmet"] == ["#R5", "#R6"]
    assert doc["usability"]["percent_exact"] == {"numerator": 200, "denominator": 3}
    unsupported = [r for r in doc["requirements"] if not r["met"]]
    assert [r["id"] for r in unsupported] == ["#R5", "#R6"]


def test_loader_rejects_duplicate_requirement_ids():
    doc = {"name": "p", "requirements": [
        {"id": "#R1", "title": "a"},
        {"id": "#R1", "title": "b"},
    ]}
    with pytest.raises(SchemaError):
        load_project(json.dumps(doc))
