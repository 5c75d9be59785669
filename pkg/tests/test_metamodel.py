from __future__ import annotations

import re

from smeforge.metamodel import (
    DeonticValue,
    FragmentKind,
    PairLegality,
    classify_pair,
    is_valid_id,
    slugify,
    validate_fragment,
)
from smeforge.repository import MethodFragment

from conftest import fragment

EXPECTED_LEGAL = {
    (FragmentKind.PROCESS, FragmentKind.TASK),
    (FragmentKind.TASK, FragmentKind.TECHNIQUE),
    (FragmentKind.PRODUCER, FragmentKind.TASK),
    (FragmentKind.TASK, FragmentKind.WORK_PRODUCT),
    (FragmentKind.PRODUCER, FragmentKind.WORK_PRODUCT),
    (FragmentKind.WORK_PRODUCT, FragmentKind.LANGUAGE),
}


def test_seven_kinds_and_five_values_exist():
    assert len(FragmentKind) == 7
    assert {v.value for v in DeonticValue} == {"M", "R", "O", "D", "F"}


def test_task_technique_is_legal():
    assert classify_pair(FragmentKind.TASK, FragmentKind.TECHNIQUE) is PairLegality.LEGAL


def test_reversed_pair_is_illegal():
    assert classify_pair(FragmentKind.TECHNIQUE, FragmentKind.TASK) is PairLegality.ILLEGAL


def test_exhaustive_sweep_finds_exactly_six_legal_pairs():
    # Brute force over all 49 ordered pairs against the fixed table.
    legal = {
        (row, col)
        for row in FragmentKind
        for col in FragmentKind
        if classify_pair(row, col) is PairLegality.LEGAL
    }
    assert len(legal) == 6
    assert legal == EXPECTED_LEGAL


def test_classify_pair_is_deterministic():
    for row in FragmentKind:
        for col in FragmentKind:
            assert classify_pair(row, col) is classify_pair(row, col)


def test_well_formed_task_has_empty_report():
    task = fragment("identify-services", FragmentKind.TASK, name="Identify Services")
    assert validate_fragment(task) == []


def test_empty_name_is_reported():
    bad = MethodFragment(id="identify-services", name="", kind=FragmentKind.TASK)
    assert "EMPTY_NAME" in {issue.code for issue in validate_fragment(bad)}


def test_id_with_spaces_is_reported():
    # Independent check against the published grammar.
    grammar = re.compile(r"[a-z0-9]+(-[a-z0-9]+)*\Z")
    assert grammar.match("Identify Services") is None
    bad = MethodFragment(id="Identify Services", name="Identify Services", kind=FragmentKind.TASK)
    assert "BAD_ID" in {issue.code for issue in validate_fragment(bad)}


def test_validate_fragment_does_not_mutate():
    task = fragment("identify-services", FragmentKind.TASK)
    before = task
    validate_fragment(task)
    assert task == before and task is before


def test_id_grammar_edges():
    assert is_valid_id("a")
    assert is_valid_id("top-down")
    assert is_valid_id("a1-2b")
    assert not is_valid_id("")
    assert not is_valid_id("-a")
    assert not is_valid_id("a-")
    assert not is_valid_id("a--b")
    assert not is_valid_id("A-b")
    assert not is_valid_id("x" * 81)
    assert is_valid_id("x" * 80)


def test_slugify_produces_valid_ids():
    for name in (
        "Orchestrator/Choreographer Tester",
        "Meet-In-The Middle",
        "Documented (Textural Description) Governance Model",
        "Specify Service Level Agreement",
    ):
        assert is_valid_id(slugify(name))
    assert slugify("Specify Service Level Agreement") == "specify-service-level-agreement"
