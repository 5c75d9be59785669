from __future__ import annotations

import random

import pytest

from smeforge.metamodel import DeonticValue, FragmentKind, classify_pair, PairLegality
from smeforge.repository import (
    DeonticCell,
    MethodFragment,
    Repository,
    RepositoryMeta,
)
from smeforge.seeds import (
    load_seed_corpus,
    load_seed_project,
    load_seed_repository,
    seed_text,
)

META = RepositoryMeta(name="test", version="0")


@pytest.fixture(scope="session")
def seed_repo():
    return load_seed_repository()


@pytest.fixture(scope="session")
def seed_repo_text():
    return seed_text("so-fragments.json")


@pytest.fixture(scope="session")
def seed_corpus():
    return load_seed_corpus()


@pytest.fixture(scope="session")
def case1_project():
    return load_seed_project("case1")


@pytest.fixture(scope="session")
def case2_project():
    return load_seed_project("case2")


def fragment(fragment_id, kind, **kwargs):
    kwargs.setdefault("name", fragment_id.replace("-", " ").title())
    return MethodFragment(id=fragment_id, kind=kind, **kwargs)


def toy_repo(fragments, cells=(), precedence=()):
    return Repository.build(META, fragments, cells, precedence)


def table1_repo():
    """A process plus its six candidate tasks, one of them mandatory."""
    values = {
        "develop-bom": DeonticValue.OPTIONAL,
        "identify-context": DeonticValue.RECOMMENDED,
        "conduct-market-research": DeonticValue.OPTIONAL,
        "create-white-site": DeonticValue.OPTIONAL,
        "identify-user-requirements": DeonticValue.MANDATORY,
        "define-problem": DeonticValue.OPTIONAL,
    }
    fragments = [fragment("requirements-engineering", FragmentKind.PROCESS)]
    fragments += [fragment(task_id, FragmentKind.TASK) for task_id in values]
    cells = [
        DeonticCell("requirements-engineering", task_id, value)
        for task_id, value in values.items()
    ]
    return toy_repo(fragments, cells)


_KINDS = list(FragmentKind)


def random_repo(rng: random.Random) -> Repository:
    """A small random repository with only legal deontic cells."""
    n = rng.randint(2, 10)
    fragments = [fragment(f"f{i}", rng.choice(_KINDS)) for i in range(n)]
    candidates = [
        (a.id, b.id)
        for a in fragments
        for b in fragments
        if a.id != b.id and classify_pair(a.kind, b.kind) is PairLegality.LEGAL
    ]
    rng.shuffle(candidates)
    count = rng.randint(0, len(candidates))
    cells = [
        DeonticCell(row, col, rng.choice(list(DeonticValue)))
        for row, col in candidates[:count]
    ]
    return toy_repo(fragments, cells)


def random_selection(rng: random.Random, repo: Repository) -> frozenset[str]:
    ids = [f.id for f in repo.fragments]
    return frozenset(rng.sample(ids, rng.randint(0, len(ids))))
