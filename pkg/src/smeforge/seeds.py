"""Access to the seed data files shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from smeforge.metrics import Corpus, load_corpus
from smeforge.project import ProjectSpec, load_project
from smeforge.repository import Repository, load_repository

REPOSITORY_FILE = "so-fragments.json"
CORPUS_FILE = "table19.json"
PROJECT_FILES = {"case1": "case1-residential.json", "case2": "case2-das.json"}


def seed_path(name: str) -> Path:
    """Filesystem path of a packaged seed file (extension optional)."""
    if not name.endswith(".json"):
        name += ".json"
    path = Path(str(resources.files("smeforge") / "seed" / name))
    if not path.is_file():
        raise FileNotFoundError(f"no packaged seed file named {name!r}")
    return path


def seed_text(name: str) -> str:
    return seed_path(name).read_text(encoding="utf-8")


def load_seed_repository() -> Repository:
    return load_repository(seed_text(REPOSITORY_FILE))


def load_seed_corpus() -> Corpus:
    return load_corpus(seed_text(CORPUS_FILE))


def load_seed_project(case: str) -> ProjectSpec:
    return load_project(seed_text(PROJECT_FILES[case]))
