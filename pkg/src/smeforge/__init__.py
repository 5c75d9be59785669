"""smeforge: a toolkit for assembling project-specific development methods.

The package keeps a repository of reusable method fragments (processes,
tasks, techniques, work products, producers, languages, stages), the
deontic relations between them, and precedence constraints between tasks.
On top of that it offers selection validation, mandatory closure, task
ordering, method export, and the coverage/usability metrics used to judge
how well a fragment set reconstructs existing methodologies.
"""

from smeforge.errors import (
    CycleError,
    EmptyFragmentSetError,
    IntegrityError,
    NoRequirementsError,
    ParseError,
    PreconditionError,
    SchemaError,
    SmeError,
    UnknownFragmentError,
    UnknownIdError,
)
from smeforge.metamodel import DeonticValue, FragmentKind, PairLegality, classify_pair
from smeforge.repository import (
    DeonticCell,
    MethodFragment,
    PrecedenceConstraint,
    Repository,
    load_repository,
    save_repository,
)

__version__ = "0.1.0"

__all__ = [
    "CycleError",
    "DeonticCell",
    "DeonticValue",
    "EmptyFragmentSetError",
    "FragmentKind",
    "IntegrityError",
    "MethodFragment",
    "NoRequirementsError",
    "PairLegality",
    "ParseError",
    "PrecedenceConstraint",
    "PreconditionError",
    "Repository",
    "SchemaError",
    "SmeError",
    "UnknownFragmentError",
    "UnknownIdError",
    "classify_pair",
    "load_repository",
    "save_repository",
]
