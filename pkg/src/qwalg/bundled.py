"""The six-element worked examples shipped with the package."""
from __future__ import annotations

from importlib import resources

from .algebra import FiniteAlgebra
from .fileio import parse_text

EXAMPLES = ("qw_noncommutative", "prew_not_iom", "iom_not_prew", "metaw_not_iom")


def example_path(name: str):
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    return resources.files("qwalg") / "data" / f"{name}.alg"


def example_text(name: str) -> str:
    return example_path(name).read_text(encoding="utf-8")


def example(name: str) -> FiniteAlgebra:
    return parse_text(example_text(name), source=f"{name}.alg").algebra


def all_examples() -> dict[str, FiniteAlgebra]:
    return {name: example(name) for name in EXAMPLES}
