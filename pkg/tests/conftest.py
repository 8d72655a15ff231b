"""Shared fixtures: the classification test grid and cached verdicts."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from tetrabox import ModuleSpec, build_from_spec, is_irreducible_burnside

GRID_WEIGHTS = (1, 2, 3)
GRID_PARAMETERS = (
    Fraction(2),
    Fraction(3),
    Fraction(5),
    Fraction(1, 2),
    Fraction(-1),
    Fraction(1),
)

RELATION_SUITE = (
    ((1, Fraction(2)),),
    ((1, Fraction(2)), (1, Fraction(3))),
    ((2, Fraction(2)), (1, Fraction(3))),
    ((1, Fraction(2)), (1, Fraction(3)), (1, Fraction(5))),
)


def _single_factors():
    return [(n, a) for n in GRID_WEIGHTS for a in GRID_PARAMETERS]


@pytest.fixture(scope="session")
def grid_specs():
    """All 1- and 2-factor specs over the grid (dimensions up to 16)."""
    singles = [ModuleSpec((f,)) for f in _single_factors()]
    pairs = [ModuleSpec(pair) for pair in combinations_with_replacement(_single_factors(), 2)]
    return singles + pairs


@pytest.fixture(scope="session")
def relation_suite_specs():
    return [ModuleSpec(factors) for factors in RELATION_SUITE]


@pytest.fixture(scope="session")
def grid_modules(grid_specs):
    return {spec: build_from_spec(spec) for spec in grid_specs}


@pytest.fixture(scope="session")
def grid_burnside(grid_modules):
    return {spec: is_irreducible_burnside(module) for spec, module in grid_modules.items()}
