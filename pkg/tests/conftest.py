"""Shared fixtures. Session scope keeps the heavier builds to one run."""

import pytest

from dispbound import (
    PsiTable,
    analytic_solve,
    dominant_specs,
    enumerate_relations,
    function_family,
    lift_symmetric,
)


@pytest.fixture(scope="session")
def table2():
    return PsiTable.build(2)


@pytest.fixture(scope="session")
def relations2():
    return enumerate_relations(2)


@pytest.fixture(scope="session")
def family2():
    return function_family(2)


@pytest.fixture(scope="session")
def dominant2(family2):
    return dominant_specs(family2)


@pytest.fixture(scope="session")
def solution2():
    return analytic_solve(2)


@pytest.fixture(scope="session")
def xstar2(solution2):
    return lift_symmetric(2, solution2.xstar_classes)
