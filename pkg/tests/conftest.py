import pytest

from exactpoly.counterexample import (
    base_minus,
    base_plus,
    facet_labels,
    vertices48,
    width6_prismatoid,
)
from exactpoly.normalfans import minkowski_sum
from exactpoly.polytopes import dual_graph, facet_enumeration


@pytest.fixture(scope="session")
def q48():
    return vertices48()


@pytest.fixture(scope="session")
def q48_pr():
    return width6_prismatoid()


@pytest.fixture(scope="session")
def q48_hull(q48_pr):
    return q48_pr.hull


@pytest.fixture(scope="session")
def q48_labels(q48_hull):
    return facet_labels(q48_hull)


@pytest.fixture(scope="session")
def q48_dual(q48_pr):
    return dual_graph(q48_pr.polytope, q48_pr.hull)


@pytest.fixture(scope="session")
def qplus():
    return base_plus()


@pytest.fixture(scope="session")
def qplus_hull(qplus):
    return facet_enumeration(qplus)


@pytest.fixture(scope="session")
def qminus():
    return base_minus()


@pytest.fixture(scope="session")
def qminus_hull(qminus):
    return facet_enumeration(qminus)


@pytest.fixture(scope="session")
def base_sum(qplus, qminus):
    return minkowski_sum(qplus, qminus)
