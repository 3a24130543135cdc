import pytest

from nodalsextic import (
    barth_matrix_A,
    barth_polynomial,
    candidate_planes,
    classify_planes,
    extended_code,
    find_nodes,
    table1_words,
)


@pytest.fixture(scope="session")
def code():
    return extended_code()


@pytest.fixture(scope="session")
def table1():
    return table1_words()


@pytest.fixture(scope="session")
def sextic():
    return barth_polynomial()


@pytest.fixture(scope="session")
def matrix_a():
    return barth_matrix_A()


@pytest.fixture(scope="session")
def nodes(sextic):
    return find_nodes(sextic)


@pytest.fixture(scope="session")
def plane_records(sextic, nodes):
    return classify_planes(sextic, candidate_planes(nodes))
