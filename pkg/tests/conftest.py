import pytest

from affweights import HighestWeight, build_cartan, build_table, parse_type


def weight(type_name, labels):
    return HighestWeight(build_cartan(parse_type(type_name)), tuple(labels))


@pytest.fixture(scope="session")
def w_a12():
    # rank-2 untwisted instance of level 4
    return weight("A1~2", (1, 2, 1))


@pytest.fixture(scope="session")
def t_a12(w_a12):
    return build_table(w_a12)


@pytest.fixture(scope="session")
def w_a24():
    # twisted rank-2 instance of level 3
    return weight("A2~4", (1, 1, 0))


@pytest.fixture(scope="session")
def t_a24(w_a24):
    return build_table(w_a24)
