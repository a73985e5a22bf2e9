import pytest

from sfactors.catalog import build_group


@pytest.fixture
def c4():
    return build_group("cyclic:4")


@pytest.fixture
def s3():
    return build_group("sym:3")


@pytest.fixture
def Z():
    return build_group("z")


def el(G, *names):
    """Element indices/codes from names."""
    return [G.parse_element(x) for x in names]
