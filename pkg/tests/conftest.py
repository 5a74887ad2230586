import pytest

from orbgw.char_theory import character_table
from orbgw.chen_ruan import RepSpec
from orbgw.group_core import builtin

TEST_GROUPS = [("cyclic", 1), ("cyclic", 2), ("cyclic", 3), ("symmetric", 3), ("binary_dihedral", 2)]


def table_of(family, n):
    return character_table(builtin(family, n))


def rep_of(family, n, summands):
    return RepSpec.of(table_of(family, n), summands)


@pytest.fixture(params=TEST_GROUPS, ids=lambda p: f"{p[0]}{p[1]}")
def test_table(request):
    return table_of(*request.param)
