import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbgw.errors import ClosureExceedsCap, InvalidMultiplicationTable, InvalidPermutation, ParameterOutOfRange, UnknownFamily
from orbgw.group_core import build_from_generators, builtin, from_descriptor, from_mult_table

FAMILIES = [("cyclic", n) for n in range(1, 7)] + [("dihedral", n) for n in range(1, 7)] + [
    ("binary_dihedral", n) for n in range(1, 6)
] + [("symmetric", n) for n in range(1, 5)] + [("quaternion", 3), ("quaternion", 4)]


@pytest.mark.parametrize("family,n", FAMILIES)
def test_builtin_groups_are_groups(family, n):
    G = builtin(family, n)
    G.verify()
    assert sum(G.class_sizes) == G.order
    for x in range(G.order):
        assert G.element_order[x] == G.element_order[int(G.inv[x])]
        for y in range(G.order):
            conj = G.mul(G.mul(x, y), int(G.inv[x]))
            assert G.conjugacy_class_of(conj) == G.conjugacy_class_of(y)


def test_orders():
    assert builtin("cyclic", 1).order == 1
    assert builtin("binary_dihedral", 3).order == 12
    assert builtin("symmetric", 4).order == 24
    assert builtin("quaternion", 4).order == 16


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_binary_dihedral_presentation(n):
    G = builtin("binary_dihedral", n)
    a, b = 1, 2 * n
    assert G.power(a, 2 * n) == 0
    assert G.power(a, n) == G.power(b, 2)
    assert G.mul(G.mul(b, a), int(G.inv[b])) == int(G.inv[a])


def test_class_examples():
    S3 = builtin("symmetric", 3)
    assert S3.conjugacy_class_of(0) == 0
    trans = next(x for x in range(6) if S3.element_order[x] == 2)
    assert S3.class_sizes[S3.conjugacy_class_of(trans)] == 3
    assert S3.centralizer_order(trans) == 2
    assert S3.centralizer_order(0) == 6
    BD2 = builtin("binary_dihedral", 2)
    a2 = BD2.power(1, 2)
    assert BD2.class_sizes[BD2.conjugacy_class_of(a2)] == 1


@given(st.integers(0, 11), st.integers(-30, 30), st.integers(-30, 30))
def test_power_is_a_homomorphism(h, j, k):
    G = builtin("binary_dihedral", 3)
    assert G.power(h, j + k) == G.mul(G.power(h, j), G.power(h, k))


def test_generators_give_deterministic_tables():
    gens = [[1, 2, 0], [1, 0, 2]]
    G1, G2 = build_from_generators(gens), build_from_generators(gens)
    assert np.array_equal(G1.mult, G2.mult)
    assert G1.order == 6 and G1.num_classes == 3


def test_descriptors_agree():
    G = from_descriptor({"permutations": [[1, 2, 3, 0]]})
    H = from_descriptor({"mult_table": G.mult.tolist()})
    assert np.array_equal(G.mult, H.mult)
    assert from_descriptor({"family": "cyclic", "n": 4}).class_sizes == (1, 1, 1, 1)


def test_errors():
    with pytest.raises(UnknownFamily):
        builtin("alternating", 4)
    with pytest.raises(ParameterOutOfRange):
        builtin("cyclic", 0)
    with pytest.raises(InvalidPermutation):
        build_from_generators([[0, 0, 1]])
    with pytest.raises(ClosureExceedsCap):
        build_from_generators([[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], cap=50)
    with pytest.raises(InvalidMultiplicationTable):
        from_mult_table([[0, 1], [1, 1]])
    with pytest.raises(InvalidMultiplicationTable):
        from_descriptor({"bogus": 1})
    # a Latin square that is not associative
    with pytest.raises(InvalidMultiplicationTable):
        from_mult_table([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
