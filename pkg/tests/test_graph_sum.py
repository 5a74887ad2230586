from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial

import pytest

from orbgw.algebra import EquivariantScalar, Series2
from orbgw.chen_ruan import RepSpec, cup_product, pairing
from orbgw.errors import HeightBelowTwo, TruncationError
from orbgw.graph_sum import (
    GraphSum,
    correlator_tw,
    correlator_X,
    edge_weight,
    leaf_weight_dilaton,
    leaf_weight_ordinary,
    vertex_weight,
)
from orbgw.rmatrix import r_matrix

from conftest import TEST_GROUPS, rep_of, table_of

W = EquivariantScalar.variable


def w(p):
    return W(1, 0, p)


@pytest.fixture(scope="module")
def trivial():
    return rep_of("cyclic", 1, (0,))


def test_hodge_anchors_trivial_group(trivial):
    X, tw = GraphSum(trivial, "X"), GraphSum(trivial, "tw")
    assert X.correlator(0, [("phibar", 0, 0)] * 3) == w(-1)
    assert X.correlator(1, [("phibar", 0, 0)]) == w(-1) * Fraction(-1, 24)
    assert X.correlator(1, [("phibar", 0, 1), ("phibar", 0, 0)]) == w(-1) * Fraction(-1, 24)
    # genus 2, one point: (-1)^k lambda_k psi^(4-k) / w^k
    assert [tw.correlator(2, [("phi", 0, k)]) for k in range(5)] == [
        0, 0, w(-2) * Fraction(7, 5760), w(-1) * Fraction(-1, 480), Fraction(1, 1152) * w(0)]


def test_leaf_weights_trivial_group(trivial):
    R = r_matrix(trivial, 3)
    one = {0: Fraction(1)}
    assert leaf_weight_ordinary(R, 0, 0, [one], "tw") == 1
    assert leaf_weight_ordinary(R, 0, 1, [{1: Fraction(1)}], "tw") == 1
    assert leaf_weight_ordinary(R, 0, 1, [one], "tw") == w(-1) * Fraction(1, 12)
    assert leaf_weight_ordinary(R, 0, 0, [one], "X") == W(1, 0, Fraction(-1, 2))
    assert leaf_weight_dilaton(R, 0, 2, "tw") == w(-1) * Fraction(-1, 12)
    with pytest.raises(HeightBelowTwo):
        leaf_weight_dilaton(R, 0, 1)
    # numerator 1 - R(-z) R(-w) starts at -(z + w) / 12w
    assert edge_weight(R, 0, 0, 0, 0) == w(-1) * Fraction(-1, 12)
    with pytest.raises(TruncationError):
        edge_weight(R, 0, 0, 2, 1)


@pytest.mark.parametrize("family,n", TEST_GROUPS)
def test_edge_weights_symmetric_and_divisible(family, n):
    t = table_of(family, n)
    rep = RepSpec.of(t, (t.num_irreps - 1, 0))
    R = r_matrix(rep, 4)
    neg = R.at_minus_z()
    k = t.num_irreps
    cache: dict = {}
    for a, b in product(range(k), repeat=2):
        for i, j in product(range(4), repeat=2):
            if i + j <= 3:
                assert edge_weight(R, a, b, i, j, cache) == edge_weight(R, b, a, j, i, cache)
        # multiply the quotient back by (z + w): recovers the numerator below total degree 4
        q = Series2([[edge_weight(R, a, b, i, j, cache) if i + j <= 3 else rep.zero() for j in range(5)] for i in range(5)],
                    rep.zero())
        back = q.times_z_plus_w()
        for i, j in product(range(5), repeat=2):
            if 1 <= i + j <= 4:
                num = -sum((neg[c][a][i] * neg[c][b][j] for c in range(k)), rep.zero())
                assert back[i, j] == num


def test_vertex_weight_scaling():
    rep = rep_of("cyclic", 2, (1,))
    s = Fraction(1, 2)
    assert vertex_weight(rep, 0, 0, (0, 0, 0), "tw") == 1 / s
    # nubar = nu / e1, so sqrt(nubar)^(-1) = sqrt(e1) / s
    assert vertex_weight(rep, 0, 0, (0, 0, 0), "X") == w(Fraction(1, 2)) * (1 / s)
    assert vertex_weight(rep, 1, 1, (1,), "tw") == Fraction(1, 24) / s


@pytest.mark.parametrize("family,n", TEST_GROUPS)
def test_three_point_function_is_diagonal(family, n):
    t = table_of(family, n)
    rep = RepSpec.of(t, (t.num_irreps - 1,))
    k = t.num_irreps
    for a, b, c in combinations_with_replacement(range(k), 3):
        val = correlator_X(rep, 0, [("phibar", a, 0), ("phibar", b, 0), ("phibar", c, 0)])
        expected = rep.e1().inverse() * t.nu[a] if a == b == c else rep.zero()
        assert val == expected


@pytest.mark.parametrize("family,n", [("cyclic", 3), ("symmetric", 3), ("binary_dihedral", 2)])
def test_three_point_function_matches_product_and_pairing(family, n):
    t = table_of(family, n)
    rep = RepSpec.of(t, (t.num_irreps - 1, 0))
    nc = t.group.num_classes
    for x, y, z in combinations_with_replacement(range(nc), 3):
        graph = correlator_X(rep, 0, [("class", x, 0), ("class", y, 0), ("class", z, 0)])
        algebra = sum((v * pairing(t, "class", kk, z, rep) for kk, v in cup_product(t, "class", x, y, rep).items()),
                      rep.zero())
        assert graph == algebra


@pytest.mark.parametrize("family,n", TEST_GROUPS)
def test_X_is_e1_power_times_tw(family, n):
    t = table_of(family, n)
    rep = RepSpec.of(t, (t.num_irreps - 1, 0))
    X, tw = GraphSum(rep, "X"), GraphSum(rep, "tw")
    k = t.num_irreps
    for g, heights in [(0, (0, 0, 0)), (1, (0,)), (1, (1,)), (0, (1, 0, 0, 0)), (1, (0, 1)), (2, (2,))]:
        for labels in product(range(k), repeat=len(heights)):
            if len(set(labels)) > 2:
                continue
            vx = X.correlator(g, [("phibar", a, h) for a, h in zip(labels, heights)])
            vt = tw.correlator(g, [("phi", a, h) for a, h in zip(labels, heights)])
            assert vx == rep.e1() ** (g - 1) * vt


@pytest.mark.parametrize("family,n", [("cyclic", 2), ("symmetric", 3)])
def test_unordered_equals_ordered_over_factorial(family, n):
    t = table_of(family, n)
    rep = RepSpec.of(t, (t.num_irreps - 1,))
    eng = GraphSum(rep, "X")
    for g, m, ins in [(0, 3, ("phibar", 0, 0)), (0, 4, ("class", 1, 0)), (1, 2, ("phibar", 1, 1)), (1, 1, ("class", 0, 0))]:
        ordered = eng.correlator(g, [ins] * m)
        assert eng.correlator_unordered(g, m, ins) == ordered * Fraction(1, factorial(m))


@pytest.mark.parametrize("family,n", [("symmetric", 3), ("binary_dihedral", 2)])
def test_rational_coefficients(family, n):
    t = table_of(family, n)
    rep = RepSpec.of(t, (t.num_irreps - 1, 0))
    eng = GraphSum(rep, "X")
    nc = t.group.num_classes
    for g, heights in [(0, (0, 0, 0)), (1, (0,)), (1, (1,)), (0, (0, 0, 0, 1)), (1, (1, 0))]:
        for labels in combinations_with_replacement(range(nc), len(heights)):
            for basis in ("class", "classbar", "phi", "phibar"):
                v = eng.correlator(g, [(basis, c, h) for c, h in zip(labels, heights)])
                assert v.is_rational()


def test_correlator_json_fixture(trivial):
    from orbgw.serialize import scalar_to_json

    assert scalar_to_json(correlator_X(trivial, 0, [("phibar", 0, 0)] * 3)) == [
        {"exps": ["-1"], "coeff": {"order": 1, "terms": [[0, "1/1"]]}}]


def test_unstable_request(trivial):
    with pytest.raises(ValueError):
        correlator_tw(trivial, 0, [("phi", 0, 0)] * 2)
