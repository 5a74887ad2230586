from fractions import Fraction

import pytest

from orbgw.algebra import Cyclotomic, EquivariantScalar, bernoulli_number
from orbgw.char_theory import basis_change_to_classes, basis_change_to_irreps
from orbgw.chen_ruan import RepSpec
from orbgw.errors import SymplecticCheckFailed
from orbgw.rmatrix import (
    a_action_on_classes,
    b_profile,
    default_order,
    e_matrix,
    e_matrix_from_class_function,
    r_matrix,
)

from conftest import TEST_GROUPS, rep_of, table_of

W = EquivariantScalar.variable


def all_reps(family, n):
    t = table_of(family, n)
    last = t.num_irreps - 1
    return [RepSpec.of(t, s) for s in sorted({(min(1, last),), (last,), (last, 0)})]


def test_b_profile_examples():
    rep = rep_of("cyclic", 2, (1,))
    assert b_profile(rep, 0, 1, 2) == Fraction(-1, 12)
    triv = rep_of("symmetric", 3, (0,))
    for c in range(3):
        for t in range(6):
            assert b_profile(triv, 0, c, t) == bernoulli_number(t)


def test_e_matrix_examples():
    assert e_matrix(rep_of("cyclic", 1, (0,)), 0, 2) == [[Cyclotomic.rational(Fraction(1, 6))]]
    E = e_matrix(rep_of("cyclic", 2, (1,)), 0, 2)
    assert E[0][0] == Fraction(1, 24) and E[0][1] == Fraction(1, 8)
    assert E[1][0] == Fraction(1, 8) and E[1][1] == Fraction(1, 24)


@pytest.mark.parametrize("family,n", TEST_GROUPS)
def test_diagonal_action_matches_e_matrix(family, n):
    for rep in all_reps(family, n):
        t = rep.table
        k = t.num_irreps
        for i in range(rep.nvars):
            for tt in range(6):
                diag = a_action_on_classes(rep, i, tt)
                E = e_matrix(rep, i, tt)
                for b in range(k):
                    cls = basis_change_to_classes(t, [int(j == b) for j in range(k)])
                    image = basis_change_to_irreps(t, [x * d for x, d in zip(cls, diag)])
                    assert [Cyclotomic.rational(0) + x for x in image] == [E[a][b] for a in range(k)]


@pytest.mark.parametrize("family,n", TEST_GROUPS + [("binary_dihedral", 3)])
def test_e_matrix_reality(family, n):
    for rep in all_reps(family, n):
        G = rep.table.group
        for i in range(rep.nvars):
            for tt in range(1, 5):
                vals = a_action_on_classes(rep, i, tt)
                E = e_matrix_from_class_function(rep.table, vals)
                flipped = e_matrix_from_class_function(rep.table, [vals[G.inverse_class(c)] for c in range(len(vals))])
                assert [[x.conjugate() for x in row] for row in E] == flipped


def test_conjugation_invariance_of_actions():
    rep = rep_of("symmetric", 3, (2,))
    G = rep.table.group
    for tt in range(5):
        diag = a_action_on_classes(rep, 0, tt)
        for h in range(G.order):
            assert b_profile(rep, 0, G.conjugacy_class_of(h), tt) == diag[G.conjugacy_class_of(h)]


@pytest.mark.parametrize("family,n", TEST_GROUPS)
def test_symplectic_through_z5(family, n):
    for rep in all_reps(family, n):
        R = r_matrix(rep, 5, check=False)
        assert R.identity_defect() == []
        assert R.symplectic_defect() == []


@pytest.mark.parametrize("family,n", [("cyclic", 2), ("symmetric", 3), ("binary_dihedral", 2)])
def test_display_indexing_breaks_symplecticity(family, n):
    rep = all_reps(family, n)[-1]
    with pytest.raises(SymplecticCheckFailed):
        r_matrix(rep, 3, convention="display")


def _log_series(coeffs, order):
    """log of 1 + x for a scalar series given by its coefficient list with coeffs[0] = 1."""
    x = [EquivariantScalar.zero(1)] + list(coeffs[1:order + 1])
    out = [EquivariantScalar.zero(1)] * (order + 1)
    power = [EquivariantScalar.one(1)] + [EquivariantScalar.zero(1)] * order
    for m in range(1, order + 1):
        nxt = [EquivariantScalar.zero(1)] * (order + 1)
        for a in range(order + 1):
            for b in range(order + 1 - a):
                if power[a] and x[b]:
                    nxt[a + b] = nxt[a + b] + power[a] * x[b]
        power = nxt
        for d in range(order + 1):
            out[d] = out[d] + power[d] * Fraction((-1) ** (m + 1), m)
    return out


def test_trivial_group_bernoulli_pattern():
    R = r_matrix(rep_of("cyclic", 1, (0,)), 7)
    log = _log_series(R[0, 0].coeffs, 7)
    assert log[1] == W(1, 0, -1) * Fraction(-1, 12)
    assert log[2] == 0
    for k in range(1, 5):
        t = 2 * k - 1
        assert log[t] == W(1, 0, -t) * (-bernoulli_number(2 * k) / (2 * k * (2 * k - 1)))
        if k > 1:
            assert log[2 * k - 2] == 0
    assert R[0, 0][2] == W(1, 0, -2) * Fraction(1, 288)


def test_sign_rep_first_order_entry():
    R = r_matrix(rep_of("cyclic", 2, (1,)), 2)
    assert R[0, 0][1] == W(1, 0, -1) * Fraction(-1, 48)
    assert R[0, 0][0] == 1 and R[0, 1][0] == 0


def test_default_order():
    assert default_order(0, 3) == 2
    assert default_order(2, 1) == 6
