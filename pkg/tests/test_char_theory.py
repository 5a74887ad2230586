from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbgw.algebra import Cyclotomic
from orbgw.char_theory import (
    basis_change_to_classes,
    basis_change_to_irreps,
    bg_correlator,
    character_table,
    omega,
    omega_bruteforce,
    table_from_json,
    table_to_json,
)
from orbgw.errors import BudgetExceeded, InvalidCharacterTable
from orbgw.group_core import builtin

from conftest import table_of


def small_groups():
    return [("cyclic", n) for n in (1, 2, 3, 4)] + [("symmetric", 3), ("binary_dihedral", 2), ("dihedral", 4)]


@pytest.mark.parametrize("family,n", small_groups() + [("symmetric", 4), ("binary_dihedral", 3), ("cyclic", 7)])
def test_orthogonality(family, n):
    t = table_of(family, n)
    assert t.row_orthogonality_defects() == []
    assert t.column_orthogonality_defects() == []
    assert sum(d * d for d in t.dims) == t.group.order


def test_table_examples():
    c2 = table_of("cyclic", 2)
    assert [[v.to_fraction() for v in row] for row in c2.values] == [[1, 1], [1, -1]]
    assert sorted(table_of("symmetric", 3).dims) == [1, 1, 2]
    assert sorted(table_of("binary_dihedral", 2).dims) == [1, 1, 1, 1, 2]
    assert table_of("cyclic", 2).nu == (Fraction(1, 4), Fraction(1, 4))


def test_table_is_seed_independent():
    G = builtin("symmetric", 4)
    assert character_table(G, seed=0).values == character_table(G, seed=7).values


@pytest.mark.parametrize("family,n", small_groups())
def test_omega_matches_bruteforce(family, n):
    t = table_of(family, n)
    G = t.group
    for g in range(2):
        for k in range(4):
            for cls in combinations_with_replacement(range(G.num_classes), k):
                assert omega(t, g, cls) == omega_bruteforce(G, g, cls)


def test_omega_examples():
    c2 = table_of("cyclic", 2)
    assert omega(c2, 0, (1, 1, 0)) == Fraction(1, 2)
    assert omega(c2, 1, (0,)) == 2
    s3 = table_of("symmetric", 3)
    tr = next(c for c in range(3) if s3.group.class_sizes[c] == 3)
    assert omega(s3, 0, (tr, tr, 0)) == Fraction(1, 2)
    for fam, n in small_groups():
        t = table_of(fam, n)
        assert omega(t, 0, (0, 0, 0)) == Fraction(1, t.group.order)
    triv = table_of("cyclic", 1)
    assert omega(triv, 2, (0, 0)) == 1


@pytest.mark.parametrize("family,n", small_groups())
def test_appending_identity_class(family, n):
    t = table_of(family, n)
    for g in range(3):
        for cls in combinations_with_replacement(range(t.group.num_classes), 2):
            assert omega(t, g, cls + (0,)) == omega(t, g, cls)


def test_bruteforce_budget():
    with pytest.raises(BudgetExceeded):
        omega_bruteforce(builtin("symmetric", 4), 3, (0, 0), budget=10**6)


@settings(max_examples=30)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=5, max_size=5))
def test_basis_change_round_trip(xs):
    t = table_of("binary_dihedral", 2)
    back = basis_change_to_classes(t, basis_change_to_irreps(t, xs))
    assert [Cyclotomic.rational(0) + b for b in back] == [Cyclotomic.rational(x) for x in xs]


def test_basis_change_examples():
    c2 = table_of("cyclic", 2)
    assert basis_change_to_classes(c2, [1, 0]) == [Fraction(1, 2), Fraction(1, 2)]
    for fam, n in small_groups():
        t = table_of(fam, n)
        # the idempotents sum to the unit 1_identity
        unit = basis_change_to_classes(t, [1] * t.num_irreps)
        assert unit[0] == 1 and all(x == 0 for x in unit[1:])


@pytest.mark.parametrize("family,n", small_groups())
def test_bg_correlator_class_vs_phi(family, n):
    t = table_of(family, n)
    G = t.group
    for g, exps in [(0, (0, 0, 0)), (1, (1,)), (0, (1, 0, 0, 0))]:
        for cls in combinations_with_replacement(range(G.num_classes), len(exps)):
            direct = bg_correlator(t, g, [("class", c, a) for c, a in zip(cls, exps)])
            # expand every class insertion in phi coordinates and sum the phi correlators
            coords = [basis_change_to_irreps(t, [int(i == c) for i in range(G.num_classes)]) for c in cls]
            total = Cyclotomic.rational(0)
            for labels in _product(t.num_irreps, len(cls)):
                coeff = Cyclotomic.rational(1)
                for co, lab in zip(coords, labels):
                    coeff = coeff * co[lab]
                if coeff:
                    total = total + coeff * bg_correlator(t, g, [("phi", l, a) for l, a in zip(labels, exps)])
            assert total == direct


def _product(k, n):
    from itertools import product

    return product(range(k), repeat=n)


def test_bg_correlator_examples():
    c2 = table_of("cyclic", 2)
    assert bg_correlator(c2, 0, [("phi", 1, 0)] * 3) == Fraction(1, 4)
    assert bg_correlator(c2, 1, [("phi", 1, 1)]) == Fraction(1, 24)
    assert bg_correlator(c2, 0, [("phi", 0, 0), ("phi", 1, 0), ("phi", 0, 0)]) == 0


@pytest.mark.parametrize("family,n", small_groups())
def test_table_json_round_trip(family, n):
    t = table_of(family, n)
    back = table_from_json(t.group, table_to_json(t))
    assert back.values == t.values


def test_invalid_table_rejected():
    t = table_of("symmetric", 3)
    data = table_to_json(t)
    bad = {"classes": data["classes"], "irreps": [dict(r) for r in data["irreps"]]}
    bad["irreps"][0] = {"dim": 1, "values": [{"order": 1, "terms": [[0, "1/1"]]}] * 2 + [
        {"order": 1, "terms": [[0, "-1/1"]]}]}
    with pytest.raises(InvalidCharacterTable):
        table_from_json(t.group, bad)
    with pytest.raises(InvalidCharacterTable):
        table_from_json(t.group, {"classes": [1, 1, 4], "irreps": data["irreps"]})
