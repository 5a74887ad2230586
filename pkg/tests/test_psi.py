import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbgw.errors import UnstableInput
from orbgw.psi import psi_integral

SEED = 20240611


def random_exponents(rng, n, total):
    cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def stable_keys(count, seed=SEED):
    """Random (g, exponents) with g <= 3, 1 <= n <= 5 and 2g - 2 + n > 0 (room for one more point)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g, n = rng.randint(0, 3), rng.randint(1, 5)
        if 2 * g - 2 + n <= 0:
            continue
        out.append((g, n))
    return rng, out


def test_anchor_values():
    assert psi_integral(0, (0, 0, 0)) == 1
    assert psi_integral(1, (1,)) == Fraction(1, 24)
    assert psi_integral(2, (4,)) == Fraction(1, 1152)
    assert psi_integral(0, (0, 0, 0, 1)) == 1
    assert psi_integral(2, (3, 2)) == Fraction(29, 5760)


def test_string_equation_on_random_keys():
    rng, keys = stable_keys(200)
    for g, n in keys:
        exps = random_exponents(rng, n, 3 * g - 2 + n)  # the key with tau_0 added is stable and dimensional
        lhs = psi_integral(g, [0] + exps)
        rhs = sum(
            (psi_integral(g, exps[:j] + [exps[j] - 1] + exps[j + 1:]) for j in range(n) if exps[j] > 0),
            Fraction(0),
        )
        assert lhs == rhs, (g, exps)


def test_dilaton_equation_on_random_keys():
    rng, keys = stable_keys(200, SEED + 1)
    for g, n in keys:
        exps = random_exponents(rng, n, 3 * g - 3 + n)
        assert psi_integral(g, [1] + exps) == (2 * g - 2 + n) * psi_integral(g, exps), (g, exps)


@given(st.lists(st.integers(0, 4), min_size=3, max_size=7))
def test_genus_zero_closed_form(exps):
    n = len(exps)
    if sum(exps) != n - 3:
        assert psi_integral(0, exps) == 0
        return
    expected = Fraction(factorial(n - 3))
    for a in exps:
        expected /= factorial(a)
    assert psi_integral(0, exps) == expected


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_one_point_closed_form(g):
    assert psi_integral(g, (3 * g - 2,)) == Fraction(1, 24**g * factorial(g))


@given(st.permutations([0, 1, 2, 3, 2]))
def test_permutation_invariance(exps):
    assert psi_integral(2, exps) == psi_integral(2, sorted(exps))


def test_unstable_and_invalid_keys():
    with pytest.raises(UnstableInput):
        psi_integral(0, (0, 0))
    with pytest.raises(UnstableInput):
        psi_integral(1, ())
    with pytest.raises(UnstableInput):
        psi_integral(0, (0, 0, -1))
    assert psi_integral(1, (0,)) == 0
