"""Worked example on C^3 / BD(n): rho = (faithful 2-dim irrep) + (trivial irrep).

On the class basis A_t^1 acts by B_t(r/2n) + B_t(1 - r/2n) on 1_{a^r} and by
B_t(1/4) + B_t(3/4) on 1_{b a^r}; A_t^2 acts by B_t(0) everywhere.  The
functions here compute those actions from eigenvalue profiles and set them
beside the closed forms, together with the R-matrix in the normalized basis.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import bernoulli_poly
from .char_theory import CharacterTable, character_table
from .chen_ruan import RepSpec, eigen_profile
from .group_core import builtin
from .rmatrix import a_action_on_classes, r_matrix
from .serialize import rational_to_json, value_to_json

__all__ = ["closed_form_a1", "faithful_two_dim_irrep", "reproduce_type_d", "type_d_rep"]


def faithful_two_dim_irrep(table: CharacterTable) -> int:
    """The irrep in which a acts with eigenvalues exp(+-2 pi i / 2n)."""
    G = table.group
    c = G.conjugacy_class_of(1)  # element 1 is a
    for i, d in enumerate(table.dims):
        if d != 2:
            continue
        mult = eigen_profile(table, i, c).multiplicities
        o = len(mult)
        if mult[1] == 1 and mult[o - 1] == 1:
            return i
    raise ValueError("no faithful 2-dim irrep found")


def type_d_rep(n: int) -> RepSpec:
    table = character_table(builtin("binary_dihedral", n))
    return RepSpec.of(table, (faithful_two_dim_irrep(table), table.trivial))


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def closed_form_a1(n: int, label: str, t: int) -> Fraction:
    """Displayed coefficient of A_t^1 on the class of the element with this label.

    The eigenvalue exponents are taken in [0, 1), so on the identity the pair
    (r/2n, 1 - r/2n) reads (0, 0).
    """
    if label.startswith("b"):
        return bernoulli_poly(t, Fraction(1, 4)) + bernoulli_poly(t, Fraction(3, 4))
    r = int(label.split("^")[1])
    x = Fraction(r, 2 * n)
    return bernoulli_poly(t, _frac(x)) + bernoulli_poly(t, _frac(1 - x))


def reproduce_type_d(n: int = 2, t_max: int = 4, order: int = 3) -> dict:
    rep = type_d_rep(n)
    G = rep.table.group
    labels = [G.labels[G.representatives[c]] for c in range(G.num_classes)]
    actions = []
    all_match = True
    for t in range(1, t_max + 1):
        a1 = a_action_on_classes(rep, 0, t)
        a2 = a_action_on_classes(rep, 1, t)
        for c, lab in enumerate(labels):
            want1 = closed_form_a1(n, lab, t)
            want2 = bernoulli_poly(t, Fraction(0))
            ok = a1[c] == want1 and a2[c] == want2
            all_match &= ok
            actions.append({
                "t": t,
                "class": lab,
                "A1": rational_to_json(a1[c]),
                "A1_closed_form": rational_to_json(want1),
                "A2": rational_to_json(a2[c]),
                "A2_closed_form": rational_to_json(want2),
                "match": ok,
            })
    R = r_matrix(rep, order)
    r_entries = [
        [[value_to_json(x) for x in R[a, b].coeffs] for b in range(R.size)]
        for a in range(R.size)
    ]
    return {
        "n": n,
        "group": G.name,
        "rep": list(rep.summands),
        "class_labels": labels,
        "actions": actions,
        "all_match": all_match,
        "r_matrix": {"order": order, "basis": "normalized idempotent", "entries": r_entries},
    }
