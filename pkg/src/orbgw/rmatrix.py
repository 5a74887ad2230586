"""Quantization data: Bernoulli profiles, the operators A_t, their matrices E_t, and R(z).

The operator A_t^i is diagonal on the class basis, 1_h -> B_t^i(h) 1_h, with
B_t^i(h) = sum_l B_t(l / o(h)) D_i^h(l).  R(z) is the image of

    exp( sum_i sum_{t >= 1} (-1)^t / (t (t + 1)) A_{t+1}^i (z / w_i)^t )

and is stored in the normalized idempotent basis e_gamma = phi_gamma / sqrt(nu_gamma),
where its entries are

    R^a_b(z) = (1/|G|) sum_{h in G} chi_a(h) chi_b(h^-1) f(h, z),

f(h, z) being the scalar exponential above evaluated at the class of h.  In this
basis the symplectic condition reads sum_c R^c_a(-z) R^c_b(z) = delta_ab.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Cyclotomic, EquivariantScalar, Series, bernoulli_poly
from .chen_ruan import RepSpec, eigen_profile
from .errors import SymplecticCheckFailed

__all__ = [
    "CONVENTIONS",
    "RMatrix",
    "a_action_on_classes",
    "b_profile",
    "class_exponent_series",
    "default_order",
    "e_matrix",
    "e_matrix_from_class_function",
    "r_matrix",
]

# "shifted": B_{t+1} at z^t (the one that passes the symplectic check)
# "display": B_t at z^t
CONVENTIONS = ("shifted", "display")


def b_profile(rep: RepSpec, i: int, c: int, t: int) -> Fraction:
    prof = eigen_profile(rep.table, rep.summands[i], c)
    o = prof.order
    return sum((bernoulli_poly(t, Fraction(l, o)) * d for l, d in enumerate(prof.multiplicities) if d), Fraction(0))


def a_action_on_classes(rep: RepSpec, i: int, t: int) -> tuple:
    """Diagonal coefficients of A_t^i on the class basis."""
    return tuple(b_profile(rep, i, c, t) for c in range(rep.table.group.num_classes))


def e_matrix_from_class_function(table, values) -> list:
    """Matrix of the operator 1_h -> values[h] 1_h in the phi basis.

    E^a_b = (d_b / (|G| d_a)) sum_{h in G} chi_a(h) chi_b(h^-1) values(h).
    """
    G = table.group
    k = table.num_irreps
    dims = table.dims
    out = []
    for a in range(k):
        row = []
        for b in range(k):
            s = Cyclotomic.rational(0)
            for c in range(G.num_classes):
                v = values[c]
                if v:
                    s = s + table.values[a][c] * table.values[b][G.inverse_class(c)] * (v * G.class_sizes[c])
            row.append(s * Fraction(dims[b], G.order * dims[a]))
        out.append(row)
    return out


def e_matrix(rep: RepSpec, i: int, t: int) -> list:
    return e_matrix_from_class_function(rep.table, a_action_on_classes(rep, i, t))


def class_exponent_series(rep: RepSpec, c: int, order: int, convention: str = "shifted") -> Series:
    """sum_i sum_{1 <= t <= order} (-1)^t/(t(t+1)) B^i(h) (z/w_i)^t at the class c."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    m = rep.nvars
    zero = EquivariantScalar.zero(m)
    coeffs = [zero]
    for t in range(1, order + 1):
        idx = t + 1 if convention == "shifted" else t
        acc = zero
        for i in range(m):
            b = b_profile(rep, i, c, idx)
            if b:
                acc = acc + EquivariantScalar.variable(m, i, -t) * (Fraction((-1) ** t, t * (t + 1)) * b)
        coeffs.append(acc)
    return Series(coeffs, order, zero)


@dataclass(frozen=True, eq=False)
class RMatrix:
    rep: RepSpec
    order: int
    entries: tuple  # entries[a][b]: Series in z
    convention: str = "shifted"

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ab) -> Series:
        a, b = ab
        return self.entries[a][b]

    def at_minus_z(self) -> tuple:
        return tuple(tuple(s.negate_variable() for s in row) for row in self.entries)

    def symplectic_defect(self) -> list:
        """Pairs (a, b) where sum_c R^c_a(-z) R^c_b(z) differs from delta_ab."""
        neg = self.at_minus_z()
        bad = []
        for a in range(self.size):
            for b in range(self.size):
                acc = None
                for c in range(self.size):
                    term = neg[c][a] * self.entries[c][b]
                    acc = term if acc is None else acc + term
                target = [EquivariantScalar.zero(self.rep.nvars)] * (self.order + 1)
                if a == b:
                    target[0] = EquivariantScalar.one(self.rep.nvars)
                if acc.coeffs != target:
                    bad.append((a, b))
        return bad

    def identity_defect(self) -> list:
        """Entries where R(0) differs from the identity."""
        one = EquivariantScalar.one(self.rep.nvars)
        return [
            (a, b)
            for a in range(self.size)
            for b in range(self.size)
            if self.entries[a][b][0] != (one if a == b else 0)
        ]


def r_matrix(rep: RepSpec, order: int, convention: str = "shifted", check: bool = True) -> RMatrix:
    if order < 1:
        raise ValueError("truncation order must be at least 1")
    table = rep.table
    G = table.group
    m = rep.nvars
    one = EquivariantScalar.one(m)
    zero = EquivariantScalar.zero(m)
    f = [class_exponent_series(rep, c, order, convention).exp(one) for c in range(G.num_classes)]
    k = table.num_irreps
    entries = []
    for a in range(k):
        row = []
        for b in range(k):
            coeffs = [zero] * (order + 1)
            for c in range(G.num_classes):
                w = table.values[a][c] * table.values[b][G.inverse_class(c)] * Fraction(G.class_sizes[c], G.order)
                if w:
                    coeffs = [acc + x * w if x else acc for acc, x in zip(coeffs, f[c].coeffs)]
            row.append(Series(coeffs, order, zero))
        entries.append(tuple(row))
    R = RMatrix(rep, order, tuple(entries), convention)
    if check:
        bad = R.identity_defect() or R.symplectic_defect()
        if bad:
            raise SymplecticCheckFailed(
                f"R(z) fails the symplectic identity at entries {bad[:4]} (convention {convention!r})"
            )
    return R


def default_order(g_max: int, n_max: int) -> int:
    """Largest height that can occur on a vertex, 3g - 1 + n (with one slack unit for edges)."""
    return max(1, 3 * g_max - 1 + n_max)
