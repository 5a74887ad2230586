"""Chen-Ruan data of BG and of [C^r/G]: ages, Euler factors, pairings, products.

A representation C^r = sum_i rho_i is given by a list of irrep indices.  All
eigenvalue data is read off the character table (no matrices are built).
Each summand rho_i carries its own equivariant weight w_i.

Bases (labels are class indices or irrep indices):

- ``class``: 1_h, the fundamental class of the h-sector
- ``phi``: the idempotent basis phi_gamma built from the 1_h
- ``classbar``: 1bar_h = prod_i w_i^(-age_i(h)) 1_h
- ``phibar``: the idempotent basis built from the 1bar_h

On BG only ``class`` and ``phi`` make sense.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Cyclotomic, EquivariantScalar
from .char_theory import CharacterTable, basis_change_to_classes, basis_change_to_irreps
from .errors import InvalidCharacterTable, NonIntegerMultiplicity

__all__ = [
    "BASES",
    "EigenProfile",
    "RepSpec",
    "age",
    "cup_product",
    "eigen_profile",
    "euler_factor",
    "fixed_dimension",
    "pairing",
    "pairing_nonequivariant",
    "to_phi_coordinates",
]

BASES = ("class", "phi", "classbar", "phibar")


@dataclass(frozen=True, eq=False)
class RepSpec:
    table: CharacterTable
    summands: tuple

    def __post_init__(self):
        if not self.summands:
            raise InvalidCharacterTable("a representation needs at least one summand")
        for s in self.summands:
            if not 0 <= s < self.table.num_irreps:
                raise InvalidCharacterTable(f"irrep index {s} out of range")

    @classmethod
    def of(cls, table: CharacterTable, summands) -> RepSpec:
        return cls(table, tuple(int(s) for s in summands))

    @property
    def nvars(self) -> int:
        return len(self.summands)

    @property
    def dims(self) -> tuple:
        return tuple(self.table.dims[s] for s in self.summands)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def e1(self) -> EquivariantScalar:
        """Equivariant Euler class of C^r, prod_i w_i^(dim rho_i)."""
        return EquivariantScalar.monomial(self.dims)

    def zero(self) -> EquivariantScalar:
        return EquivariantScalar.zero(self.nvars)

    def one(self) -> EquivariantScalar:
        return EquivariantScalar.one(self.nvars)


@dataclass(frozen=True)
class EigenProfile:
    multiplicities: tuple  # D(l) for l = 0..o(h)-1
    order: int

    @property
    def age(self) -> Fraction:
        return sum((Fraction(l, self.order) * d for l, d in enumerate(self.multiplicities)), Fraction(0))


_profiles: dict = {}
_lock = threading.Lock()


def eigen_profile(table: CharacterTable, irrep: int, c: int) -> EigenProfile:
    """Multiplicity D(l) of the eigenvalue exp(2 pi i l / o(h)) of h in V_irrep."""
    key = (id(table), irrep, c)
    hit = _profiles.get(key)
    if hit is not None and hit[0] is table:
        return hit[1]
    G = table.group
    o = G.class_order(c)
    row = table.values[irrep]
    vals = [row[G.class_power(c, k)] for k in range(o)]
    mult = []
    for l in range(o):
        s = Cyclotomic.rational(0)
        for k, v in enumerate(vals):
            s = s + v * Cyclotomic.zeta(o, -k * l)
        s = s * Fraction(1, o)
        if not s.is_rational() or s.to_fraction().denominator != 1 or s.to_fraction() < 0:
            raise NonIntegerMultiplicity(f"multiplicity {s!r} for irrep {irrep}, class {c}, l = {l}")
        mult.append(int(s.to_fraction()))
    prof = EigenProfile(tuple(mult), o)
    with _lock:
        _profiles.setdefault(key, (table, prof))
    return prof


def age(rep: RepSpec, i: int, c: int) -> Fraction:
    return eigen_profile(rep.table, rep.summands[i], c).age


def fixed_dimension(rep: RepSpec, c: int) -> int:
    """dim (C^r)^h = sum_i D_i(0)."""
    return sum(eigen_profile(rep.table, s, c).multiplicities[0] for s in rep.summands)


def euler_factor(rep: RepSpec, c: int) -> EquivariantScalar:
    """e_h = prod_i w_i^(D_i(0)), the Euler class of the fixed subspace."""
    return EquivariantScalar.monomial(
        [eigen_profile(rep.table, s, c).multiplicities[0] for s in rep.summands]
    )


def age_monomial(rep: RepSpec, c: int, sign: int = 1) -> EquivariantScalar:
    """prod_i w_i^(sign * age_i(h))."""
    return EquivariantScalar.monomial([sign * age(rep, i, c) for i in range(rep.nvars)])


def pairing(table: CharacterTable, basis: str, x: int, y: int, rep: RepSpec | None = None):
    """Orbifold Poincare pairing; BG when rep is None, else equivariant on [C^r/G]."""
    G = table.group
    if basis == "phi" and rep is None:
        return table.nu[x] if x == y else Fraction(0)
    if basis == "class" and rep is None:
        return Fraction(1, G.class_centralizer_order(x)) if G.inverse_class(x) == y else Fraction(0)
    if rep is None:
        raise ValueError(f"basis {basis!r} needs a representation")
    if basis == "class":
        if G.inverse_class(x) != y:
            return rep.zero()
        return euler_factor(rep, x).inverse() * Fraction(1, G.class_centralizer_order(x))
    if basis == "classbar":
        if G.inverse_class(x) != y:
            return rep.zero()
        return rep.e1().inverse() * Fraction(1, G.class_centralizer_order(x))
    if basis == "phibar":
        return rep.e1().inverse() * table.nu[x] if x == y else rep.zero()
    if basis == "phi":
        # expand both idempotents in the class basis
        cx = basis_change_to_classes(table, [1 if k == x else 0 for k in range(table.num_irreps)])
        cy = basis_change_to_classes(table, [1 if k == y else 0 for k in range(table.num_irreps)])
        total = rep.zero()
        for c, a in enumerate(cx):
            b = cy[G.inverse_class(c)]
            if a and b:
                total = total + pairing(table, "class", c, G.inverse_class(c), rep) * (a * b)
        return total
    raise ValueError(f"unknown basis {basis!r}")


def pairing_nonequivariant(rep: RepSpec, x: int, y: int) -> Fraction:
    """Non-equivariant limit in the class basis: only compact sectors pair."""
    G = rep.table.group
    if G.inverse_class(x) != y or fixed_dimension(rep, x) != 0:
        return Fraction(0)
    return Fraction(1, G.class_centralizer_order(x))


def _class_structure(table: CharacterTable, x: int, y: int) -> dict:
    """1_x * 1_y on BG: sum over g in [x], g' in [y] of |C(gg')| 1_[gg'] / |G|."""
    G = table.group
    counts: dict = {}
    for a in G.classes[x]:
        for b in G.classes[y]:
            k = int(G.class_of[G.mult[a, b]])
            counts[k] = counts.get(k, 0) + 1
    return {k: Fraction(n * G.class_centralizer_order(k), G.order) for k, n in sorted(counts.items())}


def cup_product(table: CharacterTable, basis: str, x: int, y: int, rep: RepSpec | None = None) -> dict:
    """Structure constants: label -> coefficient of the product of basis elements x, y."""
    if basis in ("phi", "phibar"):
        if basis == "phibar" and rep is None:
            raise ValueError("phibar needs a representation")
        if x != y:
            return {}
        if basis == "phibar" or rep is None:
            return {x: Fraction(1) if rep is None else rep.one()}
        # phi on [C^r/G]: multiply in the class basis and convert back
        cx = basis_change_to_classes(table, [1 if k == x else 0 for k in range(table.num_irreps)])
        prod: dict = {}
        for c1, a in enumerate(cx):
            for c2, b in enumerate(cx):
                if a and b:
                    for k, v in cup_product(table, "class", c1, c2, rep).items():
                        prod[k] = v * (a * b) + prod.get(k, 0)
        coords = [prod.get(c, rep.zero()) for c in range(table.group.num_classes)]
        return {g: v for g, v in enumerate(basis_change_to_irreps(table, coords)) if v}
    base = _class_structure(table, x, y)
    if basis == "class" and rep is not None:
        ax, ay = age_monomial(rep, x), age_monomial(rep, y)
        return {k: ax * ay * age_monomial(rep, k, -1) * v for k, v in base.items()}
    if basis == "classbar" and rep is not None:
        return {k: rep.one() * v for k, v in base.items()}
    if basis == "class":
        return base
    raise ValueError(f"unknown basis {basis!r}")


def to_phi_coordinates(table: CharacterTable, basis: str, label: int, rep: RepSpec | None = None) -> list:
    """Coordinates of a basis element in phi (BG) or phibar ([C^r/G]) coordinates."""
    k = table.num_irreps
    nc = table.group.num_classes
    if rep is None:
        if basis == "phi":
            return [1 if i == label else 0 for i in range(k)]
        if basis == "class":
            return basis_change_to_irreps(table, [1 if c == label else 0 for c in range(nc)])
        raise ValueError(f"basis {basis!r} is not a BG basis")
    one, zero = rep.one(), rep.zero()
    if basis == "phibar":
        return [one if i == label else zero for i in range(k)]
    if basis == "classbar":
        return [one * v for v in basis_change_to_irreps(table, [1 if c == label else 0 for c in range(nc)])]
    if basis == "class":
        # 1_h = prod w^(age(h)) 1bar_h
        scale = age_monomial(rep, label)
        return [scale * v for v in basis_change_to_irreps(table, [1 if c == label else 0 for c in range(nc)])]
    if basis == "phi":
        cls = basis_change_to_classes(table, [1 if i == label else 0 for i in range(k)])
        out = [zero] * k
        for c, a in enumerate(cls):
            if a:
                for i, v in enumerate(to_phi_coordinates(table, "class", c, rep)):
                    out[i] = out[i] + v * a
        return out
    raise ValueError(f"unknown basis {basis!r}")
