"""Character tables, Frobenius counts and descendant correlators of BG.

Character tables are computed with the Dixon-Schneider method: common
eigenvectors of the class multiplication matrices over F_p (p = 1 mod the
exponent), followed by an exact lift of each value to Q(zeta_N) through its
eigenvalue multiplicities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt

import numpy as np

from .algebra import Cyclotomic
from .algebra.cyclotomic import _field
from .errors import (
    BudgetExceeded,
    InvalidCharacterTable,
    NonRationalResult,
    TableComputationFailed,
)
from .group_core import FiniteGroup
from .psi import psi_integral

__all__ = [
    "CharacterTable",
    "basis_change_to_classes",
    "basis_change_to_irreps",
    "bg_correlator",
    "character_table",
    "omega",
    "omega_bruteforce",
    "table_from_json",
    "table_to_json",
]

DEFAULT_ENUMERATION_BUDGET = 10**8


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FiniteGroup
    values: tuple  # values[irrep][class], Cyclotomic in Q(zeta_field_order)
    field_order: int

    @property
    def num_irreps(self) -> int:
        return len(self.values)

    @cached_property
    def dims(self) -> tuple:
        return tuple(int(row[0].to_fraction()) for row in self.values)

    @cached_property
    def nu(self) -> tuple:
        """nu_gamma = (dim V_gamma / |G|)^2."""
        n = self.group.order
        return tuple(Fraction(d, n) ** 2 for d in self.dims)

    @cached_property
    def sqrt_nu(self) -> tuple:
        n = self.group.order
        return tuple(Fraction(d, n) for d in self.dims)

    def chi(self, irrep: int, element: int) -> Cyclotomic:
        return self.values[irrep][int(self.group.class_of[element])]

    @cached_property
    def trivial(self) -> int:
        for i, row in enumerate(self.values):
            if all(v == 1 for v in row):
                return i
        raise InvalidCharacterTable("no trivial character")

    def is_rational(self) -> bool:
        return all(v.is_rational() for row in self.values for v in row)

    @cached_property
    def _integer_values(self) -> tuple:
        """(V, M, N): V[gamma, c] holds chi_gamma(c) in the integral power basis of Z[zeta_N];
        M[i, j] is zeta^(i + j) in that basis."""
        N = 1
        for row in self.values:
            for v in row:
                N = N * v.order // gcd(N, v.order)
        field = _field(N)
        d = field.degree
        k = len(self.values)
        V = np.zeros((k, k, d), dtype=object)
        for a, row in enumerate(self.values):
            for c, v in enumerate(row):
                coeffs = v.embed(N).coeffs
                if any(x.denominator != 1 for x in coeffs):
                    raise InvalidCharacterTable(f"character value {v!r} is not an algebraic integer")
                V[a, c] = [x.numerator for x in coeffs]
        M = np.array([[field.powers[i + j] for j in range(d)] for i in range(d)], dtype=object)
        bound = int(np.abs(V).max()) ** 2 * d * d * int(np.abs(M).max()) * max(k, self.group.order)
        if bound < 2**62:
            V, M = V.astype(np.int64), M.astype(np.int64)
        return V, M, d

    def _pair_sums(self, left, right, weights) -> np.ndarray:
        """S[x, y, :] = sum_m weights[m] left[x, m] right[y, m], products taken in Z[zeta_N]."""
        V, M, d = self._integer_values
        L = left * np.asarray(weights, dtype=V.dtype)[None, :, None]
        P = np.einsum("xmi,ymj->xyij", L, right)
        return np.einsum("xyij,ijl->xyl", P, M)

    def row_orthogonality_defects(self) -> list:
        """Pairs (a, b) where (1/|G|) sum_h chi_a(h^-1) chi_b(h) != delta_ab."""
        G = self.group
        V, _, d = self._integer_values
        inv = [G.inverse_class(c) for c in range(G.num_classes)]
        S = self._pair_sums(V[:, inv], V, G.class_sizes)
        k = len(V)
        bad = []
        for a in range(k):
            for b in range(k):
                want = [G.order if a == b else 0] + [0] * (d - 1)
                if list(S[a, b]) != want:
                    bad.append((a, b))
        return bad

    def column_orthogonality_defects(self) -> list:
        """Pairs of classes where sum_gamma chi(h^-1) chi(h') != |C(h)| delta."""
        G = self.group
        V, _, d = self._integer_values
        inv = [G.inverse_class(c) for c in range(G.num_classes)]
        C = np.transpose(V, (1, 0, 2))  # C[c, gamma]
        S = self._pair_sums(C[inv], C, [1] * len(V))
        bad = []
        for c1 in range(G.num_classes):
            for c2 in range(G.num_classes):
                want = [G.class_centralizer_order(c1) if c1 == c2 else 0] + [0] * (d - 1)
                if list(S[c1, c2]) != want:
                    bad.append((c1, c2))
        return bad

    def validate(self) -> None:
        if sum(d * d for d in self.dims) != self.group.order:
            raise InvalidCharacterTable("sum of squared dimensions differs from |G|")
        if self.num_irreps != self.group.num_classes:
            raise InvalidCharacterTable("table is not square")
        if self.row_orthogonality_defects():
            raise InvalidCharacterTable("row orthogonality fails")
        if self.column_orthogonality_defects():
            raise InvalidCharacterTable("column orthogonality fails")


# -- modular linear algebra -------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    p = exponent + 1
    while not (_is_prime(p) and p > 2 * isqrt(order) + 1):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def _rref(rows: list, p: int) -> tuple:
    """Row-reduce (list of lists mod p); returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(mat: list, p: int) -> list:
    n = len(mat[0])
    red, pivots = _rref(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def _charpoly(a: list, p: int) -> list:
    """Characteristic polynomial mod p via Hessenberg reduction (low degree first)."""
    n = len(a)
    h = [list(r) for r in a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1] % p), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for row in h:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(h[m][m - 1], p - 2, p)
        for i in range(m + 1, n):
            f = (h[i][m - 1] * inv) % p
            if f:
                h[i] = [(x - f * y) % p for x, y in zip(h[i], h[m])]
                for row in h:
                    row[m] = (row[m] + f * row[i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{i,k} prod_{j=i+1..k} h_{j,j-1} p_{i-1}
        prev = polys[-1]
        cur = [0] + prev
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - h[k - 1][k - 1] * c) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = (prod * h[i][i - 1]) % p
            coef = (h[i - 1][k - 1] * prod) % p
            if coef:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    return polys[-1]


def _roots(poly: list, p: int) -> list:
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


def _split(basis: list, mats: list, p: int, rng: random.Random) -> list:
    """Split span(basis) into 1-dim common eigenspaces of the commuting mats."""
    if len(basis) == 1:
        return [basis[0]]
    red, pivots = _rref(basis, p)
    d = len(red)
    for attempt in range(40):
        if attempt < 20:
            coeffs = [rng.randrange(p) for _ in mats]
        else:
            coeffs = [1 if i == (attempt - 20) % len(mats) else 0 for i in range(len(mats))]
        # restricted matrix: coordinates of M b_j in the reduced basis
        images = []
        for b in red:
            mb = [0] * len(b)
            for c, m in zip(coeffs, mats):
                if c:
                    col = m.dot(np.array(b, dtype=np.int64)) % p
                    mb = [(x + c * int(y)) % p for x, y in zip(mb, col)]
            images.append([mb[pc] for pc in pivots])
        a = [[images[j][i] for j in range(d)] for i in range(d)]
        eig = _roots(_charpoly(a, p), p)
        if len(eig) < 2:
            continue
        groups = []
        for lam in eig:
            shifted = [[(a[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
            space = [
                [sum(c * red[k][i] for k, c in enumerate(v)) % p for i in range(len(red[0]))]
                for v in _nullspace(shifted, p)
            ]
            if space:
                groups.append(space)
        if sum(len(g) for g in groups) != d:
            continue
        out = []
        for g in groups:
            out.extend(_split(g, mats, p, rng))
        return out
    raise TableComputationFailed("could not split a common eigenspace")


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    r = G.num_classes
    n = G.order
    e = G.exponent
    sizes = G.class_sizes
    reps = G.representatives
    p = _dixon_prime(n, e)
    # c[i][j][k] = #{x in K_i : x^-1 z_k in K_j}
    coeff = np.zeros((r, r, r), dtype=np.int64)
    for k, z in enumerate(reps):
        ys = G.mult[G.inv, z]  # ys[x] = x^-1 z
        np.add.at(coeff, (G.class_of, G.class_of[ys], k), 1)
    mats = [coeff[i] % p for i in range(1, r)] or [np.zeros((1, 1), dtype=np.int64)]
    rng = random.Random(seed)
    identity = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    vectors = _split(identity, mats, p, rng) if r > 1 else [[1]]
    if len(vectors) != r:
        raise TableComputationFailed("wrong number of common eigenvectors")
    inv_cls = [G.inverse_class(c) for c in range(r)]
    zp = pow(_primitive_root(p), (p - 1) // e, p)  # image of zeta_e in F_p
    rows = []
    for v in vectors:
        if v[0] % p == 0:
            raise TableComputationFailed("eigenvector vanishes at the identity")
        s = pow(v[0], p - 2, p)
        omega = [(x * s) % p for x in v]
        tot = sum(omega[k] * omega[inv_cls[k]] * pow(sizes[k], p - 2, p) for k in range(r)) % p
        dsq = (n * pow(tot, p - 2, p)) % p
        dim = next((d for d in range(1, isqrt(n) + 1) if (d * d) % p == dsq), None)
        if dim is None:
            raise TableComputationFailed("no admissible degree")
        modvals = [(dim * omega[k] * pow(sizes[k], p - 2, p)) % p for k in range(r)]
        row = []
        for k in range(r):
            o = G.class_order(k)
            zo = pow(zp, e // o, p)
            powers = [modvals[G.class_power(k, j)] for j in range(o)]
            terms = {}
            inv_o = pow(o, p - 2, p)
            for l in range(o):
                m = sum(powers[j] * pow(zo, (-j * l) % o, p) for j in range(o)) * inv_o % p
                if m > dim:
                    raise TableComputationFailed("multiplicity lift out of range")
                if m:
                    terms[(l * (e // o)) % e] = m
            row.append(Cyclotomic.from_terms(e, terms))
        rows.append(tuple(row))
    rows.sort(key=lambda row: (int(row[0].to_fraction()), tuple(v.sort_key() for v in row)))
    table = CharacterTable(G, tuple(rows), e)
    table.validate()
    return table


# -- JSON ------------------------------------------------------------------


def table_to_json(table: CharacterTable) -> dict:
    from .serialize import cyclotomic_to_json

    return {
        "classes": list(table.group.class_sizes),
        "irreps": [
            {"dim": d, "values": [cyclotomic_to_json(v) for v in row]}
            for d, row in zip(table.dims, table.values)
        ],
    }


def table_from_json(G: FiniteGroup, data: dict) -> CharacterTable:
    """Import a user-supplied table; validated against both orthogonality relations."""
    from .serialize import cyclotomic_from_json

    if list(data.get("classes", [])) != list(G.class_sizes):
        raise InvalidCharacterTable("class sizes do not match the group")
    rows = []
    order = G.exponent
    for irrep in data["irreps"]:
        row = tuple(cyclotomic_from_json(v).embed(order) for v in irrep["values"])
        if len(row) != G.num_classes or row[0] != irrep["dim"]:
            raise InvalidCharacterTable("malformed irrep row")
        rows.append(row)
    table = CharacterTable(G, tuple(rows), order)
    table.validate()
    return table


# -- Frobenius counting ----------------------------------------------------


def omega(table: CharacterTable, g: int, classes) -> Fraction:
    """Omega = |X| / |G| with |X| from the character-theoretic count.

    |X| = |G|^(2g-1) sum_gamma prod_j (|K_j| chi_gamma(K_j) / d_gamma) / d_gamma^(2g-2).
    """
    G = table.group
    n = G.order
    total = Cyclotomic.rational(0)
    for row, d in zip(table.values, table.dims):
        term = Cyclotomic.rational(Fraction(d) ** (2 - 2 * g))
        for c in classes:
            term = term * row[c] * Fraction(G.class_sizes[c], d)
        total = total + term
    total = total * Fraction(n) ** (2 * g - 2)
    if not total.is_rational() or total.to_fraction() < 0:
        raise NonRationalResult(f"Frobenius count is not a nonnegative rational: {total!r}")
    return total.to_fraction()


def omega_bruteforce(G: FiniteGroup, g: int, classes, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Fraction:
    """Omega by exhaustive counting of (alpha, beta, sigma) with prod [a_i, b_i] = prod sigma_j.

    The tuples are enumerated factor by factor, keeping the multiplicity of
    each partial product, so the cost is linear in the number of factors.
    """
    n = G.order
    if n ** (2 * g + len(classes)) > budget:
        raise BudgetExceeded(f"|G|^(2g+n) = {n ** (2 * g + len(classes))} exceeds the budget {budget}")
    mult, inv = G.mult, G.inv
    comm = np.zeros(n, dtype=object)
    for a in range(n):
        for b in range(n):
            comm[mult[mult[a, b], mult[inv[a], inv[b]]]] += 1
    lhs = np.zeros(n, dtype=object)
    lhs[0] = 1
    for _ in range(g):
        nxt = np.zeros(n, dtype=object)
        for x in np.nonzero(lhs)[0]:
            for y in np.nonzero(comm)[0]:
                nxt[mult[x, y]] += lhs[x] * comm[y]
        lhs = nxt
    rhs = np.zeros(n, dtype=object)
    rhs[0] = 1
    for c in classes:
        nxt = np.zeros(n, dtype=object)
        for x in np.nonzero(rhs)[0]:
            for s in G.classes[c]:
                nxt[mult[x, s]] += rhs[x]
        rhs = nxt
    count = int(sum(lhs[x] * rhs[x] for x in range(n)))
    return Fraction(count, n)


# -- BG correlators --------------------------------------------------------


def basis_change_to_irreps(table: CharacterTable, coords) -> list:
    """1_h coordinates (one per class) -> phi_gamma coordinates.

    1_h = |[h]| sum_gamma chi_gamma(h) / d_gamma phi_gamma.
    """
    G = table.group
    out = []
    for row, d in zip(table.values, table.dims):
        acc = 0
        for c, x in enumerate(coords):
            if x:
                acc = x * (row[c] * Fraction(G.class_sizes[c], d)) + acc
        out.append(acc)
    return out


def basis_change_to_classes(table: CharacterTable, coords) -> list:
    """phi_gamma coordinates -> 1_h coordinates.

    phi_gamma = (d_gamma / |G|) sum_[h] chi_gamma(h^-1) 1_h.
    """
    G = table.group
    out = []
    for c in range(G.num_classes):
        ci = G.inverse_class(c)
        acc = 0
        for row, d, y in zip(table.values, table.dims, coords):
            if y:
                acc = y * (row[ci] * Fraction(d, G.order)) + acc
        out.append(acc)
    return out


def bg_correlator(table: CharacterTable, g: int, insertions) -> Fraction | Cyclotomic:
    """<tau_a1(x_1) ... tau_an(x_n)>_g of BG.

    Each insertion is ``(basis, label, a)`` with basis "class" (label a
    conjugacy class index) or "phi" (label an irrep index).
    """
    ins = list(insertions)
    exps = [a for _, _, a in ins]
    n = len(ins)
    if sum(exps) != 3 * g - 3 + n:
        return Fraction(0)
    psi = psi_integral(g, exps)
    kinds = {b for b, _, _ in ins}
    if kinds == {"class"}:
        return omega(table, g, [lab for _, lab, _ in ins]) * psi
    if kinds == {"phi"}:
        labels = {lab for _, lab, _ in ins}
        if len(labels) != 1:
            return Fraction(0)
        (lab,) = labels
        return table.nu[lab] ** (1 - g) * psi
    if not kinds <= {"class", "phi"}:
        raise ValueError(f"unknown basis in {kinds}")
    # mixed: expand everything in the phi basis
    k = table.num_irreps
    vecs = []
    for b, lab, _ in ins:
        if b == "phi":
            vecs.append([1 if i == lab else 0 for i in range(k)])
        else:
            vecs.append(basis_change_to_irreps(table, [1 if c == lab else 0 for c in range(table.group.num_classes)]))
    total = Cyclotomic.rational(0)
    for gamma in range(k):
        term = Cyclotomic.rational(table.nu[gamma] ** (1 - g) * psi)
        for v in vecs:
            term = term * v[gamma]
        total = total + term
    return total.to_fraction() if total.is_rational() else total
