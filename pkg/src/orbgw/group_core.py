"""Finite groups stored as full multiplication tables.

Element 0 is always the identity.  Groups come from permutation generators,
an explicit table, or a built-in family; the element order is deterministic
so that every downstream output is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import (
    ClosureExceedsCap,
    InvalidMultiplicationTable,
    InvalidPermutation,
    ParameterOutOfRange,
    UnknownFamily,
)

__all__ = [
    "DEFAULT_CAP",
    "FAMILIES",
    "FiniteGroup",
    "build_from_generators",
    "builtin",
    "from_descriptor",
    "from_mult_table",
]

DEFAULT_CAP = 2000


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mult: np.ndarray  # mult[x, y] = x*y
    inv: np.ndarray
    classes: tuple  # tuple of tuples of element ids; class 0 = {identity}
    class_of: np.ndarray
    element_order: tuple
    name: str = "G"
    labels: tuple | None = field(default=None)

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def exponent(self) -> int:
        e = 1
        for o in self.element_order:
            e = e * o // gcd(e, o)
        return e

    @property
    def class_sizes(self) -> tuple:
        return tuple(len(k) for k in self.classes)

    @property
    def representatives(self) -> tuple:
        return tuple(k[0] for k in self.classes)

    def centralizer_order(self, h: int) -> int:
        return self.order // len(self.classes[int(self.class_of[h])])

    def class_centralizer_order(self, c: int) -> int:
        return self.order // len(self.classes[c])

    def conjugacy_class_of(self, h: int) -> int:
        if not 0 <= h < self.order:
            raise IndexError(f"element {h} out of range")
        return int(self.class_of[h])

    def mul(self, x: int, y: int) -> int:
        return int(self.mult[x, y])

    def power(self, h: int, k: int) -> int:
        if k < 0:
            h, k = int(self.inv[h]), -k
        result, base = 0, h
        while k:
            if k & 1:
                result = int(self.mult[result, base])
            base = int(self.mult[base, base])
            k >>= 1
        return result

    def inverse_class(self, c: int) -> int:
        return int(self.class_of[self.inv[self.classes[c][0]]])

    def class_power(self, c: int, k: int) -> int:
        """Class of h^k for h in class c."""
        return int(self.class_of[self.power(self.classes[c][0], k)])

    def class_order(self, c: int) -> int:
        return self.element_order[self.classes[c][0]]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def verify(self) -> None:
        """Full table scan of the group axioms and class bookkeeping."""
        _check_table(self.mult)
        n = self.order
        idx = np.arange(n)
        if not np.array_equal(self.mult[idx, self.inv], np.zeros(n, dtype=self.mult.dtype)):
            raise InvalidMultiplicationTable("inv is not a right inverse")
        if not np.array_equal(self.mult[self.inv, idx], np.zeros(n, dtype=self.mult.dtype)):
            raise InvalidMultiplicationTable("inv is not a left inverse")
        if sum(self.class_sizes) != n:
            raise InvalidMultiplicationTable("classes do not partition the group")
        for k in self.classes:
            if n % len(k):
                raise InvalidMultiplicationTable("class size does not divide |G|")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order}, classes={self.num_classes})"


def _check_table(mult: np.ndarray) -> None:
    n = mult.shape[0]
    if mult.shape != (n, n) or n == 0:
        raise InvalidMultiplicationTable("table must be square and nonempty")
    if mult.min() < 0 or mult.max() >= n:
        raise InvalidMultiplicationTable("entries out of range")
    idx = np.arange(n)
    if not (np.array_equal(mult[0], idx) and np.array_equal(mult[:, 0], idx)):
        raise InvalidMultiplicationTable("element 0 is not the identity")
    for row in mult:
        if len(np.unique(row)) != n:
            raise InvalidMultiplicationTable("rows are not permutations")
    # associativity: (x y) z == x (y z) for all triples
    left = mult[mult[:, :, None], idx[None, None, :]] if n <= 200 else None
    if left is not None:
        right = mult[idx[:, None, None], mult[None, :, :]]
        if not np.array_equal(left, right):
            raise InvalidMultiplicationTable("table is not associative")
    else:
        for x in range(n):
            if not np.array_equal(mult[mult[x]], mult[x][mult]):
                raise InvalidMultiplicationTable("table is not associative")


def from_mult_table(table, name: str = "G", labels=None, check: bool = True) -> FiniteGroup:
    mult = np.asarray(table, dtype=np.int64)
    if check:
        _check_table(mult)
    n = mult.shape[0]
    inv = np.argmin(mult, axis=1)  # mult[x, inv[x]] == 0 is the row minimum
    if not np.array_equal(mult[np.arange(n), inv], np.zeros(n, dtype=np.int64)):
        raise InvalidMultiplicationTable("missing inverses")
    # conj[g, x] = g x g^-1
    conj = mult[mult, inv[:, None]]
    class_of = -np.ones(n, dtype=np.int64)
    classes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        members = sorted(set(int(y) for y in conj[:, x]))
        for y in members:
            class_of[y] = len(classes)
        classes.append(tuple(members))
    orders = []
    for x in range(n):
        k, y = 1, x
        while y != 0:
            y = int(mult[y, x])
            k += 1
        orders.append(k)
    return FiniteGroup(
        mult=mult,
        inv=inv,
        classes=tuple(classes),
        class_of=class_of,
        element_order=tuple(orders),
        name=name,
        labels=tuple(labels) if labels is not None else None,
    )


def _check_perm(p, degree: int) -> tuple:
    p = tuple(int(x) for x in p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InvalidPermutation(f"{p} is not a permutation of 0..{degree - 1}")
    return p


def build_from_generators(generators, cap: int = DEFAULT_CAP, name: str = "G") -> FiniteGroup:
    """Close a list of permutations (0-based image lists) under composition.

    Elements are numbered breadth-first from the identity, trying generators
    in input order.  The product x*y is the permutation i -> x[y[i]].
    """
    generators = list(generators)
    if not generators:
        raise InvalidPermutation("at least one generator is required")
    degree = len(generators[0])
    gens = [_check_perm(g, degree) for g in generators]
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = tuple(x[i] for i in s)  # x*s
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureExceedsCap(f"generated group exceeds the cap of {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    n = len(elements)
    arr = np.array(elements, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        prods = arr[i][arr]  # row j: elements[i][elements[j][k]]
        table[i] = [index[tuple(p)] for p in prods.tolist()]
    return from_mult_table(table, name=name, labels=elements, check=False)


def _from_normal_form(n: int, mul, name: str, labels) -> FiniteGroup:
    table = np.array([[mul(x, y) for y in range(n)] for x in range(n)], dtype=np.int64)
    return from_mult_table(table, name=name, labels=labels, check=False)


def _cyclic(n: int) -> FiniteGroup:
    return _from_normal_form(n, lambda x, y: (x + y) % n, f"cyclic({n})", [f"a^{r}" for r in range(n)])


def _dihedral(n: int) -> FiniteGroup:
    # elements s^e r^k -> e*n + k, with r s = s r^-1
    def mul(x, y):
        e1, k1 = divmod(x, n)
        e2, k2 = divmod(y, n)
        k = (k2 - k1) % n if e2 else (k1 + k2) % n
        return ((e1 + e2) % 2) * n + k

    labels = [f"r^{k}" for k in range(n)] + [f"s r^{k}" for k in range(n)]
    return _from_normal_form(2 * n, mul, f"dihedral({n})", labels)


def _binary_dihedral(n: int) -> FiniteGroup:
    # elements b^s a^r -> s*2n + r with a^n = b^2, a^2n = 1, b a b^-1 = a^-1
    m = 2 * n

    def mul(x, y):
        s1, r1 = divmod(x, m)
        s2, r2 = divmod(y, m)
        if s2 == 0:
            return s1 * m + (r1 + r2) % m
        if s1 == 0:
            return m + (r2 - r1) % m
        return (n + r2 - r1) % m

    labels = [f"a^{r}" for r in range(m)] + [f"b a^{r}" for r in range(m)]
    return _from_normal_form(2 * m, mul, f"binary_dihedral({n})", labels)


def _symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return build_from_generators([[0]], name="symmetric(1)")
    transposition = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    gens = [transposition] if n == 2 else [transposition, cycle]
    return build_from_generators(gens, name=f"symmetric({n})")


def _quaternion(k: int) -> FiniteGroup:
    g = _binary_dihedral(2 ** (k - 2))
    return FiniteGroup(g.mult, g.inv, g.classes, g.class_of, g.element_order, f"quaternion({k})", g.labels)


# family -> (constructor, minimum parameter, order as a function of the parameter)
FAMILIES = {
    "cyclic": (_cyclic, 1, lambda n: n),
    "dihedral": (_dihedral, 1, lambda n: 2 * n),
    "binary_dihedral": (_binary_dihedral, 1, lambda n: 4 * n),
    "symmetric": (_symmetric, 1, lambda n: _factorial(n)),
    "quaternion": (_quaternion, 3, lambda k: 2**k),
}


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def builtin(family: str, parameter: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Built-in families.

    ``quaternion(k)`` is the generalized quaternion group of order 2^k, i.e.
    binary_dihedral(2^(k-2)).
    """
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    ctor, lo, size = FAMILIES[family]
    if not isinstance(parameter, int) or parameter < lo:
        raise ParameterOutOfRange(f"{family} needs an integer parameter >= {lo}")
    if size(parameter) > cap:
        raise ParameterOutOfRange(f"{family}({parameter}) has order {size(parameter)} > cap {cap}")
    return ctor(parameter)


def from_descriptor(desc: dict, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """JSON group descriptor: {"family", "n"} | {"permutations"} | {"mult_table"}."""
    keys = set(desc)
    if keys == {"family", "n"}:
        return builtin(desc["family"], desc["n"], cap=cap)
    if keys == {"permutations"}:
        return build_from_generators(desc["permutations"], cap=cap)
    if keys == {"mult_table"}:
        table = desc["mult_table"]
        if len(table) > cap:
            raise ClosureExceedsCap(f"table of order {len(table)} exceeds the cap of {cap}")
        return from_mult_table(table)
    raise InvalidMultiplicationTable(f"unrecognized group descriptor keys {sorted(keys)}")
