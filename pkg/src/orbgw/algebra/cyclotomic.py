"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as coefficient vectors in the power basis
1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial, so two
elements of the same field are equal iff their vectors are equal.  Mixed-order
operations embed both operands into Q(zeta_lcm).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
import cmath

from ..errors import DivisionByZero

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "euler_phi", "zeta"]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list, den: list) -> list:
    """Exact division of integer polynomials (lowest degree first, den monic)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class _Field:
    """Precomputed reduction data for Q(zeta_N)."""

    def __init__(self, n: int):
        self.n = n
        phi = cyclotomic_polynomial(n)
        self.degree = d = len(phi) - 1
        # powers[k] = zeta^k in the power basis, for 0 <= k < max(n, 2d - 1)
        top = max(n, 2 * d - 1)
        powers = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(top):
            powers.append(tuple(vec))
            lead = vec[-1]
            vec = [0] + vec[:-1]
            if lead:
                for i in range(d):
                    vec[i] -= lead * phi[i]
        self.powers = powers
        # trace of zeta^k over Q, used for a field-independent hash
        self.traces = tuple(
            sum(powers[(k * j) % n][0] for j in range(n) if gcd(j, n) == 1) for k in range(d)
        )
        self.units = tuple(a for a in range(1, n + 1) if gcd(a, n) == 1)

    def reduce(self, raw: list) -> tuple:
        """Reduce a coefficient list indexed by arbitrary nonnegative exponents."""
        d, n = self.degree, self.n
        out = [Fraction(0)] * d
        for k, c in enumerate(raw):
            if not c:
                continue
            if k < d:
                out[k] += c
            else:
                for i, p in enumerate(self.powers[k % n] if k >= len(self.powers) else self.powers[k]):
                    if p:
                        out[i] += c * p
        return tuple(out)


    def reduce_int(self, raw: list) -> list:
        """reduce() for integer coefficient lists, returning ints."""
        d, n = self.degree, self.n
        out = raw[:d] + [0] * max(0, d - len(raw))
        for k in range(d, len(raw)):
            c = raw[k]
            if c:
                for i, p in enumerate(self.powers[k % n] if k >= len(self.powers) else self.powers[k]):
                    if p:
                        out[i] += c * p
        return out


def _integral(coeffs) -> tuple:
    """(integer numerators, common denominator) of a Fraction vector."""
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = den * c.denominator // gcd(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


class Cyclotomic:
    """An element of Q(zeta_order)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def rational(cls, q, order: int = 1) -> Cyclotomic:
        f = _field(order)
        c = [Fraction(0)] * f.degree
        c[0] = Fraction(q)
        return cls(order, tuple(c))

    @classmethod
    def from_terms(cls, order: int, terms) -> Cyclotomic:
        """Build sum_k q_k zeta_order^k from a mapping or (k, q) pairs; any integer k."""
        items = terms.items() if hasattr(terms, "items") else terms
        raw = [Fraction(0)] * order
        for k, q in items:
            raw[k % order] += Fraction(q)
        return cls(order, _field(order).reduce(raw))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> Cyclotomic:
        return cls.from_terms(order, {k % order: 1})

    # -- structure ----------------------------------------------------
    def embed(self, order: int) -> Cyclotomic:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        raw = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return Cyclotomic(order, _field(order).reduce(raw))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def terms(self) -> list:
        """Nonzero (exponent, coefficient) pairs of the canonical form."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1)

    def galois(self, a: int) -> Cyclotomic:
        """Apply zeta -> zeta^a (a coprime to the order)."""
        n = self.order
        raw = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                raw[(k * a) % n] += c
        return Cyclotomic(n, _field(n).reduce(raw))

    def trace(self) -> Fraction:
        tr = _field(self.order).traces
        return sum((c * tr[k] for k, c in enumerate(self.coeffs) if c), Fraction(0))

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(x) -> Cyclotomic | None:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return None

    @staticmethod
    def _common(a: Cyclotomic, b: Cyclotomic):
        if a.order == b.order:
            return a, b
        n = _lcm(a.order, b.order)
        return a.embed(n), b.embed(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        return Cyclotomic(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, tuple(x * other for x in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational():
            q = other.coeffs[0]
            if other.order == self.order or self.order % other.order == 0:
                return Cyclotomic(self.order, tuple(x * q for x in self.coeffs))
        if self.is_rational() and other.order % self.order == 0:
            q = self.coeffs[0]
            return Cyclotomic(other.order, tuple(x * q for x in other.coeffs))
        a, b = self._common(self, other)
        # clear denominators so the convolution and reduction run on ints
        (ia, da), (ib, db) = _integral(a.coeffs), _integral(b.coeffs)
        d = len(ia)
        raw = [0] * (2 * d - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    if y:
                        raw[i + j] += x * y
        den = da * db
        return Cyclotomic(a.order, tuple(Fraction(v, den) for v in _field(a.order).reduce_int(raw)))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise DivisionByZero("division by zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic(self.order, tuple([1 / self.coeffs[0]] + [Fraction(0)] * (len(self.coeffs) - 1)))
        # x^-1 = (product of the nontrivial Galois conjugates) / norm
        prod = Cyclotomic.rational(1, self.order)
        for a in _field(self.order).units:
            if a % self.order != 1:
                prod = prod * self.galois(a)
        norm = (self * prod).to_fraction()
        return prod * (1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                # normalized trace is invariant under field embeddings
                self._hash = hash(("cyc", self.trace() / len(self.coeffs)))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sort_key(self) -> tuple:
        return (self.order, tuple(-c for c in self.coeffs))

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in self.terms():
            if k == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}*z{self.order}^{k}")
        return " + ".join(parts)


def zeta(order: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(order, k)
