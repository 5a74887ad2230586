"""Laurent polynomials in the equivariant weights w_1..w_m.

Exponents are rationals (fractional powers come from ages and from sqrt(e_1));
coefficients are cyclotomic numbers.  Only monomial denominators are allowed:
dividing by anything with more than one term raises NonMonomialDivision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import DivisionByZero, NonMonomialDivision
from .cyclotomic import Cyclotomic

__all__ = ["EquivariantScalar"]

_ONE = Cyclotomic.rational(1)


def _as_cyc(c) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        return c
    return Cyclotomic.rational(c)


class EquivariantScalar:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        self.terms: dict = {}
        if terms:
            for e, c in terms.items():
                c = _as_cyc(c)
                if not c.is_zero():
                    e = tuple(Fraction(x) for x in e)
                    if len(e) != nvars:
                        raise ValueError("exponent length does not match nvars")
                    self.terms[e] = c

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> EquivariantScalar:
        out = cls.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        return out

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> EquivariantScalar:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> EquivariantScalar:
        c = _as_cyc(c)
        if c.is_zero():
            return cls.zero(nvars)
        return cls._raw(nvars, {(Fraction(0),) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> EquivariantScalar:
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exps: Iterable, coeff=1) -> EquivariantScalar:
        exps = tuple(Fraction(x) for x in exps)
        c = _as_cyc(coeff)
        if c.is_zero():
            return cls.zero(len(exps))
        return cls._raw(len(exps), {exps: c})

    @classmethod
    def variable(cls, nvars: int, i: int, power=1) -> EquivariantScalar:
        e = [Fraction(0)] * nvars
        e[i] = Fraction(power)
        return cls.monomial(e)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def has_integer_exponents(self) -> bool:
        return all(x.denominator == 1 for e in self.terms for x in e)

    def constant_term(self) -> Cyclotomic:
        return self.terms.get((Fraction(0),) * self.nvars, Cyclotomic.rational(0))

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, EquivariantScalar):
            if other.nvars != self.nvars:
                raise ValueError("mismatched number of equivariant variables")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return EquivariantScalar.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return EquivariantScalar._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> EquivariantScalar:
        return EquivariantScalar._raw(self.nvars, {e: -c for e, c in self.terms.items()})

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
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if not other:
                return EquivariantScalar.zero(self.nvars)
            return EquivariantScalar._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return EquivariantScalar._raw(self.nvars, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if not other:
                raise DivisionByZero("division of an equivariant scalar by zero")
            inv = other.inverse() if isinstance(other, Cyclotomic) else 1 / Fraction(other)
            return self * inv
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> EquivariantScalar:
        if not self.terms:
            raise DivisionByZero("division by the zero equivariant scalar")
        if len(self.terms) != 1:
            raise NonMonomialDivision(f"cannot invert non-monomial {self!r}")
        (e, c), = self.terms.items()
        return EquivariantScalar._raw(self.nvars, {tuple(-x for x in e): c.inverse()})

    def __pow__(self, k) -> EquivariantScalar:
        k = Fraction(k)
        if k.denominator != 1 or k < 0:
            if len(self.terms) != 1:
                raise NonMonomialDivision("only monomials admit negative or fractional powers")
            (e, c), = self.terms.items()
            if k.denominator != 1 and c != 1:
                raise ValueError("fractional powers need a unit coefficient")
            cc = c ** int(k) if k.denominator == 1 else c
            return EquivariantScalar._raw(self.nvars, {tuple(x * k for x in e): cc})
        k = int(k)
        result = EquivariantScalar.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_coefficients(self, fn) -> EquivariantScalar:
        return EquivariantScalar(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def conjugate(self) -> EquivariantScalar:
        return EquivariantScalar._raw(self.nvars, {e: c.conjugate() for e, c in self.terms.items()})

    def evaluate(self, weights) -> Cyclotomic:
        """Exact substitution w_i -> weights[i] (rationals); integer exponents only."""
        total = Cyclotomic.rational(0)
        for e, c in self.terms.items():
            v = Fraction(1)
            for w, x in zip(weights, e):
                if x.denominator != 1:
                    raise ValueError("exact substitution needs integer exponents")
                v *= Fraction(w) ** int(x)
            total = total + c * v
        return total

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = EquivariantScalar.constant(self.nvars, other)
        if not isinstance(other, EquivariantScalar):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"w{i + 1}" if x == 1 else f"w{i + 1}^({x})" for i, x in enumerate(e) if x
            )
            coeff = f"({c!r})"
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)
