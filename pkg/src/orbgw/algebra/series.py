"""Truncated power series in one variable z, or two variables (z, w).

Coefficients are any ring elements supporting +, -, * and scaling by
Fraction (EquivariantScalar in practice, Fraction in tests).  A ``zero``
element of the coefficient ring is passed explicitly.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NonzeroConstantTerm, NotDivisible

__all__ = ["Series", "Series2", "divide_by_z_plus_w", "series_exp"]


class Series:
    """sum_{k <= order} c_k z^k."""

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, order: int, zero):
        coeffs = list(coeffs)[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.zero = zero

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        if k < 0:
            return self.zero
        raise IndexError(f"coefficient z^{k} lies beyond the truncation order {self.order}")

    def _check(self, other: Series):
        if other.order != self.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: Series) -> Series:
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.zero)

    def __sub__(self, other: Series) -> Series:
        self._check(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.zero)

    def __neg__(self) -> Series:
        return Series([-a for a in self.coeffs], self.order, self.zero)

    def scale(self, c) -> Series:
        return Series([a * c for a in self.coeffs], self.order, self.zero)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = self.zero
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Series(out, n, self.zero)

    def shift(self, k: int) -> Series:
        """Multiply by z^k (k >= 0), truncating."""
        return Series([self.zero] * k + self.coeffs, self.order, self.zero)

    def negate_variable(self) -> Series:
        """s(z) -> s(-z)."""
        return Series([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)], self.order, self.zero)

    def exp(self, one) -> Series:
        return series_exp(self, one)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return "Series(" + " + ".join(f"({c!r})*z^{k}" for k, c in enumerate(self.coeffs) if c) + ")"


def series_exp(s: Series, one) -> Series:
    """exp(s) truncated at the order of s; s must have zero constant term.

    Uses E' = s' E, i.e. n E_n = sum_{k=1}^n k s_k E_{n-k}.
    """
    if s.coeffs[0]:
        raise NonzeroConstantTerm("series_exp needs a zero constant term")
    n = s.order
    e = [one]
    for m in range(1, n + 1):
        acc = s.zero
        for k in range(1, m + 1):
            if s.coeffs[k]:
                acc = acc + s.coeffs[k] * e[m - k] * k
        e.append(acc * Fraction(1, m))
    return Series(e, n, s.zero)


class Series2:
    """sum_{a, b <= order} c_{a,b} z^a w^b on a full rectangle."""

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero):
        self.coeffs = [list(row) for row in coeffs]
        self.zero = zero

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_dict(cls, terms: dict, order: int, zero) -> Series2:
        rows = [[zero] * (order + 1) for _ in range(order + 1)]
        for (a, b), c in terms.items():
            rows[a][b] = rows[a][b] + c
        return cls(rows, zero)

    @classmethod
    def outer(cls, f: Series, g: Series) -> Series2:
        """f(z) * g(w)."""
        return cls([[a * b if (a and b) else f.zero for b in g.coeffs] for a in f.coeffs], f.zero)

    def __getitem__(self, ab):
        a, b = ab
        return self.coeffs[a][b]

    def __add__(self, other: Series2) -> Series2:
        return Series2([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.coeffs, other.coeffs)], self.zero)

    def __sub__(self, other: Series2) -> Series2:
        return Series2([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.coeffs, other.coeffs)], self.zero)

    def __neg__(self) -> Series2:
        return Series2([[-x for x in r] for r in self.coeffs], self.zero)

    def times_z_plus_w(self) -> Series2:
        n = self.order
        rows = [[self.zero] * (n + 1) for _ in range(n + 1)]
        for a in range(n + 1):
            for b in range(n + 1):
                acc = self.zero
                if a > 0:
                    acc = acc + self.coeffs[a - 1][b]
                if b > 0:
                    acc = acc + self.coeffs[a][b - 1]
                rows[a][b] = acc
        return Series2(rows, self.zero)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series2) and self.coeffs == other.coeffs


def divide_by_z_plus_w(num: Series2) -> Series2:
    """The quotient Q with (z + w) Q = num.

    Q_{a,b} is determined for a + b <= order - 1; entries beyond that are left
    zero.  Raises NotDivisible if num(z, -z) has a nonzero coefficient on any
    antidiagonal that lies fully inside the rectangle.
    """
    n = num.order
    zero = num.zero
    for s in range(n + 1):
        acc = zero
        for a in range(s + 1):
            c = num.coeffs[a][s - a]
            acc = acc + c if (s - a) % 2 == 0 else acc - c
        if acc:
            raise NotDivisible(f"numerator does not vanish on w = -z at total degree {s}")
    q = [[zero] * (n + 1) for _ in range(n + 1)]
    # N_{a,b} = Q_{a-1,b} + Q_{a,b-1}; walk each antidiagonal from a = 0
    for s in range(n):
        prev = zero
        for a in range(s + 1):
            b = s - a
            cur = num.coeffs[a][b + 1] - prev
            q[a][b] = cur
            prev = cur
        # closing equation N_{s+1,0} = Q_{s,0}
        if num.coeffs[s + 1][0] != q[s][0]:
            raise NotDivisible(f"inconsistent quotient at total degree {s + 1}")
    return Series2(q, zero)
