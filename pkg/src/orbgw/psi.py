"""Intersection numbers of psi classes on the moduli of stable curves."""

from __future__ import annotations

import threading
from fractions import Fraction
from itertools import product

from .errors import UnstableInput

__all__ = ["psi_integral", "double_factorial"]

_memo: dict = {}
_lock = threading.Lock()


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def psi_integral(g: int, exponents) -> Fraction:
    """<tau_{a_1} ... tau_{a_n}>_g; zero unless sum a_i = 3g - 3 + n."""
    exps = tuple(sorted(int(a) for a in exponents))
    n = len(exps)
    if g < 0 or any(a < 0 for a in exps):
        raise UnstableInput(f"invalid key g={g}, exponents={exps}")
    if 2 * g - 2 + n <= 0:
        raise UnstableInput(f"(g, n) = ({g}, {n}) is unstable")
    return _psi(g, exps)


def _psi(g: int, exps: tuple) -> Fraction:
    n = len(exps)
    if g < 0 or 2 * g - 2 + n <= 0 or sum(exps) != 3 * g - 3 + n:
        return Fraction(0)
    cached = _memo.get((g, exps))
    if cached is not None:
        return cached
    value = _compute(g, exps)
    with _lock:
        _memo.setdefault((g, exps), value)
    return value


def _compute(g: int, exps: tuple) -> Fraction:
    n = len(exps)
    if (g, exps) == (0, (0, 0, 0)):
        return Fraction(1)
    if (g, exps) == (1, (1,)):
        return Fraction(1, 24)
    if exps[0] == 0:
        # string equation
        rest = exps[1:]
        total = Fraction(0)
        for j, a in enumerate(rest):
            if a > 0:
                total += _psi(g, tuple(sorted(rest[:j] + (a - 1,) + rest[j + 1 :])))
        return total
    if exps[0] == 1:
        # dilaton equation
        rest = exps[1:]
        return (2 * g - 2 + len(rest)) * _psi(g, rest)
    # DVV on the largest exponent k + 1
    k = exps[-1] - 1
    rest = exps[:-1]
    total = Fraction(0)
    for j, d in enumerate(rest):
        new = rest[:j] + (d + k,) + rest[j + 1 :]
        total += Fraction(double_factorial(2 * k + 2 * d + 1), double_factorial(2 * d - 1)) * _psi(
            g, tuple(sorted(new))
        )
    half = Fraction(0)
    for r in range(k):
        s = k - 1 - r
        w = double_factorial(2 * r + 1) * double_factorial(2 * s + 1)
        half += w * _psi(g - 1, tuple(sorted(rest + (r, s))))
        m = len(rest)
        for mask in product((0, 1), repeat=m):
            left = tuple(a for a, b in zip(rest, mask) if b == 0)
            right = tuple(a for a, b in zip(rest, mask) if b == 1)
            for g1 in range(g + 1):
                x = _psi(g1, tuple(sorted(left + (r,))))
                if x:
                    half += w * x * _psi(g - g1, tuple(sorted(right + (s,))))
    total += half / 2
    return total / double_factorial(2 * k + 3)
