"""JSON encoding of exact values: rationals as "p/q" strings."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Cyclotomic, EquivariantScalar

__all__ = [
    "cyclotomic_from_json",
    "cyclotomic_to_json",
    "dumps",
    "rational_from_json",
    "rational_to_json",
    "scalar_from_json",
    "scalar_to_json",
    "value_to_json",
]


def rational_to_json(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rational_from_json(s) -> Fraction:
    return Fraction(s)


def cyclotomic_to_json(c) -> dict:
    if not isinstance(c, Cyclotomic):
        c = Cyclotomic.rational(c)
    if c.is_rational():
        return {"order": 1, "terms": [[0, rational_to_json(c.to_fraction())]]}
    return {"order": c.order, "terms": [[k, rational_to_json(q)] for k, q in c.terms()]}


def cyclotomic_from_json(d) -> Cyclotomic:
    if isinstance(d, (int, str)):
        return Cyclotomic.rational(Fraction(d))
    return Cyclotomic.from_terms(int(d["order"]), [(int(k), Fraction(q)) for k, q in d["terms"]])


def scalar_to_json(s: EquivariantScalar) -> list:
    return [{"exps": [str(x) for x in e], "coeff": cyclotomic_to_json(c)} for e, c in s.sorted_terms()]


def scalar_from_json(data: list, nvars: int | None = None) -> EquivariantScalar:
    if not data:
        return EquivariantScalar.zero(nvars or 0)
    terms = {tuple(Fraction(x) for x in t["exps"]): cyclotomic_from_json(t["coeff"]) for t in data}
    n = len(next(iter(terms)))
    out = EquivariantScalar.zero(n)
    for e, c in terms.items():
        out = out + EquivariantScalar.monomial(e, c)
    return out


def value_to_json(v):
    """Dispatch on the exact type."""
    if isinstance(v, EquivariantScalar):
        return scalar_to_json(v)
    if isinstance(v, Cyclotomic):
        return cyclotomic_to_json(v)
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return rational_to_json(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
