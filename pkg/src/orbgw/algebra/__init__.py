"""Exact coefficient substrate: cyclotomic numbers, equivariant Laurent
polynomials, truncated series and Bernoulli polynomials."""

from .bernoulli import bernoulli_number, bernoulli_poly
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, zeta
from .scalar import EquivariantScalar
from .series import Series, Series2, divide_by_z_plus_w, series_exp

__all__ = [
    "Cyclotomic",
    "EquivariantScalar",
    "Series",
    "Series2",
    "bernoulli_number",
    "bernoulli_poly",
    "cyclotomic_polynomial",
    "divide_by_z_plus_w",
    "euler_phi",
    "series_exp",
    "zeta",
]
