"""Correlators of [C^r/G] (and of the twisted theory of BG) as sums over stable graphs.

All weights are taken in the normalized idempotent basis e_a = phi_a / sqrt(nu_a),
where R(z) is symplectic in the plain sense.  With R^b_a(z) the entries of
rmatrix.r_matrix and s_b = sqrt(nu_b) = dim V_b / |G|:

    ordinary leaf   [z^k] sum_b R^b_a(-z) s_b u^b(z)
    dilaton leaf   -[z^(k-1)] sum_b R^b_a(-z) s_b                  (k >= 2)
    edge            [z^k w^l] (delta_ab - sum_c R^c_a(-z) R^c_b(-w)) / (z + w)
    vertex          s_a^(2 - 2g - val) * <tau_k1 ... tau_kval>_g

where u^b(z) are phi-coordinates of the insertion.  The [C^r/G] normalization
uses nubar = nu / e_1 at vertices and an extra e_1^(-1/2) on every leaf; the two
normalizations then differ by exactly e_1^(g-1) per graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import Cyclotomic, EquivariantScalar, Series2, divide_by_z_plus_w
from .chen_ruan import RepSpec, to_phi_coordinates
from .errors import HeightBelowTwo, NonRationalCoefficient, TruncationError
from .graphs import enumerate_graphs
from .psi import psi_integral
from .rmatrix import RMatrix, r_matrix

__all__ = [
    "GraphSum",
    "MODES",
    "correlator_X",
    "correlator_tw",
    "edge_weight",
    "leaf_weight_dilaton",
    "leaf_weight_ordinary",
    "required_order",
    "vertex_weight",
]

MODES = ("X", "tw")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")


def _leaf_scale(rep: RepSpec, mode: str) -> EquivariantScalar:
    one = EquivariantScalar.one(rep.nvars)
    return rep.e1() ** Fraction(-1, 2) if mode == "X" else one


def leaf_weight_ordinary(R: RMatrix, alpha: int, k: int, u, mode: str = "X") -> EquivariantScalar:
    """u[b] is a dict {power of z: coefficient} giving the series u^b(z)."""
    _check_mode(mode)
    if k > R.order:
        raise TruncationError(f"leaf height {k} exceeds the truncation order {R.order}")
    table = R.rep.table
    acc = EquivariantScalar.zero(R.rep.nvars)
    for b, series in enumerate(u):
        for a, c in series.items():
            if c and a <= k:
                r = R[b, alpha][k - a]
                if r:
                    sign = -1 if (k - a) % 2 else 1
                    acc = acc + r * c * (sign * table.sqrt_nu[b])
    return acc * _leaf_scale(R.rep, mode)


def leaf_weight_dilaton(R: RMatrix, alpha: int, k: int, mode: str = "X") -> EquivariantScalar:
    _check_mode(mode)
    if k < 2:
        raise HeightBelowTwo(f"dilaton leaves need height >= 2, got {k}")
    if k - 1 > R.order:
        raise TruncationError(f"dilaton height {k} exceeds the truncation order {R.order}")
    table = R.rep.table
    acc = EquivariantScalar.zero(R.rep.nvars)
    sign = 1 if (k - 1) % 2 else -1  # overall minus times (-1)^(k-1)
    for b in range(R.size):
        r = R[b, alpha][k - 1]
        if r:
            acc = acc + r * (sign * table.sqrt_nu[b])
    return acc * _leaf_scale(R.rep, mode)


def _edge_quotient(R: RMatrix, a: int, b: int) -> Series2:
    neg = R.at_minus_z()
    zero = EquivariantScalar.zero(R.rep.nvars)
    num = Series2.from_dict({(0, 0): EquivariantScalar.one(R.rep.nvars)} if a == b else {}, R.order, zero)
    for c in range(R.size):
        num = num - Series2.outer(neg[c][a], neg[c][b])
    return divide_by_z_plus_w(num)


def edge_weight(R: RMatrix, a: int, b: int, k: int, l: int, cache: dict | None = None) -> EquivariantScalar:
    if k + l > R.order - 1:
        raise TruncationError(f"edge heights ({k}, {l}) need truncation order >= {k + l + 1}")
    if cache is not None:
        q = cache.get((a, b))
        if q is None:
            q = cache[(a, b)] = _edge_quotient(R, a, b)
    else:
        q = _edge_quotient(R, a, b)
    return q[k, l]


def vertex_weight(rep: RepSpec, g: int, alpha: int, heights, mode: str = "X") -> EquivariantScalar:
    _check_mode(mode)
    val = len(heights)
    psi = psi_integral(g, heights)
    p = 2 - 2 * g - val
    out = EquivariantScalar.constant(rep.nvars, rep.table.sqrt_nu[alpha] ** p * psi)
    if mode == "X" and psi:
        out = out * rep.e1() ** Fraction(-p, 2)
    return out


def required_order(graphs) -> int:
    """Smallest truncation order that determines every weight of the given graphs."""
    need = 1
    for gr in graphs:
        for _, _, ka, kb in gr.edges:
            need = max(need, ka + kb + 1)
        for _, k in gr.ordered + gr.unordered:
            need = max(need, k)
        for _, k in gr.dilatons:
            need = max(need, k - 1)
    return need


@dataclass
class GraphSum:
    """Graph-sum engine for one representation and one normalization.

    ``leaf_tensor(g, n)`` is the sum over graphs with n ordered leaves of all
    weights except the ordinary-leaf ones, keyed by the (marking, height) of
    each ordered leaf.  Correlators contract it with leaf weights.
    """

    rep: RepSpec
    mode: str = "X"
    order: int | None = None
    _R: RMatrix | None = field(default=None, repr=False)
    _edges: dict = field(default_factory=dict, repr=False)
    _tensors: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        _check_mode(self.mode)

    def r(self, order: int) -> RMatrix:
        target = max(order, self.order or 0)
        if self._R is None or self._R.order < target:
            self._R = r_matrix(self.rep, target)
            self._edges = {}
        return self._R

    def _graphs(self, g: int, n_ordered: int, n_unordered: int = 0):
        graphs = enumerate_graphs(g, n_ordered, n_unordered)
        R = self.r(required_order(graphs))
        return graphs, R

    def leaf_tensor(self, g: int, n: int) -> dict:
        key = (g, n)
        if key in self._tensors:
            return self._tensors[key]
        graphs, R = self._graphs(g, n)
        tensor = self._contract(graphs, R, None)
        self._tensors[key] = tensor
        return tensor

    def _contract(self, graphs, R: RMatrix, unordered_weight) -> dict:
        rep = self.rep
        k = rep.table.num_irreps
        zero = EquivariantScalar.zero(rep.nvars)
        vcache: dict = {}
        dcache: dict = {}
        out: dict = {}
        for gr in graphs:
            heights = [gr.half_edges(v) for v in range(gr.num_vertices)]
            for marks in product(range(k), repeat=gr.num_vertices):
                w = EquivariantScalar.constant(rep.nvars, Fraction(1, gr.aut))
                for v, gv in enumerate(gr.genera):
                    vk = (gv, marks[v], tuple(sorted(heights[v])))
                    if vk not in vcache:
                        vcache[vk] = vertex_weight(rep, gv, marks[v], heights[v], self.mode)
                    w = w * vcache[vk]
                    if not w:
                        break
                if not w:
                    continue
                for a, b, ka, kb in gr.edges:
                    w = w * edge_weight(R, marks[a], marks[b], ka, kb, self._edges)
                    if not w:
                        break
                if not w:
                    continue
                for v, kd in gr.dilatons:
                    dk = (marks[v], kd)
                    if dk not in dcache:
                        dcache[dk] = leaf_weight_dilaton(R, marks[v], kd, self.mode)
                    w = w * dcache[dk]
                if unordered_weight is not None:
                    for v, ku in gr.unordered:
                        w = w * unordered_weight(marks[v], ku)
                if not w:
                    continue
                slot = tuple((marks[v], kk) for v, kk in gr.ordered)
                out[slot] = out.get(slot, zero) + w
        return {s: v for s, v in out.items() if v}

    # -- insertions -------------------------------------------------------
    def insertion_series(self, basis: str, label: int, a: int) -> list:
        """phi- (tw) or phibar- (X) coordinates of tau_a(basis element), as series."""
        if self.mode == "tw":
            if basis not in ("phi", "class"):
                raise ValueError(f"the twisted theory takes phi or class insertions, not {basis!r}")
            coords = to_phi_coordinates(self.rep.table, basis, label)
            one = EquivariantScalar.one(self.rep.nvars)
            coords = [one * c if c else EquivariantScalar.zero(self.rep.nvars) for c in coords]
        else:
            coords = to_phi_coordinates(self.rep.table, basis, label, self.rep)
        return [{a: c} if c else {} for c in coords]

    def correlator(self, g: int, insertions) -> EquivariantScalar:
        """<tau_a1(x1) ... tau_an(xn)>_g with insertions given as (basis, label, a)."""
        ins = list(insertions)
        n = len(ins)
        zero = EquivariantScalar.zero(self.rep.nvars)
        if 2 * g - 2 + n <= 0:
            raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
        tensor = self.leaf_tensor(g, n)
        R = self._R
        series = [self.insertion_series(*x) for x in ins]
        leaf: list = [dict() for _ in range(n)]
        total = zero
        for slots, w in tensor.items():
            term = w
            for j, (alpha, kk) in enumerate(slots):
                lw = leaf[j].get((alpha, kk))
                if lw is None:
                    lw = leaf[j][(alpha, kk)] = leaf_weight_ordinary(R, alpha, kk, series[j], self.mode)
                term = term * lw
                if not term:
                    break
            if term:
                total = total + term
        self._check_rational(total, ins)
        return total

    def correlator_unordered(self, g: int, n: int, insertion) -> EquivariantScalar:
        """<u, ..., u>_{g,n} / n! with the n leaves unordered (symmetry through |Aut|)."""
        if 2 * g - 2 + n <= 0:
            raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
        graphs, R = self._graphs(g, 0, n)
        series = self.insertion_series(*insertion)
        cache: dict = {}

        def uw(alpha, kk):
            if (alpha, kk) not in cache:
                cache[(alpha, kk)] = leaf_weight_ordinary(R, alpha, kk, series, self.mode)
            return cache[(alpha, kk)]

        tensor = self._contract(graphs, R, uw)
        total = sum(tensor.values(), EquivariantScalar.zero(self.rep.nvars))
        self._check_rational(total, [insertion])
        return total

    def _check_rational(self, value: EquivariantScalar, insertions) -> None:
        # class-basis correlators are always rational; phi-basis ones only when the characters are
        if self.rep.table.is_rational() or all(b in ("class", "classbar") for b, _, _ in insertions):
            if not value.is_rational():
                raise NonRationalCoefficient(f"expected rational coefficients, got {value!r}")


_engines: dict = {}


def _engine(rep: RepSpec, mode: str) -> GraphSum:
    key = (id(rep), mode)
    hit = _engines.get(key)
    if hit is None or hit.rep is not rep:
        hit = _engines[key] = GraphSum(rep, mode)
    return hit


def correlator_X(rep: RepSpec, g: int, insertions) -> EquivariantScalar:
    return _engine(rep, "X").correlator(g, insertions)


def correlator_tw(rep: RepSpec, g: int, insertions) -> EquivariantScalar:
    return _engine(rep, "tw").correlator(g, insertions)
