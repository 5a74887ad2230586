"""Stable graphs with genus and height decorations, up to isomorphism.

A graph carries, per vertex, a genus and (optionally) an irrep marking; edges
(loops allowed) with a height on each half-edge; ordered leaves pinned to a
slot; unordered leaves; and dilaton leaves of height >= 2.  Only graphs that
satisfy the vertex dimension constraint

    sum of heights at v = 3 g(v) - 3 + val(v)

are produced, since all others have zero weight.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial

__all__ = ["StableGraph", "enumerate_graphs", "enumerate_marked_graphs", "brute_force_aut"]


@dataclass(frozen=True)
class StableGraph:
    genera: tuple
    edges: tuple  # (u, v, k_u, k_v) with u <= v; loops have k_u <= k_v
    ordered: tuple  # (vertex, height) indexed by slot
    unordered: tuple  # sorted (vertex, height)
    dilatons: tuple  # sorted (vertex, height)
    aut: int
    markings: tuple | None = None

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    def genus(self) -> int:
        return sum(self.genera) + len(self.edges) - self.num_vertices + 1

    def half_edges(self, v: int) -> list:
        """Heights of all half-edges and leaves at v."""
        out = []
        for a, b, ka, kb in self.edges:
            if a == v:
                out.append(ka)
            if b == v:
                out.append(kb)
        out += [k for u, k in self.ordered if u == v]
        out += [k for u, k in self.unordered if u == v]
        out += [k for u, k in self.dilatons if u == v]
        return out

    def valence(self, v: int) -> int:
        return len(self.half_edges(v))

    def validate(self) -> None:
        for v, gv in enumerate(self.genera):
            val = self.valence(v)
            if 2 * gv - 2 + val <= 0:
                raise ValueError(f"vertex {v} is unstable")
            if sum(self.half_edges(v)) != 3 * gv - 3 + val:
                raise ValueError(f"vertex {v} violates the dimension constraint")
        if any(k < 2 for _, k in self.dilatons):
            raise ValueError("dilaton leaf of height < 2")
        if not _connected(self.num_vertices, [(a, b) for a, b, _, _ in self.edges]):
            raise ValueError("graph is disconnected")

    def to_json(self) -> dict:
        d = {
            "genera": list(self.genera),
            "edges": [list(e) for e in self.edges],
            "ordered_leaves": [list(x) for x in self.ordered],
            "unordered_leaves": [list(x) for x in self.unordered],
            "dilaton_leaves": [list(x) for x in self.dilatons],
            "aut": self.aut,
        }
        if self.markings is not None:
            d["markings"] = list(self.markings)
        return d


def _connected(nv: int, pairs) -> bool:
    adj = {v: set() for v in range(nv)}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == nv


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _partitions(total: int, parts: int, low: int, high: int | None = None):
    """Nonincreasing tuples of `parts` integers >= low summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = total - low * (parts - 1)
    if high is not None:
        top = min(top, high)
    for first in range(top, low - 1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, low, first):
            yield (first,) + rest


def _nonincreasing(length: int, bound: int):
    """Nonincreasing tuples of nonnegative integers with sum <= bound."""
    for s in range(bound + 1):
        yield from _partitions(s, length, 0)


def _norm_edge(a, b, ka, kb):
    if a > b or (a == b and ka > kb):
        return (b, a, kb, ka)
    return (a, b, ka, kb)


def _form(labels, edges, ordered, unordered, dilatons, perm):
    vert = [None] * len(labels)
    for old, new in enumerate(perm):
        vert[new] = labels[old]
    return (
        tuple(vert),
        tuple(sorted(_norm_edge(perm[a], perm[b], ka, kb) for a, b, ka, kb in edges)),
        tuple((perm[v], k) for v, k in ordered),
        tuple(sorted((perm[v], k) for v, k in unordered)),
        tuple(sorted((perm[v], k) for v, k in dilatons)),
    )


def _canonical(labels, edges, ordered, unordered, dilatons):
    """(minimal form over vertex relabelings, number of relabelings that fix it)."""
    best, count = None, 0
    for perm in permutations(range(len(labels))):
        f = _form(labels, edges, ordered, unordered, dilatons, perm)
        if best is None or f < best:
            best, count = f, 1
        elif f == best:
            count += 1
    return best, count


def _half_edge_symmetry(edges, unordered, dilatons) -> int:
    out = 1
    for mult in Counter(edges).values():
        out *= factorial(mult)
    for a, b, ka, kb in edges:
        if a == b and ka == kb:
            out *= 2
    for mult in Counter(unordered).values():
        out *= factorial(mult)
    for mult in Counter(dilatons).values():
        out *= factorial(mult)
    return out


def _build(form, count, markings_present: bool) -> StableGraph:
    vert, edges, ordered, unordered, dilatons = form
    genera = tuple(v[0] for v in vert)
    marks = tuple(v[1] for v in vert) if markings_present else None
    aut = count * _half_edge_symmetry(edges, unordered, dilatons)
    return StableGraph(genera, edges, ordered, unordered, dilatons, aut, marks)


def _height_choices(dim: int, n_free: int, n_unord: int, n_dil: int):
    """Heights for n_free distinguishable slots, a multiset of n_unord, a multiset of n_dil >= 2."""
    for d_dil in range(2 * n_dil, dim + 1):
        for dil in _partitions(d_dil, n_dil, 2):
            for d_un in range(dim - d_dil + 1):
                for un in _partitions(d_un, n_unord, 0):
                    for free in _compositions(dim - d_dil - d_un, n_free):
                        yield free, un, dil


def _labeled_graphs(g: int, n_ordered: int, n_unordered: int):
    """All decorated graphs over labeled vertices (with repetitions across isomorphism)."""
    n = n_ordered + n_unordered
    max_dil = 3 * g - 3 + n
    max_vertices = max(1, 2 * g - 2 + n + max(0, max_dil))
    for nv in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(nv) for j in range(i, nv)]
        for genera in _nonincreasing(nv, g):
            ne = g - sum(genera) + nv - 1
            if ne < nv - 1:
                continue
            m_max = 3 * g - 3 + n - ne
            if m_max < 0:
                continue
            for edges in combinations_with_replacement(pairs, ne):
                if not _connected(nv, edges):
                    continue
                edge_deg = [0] * nv
                for a, b in edges:
                    edge_deg[a] += 1
                    edge_deg[b] += 1
                for m in range(m_max + 1):
                    for dil in _compositions(m, nv):
                        for ordv in product(range(nv), repeat=n_ordered):
                            for unv in _compositions(n_unordered, nv):
                                yield from _decorate(genera, edges, edge_deg, ordv, unv, dil)


def _decorate(genera, edges, edge_deg, ordv, unv, dil):
    nv = len(genera)
    per_vertex = []
    for v in range(nv):
        n_ord_v = sum(1 for x in ordv if x == v)
        val = edge_deg[v] + n_ord_v + unv[v] + dil[v]
        if 2 * genera[v] - 2 + val <= 0:
            return
        dim = 3 * genera[v] - 3 + val
        if 2 * dil[v] > dim:
            return
        n_free = edge_deg[v] + n_ord_v
        per_vertex.append(list(_height_choices(dim, n_free, unv[v], dil[v])))
    # distinguishable slots at each vertex: half-edges in edge order, then ordered leaves
    for choice in product(*per_vertex):
        cursor = [0] * nv
        out_edges = []
        for a, b in edges:
            ka = choice[a][0][cursor[a]]
            cursor[a] += 1
            kb = choice[b][0][cursor[b]]
            cursor[b] += 1
            out_edges.append((a, b, ka, kb))
        ordered = []
        for v in ordv:
            ordered.append((v, choice[v][0][cursor[v]]))
            cursor[v] += 1
        unordered = [(v, k) for v in range(nv) for k in choice[v][1]]
        dilatons = [(v, k) for v in range(nv) for k in choice[v][2]]
        yield genera, out_edges, ordered, unordered, dilatons


@lru_cache(maxsize=None)
def enumerate_graphs(g: int, n_ordered: int, n_unordered: int = 0) -> tuple:
    """Isomorphism classes of unmarked decorated stable graphs, in a deterministic order."""
    if 2 * g - 2 + n_ordered + n_unordered <= 0 or g < 0:
        return ()
    found = {}
    for genera, edges, ordered, unordered, dilatons in _labeled_graphs(g, n_ordered, n_unordered):
        labels = tuple((x, 0) for x in genera)
        form, count = _canonical(labels, edges, ordered, unordered, dilatons)
        if form not in found:
            found[form] = _build(form, count, False)
    return tuple(found[f] for f in sorted(found))


def enumerate_marked_graphs(g: int, n_ordered: int, n_unordered: int, num_markings: int, markings=None) -> tuple:
    """Isomorphism classes with irrep markings on vertices.

    ``markings`` optionally restricts the allowed marking set (iterable of labels).
    """
    allowed = tuple(range(num_markings)) if markings is None else tuple(markings)
    found = {}
    for base in enumerate_graphs(g, n_ordered, n_unordered):
        for marks in product(allowed, repeat=base.num_vertices):
            labels = tuple(zip(base.genera, marks))
            form, count = _canonical(labels, base.edges, base.ordered, base.unordered, base.dilatons)
            if form not in found:
                found[form] = _build(form, count, True)
    return tuple(found[f] for f in sorted(found))


def brute_force_aut(graph: StableGraph) -> int:
    """Count automorphisms directly as bijections of vertices, edges and leaves.

    For each genus- and marking-preserving vertex bijection, edges must map to
    edges (in either orientation, so a loop with equal heights counts twice)
    and leaves to leaves of the same kind and height; ordered leaves keep
    their slot.  The number of such maps is a permanent, computed by
    exhaustive recursion.
    """
    nv = graph.num_vertices
    marks = graph.markings or (0,) * nv
    edges = list(graph.edges)
    leaves = [(v, k, ("o", j)) for j, (v, k) in enumerate(graph.ordered)]
    leaves += [(v, k, "u") for v, k in graph.unordered]
    leaves += [(v, k, "d") for v, k in graph.dilatons]
    total = 0
    for perm in permutations(range(nv)):
        if any((graph.genera[v], marks[v]) != (graph.genera[perm[v]], marks[perm[v]]) for v in range(nv)):
            continue
        em = [
            [
                int((perm[a], ka, perm[b], kb) == (c, kc, d, kd)) + int((perm[a], ka, perm[b], kb) == (d, kd, c, kc))
                for c, d, kc, kd in edges
            ]
            for a, b, ka, kb in edges
        ]
        lm = [[int((perm[v], k, t) == (w, l, s)) for w, l, s in leaves] for v, k, t in leaves]
        total += _permanent(em) * _permanent(lm)
    return total


def _permanent(m) -> int:
    n = len(m)

    @lru_cache(maxsize=None)
    def rec(i, mask):
        if i == n:
            return 1
        return sum(m[i][j] * rec(i + 1, mask | (1 << j)) for j in range(n) if m[i][j] and not mask >> j & 1)

    return rec(0, 0)
