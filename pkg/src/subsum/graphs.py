"""Simple graphs on bitset rows, and the sum graphs built from (G, H).

Row ``adj[u]`` is a Python int whose bit v is set when u and v are adjacent.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .groups import Group, Subgroup, _check_parent, intersect
from .errors import InvalidParameterError, ParseError


def bits(x: int) -> Iterable[int]:
    """Indices of the set bits of x, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InvalidParameterError("need one adjacency row per vertex")

    def validate(self) -> "Graph":
        """Check symmetry and irreflexivity; returns self."""
        for u, row in enumerate(self.adj):
            if row >> u & 1:
                raise InvalidParameterError(f"self-loop at {u}")
            if row >> self.n:
                raise InvalidParameterError(f"row {u} names a vertex >= {self.n}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise InvalidParameterError(f"adjacency not symmetric at ({u}, {v})")
        return self

    @classmethod
    def from_matrix(cls, a, labels=None) -> "Graph":
        a = np.asarray(a, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidParameterError("adjacency matrix must be square")
        if (a != a.T).any() or a.diagonal().any():
            raise InvalidParameterError("adjacency matrix must be symmetric with zero diagonal")
        rows = tuple(
            int.from_bytes(np.packbits(r, bitorder="little").tobytes(), "little") for r in a
        )
        return cls(len(rows), rows, None if labels is None else tuple(labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise InvalidParameterError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(pos[w] for w in bits(self.adj[v]) if w in pos))
        labels = None if self.labels is None else tuple(self.labels[v] for v in vertices)
        return Graph(len(rows), tuple(rows), labels)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all(self.adj[v] & m == 0 for v in vs)

    def dominates(self, vertices: Iterable[int]) -> bool:
        covered = 0
        for v in vertices:
            covered |= self.adj[v] | 1 << v
        return covered == self.vertex_mask


def complement(gr: Graph) -> Graph:
    full = gr.vertex_mask
    rows = tuple(full & ~row & ~(1 << u) for u, row in enumerate(gr.adj))
    return Graph(gr.n, rows, gr.labels)


def connected_components(gr: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    unseen = gr.vertex_mask
    comps = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= gr.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        unseen &= ~comp
        comps.append(tuple(bits(comp)))
    return comps


# -- sum graphs ---------------------------------------------------------------


def _labels(g: Group):
    return tuple(g.from_index(i) for i in range(g.order))


def _sum_graph(g: Group, allowed: np.ndarray) -> Graph:
    """Graph with x ~ y iff x != y and x + y lies in the boolean mask ``allowed``."""
    a = allowed[g.sum_table]
    np.fill_diagonal(a, False)
    return Graph.from_matrix(a, _labels(g))


def build_extended(g: Group, h: Subgroup) -> Graph:
    """Extended subgroup sum graph: x ~ y iff x + y is in H."""
    _check_parent(g, h)
    return _sum_graph(g, h.mask)


def build_subgroup_sum(g: Group, h: Subgroup) -> Graph:
    """Subgroup sum graph: x ~ y iff x + y is in H and nonzero."""
    _check_parent(g, h)
    allowed = h.mask.copy()
    allowed[0] = False
    return _sum_graph(g, allowed)


def build_generalized(g: Group, h: Subgroup, kk: Subgroup) -> Graph:
    """x ~ y iff x + y lies in H but not in K (K is replaced by H meet K)."""
    _check_parent(g, h)
    _check_parent(g, kk)
    kk = intersect(h, kk)
    return _sum_graph(g, h.mask & ~kk.mask)


# -- component recognition ----------------------------------------------------


class Kind(str, enum.Enum):
    COMPLETE_MINUS_MATCHING = "CompleteMinusMatching"
    BIPARTITE_MINUS_MATCHING = "CompleteBipartiteMinusMatching"
    UNSTRUCTURED = "Unstructured"


@dataclass(frozen=True, order=True)
class ComponentProfile:
    """Isomorphism type of a structured component.

    ``part_sizes`` is ``(k,)`` for K_k minus a matching and ``(k, k)`` for
    K_{k,k} minus a matching; ``matching_size`` counts the deleted edges.
    Unstructured components carry ``(vertex count,)`` and ``matching_size`` 0.
    """

    kind: Kind
    part_sizes: tuple[int, ...]
    matching_size: int = 0

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes)

    @property
    def edge_count(self) -> int:
        if self.kind is Kind.COMPLETE_MINUS_MATCHING:
            (c,) = self.part_sizes
            return c * (c - 1) // 2 - self.matching_size
        if self.kind is Kind.BIPARTITE_MINUS_MATCHING:
            j = self.part_sizes[0]
            return j * j - self.matching_size
        raise ValueError("edge count of an unstructured component is unknown")

    def __str__(self):
        if self.kind is Kind.COMPLETE_MINUS_MATCHING:
            base = f"K{self.part_sizes[0]}"
        elif self.kind is Kind.BIPARTITE_MINUS_MATCHING:
            base = f"K{self.part_sizes[0]},{self.part_sizes[1]}"
        else:
            return f"?{self.part_sizes[0]}"
        return base if self.matching_size == 0 else f"{base}-{self.matching_size}"


def complete_minus(k: int, s: int = 0) -> ComponentProfile:
    return ComponentProfile(Kind.COMPLETE_MINUS_MATCHING, (k,), s)


def bipartite_minus(k: int, s: int = 0) -> ComponentProfile:
    return ComponentProfile(Kind.BIPARTITE_MINUS_MATCHING, (k, k), s)


def normalize_profile(p: ComponentProfile) -> list[ComponentProfile]:
    """Rewrite a nominal component into the connected pieces it really is.

    Two kinds of degeneracy are folded here: nominal components that are
    disconnected (K_2 or K_{1,1} or K_{2,2} minus a perfect matching), and
    graphs with two descriptions (K_{1,1} = K_2, K_{2,2} = K_4 minus a perfect
    matching), for which the complete form is canonical.  This is the form
    :func:`components_with_profiles` reports.
    """
    if p.kind is Kind.COMPLETE_MINUS_MATCHING:
        if p.part_sizes == (2,) and p.matching_size == 1:
            return [complete_minus(1)] * 2
        return [p]
    if p.kind is Kind.BIPARTITE_MINUS_MATCHING:
        j, s = p.part_sizes[0], p.matching_size
        if j == 1:
            return [complete_minus(2)] if s == 0 else [complete_minus(1)] * 2
        if j == 2:
            return [complete_minus(4, 2)] if s == 0 else [complete_minus(2)] * 2
    return [p]


def profile_multiset(profiles: Iterable[ComponentProfile]) -> Counter:
    out: Counter = Counter()
    for p in profiles:
        out.update(normalize_profile(p))
    return out


def _recognize(gr: Graph, comp: tuple[int, ...]) -> ComponentProfile:
    cm = mask_of(comp)
    c = len(comp)
    missing = [cm & ~gr.adj[v] & ~(1 << v) for v in comp]
    if all(popcount(x) <= 1 for x in missing):
        return complete_minus(c, sum(1 for x in missing if x) // 2)

    if c % 2 == 0:
        j = c // 2
        side = {comp[0]: 0}
        stack = [comp[0]]
        ok = True
        while stack and ok:
            v = stack.pop()
            for w in bits(gr.adj[v]):
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    ok = False
                    break
        if ok:
            left = [v for v in comp if side[v] == 0]
            degrees = {gr.degree(v) for v in comp}
            if len(left) == j and degrees == {j}:
                return bipartite_minus(j, 0)
            if len(left) == j and degrees == {j - 1}:
                return bipartite_minus(j, j)
    return ComponentProfile(Kind.UNSTRUCTURED, (c,), 0)


def components_with_profiles(gr: Graph) -> list[tuple[tuple[int, ...], ComponentProfile]]:
    """Connected components paired with their recognised structure."""
    return [(comp, _recognize(gr, comp)) for comp in connected_components(gr)]


# -- export -------------------------------------------------------------------


def _label_text(label) -> str:
    if isinstance(label, (tuple, list)):
        return "(" + ",".join(str(x) for x in label) + ")"
    return str(label)


def to_json(gr: Graph) -> str:
    doc = {
        "n": gr.n,
        "edges": [[u, v] for u, v in gr.edges()],
        "labels": None if gr.labels is None else [list(lab) for lab in gr.labels],
    }
    return json.dumps(doc)


def from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError('graph JSON needs "n" and "edges"', text, 0)
    labels = doc.get("labels")
    if labels is not None:
        labels = [tuple(lab) if isinstance(lab, list) else lab for lab in labels]
    try:
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (TypeError, ValueError) as exc:
        raise ParseError("edges must be pairs of integers", text, 0) from exc
    return Graph.from_edges(int(doc["n"]), edges, labels)


def to_dot(gr: Graph, name: str = "G") -> str:
    """Graphviz source with one cluster per connected component."""
    lines = [f'graph "{name}" {{']
    for ci, (comp, prof) in enumerate(components_with_profiles(gr)):
        lines.append(f"  subgraph cluster_{ci} {{")
        lines.append(f'    label="{prof}";')
        for v in comp:
            text = _label_text(gr.labels[v]) if gr.labels is not None else str(v)
            lines.append(f'    {v} [label="{text}"];')
        lines.append("  }")
    for u, v in gr.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
