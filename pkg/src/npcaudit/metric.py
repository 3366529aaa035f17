"""
Metric links of codimension-2 faces in regular complexes.

In a complex whose edges all have unit length, the link of a face of
codimension 2 inside an m-simplex is a spherical arc of length
``arccos(1/m)``. The link of such a face in the whole complex is therefore
a weighted graph, and the link condition reduces to a girth bound of 2π.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import networkx as nx

from .complex import ComplexError, SimplicialComplex, canonical_loop, loop_edges, simplex

__all__ = [
    "TWO_PI",
    "DEFAULT_TOL",
    "MetricGraph",
    "GirthResult",
    "LinkCheck",
    "UnsupportedStructure",
    "dihedral_angle",
    "codim2_link_graph",
    "codim2_simplices",
    "metric_girth",
    "edge_link_passes",
    "girth_threshold",
]

TWO_PI = 2.0 * math.pi
DEFAULT_TOL = 1e-9


class UnsupportedStructure(ComplexError):
    """The star of a face mixes facets of different codimension."""


def dihedral_angle(m: int) -> float:
    """Angle of a regular unit ``m``-simplex along a codimension-2 face, ``arccos(1/m)``."""
    if m < 2:
        raise ValueError("dihedral angles need a simplex of dimension >= 2")
    return math.acos(1.0 / m)


def girth_threshold(m: int) -> int:
    """Least number of ``m``-simplices around a codimension-2 face giving total angle >= 2π.

    A cycle of exactly 2π counts as long enough (m = 2 gives 6).
    """
    angle = dihedral_angle(m)
    k = max(1, math.ceil(TWO_PI / angle) - 1)
    while k * angle < TWO_PI - 1e-12:
        k += 1
    return k


@dataclass(frozen=True)
class MetricGraph:
    """Simple graph with positive edge lengths in radians.

    ``edges`` maps sorted vertex pairs to weights.
    """

    vertices: frozenset
    edges: dict

    def __post_init__(self):
        for (u, v), w in self.edges.items():
            if u == v or u > v:
                raise ValueError(f"edge keys must be sorted distinct pairs, got {(u, v)}")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {(u, v)} uses an unknown vertex")
            if not w > 0:
                raise ValueError(f"edge weights must be positive, got {w}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable[int] = ()) -> "MetricGraph":
        emap = {}
        vs = set(vertices)
        for u, v, w in edges:
            key = (min(u, v), max(u, v))
            if key in emap:
                raise ValueError(f"parallel edge {key}")
            emap[key] = float(w)
            vs.update(key)
        return cls(frozenset(vs), emap)

    def weight(self, u: int, v: int) -> float:
        return self.edges[(min(u, v), max(u, v))]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        for (u, v), w in sorted(self.edges.items()):
            g.add_edge(u, v, weight=w)
        return g

    def cycle_length(self, cycle) -> float:
        return math.fsum(self.weight(u, v) for u, v in loop_edges(cycle))


@dataclass(frozen=True)
class GirthResult:
    length: float
    cycle: Optional[tuple] = None

    @property
    def finite(self) -> bool:
        return self.cycle is not None


@dataclass(frozen=True)
class LinkCheck:
    simplex: tuple
    passed: bool
    girth: GirthResult
    tol: float = DEFAULT_TOL

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "simplex": list(self.simplex),
            "girth": self.girth.length if self.girth.finite else "inf",
            "cycle": list(self.girth.cycle) if self.girth.finite else [],
            "threshold": round(TWO_PI, 9),
            "pass": self.passed,
        }


def codim2_link_graph(K: SimplicialComplex, s: Iterable[int]) -> MetricGraph:
    """Metric link of a face whose star consists of simplices two dimensions higher.

    One vertex per ``w`` with ``s ∪ {w}`` a simplex, one edge per facet over
    ``s`` weighted by the dihedral angle of that facet.

    Raises
    ------
    UnsupportedStructure
        If some facet containing ``s`` is not exactly two dimensions larger.
    """
    s = simplex(s)
    if not s:
        raise ComplexError("the empty simplex has no metric link")
    if not K.has(s):
        raise ComplexError(f"simplex {list(s)} is not in the complex")
    ss = frozenset(s)
    edges = []
    for f in K.sorted_facets():
        if not ss <= frozenset(f):
            continue
        rest = [v for v in f if v not in ss]
        if len(rest) != 2:
            raise UnsupportedStructure(
                f"facet {list(f)} has codimension {len(rest)} over {list(s)}; expected 2"
            )
        edges.append((rest[0], rest[1], dihedral_angle(len(f) - 1)))
    return MetricGraph.from_edges(edges)


def codim2_simplices(K: SimplicialComplex) -> list[tuple]:
    """Nonempty simplices that are codimension 2 in at least one facet, sorted."""
    out = {s for f in K.facets if len(f) >= 3 for s in combinations(f, len(f) - 2)}
    return sorted(out, key=lambda s: (len(s), s))


def metric_girth(G: MetricGraph) -> GirthResult:
    """Shortest simple cycle of a weighted graph.

    For each edge ``uv`` the edge is removed and a shortest ``u``-``v`` path
    is found; the best edge-plus-path total is the girth. Lengths are
    re-summed exactly over the witness cycle, and ties go to the
    lexicographically least canonical cycle among the candidates.
    """
    g = G.to_networkx()
    best = None
    for (u, v), w in sorted(G.edges.items()):
        g.remove_edge(u, v)
        try:
            path = nx.dijkstra_path(g, u, v, weight="weight")
        except nx.NetworkXNoPath:
            path = None
        g.add_edge(u, v, weight=w)
        if path is None:
            continue
        cyc = canonical_loop(path)
        cand = (G.cycle_length(cyc), cyc)
        if best is None or cand < best:
            best = cand
    if best is None:
        return GirthResult(math.inf, None)
    return GirthResult(best[0], best[1])


def edge_link_passes(K: SimplicialComplex, s: Iterable[int], tol: float = DEFAULT_TOL) -> LinkCheck:
    """Short-loop test on the metric link of a codimension-2 face.

    Passes iff the link girth is at least ``2π - tol``.
    """
    s = simplex(s)
    girth = metric_girth(codim2_link_graph(K, s))
    return LinkCheck(s, girth.length >= TWO_PI - tol, girth, tol)
