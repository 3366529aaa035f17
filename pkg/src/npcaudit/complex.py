"""
Abstract simplicial complexes stored by their facets.

A simplex is a sorted tuple of non-negative integer vertex ids. A complex
keeps only its inclusion-maximal simplices; every other face is implied.
Edges have unit length throughout, so no metric data is stored here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "ComplexError",
    "simplex",
    "from_facets",
    "contains_simplex",
    "all_faces",
    "all_simplices",
    "combinatorial_link",
    "induced_subcomplex",
    "is_subcomplex",
    "is_full_in",
    "is_flag",
    "join",
    "combinatorial_distance",
    "enumerate_tight_cycles",
    "canonical_loop",
    "loop_edges",
    "is_tight",
]

Simplex = tuple  # sorted tuple[int, ...]


class ComplexError(ValueError):
    """Malformed input or a query outside the domain of a complex."""


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a vertex collection; rejects repeats and negatives."""
    vs = list(vertices)
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ComplexError(f"vertex ids must be non-negative integers, got {v!r}")
    out = tuple(sorted(vs))
    if len(set(out)) != len(out):
        raise ComplexError(f"repeated vertex in simplex {vs}")
    return out


def _maximal(simplices: Iterable[Simplex]) -> frozenset:
    # longest first, so a candidate only has to be compared against kept ones
    cands = sorted(set(simplices), key=lambda s: (-len(s), s))
    kept: list[frozenset] = []
    out = []
    for s in cands:
        if not s:
            continue
        fs = frozenset(s)
        if any(fs <= k for k in kept):
            continue
        kept.append(fs)
        out.append(s)
    return frozenset(out)


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Finite abstract simplicial complex given by its facets.

    Instances are immutable; derived data (vertex set, 1-skeleton, face
    lists) is computed lazily and cached. Two complexes compare equal when
    their facet sets agree.

    Use :func:`from_facets` to build one from raw lists.
    """

    facets: frozenset
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_face_cache", {})

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex({self.sorted_facets()!r})"

    def sorted_facets(self) -> list[Simplex]:
        return sorted(self.facets)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.facets for v in f)

    @cached_property
    def dimension(self) -> int:
        """Largest facet dimension; -1 for the empty complex."""
        return max((len(f) - 1 for f in self.facets), default=-1)

    @cached_property
    def _facet_sets(self) -> tuple:
        return tuple(frozenset(f) for f in self.facets)

    @cached_property
    def graph(self) -> nx.Graph:
        """The 1-skeleton. Do not mutate the returned graph."""
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        for f in self.facets:
            g.add_edges_from(combinations(f, 2))
        return g

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(tuple(sorted(e)) for e in self.graph.edges())

    def has(self, s: Iterable[int]) -> bool:
        fs = frozenset(s)
        if not fs:
            return True
        return any(fs <= f for f in self._facet_sets)

    def faces(self, k: int) -> frozenset:
        if k < 0:
            raise ComplexError("face dimension must be >= 0")
        cache = self._face_cache
        if k not in cache:
            cache[k] = frozenset(
                s for f in self.facets if len(f) > k for s in combinations(f, k + 1)
            )
        return cache[k]

    def __contains__(self, s) -> bool:
        return self.has(s)


def from_facets(facet_lists: Iterable[Sequence[int]], name: Optional[str] = None) -> SimplicialComplex:
    """Build a normalized complex from lists of vertex ids.

    Non-maximal input simplices are absorbed into the facets containing them.

    Raises
    ------
    ComplexError
        If a list is empty or repeats a vertex.
    """
    facets = []
    for lst in facet_lists:
        lst = list(lst)
        if not lst:
            raise ComplexError("facet lists must be nonempty")
        facets.append(simplex(lst))
    return SimplicialComplex(_maximal(facets), name=name)


def _complex(simplices: Iterable[Simplex]) -> SimplicialComplex:
    return SimplicialComplex(_maximal(simplices))


def contains_simplex(K: SimplicialComplex, s: Iterable[int]) -> bool:
    """True iff ``s`` is a face of some facet. The empty simplex is always contained."""
    return K.has(s)


def all_faces(K: SimplicialComplex, k: int) -> frozenset:
    """All ``k``-dimensional faces of ``K``."""
    return K.faces(k)


def all_simplices(K: SimplicialComplex, include_empty: bool = False) -> list[Simplex]:
    """Every simplex of ``K`` ordered by dimension, then lexicographically."""
    out = [()] if include_empty else []
    for k in range(K.dimension + 1):
        out.extend(sorted(K.faces(k)))
    return out


def _require_vertices(K: SimplicialComplex, vs: Iterable[int]) -> None:
    missing = sorted(set(vs) - K.vertices)
    if missing:
        raise ComplexError(f"unknown vertices {missing}")


def combinatorial_link(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Combinatorial link of ``s``: all ``t`` disjoint from ``s`` with ``s ∪ t`` in ``K``.

    The link of the empty simplex is ``K`` itself.
    """
    s = simplex(s)
    if not K.has(s):
        raise ComplexError(f"simplex {list(s)} is not in the complex")
    if not s:
        return K
    ss = frozenset(s)
    return _complex(tuple(v for v in f if v not in ss) for f in K.facets if ss <= frozenset(f))


def induced_subcomplex(K: SimplicialComplex, V: Iterable[int]) -> SimplicialComplex:
    """The full subcomplex of ``K`` spanned by the vertex set ``V``."""
    V = frozenset(V)
    _require_vertices(K, V)
    return _complex(tuple(v for v in f if v in V) for f in K.facets)


def is_subcomplex(L: SimplicialComplex, K: SimplicialComplex) -> bool:
    return all(K.has(f) for f in L.facets)


def is_full_in(L: SimplicialComplex, K: SimplicialComplex) -> tuple[bool, Optional[Simplex]]:
    """Test whether ``L`` is a full subcomplex of ``K``.

    Returns ``(True, None)`` or ``(False, witness)`` where ``witness`` is a
    minimal simplex of ``K`` whose vertices lie in ``L`` but which is not a
    simplex of ``L``.

    Raises
    ------
    ComplexError
        If ``L`` is not a subcomplex of ``K``.
    """
    if not is_subcomplex(L, K):
        raise ComplexError("first argument is not a subcomplex of the second")
    VL = L.vertices
    best = None
    for f in K.sorted_facets():
        trace = tuple(v for v in f if v in VL)
        if L.has(trace):
            continue
        # smallest non-member subset of the trace
        for r in range(1, len(trace) + 1):
            hit = next((c for c in combinations(trace, r) if not L.has(c)), None)
            if hit is not None:
                break
        if best is None or (len(hit), hit) < (len(best), best):
            best = hit
    return (best is None, best)


def is_flag(K: SimplicialComplex) -> tuple[bool, Optional[Simplex]]:
    """Test whether every clique of the 1-skeleton spans a simplex.

    On failure the witness is a clique that does not span a simplex although
    all of its proper subsets do.
    """
    bad = sorted(tuple(sorted(c)) for c in nx.find_cliques(K.graph) if not K.has(c))
    if not bad:
        return True, None
    best = None
    for clique in bad:
        for r in range(3, len(clique) + 1):
            hit = next((c for c in combinations(clique, r) if not K.has(c)), None)
            if hit is not None:
                break
        if best is None or (len(hit), hit) < (len(best), best):
            best = hit
    return False, best


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; facets are unions of a facet of ``A`` with a facet of ``B``."""
    overlap = A.vertices & B.vertices
    if overlap:
        raise ComplexError(f"join factors share vertices {sorted(overlap)}")
    if not A.facets:
        return B
    if not B.facets:
        return A
    return SimplicialComplex(frozenset(tuple(sorted(a + b)) for a in A.facets for b in B.facets))


def combinatorial_distance(K: SimplicialComplex, v: int, w: int) -> Optional[int]:
    """Edge-path distance in the 1-skeleton, or ``None`` when unreachable."""
    _require_vertices(K, (v, w))
    try:
        return nx.shortest_path_length(K.graph, v, w)
    except nx.NetworkXNoPath:
        return None


def loop_edges(loop: Sequence[int]) -> list[tuple[int, int]]:
    n = len(loop)
    return [(loop[i], loop[(i + 1) % n]) for i in range(n)]


def is_tight(loop: Sequence[int]) -> bool:
    """No edge crossed twice (and no degenerate step from a vertex to itself)."""
    es = [frozenset(e) for e in loop_edges(loop)]
    return len(loop) >= 3 and all(len(e) == 2 for e in es) and len(set(es)) == len(es)


def canonical_loop(loop: Sequence[int]) -> tuple:
    """Lexicographically least rotation or reflection of a cyclic sequence."""
    loop = tuple(loop)
    n = len(loop)
    if n == 0:
        return loop
    rev = loop[::-1]
    return min(min(seq[i:] + seq[:i] for i in range(n)) for seq in (loop, rev))


def enumerate_tight_cycles(K: SimplicialComplex, max_len: int, min_len: int = 3) -> list[tuple]:
    """Simple cycles of the 1-skeleton with ``min_len <= length <= max_len``.

    One representative per rotation/reflection class, in canonical form,
    sorted by length and then lexicographically.
    """
    if max_len < 3:
        raise ComplexError("max_len must be at least 3")
    adj = {v: sorted(K.graph[v]) for v in K.graph}
    found = []
    for start in sorted(adj):
        path = [start]
        on_path = {start}

        def extend(u):
            for w in adj[u]:
                if w == start and len(path) >= max(3, min_len) and path[1] < path[-1]:
                    found.append(tuple(path))
                if w <= start or w in on_path or len(path) >= max_len:
                    continue
                path.append(w)
                on_path.add(w)
                extend(w)
                path.pop()
                on_path.discard(w)

        extend(start)
    return sorted({canonical_loop(c) for c in found}, key=lambda c: (len(c), c))
