"""
Named complexes and seeded random instances.

Vertex numbering is fixed so that witnesses in reports are stable: in a
join the first factor keeps its ids and the second is shifted past them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np

from .complex import ComplexError, SimplicialComplex, from_facets, induced_subcomplex, join

__all__ = [
    "GeneratorSpec",
    "generate",
    "cycle",
    "simplex_complex",
    "wheel",
    "octahedron",
    "counterexample",
    "counterexample_sigma",
    "counterexample_loop",
    "counterexample_disk",
    "tetra_fan",
    "random_flag_complex",
    "random_disk",
    "shift",
]


def shift(K: SimplicialComplex, offset: int) -> SimplicialComplex:
    return from_facets([[v + offset for v in f] for f in K.sorted_facets()])


def cycle(n: int) -> SimplicialComplex:
    """The n-cycle on vertices ``0..n-1``."""
    if n < 3:
        raise ComplexError("a cycle needs at least 3 vertices")
    return from_facets([[i, (i + 1) % n] for i in range(n)], name=f"cycle-{n}")


def simplex_complex(d: int) -> SimplicialComplex:
    if d < 0:
        raise ComplexError("dimension must be >= 0")
    return from_facets([list(range(d + 1))], name=f"simplex-{d}")


def wheel(k: int) -> SimplicialComplex:
    """Cone over the k-cycle: rim ``0..k-1``, hub ``k``."""
    if k < 3:
        raise ComplexError("a wheel needs at least 3 spokes")
    return from_facets([[i, (i + 1) % k, k] for i in range(k)], name=f"wheel-{k}")


def octahedron() -> SimplicialComplex:
    """Boundary of the octahedron; antipodal pairs are (0,1), (2,3), (4,5)."""
    return from_facets(
        [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)],
        name="octahedron",
    )


def counterexample(n: int) -> SimplicialComplex:
    """Join of an (n-2)-simplex on ``0..n-2`` with a 5-cycle on ``n-1..n+3``.

    Five n-simplices arranged cyclically around the (n-2)-simplex.
    """
    if n < 3:
        raise ComplexError("the counterexample family needs n >= 3")
    K = join(simplex_complex(n - 2), shift(cycle(5), n - 1))
    return SimplicialComplex(K.facets, name=f"counterexample-{n}")


def counterexample_sigma(n: int) -> tuple:
    return tuple(range(n - 1))


def counterexample_loop(n: int) -> tuple:
    return tuple(range(n - 1, n + 4))


def counterexample_disk(n: int, apex: int) -> SimplicialComplex:
    """Full subcomplex on one apex of the simplex factor plus the 5-cycle: a wheel of 5 triangles."""
    if apex not in counterexample_sigma(n):
        raise ComplexError(f"apex {apex} is not a vertex of the simplex factor")
    return induced_subcomplex(counterexample(n), (apex,) + counterexample_loop(n))


def tetra_fan(k: int) -> SimplicialComplex:
    """k tetrahedra around the edge {0, 1}; the link of that edge is a k-cycle."""
    if k < 3:
        raise ComplexError("tetra_fan needs k >= 3")
    return from_facets([[0, 1, 2 + i, 2 + (i + 1) % k] for i in range(k)], name=f"tetra-fan-{k}")


def random_flag_complex(vertices: int, edge_probability: float, seed: int) -> SimplicialComplex:
    """Clique complex of a seeded G(n, p) graph; always flag."""
    if not 0 <= edge_probability <= 1:
        raise ComplexError("edge probability must lie in [0, 1]")
    if vertices < 1:
        raise ComplexError("need at least one vertex")
    rng = np.random.default_rng(seed)
    g = nx.Graph()
    g.add_nodes_from(range(vertices))
    for u in range(vertices):
        for v in range(u + 1, vertices):
            if rng.random() < edge_probability:
                g.add_edge(u, v)
    return from_facets(nx.find_cliques(g), name=f"random-flag-{vertices}-{edge_probability}-{seed}")


def random_disk(n_faces: int, seed: int) -> tuple[list, list]:
    """Grow a random nonsingular triangulated disk by shelling moves.

    Each step glues a triangle along one boundary edge (new vertex) or along
    two consecutive boundary edges (closing an ear). Returns
    ``(faces, boundary)``.
    """
    if n_faces < 1:
        raise ValueError("need at least one face")
    rng = np.random.default_rng(seed)
    faces = [(0, 1, 2)]
    boundary = [0, 1, 2]
    edges = {(0, 1), (1, 2), (0, 2)}
    nxt = 3
    while len(faces) < n_faces:
        n = len(boundary)
        ears = []
        if n >= 4:
            for j in range(n):
                a, c = boundary[j - 1], boundary[(j + 1) % n]
                if (min(a, c), max(a, c)) not in edges:
                    ears.append(j)
        if ears and rng.random() < 0.5:
            j = ears[rng.integers(len(ears))]
            a, v, c = boundary[j - 1], boundary[j], boundary[(j + 1) % n]
            faces.append(tuple(sorted((a, v, c))))
            edges.add((min(a, c), max(a, c)))
            boundary.pop(j)
        else:
            j = int(rng.integers(n))
            a, c = boundary[j], boundary[(j + 1) % n]
            faces.append(tuple(sorted((a, c, nxt))))
            edges.update({(min(a, nxt), max(a, nxt)), (min(c, nxt), max(c, nxt))})
            boundary.insert(j + 1, nxt)
            nxt += 1
    return faces, boundary


_KINDS = {
    "cycle": (cycle, ("n",)),
    "simplex": (simplex_complex, ("d",)),
    "wheel": (wheel, ("k",)),
    "octahedron": (octahedron, ()),
    "counterexample": (counterexample, ("n",)),
    "tetra_fan": (tetra_fan, ("k",)),
    "random_flag": (random_flag_complex, ("vertices", "p", "seed")),
}


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None


def generate(spec: GeneratorSpec) -> SimplicialComplex:
    """Build the complex a :class:`GeneratorSpec` names.

    ``join`` takes ``params={"left": GeneratorSpec, "right": GeneratorSpec}``
    and shifts the right factor past the left one.
    """
    kind = spec.kind.replace("-", "_")
    if kind == "join":
        A = generate(spec.params["left"])
        B = generate(spec.params["right"])
        return join(A, shift(B, max(A.vertices, default=-1) + 1))
    if kind not in _KINDS:
        raise ComplexError(f"unknown generator kind {spec.kind!r}")
    fn, names = _KINDS[kind]
    params = dict(spec.params)
    if kind == "random_flag":
        if spec.seed is None and "seed" not in params:
            raise ComplexError("random_flag needs a seed")
        params.setdefault("seed", spec.seed)
    missing = [p for p in names if p not in params]
    if missing:
        raise ComplexError(f"{spec.kind} needs parameters {missing}")
    extra = sorted(set(params) - set(names))
    if extra:
        raise ComplexError(f"{spec.kind} does not take parameters {extra}")
    return fn(*(params[p] for p in names))
