"""
Empty triangles, squares and pentagons; k-largeness and SNPC.

A short loop (length 3, 4 or 5) is *empty* when no triangulation of the
polygon without interior vertices maps into the complex. For these lengths
every interior-vertex-free disk is a diagonal triangulation, so the test
below is a finite check over at most five candidate fillings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complex import (
    ComplexError,
    Simplex,
    SimplicialComplex,
    all_simplices,
    combinatorial_link,
    enumerate_tight_cycles,
    is_flag,
    is_tight,
    loop_edges,
)

__all__ = [
    "DiagonalTriangulation",
    "EmptyGonWitness",
    "LargenessResult",
    "SNPCResult",
    "polygon_triangulations",
    "candidate_fillings",
    "is_empty_ngon",
    "find_empty_ngons",
    "is_k_large",
    "is_snpc",
]

MAX_GON = 5


@dataclass(frozen=True)
class DiagonalTriangulation:
    ngon: tuple
    diagonals: frozenset
    triangles: frozenset

    def missing_in(self, K: SimplicialComplex) -> dict:
        """Diagonals and triangles of this filling that ``K`` lacks."""
        return {
            "diagonals": sorted(list(d) for d in self.diagonals if not K.has(d)),
            "triangles": sorted(list(t) for t in self.triangles if not K.has(t)),
        }


@dataclass(frozen=True)
class EmptyGonWitness:
    loop: tuple
    missing: tuple = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.loop)

    def to_dict(self) -> dict:
        return {"check": "empty-ngon", "n": self.n, "loop": list(self.loop), "missing": list(self.missing)}


def polygon_triangulations(n: int) -> list[frozenset]:
    """All triangulations of a convex polygon on corners ``0..n-1`` without interior points.

    Each triangulation is a frozenset of sorted index triples; there are
    Catalan(n - 2) of them.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 corners")

    def tri(corners):
        if len(corners) < 3:
            return [frozenset()]
        a, b = corners[0], corners[-1]
        out = []
        for i in range(1, len(corners) - 1):
            c = corners[i]
            for left in tri(corners[: i + 1]):
                for right in tri(corners[i:]):
                    out.append(left | right | {tuple(sorted((a, c, b)))})
        return out

    return sorted(tri(tuple(range(n))), key=sorted)


def candidate_fillings(n: int, loop: Sequence[int]) -> list[DiagonalTriangulation]:
    """Interior-vertex-free triangulations of the ``n``-gon, placed on ``loop``."""
    loop = tuple(loop)
    if len(loop) != n:
        raise ComplexError(f"loop has length {len(loop)}, expected {n}")
    boundary = {frozenset(e) for e in loop_edges(range(n))}
    out = []
    for t in polygon_triangulations(n):
        diags = set()
        tris = set()
        for a, b, c in t:
            tris.add(tuple(sorted((loop[a], loop[b], loop[c]))))
            for e in ((a, b), (b, c), (a, c)):
                if frozenset(e) not in boundary:
                    diags.add(tuple(sorted((loop[e[0]], loop[e[1]]))))
        out.append(DiagonalTriangulation(loop, frozenset(diags), frozenset(tris)))
    return out


def _check_loop(K: SimplicialComplex, loop: Sequence[int]) -> tuple:
    loop = tuple(loop)
    if not 3 <= len(loop) <= MAX_GON:
        raise ComplexError(f"only loops of length 3..{MAX_GON} are supported, got {len(loop)}")
    if not is_tight(loop):
        raise ComplexError(f"loop {list(loop)} is not tight")
    for e in loop_edges(loop):
        if not K.has(e):
            raise ComplexError(f"loop step {list(e)} is not an edge of the complex")
    return loop


def is_empty_ngon(K: SimplicialComplex, loop: Sequence[int]) -> tuple[bool, Optional[EmptyGonWitness]]:
    """Decide whether a tight loop of length 3, 4 or 5 is empty in ``K``.

    Returns ``(False, None)`` when some candidate filling lies in ``K``,
    otherwise ``(True, witness)`` listing what each filling is missing.
    """
    loop = _check_loop(K, loop)
    missing = []
    for filling in candidate_fillings(len(loop), loop):
        gap = filling.missing_in(K)
        if not gap["diagonals"] and not gap["triangles"]:
            return False, None
        missing.append(gap)
    return True, EmptyGonWitness(loop, tuple(missing))


def find_empty_ngons(K: SimplicialComplex, k: int = 6) -> list[EmptyGonWitness]:
    """All empty n-gons with ``3 <= n < k``, one per loop class."""
    if not 4 <= k <= MAX_GON + 1:
        raise ComplexError(f"k must lie in 4..{MAX_GON + 1}")
    out = []
    for loop in enumerate_tight_cycles(K, k - 1):
        empty, witness = is_empty_ngon(K, loop)
        if empty:
            out.append(witness)
    return out


@dataclass(frozen=True)
class LargenessResult:
    passed: bool
    k: int
    flag_witness: Optional[Simplex] = None
    gon_witness: Optional[EmptyGonWitness] = None

    def __bool__(self):
        return self.passed

    def witness_dict(self) -> Optional[dict]:
        if self.flag_witness is not None:
            return {"check": "flag", "clique": list(self.flag_witness)}
        if self.gon_witness is not None:
            return self.gon_witness.to_dict()
        return None


def is_k_large(K: SimplicialComplex, k: int) -> LargenessResult:
    """Flag and free of empty n-gons for every ``n < k``.

    Only ``4 <= k <= 6`` is decidable here, since longer empty loops are not
    searched.
    """
    if not 4 <= k <= MAX_GON + 1:
        raise ComplexError(f"k-largeness is only decided for 4 <= k <= {MAX_GON + 1}")
    flag, clique = is_flag(K)
    if not flag:
        return LargenessResult(False, k, flag_witness=clique)
    gons = find_empty_ngons(K, k)
    if gons:
        return LargenessResult(False, k, gon_witness=gons[0])
    return LargenessResult(True, k)


@dataclass(frozen=True)
class SNPCResult:
    """Outcome of the SNPC scan.

    ``passed`` covers every simplex including the empty one (whose link is
    the complex itself); ``passed_nonempty`` skips the empty simplex.
    """

    passed: bool
    passed_nonempty: bool
    failures: tuple = ()

    def __bool__(self):
        return self.passed

    @property
    def witness(self) -> Optional[tuple]:
        return self.failures[0] if self.failures else None


def is_snpc(K: SimplicialComplex) -> SNPCResult:
    """Check that the combinatorial link of every simplex is 6-large.

    ``failures`` holds ``(simplex, LargenessResult)`` pairs in scan order:
    highest dimension first, lexicographic within a dimension, the empty
    simplex last. The first failure is therefore a largest failing simplex.
    """
    order = sorted(all_simplices(K), key=lambda s: (-len(s), s)) + [()]
    failures = []
    for s in order:
        res = is_k_large(combinatorial_link(K, s), 6)
        if not res:
            failures.append((s, res))
    nonempty_ok = not any(s for s, _ in failures)
    return SNPCResult(not failures, nonempty_ok, tuple(failures))
