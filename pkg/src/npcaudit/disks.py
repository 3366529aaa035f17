"""
Triangulated disk diagrams and minimal spanning disks.

A disk diagram here is a finite set of triangles on local integer labels
that forms a closed 2-disk, together with its boundary read as a cyclic
vertex sequence. Only nonsingular disks (no cut vertices) are searched;
singular inputs are recognised by :func:`classify_disk` but rejected by
:func:`validate_disk`.

Disk *types* are produced boundary-rooted: boundary vertex ``j`` carries
label ``j`` and sits at loop position ``j``, interior vertices follow in a
canonical breadth-first order. Two rooted types are equal iff there is an
isomorphism fixing the boundary pointwise.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .complex import ComplexError, SimplicialComplex, is_tight, loop_edges

__all__ = [
    "DiskError",
    "DiskDiagram",
    "SimplicialMap",
    "DiskSearchResult",
    "classify_disk",
    "validate_disk",
    "degree",
    "gauss_bonnet_total",
    "is_cat0_disk",
    "boundary_curvature",
    "rooted_canonical_form",
    "canonical_form",
    "enumerate_disk_types",
    "spanning_disks",
    "find_minimal_spanning_disks",
]


class DiskError(ValueError):
    """A candidate is not a (nonsingular) triangulated disk.

    ``axiom`` names the violated condition; ``singular`` is set when the
    candidate is a disk with cut vertices.
    """

    def __init__(self, axiom: str, message: str, singular: bool = False):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.singular = singular


def _edge(a, b):
    return (a, b) if a < b else (b, a)


def _face_edges(f):
    a, b, c = f
    return (_edge(a, b), _edge(b, c), _edge(a, c))


def _normalize_faces(faces) -> frozenset:
    out = set()
    for f in faces:
        f = tuple(f)
        if len(f) != 3 or len(set(f)) != 3:
            raise DiskError("triangles", f"face {list(f)} is not a triangle on 3 distinct vertices")
        for v in f:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise DiskError("triangles", f"bad vertex label {v!r}")
        t = tuple(sorted(f))
        if t in out:
            raise DiskError("triangles", f"face {list(t)} listed twice")
        out.add(t)
    if not out:
        raise DiskError("triangles", "no faces")
    return frozenset(out)


def _link_components(faces, v):
    """Components of the link of ``v`` as (vertex list, is_cycle) pairs."""
    adj = defaultdict(list)
    for f in faces:
        if v in f:
            a, b = (u for u in f if u != v)
            adj[a].append(b)
            adj[b].append(a)
    seen = set()
    comps = []
    for s in sorted(adj):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        is_cycle = all(len(adj[u]) == 2 for u in comp)
        comps.append((comp, is_cycle))
    return comps


def _connected(faces) -> bool:
    faces = list(faces)
    by_vertex = defaultdict(list)
    for i, f in enumerate(faces):
        for v in f:
            by_vertex[v].append(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for v in faces[i]:
            for j in by_vertex[v]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == len(faces)


def _boundary_cycle(bedges) -> Optional[list]:
    """Order boundary edges into one simple cycle, or None."""
    adj = defaultdict(list)
    for a, b in bedges:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(n) != 2 for n in adj.values()):
        return None
    start = min(adj)
    cyc = [start, min(adj[start])]
    while True:
        a, b = adj[cyc[-1]]
        nxt = a if a != cyc[-2] else b
        if nxt == start:
            break
        cyc.append(nxt)
    return cyc if len(cyc) == len(adj) else None


def _surface_checks(faces):
    if not _connected(faces):
        raise DiskError("connected", "faces do not form a connected complex")
    counts = Counter(e for f in faces for e in _face_edges(f))
    over = sorted(e for e, c in counts.items() if c > 2)
    if over:
        raise DiskError("edge-manifold", f"edge {list(over[0])} lies in more than two faces")
    return counts


def _euler(faces, counts) -> int:
    return len({v for f in faces for v in f}) - len(counts) + len(faces)


def classify_disk(faces) -> str:
    """Return ``"nonsingular"`` or ``"singular"`` for a disk diagram.

    A singular disk is a tree of nonsingular disks glued at cut vertices.

    Raises
    ------
    DiskError
        If the faces do not form a (possibly singular) disk.
    """
    faces = _normalize_faces(faces)
    counts = _surface_checks(faces)
    verts = sorted({v for f in faces for v in f})
    cut = []
    for v in verts:
        comps = _link_components(faces, v)
        if len(comps) > 1:
            if any(cyc for _, cyc in comps):
                raise DiskError("vertex-link", f"link of vertex {v} mixes a cycle with other pieces")
            cut.append((v, comps))
    if not cut:
        _disk_checks(faces, counts)
        return "nonsingular"
    # split every cut vertex into one copy per link component
    nxt = max(verts) + 1
    relabel = {}
    for v, comps in cut:
        for comp, _ in comps[1:]:
            for u in comp:
                relabel[(v, u)] = nxt
            nxt += 1
    split = set()
    for f in faces:
        g = []
        for v in f:
            others = [u for u in f if u != v]
            g.append(relabel.get((v, others[0]), v))
        split.add(tuple(sorted(g)))
    pieces = _components(split)
    for piece in pieces:
        pc = _surface_checks(piece)
        try:
            _disk_checks(piece, pc)
        except DiskError as exc:
            raise DiskError(exc.axiom, f"piece of a pinched complex is not a disk ({exc})") from None
    if _euler(faces, counts) != 1:
        raise DiskError("euler", "pinched disks do not glue along a tree")
    return "singular"


def _components(faces) -> list:
    faces = list(faces)
    by_vertex = defaultdict(list)
    for i, f in enumerate(faces):
        for v in f:
            by_vertex[v].append(i)
    seen = set()
    out = []
    for s in range(len(faces)):
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            i = stack.pop()
            comp.append(faces[i])
            for v in faces[i]:
                for j in by_vertex[v]:
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
        out.append(frozenset(comp))
    return out


def _disk_checks(faces, counts):
    """Checks for a connected edge-manifold complex with no cut vertices."""
    bedges = [e for e, c in counts.items() if c == 1]
    if not bedges:
        raise DiskError("boundary", "no boundary edges; this is a closed surface")
    bverts = {v for e in bedges for v in e}
    for v in sorted({v for f in faces for v in f}):
        comps = _link_components(faces, v)
        if len(comps) != 1:
            raise DiskError("vertex-link", f"link of vertex {v} is disconnected")
        is_cycle = comps[0][1]
        if v in bverts and is_cycle:
            raise DiskError("vertex-link", f"boundary vertex {v} has a cyclic link")
        if v not in bverts and not is_cycle:
            raise DiskError("vertex-link", f"interior vertex {v} has a link that is not a cycle")
    if _euler(faces, counts) != 1:
        raise DiskError("euler", f"Euler characteristic is {_euler(faces, counts)}, not 1")
    cyc = _boundary_cycle(bedges)
    if cyc is None:
        raise DiskError("boundary", "boundary edges do not form a single simple cycle")
    return cyc


@dataclass(frozen=True, eq=False)
class DiskDiagram:
    """A validated nonsingular triangulated disk with an oriented boundary loop.

    Build through :func:`validate_disk`.
    """

    faces: frozenset
    boundary: tuple

    def __eq__(self, other):
        if not isinstance(other, DiskDiagram):
            return NotImplemented
        return self.faces == other.faces and self.boundary == other.boundary

    def __hash__(self):
        return hash((self.faces, self.boundary))

    def __repr__(self):
        return f"DiskDiagram(boundary={list(self.boundary)}, faces={sorted(self.faces)})"

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.faces for v in f)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(e for f in self.faces for e in _face_edges(f))

    @cached_property
    def interior_vertices(self) -> frozenset:
        return self.vertices - set(self.boundary)

    @cached_property
    def degrees(self) -> dict:
        d = Counter()
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return dict(d)

    @property
    def area(self) -> int:
        return len(self.faces)

    def to_dict(self) -> dict:
        return {"boundary": list(self.boundary), "faces": [list(f) for f in sorted(self.faces)]}


def validate_disk(faces, boundary: Optional[Sequence[int]] = None) -> DiskDiagram:
    """Check the disk axioms and return a :class:`DiskDiagram`.

    If ``boundary`` is omitted it is read from the least boundary vertex
    toward its smaller boundary neighbour. A supplied boundary must traverse
    every boundary edge exactly once, in either direction, from any start.

    Raises
    ------
    DiskError
        Naming the violated axiom. Singular disks raise with
        ``axiom == "nonsingular"``.
    """
    faces = _normalize_faces(faces)
    counts = _surface_checks(faces)
    for v in sorted({v for f in faces for v in f}):
        if len(_link_components(faces, v)) > 1:
            try:
                kind = classify_disk(faces)
            except DiskError:
                kind = None
            if kind == "singular":
                raise DiskError("nonsingular", f"vertex {v} is a cut point", singular=True)
            break
    cyc = _disk_checks(faces, counts)
    if boundary is None:
        return DiskDiagram(faces, tuple(cyc))
    boundary = tuple(boundary)
    want = {e for e, c in counts.items() if c == 1}
    got = [_edge(a, b) for a, b in loop_edges(boundary)]
    if len(set(boundary)) != len(boundary) or len(got) != len(want) or set(got) != want:
        raise DiskError("boundary", f"{list(boundary)} does not traverse the boundary edges")
    return DiskDiagram(faces, boundary)


def degree(D: DiskDiagram, v: int) -> int:
    """Number of edges at ``v``; equals faces at ``v`` inside, faces + 1 on the boundary."""
    if v not in D.vertices:
        raise ComplexError(f"vertex {v} is not in the disk")
    return D.degrees[v]


def gauss_bonnet_total(D: DiskDiagram) -> int:
    bd = set(D.boundary)
    return sum((4 if v in bd else 6) - d for v, d in D.degrees.items())


def is_cat0_disk(D: DiskDiagram) -> tuple[bool, Optional[int]]:
    """Every interior vertex has degree at least 6; the witness is the least offender."""
    bad = sorted(v for v in D.interior_vertices if D.degrees[v] < 6)
    return (not bad, bad[0] if bad else None)


def boundary_curvature(D: DiskDiagram) -> int:
    return sum(4 - D.degrees[v] for v in D.boundary)


# canonical labelling -------------------------------------------------------


def _rotations(faces, boundary) -> dict:
    """Neighbour order around each vertex, oriented so the boundary runs forward.

    Boundary vertex ``b[j]`` starts at ``b[j+1]`` and ends at ``b[j-1]``.
    """
    third = defaultdict(list)
    for f in faces:
        for e in _face_edges(f):
            third[e].append(next(x for x in f if x not in e))
    b0, b1 = boundary[0], boundary[1]
    (c0,) = third[_edge(b0, b1)]
    done = {}
    queue = deque([(b0, b1, c0)])
    while queue:
        a, b, c = queue.popleft()
        key = tuple(sorted((a, b, c)))
        if key in done:
            continue
        done[key] = (a, b, c)
        for x, y in ((a, b), (b, c), (c, a)):
            for z in third[_edge(x, y)]:
                if tuple(sorted((x, y, z))) not in done:
                    queue.append((y, x, z))
    succ = defaultdict(dict)
    for a, b, c in done.values():
        succ[a][b] = c
        succ[b][c] = a
        succ[c][a] = b
    bpos = {v: j for j, v in enumerate(boundary)}
    n = len(boundary)
    rot = {}
    for v, s in succ.items():
        start = boundary[(bpos[v] + 1) % n] if v in bpos else min(s)
        order = [start]
        while True:
            nxt = s.get(order[-1])
            if nxt is None or nxt == start:
                break
            order.append(nxt)
        rot[v] = order
    return rot


def _relabel(faces, boundary) -> tuple:
    """Rooted canonical labelling; returns (mapping, relabelled sorted faces)."""
    rot = _rotations(faces, boundary)
    label = {v: j for j, v in enumerate(boundary)}
    on_boundary = set(boundary)
    queue = deque(boundary)
    while queue:
        x = queue.popleft()
        order = rot[x]
        if x not in on_boundary:
            k = min(range(len(order)), key=lambda i: label.get(order[i], float("inf")))
            order = order[k:] + order[:k]
        for w in order:
            if w not in label:
                label[w] = len(label)
                queue.append(w)
    relabelled = tuple(sorted(tuple(sorted(label[v] for v in f)) for f in faces))
    return label, relabelled


def rooted_canonical_form(faces, boundary: Sequence[int]) -> tuple:
    """Faces relabelled with boundary ``j -> j`` and interiors in canonical BFS order."""
    return _relabel(faces, tuple(boundary))[1]


def canonical_form(D: DiskDiagram) -> tuple:
    """Isomorphism invariant of a disk: least rooted form over boundary rotations and reflections."""
    b = D.boundary
    n = len(b)
    rev = b[::-1]
    rootings = [b[i:] + b[:i] for i in range(n)] + [rev[i:] + rev[:i] for i in range(n)]
    return min(rooted_canonical_form(D.faces, r) for r in rootings)


# enumeration ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _rooted_raw(b: int, i: int) -> tuple:
    """Face tuples for boundary ``0..b-1`` with ``i`` interior vertices, labelled by construction.

    Every rooted disk splits uniquely along the face on edge ``(0, 1)``, so
    the recursion emits each isomorphism class exactly once.
    """
    if b < 3 or i < 0:
        return ()
    found = []
    # third vertex of the face on edge (0, 1) is a boundary vertex k
    for k in range(2, b):
        left_len, right_len = k, b - k + 1
        for i1 in range(i + 1):
            i2 = i - i1
            lefts = _rooted_raw(left_len, i1) if left_len >= 3 else (((),) if i1 == 0 else ())
            rights = _rooted_raw(right_len, i2) if right_len >= 3 else (((),) if i2 == 0 else ())
            for L in lefts:
                for R in rights:
                    nxt = b
                    lmap = {j: j + 1 for j in range(left_len)}
                    faces = [(0, 1, k)]
                    for f in L:
                        g = []
                        for v in f:
                            if v not in lmap:
                                lmap[v] = nxt
                                nxt += 1
                            g.append(lmap[v])
                        faces.append(tuple(g))
                    rmap = {j: (k + j) % b for j in range(right_len)}
                    for f in R:
                        g = []
                        for v in f:
                            if v not in rmap:
                                rmap[v] = nxt
                                nxt += 1
                            g.append(rmap[v])
                        faces.append(tuple(g))
                    found.append(tuple(faces))
    # third vertex is interior: peel the face, leaving boundary 0, x, 1, ..., b-1
    if i >= 1:
        x = b
        pmap = {0: 0, 1: x}
        pmap.update({j: j - 1 for j in range(2, b + 1)})
        for P in _rooted_raw(b + 1, i - 1):
            nxt = b + 1
            local = dict(pmap)
            faces = [(0, 1, x)]
            edges = set()
            for f in P:
                g = []
                for v in f:
                    if v not in local:
                        local[v] = nxt
                        nxt += 1
                    g.append(local[v])
                faces.append(tuple(g))
                edges.update(_face_edges(tuple(sorted(g))))
            if (0, 1) in edges:
                continue
            found.append(tuple(faces))
    return tuple(found)


@lru_cache(maxsize=None)
def _rooted_types(b: int, i: int) -> tuple:
    """Rooted canonical face tuples, sorted."""
    boundary = tuple(range(b))
    return tuple(sorted(rooted_canonical_form(f, boundary) for f in _rooted_raw(b, i)))


def enumerate_disk_types(boundary_len: int, max_interior: int, up_to_symmetry: bool = False) -> list[DiskDiagram]:
    """All nonsingular disk types with the given boundary length.

    Types are rooted (boundary vertex ``j`` labelled ``j``) and listed by
    interior count, then by face tuple. With ``up_to_symmetry`` only one
    representative per orbit of boundary rotations and reflections is kept.
    """
    if boundary_len < 3 or max_interior < 0:
        raise ValueError("need boundary_len >= 3 and max_interior >= 0")
    boundary = tuple(range(boundary_len))
    out = []
    for i in range(max_interior + 1):
        seen = set()
        for faces in _rooted_types(boundary_len, i):
            D = DiskDiagram(frozenset(faces), boundary)
            if up_to_symmetry:
                key = canonical_form(D)
                if key in seen:
                    continue
                seen.add(key)
            out.append(D)
    return out


# spanning-disk search ------------------------------------------------------


@dataclass(frozen=True)
class SimplicialMap:
    """Vertex assignment from disk labels to vertices of the target complex."""

    pairs: tuple

    @property
    def vertex_map(self) -> dict:
        return dict(self.pairs)

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    def image(self, simplex) -> tuple:
        m = self.vertex_map
        return tuple(sorted(m[v] for v in simplex))


@dataclass(frozen=True)
class DiskSearchResult:
    """Outcome of a minimal-disk search.

    ``status`` is ``"found"`` or ``"exhausted"``; the latter means no
    nonsingular disk exists within the bounds, which says nothing about
    larger disks.
    """

    loop: tuple
    status: str
    area: Optional[int]
    solutions: tuple
    max_interior: int
    max_area: Optional[int]

    @property
    def found(self) -> bool:
        return self.status == "found"


def _check_loop(K: SimplicialComplex, loop) -> tuple:
    loop = tuple(loop)
    if len(loop) < 3 or not is_tight(loop):
        raise ComplexError(f"loop {list(loop)} is not a tight loop")
    for e in loop_edges(loop):
        if not K.has(e):
            raise ComplexError(f"loop step {list(e)} is not an edge of the complex")
    return loop


def _maps_for_type(K: SimplicialComplex, faces, loop) -> list[SimplicialMap]:
    b = len(loop)
    labels = sorted({v for f in faces for v in f})
    nbrs = defaultdict(set)
    for f in faces:
        for u, v in combinations(f, 2):
            nbrs[u].add(v)
            nbrs[v].add(u)
    # faces checked once their largest label is assigned
    due = defaultdict(list)
    for f in faces:
        due[max(f)].append(f)
    assign = {j: loop[j] for j in range(b)}

    def face_ok(f):
        img = {assign[v] for v in f}
        return len(img) == 3 and K.has(img)

    for j in range(b):
        if not all(face_ok(f) for f in due[j]):
            return []
    interior = [v for v in labels if v >= b]
    adj = K.graph
    out = []

    def rec(idx):
        if idx == len(interior):
            out.append(SimplicialMap(tuple(sorted(assign.items()))))
            return
        x = interior[idx]
        placed = [assign[u] for u in nbrs[x] if u in assign]
        cands = set(adj[placed[0]])
        for p in placed[1:]:
            cands &= set(adj[p])
        for c in sorted(cands):
            assign[x] = c
            if all(face_ok(f) for f in due[x]):
                rec(idx + 1)
            del assign[x]

    rec(0)
    return out


def spanning_disks(K: SimplicialComplex, loop: Sequence[int], n_interior: int) -> list[tuple]:
    """All (disk type, map) pairs with exactly ``n_interior`` interior vertices spanning ``loop``."""
    loop = _check_loop(K, loop)
    b = len(loop)
    out = []
    boundary = tuple(range(b))
    for faces in _rooted_types(b, n_interior):
        for m in _maps_for_type(K, faces, loop):
            out.append((DiskDiagram(frozenset(faces), boundary), m))
    return out


def find_minimal_spanning_disks(
    K: SimplicialComplex,
    loop: Sequence[int],
    max_interior: int = 2,
    max_area: Optional[int] = None,
) -> DiskSearchResult:
    """Least-area nonsingular disks whose boundary maps onto ``loop``.

    Disk types are scanned by increasing area ``len(loop) - 2 + 2 * interior``
    and every simplicial map (injective on each face, boundary vertex ``j``
    sent to ``loop[j]``) is collected at the first area that admits one.
    """
    loop = _check_loop(K, loop)
    b = len(loop)
    if b == 3 and K.has(loop):
        D = DiskDiagram(frozenset({(0, 1, 2)}), (0, 1, 2))
        sol = (D, SimplicialMap(((0, loop[0]), (1, loop[1]), (2, loop[2]))))
        return DiskSearchResult(loop, "found", 1, (sol,), max_interior, max_area)
    for i in range(max_interior + 1):
        area = b - 2 + 2 * i
        if max_area is not None and area > max_area:
            break
        sols = spanning_disks(K, loop, i)
        if sols:
            return DiskSearchResult(loop, "found", area, tuple(sols), max_interior, max_area)
    return DiskSearchResult(loop, "exhausted", None, (), max_interior, max_area)

