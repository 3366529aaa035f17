import pytest
from hypothesis import given, settings, strategies as st

from npcaudit.complex import ComplexError, enumerate_tight_cycles, from_facets, induced_subcomplex, is_full_in
from npcaudit.disks import (
    DiskError,
    boundary_curvature,
    canonical_form,
    classify_disk,
    degree,
    enumerate_disk_types,
    find_minimal_spanning_disks,
    gauss_bonnet_total,
    is_cat0_disk,
    rooted_canonical_form,
    spanning_disks,
    validate_disk,
)
from npcaudit.generators import counterexample, counterexample_loop, cycle, octahedron, random_disk, random_flag_complex

import oracles

WHEEL5 = [[5, i, (i + 1) % 5] for i in range(5)]
HEX = [[6, i, (i + 1) % 6] for i in range(6)]


# validation --------------------------------------------------------------------


def test_single_triangle():
    D = validate_disk([[0, 1, 2]])
    assert D.boundary == (0, 1, 2) and D.area == 1
    assert not D.interior_vertices
    assert gauss_bonnet_total(D) == 6 and boundary_curvature(D) == 6


def test_wheel_five():
    D = validate_disk(WHEEL5)
    assert D.boundary == (0, 1, 2, 3, 4)
    assert D.interior_vertices == {5}
    assert degree(D, 5) == 5 and degree(D, 0) == 3
    assert gauss_bonnet_total(D) == 6
    assert boundary_curvature(D) == 5
    assert is_cat0_disk(D) == (False, 5)


def test_hexagonal_wheel_is_cat0():
    D = validate_disk(HEX)
    assert is_cat0_disk(D) == (True, None)
    assert boundary_curvature(D) == 6 and gauss_bonnet_total(D) == 6


def test_supplied_boundary():
    D = validate_disk(WHEEL5, boundary=[2, 1, 0, 4, 3])
    assert D.boundary == (2, 1, 0, 4, 3)
    with pytest.raises(DiskError) as e:
        validate_disk(WHEEL5, boundary=[0, 1, 2, 4, 3])
    assert e.value.axiom == "boundary"
    with pytest.raises(DiskError):
        validate_disk(WHEEL5, boundary=[0, 1, 2, 3])


def test_bowtie_is_singular():
    faces = [[0, 1, 2], [0, 3, 4]]
    assert classify_disk(faces) == "singular"
    with pytest.raises(DiskError) as e:
        validate_disk(faces)
    assert e.value.axiom == "nonsingular" and e.value.singular


def test_chain_of_pinched_disks_is_singular():
    faces = [[0, 1, 2], [2, 3, 4], [4, 5, 6], [4, 6, 7]]
    assert classify_disk(faces) == "singular"


@pytest.mark.parametrize(
    "faces,axiom",
    [
        ([[0, 1, 2], [3, 4, 5]], "connected"),
        ([[0, 1, 2], [0, 1, 3], [0, 1, 4]], "edge-manifold"),
        ([list(f) for f in octahedron().sorted_facets()], "boundary"),
        # annulus: a triangulated band around a hexagonal hole
        ([[i, (i + 1) % 3, 3 + i] for i in range(3)]
         + [[(i + 1) % 3, 3 + i, 3 + (i + 1) % 3] for i in range(3)], "euler"),
    ],
)
def test_axiom_failures(faces, axiom):
    with pytest.raises(DiskError) as e:
        validate_disk(faces)
    assert e.value.axiom == axiom
    with pytest.raises(DiskError):
        classify_disk(faces)


def test_malformed_faces_rejected():
    for bad in ([[0, 1]], [[0, 0, 1]], []):
        with pytest.raises((DiskError, ComplexError, ValueError)):
            validate_disk(bad)


def test_to_dict():
    assert validate_disk([[0, 1, 2]]).to_dict() == {"boundary": [0, 1, 2], "faces": [[0, 1, 2]]}


# enumeration --------------------------------------------------------------------


def _exact(b, i):
    return [D for D in enumerate_disk_types(b, i) if len(D.interior_vertices) == i]


@pytest.mark.parametrize("b", range(3, 10))
def test_interior_free_types_are_polygon_triangulations(b):
    assert len(_exact(b, 0)) == oracles.catalan(b - 2)


@pytest.mark.parametrize("b,i", [(b, i) for b in range(3, 9) for i in range(3) if (b, i) != (3, 0)])
def test_rooted_counts_match_closed_formula(b, i):
    assert len(_exact(b, i)) == oracles.brown_count(b, i)


@pytest.mark.parametrize("b,i", [(3, 1), (3, 2), (4, 1), (5, 1), (4, 2)])
def test_rooted_counts_match_exhaustive_search(b, i):
    assert len(_exact(b, i)) == oracles.brute_disk_count(b, i)


def test_enumerated_disks_are_valid_and_distinct():
    types = enumerate_disk_types(7, 2)
    assert len({canonical_form(D) for D in types}) <= len(types)
    assert len(set(types)) == len(types)
    for D in types:
        E = validate_disk(D.faces, D.boundary)
        assert E == D
        assert D.area == len(D.boundary) - 2 + 2 * len(D.interior_vertices)


def test_wheel_appears_among_pentagon_types():
    keys = {canonical_form(D) for D in enumerate_disk_types(5, 1)}
    assert canonical_form(validate_disk(WHEEL5)) in keys


def test_up_to_symmetry_counts():
    assert [len(enumerate_disk_types(b, 0, up_to_symmetry=True)) for b in range(3, 9)] == [1, 1, 1, 3, 4, 12]


def test_enumeration_argument_checks():
    with pytest.raises(ValueError):
        enumerate_disk_types(2, 1)
    with pytest.raises(ValueError):
        enumerate_disk_types(4, -1)


@pytest.mark.parametrize("b", range(3, 9))
def test_gauss_bonnet_on_all_small_types(b):
    for D in enumerate_disk_types(b, 2):
        assert gauss_bonnet_total(D) == 6


@settings(max_examples=200, deadline=None)
@given(n=st.integers(1, 40), seed=st.integers(0, 2**32 - 1))
def test_random_disks_satisfy_gauss_bonnet_and_face_count(n, seed):
    faces, boundary = random_disk(n, seed)
    D = validate_disk(faces, boundary)
    assert D.area == n
    assert gauss_bonnet_total(D) == 6
    assert D.area == 2 * len(D.interior_vertices) + len(D.boundary) - 2
    if is_cat0_disk(D)[0]:
        assert boundary_curvature(D) >= 6


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 25), seed=st.integers(0, 2**32 - 1), shift=st.integers(0, 50), flip=st.booleans())
def test_canonical_form_ignores_labels_rotation_and_reflection(n, seed, shift, flip):
    faces, boundary = random_disk(n, seed)
    D = validate_disk(faces, boundary)
    verts = sorted(D.vertices)
    perm = dict(zip(verts, reversed(verts)))
    new_faces = [[perm[v] for v in f] for f in faces]
    b = [perm[v] for v in boundary]
    k = shift % len(b)
    b = b[k:] + b[:k]
    if flip:
        b = b[::-1]
    E = validate_disk(new_faces, b)
    assert canonical_form(E) == canonical_form(D)


def test_rooted_form_respects_the_root():
    D = validate_disk([[0, 1, 2], [0, 2, 3]])
    a = rooted_canonical_form(D.faces, (0, 1, 2, 3))
    b = rooted_canonical_form(D.faces, (1, 2, 3, 0))
    assert a != b
    assert canonical_form(D) == min(a, b)


# spanning disks ------------------------------------------------------------------


def test_triangle_in_tetrahedron(tetrahedron):
    res = find_minimal_spanning_disks(tetrahedron, (0, 1, 2))
    assert res.found and res.area == 1 and len(res.solutions) == 1


def test_square_in_tetrahedron_has_two_fillings(tetrahedron):
    res = find_minimal_spanning_disks(tetrahedron, (0, 1, 2, 3))
    assert res.area == 2 and len(res.solutions) == 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_counterexample_pentagon(n):
    K = counterexample(n)
    res = find_minimal_spanning_disks(K, counterexample_loop(n))
    assert res.found and res.area == 5
    assert len(res.solutions) == n - 1
    apexes = set()
    for D, m in res.solutions:
        ok, bad = is_cat0_disk(D)
        assert not ok and degree(D, bad) == 5
        apexes.add(m(bad))
        image = from_facets([m.image(f) for f in D.faces])
        assert image == induced_subcomplex(K, image.vertices)
        assert is_full_in(image, K)[0]
    assert apexes == set(range(n - 1))


def test_octahedron_square_needs_an_interior_vertex(octahedron):
    res = find_minimal_spanning_disks(octahedron, (0, 2, 1, 3))
    assert res.area == 4 and len(res.solutions) == 2
    assert {m(4) for _, m in res.solutions} == {4, 5}
    assert spanning_disks(octahedron, (0, 2, 1, 3), 0) == []


def test_bounds_and_exhaustion():
    res = find_minimal_spanning_disks(cycle(5), (0, 1, 2, 3, 4), max_interior=2)
    assert res.status == "exhausted" and not res.found and res.area is None
    res = find_minimal_spanning_disks(counterexample(4), counterexample_loop(4), max_area=3)
    assert res.status == "exhausted"


def test_bad_loops_rejected(octahedron):
    with pytest.raises(ComplexError):
        find_minimal_spanning_disks(octahedron, (0, 1, 2))
    with pytest.raises(ComplexError):
        find_minimal_spanning_disks(octahedron, (0, 2))
    with pytest.raises(ComplexError):
        find_minimal_spanning_disks(octahedron, (0, 2, 0, 3))


def _check_solution(K, loop, D, m):
    for j, v in enumerate(loop):
        assert m(j) == v
    for f in D.faces:
        img = m.image(f)
        assert len(set(img)) == 3 and K.has(img)


@settings(max_examples=25, deadline=None)
@given(n=st.integers(5, 8), p=st.floats(0.3, 0.7), seed=st.integers(0, 10_000))
def test_found_disks_are_simplicial_and_minimal(n, p, seed):
    K = random_flag_complex(n, p, seed)
    for loop in enumerate_tight_cycles(K, 6, min_len=4)[:6]:
        res = find_minimal_spanning_disks(K, loop, max_interior=1)
        if not res.found:
            continue
        for D, m in res.solutions:
            _check_solution(K, loop, D, m)
        i = (res.area - len(loop) + 2) // 2
        for smaller in range(i):
            assert spanning_disks(K, loop, smaller) == []
