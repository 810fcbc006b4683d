import pytest

from mapquot import census
from mapquot.maps import PointedMap, is_simple
from mapquot.orientations import (
    Orientation,
    OrientationInfeasible,
    PathSelfIntersects,
    WrongFamily,
    check_symmetric_minimal,
    directed_simple_cycles,
    find_d_orientation,
    has_d_orientation,
    is_minimal,
    leftmost_path,
    minimal_d_orientation,
    minimize,
)

from fixtures import cube, square_map, tetrahedron


def non_simple_quadrangulation():
    return next(
        m for m in census.rooted_quadrangulations(3, simple=False) if not is_simple(m)
    )


class TestFindOrientation:
    def test_square_has_empty_orientation(self):
        o = find_d_orientation(square_map(), 2)
        assert all(d is None for d in o.along)
        assert is_minimal(o)

    def test_doubled_edge_is_infeasible(self):
        with pytest.raises(OrientationInfeasible):
            find_d_orientation(non_simple_quadrangulation(), 2)

    def test_tetrahedron_forced(self):
        m = tetrahedron()
        o = find_d_orientation(m, 3)
        center = m.inner_vertices()[0]
        assert o.outdegree(center) == 3
        assert is_minimal(o)

    def test_wrong_family(self):
        with pytest.raises(WrongFamily):
            find_d_orientation(square_map(), 3)
        with pytest.raises(WrongFamily):
            find_d_orientation(tetrahedron(), 2)

    def test_simple_iff_orientable(self):
        for n in range(2, 7):
            for m in census.rooted_quadrangulations(n, simple=False):
                assert has_d_orientation(m, 2) == is_simple(m)
        for n in (2, 4, 6):
            for m in census.rooted_triangulations(n, simple=False):
                assert has_d_orientation(m, 3) == is_simple(m)

    def test_outdegree_conservation(self):
        for m in census.rooted_quadrangulations(5, simple=True):
            o = find_d_orientation(m, 2)
            assert len(m.inner_edges()) == 2 * len(m.inner_vertices())
            for v in range(m.n_vertices):
                want = 0 if v in m.outer_vertices() else 2
                assert o.outdegree(v) == want


class TestMinimize:
    def test_cube_initialization_independent(self):
        m = cube()
        o1 = find_d_orientation(m, 2)
        minimal = minimize(o1)
        assert is_minimal(minimal)
        for cyc in directed_simple_cycles(o1):
            alt = minimize(o1.reversed_cycle(cyc))
            assert alt.along == minimal.along

    def test_reversing_a_cycle_breaks_minimality(self):
        minimal = minimal_d_orientation(cube(), 2)
        cycles = directed_simple_cycles(minimal)
        assert cycles, "the cube's minimal orientation has a directed ring"
        assert not is_minimal(minimal.reversed_cycle(cycles[0]))

    def test_minimize_idempotent(self):
        for m in census.rooted_quadrangulations(4, simple=True):
            o = minimal_d_orientation(m, 2)
            assert minimize(o).along == o.along

    def test_uniqueness_over_census(self):
        for m in census.rooted_triangulations(6, simple=True):
            o = find_d_orientation(m, 3)
            minimal = minimize(o)
            for cyc in directed_simple_cycles(o)[:3]:
                assert minimize(o.reversed_cycle(cyc)).along == minimal.along


class TestLeftmostPaths:
    def test_head_on_boundary_gives_length_one(self):
        m = tetrahedron()
        o = find_d_orientation(m, 3)
        for e, dart in enumerate(o.along):
            if dart is None:
                continue
            assert len(leftmost_path(o, dart)) == 1

    def test_paths_simple_and_end_outside(self):
        for n in (4, 5, 6):
            for m in census.rooted_quadrangulations(n, simple=True):
                o = minimal_d_orientation(m, 2)
                for e, dart in enumerate(o.along):
                    if dart is None:
                        continue
                    path = leftmost_path(o, dart)
                    heads = [m.vertex_of[d] for d in path]
                    assert len(set(heads)) == len(heads)
                    assert m.vertex_of[path[-1] ^ 1] in m.outer_vertices()

    def test_center_paths_meet_only_at_center(self):
        for sym in census.symmetric_simple_quadrangulations(3):
            m = sym.plane_map
            o = minimal_d_orientation(m, 2)
            outgoing = [d for d in m.vertices[sym.center] if o.is_outgoing(d)]
            seen = set()
            for start in outgoing:
                verts = {m.vertex_of[d ^ 1] for d in leftmost_path(o, start)}
                assert not (seen & verts)
                seen |= verts


class TestSymmetricMinimal:
    def test_rotation_invariance_quad(self):
        for n in (1, 2, 3):
            for sym in census.symmetric_simple_quadrangulations(n):
                o = minimal_d_orientation(sym.plane_map, 2)
                assert check_symmetric_minimal(sym, o)

    def test_rotation_invariance_tri(self):
        for n in (1, 3):
            for sym in census.symmetric_simple_triangulations(n):
                o = minimal_d_orientation(sym.plane_map, 3)
                assert check_symmetric_minimal(sym, o)


class TestOrientationRecord:
    def test_validation_rejects_outer_direction(self):
        m = cube()
        o = find_d_orientation(m, 2)
        bad = list(o.along)
        outer_edge = next(iter(m.outer_edges()))
        bad[outer_edge] = 2 * outer_edge
        with pytest.raises(Exception):
            Orientation(m, tuple(bad))
