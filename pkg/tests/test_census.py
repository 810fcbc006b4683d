import pytest

from mapquot import census
from mapquot.maps import (
    DissectionSpec,
    PlaneMap,
    PointedMap,
    canonical_code,
    is_quasi_simple,
    is_simple,
    radial_distance,
)

# frozen counts; the golden q/t values also appear in the acceptance suite
Q_SIMPLE = {2: 1, 3: 2, 4: 6, 5: 22, 6: 91, 7: 408}
T_SIMPLE = {2: 1, 4: 1, 6: 3, 8: 13, 10: 68}
F_QUAD = {1: 2, 2: 9, 3: 54, 4: 378}
F_TRI = {2: 3, 4: 24, 6: 256}

TWO_POINT = {
    1: {1: 1},
    2: {1: 8, 2: 1},
    3: {1: 65, 2: 15, 3: 1},
    4: {1: 554, 2: 179, 3: 22, 4: 1},
}


class TestRootedCounts:
    @pytest.mark.parametrize("n,count", sorted(Q_SIMPLE.items()))
    def test_simple_quadrangulations(self, n, count):
        assert len(census.rooted_quadrangulations(n, simple=True)) == count

    @pytest.mark.parametrize("n,count", sorted(T_SIMPLE.items()))
    def test_simple_triangulations(self, n, count):
        assert len(census.rooted_triangulations(n, simple=True)) == count

    @pytest.mark.parametrize("n,count", sorted(F_QUAD.items()))
    def test_sphere_quadrangulations(self, n, count):
        assert len(census.rooted_sphere_quads(n)) == count

    @pytest.mark.parametrize("n,count", sorted(F_TRI.items()))
    def test_simply_rooted_triangulations(self, n, count):
        assert len(census.simply_rooted_sphere_tris(n)) == count

    def test_one_inner_face_quadrangulation_is_unique(self):
        fam = census.rooted_quadrangulations(2, simple=True)
        assert len(fam) == 1
        assert fam[0].n_vertices == 4

    def test_no_duplicates(self):
        for fam in (
            census.rooted_quadrangulations(5, simple=False),
            census.rooted_tri_1_dissections(5),
        ):
            codes = [canonical_code(m) for m in fam]
            assert len(codes) == len(set(codes))

    def test_members_are_valid_dissections(self):
        for m in census.rooted_quadrangulations(4, simple=True):
            assert is_simple(m)
            assert m.outer_degree() == 4
            assert all(len(f) == 4 for f in m.faces)


class TestFilters:
    def test_closure_under_simplicity(self):
        total = len(census.rooted_quadrangulations(5, simple=False))
        simple = len(census.rooted_quadrangulations(5, simple=True))
        non_simple = sum(
            not is_simple(m) for m in census.rooted_quadrangulations(5, simple=False)
        )
        assert simple + non_simple == total

    def test_distance_buckets_partition(self):
        for n in (2, 3):
            per_dist = [
                census.count_pointed_dissections(4, n, distance=i) for i in range(1, 2 * n + 1)
            ]
            assert sum(per_dist) == census.count_pointed_dissections(4, n)


class TestTwoPoint:
    @pytest.mark.parametrize("n", sorted(TWO_POINT))
    def test_two_point_quad_counts(self, n):
        for i, count in TWO_POINT[n].items():
            assert census.count_two_point_quad(n, i) == count
        assert census.count_two_point_quad(n, 2 * n + 1) == 0

    def test_cross_footing(self):
        for n in (2, 3):
            table = census.two_point_quad_table(n)
            assert table[0] == sum(v for k, v in table.items() if k >= 1)

    def test_contraction_matches_pointed_dissections(self):
        # contracting the outer 2-gon is a bijection onto marked sphere maps
        for n in (1, 2, 3):
            for i in (1, 2, 3):
                assert census.count_two_point_quad(n, i) == census.count_pointed_dissections(
                    4, n, distance=i
                )


class TestSymmetric:
    def test_symmetric_equals_marked_edge_quad(self):
        for n in (1, 2, 3):
            lhs = census.count_symmetric(4, 4, 2, 2 * n, simple=True)
            rhs = census.marked_edge_count(
                census.rooted_quadrangulations(n + 1, simple=True)
            )
            assert lhs == rhs

    def test_symmetric_triangulations_need_odd_size(self):
        assert census.count_symmetric(3, 3, 3, 6, simple=True) == 0
        assert census.count_symmetric(3, 3, 3, 3, simple=True) == 1

    def test_symmetric_equals_quasi_simple_pointed(self):
        for n in (1, 2, 3):
            assert census.count_symmetric(4, 4, 2, 2 * n, simple=True) == (
                census.count_pointed_dissections(4, n, quasi_simple=True)
            )
        for n in (1, 3):
            assert census.count_symmetric(3, 3, 3, 3 * n, simple=True) == (
                census.count_pointed_dissections(3, n, quasi_simple=True)
            )

    def test_witnesses_are_symmetric(self):
        for sym in census.symmetric_simple_quadrangulations(2):
            assert sym.order_k == 2
            assert radial_distance(PointedMap(sym.plane_map, sym.center)) >= 1


class TestQueries:
    def test_generate_plain(self):
        q = census.CensusQuery(DissectionSpec(4, 4, simple=True), 4)
        assert census.count(q).count == Q_SIMPLE[4]

    def test_generate_symmetric(self):
        spec = DissectionSpec(4, 4, simple=True, symmetry_k=2)
        assert census.count(census.CensusQuery(spec, 2)).count == 3

    def test_generate_pointed(self):
        spec = DissectionSpec(4, 2, pointed=True, quasi_simple=True)
        assert census.count(census.CensusQuery(spec, 2)).count == 3

    def test_cap_enforced(self):
        with pytest.raises(census.SizeCapExceeded):
            census.rooted_quadrangulations(8, simple=True)
        with pytest.raises(census.SizeCapExceeded):
            census.rooted_family(4, 4, 30)

    def test_cap_override(self):
        fam = census.rooted_quadrangulations(8, simple=True, force=True)
        assert len(fam) == 1938
