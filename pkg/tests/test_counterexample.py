import random

import pytest

from exactpoly.counterexample import (
    EXPECTED_FACET_COUNT,
    REPRESENTATIVE_NEIGHBORS,
    base_swap_map,
    check_facet_census,
    check_neighbor_lists,
    check_orbit_quotient,
    check_orbits,
    check_prism_collinearities,
    check_representative_facets,
    check_symmetries,
    check_width,
    expected_facets,
    facet_labels,
    facet_orbits,
    parse_facet_label,
    symmetry_groups,
    verify_quick,
    vertices48,
)
from exactpoly.constructions import suspension_facet_map
from exactpoly.geometry import OrthMap
from exactpoly.graphs import Graph
from exactpoly.linalg import echelon
from exactpoly.polytopes import VPolytope, dual_graph, facet_enumeration, is_simple, is_simplicial
from exactpoly.prismatoids import has_dstep_property, make_prismatoid, width
from exactpoly.rationals import Rat


def assert_report(rep):
    assert rep.passed, "\n".join(c.line() for c in rep.failures())


class TestData:
    def test_vertex_5_plus(self, q48):
        i = q48.labels.index("5+")
        assert q48.vertices[i] == tuple(Rat(c) for c in (0, 0, 45, 0, 1))

    def test_labels(self, q48):
        assert q48.labels[0] == "1+"
        assert q48.labels[47] == "24-"
        assert len(set(q48.labels)) == 48

    def test_affine_rank_five_by_homogenized_elimination(self, q48):
        # independent oracle: rank of the homogenized 48 x 6 matrix
        rows = [list(p) + [Rat(1)] for p in q48.vertices]
        assert len(echelon(rows)) == 6

    def test_expected_facets_table(self):
        table = expected_facets()
        assert len(table) == EXPECTED_FACET_COUNT
        assert table[(0, 0, 0, 0, 1, 1)].letter == "A"
        assert table[(0, 0, 0, 0, -1, 1)].letter == "L"
        assert str(table[(10, 2, 4, 2, 135, 315)]) == "B++++"

    def test_facet_label_round_trip(self):
        for text in ("A", "L", "B++++", "C'+-+-", "K'----"):
            assert str(parse_facet_label(text)) == text


class TestCensus:
    def test_322_facets(self, q48_hull):
        assert q48_hull.incidence.n_facets == 322

    def test_census_report(self, q48_hull):
        assert_report(check_facet_census(q48_hull))

    def test_labels_bijective(self, q48_hull, q48_labels):
        assert len(q48_labels) == 322
        assert len({str(l) for l in q48_labels}) == 322

    def test_base_vertex_sets(self, q48_pr):
        plus = {q48_pr.polytope.labels[v] for v in q48_pr.base_plus_vertices()}
        assert plus == {f"{i}+" for i in range(1, 25)}
        minus = {q48_pr.polytope.labels[v] for v in q48_pr.base_minus_vertices()}
        assert minus == {f"{i}-" for i in range(1, 25)}

    def test_not_simple_not_simplicial(self, q48_pr):
        assert not is_simple(q48_pr.polytope, q48_pr.hull)
        assert not is_simplicial(q48_pr.polytope, q48_pr.hull)


class TestSymmetry:
    def test_group_orders(self, q48):
        sigma, sigma_plus = symmetry_groups(q48)
        assert sigma.order == 64
        assert sigma_plus.order == 32

    def test_base_swap_label_action(self, q48):
        swap = base_swap_map()
        idx = {p: i for i, p in enumerate(q48.vertices)}
        for i in range(24):
            assert idx[swap.apply_point(q48.vertices[i])] == i + 24

    def test_swap_square_is_double_transposition(self):
        sq = base_swap_map().compose(base_swap_map())
        want = OrthMap.from_rows((
            (0, 1, 0, 0, 0), (1, 0, 0, 0, 0),
            (0, 0, 0, 1, 0), (0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1)))
        assert sq.key == want.key
        assert sq.key != OrthMap.identity(5).key

    def test_symmetry_report(self, q48, q48_hull):
        assert_report(check_symmetries(q48, q48_hull))


class TestOrbits:
    def test_orbit_report(self, q48, q48_hull, q48_labels):
        assert_report(check_orbits(q48, q48_hull, q48_labels))

    def test_orbit_of_representative_has_32(self, q48, q48_hull, q48_labels):
        _, sigma_plus = symmetry_groups(q48)
        orbits = facet_orbits(sigma_plus, q48_hull)
        by_label = {str(l): i for i, l in enumerate(q48_labels)}
        b = by_label["B++++"]
        orbit = next(o for o in orbits if b in o)
        assert len(orbit) == 32
        letters = {q48_labels[f].letter for f in orbit}
        assert letters == {"B"}
        assert {q48_labels[f].primed for f in orbit} == {True, False}


class TestDualGraphStructure:
    def test_neighbor_lists(self, q48, q48_hull, q48_labels, q48_dual):
        assert_report(check_neighbor_lists(q48, q48_hull, q48_labels, q48_dual))

    def test_neighbors_match_table(self, q48_labels, q48_dual):
        by_label = {str(l): i for i, l in enumerate(q48_labels)}
        for name, wanted in REPRESENTATIVE_NEIGHBORS.items():
            got = {str(q48_labels[g]) for g in q48_dual.adj[by_label[name]]}
            assert got == set(wanted)

    def test_width_is_six(self, q48_pr, q48_dual):
        assert width(q48_pr, q48_dual) == 6

    def test_width_report(self, q48_pr, q48_dual):
        assert_report(check_width(q48_pr, q48_dual))

    def test_no_dstep_property(self, q48_pr, q48_dual):
        assert not has_dstep_property(q48_pr, q48_dual)

    def test_quotient_report(self, q48, q48_hull, q48_labels, q48_dual):
        assert_report(check_orbit_quotient(q48, q48_hull, q48_labels, q48_dual))


class TestTables:
    def test_representative_facets(self, q48, q48_hull, q48_labels):
        assert_report(check_representative_facets(q48, q48_hull, q48_labels))

    def test_collinearities(self, q48):
        assert_report(check_prism_collinearities(q48))


class TestWidthInvariance:
    def test_under_symmetry(self, q48):
        sigma, _ = symmetry_groups(q48)
        m = sigma.maps[17]
        moved = VPolytope(tuple(m.apply_point(p) for p in q48.vertices))
        hull = facet_enumeration(moved)
        pr = make_prismatoid(moved)
        assert width(pr) == 6

    def test_under_vertex_permutation(self, q48):
        rng = random.Random(6)
        order = list(range(48))
        rng.shuffle(order)
        moved = VPolytope(tuple(q48.vertices[i] for i in order))
        pr = make_prismatoid(moved)
        assert width(pr) == 6


class TestSmallPrismatoids:
    def test_cube_has_dstep_property(self):
        pts = tuple(
            tuple(Rat(c) for c in (x, y, z))
            for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)
        )
        pr = make_prismatoid(VPolytope(pts))
        assert width(pr) == 2
        assert has_dstep_property(pr)

    def test_triangular_prism_width_two(self):
        pts = tuple(
            tuple(Rat(c) for c in (x, y, z))
            for (x, y) in ((0, 0), (3, 0), (0, 3)) for z in (-1, 1)
        )
        hull = facet_enumeration(VPolytope(pts))
        keys = [q.key for q in hull.hrep.inequalities]
        pr = make_prismatoid(
            VPolytope(pts), hull, keys.index((0, 0, 1, 1)), keys.index((0, 0, -1, 1))
        )
        assert width(pr) == 2


class TestSuspensionOfCounterexample:
    def test_suspension_distance_from_bottom_to_pyramids(self, q48_pr):
        # suspend over a bottom-base vertex: the lifted bottom base stays at
        # dual distance >= 6 from both pyramids over the top base
        poly, hull = q48_pr.polytope, q48_pr.hull
        v = q48_pr.base_minus_vertices()[4]  # the vertex labeled 5-
        S, hull_S, expected, idx_map, u_idx, w_idx = suspension_facet_map(poly, hull, v)
        mask_to_new = {m: i for i, m in enumerate(hull_S.incidence.facet_masks)}
        lift = {}
        for mask, (f, kind) in expected.items():
            lift[(f, kind)] = mask_to_new[mask]
        g = dual_graph(S, hull_S)
        bottom = lift[(q48_pr.base_minus, "s")]
        dist = g.bfs_distances(bottom)
        for kind in ("u", "w"):
            assert dist[lift[(q48_pr.base_plus, kind)]] >= 6


class TestMutation:
    @pytest.mark.parametrize("cell", [(0, 0), (12, 2), (40, 3)])
    def test_single_coordinate_mutations_fail(self, cell):
        mutated = vertices48(mutate={cell: 1})
        rep = verify_quick(mutated)
        assert not rep.passed

    def test_unmutated_quick_check_passes(self):
        assert verify_quick(vertices48()).passed
