import random

import pytest
from hypothesis import given, strategies as st

from exactpoly.geometry import (
    DegenerateInput,
    DimensionMismatch,
    GeometryError,
    Inequality,
    OrthMap,
    affine_rank,
    evaluate,
    hyperplane_through,
)
from exactpoly.rationals import Rat, format_rat, parse_rat


def pt(*coords):
    return tuple(Rat(c) for c in coords)


class TestScalars:
    @given(st.integers(-10**12, 10**12), st.integers(1, 10**9))
    def test_parse_format_round_trip(self, n, d):
        q = Rat(n, d)
        assert parse_rat(format_rat(q)) == q

    @given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
    def test_reciprocal_product(self, a, b):
        if a == 0:
            return
        q = Rat(a, b)
        assert q * (1 / q) == 1

    def test_parse_literals(self):
        assert parse_rat("315/2") == Rat(315, 2)
        assert parse_rat("-45") == Rat(-45)
        assert parse_rat("+7/4") == Rat(7, 4)

    @pytest.mark.parametrize("bad", ["", "1/0", "1.5", "3/-2", "a", "1/2/3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rat(bad)


class TestInequality:
    def test_canonical_clears_fractions(self):
        q = Inequality(pt(5, 1, 2, 1, Rat(135, 2)), Rat(315, 2))
        assert q.key == (10, 2, 4, 2, 135, 315)

    def test_canonical_idempotent_and_scale_invariant(self):
        rng = random.Random(7)
        for _ in range(50):
            coeffs = pt(*(rng.randint(-9, 9) for _ in range(4)))
            if all(c == 0 for c in coeffs):
                continue
            q = Inequality(coeffs, Rat(rng.randint(-9, 9)))
            lam = Rat(rng.randint(1, 20), rng.randint(1, 20))
            scaled = Inequality(tuple(lam * c for c in q.coeffs), lam * q.offset)
            assert scaled.key == q.key
            assert q.canonical().canonical() == q.canonical()

    def test_zero_coefficients_rejected(self):
        with pytest.raises(DegenerateInput):
            Inequality(pt(0, 0), Rat(1))


class TestAffineRank:
    def test_coordinate_plane(self):
        assert affine_rank([pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0)]) == 2

    def test_single_point(self):
        assert affine_rank([pt(3, 4)]) == 0

    def test_empty_rejected(self):
        with pytest.raises(DegenerateInput):
            affine_rank([])

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionMismatch):
            affine_rank([pt(1, 2), pt(1, 2, 3)])

    def test_permutation_and_map_invariance(self):
        rng = random.Random(3)
        flip = OrthMap.from_rows(((0, 1, 0), (1, 0, 0), (0, 0, -1)))
        for _ in range(20):
            pts = [pt(*(rng.randint(-5, 5) for _ in range(3))) for _ in range(6)]
            r = affine_rank(pts)
            shuffled = pts[:]
            rng.shuffle(shuffled)
            assert affine_rank(shuffled) == r
            assert affine_rank([flip.apply_point(p) for p in pts]) == r


class TestHyperplaneThrough:
    def test_two_points_in_plane(self):
        h = hyperplane_through([pt(1, 0), pt(0, 1)])
        assert h.key == (1, 1, 1)

    def test_contains_inputs(self):
        rng = random.Random(11)
        for _ in range(25):
            base = [pt(*(rng.randint(-4, 4) for _ in range(3))) for _ in range(3)]
            if affine_rank(base) != 2:
                continue
            h = hyperplane_through(base)
            for p in base:
                sign, slack = evaluate(h, p)
                assert sign == 0 and slack == 0

    def test_representative_facet_hyperplane(self):
        pts = [
            pt(18, 0, 0, 0, 1),
            pt(0, 0, 45, 0, 1),
            pt(15, 15, 0, 0, 1),
            pt(0, 0, 30, 30, 1),
            pt(0, 10, 40, 0, 1),
            pt(45, 0, 0, 0, -1),
        ]
        assert hyperplane_through(pts).key == (10, 2, 4, 2, 135, 315)

    def test_base_facet_hyperplane(self):
        pts = [
            pt(18, 0, 0, 0),
            pt(0, 0, 45, 0),
            pt(15, 15, 0, 0),
            pt(0, 0, 30, 30),
            pt(0, 10, 40, 0),
            pt(10, 0, 0, 40),
        ]
        assert hyperplane_through(pts).key == (5, 1, 2, 1, 90)

    def test_rank_errors(self):
        with pytest.raises(DegenerateInput):
            hyperplane_through([pt(0, 0, 0), pt(1, 0, 0)])  # too low
        with pytest.raises(DegenerateInput):
            hyperplane_through([pt(0, 0), pt(1, 0), pt(0, 1)])  # too high


class TestEvaluate:
    def test_boundary(self):
        assert evaluate(Inequality(pt(1), Rat(2)), pt(2)) == (0, 0)

    def test_strict_slack(self):
        b = Inequality(pt(10, 2, 4, 2, 135), Rat(315))
        sign, slack = evaluate(b, pt(0, 18, 0, 0, 1))
        assert (sign, slack) == (1, 144)

    def test_tight_vertex(self):
        b = Inequality(pt(10, 2, 4, 2, 135), Rat(315))
        assert evaluate(b, pt(45, 0, 0, 0, -1)) == (0, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            evaluate(Inequality(pt(1, 1), Rat(1)), pt(1, 1, 1))


class TestOrthMap:
    def test_identity(self):
        m = OrthMap.identity(4)
        p = pt(3, -1, 2, 7)
        assert m.apply_point(p) == p

    def test_rejects_non_orthogonal(self):
        with pytest.raises(GeometryError):
            OrthMap.from_rows(((1, 1), (0, 1)))

    def test_composition_law(self):
        rng = random.Random(5)
        m1 = OrthMap.from_rows(((0, 1, 0), (1, 0, 0), (0, 0, -1)))
        m2 = OrthMap.from_rows(((0, 0, 1), (0, -1, 0), (1, 0, 0)))
        for _ in range(10):
            p = pt(*(rng.randint(-9, 9) for _ in range(3)))
            assert m2.apply_point(m1.apply_point(p)) == m2.compose(m1).apply_point(p)

    def test_ineq_transform_preserves_tightness(self):
        m = OrthMap.from_rows(((0, 1), (-1, 0)))
        q = Inequality(pt(2, 3), Rat(6))
        image = m.apply_ineq(q)
        rng = random.Random(1)
        for _ in range(20):
            p = pt(rng.randint(-5, 5), rng.randint(-5, 5))
            assert evaluate(q, p)[0] == evaluate(image, m.apply_point(p))[0]

    def test_sign_flip_permutes_family_patterns(self):
        flip = OrthMap.from_rows(((-1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0),
                                  (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)))
        plus = Inequality(pt(10, 2, 4, 2, 135), Rat(315))
        assert flip.apply_ineq(plus).key == (-10, 2, 4, 2, 135, 315)
