"""Family generators: crossing rules vs independent geometry, rotations,
anchors, reproducibility."""

import itertools
import math

import pytest

from cstg.chromatics import validate_observation
from cstg.drawing import cross, edge_index, orient
from cstg.errors import AnchorUnavailable, DegenerateInput, InvalidSigns, SizeLimit
from cstg.generators import (
    HalfCircleSigns,
    anchored_order,
    anchored_view,
    canonical_anchor,
    cyclic_equal,
    gen_convex,
    gen_halfcircle,
    gen_horton,
    gen_straightline,
    gen_twisted,
    hull_vertices,
    rotation_at,
    rotations_of,
    spiral_cross,
)
from cstg.oracles import numeric_rotation_oracle


def independent_pairs(n):
    edges = list(itertools.combinations(range(n), 2))
    for e1, e2 in itertools.combinations(edges, 2):
        if not set(e1) & set(e2):
            yield e1, e2


def crossing_count(d):
    return sum(1 for e1, e2 in independent_pairs(d.n) if cross(d, e1, e2))


class TestConvex:
    def test_small_counts(self):
        assert crossing_count(gen_convex(3)) == 0
        assert crossing_count(gen_convex(4)) == 1
        assert cross(gen_convex(4), (0, 2), (1, 3))
        # each 4-subset contributes exactly one interleaving pair
        assert crossing_count(gen_convex(5)) == 5
        assert crossing_count(gen_convex(7)) == math.comb(7, 4)

    def test_matches_exact_segments_on_parabola(self):
        # points (i, i^2) are in convex position in hull order 0..n-1, so the
        # interleaving rule must agree with the exact segment predicate
        n = 12
        d = gen_convex(n)
        pts = gen_straightline([(i, i * i) for i in range(n)])
        for e1, e2 in independent_pairs(n):
            assert cross(d, e1, e2) == cross(pts, e1, e2)

    def test_every_vertex_anchors(self):
        d = gen_convex(7)
        for v in range(7):
            ad = anchored_view(d, v)
            assert ad.v0 == v
            assert validate_observation(ad).ok


class TestTwisted:
    def test_formula_examples(self):
        d = gen_twisted(5)
        assert cross(d, (0, 4), (1, 3)) is True
        assert cross(d, (0, 2), (1, 3)) is False

    def test_crossing_pairs_by_enumeration(self):
        # one nested pairing per 4-subset: C(m,4) crossing pairs in total
        assert crossing_count(gen_twisted(4)) == 1
        assert crossing_count(gen_twisted(5)) == 5
        assert crossing_count(gen_twisted(6)) == math.comb(6, 4)
        assert crossing_count(gen_twisted(2)) == 0

    def test_spiral_route_equals_index_formula(self):
        # dual route: the spiral realization decides crossings from radius
        # differences at the sweep ends, independently of the index rule
        for m in (4, 6, 9, 13):
            d = gen_twisted(m)
            for e1, e2 in independent_pairs(m):
                assert spiral_cross(d.radii, e1, e2) == cross(d, e1, e2)

    def test_custom_radii_do_not_change_the_relation(self):
        from cstg.generators import SpiralTwistedParams

        d1 = gen_twisted(6)
        d2 = gen_twisted(6, SpiralTwistedParams(6, (1, 4, 9, 16, 25, 36)))
        for e1, e2 in independent_pairs(6):
            assert cross(d1, e1, e2) == cross(d2, e1, e2)

    def test_anchor_is_outermost_only(self):
        d = gen_twisted(6)
        assert canonical_anchor(d) == 5
        with pytest.raises(AnchorUnavailable):
            anchored_order(d, 2)


def circles_intersect_strictly(c1, r1, c2, r2):
    # numeric oracle: two circles centered on the x-axis cross off-axis
    d = abs(c2 - c1)
    if d == 0:
        return False
    x = (c1 + c2) / 2 + (r1 * r1 - r2 * r2) / (2 * (c2 - c1))
    y_sq = r1 * r1 - (x - c1) ** 2
    return y_sq > 1e-12


class TestHalfCircle:
    def test_same_side_interleaving_crosses(self):
        n = 6
        d = gen_halfcircle(n, signs=HalfCircleSigns(n, "U" * 15))
        # labels 1,3 and 2,4 (0-based: x positions 2,4 and 3,5)
        assert cross(d, (1, 3), (2, 4)) is True
        assert cross(d, (0, 3), (1, 2)) is False  # nested same side

    def test_against_circle_intersection_oracle(self):
        for seed in range(10):
            d = gen_halfcircle(7, seed=seed)
            xs = [v + 1.0 for v in range(7)]
            for (a, b), (c, e) in independent_pairs(7):
                same = d.signs[d.rank(a, b)] == d.signs[d.rank(c, e)]
                expected = same and circles_intersect_strictly(
                    (xs[a] + xs[b]) / 2,
                    (xs[b] - xs[a]) / 2,
                    (xs[c] + xs[e]) / 2,
                    (xs[e] - xs[c]) / 2,
                )
                assert cross(d, (a, b), (c, e)) == expected

    def test_seeded_generation_is_reproducible(self):
        a = gen_halfcircle(20, seed=42)
        b = gen_halfcircle(20, seed=42)
        assert a.signs == b.signs
        assert gen_halfcircle(20, seed=43).signs != a.signs

    def test_sign_length_validation(self):
        with pytest.raises(InvalidSigns):
            HalfCircleSigns(5, "UUU")
        with pytest.raises(InvalidSigns):
            HalfCircleSigns(3, "UXL")

    def test_anchored_order_upper_desc_then_lower_asc(self):
        n = 5
        signs = ["L"] * 10
        for j in (1, 3):  # edges 0-1 and 0-3 upper, 0-2 and 0-4 lower
            signs[edge_index(0, j, n)] = "U"
        d = gen_halfcircle(n, signs=HalfCircleSigns(n, "".join(signs)))
        assert anchored_order(d, 0) == (3, 1, 2, 4)
        with pytest.raises(AnchorUnavailable):
            anchored_order(d, 1)


class TestStraightLine:
    def test_convex_position_matches_gen_convex(self):
        pts = [(10, 0), (0, 10), (-10, 0), (0, -10)]
        d = gen_straightline(pts)
        c = gen_convex(4)
        for e1, e2 in independent_pairs(4):
            assert cross(d, e1, e2) == cross(c, e1, e2)

    def test_point_inside_triangle_has_no_crossings(self):
        d = gen_straightline([(0, 0), (10, 0), (5, 9), (5, 3)])
        assert crossing_count(d) == 0

    def test_collinear_triple_rejected_with_names(self):
        with pytest.raises(DegenerateInput, match=r"\(0,1,2\)"):
            gen_straightline([(0, 0), (1, 1), (2, 2), (5, 0)])

    def test_duplicate_point_rejected(self):
        with pytest.raises(DegenerateInput, match="duplicate"):
            gen_straightline([(0, 0), (1, 2), (0, 0)])

    def test_anchor_must_be_on_hull(self):
        d = gen_straightline([(0, 0), (10, 0), (5, 9), (5, 3)])
        assert canonical_anchor(d) == 0
        with pytest.raises(AnchorUnavailable):
            anchored_order(d, 3)  # interior point


class TestHorton:
    def test_sizes(self):
        assert len(gen_horton(0)) == 1
        assert len(gen_horton(1)) == 2
        assert len(gen_horton(3)) == 8
        with pytest.raises(SizeLimit):
            gen_horton(13)

    def test_general_position_up_to_k8(self):
        # the cubic collinearity scan makes larger k impractical to check here
        for k in range(1, 9):
            pts = gen_horton(k)
            gen_straightline(pts)  # validates pairwise distinct + no collinear

    def test_max_convex_subset_of_h8(self):
        # exhaustive convex-position search on the 8 points
        pts = gen_horton(3)

        def in_convex_position(sub):
            return len(hull_vertices([pts[i] for i in sub])) == len(sub)

        best = 0
        for size in range(3, 9):
            for sub in itertools.combinations(range(8), size):
                if in_convex_position(sub):
                    best = size
                    break
        assert best <= 6


class TestRotations:
    def test_match_numeric_oracle_all_families(self):
        drawings = [
            gen_convex(9),
            gen_twisted(9),
            gen_halfcircle(9, seed=0),
            gen_halfcircle(9, seed=7),
            gen_straightline(gen_horton(3)),
        ]
        for d in drawings:
            numeric = numeric_rotation_oracle(d)
            analytic = rotations_of(d)
            for v in range(d.n):
                assert cyclic_equal(numeric[v], analytic[v]), (d.model, v)

    def test_halfcircle_rotations_many_seeds(self):
        for seed in range(25):
            d = gen_halfcircle(8, seed=seed)
            numeric = numeric_rotation_oracle(d)
            for v in range(8):
                assert cyclic_equal(numeric[v], rotation_at(d, v))


class TestAnchoredViews:
    def test_observation_holds_for_every_generator(self):
        drawings = [
            gen_convex(32),
            gen_twisted(32),
            gen_halfcircle(32, seed=3),
            gen_straightline(gen_horton(4)),
        ]
        for d in drawings:
            ad = anchored_view(d)
            assert validate_observation(ad).ok, d.model

    def test_order_is_clockwise_reading_of_rotation(self):
        # reversal of the anchored order must be a cyclic cut of the ccw
        # rotation at the anchor (anchored_view checks this internally)
        for d in (gen_convex(8), gen_twisted(8), gen_halfcircle(8, seed=2)):
            ad = anchored_view(d)
            assert cyclic_equal(
                tuple(reversed(ad.order)), rotation_at(d, ad.v0)
            )

    def test_rotation_missing_for_bare_explicit(self):
        from cstg.drawing import Drawing
        from cstg.errors import RotationMissing

        d = Drawing(n=4, model="explicit", crossings=frozenset())
        with pytest.raises(RotationMissing):
            anchored_view(d, 0)
