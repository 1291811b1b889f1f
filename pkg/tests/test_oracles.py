"""Brute-force searches and the numeric rotation oracle."""

import pytest

from cstg.drawing import CONVEX, TWISTED, Certificate, induced_subdrawing, verify_certificate
from cstg.errors import BudgetExhausted, DegenerateInput
from cstg.generators import (
    anchored_view,
    cyclic_equal,
    gen_convex,
    gen_halfcircle,
    gen_straightline,
    gen_twisted,
    rotations_of,
)
from cstg.oracles import (
    OracleBudget,
    longest_plane_path_exact,
    max_pattern_exact,
    numeric_rotation_oracle,
)


class TestMaxPattern:
    def test_whole_drawing_is_its_own_pattern(self):
        assert max_pattern_exact(gen_convex(6), CONVEX).size == 6
        assert max_pattern_exact(gen_twisted(6), TWISTED).size == 6

    def test_twisted_has_no_big_convex_pattern(self):
        # reordering buys a 4-point convex pattern (e.g. 1,2,4,3) but no more
        assert max_pattern_exact(gen_twisted(6), CONVEX).size == 4
        assert max_pattern_exact(gen_twisted(8), CONVEX).size == 4

    def test_convex_has_no_big_twisted_pattern(self):
        result = max_pattern_exact(gen_convex(8), TWISTED)
        assert result.size == 4

    def test_witnesses_verify(self):
        for seed in range(8):
            d = gen_halfcircle(10, seed=seed)
            for kind in (CONVEX, TWISTED):
                result = max_pattern_exact(d, kind)
                cert = Certificate(kind, result.witness)
                assert verify_certificate(d, cert).ok
                assert result.exact

    def test_monotone_under_restriction(self):
        d = gen_halfcircle(10, seed=5)
        sub = induced_subdrawing(d, [0, 2, 3, 5, 7, 8, 9])
        for kind in (CONVEX, TWISTED):
            assert (
                max_pattern_exact(sub, kind).size
                <= max_pattern_exact(d, kind).size
            )

    def test_budget_exhaustion_carries_best(self):
        with pytest.raises(BudgetExhausted) as info:
            max_pattern_exact(gen_halfcircle(14, seed=0), CONVEX, OracleBudget(nodes=5))
        payload = info.value.payload
        assert not payload.exact
        assert payload.size >= 1


class TestLongestPlanePath:
    def test_small_families(self):
        assert longest_plane_path_exact(gen_convex(5)).size == 5
        assert longest_plane_path_exact(gen_twisted(5)).size == 5
        assert longest_plane_path_exact(gen_convex(2)).size == 2

    def test_twisted_spine_witness(self):
        result = longest_plane_path_exact(gen_twisted(5))
        cert = Certificate("plane_path", result.witness)
        assert verify_certificate(gen_twisted(5), cert).ok

    def test_restriction_and_target(self):
        d = gen_convex(10)
        result = longest_plane_path_exact(d, vertices=[0, 2, 4, 6], target=3)
        assert result.size >= 3
        assert set(result.witness) <= {0, 2, 4, 6}
        assert not result.exact  # stopped at the target

    def test_witness_always_plane(self):
        for seed in range(6):
            d = gen_halfcircle(9, seed=seed)
            result = longest_plane_path_exact(d)
            cert = Certificate("plane_path", result.witness)
            assert verify_certificate(d, cert).ok


class TestNumericRotations:
    def test_agrees_with_analytic_all_families(self):
        drawings = [
            gen_convex(11),
            gen_twisted(11),
            gen_halfcircle(11, seed=13),
            gen_straightline([(0, 0), (7, 2), (5, 9), (-3, 4), (2, -6), (9, -1)]),
        ]
        for d in drawings:
            numeric = numeric_rotation_oracle(d)
            analytic = rotations_of(d)
            assert all(cyclic_equal(a, b) for a, b in zip(numeric, analytic))

    def test_duplicate_positions_degenerate(self):
        from cstg.drawing import Drawing

        d = Drawing(n=2, model="points", points=((0, 0), (0, 0)))
        with pytest.raises(DegenerateInput):
            numeric_rotation_oracle(d)

    def test_geometry_missing_for_explicit(self):
        from cstg.drawing import Drawing
        from cstg.errors import GeometryMissing

        d = Drawing(n=4, model="explicit", crossings=frozenset())
        with pytest.raises(GeometryMissing):
            numeric_rotation_oracle(d)


class TestDominance:
    def test_extraction_below_oracle(self):
        from cstg.extraction import extract_pattern
        from cstg.planepath import extract_plane_path

        for seed in range(6):
            d = gen_halfcircle(10, seed=seed)
            ad = anchored_view(d)
            out = extract_pattern(ad, 3, 3)
            if out.certificate is not None:
                oracle = max_pattern_exact(d, out.certificate.kind)
                assert len(out.certificate.vertices) <= oracle.size
            path_out = extract_plane_path(ad, m_override=2)
            oracle_path = longest_plane_path_exact(d)
            assert path_out.vertex_count <= oracle_path.size
