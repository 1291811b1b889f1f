"""Successor sequences, subsequence search, and the path pipeline."""

import itertools
import random

import pytest

from cstg.chromatics import ChiCache
from cstg.drawing import (
    AnchoredDrawing,
    Drawing,
    explicit_from,
    verify_certificate,
)
from cstg.errors import InvalidTriple, RotationMissing
from cstg.generators import anchored_view, gen_convex, gen_halfcircle, gen_twisted, rotations_of
from cstg.planepath import (
    default_m,
    extract_plane_path,
    find_plane_k2m2,
    inside_delta,
    lis_lds,
    theta,
)


def mirrored_twisted_view(m):
    base = explicit_from(gen_twisted(m), keep_rotations=False)
    rots = tuple(tuple(reversed(r)) for r in rotations_of(gen_twisted(m)))
    d = Drawing(
        n=m,
        model="explicit",
        crossings=base.crossings,
        rotations=rots,
        anchor=(m - 1, tuple(range(m - 1))),
    )
    return anchored_view(d)


class TestTheta:
    def test_worked_example_from_explicit_rotations(self):
        # rotation at v1 reads (v0, v4, v3, v2, v5) counterclockwise
        n = 6
        rots = [
            (5, 4, 3, 2, 1),  # anchor: clockwise reading is 1,2,3,4,5
            (0, 4, 3, 2, 5),
            tuple(u for u in range(n) if u != 2),
            tuple(u for u in range(n) if u != 3),
            tuple(u for u in range(n) if u != 4),
            tuple(u for u in range(n) if u != 5),
        ]
        d = Drawing(
            n=n,
            model="explicit",
            crossings=frozenset(),
            rotations=tuple(rots),
            anchor=(0, (1, 2, 3, 4, 5)),
        )
        ad = anchored_view(d)
        assert theta(ad, 1) == [4, 3, 2, 5]

    def test_convex_theta_is_decreasing(self):
        # under the clockwise-labeling convention the hull successors leave
        # v_i in reverse position order (so no long increasing run exists,
        # matching the absence of plane two-center stars in convex drawings)
        ad = anchored_view(gen_convex(10))
        for i in range(1, 10):
            th = theta(ad, i)
            assert th == sorted(th, reverse=True)

    def test_twisted_theta_is_decreasing(self):
        ad = anchored_view(gen_twisted(10))
        for i in range(1, 10):
            th = theta(ad, i)
            assert th == sorted(th, reverse=True)

    def test_mirrored_twisted_theta_is_increasing(self):
        ad = mirrored_twisted_view(10)
        for i in range(1, 10):
            th = theta(ad, i)
            assert th == sorted(th)

    def test_rotation_missing(self):
        d = Drawing(n=4, model="explicit", crossings=frozenset(),
                    anchor=(0, (1, 2, 3)))
        ad = AnchoredDrawing(base=d, v0=0, order=(1, 2, 3))
        with pytest.raises(RotationMissing):
            theta(ad, 1)


class TestLisLds:
    def test_example(self):
        r = lis_lds([4, 3, 2, 5])
        assert r.lis_length == 2
        assert r.lds_length == 3
        assert list(r.lds_witness) == [4, 3, 2]
        assert list(r.lis_witness) in ([4, 5], [3, 5], [2, 5])

    def test_sorted_sequences(self):
        r = lis_lds(list(range(1, 8)))
        assert r.lis_length == 7 and r.lds_length == 1

    def test_against_brute_force(self):
        rng = random.Random(11)
        for _ in range(50):
            seq = rng.sample(range(100), 9)
            r = lis_lds(seq)
            best_inc = max(
                (
                    len(sub)
                    for size in range(1, 10)
                    for sub in itertools.combinations(seq, size)
                    if list(sub) == sorted(sub)
                ),
            )
            best_dec = max(
                (
                    len(sub)
                    for size in range(1, 10)
                    for sub in itertools.combinations(seq, size)
                    if list(sub) == sorted(sub, reverse=True)
                ),
            )
            assert r.lis_length == best_inc
            assert r.lds_length == best_dec
            assert list(r.lis_witness) == sorted(r.lis_witness)
            assert list(r.lds_witness) == sorted(r.lds_witness, reverse=True)

    def test_erdos_szekeres_on_37(self):
        rng = random.Random(7)
        for _ in range(1000):
            seq = rng.sample(range(37), 37)
            r = lis_lds(seq)
            assert r.lis_length >= 7 or r.lds_length >= 7


class TestFindPlaneStar:
    def test_mirrored_twisted_has_a_big_star(self):
        ad = mirrored_twisted_view(20)
        cert = find_plane_k2m2(ad, 4)
        assert cert is not None
        assert len(cert.vertices) == 2 + 16
        assert cert.vertices[0] == ad.v0
        assert verify_certificate(ad.base, cert).ok

    def test_twisted_has_none(self):
        assert find_plane_k2m2(anchored_view(gen_twisted(20)), 4) is None

    def test_m1_always_found(self):
        for d in (gen_convex(5), gen_twisted(5), gen_halfcircle(5, seed=0)):
            cert = find_plane_k2m2(anchored_view(d), 1)
            assert cert is not None
            assert len(cert.vertices) == 3  # two centers, one leaf


class TestInsideDelta:
    def test_twisted_always_inside(self):
        ad = anchored_view(gen_twisted(8))
        cache = ChiCache(ad)
        for a, b, v in itertools.combinations(range(1, 8), 3):
            assert inside_delta(ad, a, b, v, cache) is True

    def test_convex_always_outside(self):
        ad = anchored_view(gen_convex(8))
        cache = ChiCache(ad)
        for a, b, v in itertools.combinations(range(1, 8), 3):
            assert inside_delta(ad, a, b, v, cache) is False

    def test_order_precondition(self):
        ad = anchored_view(gen_convex(8))
        with pytest.raises(InvalidTriple):
            inside_delta(ad, 3, 2, 5)
        with pytest.raises(InvalidTriple):
            inside_delta(ad, 2, 5, 5)


class TestDefaultM:
    def test_desk_scale_values(self):
        assert default_m(3) == 1
        assert default_m(4096) == 1
        assert default_m(2**16) == 2


class TestExtractPlanePath:
    def test_twisted_long_path(self):
        ad = anchored_view(gen_twisted(64))
        out = extract_plane_path(ad, m_override=4)
        assert out.stats.branch == "decreasing"
        assert out.vertex_count >= 32
        assert verify_certificate(ad.base, out.path).ok

    def test_trivial_branch_single_edge(self):
        ad = anchored_view(gen_halfcircle(8, seed=1))
        out = extract_plane_path(ad)  # default m = 1 at this scale
        assert out.stats.branch == "trivial"
        assert out.vertex_count == 2

    def test_three_vertices(self):
        ad = anchored_view(gen_convex(3))
        out = extract_plane_path(ad)
        assert out.vertex_count == 2

    def test_increasing_branch_with_star(self):
        ad = mirrored_twisted_view(24)
        out = extract_plane_path(ad, m_override=3, path_target=4)
        assert out.stats.branch == "increasing"
        assert out.bipartite is not None
        assert len(out.bipartite.vertices) == 2 + 9
        assert out.vertex_count >= 4
        assert verify_certificate(ad.base, out.path).ok
        assert verify_certificate(ad.base, out.bipartite).ok

    def test_halfcircle_paths_verify(self):
        for seed in range(10):
            d = gen_halfcircle(48, seed=seed)
            ad = anchored_view(d)
            out = extract_plane_path(ad, m_override=2, path_target=5)
            assert verify_certificate(d, out.path).ok

    def test_decreasing_branch_on_halfcircle(self):
        # pick seeds whose theta sequences stay short of the m^2 threshold
        hits = 0
        for seed in range(30):
            d = gen_halfcircle(40, seed=seed)
            ad = anchored_view(d)
            out = extract_plane_path(ad, m_override=4)
            if out.stats.branch == "decreasing":
                hits += 1
                assert verify_certificate(d, out.path).ok
                sizes = out.stats.candidate_sizes
                assert sizes == sorted(sizes, reverse=True)
        assert hits > 0

    def test_reports_vertex_and_edge_counts(self):
        ad = anchored_view(gen_twisted(16))
        out = extract_plane_path(ad, m_override=2)
        assert out.edge_count == out.vertex_count - 1
        lines = "\n".join(out.report_lines())
        assert "vertices" in lines and "edges" in lines
