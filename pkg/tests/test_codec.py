"""Canonical serialization: round trips, determinism, validation."""

import pytest

from cstg.codec import (
    decode_certificate,
    decode_drawing,
    encode_certificate,
    encode_drawing,
)
from cstg.drawing import CONVEX, Certificate, edge_index, explicit_from
from cstg.errors import ParseError, ValidationError
from cstg.generators import (
    anchored_view,
    gen_convex,
    gen_halfcircle,
    gen_horton,
    gen_straightline,
    gen_twisted,
    rotations_of,
)


def corpus():
    yield gen_convex(6)
    yield gen_twisted(9)
    yield gen_halfcircle(8, seed=11)
    yield gen_straightline(gen_horton(3))
    d = gen_halfcircle(7, seed=5)
    ad = anchored_view(d)
    explicit = explicit_from(d)
    from cstg.drawing import Drawing

    yield Drawing(
        n=7,
        model="explicit",
        crossings=explicit.crossings,
        rotations=rotations_of(d),
        anchor=(ad.v0, ad.order),
    )


class TestRoundTrip:
    def test_encode_decode_identity_on_corpus(self):
        for d in corpus():
            text = encode_drawing(d)
            again = encode_drawing(decode_drawing(text))
            assert again == text

    def test_two_encodes_are_byte_identical(self):
        for d in corpus():
            assert encode_drawing(d) == encode_drawing(d)

    def test_decoded_drawing_answers_same_queries(self):
        import itertools

        from cstg.drawing import cross

        for d in corpus():
            back = decode_drawing(encode_drawing(d))
            for e1, e2 in itertools.combinations(
                itertools.combinations(range(d.n), 2), 2
            ):
                if set(e1) & set(e2):
                    continue
                assert cross(back, e1, e2) == cross(d, e1, e2)

    def test_rotations_and_anchor_survive(self):
        d = gen_halfcircle(6, seed=1)
        ad = anchored_view(d)
        from cstg.drawing import Drawing

        explicit = explicit_from(d)
        carrier = Drawing(
            n=6,
            model="explicit",
            crossings=explicit.crossings,
            rotations=rotations_of(d),
            anchor=(ad.v0, ad.order),
        )
        back = decode_drawing(encode_drawing(carrier))
        assert back.rotations == carrier.rotations
        assert back.anchor == carrier.anchor

    def test_certificate_round_trip(self):
        cert = Certificate(CONVEX, (4, 1, 7, 2))
        assert decode_certificate(encode_certificate(cert)) == cert


class TestGoldenDocuments:
    def test_convex_document_bytes(self):
        assert encode_drawing(gen_convex(4)) == '{"format":"cstg-1","model":"convex","n":4}\n'

    def test_halfcircle_document_bytes(self):
        from cstg.generators import HalfCircleSigns

        d = gen_halfcircle(3, signs=HalfCircleSigns(3, "ULU"))
        assert encode_drawing(d) == (
            '{"format":"cstg-1","model":"halfcircle","n":3,'
            '"params":{"signs":"ULU"}}\n'
        )

    def test_explicit_document_bytes(self):
        # the one crossing of the convex 4-gon: edge ranks (0,2) and (1,3)
        assert encode_drawing(explicit_from(gen_convex(4), keep_rotations=False)) == (
            '{"crossings":[[1,4]],"format":"cstg-1","model":"explicit","n":4}\n'
        )

    def test_certificate_document_bytes(self):
        cert = Certificate(CONVEX, (2, 0, 1))
        assert encode_certificate(cert) == '{"kind":"convex","vertices":[2,0,1]}\n'


class TestValidation:
    def test_adjacent_crossing_pair_rejected(self):
        n = 4
        r1 = edge_index(0, 1, n)
        r2 = edge_index(1, 2, n)
        doc = (
            '{"crossings":[[%d,%d]],"format":"cstg-1","model":"explicit","n":4}'
            % (r1, r2)
        )
        with pytest.raises(ValidationError, match="share a vertex"):
            decode_drawing(doc)

    def test_bad_format_tag(self):
        with pytest.raises(ParseError):
            decode_drawing('{"format":"nope","model":"convex","n":4}')

    def test_malformed_json_reports_position(self):
        with pytest.raises(ParseError, match="line"):
            decode_drawing("{not json")

    def test_sign_vector_length(self):
        with pytest.raises(ValidationError):
            decode_drawing(
                '{"format":"cstg-1","model":"halfcircle","n":4,"params":{"signs":"UL"}}'
            )

    def test_collinear_points_rejected(self):
        with pytest.raises(ValidationError):
            decode_drawing(
                '{"format":"cstg-1","model":"points","n":3,'
                '"params":{"points":[[0,0],[1,1],[2,2]]}}'
            )

    def test_bad_rotation_rejected(self):
        with pytest.raises(ValidationError):
            decode_drawing(
                '{"format":"cstg-1","model":"convex","n":3,'
                '"rotations":[[1,2],[0,2],[0,0]]}'
            )

    def test_anchor_must_match_rotations(self):
        # ccw rotation (1,2,3) at v0: clockwise readings are the cyclic cuts
        # of (3,2,1); the ascending order (1,2,3) is none of them
        doc = (
            '{"anchor":{"order":[1,2,3],"v0":0},"crossings":[],'
            '"format":"cstg-1","model":"explicit","n":4,'
            '"rotations":[[1,2,3],[0,2,3],[0,1,3],[0,1,2]]}'
        )
        with pytest.raises(ValidationError, match="clockwise"):
            decode_drawing(doc)

    def test_anchor_cyclic_cut_accepted(self):
        doc = (
            '{"anchor":{"order":[1,3,2],"v0":0},"crossings":[],'
            '"format":"cstg-1","model":"explicit","n":4,'
            '"rotations":[[1,2,3],[0,2,3],[0,1,3],[0,1,2]]}'
        )
        d = decode_drawing(doc)
        assert d.anchor == (0, (1, 3, 2))

    def test_unknown_field_rejected(self):
        with pytest.raises(ParseError):
            decode_drawing('{"format":"cstg-1","model":"convex","n":4,"zzz":1}')

    def test_fields_for_the_wrong_model_rejected(self):
        with pytest.raises(ParseError, match="params"):
            decode_drawing('{"format":"cstg-1","model":"convex","n":4,"params":{}}')
        with pytest.raises(ParseError, match="crossings"):
            decode_drawing('{"crossings":[],"format":"cstg-1","model":"twisted","n":4}')

    def test_bad_certificate_kind(self):
        with pytest.raises(ValidationError):
            decode_certificate('{"kind":"zigzag","vertices":[0,1]}')
