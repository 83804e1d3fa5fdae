"""Center catalog tests, with Cartesian cross-checks for the derived points.

Frozen oracle facts for the (3, 4, 5) triangle: the excenter opposite A sits
at (1, -2) and its distance to line BC equals the exradius 2; the incenter
cevian foot on BC splits it 5 : 4 from B.
"""

import random
from fractions import Fraction

import pytest

from tribary import centers, kernel, oracle
from tribary.centers import CenterSpec, parse_center_spec, resolve
from tribary.errors import CenterSpecError, PointAtInfinity
from tribary.kernel import BaryPoint, TriangleSides

RIGHT = TriangleSides(3.0, 4.0, 5.0)
PLACED = oracle.place_triangle(3.0, 4.0, 5.0)


def as_xy(point: BaryPoint, placement=PLACED):
    return oracle.barycentric_to_cartesian(point.as_tuple(), placement)


class TestNamedCenters:
    def test_incenter_weights(self):
        assert centers.incenter(RIGHT).as_tuple() == (3.0, 4.0, 5.0)

    def test_centroid_weights(self):
        assert centers.centroid(RIGHT).as_tuple() == (1.0, 1.0, 1.0)

    def test_nagel_weights(self):
        assert centers.nagel_point(RIGHT).as_tuple() == (3.0, 2.0, 1.0)

    def test_lemoine_weights(self):
        assert centers.lemoine_point(RIGHT).as_tuple() == (9.0, 16.0, 25.0)

    def test_circumcenter_maps_to_oracle_circumcenter(self):
        xy = as_xy(centers.circumcenter_point(RIGHT))
        assert xy == pytest.approx((1.5, 2.0), abs=1e-13)

    def test_excenter_a_cartesian(self):
        ex = centers.excenter("A", RIGHT)
        assert ex.as_tuple() == (-3.0, 4.0, 5.0)
        xy = as_xy(ex)
        assert xy == pytest.approx((1.0, -2.0), abs=1e-13)
        # distance to line BC (the x-axis) equals the exradius opposite A
        assert abs(xy[1]) == pytest.approx(2.0)

    def test_excenters_equidistant_from_sidelines(self):
        el = kernel.derive_elements(RIGHT)
        for vertex, expected in (("A", el.exradius_a), ("B", el.exradius_b), ("C", el.exradius_c)):
            xy = as_xy(centers.excenter(vertex, RIGHT))
            # |y| is the distance to sideline BC, which the placement puts on the x-axis
            assert abs(xy[1]) == pytest.approx(expected, rel=1e-12)

    def test_adjoint_nagel_weights_and_sums(self):
        s = 6.0
        adj_a = centers.adjoint_nagel("A", RIGHT)
        adj_b = centers.adjoint_nagel("B", RIGHT)
        adj_c = centers.adjoint_nagel("C", RIGHT)
        assert adj_a.as_tuple() == (6.0, -1.0, -2.0)
        assert adj_b.as_tuple() == (-1.0, 6.0, -3.0)
        assert adj_c.as_tuple() == (-2.0, -3.0, 6.0)
        assert sum(adj_a.as_tuple()) == pytest.approx(s - 3.0)
        assert sum(adj_b.as_tuple()) == pytest.approx(s - 4.0)
        assert sum(adj_c.as_tuple()) == pytest.approx(s - 5.0)

    def test_excenter_to_adjoint_distance(self):
        ex = centers.excenter("A", RIGHT)
        adj = centers.adjoint_nagel("A", RIGHT)
        assert kernel.dist_sq_between(ex, adj, RIGHT) == pytest.approx(109.0)
        expected = oracle.dist_sq(as_xy(ex), as_xy(adj))
        assert kernel.dist_sq_between(ex, adj, RIGHT) == pytest.approx(expected, rel=1e-12)


class TestCevianRank:
    def test_rank_zero_is_centroid(self):
        assert centers.cevian_rank(0, 0, 0, RIGHT).as_tuple() == (1.0, 1.0, 1.0)

    def test_rank_one_is_incenter(self):
        assert centers.cevian_rank(1, 0, 0, RIGHT).as_tuple() == (3.0, 4.0, 5.0)

    def test_rank_two_is_lemoine(self):
        assert centers.cevian_rank(2, 0, 0, RIGHT).as_tuple() == (9.0, 16.0, 25.0)

    def test_middle_exponent_gives_nagel(self):
        assert centers.cevian_rank(0, 1, 0, RIGHT).as_tuple() == (3.0, 2.0, 1.0)

    def test_fractional_exponents(self):
        point = centers.cevian_rank(0.5, 0.0, -1.5, RIGHT)
        a, b, c = 3.0, 4.0, 5.0
        assert point.t1 == pytest.approx(a**0.5 * (b + c) ** -1.5)
        assert point.t2 == pytest.approx(b**0.5 * (a + c) ** -1.5)
        assert point.t3 == pytest.approx(c**0.5 * (a + b) ** -1.5)

    def test_integer_exponents_stay_rational(self):
        sides = TriangleSides(Fraction(3), Fraction(4), Fraction(5))
        point = centers.cevian_rank(1.0, 2.0, -1.0, sides)
        assert isinstance(point.t1, Fraction)
        assert point.t1 == Fraction(3) * Fraction(9) / Fraction(9)

    def test_rational_centroid_normalizes_exactly(self):
        sides = TriangleSides(Fraction(3), Fraction(4), Fraction(5))
        assert centers.centroid(sides).normalized() == (
            Fraction(1, 3),
            Fraction(1, 3),
            Fraction(1, 3),
        )


class TestCevianTriangle:
    def test_centroid_gives_medial_triangle(self):
        d, e, f = centers.cevian_triangle(BaryPoint(1.0, 1.0, 1.0))
        assert d.as_tuple() == (0.0, 1.0, 1.0)
        assert e.as_tuple() == (1.0, 0.0, 1.0)
        assert f.as_tuple() == (1.0, 1.0, 0.0)
        mid_bc = oracle.barycentric_to_cartesian((0.0, 1.0, 1.0), PLACED)
        assert mid_bc == pytest.approx((1.5, 0.0), abs=1e-14)

    def test_incenter_foot_splits_base_by_bisector_ratio(self):
        d, _, _ = centers.cevian_triangle(centers.incenter(RIGHT))
        d_xy = as_xy(d)
        bd = oracle.dist_sq(d_xy, PLACED.b_xy) ** 0.5
        dc = oracle.dist_sq(d_xy, PLACED.c_xy) ** 0.5
        assert bd / dc == pytest.approx(5.0 / 4.0, rel=1e-12)

    def test_foot_at_infinity_raises(self):
        with pytest.raises(PointAtInfinity):
            centers.cevian_triangle(BaryPoint(1.0, -1.0, 2.0))

    def test_feet_lie_on_their_sidelines(self):
        rng = random.Random(2024)
        for _ in range(50):
            weights = tuple(rng.uniform(0.1, 2.0) for _ in range(3))
            d, e, f = centers.cevian_triangle(BaryPoint(*weights))
            assert d.t1 == 0.0 and e.t2 == 0.0 and f.t3 == 0.0


class TestParsing:
    def test_simple_kinds(self):
        assert parse_center_spec("incenter") == CenterSpec("incenter")
        assert parse_center_spec("  Centroid ") == CenterSpec("centroid")
        assert parse_center_spec("NAGEL") == CenterSpec("nagel")
        assert parse_center_spec("lemoine") == CenterSpec("lemoine")

    def test_vertex_kinds(self):
        assert parse_center_spec("excenter:B") == CenterSpec("excenter", vertex="B")
        assert parse_center_spec("ADJNAGEL:c") == CenterSpec("adjnagel", vertex="C")

    def test_parametric_kinds(self):
        spec = parse_center_spec("cevian: 1 , 0.5 , -2")
        assert spec == CenterSpec("cevian", params=(1.0, 0.5, -2.0))
        spec = parse_center_spec("raw:0.3,-1,2")
        assert spec == CenterSpec("raw", params=(0.3, -1.0, 2.0))

    def test_exact_mode_reads_rationals(self):
        spec = parse_center_spec("raw:1/3,2/3,1", exact=True)
        assert spec.params == (Fraction(1, 3), Fraction(2, 3), Fraction(1))
        spec = parse_center_spec("cevian:1.5,0,1", exact=True)
        assert spec.params == (Fraction(3, 2), Fraction(0), Fraction(1))

    @pytest.mark.parametrize(
        "text",
        [
            "orthocenter",
            "incenter:A",
            "excenter",
            "excenter:D",
            "cevian:1,2",
            "raw:1,nan,3",
            "raw:1,inf,3",
            "cevian:x,y,z",
            "raw:1;2;3",
        ],
    )
    def test_malformed_specs_rejected(self, text):
        with pytest.raises(CenterSpecError):
            parse_center_spec(text)

    def test_spec_validation_on_construction(self):
        with pytest.raises(CenterSpecError):
            CenterSpec("excenter")
        with pytest.raises(CenterSpecError):
            CenterSpec("incenter", vertex="A")
        with pytest.raises(CenterSpecError):
            CenterSpec("cevian", params=(1.0, 2.0))
        with pytest.raises(CenterSpecError):
            CenterSpec("orthocenter")


class TestResolve:
    def test_named_round_trips(self):
        for text, expected in [
            ("incenter", (3.0, 4.0, 5.0)),
            ("centroid", (1.0, 1.0, 1.0)),
            ("nagel", (3.0, 2.0, 1.0)),
            ("lemoine", (9.0, 16.0, 25.0)),
            ("excenter:A", (-3.0, 4.0, 5.0)),
            ("adjnagel:A", (6.0, -1.0, -2.0)),
            ("cevian:1,0,0", (3.0, 4.0, 5.0)),
            ("raw:1,2,3", (1.0, 2.0, 3.0)),
        ]:
            point = resolve(parse_center_spec(text), RIGHT)
            assert point.as_tuple() == pytest.approx(expected)

    def test_raw_at_infinity_raises(self):
        with pytest.raises(PointAtInfinity):
            resolve(parse_center_spec("raw:1,-1,0"), RIGHT)

    def test_exact_resolution(self):
        sides = TriangleSides(Fraction(3), Fraction(4), Fraction(5))
        point = resolve(parse_center_spec("cevian:2,0,0", exact=True), sides)
        assert point.as_tuple() == (Fraction(9), Fraction(16), Fraction(25))
