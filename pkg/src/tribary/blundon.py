"""Angles subtended at the circumcenter and the inequalities they generate.

The general path builds everything from the kernel's squared distances: for
points P and Q it reports cos of the angle POQ together with the bound triple

    -2 sqrt(OP^2 OQ^2)  <=  OP^2 + OQ^2 - PQ^2  <=  2 sqrt(OP^2 OQ^2),

whose middle member is 2 OP OQ cos.  Equality on either side means O, P, Q
are collinear.  Specializing P and Q to named centers collapses the middle
member into closed forms in s, R, r and the exradii; those closed forms and
their slack terms live here too, each in a float flavor (taking derived
elements) and a squared-level flavor that is a rational function of the sides
and therefore exact for rational input.

Three widely circulated closed-form variants disagree with the verified
general path: one evaluates to exactly half the true cosine, one mixes
length^2 and length^4 terms in a radicand (negative for typical triangles,
and yielding values outside [-1, 1] for flat ones), and one three-point
expansion has a sign flipped on its c^2 group.  They are kept, suffixed
``_variant`` or ``_halved``, solely so verification reports can quantify the
disagreement; nothing else calls them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import kernel
from .errors import DegenerateVertexAngle, EquilateralDegenerate, UndefinedAngle
from .kernel import BaryPoint, TriangleElements, TriangleSides

# Relative threshold (against R^2) below which a leg OP is numerically zero
# and the angle at O carries no information.
EPS_ANGLE = 1e-12

# Threshold on 1 - |cos| for flagging the collinear equality cases.
EPS_COLLINEAR = 1e-9

# Relative threshold (against R^2) for treating two points as coincident.
EPS_DISTINCT = 1e-12

CLASS_GENERIC = "generic"
CLASS_COLLINEAR_SAME_SIDE = "collinear_same_side"
CLASS_COLLINEAR_OPPOSITE_SIDE = "collinear_opposite_side"
CLASS_UNDEFINED = "undefined"


class BoundTriple(NamedTuple):
    lower: float
    middle: float
    upper: float


@dataclass(frozen=True)
class AngleReport:
    """Cosine, squared legs, and inequality bounds for one angle at O.

    cos_value is None exactly when classification is "undefined".  In exact
    mode the squared fields and the middle bound stay rational; the cosine
    and the outer bounds always involve a square root and stay float.
    """

    cos_value: Optional[float]
    op_sq: object
    oq_sq: object
    pq_sq: object
    bounds: BoundTriple
    classification: str
    oracle_residual: Optional[float] = None


def _clamp(value: float) -> float:
    return max(-1.0, min(1.0, value))


def general_cos_parts(p: BaryPoint, q: BaryPoint, sides: TriangleSides):
    """Numerator and squared denominator of cos POQ, as rational expressions.

    Returns (numerator, radicand) with cos = numerator / sqrt(radicand); both
    stay exact for rational input.
    """
    r_sq = kernel.circumradius_sq(sides)
    op_sq = r_sq - kernel.circum_power(p, sides)
    oq_sq = r_sq - kernel.circum_power(q, sides)
    pq_sq = kernel.dist_sq_between(p, q, sides)
    return op_sq + oq_sq - pq_sq, 4 * op_sq * oq_sq


def cos_angle_at_circumcenter(p: BaryPoint, q: BaryPoint, sides: TriangleSides) -> AngleReport:
    """Full angle report for P and Q as seen from the circumcenter.

    A numerically vanishing leg is reported as classification "undefined"
    rather than raised, since degenerate requests are ordinary data here.
    """
    r_sq = kernel.circumradius_sq(sides)
    op_sq = r_sq - kernel.circum_power(p, sides)
    oq_sq = r_sq - kernel.circum_power(q, sides)
    pq_sq = kernel.dist_sq_between(p, q, sides)
    middle = op_sq + oq_sq - pq_sq
    product = op_sq * oq_sq
    upper = 2.0 * math.sqrt(max(float(product), 0.0))
    bounds = BoundTriple(-upper, middle, upper)
    if product <= (EPS_ANGLE * EPS_ANGLE) * r_sq * r_sq:
        return AngleReport(None, op_sq, oq_sq, pq_sq, bounds, CLASS_UNDEFINED)
    cos_value = _clamp(float(middle) / upper)
    if 1.0 - cos_value <= EPS_COLLINEAR:
        classification = CLASS_COLLINEAR_SAME_SIDE
    elif 1.0 + cos_value <= EPS_COLLINEAR:
        classification = CLASS_COLLINEAR_OPPOSITE_SIDE
    else:
        classification = CLASS_GENERIC
    return AngleReport(cos_value, op_sq, oq_sq, pq_sq, bounds, classification)


def blundon_bounds(p: BaryPoint, q: BaryPoint, sides: TriangleSides) -> BoundTriple:
    """The bound triple alone; always computable, even for vanishing legs."""
    return cos_angle_at_circumcenter(p, q, sides).bounds


# ---------------------------------------------------------------------------
# incenter / Nagel specialization and the fundamental inequality


def classical_cos_parts(sides: TriangleSides):
    """(numerator, radicand) of cos ION as rational functions of the sides."""
    r_sq = kernel.circumradius_sq(sides)
    rr = kernel.circum_inradius_product(sides)
    i_sq = kernel.inradius_sq(sides)
    s = kernel.semiperimeter(sides)
    numerator = 2 * r_sq + 10 * rr - i_sq - s * s
    # (2 (R - 2r) sqrt(R^2 - 2Rr))^2, with (R - 2r)^2 expanded rationally
    radicand = 4 * (r_sq - 4 * rr + 4 * i_sq) * (r_sq - 2 * rr)
    return numerator, radicand


def classical_cos_ION(elements: TriangleElements) -> float:
    """Closed form for cos of the incenter-circumcenter-Nagel angle."""
    if elements.is_equilateral:
        raise EquilateralDegenerate("incenter, Nagel point, and O coincide")
    numerator, radicand = classical_cos_parts(elements.sides)
    return _clamp(float(numerator) / math.sqrt(max(float(radicand), 0.0)))


def fundamental_residual(elements: TriangleElements) -> float:
    """Slack of the fundamental inequality; nonnegative for every triangle.

    Value is 2 (R - 2r) sqrt(R^2 - 2Rr) - |s^2 - 2R^2 - 10Rr + r^2|, which is
    exactly (1 - |cos ION|) times the positive denominator of the closed form.
    """
    s = elements.semiperimeter
    big_r, r = elements.circumradius, elements.inradius
    gap = big_r - 2.0 * r
    lhs = 2.0 * gap * math.sqrt(max(big_r * gap, 0.0))
    rhs = abs(s * s - 2.0 * big_r * big_r - 10.0 * big_r * r + r * r)
    return lhs - rhs


def fundamental_slack_sq(sides: TriangleSides):
    """Squared-level fundamental slack, rational in the sides.

    Equals radicand - numerator^2 of the closed form, so it is nonnegative
    exactly when |cos ION| <= 1; zero only in the equilateral limit.
    """
    numerator, radicand = classical_cos_parts(sides)
    return radicand - numerator * numerator


# ---------------------------------------------------------------------------
# excenter / adjoint specialization (the dual inequality family)


def _exradius_parts(vertex: str, sides: TriangleSides):
    """(R r_v, r_v^2) for the excircle opposite the vertex, kept rational."""
    s = kernel.semiperimeter(sides)
    side = {"A": sides.a, "B": sides.b, "C": sides.c}[vertex]
    abc = sides.a * sides.b * sides.c
    gap = s - side
    return abc / (4 * gap), kernel.area_sq(sides) / (gap * gap)


def dual_cos_parts(vertex: str, sides: TriangleSides):
    """(numerator, radicand) of cos at O between the excenter and adjoint
    points opposite the given vertex, rational in the sides."""
    r_sq = kernel.circumradius_sq(sides)
    rr_v, rv_sq = _exradius_parts(vertex, sides)
    quarter = kernel.power_sum(sides, 2) / 4
    numerator = r_sq - 3 * rr_v - rv_sq - quarter
    # ((R + 2 r_v) sqrt(R^2 + 2 R r_v))^2 without individual square roots
    radicand = (r_sq + 4 * rr_v + 4 * rv_sq) * (r_sq + 2 * rr_v)
    return numerator, radicand


def excenter_adjoint_cos(vertex: str, elements: TriangleElements) -> float:
    """Closed form for cos of the excenter-circumcenter-adjoint angle.

    Always defined: both legs exceed R, so no degenerate case exists.
    """
    numerator, radicand = dual_cos_parts(vertex, elements.sides)
    return _clamp(float(numerator) / math.sqrt(float(radicand)))


def dual_bound_residual(vertex: str, elements: TriangleElements) -> float:
    """Slack of the upper dual bound on (a^2 + b^2 + c^2) / 4; nonnegative."""
    sides = elements.sides
    big_r = elements.circumradius
    r_v = {
        "A": elements.exradius_a,
        "B": elements.exradius_b,
        "C": elements.exradius_c,
    }[vertex]
    quarter = float(kernel.power_sum(sides, 2)) / 4.0
    envelope = big_r * big_r - 3.0 * big_r * r_v - r_v * r_v
    reach = (big_r + 2.0 * r_v) * math.sqrt(big_r * big_r + 2.0 * big_r * r_v)
    return envelope + reach - quarter


def dual_slack_sq(vertex: str, sides: TriangleSides):
    """Squared-level dual slack (radicand - numerator^2), rational and >= 0."""
    numerator, radicand = dual_cos_parts(vertex, sides)
    return radicand - numerator * numerator


def exradii_identity_parts(sides: TriangleSides):
    """Both members of the exradii product identity used by the dual family.

    Returns (lhs, rhs) with lhs = -a^2/(r_b r_c) + b^2/(r r_b) + c^2/(r r_c)
    and rhs = 4 R / r_a + 4.  Both are rational in the sides, and the identity
    is algebraic, so exact input gives lhs == rhs exactly.
    """
    a, b, c = sides.as_tuple()
    s = kernel.semiperimeter(sides)
    area = kernel.area_sq(sides)
    ua, ub, uc = s - a, s - b, s - c
    lhs = (-(a * a) * ub * uc + (b * b) * s * ub + (c * c) * s * uc) / area
    rhs = (a * b * c) * ua / area + 4
    return lhs, rhs


def exradii_identity_residual(sides: TriangleSides):
    lhs, rhs = exradii_identity_parts(sides)
    return lhs - rhs


# ---------------------------------------------------------------------------
# rank-exponent points: cos at O between the points with weights (a^k : b^k : c^k)


def rank_point_circum_power(k, sides: TriangleSides):
    """circum_power of the rank-k point, via power sums: (abc)^k S_{2-k} / S_k^2."""
    s_k = kernel.power_sum(sides, k)
    abc = sides.a * sides.b * sides.c
    return kernel.pow_keep_exact(abc, k) * kernel.power_sum(sides, 2 - k) / (s_k * s_k)


def _rank_normalized(k, sides: TriangleSides):
    s_k = kernel.power_sum(sides, k)
    return (
        kernel.pow_keep_exact(sides.a, k) / s_k,
        kernel.pow_keep_exact(sides.b, k) / s_k,
        kernel.pow_keep_exact(sides.c, k) / s_k,
    )


def rank_pair_parts(k1, k2, sides: TriangleSides):
    """(numerator, radicand) of cos at O for the rank-k1 and rank-k2 points.

    Built from power sums rather than BaryPoint plumbing, so it serves as an
    independent specialization of the general path.  Exact for integer ranks
    with rational sides.
    """
    r_sq = kernel.circumradius_sq(sides)
    op_sq = r_sq - rank_point_circum_power(k1, sides)
    oq_sq = r_sq - rank_point_circum_power(k2, sides)
    p1, p2, p3 = _rank_normalized(k1, sides)
    q1, q2, q3 = _rank_normalized(k2, sides)
    alpha, beta, gamma = p1 - q1, p2 - q2, p3 - q3
    a_sq, b_sq, c_sq = kernel.side_squares(sides)
    pq_sq = -(beta * gamma * a_sq + gamma * alpha * b_sq + alpha * beta * c_sq)
    return op_sq + oq_sq - pq_sq, 4 * op_sq * oq_sq


def rank_pair_cos(k1, k2, sides: TriangleSides) -> float:
    """cos at O between the rank-k1 and rank-k2 points.

    Raises UndefinedAngle when either point sits at O (equilateral triangles
    put every rank point there).
    """
    numerator, radicand = rank_pair_parts(k1, k2, sides)
    r_sq = kernel.circumradius_sq(sides)
    if radicand <= 4 * (EPS_ANGLE * EPS_ANGLE) * r_sq * r_sq:
        raise UndefinedAngle(f"rank ({k1}, {k2}) legs vanish at the circumcenter")
    return _clamp(float(numerator) / math.sqrt(float(radicand)))


# ---------------------------------------------------------------------------
# closed forms for specific rank pairs


def centroid_incenter_cos_parts(sides: TriangleSides):
    """(numerator, radicand) of the rank (0, 1) closed form (centroid vs incenter)."""
    r_sq = kernel.circumradius_sq(sides)
    rr = kernel.circum_inradius_product(sides)
    i_sq = kernel.inradius_sq(sides)
    s = kernel.semiperimeter(sides)
    numerator = 6 * r_sq - s * s - i_sq + 2 * rr
    radicand = 4 * (9 * r_sq - 2 * s * s + 2 * i_sq + 8 * rr) * (r_sq - 2 * rr)
    return numerator, radicand


def centroid_incenter_cos(elements: TriangleElements) -> float:
    if elements.is_equilateral:
        raise EquilateralDegenerate("centroid and incenter coincide with O")
    numerator, radicand = centroid_incenter_cos_parts(elements.sides)
    return _clamp(float(numerator) / math.sqrt(max(float(radicand), 0.0)))


def incenter_lemoine_cos_parts(sides: TriangleSides):
    """(numerator, radicand) of the rank (1, 2) closed form, scaled by R.

    Multiplying numerator and denominator by R keeps both members rational:
    numerator R^2 S2 + R r S2 - 4 R r s^2, radicand R^2 (R^2 - 2Rr)
    (S2^2 - 48 r^2 s^2).
    """
    r_sq = kernel.circumradius_sq(sides)
    rr = kernel.circum_inradius_product(sides)
    i_sq = kernel.inradius_sq(sides)
    s = kernel.semiperimeter(sides)
    s2 = kernel.power_sum(sides, 2)
    numerator = r_sq * s2 + rr * s2 - 4 * rr * s * s
    radicand = r_sq * (r_sq - 2 * rr) * (s2 * s2 - 48 * i_sq * s * s)
    return numerator, radicand


def incenter_lemoine_cos(elements: TriangleElements) -> float:
    """Closed form for cos at O between the incenter and the Lemoine point."""
    if elements.is_equilateral:
        raise EquilateralDegenerate("incenter and Lemoine point coincide with O")
    numerator, radicand = incenter_lemoine_cos_parts(elements.sides)
    return _clamp(float(numerator) / math.sqrt(max(float(radicand), 0.0)))


def incenter_lemoine_cos_halved(elements: TriangleElements) -> float:
    """Diagnostic variant: same expression with an extra factor 2 in the
    denominator, yielding exactly half the true cosine.  Kept only so
    verification reports can show the factor-of-two disagreement."""
    return 0.5 * incenter_lemoine_cos(elements)


def centroid_lemoine_variant_parts(elements: TriangleElements):
    """Pieces of the diagnostic closed-form variant for centroid vs Lemoine.

    Returns (numerator, first radicand, second radicand).  The second
    radicand mixes length^2 and length^4 terms, so its sign depends on the
    overall scale: negative for typical perimeter-normalized triangles, and
    where it turns positive (flat triangles) the quotient leaves [-1, 1].
    The trusted value comes from rank_pair_cos(0, 2).
    """
    s = elements.semiperimeter
    big_r, r = elements.circumradius, elements.inradius
    s2 = float(kernel.power_sum(elements.sides, 2))
    s4 = float(kernel.power_sum(elements.sides, 4))
    numerator = 6.0 * big_r * big_r * s2 - s2 * s2 + 4.0 * s4
    rad_one = 9.0 * big_r * big_r - s2
    rad_two = big_r * big_r - s2 * s2 - 48.0 * (big_r * r * s) ** 2
    return numerator, rad_one, rad_two


def centroid_lemoine_cos_variant(elements: TriangleElements) -> Optional[float]:
    """Evaluate the diagnostic variant; None when its radicand is negative.

    The returned value is not clamped: when real it usually falls outside
    [-1, 1], which is part of what the diagnostic documents."""
    numerator, rad_one, rad_two = centroid_lemoine_variant_parts(elements)
    product = rad_one * rad_two
    if product <= 0.0:
        return None
    return numerator / (2.0 * math.sqrt(product))


# ---------------------------------------------------------------------------
# angles of the triangle formed by three points (vertex at the middle point)


def triple_cevian_cos(p1: BaryPoint, p2: BaryPoint, p3: BaryPoint, sides: TriangleSides) -> float:
    """cos of the angle at p2 in the triangle p1 p2 p3, from squared distances.

    Raises DegenerateVertexAngle when any two of the points (nearly)
    coincide, measured against R^2.
    """
    d12 = kernel.dist_sq_between(p1, p2, sides)
    d23 = kernel.dist_sq_between(p2, p3, sides)
    d31 = kernel.dist_sq_between(p3, p1, sides)
    r_sq = kernel.circumradius_sq(sides)
    if min(d12, d23, d31) <= EPS_DISTINCT * r_sq:
        raise DegenerateVertexAngle("two of the three points coincide")
    return _clamp(float(d12 + d23 - d31) / (2.0 * math.sqrt(float(d12) * float(d23))))


def triple_cevian_cos_variant(
    p1: BaryPoint, p2: BaryPoint, p3: BaryPoint, sides: TriangleSides
) -> float:
    """Diagnostic variant of triple_cevian_cos with the widely printed
    expansion of the numerator, whose c^2 group carries a flipped sign;
    it disagrees with the Law of Cosines composition whenever that group
    is nonzero.  Kept only for verification reports."""
    n1 = p1.normalized()
    n2 = p2.normalized()
    n3 = p3.normalized()
    al12, be12, ga12 = (n2[i] - n1[i] for i in range(3))
    al23, be23, ga23 = (n3[i] - n2[i] for i in range(3))
    al31, be31, ga31 = (n1[i] - n3[i] for i in range(3))
    a_sq, b_sq, c_sq = kernel.side_squares(sides)
    d12 = -(be12 * ga12 * a_sq + ga12 * al12 * b_sq + al12 * be12 * c_sq)
    d23 = -(be23 * ga23 * a_sq + ga23 * al23 * b_sq + al23 * be23 * c_sq)
    r_sq = kernel.circumradius_sq(sides)
    if min(d12, d23) <= EPS_DISTINCT * r_sq:
        raise DegenerateVertexAngle("two of the three points coincide")
    numerator = (
        -a_sq * (be12 * ga12 + be23 * ga23 - be31 * ga31)
        - b_sq * (ga12 * al12 + ga23 * al23 - ga31 * al31)
        + c_sq * (al12 * be12 + al23 * be23 - al31 * be31)
    )
    return float(numerator) / (2.0 * math.sqrt(float(d12) * float(d23)))
