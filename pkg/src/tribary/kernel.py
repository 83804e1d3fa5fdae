"""Side-length validation, derived triangle scalars, and barycentric metrics.

The squared-level quantities here (area squared, squared circumradius, squared
distances, the circumcircle power) are rational functions of the side lengths,
so every function that stays at the squared level is written once with plain
arithmetic and works unchanged for ``float`` and ``fractions.Fraction``
inputs.  Only :func:`derive_elements` takes square roots and therefore always
produces floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateTriangle, NonPositiveWeights, PointAtInfinity

Scalar = Union[float, "fractions.Fraction"]  # noqa: F821 - documentation alias

# A triangle is rejected when its smallest sideline gap is below this fraction
# of the perimeter; circumradius and closed forms blow up past that point.
EPS_TRIANGLE = 1e-12

# Relative width of the R - 2r gap below which a triangle counts as
# equilateral for closed forms that divide by that gap.
EPS_EQUILATERAL = 1e-12


@dataclass(frozen=True)
class TriangleSides:
    """Side lengths a = BC, b = CA, c = AB of a strict triangle."""

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) <= 0:
            raise DegenerateTriangle(f"non-positive side in ({a}, {b}, {c})")
        perimeter = a + b + c
        gap = min(a + b - c, b + c - a, c + a - b)
        if gap <= EPS_TRIANGLE * perimeter:
            raise DegenerateTriangle(f"triangle inequality fails for ({a}, {b}, {c})")

    def as_tuple(self):
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class BaryPoint:
    """Homogeneous weights t1 : t2 : t3 with nonzero sum."""

    t1: Scalar
    t2: Scalar
    t3: Scalar

    def __post_init__(self):
        if self.t1 + self.t2 + self.t3 == 0:
            raise PointAtInfinity(f"weights {self.as_tuple()!r} sum to zero")

    def as_tuple(self):
        return (self.t1, self.t2, self.t3)

    def normalized(self):
        """Coordinates divided by their sum; invariant under rescaling."""
        total = self.t1 + self.t2 + self.t3
        return (self.t1 / total, self.t2 / total, self.t3 / total)


@dataclass(frozen=True)
class TriangleElements:
    """Derived scalars of a triangle, in length units (always floats)."""

    sides: TriangleSides
    semiperimeter: float
    area: float
    circumradius: float
    inradius: float
    exradius_a: float
    exradius_b: float
    exradius_c: float

    @property
    def is_equilateral(self) -> bool:
        gap = self.circumradius - 2.0 * self.inradius
        return gap <= EPS_EQUILATERAL * self.circumradius


def semiperimeter(sides: TriangleSides):
    return (sides.a + sides.b + sides.c) / 2


def side_squares(sides: TriangleSides):
    return (sides.a * sides.a, sides.b * sides.b, sides.c * sides.c)


def area_sq(sides: TriangleSides):
    """Squared area by Heron's formula; rational in the sides."""
    s = semiperimeter(sides)
    return s * (s - sides.a) * (s - sides.b) * (s - sides.c)


def circumradius_sq(sides: TriangleSides):
    abc = sides.a * sides.b * sides.c
    return abc * abc / (16 * area_sq(sides))


def inradius_sq(sides: TriangleSides):
    s = semiperimeter(sides)
    return area_sq(sides) / (s * s)


def exradii_sq(sides: TriangleSides):
    """Squared exradii opposite A, B, C in that order."""
    s = semiperimeter(sides)
    sq = area_sq(sides)
    ua, ub, uc = s - sides.a, s - sides.b, s - sides.c
    return (sq / (ua * ua), sq / (ub * ub), sq / (uc * uc))


def circum_inradius_product(sides: TriangleSides):
    """The product R * r, which is rational: abc / (4s)."""
    return sides.a * sides.b * sides.c / (4 * semiperimeter(sides))


def pow_keep_exact(base, exponent):
    """base ** exponent, staying in exact arithmetic for integral exponents."""
    if isinstance(exponent, float) and exponent.is_integer():
        exponent = int(exponent)
    if isinstance(exponent, Fraction) and exponent.denominator == 1:
        exponent = int(exponent)
    if isinstance(exponent, int):
        return base**exponent
    return float(base) ** float(exponent)


def power_sum(sides: TriangleSides, exponent):
    """Sum of the side lengths each raised to the given exponent."""
    return (
        pow_keep_exact(sides.a, exponent)
        + pow_keep_exact(sides.b, exponent)
        + pow_keep_exact(sides.c, exponent)
    )


def derive_elements(sides: TriangleSides) -> TriangleElements:
    """Evaluate semiperimeter, area, circumradius, inradius, and exradii."""
    a, b, c = float(sides.a), float(sides.b), float(sides.c)
    s = (a + b + c) / 2.0
    area = math.sqrt(s * (s - a) * (s - b) * (s - c))
    return TriangleElements(
        sides=sides,
        semiperimeter=s,
        area=area,
        circumradius=a * b * c / (4.0 * area),
        inradius=area / s,
        exradius_a=area / (s - a),
        exradius_b=area / (s - b),
        exradius_c=area / (s - c),
    )


def circum_power(t: BaryPoint, sides: TriangleSides):
    """Power-like quantity R^2 - OP^2 for the point with weights t.

    Uses the cleared-denominator form, so zero weights (points on the
    sidelines) are fine.
    """
    n1, n2, n3 = t.normalized()
    a_sq, b_sq, c_sq = side_squares(sides)
    return n2 * n3 * a_sq + n3 * n1 * b_sq + n1 * n2 * c_sq


def dist_sq_between(p: BaryPoint, q: BaryPoint, sides: TriangleSides):
    """Squared distance between two finite barycentric points."""
    p1, p2, p3 = p.normalized()
    q1, q2, q3 = q.normalized()
    alpha, beta, gamma = p1 - q1, p2 - q2, p3 - q3
    a_sq, b_sq, c_sq = side_squares(sides)
    return -(beta * gamma * a_sq + gamma * alpha * b_sq + alpha * beta * c_sq)


def lagrange_point_dist_sq(t: BaryPoint, ma_sq, mb_sq, mc_sq, sides: TriangleSides):
    """Squared distance MP from a point M with known squared vertex distances.

    M is described only by its squared distances to the vertices A, B, C; P is
    the point weighted by t.  The combination below is the cleared-denominator
    form of the weighted-average identity, legal for zero weights.
    """
    n1, n2, n3 = t.normalized()
    a_sq, b_sq, c_sq = side_squares(sides)
    mixed = n2 * n3 * a_sq + n3 * n1 * b_sq + n1 * n2 * c_sq
    return n1 * ma_sq + n2 * mb_sq + n3 * mc_sq - mixed


def bergstrom_bound(t: BaryPoint, sides: TriangleSides):
    """Lower bound 4 s^2 n1 n2 n3 for circum_power at an interior point.

    The normalized weights must all be positive; equality holds exactly when
    the weights are proportional to the side lengths.
    """
    n1, n2, n3 = t.normalized()
    if n1 <= 0 or n2 <= 0 or n3 <= 0:
        raise NonPositiveWeights(f"weights {t.as_tuple()!r} are not all interior")
    s = semiperimeter(sides)
    return 4 * s * s * n1 * n2 * n3
