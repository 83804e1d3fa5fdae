"""Catalog of triangle centers and related point generators.

Every generator returns homogeneous :class:`~tribary.kernel.BaryPoint`
weights.  Like the kernel, the generators are duck-typed: rational side
lengths stay rational as long as the requested exponents are integers.
:func:`parse_center_spec` turns the CLI's textual descriptors into
:class:`CenterSpec` records, and :func:`resolve` evaluates those records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import CenterSpecError
from .kernel import BaryPoint, TriangleSides, pow_keep_exact, semiperimeter

VERTICES = ("A", "B", "C")

# kind -> requires vertex, number of numeric parameters
_KIND_SHAPES = {
    "incenter": (False, 0),
    "centroid": (False, 0),
    "nagel": (False, 0),
    "lemoine": (False, 0),
    "excenter": (True, 0),
    "adjnagel": (True, 0),
    "cevian": (False, 3),
    "raw": (False, 3),
}


@dataclass(frozen=True)
class CenterSpec:
    """Tagged descriptor of a point: a named center, a rank triple, or raw weights."""

    kind: str
    vertex: Optional[str] = None
    params: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in _KIND_SHAPES:
            raise CenterSpecError(f"unknown point kind {self.kind!r}")
        needs_vertex, n_params = _KIND_SHAPES[self.kind]
        if needs_vertex:
            if self.vertex not in VERTICES:
                raise CenterSpecError(f"{self.kind} needs a vertex A, B, or C")
        elif self.vertex is not None:
            raise CenterSpecError(f"{self.kind} does not take a vertex")
        if len(self.params) != n_params:
            raise CenterSpecError(f"{self.kind} takes {n_params} numbers, got {len(self.params)}")


def incenter(sides: TriangleSides) -> BaryPoint:
    return BaryPoint(sides.a, sides.b, sides.c)


def centroid(sides: TriangleSides) -> BaryPoint:
    one = sides.a / sides.a  # unit in the arithmetic of the sides
    return BaryPoint(one, one, one)


def nagel_point(sides: TriangleSides) -> BaryPoint:
    s = semiperimeter(sides)
    return BaryPoint(s - sides.a, s - sides.b, s - sides.c)


def lemoine_point(sides: TriangleSides) -> BaryPoint:
    a, b, c = sides.as_tuple()
    return BaryPoint(a * a, b * b, c * c)


def circumcenter_point(sides: TriangleSides) -> BaryPoint:
    """Circumcenter weights a^2 (b^2 + c^2 - a^2) : ... (not a CLI kind)."""
    a_sq, b_sq, c_sq = sides.a * sides.a, sides.b * sides.b, sides.c * sides.c
    return BaryPoint(
        a_sq * (b_sq + c_sq - a_sq),
        b_sq * (c_sq + a_sq - b_sq),
        c_sq * (a_sq + b_sq - c_sq),
    )


def excenter(vertex: str, sides: TriangleSides) -> BaryPoint:
    a, b, c = sides.as_tuple()
    if vertex == "A":
        return BaryPoint(-a, b, c)
    if vertex == "B":
        return BaryPoint(a, -b, c)
    if vertex == "C":
        return BaryPoint(a, b, -c)
    raise CenterSpecError(f"vertex must be A, B, or C, got {vertex!r}")


def adjoint_nagel(vertex: str, sides: TriangleSides) -> BaryPoint:
    """Reflection-style companions of the Nagel point, one per vertex.

    The A-point has weights (s, c - s, b - s); B and C are the cyclic
    relabelings.  Each weight sum collapses to s minus the named side.
    """
    a, b, c = sides.as_tuple()
    s = semiperimeter(sides)
    if vertex == "A":
        return BaryPoint(s, c - s, b - s)
    if vertex == "B":
        return BaryPoint(c - s, s, a - s)
    if vertex == "C":
        return BaryPoint(b - s, a - s, s)
    raise CenterSpecError(f"vertex must be A, B, or C, got {vertex!r}")


def cevian_rank(k, l, m, sides: TriangleSides) -> BaryPoint:
    """Weights a^k (s-a)^l (b+c)^m : b^k (s-b)^l (a+c)^m : c^k (s-c)^l (a+b)^m.

    Rank (0,0,0) is the centroid, (1,0,0) the incenter, (2,0,0) the Lemoine
    point, and (0,1,0) the Nagel point.
    """
    a, b, c = sides.as_tuple()
    s = semiperimeter(sides)
    return BaryPoint(
        pow_keep_exact(a, k) * pow_keep_exact(s - a, l) * pow_keep_exact(b + c, m),
        pow_keep_exact(b, k) * pow_keep_exact(s - b, l) * pow_keep_exact(a + c, m),
        pow_keep_exact(c, k) * pow_keep_exact(s - c, l) * pow_keep_exact(a + b, m),
    )


def cevian_triangle(p: BaryPoint) -> tuple[BaryPoint, BaryPoint, BaryPoint]:
    """Feet of the three cevians through p, on sides BC, CA, AB in that order.

    Raises PointAtInfinity when a foot's weights sum to zero (the cevian is
    parallel to that side).
    """
    t1, t2, t3 = p.as_tuple()
    zero = t1 - t1  # zero in the arithmetic of the weights
    return (
        BaryPoint(zero, t2, t3),
        BaryPoint(t1, zero, t3),
        BaryPoint(t1, t2, zero),
    )


def parse_center_spec(text: str, exact: bool = False) -> CenterSpec:
    """Parse descriptors like ``incenter``, ``excenter:B``, ``cevian:1,0,2``,
    or ``raw:0.3,-1,2``.  Case-insensitive; numbers may be decimals, and in
    exact mode they are read as rationals (``1.5`` and ``3/2`` both work).
    """
    head, _, tail = text.strip().partition(":")
    kind = head.strip().lower()
    if kind not in _KIND_SHAPES:
        raise CenterSpecError(f"unknown point kind {head.strip()!r}")
    needs_vertex, n_params = _KIND_SHAPES[kind]
    tail = tail.strip()
    if needs_vertex:
        vertex = tail.upper()
        if vertex not in VERTICES:
            raise CenterSpecError(f"{kind} needs a vertex A, B, or C, got {tail!r}")
        return CenterSpec(kind, vertex=vertex)
    if n_params == 0:
        if tail:
            raise CenterSpecError(f"{kind} takes no parameters, got {tail!r}")
        return CenterSpec(kind)
    pieces = [piece.strip() for piece in tail.split(",")] if tail else []
    if len(pieces) != n_params:
        raise CenterSpecError(f"{kind} takes {n_params} comma-separated numbers, got {tail!r}")
    return CenterSpec(kind, params=tuple(_parse_number(piece, exact) for piece in pieces))


def _parse_number(text: str, exact: bool):
    try:
        value = Fraction(text) if exact else float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CenterSpecError(f"bad number {text!r}") from exc
    if isinstance(value, float) and not math.isfinite(value):
        raise CenterSpecError(f"non-finite number {text!r}")
    return value


def resolve(spec: CenterSpec, sides: TriangleSides) -> BaryPoint:
    """Evaluate a CenterSpec against concrete side lengths."""
    if spec.kind == "incenter":
        return incenter(sides)
    if spec.kind == "centroid":
        return centroid(sides)
    if spec.kind == "nagel":
        return nagel_point(sides)
    if spec.kind == "lemoine":
        return lemoine_point(sides)
    if spec.kind == "excenter":
        return excenter(spec.vertex, sides)
    if spec.kind == "adjnagel":
        return adjoint_nagel(spec.vertex, sides)
    if spec.kind == "cevian":
        return cevian_rank(*spec.params, sides)
    if spec.kind == "raw":
        return BaryPoint(*spec.params)
    raise CenterSpecError(f"unknown point kind {spec.kind!r}")
