"""Barycentric triangle geometry with an independent Cartesian oracle.

The package computes distances, circumcenter powers, and circumcenter
angles for points given in homogeneous barycentric coordinates, derives
the classical bound triples those angles satisfy, and verifies every
closed form against a Cartesian oracle through a seeded fuzz harness.

Typical use:

    >>> from tribary import TriangleSides, incenter, nagel_point
    >>> from tribary import cos_angle_at_circumcenter
    >>> sides = TriangleSides(3.0, 4.0, 5.0)
    >>> report = cos_angle_at_circumcenter(incenter(sides),
    ...                                    nagel_point(sides), sides)
    >>> round(report.cos_value, 10)
    0.4472135955

Exact mode works the same way with Fraction sides.  The command line
mirrors the library: `tribary cos --sides 3,4,5 --p incenter --q nagel`.
"""

from tribary.blundon import (
    AngleReport,
    BoundTriple,
    blundon_bounds,
    classical_cos_ION,
    cos_angle_at_circumcenter,
    dual_bound_residual,
    dual_slack_sq,
    excenter_adjoint_cos,
    exradii_identity_residual,
    fundamental_residual,
    fundamental_slack_sq,
    rank_pair_cos,
    triple_cevian_cos,
)
from tribary.centers import (
    CenterSpec,
    adjoint_nagel,
    centroid,
    cevian_rank,
    cevian_triangle,
    circumcenter_point,
    excenter,
    incenter,
    lemoine_point,
    nagel_point,
    parse_center_spec,
    resolve,
)
from tribary.errors import (
    CenterSpecError,
    DegenerateTriangle,
    DegenerateVertexAngle,
    EquilateralDegenerate,
    GeometryError,
    NonPositiveWeights,
    PointAtInfinity,
    UndefinedAngle,
)
from tribary.kernel import (
    BaryPoint,
    TriangleElements,
    TriangleSides,
    bergstrom_bound,
    circum_power,
    circumradius_sq,
    derive_elements,
    dist_sq_between,
)
from tribary.verify import FuzzConfig, VerificationReport, run_fuzz

__version__ = "0.1.0"

__all__ = [
    "AngleReport",
    "BaryPoint",
    "BoundTriple",
    "CenterSpec",
    "CenterSpecError",
    "DegenerateTriangle",
    "DegenerateVertexAngle",
    "EquilateralDegenerate",
    "FuzzConfig",
    "GeometryError",
    "NonPositiveWeights",
    "PointAtInfinity",
    "TriangleElements",
    "TriangleSides",
    "UndefinedAngle",
    "VerificationReport",
    "adjoint_nagel",
    "bergstrom_bound",
    "blundon_bounds",
    "centroid",
    "cevian_rank",
    "cevian_triangle",
    "circum_power",
    "circumcenter_point",
    "circumradius_sq",
    "classical_cos_ION",
    "cos_angle_at_circumcenter",
    "derive_elements",
    "dist_sq_between",
    "dual_bound_residual",
    "dual_slack_sq",
    "excenter",
    "excenter_adjoint_cos",
    "exradii_identity_residual",
    "fundamental_residual",
    "fundamental_slack_sq",
    "incenter",
    "lemoine_point",
    "nagel_point",
    "parse_center_spec",
    "rank_pair_cos",
    "resolve",
    "run_fuzz",
    "triple_cevian_cos",
    "__version__",
]
