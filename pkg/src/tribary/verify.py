"""Seeded fuzz verification of the barycentric engine against the oracle.

run_fuzz draws stratified triangles as exact rationals, mirrors them to
floats, and pushes every enabled consistency check through both the
symmetric-function formulas and the Cartesian oracle.  Residuals accumulate
into a report whose JSON form is byte-identical across repeated runs with
the same configuration: per-sample RNG streams are keyed by seed, stratum
name, and index, and nothing time- or environment-dependent is recorded.

Checks with tolerance 0.0 are exact rational identities evaluated on a
strided subset of samples.  Checks flagged advisory never fail the run;
they document known closed-form variants that disagree with the trusted
computation path.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import oracle
from .blundon import (
    CLASS_UNDEFINED,
    centroid_incenter_cos,
    centroid_incenter_cos_parts,
    centroid_lemoine_cos_variant,
    classical_cos_ION,
    classical_cos_parts,
    cos_angle_at_circumcenter,
    dual_bound_residual,
    dual_cos_parts,
    dual_slack_sq,
    excenter_adjoint_cos,
    exradii_identity_parts,
    fundamental_residual,
    fundamental_slack_sq,
    general_cos_parts,
    incenter_lemoine_cos,
    incenter_lemoine_cos_halved,
    incenter_lemoine_cos_parts,
    rank_pair_cos,
    rank_pair_parts,
    triple_cevian_cos,
    triple_cevian_cos_variant,
)
from .centers import (
    VERTICES,
    adjoint_nagel,
    centroid,
    cevian_rank,
    cevian_triangle,
    excenter,
    incenter,
    lemoine_point,
    nagel_point,
)
from .errors import DegenerateVertexAngle, UndefinedAngle
from .kernel import (
    BaryPoint,
    TriangleSides,
    bergstrom_bound,
    circum_power,
    circumradius_sq,
    derive_elements,
    dist_sq_between,
    lagrange_point_dist_sq,
    power_sum,
    side_squares,
)
from .serialize import dumps

VALID_STRATA = (
    "uniform",
    "near_degenerate",
    "near_equilateral",
    "isosceles",
    "integer_sides",
)
VALID_SUITES = ("kernel", "classical", "dual", "cevian")

# Squared legs below this fraction of R^2 are excluded from float-vs-oracle
# cosine comparisons; both paths lose relative accuracy as a leg vanishes.
COMPARISON_GUARD = 1e-5

_DENOM = 10 ** 6
_SCALE_LAMBDAS = (2.0, -1.0, 1e-6)


class CorpusFormatError(ValueError):
    """Raised when a corpus CSV does not match the required a,b,c layout."""


@dataclass(frozen=True)
class FuzzConfig:
    """Settings for one deterministic fuzz run.

    corpus rows, when present, form one extra stratum evaluated after the
    built-in ones; each row is a triple of decimal strings so the exact
    mirror sees the same values the float path does.
    """

    count: int = 1000
    seed: int = 7
    strata: tuple = VALID_STRATA
    suites: tuple = ("all",)
    tolerance_scale: float = 1.0
    exact_stride: int = 16
    corpus: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        object.__setattr__(self, "suites", tuple(self.suites))
        object.__setattr__(self, "corpus", tuple(tuple(row) for row in self.corpus))
        if self.count <= 0:
            raise ValueError(f"count must be positive, got {self.count}")
        if not self.strata:
            raise ValueError("at least one stratum is required")
        for name in self.strata:
            if name not in VALID_STRATA:
                raise ValueError(f"unknown stratum {name!r}")
        if len(set(self.strata)) != len(self.strata):
            raise ValueError("duplicate stratum")
        if not self.suites:
            raise ValueError("at least one suite is required")
        for name in self.suites:
            if name != "all" and name not in VALID_SUITES:
                raise ValueError(f"unknown suite {name!r}")
        if not self.tolerance_scale > 0:
            raise ValueError("tolerance_scale must be positive")
        if self.exact_stride <= 0:
            raise ValueError("exact_stride must be positive")
        for row in self.corpus:
            if len(row) != 3:
                raise ValueError(f"corpus row {row!r} must have three sides")

    def enabled_suites(self) -> tuple:
        if "all" in self.suites:
            return VALID_SUITES
        return tuple(name for name in VALID_SUITES if name in self.suites)


def load_corpus(path) -> tuple:
    """Read a,b,c side triples from a CSV file with a mandatory header.

    Returns the raw cell strings so exact mode can interpret them without a
    float round trip.  Layout problems raise CorpusFormatError; geometric
    problems (non-positive or degenerate sides) surface later when the
    triple is turned into TriangleSides.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        rows = [row for row in csv.reader(handle) if any(cell.strip() for cell in row)]
    if not rows:
        raise CorpusFormatError(f"{path}: empty corpus")
    header = [cell.strip().lower() for cell in rows[0]]
    if header != ["a", "b", "c"]:
        raise CorpusFormatError(f"{path}: header row must be a,b,c")
    triples = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 3:
            raise CorpusFormatError(f"{path}:{lineno}: expected 3 columns, got {len(row)}")
        cells = tuple(cell.strip() for cell in row)
        for cell in cells:
            try:
                value = float(cell)
            except ValueError as exc:
                raise CorpusFormatError(f"{path}:{lineno}: not a number: {cell!r}") from exc
            if not math.isfinite(value):
                raise CorpusFormatError(f"{path}:{lineno}: non-finite side {cell!r}")
        triples.append(cells)
    if not triples:
        raise CorpusFormatError(f"{path}: no data rows")
    return tuple(triples)


# ---------------------------------------------------------------------------
# stratified exact-rational side sampling


def _exact_decade(rng: random.Random) -> Fraction:
    """An exact rational close to 10**u for u uniform on [-8, -3]."""
    u = rng.uniform(-8.0, -3.0)
    exponent = math.floor(u)
    mantissa = 10.0 ** (u - exponent)
    return Fraction(round(mantissa * _DENOM), _DENOM) * Fraction(10) ** exponent


def _uniform_sides(rng: random.Random) -> TriangleSides:
    while True:
        trip = sorted(Fraction(rng.randint(50_000, _DENOM), _DENOM) for _ in range(3))
        x, y, z = trip
        total = x + y + z
        if x + y - z > total * Fraction(1, 10 ** 10):
            return TriangleSides(*(2 * v / total for v in trip))


def _near_degenerate_sides(rng: random.Random) -> TriangleSides:
    gap = _exact_decade(rng)
    w = Fraction(rng.randint(350_000, 650_000), _DENOM)
    long_side = 1 - gap / 2
    return TriangleSides((long_side + gap) * w, (long_side + gap) * (1 - w), long_side)


def _near_equilateral_sides(rng: random.Random) -> TriangleSides:
    diff = _exact_decade(rng)
    w = Fraction(rng.randint(0, _DENOM), _DENOM)
    raw = (Fraction(1), 1 + diff * w, 1 + diff)
    total = raw[0] + raw[1] + raw[2]
    return TriangleSides(*(2 * v / total for v in raw))


def _isosceles_sides(rng: random.Random) -> TriangleSides:
    while True:
        leg = Fraction(rng.randint(50_000, _DENOM), _DENOM)
        base = Fraction(rng.randint(50_000, _DENOM), _DENOM)
        if base < 2 * leg * Fraction(999_999, 1_000_000):
            break
    arrangements = ((leg, leg, base), (leg, base, leg), (base, leg, leg))
    trip = arrangements[rng.randrange(3)]
    total = trip[0] + trip[1] + trip[2]
    return TriangleSides(*(2 * v / total for v in trip))


def _integer_sides(rng: random.Random) -> TriangleSides:
    while True:
        trip = sorted(rng.randint(1, 60) for _ in range(3))
        x, y, z = trip
        if x + y > z:
            return TriangleSides(Fraction(x), Fraction(y), Fraction(z))


def _sample_exact_sides(stratum: str, index: int, rng: random.Random, config: FuzzConfig) -> TriangleSides:
    if stratum == "corpus":
        sa, sb, sc = config.corpus[index]
        return TriangleSides(Fraction(sa), Fraction(sb), Fraction(sc))
    if stratum == "uniform":
        return _uniform_sides(rng)
    if stratum == "near_degenerate":
        return _near_degenerate_sides(rng)
    if stratum == "near_equilateral":
        return _near_equilateral_sides(rng)
    if stratum == "isosceles":
        return _isosceles_sides(rng)
    if stratum == "integer_sides":
        return _integer_sides(rng)
    raise ValueError(f"unknown stratum {stratum!r}")


def _sample_point(rng: random.Random) -> BaryPoint:
    """A homogeneous point with coordinates uniform on [-2, 2].

    One in ten points gets a coordinate forced to exactly zero so the
    cleared-denominator paths are exercised; tiny coordinate sums are
    rejected to keep the point finite.
    """
    while True:
        coords = [rng.uniform(-2.0, 2.0) for _ in range(3)]
        if rng.random() < 0.10:
            coords[rng.randrange(3)] = 0.0
        if abs(coords[0] + coords[1] + coords[2]) >= 1e-6:
            return BaryPoint(*coords)


class _Sample:
    """One sampled triangle plus all random material its checks consume.

    Every random draw happens here, in a fixed order, so the per-sample
    results do not depend on which suites are enabled.
    """

    def __init__(self, stratum: str, index: int, config: FuzzConfig):
        self.stratum = stratum
        self.index = index
        rng = random.Random(f"{config.seed}:{stratum}:{index}")
        self.exact_sides = _sample_exact_sides(stratum, index, rng, config)
        self.sides = TriangleSides(*(float(v) for v in self.exact_sides.as_tuple()))
        self.elements = derive_elements(self.sides)
        self.r_sq = circumradius_sq(self.sides)
        self.placement = oracle.place_triangle(*self.sides.as_tuple())
        self.o_xy = oracle.circumcenter_xy(self.placement)
        self.oracle_r_sq = oracle.circumradius_sq(self.placement)
        # Tolerance grows with the conditioning of the triangle itself: a
        # thin sample is thin no matter which stratum produced it.
        condition = self.elements.circumradius / self.elements.inradius
        self.tol_scale = config.tolerance_scale * max(1.0, condition)
        self.exact_now = index % config.exact_stride == 0
        self.p_pt = _sample_point(rng)
        self.q_pt = _sample_point(rng)
        self.extra_pt = _sample_point(rng)
        self.pos_pt = BaryPoint(*(rng.uniform(0.05, 2.0) for _ in range(3)))
        self.lam = _SCALE_LAMBDAS[index % 3]
        self.rank_pair = (rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        self.rank_ints = tuple(rng.randint(-3, 3) for _ in range(3))
        self.p_xy = oracle.barycentric_to_cartesian(self.p_pt.as_tuple(), self.placement)
        self.q_xy = oracle.barycentric_to_cartesian(self.q_pt.as_tuple(), self.placement)
        self.extra_xy = oracle.barycentric_to_cartesian(self.extra_pt.as_tuple(), self.placement)
        self.pos_xy = oracle.barycentric_to_cartesian(self.pos_pt.as_tuple(), self.placement)

    def sides_floats(self) -> tuple:
        return self.sides.as_tuple()


# ---------------------------------------------------------------------------
# residual accumulation


@dataclass
class CheckAccumulator:
    """Worst residuals seen by one named check across all samples."""

    name: str
    suite: str
    tolerance: float
    advisory: bool = False
    note: Optional[str] = None
    samples: int = 0
    skipped: int = 0
    failures: int = 0
    max_abs_residual: float = 0.0
    max_rel_residual: float = 0.0
    worst_stratum: Optional[str] = None
    worst_sides: Optional[tuple] = None
    worst_p: Optional[tuple] = None
    worst_q: Optional[tuple] = None
    counters: dict = field(default_factory=dict)
    _worst_key: float = field(default=-1.0, repr=False)

    def record(self, ctx: _Sample, abs_residual: float, rel_residual: float,
               p: Optional[BaryPoint] = None, q: Optional[BaryPoint] = None) -> None:
        self.samples += 1
        if not self.advisory and rel_residual > self.tolerance * ctx.tol_scale:
            self.failures += 1
        abs_residual = abs(abs_residual)
        if abs_residual > self.max_abs_residual:
            self.max_abs_residual = abs_residual
        if rel_residual > self.max_rel_residual:
            self.max_rel_residual = rel_residual
        # The reported worst case is the sample closest to failing, i.e. the
        # largest residual relative to its own effective tolerance.
        if self.advisory:
            key = rel_residual
        else:
            key = rel_residual / max(self.tolerance * ctx.tol_scale, 1e-300)
        if key > self._worst_key:
            self._worst_key = key
            self.worst_stratum = ctx.stratum
            self.worst_sides = ctx.sides_floats()
            self.worst_p = p.as_tuple() if p is not None else None
            self.worst_q = q.as_tuple() if q is not None else None

    def skip(self) -> None:
        self.skipped += 1

    @property
    def passed(self) -> bool:
        return self.advisory or self.failures == 0

    def to_data(self) -> dict:
        worst = None
        if self.worst_sides is not None:
            worst = {
                "stratum": self.worst_stratum,
                "sides": [float(v) for v in self.worst_sides],
                "p": [float(v) for v in self.worst_p] if self.worst_p else None,
                "q": [float(v) for v in self.worst_q] if self.worst_q else None,
            }
        data = {
            "name": self.name,
            "suite": self.suite,
            "tolerance": self.tolerance,
            "samples": self.samples,
            "skipped": self.skipped,
            "failures": self.failures,
            "max_abs_residual": self.max_abs_residual,
            "max_rel_residual": self.max_rel_residual,
            "worst_case": worst,
            "pass": self.passed,
        }
        if self.advisory:
            data["advisory"] = True
        if self.note is not None:
            data["note"] = self.note
        if self.counters:
            data["counters"] = dict(self.counters)
        return data


@dataclass
class VerificationReport:
    """Outcome of one run_fuzz call; serializes deterministically."""

    config: FuzzConfig
    checks: list
    contexts: int

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_names(self) -> tuple:
        return tuple(check.name for check in self.checks if not check.passed)

    def to_data(self) -> dict:
        return {
            "config": {
                "count": self.config.count,
                "seed": self.config.seed,
                "strata": list(self.config.strata),
                "suites": list(self.config.enabled_suites()),
                "tolerance_scale": self.config.tolerance_scale,
                "exact_stride": self.config.exact_stride,
                "corpus_rows": len(self.config.corpus),
            },
            "checks": [check.to_data() for check in self.checks],
            "summary": {
                "contexts": self.contexts,
                "checks": len(self.checks),
                "failed_checks": sum(0 if check.passed else 1 for check in self.checks),
                "pass": self.passed,
            },
        }

    def to_json(self) -> str:
        return dumps(self.to_data()) + "\n"


# ---------------------------------------------------------------------------
# the checks themselves

_CHECK_TABLE = (
    ("kernel_dist_sq_vs_oracle", "kernel", 1e-9),
    ("kernel_circum_power_vs_oracle", "kernel", 1e-9),
    ("kernel_cos_vs_oracle", "kernel", 1e-9),
    ("kernel_point_nonnegativity", "kernel", 1e-12),
    ("kernel_lagrange_vs_circum_power", "kernel", 1e-9),
    ("kernel_lagrange_vertex_reference", "kernel", 1e-9),
    ("kernel_bergstrom_slack_nonneg", "kernel", 1e-12),
    ("kernel_bergstrom_equality_at_tangency", "kernel", 1e-10),
    ("kernel_scale_invariance", "kernel", 1e-12),
    ("kernel_exact_scale_invariance", "kernel", 0.0),
    ("kernel_euler_chain_powers", "kernel", 1e-10),
    ("kernel_side_product_identities", "kernel", 1e-11),
    ("kernel_relabel_invariance", "kernel", 1e-9),
    ("kernel_foot_ratio_vs_oracle", "kernel", 1e-9),
    ("classical_closed_vs_general", "classical", 1e-10),
    ("classical_fundamental_nonneg", "classical", 1e-10),
    ("classical_fundamental_slack_exact", "classical", 0.0),
    ("classical_bounds_sandwich", "classical", 1e-9),
    ("classical_collinear_opposite_equality", "classical", 1e-8),
    ("classical_collinear_same_side_equality", "classical", 1e-8),
    ("classical_nagel_line_ratio", "classical", 1e-9),
    ("classical_nagel_line_collinearity", "classical", 1e-8),
    ("classical_rank01_closed_vs_general", "classical", 1e-10),
    ("classical_rank12_closed_vs_general", "classical", 1e-10),
    ("classical_power_sum_identities", "classical", 1e-11),
    ("classical_parts_exact_identity", "classical", 0.0),
    ("diag_incenter_lemoine_halved", "classical", 0.0),
    ("diag_centroid_lemoine_radicand", "classical", 0.0),
    ("dual_closed_vs_general", "dual", 1e-10),
    ("dual_excenter_power_identity", "dual", 1e-9),
    ("dual_adjoint_power_identity", "dual", 1e-9),
    ("dual_leg_identities", "dual", 1e-9),
    ("dual_bound_nonneg", "dual", 1e-9),
    ("dual_slack_exact", "dual", 0.0),
    ("dual_parts_exact_identity", "dual", 0.0),
    ("dual_exradii_identity", "dual", 1e-10),
    ("dual_exradii_exact", "dual", 0.0),
    ("dual_adjoint_weight_sums", "dual", 1e-12),
    ("cevian_rank_pair_vs_general", "cevian", 1e-9),
    ("cevian_rank_special_points", "cevian", 1e-12),
    ("cevian_triple_vs_oracle", "cevian", 1e-9),
    ("cevian_feet_cos_vs_oracle", "cevian", 1e-9),
    ("cevian_triple_reversal", "cevian", 1e-12),
    ("diag_triple_expansion_sign", "cevian", 0.0),
)

_ADVISORY_NOTES = {
    "diag_incenter_lemoine_halved": (
        "closed-form variant carrying an extra factor 2; residual is the "
        "distance of its ratio to the trusted value from one half"
    ),
    "diag_centroid_lemoine_radicand": (
        "closed-form variant whose second radicand mixes scale degrees; "
        "counters show how often it is non-positive, and real values land "
        "outside [-1, 1]"
    ),
    "diag_triple_expansion_sign": (
        "printed numerator expansion with one sign group flipped; residual "
        "is its distance to the trusted vertex-angle cosine"
    ),
}


def _parts_agree(parts_one, parts_two) -> bool:
    """Exact coherence of two (numerator, radicand) pairs.

    cos = num / sqrt(rad) agree exactly when the numerators share a sign
    and num1^2 rad2 == num2^2 rad1; this never takes a square root, so it
    stays inside rational arithmetic.
    """
    num1, rad1 = parts_one
    num2, rad2 = parts_two
    if (num1 > 0) != (num2 > 0) or (num1 < 0) != (num2 < 0):
        return False
    return num1 * num1 * rad2 == num2 * num2 * rad1


class _Runner:
    def __init__(self, config: FuzzConfig):
        self.config = config
        self.suites = config.enabled_suites()
        self.checks: dict[str, CheckAccumulator] = {}
        for name, suite, tolerance in _CHECK_TABLE:
            if suite not in self.suites:
                continue
            advisory = name.startswith("diag_")
            acc = CheckAccumulator(
                name=name,
                suite=suite,
                tolerance=tolerance,
                advisory=advisory,
                note=_ADVISORY_NOTES.get(name),
            )
            if name == "diag_centroid_lemoine_radicand":
                acc.counters = {"radicand_positive": 0, "radicand_nonpositive": 0}
            self.checks[name] = acc

    def _rec(self, name, ctx, abs_residual, rel_residual, p=None, q=None):
        self.checks[name].record(ctx, abs_residual, rel_residual, p=p, q=q)

    def _skip(self, name):
        self.checks[name].skip()

    # -- kernel ------------------------------------------------------------

    def run_kernel(self, ctx: _Sample) -> None:
        sides, el, r_sq = ctx.sides, ctx.elements, ctx.r_sq
        p, q = ctx.p_pt, ctx.q_pt
        a_sq, b_sq, c_sq = side_squares(sides)
        min_leg = COMPARISON_GUARD * r_sq

        got_dist = dist_sq_between(p, q, sides)
        exp_dist = oracle.dist_sq(ctx.p_xy, ctx.q_xy)
        scale = max(1.0, r_sq, abs(exp_dist))
        self._rec("kernel_dist_sq_vs_oracle", ctx, got_dist - exp_dist,
                  abs(got_dist - exp_dist) / scale, p=p, q=q)

        got_cp = circum_power(p, sides)
        exp_cp = ctx.oracle_r_sq - oracle.dist_sq(ctx.p_xy, ctx.o_xy)
        n1, n2, n3 = p.normalized()
        term_scale = max(abs(n2 * n3 * a_sq), abs(n3 * n1 * b_sq), abs(n1 * n2 * c_sq))
        scale = max(1.0, r_sq, abs(exp_cp), term_scale)
        self._rec("kernel_circum_power_vs_oracle", ctx, got_cp - exp_cp,
                  abs(got_cp - exp_cp) / scale, p=p)

        report = cos_angle_at_circumcenter(p, q, sides)
        if (report.cos_value is None
                or min(report.op_sq, report.oq_sq) < min_leg):
            self._skip("kernel_cos_vs_oracle")
        else:
            try:
                exp_cos = oracle.angle_cos(ctx.o_xy, ctx.p_xy, ctx.q_xy, min_leg_sq=min_leg)
            except UndefinedAngle:
                self._skip("kernel_cos_vs_oracle")
            else:
                diff = report.cos_value - exp_cos
                self._rec("kernel_cos_vs_oracle", ctx, diff, abs(diff), p=p, q=q)

        viol = max(0.0, -got_dist, -(r_sq - got_cp))
        self._rec("kernel_point_nonnegativity", ctx, viol, viol / r_sq, p=p, q=q)

        lag_o = lagrange_point_dist_sq(p, r_sq, r_sq, r_sq, sides)
        via_lagrange = r_sq - lag_o
        scale = max(1.0, r_sq, abs(got_cp), abs(lag_o))
        self._rec("kernel_lagrange_vs_circum_power", ctx, via_lagrange - got_cp,
                  abs(via_lagrange - got_cp) / scale, p=p)

        lag_a = lagrange_point_dist_sq(p, 0.0, c_sq, b_sq, sides)
        exp_a = oracle.dist_sq(ctx.p_xy, ctx.placement.a_xy)
        scale = max(1.0, r_sq, abs(exp_a))
        self._rec("kernel_lagrange_vertex_reference", ctx, lag_a - exp_a,
                  abs(lag_a - exp_a) / scale, p=p)

        pos = ctx.pos_pt
        slack = circum_power(pos, sides) - bergstrom_bound(pos, sides)
        viol = max(0.0, -slack)
        self._rec("kernel_bergstrom_slack_nonneg", ctx, viol, viol / r_sq, p=pos)

        tangent = BaryPoint(sides.a, sides.b, sides.c)
        eq_res = circum_power(tangent, sides) - bergstrom_bound(tangent, sides)
        self._rec("kernel_bergstrom_equality_at_tangency", ctx, eq_res, abs(eq_res) / r_sq)

        lam = ctx.lam
        p_scaled = BaryPoint(p.t1 * lam, p.t2 * lam, p.t3 * lam)
        diff_cp = circum_power(p_scaled, sides) - got_cp
        diff_d = dist_sq_between(p_scaled, q, sides) - got_dist
        rel = max(abs(diff_cp) / max(1.0, abs(got_cp)),
                  abs(diff_d) / max(1.0, abs(got_dist)))
        self._rec("kernel_scale_invariance", ctx, max(abs(diff_cp), abs(diff_d)), rel, p=p)

        if ctx.exact_now:
            es = ctx.exact_sides
            k, l, m = ctx.rank_ints
            pe = BaryPoint(Fraction(k + 4), Fraction(l + 5), Fraction(m + 6))
            qe = BaryPoint(Fraction(m + 5), Fraction(k + 5), Fraction(l + 5))
            base_cp = circum_power(pe, es)
            base_d = dist_sq_between(pe, qe, es)
            exact_ok = True
            for factor in (Fraction(2), Fraction(-1)):
                pf = BaryPoint(pe.t1 * factor, pe.t2 * factor, pe.t3 * factor)
                if circum_power(pf, es) != base_cp or dist_sq_between(pf, qe, es) != base_d:
                    exact_ok = False
            self._rec("kernel_exact_scale_invariance", ctx,
                      0.0 if exact_ok else 1.0, 0.0 if exact_ok else 1.0)

        inc = incenter(sides)
        nag = nagel_point(sides)
        big_r, in_r = el.circumradius, el.inradius
        floor = COMPARISON_GUARD * r_sq
        exp_i = 2.0 * big_r * in_r
        exp_n = 4.0 * big_r * in_r - 4.0 * in_r * in_r
        cp_i = circum_power(inc, sides)
        cp_n = circum_power(nag, sides)
        rel = max(abs(cp_i - exp_i) / max(abs(exp_i), floor),
                  abs(cp_n - exp_n) / max(abs(exp_n), floor))
        self._rec("kernel_euler_chain_powers", ctx,
                  max(abs(cp_i - exp_i), abs(cp_n - exp_n)), rel)

        s = el.semiperimeter
        lhs1 = (s - sides.a) * (s - sides.b) * (s - sides.c)
        rhs1 = in_r * in_r * s
        lhs2 = sides.a * sides.b * sides.c
        rhs2 = 4.0 * big_r * in_r * s
        rel = max(abs(lhs1 - rhs1) / max(abs(rhs1), 1e-12 * r_sq),
                  abs(lhs2 - rhs2) / abs(rhs2))
        self._rec("kernel_side_product_identities", ctx,
                  max(abs(lhs1 - rhs1), abs(lhs2 - rhs2)), rel)

        rotated = TriangleSides(sides.b, sides.c, sides.a)
        k, l, m = ctx.rank_ints
        pairs = [
            (incenter(sides), incenter(rotated)),
            (nagel_point(sides), nagel_point(rotated)),
            (lemoine_point(sides), lemoine_point(rotated)),
            (cevian_rank(k, l, m, sides), cevian_rank(k, l, m, rotated)),
            (excenter("B", sides), excenter("A", rotated)),
            (adjoint_nagel("B", sides), adjoint_nagel("A", rotated)),
        ]
        worst = 0.0
        for original, relabeled in pairs:
            xy = oracle.barycentric_to_cartesian(original.as_tuple(), ctx.placement)
            w1, w2, w3 = relabeled.as_tuple()
            xy_rot = oracle.barycentric_to_cartesian((w3, w1, w2), ctx.placement)
            worst = max(worst, math.sqrt(oracle.dist_sq(xy, xy_rot) / r_sq))
        self._rec("kernel_relabel_invariance", ctx, worst, worst)

        foot_d, _, _ = cevian_triangle(ctx.pos_pt)
        d_xy = oracle.barycentric_to_cartesian(foot_d.as_tuple(), ctx.placement)
        bd_sq = oracle.dist_sq(ctx.placement.b_xy, d_xy)
        dc_sq = oracle.dist_sq(d_xy, ctx.placement.c_xy)
        t2, t3 = ctx.pos_pt.t2, ctx.pos_pt.t3
        lhs = bd_sq * t2 * t2
        rhs = dc_sq * t3 * t3
        rel = abs(lhs - rhs) / max(lhs, rhs, 1e-12 * r_sq)
        self._rec("kernel_foot_ratio_vs_oracle", ctx, abs(lhs - rhs), rel, p=ctx.pos_pt)

    # -- classical ---------------------------------------------------------

    def run_classical(self, ctx: _Sample) -> None:
        sides, el, r_sq = ctx.sides, ctx.elements, ctx.r_sq
        min_leg = COMPARISON_GUARD * r_sq
        s_sq = el.semiperimeter * el.semiperimeter

        inc = incenter(sides)
        nag = nagel_point(sides)
        report_ion = cos_angle_at_circumcenter(inc, nag, sides)
        if (report_ion.cos_value is None
                or min(report_ion.op_sq, report_ion.oq_sq) < min_leg
                or el.is_equilateral):
            self._skip("classical_closed_vs_general")
        else:
            diff = classical_cos_ION(el) - report_ion.cos_value
            self._rec("classical_closed_vs_general", ctx, diff, abs(diff))

        residual = fundamental_residual(el)
        viol = max(0.0, -residual)
        self._rec("classical_fundamental_nonneg", ctx, viol, viol / s_sq)

        if ctx.exact_now:
            slack = fundamental_slack_sq(ctx.exact_sides)
            bad = 0.0 if slack >= 0 else float(-slack)
            self._rec("classical_fundamental_slack_exact", ctx, bad, 0.0 if slack >= 0 else 1.0)

        report_pq = cos_angle_at_circumcenter(ctx.p_pt, ctx.q_pt, sides)
        bounds = report_pq.bounds
        viol = max(0.0, abs(bounds.middle) - bounds.upper)
        self._rec("classical_bounds_sandwich", ctx, viol,
                  viol / max(1.0, bounds.upper), p=ctx.p_pt, q=ctx.q_pt)

        op_sq_oracle = oracle.dist_sq(ctx.p_xy, ctx.o_xy)
        if op_sq_oracle < 4.0 * min_leg:
            self._skip("classical_collinear_opposite_equality")
            self._skip("classical_collinear_same_side_equality")
        else:
            opposite_xy = oracle.reflect_through(ctx.p_xy, ctx.o_xy)
            opp = BaryPoint(*oracle.cartesian_to_barycentric(opposite_xy, ctx.placement))
            rep = cos_angle_at_circumcenter(ctx.p_pt, opp, sides)
            if rep.cos_value is None:
                self._skip("classical_collinear_opposite_equality")
            else:
                mid_scale = max(1.0, r_sq, abs(float(rep.bounds.middle)))
                rel = max(abs(rep.cos_value + 1.0),
                          abs(float(rep.bounds.middle) - rep.bounds.lower) / mid_scale)
                self._rec("classical_collinear_opposite_equality", ctx, rel, rel, p=ctx.p_pt)
            halfway_xy = (
                0.5 * (ctx.p_xy[0] + ctx.o_xy[0]),
                0.5 * (ctx.p_xy[1] + ctx.o_xy[1]),
            )
            half = BaryPoint(*oracle.cartesian_to_barycentric(halfway_xy, ctx.placement))
            rep = cos_angle_at_circumcenter(ctx.p_pt, half, sides)
            if rep.cos_value is None:
                self._skip("classical_collinear_same_side_equality")
            else:
                mid_scale = max(1.0, r_sq, abs(float(rep.bounds.middle)))
                rel = max(abs(rep.cos_value - 1.0),
                          abs(float(rep.bounds.middle) - rep.bounds.upper) / mid_scale)
                self._rec("classical_collinear_same_side_equality", ctx, rel, rel, p=ctx.p_pt)

        cen = centroid(sides)
        ig_sq = dist_sq_between(inc, cen, sides)
        in_sq = dist_sq_between(inc, nag, sides)
        diff = 9.0 * ig_sq - in_sq
        rel = abs(diff) / max(in_sq, COMPARISON_GUARD * r_sq)
        self._rec("classical_nagel_line_ratio", ctx, abs(diff), rel)

        if min(ig_sq, in_sq) < COMPARISON_GUARD * r_sq:
            self._skip("classical_nagel_line_collinearity")
        else:
            try:
                along = triple_cevian_cos(inc, cen, nag, sides)
            except DegenerateVertexAngle:
                self._skip("classical_nagel_line_collinearity")
            else:
                viol = abs(1.0 - abs(along))
                self._rec("classical_nagel_line_collinearity", ctx, viol, viol)

        rank0 = centroid(sides)
        rank1 = inc
        rep = cos_angle_at_circumcenter(rank0, rank1, sides)
        if (rep.cos_value is None or min(rep.op_sq, rep.oq_sq) < min_leg
                or el.is_equilateral):
            self._skip("classical_rank01_closed_vs_general")
        else:
            diff = centroid_incenter_cos(el) - rep.cos_value
            self._rec("classical_rank01_closed_vs_general", ctx, diff, abs(diff))

        lem = lemoine_point(sides)
        rep = cos_angle_at_circumcenter(rank1, lem, sides)
        if (rep.cos_value is None or min(rep.op_sq, rep.oq_sq) < min_leg
                or el.is_equilateral):
            self._skip("classical_rank12_closed_vs_general")
        else:
            diff = incenter_lemoine_cos(el) - rep.cos_value
            self._rec("classical_rank12_closed_vs_general", ctx, diff, abs(diff))

        s1 = power_sum(sides, 1)
        s2 = power_sum(sides, 2)
        exp_s1 = 2.0 * el.semiperimeter
        exp_s2 = 2.0 * (s_sq - el.inradius * el.inradius
                        - 4.0 * el.circumradius * el.inradius)
        rel = max(abs(s1 - exp_s1) / exp_s1, abs(s2 - exp_s2) / s2)
        self._rec("classical_power_sum_identities", ctx,
                  max(abs(s1 - exp_s1), abs(s2 - exp_s2)), rel)

        if ctx.exact_now:
            es = ctx.exact_sides
            inc_e = incenter(es)
            nag_e = nagel_point(es)
            ok = _parts_agree(general_cos_parts(inc_e, nag_e, es), classical_cos_parts(es))
            cen_e = centroid(es)
            ok = ok and _parts_agree(
                general_cos_parts(cen_e, inc_e, es), centroid_incenter_cos_parts(es))
            ok = ok and _parts_agree(rank_pair_parts(0, 1, es), centroid_incenter_cos_parts(es))
            ok = ok and _parts_agree(rank_pair_parts(1, 2, es), incenter_lemoine_cos_parts(es))
            self._rec("classical_parts_exact_identity", ctx,
                      0.0 if ok else 1.0, 0.0 if ok else 1.0)

        if el.is_equilateral:
            self._skip("diag_incenter_lemoine_halved")
        else:
            trusted = incenter_lemoine_cos(el)
            if abs(trusted) < 1e-6:
                self._skip("diag_incenter_lemoine_halved")
            else:
                ratio = incenter_lemoine_cos_halved(el) / trusted
                self._rec("diag_incenter_lemoine_halved", ctx,
                          abs(ratio - 0.5), abs(ratio - 0.5))

        variant = centroid_lemoine_cos_variant(el)
        acc = self.checks["diag_centroid_lemoine_radicand"]
        if variant is None:
            acc.counters["radicand_nonpositive"] += 1
            acc.skip()
        else:
            acc.counters["radicand_positive"] += 1
            self._rec("diag_centroid_lemoine_radicand", ctx, abs(variant), abs(variant))

    # -- dual --------------------------------------------------------------

    def run_dual(self, ctx: _Sample) -> None:
        sides, el, r_sq = ctx.sides, ctx.elements, ctx.r_sq
        big_r = el.circumradius
        exradii = {"A": el.exradius_a, "B": el.exradius_b, "C": el.exradius_c}
        side_of = {"A": sides.a, "B": sides.b, "C": sides.c}

        worst_closed = 0.0
        worst_exc = 0.0
        worst_adj = 0.0
        worst_leg = 0.0
        worst_bound = 0.0
        worst_sum = 0.0
        worst_pt = None
        for vertex in VERTICES:
            exc = excenter(vertex, sides)
            adj = adjoint_nagel(vertex, sides)
            r_v = exradii[vertex]

            rep = cos_angle_at_circumcenter(exc, adj, sides)
            closed = excenter_adjoint_cos(vertex, el)
            diff = abs(closed - rep.cos_value)
            if diff > worst_closed:
                worst_closed = diff
                worst_pt = exc

            exp_cp = -2.0 * big_r * r_v
            got_cp = circum_power(exc, sides)
            worst_exc = max(worst_exc,
                            abs(got_cp - exp_cp) / max(abs(exp_cp), 1e-12 * r_sq))

            exp_cp = -4.0 * big_r * r_v - 4.0 * r_v * r_v
            got_cp = circum_power(adj, sides)
            worst_adj = max(worst_adj,
                            abs(got_cp - exp_cp) / max(abs(exp_cp), 1e-12 * r_sq))

            oi_sq = float(rep.op_sq)
            on_sq = float(rep.oq_sq)
            exp_oi = r_sq + 2.0 * big_r * r_v
            exp_on = (big_r + 2.0 * r_v) ** 2
            worst_leg = max(worst_leg,
                            abs(oi_sq - exp_oi) / exp_oi,
                            abs(on_sq - exp_on) / exp_on)

            residual = dual_bound_residual(vertex, el)
            scale = max(r_sq, big_r * r_v)
            worst_bound = max(worst_bound, max(0.0, -residual) / scale)

            total = adj.t1 + adj.t2 + adj.t3
            expected = el.semiperimeter - side_of[vertex]
            worst_sum = max(worst_sum,
                            abs(total - expected) / max(abs(expected),
                                                        1e-6 * el.semiperimeter))

        self._rec("dual_closed_vs_general", ctx, worst_closed, worst_closed, p=worst_pt)
        self._rec("dual_excenter_power_identity", ctx, worst_exc, worst_exc)
        self._rec("dual_adjoint_power_identity", ctx, worst_adj, worst_adj)
        self._rec("dual_leg_identities", ctx, worst_leg, worst_leg)
        self._rec("dual_bound_nonneg", ctx, worst_bound, worst_bound)
        self._rec("dual_adjoint_weight_sums", ctx, worst_sum, worst_sum)

        lhs, rhs = exradii_identity_parts(sides)
        rel = abs(lhs - rhs) / abs(rhs)
        self._rec("dual_exradii_identity", ctx, abs(lhs - rhs), rel)

        if ctx.exact_now:
            es = ctx.exact_sides
            ok_slack = all(dual_slack_sq(vertex, es) >= 0 for vertex in VERTICES)
            self._rec("dual_slack_exact", ctx,
                      0.0 if ok_slack else 1.0, 0.0 if ok_slack else 1.0)
            exc_e = excenter("A", es)
            adj_e = adjoint_nagel("A", es)
            ok_parts = _parts_agree(
                general_cos_parts(exc_e, adj_e, es), dual_cos_parts("A", es))
            self._rec("dual_parts_exact_identity", ctx,
                      0.0 if ok_parts else 1.0, 0.0 if ok_parts else 1.0)
            lhs_e, rhs_e = exradii_identity_parts(es)
            exact_zero = lhs_e - rhs_e == 0
            self._rec("dual_exradii_exact", ctx,
                      0.0 if exact_zero else abs(float(lhs_e - rhs_e)),
                      0.0 if exact_zero else 1.0)

    # -- cevian ------------------------------------------------------------

    def run_cevian(self, ctx: _Sample) -> None:
        sides, r_sq = ctx.sides, ctx.r_sq
        min_leg = COMPARISON_GUARD * r_sq

        k1, k2 = ctx.rank_pair
        point_k1 = cevian_rank(k1, 0, 0, sides)
        point_k2 = cevian_rank(k2, 0, 0, sides)
        rep = cos_angle_at_circumcenter(point_k1, point_k2, sides)
        try:
            got = rank_pair_cos(k1, k2, sides)
        except UndefinedAngle:
            self._skip("cevian_rank_pair_vs_general")
        else:
            if rep.cos_value is None or min(rep.op_sq, rep.oq_sq) < min_leg:
                self._skip("cevian_rank_pair_vs_general")
            else:
                diff = got - rep.cos_value
                self._rec("cevian_rank_pair_vs_general", ctx, diff, abs(diff),
                          p=point_k1, q=point_k2)

        worst = 0.0
        for exponent, named in ((1, incenter(sides)), (0, centroid(sides)),
                                (2, lemoine_point(sides))):
            got_n = cevian_rank(exponent, 0, 0, sides).normalized()
            exp_n = named.normalized()
            worst = max(worst, max(abs(g - e) for g, e in zip(got_n, exp_n)))
        self._rec("cevian_rank_special_points", ctx, worst, worst)

        trip_value = None
        try:
            trip_value = triple_cevian_cos(ctx.p_pt, ctx.q_pt, ctx.extra_pt, sides)
        except DegenerateVertexAngle:
            self._skip("cevian_triple_vs_oracle")
            self._skip("cevian_triple_reversal")
            self._skip("diag_triple_expansion_sign")
        if trip_value is not None:
            try:
                exp_cos = oracle.angle_cos(ctx.q_xy, ctx.p_xy, ctx.extra_xy,
                                           min_leg_sq=min_leg)
            except UndefinedAngle:
                self._skip("cevian_triple_vs_oracle")
            else:
                diff = trip_value - exp_cos
                self._rec("cevian_triple_vs_oracle", ctx, diff, abs(diff),
                          p=ctx.p_pt, q=ctx.q_pt)
            reversed_value = triple_cevian_cos(ctx.extra_pt, ctx.q_pt, ctx.p_pt, sides)
            diff = trip_value - reversed_value
            self._rec("cevian_triple_reversal", ctx, diff, abs(diff),
                      p=ctx.p_pt, q=ctx.q_pt)
            try:
                variant = triple_cevian_cos_variant(ctx.p_pt, ctx.q_pt, ctx.extra_pt, sides)
            except DegenerateVertexAngle:
                self._skip("diag_triple_expansion_sign")
            else:
                diff = variant - trip_value
                self._rec("diag_triple_expansion_sign", ctx, abs(diff), abs(diff))

        foot_d, foot_e, _ = cevian_triangle(ctx.pos_pt)
        rep = cos_angle_at_circumcenter(foot_d, foot_e, sides)
        if rep.cos_value is None or min(rep.op_sq, rep.oq_sq) < min_leg:
            self._skip("cevian_feet_cos_vs_oracle")
        else:
            d_xy = oracle.barycentric_to_cartesian(foot_d.as_tuple(), ctx.placement)
            e_xy = oracle.barycentric_to_cartesian(foot_e.as_tuple(), ctx.placement)
            try:
                exp_cos = oracle.angle_cos(ctx.o_xy, d_xy, e_xy, min_leg_sq=min_leg)
            except UndefinedAngle:
                self._skip("cevian_feet_cos_vs_oracle")
            else:
                diff = rep.cos_value - exp_cos
                self._rec("cevian_feet_cos_vs_oracle", ctx, diff, abs(diff), p=ctx.pos_pt)

    _SUITE_RUNNERS = {
        "kernel": run_kernel,
        "classical": run_classical,
        "dual": run_dual,
        "cevian": run_cevian,
    }

    def run(self) -> VerificationReport:
        strata = list(self.config.strata)
        if self.config.corpus:
            strata.append("corpus")
        contexts = 0
        for stratum in strata:
            total = len(self.config.corpus) if stratum == "corpus" else self.config.count
            for index in range(total):
                ctx = _Sample(stratum, index, self.config)
                contexts += 1
                for suite in self.suites:
                    self._SUITE_RUNNERS[suite](self, ctx)
        ordered = [self.checks[name] for name, suite, _ in _CHECK_TABLE
                   if suite in self.suites]
        return VerificationReport(config=self.config, checks=ordered, contexts=contexts)


def run_fuzz(config: FuzzConfig) -> VerificationReport:
    """Execute every enabled check over the configured strata."""
    return _Runner(config).run()
