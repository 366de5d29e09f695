"""Minimum-fuel two-impulse transfer between two equal rotated ellipses.

The pair of orbits treated here: two coplanar elliptic orbits with the same
shape (same eccentricity, same semi-latus rectum) whose apse lines differ by
an in-plane rotation ``alpha``.  With the plane normalized to ``z = 0`` and
the semi-latus rectum scaled to 1, the departure orbit is
``l0 = (0, 0, 1)``, ``s0 = (s0x, s0y, 0)`` and the arrival orbit is
``l2 = (0, 0, 1)``, ``s2 = (-s0x, s0y, 0)``: mirror images across the y
axis, with eccentricity ``e = |s0|`` and rotation
``alpha = 2*atan2(|s0x|, s0y)``.  The unknowns of a two-impulse transfer are
the two burn directions ``(x0, y0)`` and ``(x1, y1)`` on the unit circle and
the transfer orbit ``l1 = (0, 0, l)``, ``s1 = (s1x, s1y, 0)``; the cost is
the total impulse ``f1 = |dv0| + |dv1|``.

Critical points of ``f1`` split into three families, named by ``case_tag``:

- ``case1``            burns without a mirror symmetry (``y0 + y1 != 0``);
  located numerically by a deterministic multi-start damped Newton run on
  the full Lagrange system (16 unknowns after adding a deflation variable
  that excludes the symmetric families).
- ``case2a_axis`` / ``case2a_general``   burns mirror-symmetric across the
  x axis (``x1 = x0``, ``y1 = -y0``, forcing ``s1x = 0``).  The axis
  subfamily (burns on the y axis) is closed form.  The general subfamily is
  solved exactly: two stationarity polynomials are reduced by Sylvester
  resultants to a univariate of degree 48 in ``y0`` which always factors
  into known spurious factors and a degree-20 core; the core's real roots
  in (-1, 1) are isolated and refined, then back-substituted.
- ``case2b_closed`` / ``case2b_general``   burns antipodal (``x1 = -x0``,
  ``y1 = -y0``).  Two closed-form families exist (prograde ``l = 1`` with a
  free ``s1x`` interval, retrograde ``l = -1``, always dominated).  The
  rest of the family reduces to a degree-166 eliminant in ``l``; its real
  roots in the feasibility window are isolated exactly and back-substituted.
  When ``s0y = 0`` (``alpha = 180``) the two reduced stationarity
  polynomials become odd in ``s1y`` and the eliminant degenerates; the
  module switches to a dedicated split (``s1y = 0`` branch and
  ``s1y != 0`` branch) and proves, in exact arithmetic per input, that both
  branches are empty away from the axis, so only the closed forms remain.

All elimination runs in exact rational arithmetic, which is why
:class:`RotatedInput` requires exact rational ``s0x, s0y``.  Every candidate
returned has been validated against the full plan equations (residuals
below 1e-9) and the elliptic-transfer requirement ``|s1| < |l|``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .kepler import DegenerateOrbit, NotElliptic, Orbit, Vec3, orbit_geometry
from .poly_kernel import (
    ChainCollapse,
    MPoly,
    Q,
    RatPoly,
    as_fraction,
    euclidean_last_linear,
    isolate_real_roots,
    refine_root,
    strip_known_factors,
    sylvester_resultant,
)
from .transfer_model import TransferPlan, impulses, plan_as_dict, plan_is_valid

__all__ = [
    "DegenerateGeometry",
    "EllipticityViolation",
    "PipelineDegreeMismatch",
    "RotatedCandidate",
    "RotatedInput",
    "SweepRecord",
    "apogee_to_apogee_cost",
    "best_rotated_transfer",
    "candidate_as_dict",
    "case1_numeric",
    "case2a_axis_solutions",
    "case2a_general",
    "case2b_solutions",
    "elimination_degrees",
    "params_from_angle",
    "separation_angle",
    "sweep_record_as_dict",
    "sweep_rotated",
]

logger = logging.getLogger(__name__)

_RESIDUAL_TOL = 1e-9  # plan equation residuals accepted for a candidate
_GATE_TOL = 1e-6  # relative polynomial residual separating roots from noise


class EllipticityViolation(NotElliptic):
    """A candidate's transfer orbit is not elliptic (``|s1| >= |l1z|``).

    Raised internally during candidate assembly; the public family solvers
    catch it, log the rejected candidate, and leave it out of the results.
    """


class PipelineDegreeMismatch(ArithmeticError):
    """An eliminant's structure differs from the one the solver relies on."""


class DegenerateGeometry(ValueError):
    """The requested quantity is undefined for this input geometry."""


# --------------------------------------------------------------------------
# input / output types
# --------------------------------------------------------------------------


def _to_rational(value, name: str):
    """Coerce to an exact rational; floats convert exactly (no rounding)."""
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    try:
        return Q(value)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{name} must be an exact rational, got {value!r}") from exc


@dataclass(frozen=True)
class RotatedInput:
    """Exact description of a rotated-ellipse pair.

    ``s0x`` and ``s0y`` are stored as exact rationals (any int, Fraction,
    string like ``"3/10"``, or float — floats convert exactly, so pass a
    Fraction or string when you mean a decimal).  The invariant
    ``s0x**2 + s0y**2 < 1`` (elliptic orbits) is enforced exactly.

    ``e``, ``a``, ``b`` are optional provenance for inputs produced by
    :func:`params_from_angle`: the requested eccentricity and the integer
    pair behind the exact angle parametrization.
    """

    s0x: object
    s0y: object
    e: float | None = None
    a: int | None = None
    b: int | None = None

    def __post_init__(self) -> None:
        sx = _to_rational(self.s0x, "s0x")
        sy = _to_rational(self.s0y, "s0y")
        if sx * sx + sy * sy >= 1:
            raise ValueError(
                "s0x**2 + s0y**2 must be < 1 (elliptic orbits); got "
                f"s0x={sx}, s0y={sy}"
            )
        object.__setattr__(self, "s0x", sx)
        object.__setattr__(self, "s0y", sy)

    @classmethod
    def from_floats(
        cls, s0x: float, s0y: float, max_denominator: int = 10**6
    ) -> "RotatedInput":
        """Build an input from floats, rationalized to small denominators.

        Each component is replaced by the closest fraction with denominator
        at most ``max_denominator`` when that fraction is within 1e-12 of
        the float; otherwise the float's exact binary value is kept.  Small
        denominators keep the exact elimination pipelines fast.
        """

        def snap(v: float):
            r = Fraction(v).limit_denominator(max_denominator)
            return Q(r) if abs(float(r) - v) <= 1e-12 else Q(v)

        return cls(s0x=snap(s0x), s0y=snap(s0y))

    # --- derived views -----------------------------------------------------

    @property
    def s0x_float(self) -> float:
        return float(as_fraction(self.s0x))

    @property
    def s0y_float(self) -> float:
        return float(as_fraction(self.s0y))

    @property
    def eccentricity(self) -> float:
        return math.sqrt(float(as_fraction(self.s0x * self.s0x + self.s0y * self.s0y)))

    @property
    def alpha_deg(self) -> float:
        """Rotation between the two apse lines, in degrees, in [0, 180]."""
        e2 = float(as_fraction(self.s0x * self.s0x + self.s0y * self.s0y))
        if e2 < 1e-30:
            return 0.0
        c = float(as_fraction(self.s0y * self.s0y - self.s0x * self.s0x)) / e2
        return math.degrees(math.acos(max(-1.0, min(1.0, c))))

    @property
    def is_circular(self) -> bool:
        return self.s0x == 0 and self.s0y == 0

    @property
    def is_identical(self) -> bool:
        """True when departure and arrival orbits coincide (``s0x = 0``)."""
        return self.s0x == 0

    @property
    def orbit0(self) -> Orbit:
        return Orbit(Vec3(0.0, 0.0, 1.0), Vec3(self.s0x_float, self.s0y_float, 0.0))

    @property
    def orbit2(self) -> Orbit:
        return Orbit(Vec3(0.0, 0.0, 1.0), Vec3(-self.s0x_float, self.s0y_float, 0.0))

    def as_dict(self) -> dict:
        return {
            "s0x": str(as_fraction(self.s0x)),
            "s0y": str(as_fraction(self.s0y)),
            "eccentricity": self.eccentricity,
            "alpha_deg": self.alpha_deg,
            "e": self.e,
            "a": self.a,
            "b": self.b,
        }


@dataclass(frozen=True)
class RotatedCandidate:
    """One validated critical point of the transfer cost.

    ``plan`` holds the three orbits and two burn directions; ``f1`` is the
    total impulse; ``case_tag`` is one of ``case1``, ``case2a_axis``,
    ``case2a_general``, ``case2b_closed``, ``case2b_general``;
    ``separation_angle_deg`` is the angle between the departure orbit's
    apogee direction and the first burn direction.  ``note`` carries
    human-readable annotations (e.g. the one-parameter family attached to
    the prograde closed form, or dominance remarks).
    """

    plan: TransferPlan
    f1: float
    case_tag: str
    separation_angle_deg: float
    note: str = ""

    @property
    def transfer_orbit(self) -> Orbit:
        return self.plan.orbits[1]

    @property
    def burn0(self) -> Vec3:
        return self.plan.burn_points[0]

    @property
    def burn1(self) -> Vec3:
        return self.plan.burn_points[1]

    @property
    def l1z(self) -> float:
        return self.transfer_orbit.l.z

    @property
    def s1x(self) -> float:
        return self.transfer_orbit.s.x

    @property
    def s1y(self) -> float:
        return self.transfer_orbit.s.y


def candidate_as_dict(c: RotatedCandidate) -> dict:
    report = impulses(c.plan)
    return {
        "case": c.case_tag,
        "f1": c.f1,
        "separation_angle_deg": c.separation_angle_deg,
        "note": c.note,
        "burn0": list(c.burn0.as_tuple()),
        "burn1": list(c.burn1.as_tuple()),
        "l1z": c.l1z,
        "s1x": c.s1x,
        "s1y": c.s1y,
        "deltas": list(report.deltas),
        "plan": plan_as_dict(c.plan),
    }


# --------------------------------------------------------------------------
# shared candidate assembly
# --------------------------------------------------------------------------


def separation_angle(c: RotatedCandidate, inp: RotatedInput) -> float:
    """Angle (degrees) between orbit0's apogee line and the first burn.

    Returns 0.0 for circular inputs, which have no apse line.
    """
    geom = orbit_geometry(inp.orbit0)
    if geom.apogee_dir is None:
        return 0.0
    b = c.burn0
    n = math.hypot(b.x, b.y)
    dot = (geom.apogee_dir.x * b.x + geom.apogee_dir.y * b.y) / n
    return math.degrees(math.acos(max(-1.0, min(1.0, dot))))


def _assemble(
    inp: RotatedInput,
    case_tag: str,
    x0: float,
    y0: float,
    x1: float,
    y1: float,
    l1z: float,
    s1x: float,
    s1y: float,
    note: str = "",
    f1: float | None = None,
) -> RotatedCandidate | None:
    """Build and validate one candidate; None if the plan check fails.

    Raises :class:`EllipticityViolation` when the transfer orbit is not
    elliptic — callers catch it, log, and skip.
    """
    try:
        orbit1 = Orbit(Vec3(0.0, 0.0, l1z), Vec3(s1x, s1y, 0.0))
    except NotElliptic as exc:
        raise EllipticityViolation(str(exc)) from exc
    plan = TransferPlan(
        orbits=(inp.orbit0, orbit1, inp.orbit2),
        burn_points=(Vec3(x0, y0, 0.0), Vec3(x1, y1, 0.0)),
    )
    if not plan_is_valid(plan, tol=_RESIDUAL_TOL):
        logger.info(
            "%s candidate rejected by plan validation: burn0=(%.12g, %.12g) "
            "l1z=%.12g s1=(%.12g, %.12g)",
            case_tag,
            x0,
            y0,
            l1z,
            s1x,
            s1y,
        )
        return None
    cost = impulses(plan).f1
    if f1 is not None and abs(cost - f1) > 1e-9 * max(1.0, cost):
        logger.warning(
            "%s candidate: closed-form cost %.17g disagrees with plan cost "
            "%.17g; keeping the plan cost",
            case_tag,
            f1,
            cost,
        )
    cand = RotatedCandidate(
        plan=plan,
        f1=cost,
        case_tag=case_tag,
        separation_angle_deg=0.0,
        note=note,
    )
    object.__setattr__(cand, "separation_angle_deg", separation_angle(cand, inp))
    return cand


def _sorted_unique(cands: Iterable[RotatedCandidate]) -> list[RotatedCandidate]:
    """Sort by cost and drop numerically identical duplicates."""
    out: list[RotatedCandidate] = []
    seen: set[tuple] = set()
    for c in sorted(cands, key=lambda c: (c.f1, c.case_tag, c.burn0.x, c.burn0.y)):
        key = (
            round(c.burn0.x, 9),
            round(c.burn0.y, 9),
            round(c.l1z, 9),
            round(c.s1x, 9),
            round(c.s1y, 9),
        )
        if key in seen:
            continue
        seen.add(key)
        out.append(c)
    return out


def _rel_residual(poly: MPoly, point: dict[str, float]) -> float:
    """|poly(point)| divided by the sum of its term magnitudes at the point.

    Both the value and the normalizer are evaluated exactly (floats convert
    to exact rationals), so the ratio is a faithful relative residual even
    for polynomials with astronomically large integer coefficients.
    """
    value = abs(poly.eval_float(point))
    mag_terms = MPoly(poly.vars, {k: abs(c) for k, c in poly.terms.items()})
    scale = mag_terms.eval_float({v: abs(x) for v, x in point.items()})
    return value / max(scale, 1e-300)


# --------------------------------------------------------------------------
# exact angle parametrization
# --------------------------------------------------------------------------


def params_from_angle(e: float, alpha_deg: float) -> RotatedInput:
    """Exact-rational input for eccentricity ``e`` and rotation ``alpha``.

    Uses the integer parametrization ``s0x = e*(a^2 - b^2)/(a^2 + b^2)``,
    ``s0y = e*2ab/(a^2 + b^2)`` with ``1 <= b <= a <= 200``, which satisfies
    ``s0x^2 + s0y^2 = e^2`` exactly; the pair ``(a, b)`` minimizing the
    angle error is selected (always below 0.01 degrees).  ``alpha = 180``
    maps to ``b = 0`` (``s0y = 0``) and ``alpha = 0`` to ``a = b``
    (``s0x = 0``) exactly.  ``e`` itself is rationalized to denominator at
    most 10**6 when that loses less than 1e-12, else kept as the float's
    exact binary value.  ``e = 0`` returns the circular-degenerate input.
    """
    if not (0.0 <= e < 1.0):
        raise ValueError(f"eccentricity must be in [0, 1), got {e!r}")
    if not (0.0 <= alpha_deg <= 180.0):
        raise ValueError(f"alpha_deg must be in [0, 180], got {alpha_deg!r}")

    er = Fraction(e).limit_denominator(10**6)
    if abs(float(er) - e) > 1e-12:
        er = Fraction(e)
    eq = Q(er)

    if eq == 0:
        return RotatedInput(s0x=Q(0), s0y=Q(0), e=e, a=1, b=1)
    if alpha_deg == 0.0:
        return RotatedInput(s0x=Q(0), s0y=eq, e=e, a=1, b=1)
    if alpha_deg == 180.0:
        return RotatedInput(s0x=eq, s0y=Q(0), e=e, a=1, b=0)

    # the pair must satisfy b/a ~ tan(45 deg - alpha/4); best rational
    # approximations come from the continued fraction, growing the
    # denominator bound until the angle error is below 0.01 degrees
    target = math.tan(math.radians(45.0 - alpha_deg / 4.0))
    best: tuple[float, int, int] | None = None
    bound = 200
    while True:
        fr = Fraction(target).limit_denominator(bound)
        if fr.numerator > 0:
            b, a = fr.numerator, fr.denominator
            ang = 2.0 * math.degrees(math.atan2(a * a - b * b, 2.0 * a * b))
            err = abs(ang - alpha_deg)
            if best is None or err < best[0]:
                best = (err, a, b)
        if best is not None and best[0] < 0.01:
            break
        if bound > 10**8:
            raise ArithmeticError(
                f"angle search did not converge for alpha={alpha_deg}"
            )
        bound *= 2
    _, a, b = best
    den = Q(a * a + b * b)
    return RotatedInput(
        s0x=eq * Q(a * a - b * b) / den,
        s0y=eq * Q(2 * a * b) / den,
        e=e,
        a=a,
        b=b,
    )


# --------------------------------------------------------------------------
# case 2a: mirror-symmetric burns (x1 = x0, y1 = -y0, s1x = 0)
# --------------------------------------------------------------------------


def case2a_axis_solutions(inp: RotatedInput) -> list[RotatedCandidate]:
    """The two closed-form candidates with burns on the y axis.

    For ``y0 = sigma`` (sigma = +-1) the transfer orbit is
    ``l1z = sqrt(u)``, ``s1 = (0, s0y)`` with ``u = 1 - sigma*s0x``, and the
    cost is ``2*|u - sqrt(u)|``.  A branch whose transfer orbit is not
    elliptic (exact test ``s0y^2 >= u``) is flagged and left out.
    """
    out: list[RotatedCandidate] = []
    for sigma in (1, -1):
        u = 1 - Q(sigma) * inp.s0x
        if inp.s0y * inp.s0y >= u:
            logger.info(
                "case2a_axis branch y0=%+d rejected: transfer orbit not pierced "
                "below the elliptic bound (s0y^2 >= %s)",
                sigma,
                u,
            )
            continue
        uf = float(as_fraction(u))
        root = math.sqrt(uf)
        f1 = 2.0 * abs(uf - root)
        cand = _assemble(
            inp,
            "case2a_axis",
            0.0,
            float(sigma),
            0.0,
            float(-sigma),
            root,
            0.0,
            inp.s0y_float,
            f1=f1,
        )
        if cand is not None:
            out.append(cand)
    return _sorted_unique(out)


@dataclass(frozen=True)
class _MirrorPipeline:
    """Exact elimination data for the mirror-symmetric family, per input."""

    stat_l: MPoly  # d(cost)/dl, denominators cleared; vars (l, x0, y0)
    stat_t: MPoly  # tangential derivative along the burn circle, cleared
    core: RatPoly  # degree-20 eliminant core in y0
    even_part: RatPoly  # q0: even-in-x0 part of the pair resultant, on the circle
    odd_part: RatPoly  # q1: odd-in-x0 part (zero polynomial when s0y = 0)
    lin_l: tuple[MPoly, MPoly] | None  # (r1, r0): last linear chain element in l
    degree_full: int  # 48
    degree_core: int  # 20


@lru_cache(maxsize=64)
def _mirror_pipeline(s0x, s0y) -> _MirrorPipeline:
    V = ("l", "x0", "y0")
    l = MPoly.variable("l", V)
    x0 = MPoly.variable("x0", V)
    y0 = MPoly.variable("y0", V)
    one = MPoly.const(1, V)

    # squared single-burn gap times l^2 x0^2 (both burns have equal gaps here)
    gap = s0y * l * x0 - (one + x0 * s0y - y0 * s0x - l * l)
    cost_num = (
        (s0x * s0x + (one - l) ** 2) * l * l * x0 * x0
        + gap * gap
        + 2 * (one - l) * (x0 * s0y - y0 * s0x) * l * l * x0 * x0
        - 2 * (one - l) * (one + x0 * s0y - y0 * s0x - l * l) * l * x0 * x0
    )
    stat_l = l * cost_num.partial("l") - 2 * cost_num
    stat_t = x0 * x0 * cost_num.partial("y0") - y0 * (
        x0 * cost_num.partial("x0") - 2 * cost_num
    )

    pair = sylvester_resultant(stat_l, stat_t, "l")
    circle = x0 * x0 + y0 * y0 - one
    elim = sylvester_resultant(circle, pair, "x0")
    full = elim.to_ratpoly("y0")
    if full.degree() != 48:
        raise PipelineDegreeMismatch(
            f"mirror-family eliminant has degree {full.degree()}, expected 48"
        )

    spur = RatPoly([1 - s0y * s0y, -2 * s0x, s0x * s0x + s0y * s0y], "y0")
    core = strip_known_factors(
        full,
        [
            (RatPoly([0, 1], "y0"), 8),
            (RatPoly([-1, 1], "y0"), 6),
            (RatPoly([1, 1], "y0"), 6),
            (spur, 4),
        ],
    )
    if core.degree() != 20:
        raise PipelineDegreeMismatch(
            f"mirror-family core has degree {core.degree()}, expected 20"
        )

    # split the pair resultant into even/odd parts in x0 and reduce even
    # powers x0^(2j) -> (1 - y0^2)^j on the burn circle
    coeffs = pair.coeffs_in("x0")
    circ_pow = [MPoly.const(1, V)]
    for _ in range((len(coeffs) - 1) // 2 + 1):
        circ_pow.append(circ_pow[-1] * (one - y0 * y0))
    even = MPoly.zero(V)
    odd = MPoly.zero(V)
    for i, c in enumerate(coeffs):
        red = c * circ_pow[i // 2]
        if i % 2 == 0:
            even = even + red
        else:
            odd = odd + red
    even_part = even.to_ratpoly("y0")
    odd_part = odd.to_ratpoly("y0")

    try:
        r1, r0 = euclidean_last_linear(stat_l, stat_t, "l")
        lin_l = (r1, r0)
    except ChainCollapse:
        logger.info("mirror family: euclidean chain collapsed; fiber-only recovery")
        lin_l = None

    return _MirrorPipeline(
        stat_l=stat_l,
        stat_t=stat_t,
        core=core,
        even_part=even_part,
        odd_part=odd_part,
        lin_l=lin_l,
        degree_full=48,
        degree_core=20,
    )


def _mirror_backsub(
    inp: RotatedInput, pipe: _MirrorPipeline, y0r: float
) -> list[RotatedCandidate]:
    """All validated candidates over one core root ``y0r``."""
    s0xf, s0yf = inp.s0x_float, inp.s0y_float
    xx = 1.0 - y0r * y0r
    if xx <= 1e-14:
        return []  # burn on the y axis: covered by the closed form

    def from_x0(x0v: float) -> list[RotatedCandidate]:
        yQ, xQ = Q(y0r), Q(x0v)
        fiber = pipe.stat_l.subs("x0", xQ).subs("y0", yQ).to_ratpoly("l")
        if fiber.is_zero():
            return []
        found: list[RotatedCandidate] = []
        for iv in isolate_real_roots(fiber, Q(-8), Q(8)):
            lv = refine_root(fiber, iv)
            if abs(lv) < 1e-9:
                continue
            point = {"l": lv, "x0": x0v, "y0": y0r}
            if _rel_residual(pipe.stat_t, point) > _GATE_TOL:
                continue  # fiber root not paired with this y0 root
            s1y = (1.0 + x0v * s0yf - y0r * s0xf - lv * lv) / (lv * x0v)
            try:
                cand = _assemble(
                    inp,
                    "case2a_general",
                    x0v,
                    y0r,
                    x0v,
                    -y0r,
                    lv,
                    0.0,
                    s1y,
                )
            except EllipticityViolation:
                logger.info(
                    "case2a_general root y0=%.12g, l=%.12g rejected: transfer "
                    "orbit not elliptic",
                    y0r,
                    lv,
                )
                continue
            if cand is not None:
                found.append(cand)
        return found

    mag = math.sqrt(xx)
    if not pipe.odd_part.is_zero():
        num = pipe.even_part.eval_q(Q(y0r))
        den = pipe.odd_part.eval_q(Q(y0r))
        if den != 0:
            ratio = -num / den
            x0v = float(as_fraction(ratio))
            if abs(x0v) <= 1.0 + 1e-6 and abs(x0v) > 1e-9:
                got = from_x0(math.copysign(mag, x0v))
                if got:
                    return got
        # fall through: ratio degenerate or rejected; try both signs
    out: list[RotatedCandidate] = []
    for sign in (1.0, -1.0):
        out.extend(from_x0(sign * mag))
    return out


def case2a_general(inp: RotatedInput) -> list[RotatedCandidate]:
    """Interior critical points of the mirror-symmetric family, exactly.

    Pipeline: resultant of the two cleared stationarity polynomials in
    ``l``, then resultant with the burn-circle relation in ``x0``, giving a
    degree-48 univariate in ``y0``; stripping the always-present factors
    ``y0^8 (y0-1)^6 (y0+1)^6 q(y0)^4`` (with ``q`` the known spurious
    quadratic) leaves the degree-20 core whose real roots in (-1, 1) are
    isolated and refined exactly, then back-substituted through the
    even/odd split of the pair resultant (ratio when available, both signs
    of ``x0 = +-sqrt(1-y0^2)`` when the split degenerates) and the
    stationarity fiber in ``l``.  Candidates failing the tangential
    stationarity gate, plan validation, or ellipticity are logged and
    dropped.
    """
    if inp.s0x == 0:
        raise DegenerateGeometry(
            "identical orbits: the mirror-family elimination needs s0x != 0"
        )
    pipe = _mirror_pipeline(inp.s0x, inp.s0y)
    out: list[RotatedCandidate] = []
    for iv in isolate_real_roots(pipe.core, Q(-1), Q(1)):
        y0r = refine_root(pipe.core, iv)
        out.extend(_mirror_backsub(inp, pipe, y0r))
    return _sorted_unique(out)


# --------------------------------------------------------------------------
# case 2b: antipodal burns (x1 = -x0, y1 = -y0)
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class _AntipodalPipeline:
    """Exact elimination data for the antipodal family, per input."""

    radius_pair: MPoly  # s0x^2 (x0^2 - 1) + (1 - l^2)^2; vars (l, x0, s1y)
    d_first: MPoly  # squared-gap balance, degree 2 in s1y
    d_second: MPoly  # tangential balance, degree 5 in s1y
    core: RatPoly  # eliminant in l after stripping l^a (l-1)^b (l+1)^c
    lin_s: tuple[MPoly, MPoly] | None  # (u1, u0): last linear element in s1y
    degree_full: int  # 166


def _antipodal_equations(s0x, s0y):
    """Build the reduced antipodal-system polynomials in (l, x0, s1y)."""
    V = ("l", "x0", "s1y")
    l = MPoly.variable("l", V)
    x0 = MPoly.variable("x0", V)
    s1y = MPoly.variable("s1y", V)
    one = MPoly.const(1, V)

    d = l * (one - l * l)  # common denominator of the s1x and y0 substitutions
    s1x_num = x0 * (l * s1y - s0y) * s0x  # s1x = s1x_num / d
    y0_num = one - l * l  # y0 = y0_num / s0x

    p0 = (
        (s0x * d - s1x_num) ** 2
        + (s0y * d - s1y * d) ** 2
        + ((one - l) * d) ** 2
        + 2 * (one - l) * d * ((s0y - s1y) * x0 * d - (s0x * d - s1x_num) * y0_num / s0x)
    )
    p1 = (
        (s0x * d + s1x_num) ** 2
        + (s0y * d - s1y * d) ** 2
        + ((one - l) * d) ** 2
        + 2 * (one - l) * d * ((s1y - s0y) * x0 * d - (s0x * d + s1x_num) * y0_num / s0x)
    )

    first = (p0.partial("s1y") ** 2 * p1 - p1.partial("s1y") ** 2 * p0).divexact(
        l**3 * (l - one) ** 4 * (l + one) ** 2
    )

    d_l = d.partial("l")
    t0 = 2 * p0.partial("x0") * d * d + s0x * s0x * x0 * (p0.partial("l") * d - 2 * p0 * d_l)
    t1 = 2 * p1.partial("x0") * d * d + s0x * s0x * x0 * (p1.partial("l") * d - 2 * p1 * d_l)
    second = (t0 * t0 * p1 - t1 * t1 * p0).divexact(
        l**2 * (l - one) ** 3 * (l + one) ** 2
    )

    radius_pair = s0x * s0x * (x0 * x0 - one) + (one - l * l) ** 2
    return radius_pair, first, second, t0


def _strip_l_units(poly: RatPoly) -> tuple[RatPoly, tuple[int, int, int]]:
    """Divide out all factors l, (l-1), (l+1); return the core and counts."""
    counts = []
    for fac in (RatPoly([0, 1], "l"), RatPoly([-1, 1], "l"), RatPoly([1, 1], "l")):
        n = 0
        while not poly.is_zero():
            quo, rem = poly.div_rem(fac)
            if not rem.is_zero():
                break
            poly, n = quo, n + 1
        counts.append(n)
    return poly, tuple(counts)


@lru_cache(maxsize=32)
def _antipodal_pipeline(s0x, s0y) -> _AntipodalPipeline:
    if s0y == 0:
        raise ValueError("use the symmetric split for s0y = 0")
    radius_pair, first, second, _ = _antipodal_equations(s0x, s0y)

    inner = sylvester_resultant(first, second, "s1y")
    elim = sylvester_resultant(radius_pair, inner, "x0").to_ratpoly("l")
    if elim.degree() != 166:
        raise PipelineDegreeMismatch(
            f"antipodal eliminant has degree {elim.degree()}, expected 166"
        )
    core, counts = _strip_l_units(elim)
    logger.debug(
        "antipodal eliminant: stripped l^%d (l-1)^%d (l+1)^%d -> degree %d",
        *counts,
        core.degree(),
    )

    try:
        u1, u0 = euclidean_last_linear(first, second, "s1y")
        lin_s = (u1, u0)
    except ChainCollapse:
        logger.info("antipodal family: euclidean chain collapsed; fiber-only recovery")
        lin_s = None

    return _AntipodalPipeline(
        radius_pair=radius_pair,
        d_first=first,
        d_second=second,
        core=core,
        lin_s=lin_s,
        degree_full=166,
    )


def _quadratic_real_roots(coeffs: Sequence[object]) -> list[float]:
    """Real roots of an exact-coefficient polynomial of degree <= 2."""
    cs = list(coeffs) + [0] * (3 - len(coeffs))
    c0, c1, c2 = cs[0], cs[1], cs[2]
    if c2 == 0:
        if c1 == 0:
            return []
        return [float(as_fraction(Q(-c0) / Q(c1)))]
    b = Q(c1) / Q(c2)
    c = Q(c0) / Q(c2)
    disc = float(as_fraction(b * b - 4 * c))
    if disc < 0:
        return []
    bf = float(as_fraction(b))
    root = math.sqrt(disc)
    return [(-bf - root) / 2.0, (-bf + root) / 2.0]


def _antipodal_window(s0x) -> tuple[Q, Q]:
    """Rational bounds enclosing |l| values with a real burn latitude.

    A real ``y0 = (1-l^2)/s0x`` in [-1, 1] needs ``|1-l^2| <= |s0x|``; the
    bounds are widened slightly so boundary roots stay inside and are then
    rejected by the ``|y0| < 1`` guard.
    """
    a = float(as_fraction(abs(s0x)))
    lo = max(math.sqrt(max(1.0 - a, 0.0)) - 1e-6, 1e-9)
    hi = math.sqrt(1.0 + a) + 1e-6
    return Q(lo), Q(hi)


def _antipodal_backsub(
    inp: RotatedInput, pipe: _AntipodalPipeline, lv: float
) -> list[RotatedCandidate]:
    s0xf, s0yf = inp.s0x_float, inp.s0y_float
    y0v = (1.0 - lv * lv) / s0xf
    if 1.0 - y0v * y0v <= 1e-14:
        return []  # boundary root: burns on the y axis have x0 = 0 here
    if abs(lv) < 1e-9 or abs(abs(lv) - 1.0) < 1e-12:
        return []
    mag = math.sqrt(1.0 - y0v * y0v)
    out: list[RotatedCandidate] = []
    for sign in (1.0, -1.0):
        x0v = sign * mag
        lQ, xQ = Q(lv), Q(x0v)
        seed: float | None = None
        if pipe.lin_s is not None:
            u1v = pipe.lin_s[0].eval_exact({"l": lQ, "x0": xQ})
            u0v = pipe.lin_s[1].eval_exact({"l": lQ, "x0": xQ})
            if u1v != 0:
                seed = float(as_fraction(-u0v / u1v))
        fiber = pipe.d_first.subs("l", lQ).subs("x0", xQ).to_ratpoly("s1y")
        roots = _quadratic_real_roots(fiber.coeffs)
        if not roots:
            continue
        scored = []
        for s1yv in roots:
            rel = _rel_residual(
                pipe.d_second, {"l": lv, "x0": x0v, "s1y": s1yv}
            )
            scored.append((rel, s1yv))
        scored.sort(key=lambda t: (t[0], abs(t[1] - seed) if seed is not None else 0.0))
        # only the best-matching fiber root continues the solution branch;
        # the other quadratic root belongs to a sign branch of the squared
        # system and its residual is orders of magnitude larger
        for rel, s1yv in scored[:1]:
            if rel > _GATE_TOL:
                continue
            s1xv = x0v * (lv * s1yv - s0yf) * s0xf / (lv * (1.0 - lv * lv))
            try:
                cand = _assemble(
                    inp,
                    "case2b_general",
                    x0v,
                    y0v,
                    -x0v,
                    -y0v,
                    lv,
                    s1xv,
                    s1yv,
                )
            except EllipticityViolation:
                logger.info(
                    "case2b_general root l=%.12g rejected: transfer orbit not "
                    "elliptic",
                    lv,
                )
                continue
            if cand is not None:
                out.append(cand)
    return out


def _antipodal_symmetric_empty(inp: RotatedInput) -> bool:
    """Prove (exactly, per input) that the s0y = 0 antipodal family is empty.

    At ``s0y = 0`` both reduced stationarity polynomials are odd in
    ``s1y``, so the generic eliminant vanishes identically and the family
    splits.  The branch ``s1y = 0`` has stationarity polynomial equal to a
    unit times ``x0 l^4 (l-1)^4 (l+1)^3`` — no interior zeros.  On the
    branch ``s1y != 0`` the ``s1y``-coefficient of the first polynomial
    factors as a monomial times a quintic in ``l`` whose resultant with the
    burn-latitude relation is a monomial in ``l`` — again no interior
    zeros.  Both facts are verified here in exact arithmetic; the return
    value reports whether the verification succeeded (it always should).
    """
    s0x = inp.s0x
    radius_pair, first, second, t0 = _antipodal_equations(s0x, Q(0))

    coeffs = first.coeffs_in("s1y")
    if len(coeffs) != 2 or not coeffs[0].is_zero():
        raise PipelineDegreeMismatch(
            "symmetric antipodal split: first polynomial is not odd in s1y"
        )

    def strip_monomials(p: MPoly) -> MPoly:
        V = p.vars
        l = MPoly.variable("l", V)
        x0 = MPoly.variable("x0", V)
        one = MPoly.const(1, V)
        for fac in (x0, l, l - one, l + one):
            while True:
                try:
                    p = p.divexact(fac)
                except Exception:
                    break
        return p

    branch_a = strip_monomials(t0.subs("s1y", Q(0)))
    if not branch_a.is_const():
        logger.warning(
            "symmetric antipodal split: stationary branch s1y=0 is not "
            "structurally empty; falling back to its eliminant"
        )
        return False

    quintic = strip_monomials(coeffs[1])
    res = sylvester_resultant(radius_pair.subs("s1y", Q(0)), quintic, "x0")
    res_core = strip_monomials(res)
    if not res_core.is_const():
        logger.warning(
            "symmetric antipodal split: branch s1y != 0 eliminant is not a "
            "monomial; falling back to root isolation"
        )
        return False
    return True


def _antipodal_symmetric_general(inp: RotatedInput) -> list[RotatedCandidate]:
    """Generic fallback for s0y = 0 when the emptiness proof fails.

    Solves the two branches by direct elimination: roots of the branch
    eliminants inside the feasibility window, back-substituted against the
    even-quartic fiber for ``s1y``.  In practice this path is unreachable
    (the emptiness verification always succeeds); it exists so a structural
    surprise degrades to a slower exact solve instead of a wrong answer.
    """
    s0x = inp.s0x
    radius_pair, first, second, t0 = _antipodal_equations(s0x, Q(0))
    out: list[RotatedCandidate] = []
    lo, hi = _antipodal_window(s0x)

    branch_a = t0.subs("s1y", Q(0))
    elim_a = sylvester_resultant(radius_pair.subs("s1y", Q(0)), branch_a, "x0")
    coeffs = first.coeffs_in("s1y")
    elim_b = sylvester_resultant(radius_pair.subs("s1y", Q(0)), coeffs[1], "x0")
    quart = second.divexact(MPoly.variable("s1y", second.vars))

    for tag, elim in (("A", elim_a), ("B", elim_b)):
        poly, _ = _strip_l_units(elim.to_ratpoly("l"))
        if poly.is_zero() or poly.degree() == 0:
            continue
        for window in ((lo, hi), (-hi, -lo)):
            for iv in isolate_real_roots(poly, window[0], window[1]):
                lv = refine_root(poly, iv)
                y0v = (1.0 - lv * lv) / inp.s0x_float
                if 1.0 - y0v * y0v <= 1e-14 or abs(lv) < 1e-9:
                    continue
                mag = math.sqrt(1.0 - y0v * y0v)
                for sign in (1.0, -1.0):
                    x0v = sign * mag
                    if tag == "A":
                        s1y_list = [0.0]
                    else:
                        fib = quart.subs("l", Q(lv)).subs("x0", Q(x0v)).to_ratpoly("s1y")
                        s1y_list = [
                            refine_root(fib, jv)
                            for jv in isolate_real_roots(fib, Q(-4), Q(4))
                            if abs(refine_root(fib, jv)) > 1e-12
                        ]
                    for s1yv in s1y_list:
                        s1xv = (
                            x0v * lv * s1yv * inp.s0x_float / (lv * (1.0 - lv * lv))
                            if s1yv
                            else 0.0
                        )
                        try:
                            cand = _assemble(
                                inp,
                                "case2b_general",
                                x0v,
                                y0v,
                                -x0v,
                                -y0v,
                                lv,
                                s1xv,
                                s1yv,
                            )
                        except EllipticityViolation:
                            continue
                        if cand is not None:
                            out.append(cand)
    return out


def case2b_solutions(
    inp: RotatedInput, include_general: bool = True
) -> list[RotatedCandidate]:
    """All antipodal-burn candidates: two closed forms plus the exact rest.

    Closed forms (tag ``case2b_closed``): the prograde family ``l = 1``,
    burns on the x axis, ``s1y = s0y``, any ``s1x`` in
    ``[-|s0x|, |s0x|]`` costing ``2|s0x|`` (the ``s1x = 0`` representative
    is returned, the interval noted); and the retrograde point ``l = -1``,
    ``s1 = (-s0x*s0y, -s0y)``, always elliptic, costing
    ``2*sqrt(4 + s0x^2) > 4`` — always dominated, flagged in its note.

    The general family (tag ``case2b_general``) comes from the degree-166
    eliminant in ``l``; roots are isolated only inside the window
    ``sqrt(1-|s0x|) <= |l| <= sqrt(1+|s0x|)`` imposed by a real burn
    latitude.  For ``s0y = 0`` the eliminant degenerates (both reduced
    polynomials are odd in ``s1y``); the split solver then verifies in
    exact arithmetic that the general family is empty away from the axis.
    ``include_general=False`` skips the heavy elimination and returns the
    closed forms only.
    """
    if inp.s0x == 0:
        raise DegenerateGeometry(
            "identical orbits: the antipodal family needs s0x != 0"
        )
    s0xf, s0yf = inp.s0x_float, inp.s0y_float
    out: list[RotatedCandidate] = []

    cand = _assemble(
        inp,
        "case2b_closed",
        1.0,
        0.0,
        -1.0,
        0.0,
        1.0,
        0.0,
        s0yf,
        note=(
            "prograde family: every s1x in [-|s0x|, |s0x|] gives the same "
            "cost 2|s0x|; s1x = 0 representative"
        ),
        f1=2.0 * abs(s0xf),
    )
    if cand is not None:
        out.append(cand)

    cand = _assemble(
        inp,
        "case2b_closed",
        1.0,
        0.0,
        -1.0,
        0.0,
        -1.0,
        -s0xf * s0yf,
        -s0yf,
        note=(
            "retrograde point: always elliptic, cost 2*sqrt(4+s0x^2) > 4, "
            "dominated by the prograde family"
        ),
        f1=2.0 * math.sqrt(4.0 + s0xf * s0xf),
    )
    if cand is not None:
        out.append(cand)

    if include_general:
        if inp.s0y == 0:
            if not _antipodal_symmetric_empty(inp):
                out.extend(_antipodal_symmetric_general(inp))
        else:
            pipe = _antipodal_pipeline(inp.s0x, inp.s0y)
            lo, hi = _antipodal_window(inp.s0x)
            for window in ((lo, hi), (-hi, -lo)):
                for iv in isolate_real_roots(pipe.core, window[0], window[1]):
                    lv = refine_root(pipe.core, iv)
                    out.extend(_antipodal_backsub(inp, pipe, lv))
    return _sorted_unique(out)


# --------------------------------------------------------------------------
# case 1: non-symmetric burns, deterministic multi-start Newton
# --------------------------------------------------------------------------

# unknown layout: x0 y0 x1 y1 s1x s1y l d0 d1 lam1..lam6 k
_N_UNKNOWNS = 16


def _case1_system(sx: float, sy: float, Z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Residuals (n, 16) and constraint gradients (n, 6, 9) at states Z."""
    x0, y0, x1, y1 = Z[:, 0], Z[:, 1], Z[:, 2], Z[:, 3]
    s1x, s1y, l, d0, d1 = Z[:, 4], Z[:, 5], Z[:, 6], Z[:, 7], Z[:, 8]
    lam = Z[:, 9:15]
    k = Z[:, 15]
    n = Z.shape[0]

    dxs = sx - s1x
    dys = sy - s1y
    sxs = sx + s1x
    ml = 1.0 - l

    g = np.empty((n, 6))
    g[:, 0] = x0 * x0 + y0 * y0 - 1.0
    g[:, 1] = x1 * x1 + y1 * y1 - 1.0
    g[:, 2] = l * l + l * (x0 * s1y - y0 * s1x) - 1.0 - x0 * sy + y0 * sx
    g[:, 3] = l * l + l * (x1 * s1y - y1 * s1x) - 1.0 - x1 * sy - y1 * sx
    gap0 = dxs * dxs + dys * dys + ml * ml + 2.0 * ml * (x0 * dys - y0 * dxs)
    gap1 = sxs * sxs + dys * dys + ml * ml + 2.0 * ml * (x1 * dys + y1 * sxs)
    g[:, 4] = d0 * d0 - gap0
    g[:, 5] = d1 * d1 - gap1

    G = np.zeros((n, 6, 9))
    G[:, 0, 0] = 2.0 * x0
    G[:, 0, 1] = 2.0 * y0
    G[:, 1, 2] = 2.0 * x1
    G[:, 1, 3] = 2.0 * y1
    G[:, 2, 0] = l * s1y - sy
    G[:, 2, 1] = -l * s1x + sx
    G[:, 2, 4] = -l * y0
    G[:, 2, 5] = l * x0
    G[:, 2, 6] = 2.0 * l + x0 * s1y - y0 * s1x
    G[:, 3, 2] = l * s1y - sy
    G[:, 3, 3] = -l * s1x - sx
    G[:, 3, 4] = -l * y1
    G[:, 3, 5] = l * x1
    G[:, 3, 6] = 2.0 * l + x1 * s1y - y1 * s1x
    G[:, 4, 0] = -2.0 * ml * dys
    G[:, 4, 1] = 2.0 * ml * dxs
    G[:, 4, 4] = 2.0 * dxs - 2.0 * ml * y0
    G[:, 4, 5] = 2.0 * dys + 2.0 * ml * x0
    G[:, 4, 6] = 2.0 * ml + 2.0 * (x0 * dys - y0 * dxs)
    G[:, 4, 7] = 2.0 * d0
    G[:, 5, 2] = -2.0 * ml * dys
    G[:, 5, 3] = -2.0 * ml * sxs
    G[:, 5, 4] = -2.0 * sxs - 2.0 * ml * y1
    G[:, 5, 5] = 2.0 * dys + 2.0 * ml * x1
    G[:, 5, 6] = 2.0 * ml + 2.0 * (x1 * dys + y1 * sxs)
    G[:, 5, 8] = 2.0 * d1

    grad_f = np.zeros(9)
    grad_f[7] = 1.0
    grad_f[8] = 1.0
    stat = grad_f[None, :] - np.einsum("ni,nip->np", lam, G)

    F = np.empty((n, _N_UNKNOWNS))
    F[:, 0:6] = g
    F[:, 6:15] = stat
    F[:, 15] = 1.0 - k * (y0 + y1)
    return F, G


def _vdc(n: int, base: int) -> float:
    """Van der Corput radical-inverse of n in the given base."""
    v, denom = 0.0, 1.0
    while n:
        n, rem = divmod(n, base)
        denom *= base
        v += rem / denom
    return v


def _case1_seeds(sx: float, sy: float, count: int) -> np.ndarray:
    """Deterministic low-discrepancy seed states, fully initialized."""
    Z = np.zeros((count, _N_UNKNOWNS))
    for j in range(count):
        th0 = 2.0 * math.pi * _vdc(j + 1, 2)
        th1 = 2.0 * math.pi * _vdc(j + 1, 3)
        # keep away from the symmetric manifold y0 + y1 = 0
        while abs(math.sin(th0) + math.sin(th1)) < 0.05:
            th1 += 0.37
        lmag = 0.45 + 1.5 * _vdc(j + 1, 5)
        lv = lmag if j % 2 == 0 else -lmag
        smag = 0.85 * lmag * _vdc(j + 1, 7)
        sang = 2.0 * math.pi * _vdc(j + 1, 11)
        Z[j, 0:7] = (
            math.cos(th0),
            math.sin(th0),
            math.cos(th1),
            math.sin(th1),
            smag * math.cos(sang),
            smag * math.sin(sang),
            lv,
        )
        Z[j, 15] = 1.0 / (Z[j, 1] + Z[j, 3])
    F, G = _case1_system(sx, sy, Z)
    # gaps: g[:,4] = d0^2 - gap0 with d0 = 0 at this point
    gap0 = np.maximum(-F[:, 4], 1e-4)
    gap1 = np.maximum(-F[:, 5], 1e-4)
    Z[:, 7] = np.sqrt(gap0)
    Z[:, 8] = np.sqrt(gap1)
    grad_f = np.zeros(9)
    grad_f[7] = 1.0
    grad_f[8] = 1.0
    _, G = _case1_system(sx, sy, Z)
    for j in range(count):
        lam, *_ = np.linalg.lstsq(G[j].T, grad_f, rcond=None)
        Z[j, 9:15] = lam
    return Z


def case1_numeric(inp: RotatedInput, seed_count: int = 64) -> list[RotatedCandidate]:
    """Non-symmetric critical points by deterministic multi-start Newton.

    The full first-order system (six constraints, nine stationarity rows,
    one deflation row ``1 - k*(y0+y1)`` that excludes the symmetric
    families) is solved by a damped Newton iteration from ``seed_count``
    low-discrepancy seeds.  Converged states (residual below 1e-12) are
    filtered: positive burn sizes, ``|y0+y1| > 1e-6``, elliptic transfer,
    plan residuals below 1e-9.  The list is often empty — for many inputs
    this family has no real solution.
    """
    if inp.s0x == 0:
        return []
    sx, sy = inp.s0x_float, inp.s0y_float
    Z = _case1_seeds(sx, sy, seed_count)
    alive = np.ones(seed_count, dtype=bool)
    done = np.zeros(seed_count, dtype=bool)
    F, _ = _case1_system(sx, sy, Z)
    norms = np.max(np.abs(F), axis=1)

    for _ in range(60):
        act = alive & ~done
        if not act.any():
            break
        idx = np.flatnonzero(act)
        Za = Z[idx]
        Fa, _ = _case1_system(sx, sy, Za)
        J = np.empty((len(idx), _N_UNKNOWNS, _N_UNKNOWNS))
        for j in range(_N_UNKNOWNS):
            h = 1e-7 * np.maximum(1.0, np.abs(Za[:, j]))
            Zp = Za.copy()
            Zp[:, j] += h
            Fp, _ = _case1_system(sx, sy, Zp)
            J[:, :, j] = (Fp - Fa) / h[:, None]
        steps = np.zeros_like(Za)
        for row, i in enumerate(idx):
            try:
                steps[row] = np.linalg.solve(J[row], -Fa[row])
            except np.linalg.LinAlgError:
                alive[i] = False
        for row, i in enumerate(idx):
            if not alive[i]:
                continue
            accepted = False
            for t in (1.0, 0.5, 0.25, 0.1, 0.03, 0.01, 3e-3, 1e-3):
                Znew = Z[i] + t * steps[row]
                Fn, _ = _case1_system(sx, sy, Znew[None, :])
                nn = float(np.max(np.abs(Fn)))
                if math.isfinite(nn) and nn < norms[i] * (1.0 - 1e-4 * t):
                    Z[i] = Znew
                    norms[i] = nn
                    accepted = True
                    break
            if not accepted or norms[i] > 1e10:
                alive[i] = False
            elif norms[i] < 1e-12:
                done[i] = True

    out: list[RotatedCandidate] = []
    for i in np.flatnonzero(done):
        x0, y0, x1, y1, s1x, s1y, lv, d0, d1 = Z[i, 0:9]
        if d0 <= 1e-9 or d1 <= 1e-9:
            continue
        if abs(y0 + y1) <= 1e-6 or abs(lv) < 1e-9:
            continue
        try:
            cand = _assemble(
                inp, "case1", x0, y0, x1, y1, lv, s1x, s1y,
                note="non-symmetric stationary point",
            )
        except EllipticityViolation:
            logger.info("case1 seed %d rejected: transfer orbit not elliptic", i)
            continue
        if cand is not None:
            out.append(cand)
    return _sorted_unique(out)


# --------------------------------------------------------------------------
# winner selection, apse-line reference transfer, sweeps
# --------------------------------------------------------------------------


def elimination_degrees(inp: RotatedInput) -> dict[str, int]:
    """Observed eliminant degrees for this input (asserted internally).

    Keys: ``mirror_full`` (48), ``mirror_core`` (20), and — when
    ``s0y != 0`` so the generic antipodal elimination applies —
    ``antipodal_full`` (166).
    """
    if inp.s0x == 0:
        raise DegenerateGeometry("identical orbits have no elimination pipeline")
    pipe_a = _mirror_pipeline(inp.s0x, inp.s0y)
    out = {
        "mirror_full": pipe_a.degree_full,
        "mirror_core": pipe_a.degree_core,
    }
    if inp.s0y != 0:
        pipe_b = _antipodal_pipeline(inp.s0x, inp.s0y)
        out["antipodal_full"] = pipe_b.degree_full
    return out


_ALL_CASES = ("1", "2a", "2b")


def best_rotated_transfer(
    inp: RotatedInput, cases: Sequence[str] = _ALL_CASES
) -> tuple[RotatedCandidate, list[RotatedCandidate]]:
    """Global minimum-cost candidate and the full ranked candidate list.

    Runs every enabled family solver (``cases`` may restrict to a subset of
    ``{"1", "2a", "2b"}``), pools the validated candidates, and returns the
    cheapest one together with the whole pool sorted by cost.  For
    identical orbits (``s0x = 0``, circular included) the axis closed form
    already produces the zero-cost do-nothing plan and the other families
    are skipped.
    """
    cases = tuple(cases)
    unknown = set(cases) - set(_ALL_CASES)
    if unknown:
        raise ValueError(f"unknown case selector(s): {sorted(unknown)}")
    pool: list[RotatedCandidate] = []
    if "2a" in cases:
        pool.extend(case2a_axis_solutions(inp))
        if inp.s0x != 0:
            pool.extend(case2a_general(inp))
    if "2b" in cases and inp.s0x != 0:
        pool.extend(case2b_solutions(inp))
    if "1" in cases and inp.s0x != 0:
        pool.extend(case1_numeric(inp))
    ranked = _sorted_unique(pool)
    if not ranked:
        raise DegenerateGeometry(
            "no valid candidate for this input with the selected cases"
        )
    return ranked[0], ranked


def _scan_and_refine(fn, lo: float, hi: float, samples: int = 400) -> float:
    """Minimum of fn over [lo, hi]: dense scan, golden-section refinement."""
    if hi <= lo:
        return math.inf
    xs = np.linspace(lo, hi, samples)
    vals = np.array([fn(x) for x in xs])
    i = int(np.argmin(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, samples - 1)]
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > 1e-12:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = fn(d)
    return min(float(vals[i]), fc, fd)


def apogee_to_apogee_cost(inp: RotatedInput) -> float:
    """Cheapest two-impulse transfer burning at the two apogees.

    The burn points are fixed at the apogee of each orbit; the transfer
    orbit through them is a one- or two-parameter family (antiparallel
    apogees leave a free velocity component), minimized by dense scan plus
    golden-section refinement.  This is the classical apse-line reference
    maneuver the free-burn optimum is compared against.

    Raises :class:`DegenerateGeometry` for circular inputs (no apse line)
    and for identical orbits (``alpha = 0``: the apogees coincide).
    """
    ecc = inp.eccentricity
    if ecc < 1e-9:
        raise DegenerateGeometry("circular orbits define no apse line")
    if inp.s0x == 0:
        raise DegenerateGeometry("identical orbits: the apogees coincide")
    sx, sy = inp.s0x_float, inp.s0y_float
    r0 = (-sy / ecc, sx / ecc)
    r1 = (-sy / ecc, -sx / ecc)
    k0 = 1.0 - ecc
    k1 = 1.0 - ecc
    w0 = (sx - r0[1], sy + r0[0])
    w1 = (-sx - r1[1], sy + r1[0])
    cross = r0[0] * r1[1] - r0[1] * r1[0]

    if abs(cross) < 1e-12:
        # antiparallel apogees: fixed |l|, s free along the apse line
        lmag = math.sqrt((k0 + k1) / 2.0)
        t_hat = (-r0[1], r0[0])
        best = math.inf
        for lz in (lmag, -lmag):
            b = (k0 - k1) / (2.0 * lz)
            amax = math.sqrt(max(lz * lz - b * b, 0.0)) - 1e-9

            def cost(a: float, lz=lz, b=b) -> float:
                svec = (a * r0[0] + b * t_hat[0], a * r0[1] + b * t_hat[1])
                w0c = (svec[0] + lz * t_hat[0], svec[1] + lz * t_hat[1])
                w1c = (svec[0] - lz * t_hat[0], svec[1] - lz * t_hat[1])
                return math.hypot(w0c[0] - w0[0], w0c[1] - w0[1]) + math.hypot(
                    w1c[0] - w1[0], w1c[1] - w1[1]
                )

            best = min(best, _scan_and_refine(cost, -amax, amax))
        return best

    def solved_s(lz: float) -> tuple[float, float]:
        # radius constraints: lz^2 + lz*(sy_*rx - sx_*ry) = k at both apogees
        a00, a01 = -lz * r0[1], lz * r0[0]
        a10, a11 = -lz * r1[1], lz * r1[0]
        b0, b1 = k0 - lz * lz, k1 - lz * lz
        det = a00 * a11 - a01 * a10
        return (
            (b0 * a11 - b1 * a01) / det,
            (a00 * b1 - a10 * b0) / det,
        )

    def cost_or_inf(lz: float) -> float:
        sx_, sy_ = solved_s(lz)
        if sx_ * sx_ + sy_ * sy_ >= lz * lz - 1e-12:
            return math.inf
        w0c = (sx_ - lz * r0[1], sy_ + lz * r0[0])
        w1c = (sx_ - lz * r1[1], sy_ + lz * r1[0])
        return math.hypot(w0c[0] - w0[0], w0c[1] - w0[1]) + math.hypot(
            w1c[0] - w1[0], w1c[1] - w1[1]
        )

    lo = math.sqrt(max(k0, k1) / 2.0) * (1.0 + 1e-9)
    hi = 3.0
    best = math.inf
    for sign in (1.0, -1.0):
        best = min(best, _scan_and_refine(lambda t: cost_or_inf(sign * t), lo, hi))
    return best


@dataclass(frozen=True)
class SweepRecord:
    """One cell of an (eccentricity, rotation-angle) parameter sweep."""

    e: float
    alpha: float
    a: int
    b: int
    best_f1: float
    best_case: str
    separation_deg: float
    apogee_f1: float
    ratio_pct: float
    case1_found: bool
    case2b_best_f1: float


SWEEP_COLUMNS = (
    "e",
    "alpha",
    "a",
    "b",
    "best_f1",
    "best_case",
    "separation_deg",
    "apogee_f1",
    "ratio_pct",
    "case1_found",
    "case2b_best_f1",
)


def sweep_record_as_dict(r: SweepRecord) -> dict:
    return {name: getattr(r, name) for name in SWEEP_COLUMNS}


def _sweep_cell(cell: tuple[float, float]) -> SweepRecord:
    e, alpha = cell
    inp = params_from_angle(e, alpha)
    winner, ranked = best_rotated_transfer(inp)
    try:
        apogee = apogee_to_apogee_cost(inp)
    except DegenerateGeometry:
        apogee = math.nan
    ratio = 100.0 * winner.f1 / apogee if apogee and math.isfinite(apogee) else math.nan
    two_b = [c.f1 for c in ranked if c.case_tag.startswith("case2b")]
    return SweepRecord(
        e=e,
        alpha=alpha,
        a=inp.a if inp.a is not None else 0,
        b=inp.b if inp.b is not None else 0,
        best_f1=winner.f1,
        best_case=winner.case_tag,
        separation_deg=winner.separation_angle_deg,
        apogee_f1=apogee,
        ratio_pct=ratio,
        case1_found=any(c.case_tag == "case1" for c in ranked),
        case2b_best_f1=min(two_b) if two_b else math.nan,
    )


def sweep_rotated(
    e_values: Sequence[float],
    alpha_values: Sequence[float],
    workers: int | None = None,
) -> list[SweepRecord]:
    """Solve every (e, alpha) cell; deterministic row order (e outer).

    ``workers > 1`` distributes cells over processes; results keep the
    same order either way.
    """
    cells = [(e, a) for e in e_values for a in alpha_values]
    if workers is not None and workers > 1 and len(cells) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_cell, cells))
    return [_sweep_cell(c) for c in cells]
