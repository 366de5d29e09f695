"""Tests for the rotated-ellipse transfer solver.

Reference values were frozen from an independent arbitrary-precision
implementation (sympy mpmath at 30 digits, driven by a separate script)
before this module was written; the exact pipelines here must reproduce
them.  The brute-force grid oracle provides a second, fully independent
check on the winners.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from orbita.kepler import Vec3
from orbita.oracle import OracleConfig, planar_two_impulse_min
from orbita.poly_kernel import Q, as_fraction
from orbita.rotated_ellipses import (
    SWEEP_COLUMNS,
    DegenerateGeometry,
    RotatedCandidate,
    RotatedInput,
    _case1_system,
    apogee_to_apogee_cost,
    best_rotated_transfer,
    candidate_as_dict,
    case1_numeric,
    case2a_axis_solutions,
    case2a_general,
    case2b_solutions,
    elimination_degrees,
    params_from_angle,
    separation_angle,
    sweep_record_as_dict,
    sweep_rotated,
)
from orbita.transfer_model import impulses, scale_plan, validate_plan

# the two reference geometries every family is frozen against
REF = RotatedInput(s0x=Q(3, 10), s0y=Q(2, 5))  # e = 0.5, alpha ~ 73.74 deg
REF180 = RotatedInput(s0x=Q(1, 2), s0y=Q(0))  # e = 0.5, alpha = 180 deg


@pytest.fixture(scope="module")
def ref_axis():
    return case2a_axis_solutions(REF)


@pytest.fixture(scope="module")
def ref_mirror():
    return case2a_general(REF)


@pytest.fixture(scope="module")
def ref_antipodal():
    return case2b_solutions(REF)


@pytest.fixture(scope="module")
def ref_case1():
    return case1_numeric(REF)


@pytest.fixture(scope="module")
def ref_best(ref_axis, ref_mirror, ref_antipodal, ref_case1):
    return best_rotated_transfer(REF)


@pytest.fixture(scope="module")
def ref180_best():
    return best_rotated_transfer(REF180)


def max_equality_residual(c: RotatedCandidate) -> float:
    return max(
        r.value for r in validate_plan(c.plan) if r.kind == "equality"
    )


# --------------------------------------------------------------------------
# input type
# --------------------------------------------------------------------------


class TestRotatedInput:
    def test_exact_storage(self):
        assert REF.s0x == Q(3, 10)
        assert REF.s0y == Q(2, 5)
        assert REF.eccentricity == pytest.approx(0.5, abs=1e-15)
        assert REF.alpha_deg == pytest.approx(73.73979529168804, abs=1e-12)

    def test_rejects_non_elliptic(self):
        with pytest.raises(ValueError):
            RotatedInput(s0x=Q(4, 5), s0y=Q(3, 5))  # e = 1 exactly
        with pytest.raises(ValueError):
            RotatedInput(s0x=Q(2), s0y=Q(0))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            RotatedInput(s0x=float("nan"), s0y=0.0)

    def test_from_floats_snaps_to_small_denominators(self):
        inp = RotatedInput.from_floats(0.3, 0.4)
        assert inp.s0x == Q(3, 10)
        assert inp.s0y == Q(2, 5)

    def test_orbits_are_mirror_images(self):
        o0, o2 = REF.orbit0, REF.orbit2
        assert o0.s.x == -o2.s.x
        assert o0.s.y == o2.s.y
        assert o0.l.z == o2.l.z == 1.0

    def test_degenerate_flags(self):
        assert RotatedInput(s0x=Q(0), s0y=Q(0)).is_circular
        assert RotatedInput(s0x=Q(0), s0y=Q(2, 5)).is_identical
        assert not REF.is_identical

    def test_alpha_at_the_ends(self):
        assert RotatedInput(s0x=Q(1, 2), s0y=Q(0)).alpha_deg == pytest.approx(180.0)
        assert RotatedInput(s0x=Q(0), s0y=Q(1, 2)).alpha_deg == pytest.approx(0.0)


# --------------------------------------------------------------------------
# exact angle parametrization
# --------------------------------------------------------------------------


class TestParamsFromAngle:
    def test_reference_pair_is_pythagorean(self):
        inp = params_from_angle(0.5, 73.73979529168804)
        assert (inp.a, inp.b) == (2, 1)
        assert inp.s0x == Q(3, 10)
        assert inp.s0y == Q(2, 5)

    def test_right_angle_pair(self):
        inp = params_from_angle(0.5, 90.0)
        assert (inp.a, inp.b) == (169, 70)
        assert abs(inp.alpha_deg - 90.0) < 0.01

    def test_axis_aligned_conventions(self):
        flat = params_from_angle(0.5, 180.0)
        assert flat.s0x == Q(1, 2) and flat.s0y == 0 and flat.b == 0
        same = params_from_angle(0.3, 0.0)
        assert same.s0x == 0 and same.s0y == Q(3, 10)
        circ = params_from_angle(0.0, 45.0)
        assert circ.is_circular

    def test_eccentricity_is_exact(self):
        for e, alpha in [(0.25, 50.0), (0.8, 10.0), (0.5, 125.0), (0.7, 85.0)]:
            inp = params_from_angle(e, alpha)
            sx = Fraction(as_fraction(inp.s0x))
            sy = Fraction(as_fraction(inp.s0y))
            er = Fraction(e).limit_denominator(10**6)
            assert sx * sx + sy * sy == er * er

    def test_angle_accuracy_across_grid(self):
        for alpha in range(5, 180, 5):
            inp = params_from_angle(0.5, float(alpha))
            assert abs(inp.alpha_deg - alpha) < 0.01, alpha

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            params_from_angle(1.0, 90.0)
        with pytest.raises(ValueError):
            params_from_angle(0.5, -5.0)
        with pytest.raises(ValueError):
            params_from_angle(0.5, 200.0)


# --------------------------------------------------------------------------
# axis-burn closed forms
# --------------------------------------------------------------------------


class TestAxisSolutions:
    def test_reference_values(self, ref_axis):
        assert [c.case_tag for c in ref_axis] == ["case2a_axis", "case2a_axis"]
        lo, hi = ref_axis
        assert lo.f1 == pytest.approx(0.2733200530681511, abs=1e-14)
        assert lo.l1z == pytest.approx(0.8366600265340756, abs=1e-14)
        assert lo.burn0.y == 1.0 and lo.burn1.y == -1.0
        assert hi.f1 == pytest.approx(0.3196491498017240, abs=1e-14)
        assert hi.l1z == pytest.approx(1.1401754250991380, abs=1e-14)
        assert hi.burn0.y == -1.0

    def test_flat_geometry_values(self):
        cands = case2a_axis_solutions(REF180)
        assert cands[0].f1 == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-15)
        assert cands[0].l1z == pytest.approx(math.sqrt(0.5), abs=1e-15)
        assert cands[0].separation_angle_deg == pytest.approx(0.0, abs=1e-9)
        assert cands[1].f1 == pytest.approx(3.0 - 2.0 * math.sqrt(1.5), abs=1e-15)
        assert cands[1].separation_angle_deg == pytest.approx(180.0, abs=1e-9)

    def test_non_elliptic_branch_is_dropped(self):
        # u = 1 - s0x = 1/2 <= s0y^2 = 9/16: the y0=+1 branch cannot exist
        cands = case2a_axis_solutions(RotatedInput(s0x=Q(1, 2), s0y=Q(3, 4)))
        assert len(cands) == 1
        assert cands[0].burn0.y == -1.0

    def test_separation_angles(self, ref_axis):
        # apogee of orbit0 is at (-0.8, 0.6); burns are on the y axis
        assert ref_axis[0].separation_angle_deg == pytest.approx(
            53.13010235415599, abs=1e-9
        )
        assert ref_axis[1].separation_angle_deg == pytest.approx(
            126.86989764584402, abs=1e-9
        )

    def test_identical_orbits_cost_nothing(self):
        cands = case2a_axis_solutions(RotatedInput(s0x=Q(0), s0y=Q(2, 5)))
        assert cands and cands[0].f1 == pytest.approx(0.0, abs=1e-15)


# --------------------------------------------------------------------------
# mirror-symmetric family (exact elimination)
# --------------------------------------------------------------------------

MIRROR_FROZEN = [
    # (f1, y0, x0, l1z, s1y) sorted by f1
    (0.26170279632476284, 0.95897562828903601, -0.28348852595413563,
     0.82209486105372643, 0.33008619239582575),
    (0.31242068563915581, -0.95804011828936159, -0.28663414267687311,
     1.1519489895925237, 0.46709189237639933),
    (3.6200339208851327, 0.55226273603971085, 0.83367012084033134,
     -2.0948066097671465, 1.8440601609835042),
    (5.0653295398159011, -0.88694117633541839, 0.46188239814994495,
     -1.4174847393761069, 0.85293734230458708),
]


class TestMirrorGeneral:
    def test_reference_candidates(self, ref_mirror):
        assert len(ref_mirror) == 4
        for c, (f1, y0, x0, l1z, s1y) in zip(ref_mirror, MIRROR_FROZEN):
            assert c.case_tag == "case2a_general"
            assert c.f1 == pytest.approx(f1, abs=1e-11)
            assert c.burn0.y == pytest.approx(y0, abs=1e-11)
            assert c.burn0.x == pytest.approx(x0, abs=1e-11)
            assert c.l1z == pytest.approx(l1z, abs=1e-11)
            assert c.s1y == pytest.approx(s1y, abs=1e-11)
            assert c.s1x == 0.0
            # mirror structure of the burns
            assert c.burn1.x == pytest.approx(c.burn0.x, abs=0)
            assert c.burn1.y == pytest.approx(-c.burn0.y, abs=0)

    def test_plan_residuals(self, ref_mirror):
        for c in ref_mirror:
            assert max_equality_residual(c) < 1e-9

    def test_flat_geometry_mirror_pair(self):
        # s0y = 0 degenerates the parity split; the fallback must still
        # recover the interior pair (frozen independently)
        cands = case2a_general(REF180)
        assert len(cands) == 2
        for c in cands:
            assert c.f1 == pytest.approx(2.4508993568006986, abs=1e-11)
            assert abs(c.burn0.x) == pytest.approx(0.79619572172064175, abs=1e-11)
            assert c.burn0.y == pytest.approx(0.60503914973640045, abs=1e-11)
            assert c.l1z == pytest.approx(-1.4820308031326710, abs=1e-11)
            assert abs(c.s1y) == pytest.approx(1.2702982351392564, abs=1e-11)
        assert cands[0].burn0.x == pytest.approx(-cands[1].burn0.x, abs=1e-15)

    def test_identical_orbits_rejected(self):
        with pytest.raises(DegenerateGeometry):
            case2a_general(RotatedInput(s0x=Q(0), s0y=Q(2, 5)))

    def test_spurious_quartic_never_has_real_roots(self):
        # discriminant of the stripped quartic factor's quadratic is
        # 4*s0y^2*(e^2 - 1) < 0 for every elliptic input
        rng = np.random.default_rng(5)
        for _ in range(50):
            sx, sy = rng.uniform(-0.7, 0.7, size=2)
            if sx * sx + sy * sy >= 1 or sx == 0 or sy == 0:
                continue
            disc = 4.0 * (sx * sx - (sx * sx + sy * sy) * (1.0 - sy * sy))
            assert disc < 0


# --------------------------------------------------------------------------
# antipodal family (closed forms + exact elimination)
# --------------------------------------------------------------------------

ANTIPODAL_FROZEN = [
    # (l1z, y0, x0_mag, s1y, s1x_at_positive_x0, f1) sorted by f1
    (-0.96525197738643387, 0.22762873383859783, 0.97374799590604385,
     -0.40000000000000000, 0.061598321898559803, 3.8386490556181473),
    (-0.97697280064392685, 0.15174715600653986, 0.98841934453142248,
     -0.40942797971075380, 0.0, 3.9081563195378415),
    (-0.98986442636806309, 0.067228058036751326, 0.99773763495851313,
     -0.44986567242989396, -0.67927563764832061, 4.2046363473958677),
]


class TestAntipodalSolutions:
    def test_closed_forms(self, ref_antipodal):
        closed = [c for c in ref_antipodal if c.case_tag == "case2b_closed"]
        assert len(closed) == 2
        prograde, retrograde = closed
        assert prograde.l1z == 1.0
        assert prograde.f1 == pytest.approx(0.6, abs=1e-15)
        assert prograde.s1x == 0.0 and prograde.s1y == pytest.approx(0.4, abs=0)
        assert "s1x" in prograde.note  # the one-parameter family annotation
        assert retrograde.l1z == -1.0
        assert retrograde.f1 == pytest.approx(
            2.0 * math.sqrt(4.0 + 0.09), abs=1e-14
        )
        assert retrograde.s1x == pytest.approx(-0.12, abs=1e-15)
        assert retrograde.s1y == pytest.approx(-0.4, abs=1e-15)
        assert "dominated" in retrograde.note
        assert prograde.burn0.x == 1.0 and prograde.burn1.x == -1.0

    def test_general_candidates(self, ref_antipodal):
        general = [c for c in ref_antipodal if c.case_tag == "case2b_general"]
        assert len(general) == 6  # three roots, two burn-sign branches each
        by_l: dict[float, list] = {}
        for c in general:
            match = [k for k in by_l if abs(k - c.l1z) < 1e-10]
            by_l.setdefault(match[0] if match else c.l1z, []).append(c)
        assert len(by_l) == 3
        got = sorted(by_l.items(), key=lambda kv: min(c.f1 for c in kv[1]))
        for (lv, pair), (l1z, y0, x0m, s1y, s1x_pos, f1) in zip(
            got, ANTIPODAL_FROZEN
        ):
            assert lv == pytest.approx(l1z, abs=1e-12)
            assert len(pair) == 2
            xs = sorted(c.burn0.x for c in pair)
            assert xs[0] == pytest.approx(-x0m, abs=1e-10)
            assert xs[1] == pytest.approx(x0m, abs=1e-10)
            for c in pair:
                assert c.f1 == pytest.approx(f1, abs=1e-11)
                assert c.burn0.y == pytest.approx(y0, abs=1e-10)
                assert c.s1y == pytest.approx(s1y, abs=1e-10)
                assert c.burn1.x == pytest.approx(-c.burn0.x, abs=0)
                assert c.burn1.y == pytest.approx(-c.burn0.y, abs=0)
                if c.burn0.x > 0:
                    assert c.s1x == pytest.approx(s1x_pos, abs=1e-10)

    def test_plan_residuals(self, ref_antipodal):
        for c in ref_antipodal:
            assert max_equality_residual(c) < 1e-9

    def test_flat_geometry_has_only_closed_forms(self):
        # at alpha = 180 both reduced stationarity polynomials are odd in
        # s1y; the solver proves the general family empty in exact
        # arithmetic and returns the two closed forms only
        cands = case2b_solutions(REF180)
        assert [c.case_tag for c in cands] == ["case2b_closed", "case2b_closed"]
        assert cands[0].f1 == pytest.approx(1.0, abs=1e-15)
        assert cands[1].f1 == pytest.approx(2.0 * math.sqrt(4.25), abs=1e-14)
        assert cands[1].s1x == 0.0 and cands[1].s1y == 0.0

    def test_include_general_flag(self):
        cands = case2b_solutions(REF, include_general=False)
        assert [c.case_tag for c in cands] == ["case2b_closed", "case2b_closed"]

    def test_identical_orbits_rejected(self):
        with pytest.raises(DegenerateGeometry):
            case2b_solutions(RotatedInput(s0x=Q(0), s0y=Q(2, 5)))


# --------------------------------------------------------------------------
# non-symmetric family (deterministic Newton)
# --------------------------------------------------------------------------


class TestCase1Numeric:
    def test_reference_pair(self, ref_case1):
        # the reference geometry has exactly one non-symmetric critical
        # orbit, found twice (once per burn ordering)
        assert len(ref_case1) == 2
        for c in ref_case1:
            assert c.case_tag == "case1"
            assert c.f1 == pytest.approx(3.6117426280, abs=1e-6)
            assert abs(c.burn0.y + c.burn1.y) > 1e-6
            assert max_equality_residual(c) < 1e-9

    def test_flat_geometry_is_empty(self):
        assert case1_numeric(REF180) == []

    def test_identical_orbits_is_empty(self):
        assert case1_numeric(RotatedInput(s0x=Q(0), s0y=Q(2, 5))) == []

    def test_constraint_gradients_match_finite_differences(self):
        rng = np.random.default_rng(7)
        Z = rng.normal(scale=0.8, size=(4, 16))
        Z[:, 6] += 1.5  # keep l away from 0
        Z[:, 7:9] = np.abs(Z[:, 7:9]) + 0.5
        sx, sy = 0.3, 0.4
        F, G = _case1_system(sx, sy, Z)
        h = 1e-6
        for j in range(9):
            Zp = Z.copy()
            Zm = Z.copy()
            Zp[:, j] += h
            Zm[:, j] -= h
            Fp, _ = _case1_system(sx, sy, Zp)
            Fm, _ = _case1_system(sx, sy, Zm)
            fd = (Fp[:, 0:6] - Fm[:, 0:6]) / (2.0 * h)
            assert np.max(np.abs(fd - G[:, :, j])) < 1e-5

    def test_stationarity_rows_match_lagrangian_differences(self):
        rng = np.random.default_rng(11)
        Z = rng.normal(scale=0.7, size=(3, 16))
        Z[:, 7:9] = np.abs(Z[:, 7:9]) + 0.4
        sx, sy = 0.3, 0.4
        F, _ = _case1_system(sx, sy, Z)

        def lagrangian(Zrow):
            Fr, _ = _case1_system(sx, sy, Zrow[None, :])
            g = Fr[0, 0:6]
            return Zrow[7] + Zrow[8] - float(np.dot(Zrow[9:15], g))

        h = 1e-6
        for i in range(Z.shape[0]):
            for j in range(9):
                Zp = Z[i].copy()
                Zm = Z[i].copy()
                Zp[j] += h
                Zm[j] -= h
                fd = (lagrangian(Zp) - lagrangian(Zm)) / (2.0 * h)
                assert abs(fd - F[i, 6 + j]) < 1e-5


# --------------------------------------------------------------------------
# winner selection and ranking
# --------------------------------------------------------------------------


class TestBestRotatedTransfer:
    def test_reference_winner(self, ref_best):
        winner, ranked = ref_best
        assert winner.case_tag == "case2a_general"
        assert winner.f1 == pytest.approx(0.26170279632476284, abs=1e-12)
        assert len(ranked) == 16  # 2 axis + 4 mirror + 8 antipodal + 2 case1
        assert [c.f1 for c in ranked] == sorted(c.f1 for c in ranked)

    def test_winner_beats_grid_oracle(self, ref_best):
        winner, _ = ref_best
        _, val = planar_two_impulse_min(
            REF.orbit0, REF.orbit2, "f1", OracleConfig(grid_points_per_dim=48)
        )
        assert winner.f1 <= val + 1e-5 * max(1.0, val)

    def test_flat_geometry_winner_is_axis(self, ref180_best):
        winner, _ = ref180_best
        assert winner.case_tag == "case2a_axis"
        assert winner.f1 == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-14)
        assert winner.separation_angle_deg == pytest.approx(0.0, abs=1e-6)

    def test_case_selector(self):
        winner, ranked = best_rotated_transfer(REF, cases=("2a",))
        assert all(c.case_tag.startswith("case2a") for c in ranked)
        assert winner.f1 == pytest.approx(0.26170279632476284, abs=1e-12)
        with pytest.raises(ValueError):
            best_rotated_transfer(REF, cases=("2c",))

    def test_identical_orbits_do_nothing(self):
        winner, _ = best_rotated_transfer(RotatedInput(s0x=Q(0), s0y=Q(2, 5)))
        assert winner.f1 == pytest.approx(0.0, abs=1e-15)
        winner, _ = best_rotated_transfer(RotatedInput(s0x=Q(0), s0y=Q(0)))
        assert winner.f1 == pytest.approx(0.0, abs=1e-15)

    def test_mirror_input_symmetry(self, ref_best):
        flipped, _ = best_rotated_transfer(RotatedInput(s0x=Q(-3, 10), s0y=Q(2, 5)))
        assert flipped.f1 == pytest.approx(ref_best[0].f1, abs=1e-12)

    def test_candidate_dict_round_trip(self, ref_best):
        d = candidate_as_dict(ref_best[0])
        assert d["case"] == "case2a_general"
        assert d["f1"] == ref_best[0].f1
        assert len(d["deltas"]) == 2
        assert set(d) >= {"burn0", "burn1", "l1z", "s1x", "s1y", "plan", "note"}


# --------------------------------------------------------------------------
# structural invariants
# --------------------------------------------------------------------------


class TestInvariants:
    def test_elimination_degrees(self):
        assert elimination_degrees(REF) == {
            "mirror_full": 48,
            "mirror_core": 20,
            "antipodal_full": 166,
        }
        # the flat geometry has no generic antipodal eliminant
        assert elimination_degrees(REF180) == {
            "mirror_full": 48,
            "mirror_core": 20,
        }

    def test_scaling_covariance(self, ref_best):
        winner, _ = ref_best
        for c in (0.37, 2.0, 5.5):
            scaled = scale_plan(winner.plan, c)
            assert impulses(scaled).f1 == pytest.approx(
                c * winner.f1, rel=1e-12
            )

    def test_all_candidates_have_elliptic_transfers(self, ref_best):
        _, ranked = ref_best
        for c in ranked:
            o = c.transfer_orbit
            assert math.hypot(o.s.x, o.s.y) < abs(o.l.z)

    def test_all_candidates_pass_plan_validation(self, ref_best):
        _, ranked = ref_best
        assert all(max_equality_residual(c) < 1e-9 for c in ranked)

    def test_separation_angle_range_and_circular_convention(self, ref_best):
        _, ranked = ref_best
        for c in ranked:
            assert 0.0 <= c.separation_angle_deg <= 180.0
        circ = RotatedInput(s0x=Q(0), s0y=Q(0))
        winner, _ = best_rotated_transfer(circ)
        assert separation_angle(winner, circ) == 0.0

    def test_axis_dominates_prograde_antipodal(self):
        # closed-form comparison: min axis cost < 2|s0x| for many inputs
        for s0x_num in range(1, 10):
            s0x = Q(s0x_num, 10)
            cands = case2a_axis_solutions(RotatedInput(s0x=s0x, s0y=Q(0)))
            assert cands[0].f1 < 2.0 * float(as_fraction(s0x))


# --------------------------------------------------------------------------
# apse-line reference transfer
# --------------------------------------------------------------------------


class TestApogeeToApogee:
    def test_reference_value(self):
        assert apogee_to_apogee_cost(REF) == pytest.approx(
            0.3492463683695513, abs=1e-9
        )

    def test_flat_geometry_matches_winner(self, ref180_best):
        winner, _ = ref180_best
        ap = apogee_to_apogee_cost(REF180)
        assert winner.f1 / ap == pytest.approx(1.0, abs=1e-9)

    def test_reference_winner_saves_fuel(self, ref_best):
        winner, _ = ref_best
        ap = apogee_to_apogee_cost(REF)
        assert winner.f1 < 0.75 * ap

    def test_degenerate_geometries(self):
        with pytest.raises(DegenerateGeometry):
            apogee_to_apogee_cost(RotatedInput(s0x=Q(0), s0y=Q(0)))
        with pytest.raises(DegenerateGeometry):
            apogee_to_apogee_cost(RotatedInput(s0x=Q(0), s0y=Q(2, 5)))


# --------------------------------------------------------------------------
# sweep
# --------------------------------------------------------------------------


class TestSweep:
    def test_single_flat_cell(self):
        records = sweep_rotated([0.5], [180.0])
        assert len(records) == 1
        r = records[0]
        assert r.best_case == "case2a_axis"
        assert r.best_f1 == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-12)
        assert r.ratio_pct == pytest.approx(100.0, abs=1e-6)
        assert r.separation_deg == pytest.approx(0.0, abs=1e-6)
        assert r.case1_found is False
        assert r.case2b_best_f1 == pytest.approx(1.0, abs=1e-12)
        assert (r.a, r.b) == (1, 0)

    def test_record_dict_column_order(self):
        records = sweep_rotated([0.5], [180.0])
        d = sweep_record_as_dict(records[0])
        assert tuple(d) == SWEEP_COLUMNS
