from fractions import Fraction

import numpy as np
import pytest
from scipy import stats

from tdiscrim.designs import Design, DiscriminationProblem, t_criterion
from tdiscrim.power import (
    EQUIDISTANT_48,
    T_OPTIMAL_48,
    ExactDesign,
    f_critical,
    f_test_power_analytic,
    f_test_power_mc,
    noncentral_f_sf,
    noncentrality,
    table1,
    table1_csv,
)


class TestExactDesign:
    def test_sizes(self):
        assert T_OPTIMAL_48.size == 48
        assert EQUIDISTANT_48.size == 48
        assert T_OPTIMAL_48.expanded().shape == (48,)

    def test_validation(self):
        with pytest.raises(ValueError):
            ExactDesign([0.0, 2.0], [1, 1])
        with pytest.raises(ValueError):
            ExactDesign([0.0, 0.5], [1, 0])
        with pytest.raises(ValueError):
            ExactDesign([0.0, 0.5], [1, 1.5])
        with pytest.raises(ValueError):
            ExactDesign([0.5, 0.0], [1, 1])


class TestNoncentrality:
    def test_t_optimal_exact(self):
        # every intermediate is a binary fraction, so this is literally exact
        assert noncentrality(T_OPTIMAL_48, 1.0) == 3.0

    def test_equidistant_fraction(self):
        ref = float(Fraction(48 * 144, 3645))
        assert noncentrality(EQUIDISTANT_48, 1.0) == pytest.approx(ref, rel=1e-13)

    def test_scales_with_theta_squared(self):
        assert noncentrality(T_OPTIMAL_48, 2.0) == 12.0
        assert noncentrality(T_OPTIMAL_48, -1.0) == 3.0

    def test_links_to_design_criterion(self):
        # lack-of-fit SS = N times the criterion of the normalized design
        for exact in (T_OPTIMAL_48, EQUIDISTANT_48):
            d = Design(exact.points, exact.counts / exact.size)
            crit = t_criterion(d, DiscriminationProblem(3, b=0.0))
            assert noncentrality(exact, 1.0) == pytest.approx(
                exact.size * crit, rel=1e-12
            )


class TestNoncentralF:
    def test_matches_scipy_across_grid(self):
        crit = f_critical(0.05, 2, 44)
        for lam in (0.0, 0.5, 0.75, 3.0, 6.75, 12.0, 30.0):
            mine = noncentral_f_sf(crit, 2, 44, lam)
            ref = float(stats.ncf.sf(crit, 2, 44, lam)) if lam > 0 else 0.05
            assert mine == pytest.approx(ref, abs=1e-10)

    def test_nonpositive_argument(self):
        assert noncentral_f_sf(0.0, 2, 44, 1.0) == 1.0

    def test_monotone_in_noncentrality(self):
        crit = f_critical(0.05, 2, 44)
        vals = [noncentral_f_sf(crit, 2, 44, lam) for lam in np.linspace(0, 12, 13)]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_validation(self):
        with pytest.raises(ValueError):
            noncentral_f_sf(1.0, 2, 44, -0.5)
        with pytest.raises(ValueError):
            f_critical(0.0, 2, 44)


class TestAnalyticPower:
    def test_level_at_null(self):
        assert f_test_power_analytic(T_OPTIMAL_48, 0.0) == 0.05
        assert f_test_power_analytic(EQUIDISTANT_48, 0.0, level=0.01) == 0.01

    def test_frozen_values(self):
        # noncentral F with df (2, 44) at the 5% critical value
        expect_t = [0.0500, 0.1066, 0.3026, 0.6066, 0.8592]
        expect_e = [0.0500, 0.0849, 0.2039, 0.4141, 0.6609]
        for theta3, ref in zip((0.0, 0.5, 1.0, 1.5, 2.0), expect_t):
            assert f_test_power_analytic(T_OPTIMAL_48, theta3) == pytest.approx(
                ref, abs=5e-5
            )
        for theta3, ref in zip((0.0, 0.5, 1.0, 1.5, 2.0), expect_e):
            assert f_test_power_analytic(EQUIDISTANT_48, theta3) == pytest.approx(
                ref, abs=5e-5
            )

    def test_symmetric_in_theta(self):
        assert f_test_power_analytic(T_OPTIMAL_48, 1.5) == f_test_power_analytic(
            T_OPTIMAL_48, -1.5
        )

    def test_optimal_design_dominates(self):
        for theta3 in (0.5, 1.0, 1.5, 2.0):
            assert f_test_power_analytic(T_OPTIMAL_48, theta3) > f_test_power_analytic(
                EQUIDISTANT_48, theta3
            )


class TestMonteCarloPower:
    def test_agrees_with_analytic(self):
        res = f_test_power_mc(T_OPTIMAL_48, 1.0, reps=20_000, seed=101)
        assert res.consistent
        assert res.std_error == pytest.approx(
            np.sqrt(res.estimate * (1 - res.estimate) / 20_000), rel=1e-12
        )

    def test_holds_level_under_null(self):
        res = f_test_power_mc(EQUIDISTANT_48, 0.0, reps=20_000, seed=7)
        assert res.analytic == 0.05
        assert res.consistent

    def test_deterministic_given_seed(self):
        a = f_test_power_mc(T_OPTIMAL_48, 0.5, reps=2000, seed=33)
        b = f_test_power_mc(T_OPTIMAL_48, 0.5, reps=2000, seed=33)
        assert a.estimate == b.estimate

    def test_reps_gate(self):
        with pytest.raises(ValueError):
            f_test_power_mc(T_OPTIMAL_48, 1.0, reps=10, seed=1)

    def test_rank_deficient_design_rejected(self):
        three = ExactDesign([-1.0, 0.0, 1.0], [16, 16, 16])
        with pytest.raises(ValueError):
            f_test_power_mc(three, 1.0, reps=2000, seed=1)
        with pytest.raises(ValueError):
            f_test_power_analytic(three, 1.0)


class TestTable:
    def test_small_table_consistent(self):
        tab = table1(reps=10_000, seed=3)
        assert set(tab) == {"T-optimal", "Equidistant"}
        for row in tab.values():
            assert len(row) == 5
            assert all(r.consistent for r in row)
            est = [r.estimate for r in row]
            assert all(a <= b + 0.02 for a, b in zip(est, est[1:]))

    def test_reps_gate(self):
        with pytest.raises(ValueError):
            table1(reps=500)

    def test_csv_shape(self):
        tab = table1(reps=10_000, seed=3)
        text = table1_csv(tab, 10_000, 3)
        lines = text.strip().split("\n")
        assert lines[0].startswith("# rng=PCG64")
        assert lines[1] == "design,theta3,mc_power,std_err,analytic_power,reps,seed"
        assert len(lines) == 12
        cells = lines[2].split(",")
        assert cells[0] == "T-optimal"
        assert float(cells[1]) == 0.0
        assert int(cells[5]) == 10_000
