import json

import numpy as np
import pytest

from tdiscrim.checks import (
    alternation_check,
    appendix_identity,
    equivalence_system,
    global_inequality,
    verification_report,
)
from tdiscrim.closed_form import critical_b, t_optimal_design, zero_b_family
from tdiscrim.designs import Design
from tdiscrim.minimax import closed_form_psi
from tdiscrim.polynomials import Polynomial, chebyshev_t


class TestEquivalenceSystem:
    def test_family_member_with_quarter_chebyshev(self):
        d = zero_b_family(3, 0.5).design
        psi = 0.25 * chebyshev_t(3)
        res = equivalence_system(d, psi, 3)
        assert res.shape == (2,)
        assert np.abs(res).max() <= 1e-12

    def test_optimal_quintic(self):
        d = t_optimal_design(5, 0.4).design
        res = equivalence_system(d, closed_form_psi(5, 0.4), 5)
        assert np.abs(res).max() <= 1e-10

    def test_two_point_design_fails_first_moment(self):
        d = Design([-1.0, 1.0], [0.5, 0.5])
        psi = 0.25 * chebyshev_t(3)
        res = equivalence_system(d, psi, 3)
        assert abs(res[0]) <= 1e-15
        assert res[1] == pytest.approx(0.25, rel=1e-12)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_all_regime_designs_pass(self, n):
        for b in np.linspace(-critical_b(n), critical_b(n), 7):
            d = (zero_b_family(n, 0.5) if b == 0.0
                 else t_optimal_design(n, float(b))).design
            res = equivalence_system(d, closed_form_psi(n, float(b)), n)
            assert np.abs(res).max() <= 1e-10

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            equivalence_system(Design([0.0], [1.0]), chebyshev_t(2), 1)


class TestAppendixIdentity:
    @pytest.mark.parametrize("n,k", [(3, 0), (3, 1), (6, 2), (10, 0), (10, 8)])
    def test_examples_vanish(self, n, k):
        assert abs(appendix_identity(n, k)) <= 1e-12

    @pytest.mark.parametrize("n", range(2, 13))
    def test_full_sweep(self, n):
        for k in range(n - 1):
            assert abs(appendix_identity(n, k)) <= 1e-12

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            appendix_identity(5, 4)
        with pytest.raises(ValueError):
            appendix_identity(5, -1)


class TestAlternation:
    def test_passes_on_optimal_design(self):
        d = t_optimal_design(5, 0.4).design
        rep = alternation_check(d, closed_form_psi(5, 0.4))
        assert rep.passed
        assert bool(rep)
        assert np.all(rep.signs[:-1] * rep.signs[1:] == -1)
        assert rep.spread <= 1e-12

    def test_passes_on_family_support(self):
        d = zero_b_family(4, 0.3).design
        rep = alternation_check(d, closed_form_psi(4, 0.0))
        assert rep.passed
        assert rep.signs.size == 5

    def test_fails_on_wrong_design(self):
        d = Design([-1.0, 0.0, 1.0], [0.25, 0.5, 0.25])
        rep = alternation_check(d, closed_form_psi(3, 0.5))
        assert not rep.passed

    def test_fails_on_magnitude_spread(self):
        d = Design([-0.9, 0.1, 0.9], [0.3, 0.4, 0.3])
        rep = alternation_check(d, chebyshev_t(3))
        assert not rep.passed
        assert rep.spread > 1e-3


class TestGlobalInequality:
    def test_zero_margin_at_optimum(self):
        psi = closed_form_psi(4, 0.2)
        d = t_optimal_design(4, 0.2).design
        level = float(np.sum(d.weights * psi(d.points) ** 2))
        assert abs(global_inequality(psi, level)) <= 1e-9

    def test_positive_margin_when_level_low(self):
        psi = closed_form_psi(4, 0.2)
        assert global_inequality(psi, 0.5 * psi(1.0) ** 2) > 0.0

    def test_requires_level_for_bare_polynomial(self):
        with pytest.raises(ValueError):
            global_inequality(chebyshev_t(3))


class TestVerificationReport:
    def test_full_pass_in_regime(self):
        d = t_optimal_design(4, 0.3).design
        rep = verification_report(d, 4, 0.3)
        assert rep["passed"]
        assert rep["psi_route"] == "closed_form"
        assert {c["name"] for c in rep["checks"]} == {
            "equivalence_system",
            "alternation",
            "criterion_matches_deviation",
            "global_inequality",
        }
        json.dumps(rep)

    def test_family_design_passes_at_zero(self):
        d = zero_b_family(5, 0.25).design
        rep = verification_report(d, 5, 0.0)
        assert rep["passed"]

    def test_wrong_design_fails(self):
        d = Design([-1.0, 0.0, 1.0], [1 / 3, 1 / 3, 1 / 3])
        rep = verification_report(d, 3, 0.5)
        assert not rep["passed"]

    def test_remez_route_outside_regime(self):
        from tdiscrim.continuation import solve_at

        state = solve_at(3, 1.0 / 1.5)
        rep = verification_report(state.design(), 3, 1.5)
        assert rep["psi_route"] == "remez"
        assert rep["passed"]
