import math

import numpy as np
import pytest

from scx.bessel import first_zero
from scx.comparison import (
    admissible_catalog,
    compare_sc_stab,
    hyperbolic_c,
    hyperbolic_sc,
    make_comparison_case,
    model_eigenfunction,
    positivity_threshold_radius,
    transplant_check,
)
from scx.errors import InvalidKindError, InvalidParameterError
from scx.geometry import (
    make_box,
    make_hyperbolic_ball,
    make_interval,
    make_radial_custom,
    make_space_form_ball,
    make_spherical_cap,
)
from scx.spectral import lambda1_beta, sc_stab


class TestCaseConstruction:
    def test_flat_unit_ball_model(self):
        case = make_comparison_case(make_space_form_ball(3, 0, 1), 0.0, 2.0)
        assert case.model.params == (3, 0.0, 1.0)

    def test_requires_radial_kind(self):
        with pytest.raises(InvalidKindError):
            make_comparison_case(make_box([1, 2]), 0.0, 1.0)

    def test_ricci_violation_rejected_with_node(self):
        # sn = d (1 + 0.3 d^2) has -sn''/sn < 0: fails the kappa = 0 bound
        man = make_radial_custom(
            3, lambda d: np.asarray(d) * (1 + 0.3 * np.asarray(d) ** 2), 0.8,
            warp_prime=lambda d: 1 + 0.9 * np.asarray(d) ** 2)
        with pytest.raises(InvalidParameterError, match="node"):
            make_comparison_case(man, 0.0, 2.0)

    def test_mean_curvature_shortfall_rejected(self):
        # unit flat ball boundary has mean curvature n-1 = 2 < 3
        with pytest.raises(InvalidParameterError, match="mean curvature"):
            make_comparison_case(make_space_form_ball(3, 0, 1), 0.0, 3.0)

    def test_oversized_manifold_rejected(self):
        # model B_{0, 2} for n=3 has radius 1 < 1.5... but the mean curvature
        # precondition already fails; use mu below the boundary value instead
        with pytest.raises(InvalidParameterError):
            make_comparison_case(make_space_form_ball(3, 0, 1.5), 0.0, 2.0)


class TestCompareScStab:
    def test_model_against_itself(self):
        case = make_comparison_case(make_space_form_ball(3, 0, 1), 0.0, 2.0)
        a, b = compare_sc_stab(case, 800)
        assert a == b  # same manifold key, same cached eigensolve

    def test_smaller_euclidean_ball_dominates(self):
        case = make_comparison_case(make_space_form_ball(3, 0, 0.5), 0.0, 2.0)
        a, b = compare_sc_stab(case, 800)
        assert a == pytest.approx(4 * b, rel=1e-5)  # scaling-law oracle
        assert b == pytest.approx(4 * math.pi**2, rel=1e-4)

    def test_cap_inside_hemisphere_model(self):
        case = make_comparison_case(make_spherical_cap(2, 1.2), 1.0, 0.0)
        a, b = compare_sc_stab(case, 800)
        assert b == pytest.approx(10.0, rel=1e-4)
        assert a >= 10.0

    @pytest.mark.parametrize("kappa", [-1.0, 0.0, 1.0])
    def test_admissible_catalog(self, kappa):
        for case in admissible_catalog(kappa, 20, seed=5):
            a, b = compare_sc_stab(case, 500)
            assert a >= b - 1e-6


class TestTransplant:
    def test_model_onto_itself(self):
        case = make_comparison_case(make_space_form_ball(3, 0, 1), 0.0, 2.0)
        assert transplant_check(case, 800)

    def test_euclidean_shrunken_ball(self):
        case = make_comparison_case(make_space_form_ball(3, 0, 0.7), 0.0, 2.0)
        assert transplant_check(case, 800)

    def test_cap_vs_hemisphere(self):
        case = make_comparison_case(make_spherical_cap(2, 1.1), 1.0, 0.0)
        assert transplant_check(case, 800)

    def test_custom_profile(self):
        man = make_radial_custom(
            3, lambda d: np.asarray(d) * (1 - 0.05 * np.asarray(d) ** 2), 0.9,
            warp_prime=lambda d: 1 - 0.15 * np.asarray(d) ** 2)
        case = make_comparison_case(man, 0.0, 2.0)
        assert transplant_check(case, 800)

    def test_model_eigenfunction_solves_ode(self):
        # flat 3-ball: eigenfunction is sin(pi rho)/rho up to scale
        model = make_space_form_ball(3, 0, 1)
        lam = lambda1_beta(model, 0.0, 800).richardson_estimate
        phi = model_eigenfunction(model, lam)
        rho = np.linspace(0.05, 0.95, 19)
        expect = np.sin(math.pi * rho) / (math.pi * rho)
        assert np.allclose(phi(rho), expect, atol=1e-6)


class TestHyperbolic:
    def test_c_matches_definition(self):
        lam = lambda1_beta(make_hyperbolic_ball(3, 2.0), 0.0, 800).lambda1
        assert hyperbolic_c(3, 2.0, 800) == pytest.approx(4 * lam / 4 - 0.25, rel=1e-12)

    @pytest.mark.parametrize("r", [1.0, 2.0, 5.0])
    def test_c_closed_form_n3(self, r):
        # lambda_1 = 1 + pi^2/r^2 exactly in dimension 3
        expect = 1 + (math.pi**2 - 1) / r**2
        assert hyperbolic_c(3, r, 1500) == pytest.approx(expect, rel=1e-5)

    def test_c_limit_large_radius(self):
        c20 = hyperbolic_c(3, 20.0, 2500)
        c40 = hyperbolic_c(3, 40.0, 2500)
        assert c20 > 0.9
        assert abs(c40 - 1) < abs(c20 - 1)

    def test_sc_monotone_decreasing_in_r(self):
        vals = [hyperbolic_sc(3, r, 1000) for r in (0.5, 1, 2, 3, 5, 8)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_small_radius_leading_order(self):
        for n in (2, 3):
            jsq = first_zero(n / 2 - 1).j ** 2
            sc = hyperbolic_sc(n, 0.02, 800)
            assert sc * 0.02**2 / 4 == pytest.approx(jsq, rel=0.02)

    def test_positive_below_threshold(self):
        for n in (2, 3, 4):
            r = 0.99 * positivity_threshold_radius(n)
            assert hyperbolic_sc(n, r, 800) > 0

    def test_limit_value_at_infinity(self):
        # sc -> -(n-1): at r=8 and n=3 the closed form gives -2 + 4 pi^2/64
        assert hyperbolic_sc(3, 8.0, 1500) == pytest.approx(
            -2 + 4 * math.pi**2 / 64, rel=1e-4)


class TestRoundTrip:
    def test_interval_not_comparable(self):
        with pytest.raises(InvalidKindError):
            make_comparison_case(make_interval(0, 1), 0.0, 1.0)
