import math

import numpy as np
import pytest

from scx.errors import InvalidParameterError
from scx.geometry import (
    make_hyperbolic_ball,
    make_interval,
    make_radial_custom,
    make_space_form_ball,
    make_spherical_cap,
)
from scx.spectral import discretize, first_eigenpair, lambda1_beta, operator_grid
from scx.variational import inf_functional, maximize

CATALOG = [
    make_interval(0, 1),
    make_interval(0, 2),
    make_space_form_ball(2, 0, 1),
    make_space_form_ball(3, 0, 1),
    make_spherical_cap(2, math.pi / 2),
    make_spherical_cap(3, math.pi / 2),
    make_hyperbolic_ball(3, 1.0),
]


def bumpy_ball():
    return make_radial_custom(
        3,
        lambda d: np.asarray(d) * (1 - 0.05 * np.asarray(d) ** 2),
        0.9,
        warp_prime=lambda d: 1 - 0.15 * np.asarray(d) ** 2,
    )


class TestInfFunctional:
    def test_constant_theta_on_interval_gives_zero(self):
        assert inf_functional(make_interval(0, 1), np.ones(256), 256) == 0.0

    def test_eigenfunction_attains_four_lambda(self):
        man = make_space_form_ball(2, 0, 1)
        m = 1024
        res = first_eigenpair(discretize(man, 0.25, m))
        val = inf_functional(man, res.eigenfunction, m)
        assert val == pytest.approx(4 * res.lambda1, rel=0.01)

    def test_perturbed_eigenfunction_majorized(self, rng):
        man = make_interval(0, 1)
        m = 1024
        res = first_eigenpair(discretize(man, 0.25, m))
        grid = operator_grid(man, m)
        for _ in range(10):
            eta = rng.normal() * np.sin(math.pi * grid.nodes) \
                + rng.normal() * np.sin(2 * math.pi * grid.nodes)
            theta = res.eigenfunction * np.exp(0.08 * eta)
            val = inf_functional(man, theta, m)
            assert val <= 4 * res.lambda1 * (1 + 0.01)


class TestMaximize:
    def test_interval_reaches_four_pi_squared(self):
        rep = maximize(make_interval(0, 1), trials=40, seed=3, m=1024)
        assert rep.best_value == pytest.approx(4 * math.pi**2, rel=0.01)

    def test_hemisphere_reaches_ten(self):
        rep = maximize(make_spherical_cap(2, math.pi / 2), trials=40, seed=3, m=1024)
        assert rep.best_value == pytest.approx(10.0, rel=0.01)

    def test_single_trial_is_constant_function(self):
        # theta == 1 gives inf sigma
        rep = maximize(make_spherical_cap(2, math.pi / 2), trials=1, seed=0, m=256)
        assert rep.best_value == pytest.approx(2.0, abs=1e-9)
        assert rep.trials == 1

    def test_gap_and_report_fields(self):
        rep = maximize(make_interval(0, 1), trials=25, seed=5, m=512)
        assert rep.gap == rep.eigen_value - rep.best_value
        assert rep.gap >= -0.01 * abs(rep.eigen_value)
        assert rep.trials == 25

    def test_trials_must_be_positive(self):
        with pytest.raises(InvalidParameterError):
            maximize(make_interval(0, 1), trials=0)


class TestMajorization:
    @pytest.mark.parametrize("man", CATALOG, ids=lambda m: m.describe())
    def test_two_hundred_seeded_trials(self, man):
        rep = maximize(man, trials=200, seed=11, m=1024)
        bound = 0.01 * abs(rep.eigen_value)
        assert rep.best_value <= rep.eigen_value + bound
        assert abs(rep.best_value - rep.eigen_value) <= bound  # attainment

    def test_strictness_on_nonconstant_curvature(self):
        man = bumpy_ball()
        grid = operator_grid(man, 512)
        sigma = grid.sigma
        assert sigma.max() - sigma.min() > 1e-3  # genuinely non-constant
        rep = maximize(man, trials=50, seed=2, m=1024)
        assert rep.best_value > sigma.min() + 1.0

    def test_beta_shift_consistency(self):
        # the eigen_value reported equals 4 lambda_1 at beta = 1/4
        man = make_spherical_cap(2, math.pi / 2)
        rep = maximize(man, trials=5, seed=0, m=512)
        lam = lambda1_beta(man, 0.25, 1024).lambda1
        assert rep.eigen_value == pytest.approx(4 * lam, rel=1e-6)
