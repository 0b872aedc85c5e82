"""Invariant-measure quadrature: normalization, orthogonality, exactness."""
import math

import numpy as np
import pytest

from wignerkit.exactcomb import HalfInt, spin_range, spins_up_to
from wignerkit.group import sample_haar
from wignerkit.haar import (
    ExactnessBudget,
    addition_formula_check,
    build_grid,
    character_norm,
    integrate,
    jacobi_orthogonality_check,
    legendre_product_check,
    pairwise_sum,
    schur_check,
)
from wignerkit.wigner import oracle_matrix, tmn_sum

HALF = HalfInt(1)


class TestGridConstruction:
    def test_budget_thresholds(self):
        budget = ExactnessBudget(HalfInt(1))
        assert budget.min_n_theta == 2
        assert budget.min_n_phi == 3
        assert budget.min_n_psi == 3

    def test_weights_sum_to_one(self):
        for twice in range(0, 7):
            grid = build_grid(HalfInt(twice))
            assert abs(grid.weights.sum() - 1.0) <= 1e-13

    def test_weights_positive(self):
        grid = build_grid(HalfInt(3))
        assert np.all(grid.weights > 0)

    def test_max_exact_l_roundtrip(self):
        for twice in range(0, 7):
            assert build_grid(HalfInt(twice)).max_exact_l().twice == twice

    def test_overrides(self):
        grid = build_grid(HalfInt(1), n_theta=5, n_phi=9, n_psi=11)
        assert (grid.n_theta, grid.n_phi, grid.n_psi) == (5, 9, 11)
        assert abs(grid.weights.sum() - 1.0) <= 1e-13

    def test_node_iteration_matches_count(self):
        grid = build_grid(HalfInt(2))
        assert len(list(grid.nodes())) == grid.node_count == grid.n_theta * grid.n_phi * grid.n_psi


class TestPairwiseSum:
    def test_matches_plain_sum(self):
        rng = np.random.default_rng(0)
        values = rng.normal(size=1001)
        assert pairwise_sum(values) == pytest.approx(values.sum(), rel=1e-13)

    def test_deterministic(self):
        rng = np.random.default_rng(1)
        values = rng.normal(size=777)
        assert pairwise_sum(values) == pairwise_sum(values.copy())

    def test_axis0_on_matrices(self):
        values = np.arange(12.0).reshape(4, 3)
        assert np.allclose(pairwise_sum(values), values.sum(axis=0))


class TestIntegrate:
    def test_normalization(self):
        grid = build_grid(HalfInt(0))
        assert abs(integrate(grid, lambda g: 1.0) - 1.0) <= 1e-13

    def test_single_element_integrates_to_zero(self):
        # orthogonality against the trivial representation
        grid = build_grid(HALF)
        value = integrate(grid, lambda g: oracle_matrix(HALF, g).entry(HALF, HALF))
        assert abs(value) <= 1e-15

    def test_squared_element_is_inverse_dimension(self):
        grid = build_grid(HALF)
        value = integrate(grid, lambda g: abs(oracle_matrix(HALF, g).entry(HALF, HALF)) ** 2)
        assert value.real == pytest.approx(0.5, abs=1e-13)

    def test_nonfinite_integrand_reports_node(self):
        grid = build_grid(HalfInt(0))
        with pytest.raises(ValueError, match="node 0"):
            integrate(grid, lambda g: float("nan"))


class TestSchur:
    def test_same_representation(self):
        grid = build_grid(HalfInt(3))
        report = schur_check(grid, HALF, HALF)
        assert report.max_deviation <= 1e-10
        assert report.checked == 16

    def test_different_representations(self):
        grid = build_grid(HalfInt(3))
        report = schur_check(grid, HALF, HalfInt(2))
        assert report.max_deviation <= 1e-10

    def test_trivial_representation(self):
        grid = build_grid(HalfInt(2))
        report = schur_check(grid, HalfInt(0), HalfInt(0))
        assert report.max_deviation <= 1e-13

    def test_all_pairs_to_three_halves(self):
        grid = build_grid(HalfInt(3))
        spins = spins_up_to(HalfInt(3))
        for l in spins:
            for lp in spins:
                assert schur_check(grid, l, lp).max_deviation <= 1e-10

    def test_budget_guard(self):
        grid = build_grid(HALF)
        with pytest.raises(ValueError):
            schur_check(grid, HalfInt(2), HALF)

    def test_exactness_not_mere_convergence(self):
        # growing the grid beyond the budget must not move the result
        small = build_grid(HalfInt(3))
        big = build_grid(HalfInt(3), n_theta=7, n_phi=11, n_psi=11)
        for l, lp in ((HALF, HALF), (HALF, HalfInt(2)), (HalfInt(3), HalfInt(3))):
            a = schur_check(small, l, lp).max_deviation
            b = schur_check(big, l, lp).max_deviation
            assert abs(a - b) <= 1e-12


class TestCharacterNorm:
    def test_trivial(self):
        grid = build_grid(HalfInt(0))
        assert character_norm(grid, HalfInt(0)) == pytest.approx(1.0, abs=1e-13)

    def test_spin_half(self):
        grid = build_grid(HALF)
        assert character_norm(grid, HALF) == pytest.approx(1.0, abs=1e-10)

    def test_up_to_spin_three(self):
        grid = build_grid(HalfInt(6))
        for l in spins_up_to(HalfInt(6)):
            assert abs(character_norm(grid, l) - 1.0) <= 1e-10


class TestJacobiOrthogonality:
    def test_trivial_case(self):
        dev = jacobi_orthogonality_check(HalfInt(0), HalfInt(0), HalfInt(0), HalfInt(0))
        assert abs(dev) <= 1e-14

    def test_different_spins_vanish(self):
        dev = jacobi_orthogonality_check(HalfInt(2), HalfInt(4), HalfInt(2), HalfInt(0))
        assert abs(dev) <= 1e-12

    def test_same_spin_inverse_dimension(self):
        dev = jacobi_orthogonality_check(HalfInt(2), HalfInt(2), HalfInt(2), HalfInt(0))
        assert abs(dev) <= 1e-12

    def test_invalid_quadrant_rejected(self):
        with pytest.raises(ValueError):
            jacobi_orthogonality_check(HalfInt(2), HalfInt(2), HalfInt(0), HalfInt(2))

    def test_invalid_pair_rejected(self):
        with pytest.raises(ValueError):
            jacobi_orthogonality_check(HalfInt(2), HalfInt(1), HalfInt(2), HalfInt(0))

    def test_all_quadrant_pairs_to_spin_three(self):
        spins = spins_up_to(HalfInt(6))
        for l in spins:
            for lp in spins:
                if (l - lp).twice % 2:
                    continue
                smaller = min(l, lp)
                for m in spin_range(smaller):
                    for n in spin_range(smaller):
                        if (m + n).twice < 0 or (m - n).twice < 0:
                            continue
                        dev = jacobi_orthogonality_check(l, lp, m, n)
                        assert abs(dev) <= 1e-10


class TestLegendreFormulas:
    def test_product_degree_zero(self):
        assert abs(legendre_product_check(0, 0.4, 1.0, 1)) <= 1e-15

    def test_product_degree_one(self):
        # the cos(phi) cross term averages to zero, leaving cos(t1) cos(t2)
        assert abs(legendre_product_check(1, 0.4, 1.0, 3)) <= 1e-15

    def test_product_degree_three(self):
        assert abs(legendre_product_check(3, 0.7, 1.1, 7)) <= 1e-10

    def test_product_node_guard(self):
        with pytest.raises(ValueError):
            legendre_product_check(3, 0.7, 1.1, 6)

    def test_addition_collapses_without_phi_dependence(self):
        # theta2 = 0 removes the phi dependence: both sides P_l(cos theta1)
        for l in range(5):
            assert addition_formula_check(l, 0.8, 0.0, 1.9) <= 1e-12

    def test_addition_argument_one(self):
        assert addition_formula_check(1, math.pi / 2, math.pi / 2, 0.0) <= 1e-14

    def test_addition_random_angles(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            t1, t2 = rng.uniform(0.05, math.pi - 0.05, 2)
            phi = rng.uniform(0, 2 * math.pi)
            for l in range(7):
                assert addition_formula_check(l, t1, t2, phi) <= 1e-9


class TestMonteCarloConsistency:
    def test_squared_element_mean(self):
        # 1e5-draw estimate of the squared (m=1, n=0) element of spin 1,
        # exact value 1/3; 4 sigma from the sample variance
        samples = sample_haar(2024, 100_000)
        l, m, n = HalfInt(2), HalfInt(2), HalfInt(0)
        values = np.array([abs(tmn_sum(l, m, n, g)) ** 2 for g in samples])
        mean = values.mean()
        sigma = values.std(ddof=1) / math.sqrt(len(values))
        assert abs(mean - 1 / 3) <= 4 * sigma


class TestOrthonormalFamily:
    def test_gram_matrix_is_identity(self):
        # sqrt(2l+1) t^l_{m,n} for l <= 3/2: 30 functions, Gram vs identity
        grid = build_grid(HalfInt(3))
        columns = []
        for l in spins_up_to(HalfInt(3)):
            stack = grid.matrices(l)
            dim = l.twice + 1
            scale = math.sqrt(l.twice + 1)
            for i in range(dim):
                for j in range(dim):
                    columns.append(scale * stack[:, i, j])
        F = np.column_stack(columns)
        gram = pairwise_sum(grid.weights[:, None, None] * np.conj(F)[:, :, None] * F[:, None, :])
        assert np.max(np.abs(gram - np.eye(F.shape[1]))) <= 1e-10
