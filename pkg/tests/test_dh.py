import random
from fractions import Fraction as F

import numpy as np
import pytest

from hamloc import (
    ConsistencyError,
    LinearModel,
    NonRegularError,
    PiecewisePolynomialMeasure,
    Polynomial,
    cut_measure,
    dh_jump,
    dh_measure,
    disjoint_union,
    linear_model_measure,
    linearize,
    reverse,
    total_volume,
)
from corpus import corpus_with_products, cp1, cp2


def poly(*coeffs):
    return Polynomial(tuple(F(c) for c in coeffs))


TENT = PiecewisePolynomialMeasure((0, 1, 2), (poly(0, F(1, 2)), poly(1, F(-1, 2))))


class TestLinearModelMeasure:
    def test_unit_weight_model_is_uniform(self):
        mu = linear_model_measure(LinearModel(F(0), (1,), 1), 5)
        assert mu == PiecewisePolynomialMeasure.single_piece(0, 5, poly(1))

    def test_mixed_signs(self):
        mu = linear_model_measure(LinearModel(F(1), (-1, 1), 1), 5)
        assert mu == PiecewisePolynomialMeasure.single_piece(1, 5, poly(1, -1))

    def test_two_negative_weights(self):
        mu = linear_model_measure(LinearModel(F(2), (-2, -1), 1), 5)
        assert mu == PiecewisePolynomialMeasure.single_piece(2, 5, poly(-1, F(1, 2)))

    def test_horizon_below_base_rejected(self):
        with pytest.raises(ValueError, match="horizon"):
            linear_model_measure(LinearModel(F(3), (1,), 1), 2)

    @pytest.mark.parametrize("weights", [(-1, 1), (-2, -1), (2, 3)])
    def test_monte_carlo_pushforward(self, weights):
        # flat measure on the model, coordinates t_r = |m_r| |z_r|^2 / 2
        # each with push-forward density 1/|m_r| on (0, T)
        model = LinearModel(F(1), weights, 1)
        mu = linear_model_measure(model, 9)
        rng = np.random.default_rng(1234)
        n, t_max, width = 1_000_000, 4.0, 0.1
        coords = rng.uniform(0.0, t_max, size=(n, len(weights)))
        values = 1.0 + coords.sum(axis=1)
        box_mass = t_max ** len(weights) / np.prod(np.abs(weights))
        edges = np.arange(1.0, 1.0 + t_max + width / 2, width)
        hist, _ = np.histogram(values, bins=edges)
        for count, lo in zip(hist, edges[:-1]):
            lo, hi = F(lo).limit_denominator(100), F(lo + width).limit_denominator(100)
            # the sampler sees the unsigned push-forward; the sign
            # orientation * (-1)^sigma is checked exactly elsewhere
            exact_mass = abs(_cdf(mu, hi) - _cdf(mu, lo))
            estimate = box_mass * count / n
            assert abs(estimate - float(exact_mass)) < 1e-2


class TestDhMeasure:
    def test_cp1_is_uniform(self):
        assert dh_measure(cp1()) \
            == PiecewisePolynomialMeasure.single_piece(0, 1, poly(1))

    def test_cp2_is_tent(self):
        assert dh_measure(cp2()) == TENT

    def test_union_with_reverse_cancels(self):
        space = disjoint_union(cp2(), reverse(cp2()))
        assert dh_measure(space) == PiecewisePolynomialMeasure.zero()

    def test_inconsistent_space_rejected(self):
        from hamloc import FixedPointDatum, HamiltonianSpaceData
        lone = HamiltonianSpaceData(
            1, 1, (FixedPointDatum("p", (F(0),), ((1,),), 1),))
        with pytest.raises(ConsistencyError, match="GLS sum"):
            dh_measure(lone)

    def test_empty_space(self):
        from hamloc import HamiltonianSpaceData
        assert dh_measure(HamiltonianSpaceData(1, 1, ())) \
            == PiecewisePolynomialMeasure.zero()

    def test_horizon_independence(self):
        # summing the models with any horizon above the top moment value must
        # cancel exactly there; the internal horizon is the top value itself
        for space in [cp1(), cp2()]:
            expected = dh_measure(space)
            top = max(space.moment_values)
            total = PiecewisePolynomialMeasure.zero()
            for model in linearize(space):
                total = total + linear_model_measure(model, top + 7)
            assert total == expected

    def test_support_within_moment_range(self):
        for space in corpus_with_products(per_dim=4, n_products=8, n_unions=4):
            mu = dh_measure(space)
            if mu:
                lo, hi = mu.support
                assert min(space.moment_values) <= lo
                assert hi <= max(space.moment_values)

    def test_smoothness_across_breakpoints(self):
        for space in corpus_with_products(per_dim=4, n_products=8, n_unions=4):
            mu = dh_measure(space)
            d = space.half_dim
            for i in range(1, len(mu.breakpoints) - 1):
                b = mu.breakpoints[i]
                left, right = mu.pieces[i - 1], mu.pieces[i]
                for order in range(d - 1):
                    assert left.derivative(order)(b) == right.derivative(order)(b)

    def test_measure_jump_equals_fixed_point_jumps(self):
        for space in corpus_with_products(per_dim=4, n_products=8, n_unions=4):
            mu = dh_measure(space)
            d = space.half_dim
            levels = sorted(set(space.moment_values))
            for level in levels:
                left = _piece_beside(mu, level, -1)
                right = _piece_beside(mu, level, +1)
                measured = (right.derivative(d - 1)(level)
                            - left.derivative(d - 1)(level))
                expected = sum(
                    (dh_jump(space, k)
                     for k, fp in enumerate(space.fixed_points)
                     if fp.moment[0] == level), F(0))
                assert measured == expected

    def test_determinism_on_equal_data_multisets(self):
        space = cp2()
        shuffled = type(space)(
            space.torus_rank, space.half_dim,
            tuple(reversed(space.fixed_points)))
        assert dh_measure(shuffled) == dh_measure(space)


class TestJumps:
    def test_cp1_bottom(self):
        assert dh_jump(cp1(), 0) == 1

    def test_cp2_middle(self):
        assert dh_jump(cp2(), 1) == F(1, (-1) * 1)

    def test_reverse_negates(self):
        space = cp2()
        for k in range(3):
            assert dh_jump(reverse(space), k) == -dh_jump(space, k)

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            dh_jump(cp1(), 5)


class TestCutMeasure:
    def test_cp1_half(self):
        assert cut_measure(cp1(), F(1, 2)) \
            == PiecewisePolynomialMeasure.single_piece(0, F(1, 2), poly(1))

    def test_above_top_unchanged(self):
        assert cut_measure(cp2(), 7) == dh_measure(cp2())

    def test_cp2_three_halves(self):
        cut = cut_measure(cp2(), F(3, 2))
        assert cut.breakpoints == (0, 1, F(3, 2))
        assert cut.pieces == (poly(0, F(1, 2)), poly(1, F(-1, 2)))

    def test_critical_level_names_point(self):
        with pytest.raises(NonRegularError, match="P1"):
            cut_measure(cp2(), 1)

    def test_recut_lower_equals_single_cut(self):
        rng = random.Random(11)
        for space in corpus_with_products(per_dim=2, n_products=4, n_unions=2):
            values = sorted(space.moment_values)
            a = values[-1] + F(1, 2)
            b = values[0] + F(1, 3)
            if b in values or a in values:
                continue
            assert cut_measure(space, a).truncate(b) == cut_measure(space, b)


class TestTotalVolume:
    def test_cp1(self):
        assert total_volume(cp1()) == 1

    def test_cp2(self):
        assert total_volume(cp2()) == F(1, 2)

    def test_union_additivity(self):
        assert total_volume(disjoint_union(cp1(), cp1())) == 2


class TestMonteCarloOracles:
    def test_cp1_round_sphere(self):
        # area measure of the round sphere pushes forward to the uniform
        # measure: height is uniform (Archimedes), rescaled to [0, 1]
        rng = np.random.default_rng(77)
        n = 1_000_000
        xyz = rng.normal(size=(n, 3))
        z = xyz[:, 2] / np.linalg.norm(xyz, axis=1)
        values = (z + 1.0) / 2.0
        hist, edges = np.histogram(values, bins=10, range=(0.0, 1.0))
        density = hist / n / (edges[1] - edges[0])
        assert np.max(np.abs(density - 1.0)) < 1e-2

    def test_cp2_moment_triangle(self):
        # uniform samples of the triangle conv{(0,0),(1,0),(0,1)} pushed
        # forward along <.,(1,2)> reproduce the tent within 1e-2
        rng = np.random.default_rng(78)
        n = 1_000_000
        pts = rng.uniform(size=(n, 2))
        flip = pts.sum(axis=1) > 1.0
        pts[flip] = 1.0 - pts[flip]
        values = pts[:, 0] + 2.0 * pts[:, 1]
        width = F(1, 50)
        edges = [F(i, 50) for i in range(101)]
        hist, _ = np.histogram(values, bins=[float(e) for e in edges])
        area = 0.5
        mu = dh_measure(cp2())
        for count, lo in zip(hist, edges[:-1]):
            mid = lo + width / 2
            estimate = area * count / n / float(width)
            assert abs(estimate - float(mu.density_at(mid))) < 1e-2


def _piece_beside(mu, level, side):
    probe = level + F(side, 1_000_000)
    while probe in mu.breakpoints:
        probe = (probe + level) / 2
    return mu.piece_at(probe)


def _cdf(mu, x):
    """Exact mass of (-inf, x]; safe at breakpoints."""
    total = F(0)
    for lo, hi, p in zip(mu.breakpoints, mu.breakpoints[1:], mu.pieces):
        if x <= lo:
            break
        anti = p.antiderivative()
        total += anti(min(hi, x)) - anti(lo)
    return total
