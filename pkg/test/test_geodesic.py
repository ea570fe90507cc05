import os
import tempfile
from unittest import TestCase

import numpy as np

from mobiusflow.algebra import Field, identity, matmul, mexp, frob_norm, block_diag, zeros, scalar_matrix
from mobiusflow.groups import GroupId, random_element, random_lie_element, membership_residuals, boost, \
    sigma_curve, sigma_velocity, from_coordinates, coordinates, embed, EMBEDDING_PAIRS
from mobiusflow.geodesic import Chart, GeodesicSolver, GeodesicState, Trajectory, STOP_COMPLETED, STOP_DEGENERATE, \
    arc_length, curve_deviation, totally_geodesic_check, fixed_point_algebra, compact_factor_direction, \
    noise_floor, boost_curve_distance, incompleteness_exponent, symmetries_for_boost
from mobiusflow.metric import QuadratureSpec, build_sample_set, KineticMetric, MONTE_CARLO, WEYL_TORUS
from mobiusflow.utils import Logger, DegenerateMetricError, MembershipError, ShapeError, read_csv

__author__ = 'pdoren'
__project__ = 'MobiusFlow'

Logger().log_disable()

O33 = GroupId.parse('O0(3,3)')
SU11 = GroupId.parse('SU(1,1)')


def _metric(group, samples=32, seed=0):
    return KineticMetric(group, build_sample_set(group, QuadratureSpec(MONTE_CARLO, samples=samples, seed=seed)))


class _FailingSolver(GeodesicSolver):
    """ Solver whose metric turns degenerate after the first evaluation. """

    def __init__(self, metric):
        super(_FailingSolver, self).__init__(metric)
        self.calls = 0

    def metric_at(self, chart, x):
        self.calls += 1
        if self.calls > 1:
            raise DegenerateMetricError(-1.0)
        return super(_FailingSolver, self).metric_at(chart, x)


class TestChart(TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(30)
        self.group = GroupId.parse('SU(2,2)')
        self.chart = Chart(self.group, random_element(self.group, self.rng))

    def test_origin(self):
        chart = self.chart
        self.assertTrue(chart.check(), 'Problem with chart check')
        error = float(frob_norm(chart.point(np.zeros(chart.dim)) - chart.center))
        self.assertTrue(error < 1e-12, 'Problem with centre (%g != 0)' % error)
        v = self.rng.standard_normal(chart.dim)
        expected = matmul(from_coordinates(self.group, v), chart.center)
        error = float(frob_norm(chart.differential(np.zeros(chart.dim), v) - expected))
        self.assertTrue(error < 1e-12, 'Problem with differential at the centre (%g != 0)' % error)

    def test_points_in_group(self):
        x = 0.3 * self.rng.standard_normal((5, self.chart.dim))
        residual = float(np.max(membership_residuals(self.group, self.chart.point(x))))
        self.assertTrue(residual < 1e-9, 'Problem with chart points (%g != 0)' % residual)

    def test_tangent_basis(self):
        chart = self.chart
        x = 0.2 * self.rng.standard_normal(chart.dim)
        basis = chart.tangent_basis(x)
        self.assertEqual((chart.dim,), basis.batch_shape, 'Problem with tangent basis shape')
        v = np.zeros(chart.dim)
        v[2] = 1.0
        error = float(frob_norm(basis[2] - chart.differential(x, v)))
        self.assertTrue(error < 1e-12, 'Problem with tangent basis (%g != 0)' % error)

    def test_recentering(self):
        chart = self.chart
        x = self.rng.standard_normal(chart.dim)
        x *= 0.4 / np.linalg.norm(x)
        v = self.rng.standard_normal(chart.dim)
        self.assertFalse(chart.needs_recentering(x), 'Problem with recentering radius')
        self.assertTrue(chart.needs_recentering(2.0 * x), 'Problem with recentering radius')
        new_chart, w = chart.recentered(x, v)
        origin = np.zeros(chart.dim)
        error = float(frob_norm(new_chart.point(origin) - chart.point(x)))
        self.assertTrue(error < 1e-12, 'Problem with new centre (%g != 0)' % error)
        error = float(frob_norm(new_chart.differential(origin, w) - chart.differential(x, v)))
        self.assertTrue(error < 1e-9, 'Problem with transported velocity (%g != 0)' % error)


class TestSolver(TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(31)
        self.metric = _metric(O33)
        X = compact_factor_direction(O33, self.rng)
        self.Z = block_diag(X, zeros(3, 3, Field.R))

    def _state(self, radius=1.0):
        return GeodesicState.at(O33, identity(6, Field.R), coordinates(O33, self.Z), radius)

    def test_christoffel_symmetry(self):
        solver = GeodesicSolver(self.metric)
        chart = Chart(O33, identity(6, Field.R))
        x = 0.1 * self.rng.standard_normal(chart.dim)
        gamma = solver.christoffel(chart, x)
        self.assertEqual((chart.dim,) * 3, gamma.shape, 'Problem with Christoffel shape')
        v = self.rng.standard_normal(chart.dim)
        # directional evaluation agrees with the full symbols
        expected = -np.einsum('kij,i,j->k', gamma, v, v)
        error = np.max(np.abs(solver.acceleration(chart, x, v) - expected)) / max(np.max(np.abs(expected)), 1.0)
        self.assertTrue(error < 1e-5, 'Problem with directional acceleration (%g != 0)' % error)
        self.assertEqual(0.0, float(np.max(np.abs(solver.acceleration(chart, x, np.zeros(chart.dim))))),
                         'Problem with zero velocity')

    def test_rigid_geodesic(self):
        solver = GeodesicSolver(self.metric)
        trajectory = solver.integrate(self._state(), 1.0, 0.1)
        self.assertEqual(STOP_COMPLETED, trajectory.stop_reason, 'Problem with stop reason')
        self.assertEqual(11, len(trajectory), 'Problem with samples (%g != %g)' % (len(trajectory), 11))
        deviation = curve_deviation(trajectory, lambda t: mexp(self.Z * t))
        self.assertTrue(deviation < 1e-4, 'Problem with rigid geodesic (%g != 0)' % deviation)
        self.assertTrue(trajectory.energy_drift() < 5e-3, 'Problem with energy drift (%g != 0)'
                        % trajectory.energy_drift())
        self.assertTrue(max(trajectory.residuals) < 1e-9, 'Problem with membership along the trajectory')
        self.assertTrue(np.isclose(trajectory.final_state.t, 1.0), 'Problem with final time')

    def test_recentering(self):
        trajectory = GeodesicSolver(self.metric).integrate(self._state(radius=0.2), 0.5, 0.1)
        self.assertEqual(STOP_COMPLETED, trajectory.stop_reason, 'Problem with stop reason')
        self.assertTrue(len(trajectory.recenterings) > 0, 'Problem with chart recentering')
        deviation = curve_deviation(trajectory, lambda t: mexp(self.Z * t))
        self.assertTrue(deviation < 1e-4, 'Problem with geodesic across charts (%g != 0)' % deviation)

    def test_time_reversal(self):
        rng = np.random.default_rng(35)
        metric = _metric(SU11)
        Z = random_lie_element(SU11, rng)
        Z = Z * (1.0 / float(frob_norm(Z)))
        start = identity(2, Field.C)
        solver = GeodesicSolver(metric)
        forward = solver.integrate(GeodesicState.at(SU11, start, coordinates(SU11, Z)), 0.5, 0.05)
        self.assertEqual(STOP_COMPLETED, forward.stop_reason, 'Problem with forward integration')
        backward = solver.integrate(forward.final_state.reversed(), 0.5, 0.05)
        self.assertEqual(STOP_COMPLETED, backward.stop_reason, 'Problem with backward integration')
        error = float(frob_norm(backward.points[-1] - start))
        self.assertTrue(error < 1e-5, 'Problem with time reversal (%g != 0)' % error)
        velocity = float(frob_norm(backward.final_state.velocity() + Z))
        self.assertTrue(velocity < 1e-5, 'Problem with reversed velocity (%g != 0)' % velocity)

    def test_record_every(self):
        solver = GeodesicSolver(self.metric)
        trajectory = solver.integrate(self._state(), 0.5, 0.1, record_every=2)
        self.assertEqual([0.0, 0.2, 0.4, 0.5], [round(t, 12) for t in trajectory.times], 'Problem with recorded times')

    def test_degenerate_stop(self):
        trajectory = _FailingSolver(self.metric).integrate(self._state(), 1.0, 0.1)
        self.assertEqual(STOP_DEGENERATE, trajectory.stop_reason, 'Problem with controlled stop')
        self.assertEqual(1, len(trajectory), 'Problem with samples before the stop')
        self.assertTrue('t = 0' in trajectory.diagnostic, 'Problem with diagnostic')
        self.assertEqual(0.0, trajectory.final_state.t, 'Problem with final state')

    def test_frame(self):
        trajectory = GeodesicSolver(self.metric).integrate(self._state(), 0.2, 0.1)
        frame = trajectory.to_frame()
        self.assertEqual(3, len(frame), 'Problem with rows (%g != %g)' % (len(frame), 3))
        self.assertEqual(['t', 'g_0_0_0'], list(frame.columns[:2]), 'Problem with leading columns')
        self.assertEqual(['energy', 'membership_residual'], list(frame.columns[-2:]), 'Problem with last columns')
        self.assertEqual(39, frame.shape[1], 'Problem with columns (%g != %g)' % (frame.shape[1], 39))
        with tempfile.TemporaryDirectory() as out:
            filename = os.path.join(out, 'trajectory.csv')
            trajectory.to_csv(filename, 'rigid-geodesic')
            with open(filename) as f:
                header = f.readline().strip()
            self.assertEqual('# mobiusflow-csv v1 scenario=rigid-geodesic table=trajectory', header,
                             'Problem with csv header')
            loaded = read_csv(filename)
            self.assertTrue(np.allclose(loaded.values, frame.values, rtol=1e-15), 'Problem with csv values')

    def test_empty_trajectory(self):
        self.assertEqual(0.0, curve_deviation(Trajectory(O33), lambda t: mexp(self.Z * t)),
                         'Problem with empty trajectory')
        self.assertEqual(0.0, Trajectory(O33).energy_drift(), 'Problem with empty drift')


class TestChecks(TestCase):
    def test_arc_length(self):
        metric = KineticMetric(SU11, build_sample_set(SU11, QuadratureSpec(WEYL_TORUS, grid=64)))
        length, error = arc_length(metric, lambda t: sigma_curve(SU11, t), lambda t: sigma_velocity(SU11, t),
                                   0.0, 0.5, class_function=True)
        expected = 2.0 * np.sqrt(np.pi) * np.arcsin(0.5)
        self.assertTrue(abs(length - expected) < 1e-6 * expected, 'Problem with arc length (%g != %g)'
                        % (length, expected))
        self.assertTrue(error < 1e-6, 'Problem with arc length error (%g)' % error)
        self.assertEqual((0.0, 0.0), arc_length(metric, None, None, 0.3, 0.3), 'Problem with empty interval')

    def test_incompleteness_exponent(self):
        t = np.linspace(0.5, 0.99, 20)
        slope, stderr = incompleteness_exponent(t, 2.0 / (1.0 - t * t))
        self.assertTrue(abs(slope + 1.0) < 1e-10, 'Problem with slope (%g != %g)' % (slope, -1.0))
        self.assertTrue(stderr < 1e-8, 'Problem with slope error (%g)' % stderr)

    def test_boost_curve_distance(self):
        group = GroupId.parse('SU(2,2)')
        distance, s = boost_curve_distance(group, boost(group, 0.7))
        self.assertTrue(distance < 1e-8, 'Problem with distance (%g != 0)' % distance)
        self.assertTrue(abs(s - 0.7) < 1e-8, 'Problem with curve parameter (%g != %g)' % (s, 0.7))
        rotated = matmul(block_diag(scalar_matrix(1j, 2, Field.C), identity(2, Field.C)), boost(group, 0.7))
        distance, _ = boost_curve_distance(group, rotated)
        self.assertTrue(distance > 0.1, 'Problem with distance off the curve (%g)' % distance)

    def test_fixed_point_algebra(self):
        for name, dim in (('O0(3,3)', 1), ('O0(4,4)', 1), ('SU(3,3)', 3)):
            basis = fixed_point_algebra(GroupId.parse(name))
            self.assertEqual(dim, basis.batch_shape[0], 'Problem with dimension of %s (%g != %g)'
                             % (name, basis.batch_shape[0], dim))
        with self.assertRaises(ShapeError):
            fixed_point_algebra(GroupId.parse('O0(1,1)'))
        with self.assertRaises(MembershipError):
            fixed_point_algebra(GroupId.parse('SO3'))
        self.assertIsNone(symmetries_for_boost(GroupId.parse('O0(1,1)')), 'Problem with empty symmetry group')

    def test_compact_factor_direction(self):
        rng = np.random.default_rng(32)
        self.assertIsNone(compact_factor_direction(SU11, rng), 'Problem with SU(1,1)')
        group = GroupId.parse('SU(2,2)')
        X = compact_factor_direction(group, rng)
        self.assertTrue(np.isclose(float(frob_norm(X)), 1.0), 'Problem with unit direction')
        trace = abs(np.sum(X.data[np.arange(2), np.arange(2), 1]))
        self.assertTrue(trace < 1e-12, 'Problem with trace (%g != 0)' % trace)

    def test_noise_floor(self):
        rng = np.random.default_rng(33)
        floor = noise_floor(O33, _metric(O33), rng, count=2)
        self.assertTrue(floor < 1e-4, 'Problem with noise floor (%g != 0)' % floor)

    def test_totally_geodesic(self):
        rng = np.random.default_rng(34)
        make_src, make_dst = EMBEDDING_PAIRS['a']
        src, dst = make_src(1), make_dst(1)
        Z = embed(src, dst, random_lie_element(src, rng))
        Z = Z * (1.0 / float(frob_norm(Z)))
        spec = QuadratureSpec(MONTE_CARLO, samples=32, seed=1)
        deviation, trajectory = totally_geodesic_check(src, dst, Z, 0.5, 0.1, spec)
        self.assertEqual(STOP_COMPLETED, trajectory.stop_reason, 'Problem with stop reason')
        self.assertTrue(deviation < 1e-4, 'Problem with totally geodesic subgroup (%g != 0)' % deviation)
        with self.assertRaises(MembershipError):
            totally_geodesic_check(src, dst, random_lie_element(dst, rng), 0.5, 0.1, spec)
