import numpy as np
import pandas as pd

from ..action.concentration import concentration_distance, has_no_eigenvalue
from ..action.grassmannian import act_on_graph
from ..action.mobius import MobiusElement, act
from ..algebra.matrices import Mat, identity, matmul, mexp, frob_norm, frob_inner, block_diag, zeros, stack, \
    commutator
from ..algebra.scalars import Field
from ..geodesic.checks import arc_length, curve_deviation, totally_geodesic_check, fixed_point_algebra, \
    fixed_point_generators, noise_floor, boost_curve_distance, incompleteness_exponent, symmetries_for_boost, \
    compact_factor_direction, geodesic_defect
from ..geodesic.solver import GeodesicSolver, GeodesicState
from ..groups.curves import boost, boost_generator, sigma_curve, sigma_velocity
from ..groups.embeddings import EMBEDDING_PAIRS, embed
from ..groups.groupid import GroupId, DESK_GROUPS
from ..groups.haarsampling import haar_sample, random_compact_pair, random_element
from ..groups.liealgebra import random_lie_element, coordinates
from ..lowdim.corollary import corollary7_defect, corollary_symmetries
from ..lowdim.diagrams import DIAGRAMS, diagram_check, random_sl4
from ..lowdim.morphisms import SP11, O33, bracket_identity_residual, algebra_bracket_residual, \
    rotation_matrix_Iw, conjugation_matrix, morphism_sp11
from ..lowdim.spheres import SphereAction, CONFORMAL, PROJECTIVE
from ..lowdim.splitquaternions import SplitQuaternion, split_operator
from ..metric.kinetic import KineticMetric, check_metric_group
from ..metric.quadrature import build_sample_set, WEYL_TORUS, MONTE_CARLO, CUBATURE
from ..utils.logger import Logger
from ..utils.utils_translation import TextTranslation
from .params import MetricClosedFormParams, BiInvarianceParams, IsometryParams, FiniteLengthParams, \
    IncompletenessParams, MassConcentrationParams, RigidGeodesicParams, TotallyGeodesicParams, \
    FixedPointAlgebraParams, Corollary7Params, LowdimDiagramsParams, OracleParams, any_split, closed_form_group, \
    fixed_point_group
from .result import Scenario, GREATER, EQUAL

__all__ = ['SCENARIOS', 'get_scenario', 'group_slug']

DESK_NAMES = [str(g) for g in DESK_GROUPS]


def group_slug(group):
    """ File name friendly group name: 'SU(1,1)' becomes 'SU1-1'. """
    return str(group).replace('(', '').replace(')', '').replace(',', '-')


def _groups(config, default):
    return config.group_ids() if config.groups else [GroupId.parse(name) for name in default]


def _metric(group, config, seed, symmetries=None, **kwargs):
    spec = config.quadrature.to_spec(seed)
    if kwargs:
        spec = spec.replace(**kwargs)
    Logger().log('%s: %s %s' % (TextTranslation().get_str('Log_samples'), group, spec))
    return KineticMetric(group, build_sample_set(group, spec, symmetries))


def _solver(metric, config):
    return GeodesicSolver(metric, config.integrator.h)


def _integrate(solver, group, center, Z, config):
    state = GeodesicState.at(group, center, coordinates(group, Z), config.integrator.radius)
    return solver.integrate(state, config.integrator.T, config.integrator.dt, config.integrator.record_every)


def _unit(Z):
    return Z * (1.0 / float(frob_norm(Z)))


# ---------------------------------------------------------------------------------------------------------------------
# metric values
# ---------------------------------------------------------------------------------------------------------------------

def metric_closed_form(config, result, seed):
    """ ‖σ′(t)‖² = 4π/(1 − t²) on SU(1,1), with the torus rule and with Monte Carlo. """
    group = _groups(config, ['SU(1,1)'])[0]
    times = config.param('times')
    torus = _metric(group, config, seed, mode=WEYL_TORUS, grid=config.param('torus_grid'), refine=0)
    mc = _metric(group, config, seed, mode=MONTE_CARLO, samples=config.param('mc_samples'))
    rows = []
    for t in times:
        g, X = sigma_curve(group, t), sigma_velocity(group, t)
        exact = 4.0 * np.pi / (1.0 - t * t)
        a = torus.norm2(g, X, class_function=True, check=False)
        b = mc.norm2(g, X, check=False)
        rows.append({'t': t, 'closed_form': exact, 'torus': a.value, 'monte_carlo': b.value,
                     'monte_carlo_std': b.std_error, 'torus_relative_error': abs(a.value - exact) / exact,
                     'monte_carlo_relative_error': abs(b.value - exact) / exact})
    frame = pd.DataFrame(rows)
    result.tables['metric'] = frame
    result.check('torus_relative_error', frame['torus_relative_error'].max(), config.param('torus_tol'))
    result.check('monte_carlo_relative_error', frame['monte_carlo_relative_error'].max(),
                 config.param('mc_tol'))


def bi_invariance(config, result, seed):
    """ ‖(X, 0)‖² = ‖(0, X)‖² = vol(M)|X|² at the identity. """
    rng = np.random.default_rng(seed)
    count = config.param('count')
    rows = []
    for group in _groups(config, DESK_NAMES):
        directions = [compact_factor_direction(group, rng) for _ in range(count)]
        directions = [X for X in directions if X is not None]
        if not directions:
            result.metrics['skipped_%s' % group_slug(group)] = 'no trace free compact factor direction'
            continue
        metric = _metric(group, config, seed)
        ratios = metric.factor_norm_ratios(directions)
        left, right = ratios['left'], ratios['right']
        sigma = np.sqrt(ratios['left_std'] ** 2 + ratios['right_std'] ** 2)
        volume = ratios['volume']
        slack = 1e-12 * volume
        spread = np.max(np.abs(left - np.mean(left)) / (3.0 * ratios['left_std'] + slack))
        difference = np.max(np.abs(left - right) / (3.0 * sigma + slack))
        rows.append({'group': str(group), 'volume': volume, 'left_mean': np.mean(left), 'right_mean': np.mean(right),
                     'left_spread_sigma': spread, 'difference_sigma': difference,
                     'volume_relative_error': np.max(np.abs(left - volume)) / volume})
        result.check('left_constant_%s' % group_slug(group), spread, 1.0)
        result.check('left_equals_right_%s' % group_slug(group), difference, 1.0)
    result.tables['ratios'] = pd.DataFrame(rows)


def isometry_kxk(config, result, seed):
    """ F(g) = k₁ g k₂⁻¹ preserves the metric, evaluated with common random numbers. """
    rng = np.random.default_rng(seed)
    count = config.param('count')
    tol = config.param('tol')
    rows = []
    for group in _groups(config, DESK_NAMES):
        metric = _metric(group, config, seed)
        residuals = np.zeros(count)
        logger = Logger()
        for i in logger.progressbar(range(count), prefix='%s ' % group, end=''):
            k1 = random_compact_pair(group, rng)
            k2 = random_compact_pair(group, rng)
            g = random_element(group, rng)
            X = matmul(random_lie_element(group, rng), g)
            residuals[i] = metric.isometry_residual(k1, k2, g, X)
        row = {'group': str(group), 'max_residual': residuals.max(), 'mean_residual': residuals.mean()}
        result.check('isometry_%s' % group_slug(group), residuals.max(), tol)
        if group.field == Field.C:
            conj = [metric.conjugation_residual(g, matmul(random_lie_element(group, rng), g))
                    for g in (random_element(group, rng) for _ in range(config.param('conjugation_count')))]
            row['conjugation_residual'] = max(conj)
            result.check('conjugation_%s' % group_slug(group), max(conj), tol)
        rows.append(row)
    result.tables['residuals'] = pd.DataFrame(rows)


# ---------------------------------------------------------------------------------------------------------------------
# boost curve
# ---------------------------------------------------------------------------------------------------------------------

def _sigma_length(metric, group, epsilon):
    # t = sin φ keeps the integrand bounded as t → 1
    def _curve(phi):
        return sigma_curve(group, np.sin(phi))

    def _velocity(phi):
        return sigma_velocity(group, np.sin(phi)) * np.cos(phi)

    return arc_length(metric, _curve, _velocity, 0.0, np.arcsin(1.0 - epsilon), class_function=True)


def finite_length(config, result, seed):
    """ The boost curve σ has finite length: π^{3/2} on SU(1,1), bounded on SU(2,2) and Sp(1,1). """
    epsilons = config.param('epsilons')
    rows = []
    for group in _groups(config, ['SU(1,1)', 'SU(2,2)', 'Sp(1,1)']):
        metric = _metric(group, config, seed)
        lengths = []
        for epsilon in epsilons:
            length, error = _sigma_length(metric, group, epsilon)
            lengths.append(length)
            row = {'group': str(group), 'epsilon': epsilon, 'length': length, 'error': error,
                   'reference': np.nan}
            if group == GroupId.parse('SU(1,1)'):
                row['reference'] = 2.0 * np.sqrt(np.pi) * np.arcsin(1.0 - epsilon)
                result.check('partial_length_%s_%g' % (group_slug(group), epsilon),
                             abs(length - row['reference']) / row['reference'], config.param('tol'))
            rows.append(row)
        if group == GroupId.parse('SU(1,1)'):
            limit = np.pi ** 1.5
            result.check('limit_%s' % group_slug(group), abs(lengths[-1] - limit) / limit, config.param('tol'))
        elif len(lengths) > 1:
            result.check('cauchy_%s' % group_slug(group), abs(lengths[-1] - lengths[-2]) / lengths[-1],
                         config.param('cauchy_tol'))
    result.tables['lengths'] = pd.DataFrame(rows)


def incompleteness(config, result, seed):
    """ ‖σ′(t)‖ grows like (1 − t²)^{-1/2} and the geodesic through (0 I; I 0) stays on the boost curve. """
    group = _groups(config, ['SU(1,1)'])[0]
    gaps = np.geomspace(config.param('gap_max'), config.param('gap_min'), config.param('points'))
    times = 1.0 - gaps
    metric = _metric(group, config, seed)
    speeds = np.array([np.sqrt(metric.norm2(sigma_curve(group, t), sigma_velocity(group, t),
                                            class_function=True, check=False).value) for t in times])
    slope, stderr = incompleteness_exponent(times, speeds)
    result.tables['speeds'] = pd.DataFrame({'t': times, 'speed': speeds})
    result.metrics['slope_stderr'] = stderr
    result.check('slope_deviation', abs(slope + 0.5), config.param('slope_tol'))

    # geodesic with initial velocity (0 I; I 0) on the symmetrized Monte Carlo metric
    geodesic_metric = _metric(group, config, seed, symmetries_for_boost(group), mode=MONTE_CARLO,
                              samples=config.param('geodesic_samples'))
    Logger().log(TextTranslation().get_str('Log_integrate'))
    trajectory = _integrate(_solver(geodesic_metric, config), group, identity(2 * group.n, group.field),
                            boost_generator(group), config)
    distances = [boost_curve_distance(group, g)[0] for g in trajectory.points]
    result.tables['trajectory'] = trajectory.to_frame()
    result.metrics['stop_reason'] = trajectory.stop_reason
    result.check('boost_image_distance', max(distances), config.param('distance_tol'))


def mass_concentration(config, result, seed):
    """ γ(t) ∗ q → I, monotonically in t, for every q without eigenvalue −1. """
    group = _groups(config, ['SU(2,2)'])[0]
    rng = np.random.default_rng(seed)
    q = haar_sample(group.compact_counterpart(), rng, config.param('count'))
    keep = has_no_eigenvalue(q, -1.0, config.param('det_threshold'))
    q = q[keep]
    rows = []
    for t in config.param('times'):
        d = concentration_distance(MobiusElement(group, boost(group, t)), q)
        rows.append({'t': t, 'max_distance': float(np.max(d)), 'mean_distance': float(np.mean(d))})
    frame = pd.DataFrame(rows)
    result.tables['distances'] = frame
    result.metrics['kept'] = int(np.sum(keep))
    result.check('max_increase', np.max(np.diff(frame['max_distance'])), config.param('monotone_tol'))
    result.check('final_distance', frame['max_distance'].iloc[-1], config.param('tol'))


# ---------------------------------------------------------------------------------------------------------------------
# geodesics
# ---------------------------------------------------------------------------------------------------------------------

def rigid_geodesic(config, result, seed):
    """ exp(t·diag(X, 0)) is a geodesic of G. """
    rng = np.random.default_rng(seed)
    rows = []
    for group in _groups(config, DESK_NAMES):
        metric = _metric(group, config, seed)
        solver = _solver(metric, config)
        n = group.n
        for i in range(config.param('count')):
            X = compact_factor_direction(group, rng)
            if X is None:
                continue
            Z = block_diag(X, zeros(n, n, group.field))
            trajectory = _integrate(solver, group, identity(2 * n, group.field), Z, config)
            deviation = curve_deviation(trajectory, lambda t: mexp(Z * t))
            rows.append({'group': str(group), 'index': i, 'deviation': deviation,
                         'energy_drift': trajectory.energy_drift(), 'stop_reason': trajectory.stop_reason})
            if i == 0:
                result.tables['trajectory_%s' % group_slug(group)] = trajectory.to_frame()
        # diag(X, Y) with both factors nonzero is not covered by the rigid motion argument; reported only
        X, Y = compact_factor_direction(group, rng), compact_factor_direction(group, rng)
        if X is not None:
            defects = geodesic_defect(group, block_diag(X, Y), metric, config.param('times'),
                                      config.integrator.h)
            result.metrics['mixed_defect_%s' % group_slug(group)] = float(np.max(defects))
    frame = pd.DataFrame(rows)
    result.tables['deviations'] = frame
    if frame.empty:
        return
    result.check('deviation', frame['deviation'].max(), config.param('tol'))
    result.check('energy_drift', frame['energy_drift'].max(), config.param('energy_tol'))


def totally_geodesic(config, result, seed):
    """ The subgroups (a)-(e) are totally geodesic. """
    rng = np.random.default_rng(seed)
    rows = []
    for label, n in config.param('pairs'):
        make_src, make_dst = EMBEDDING_PAIRS[label]
        src, dst = make_src(n), make_dst(n)
        Z = _unit(embed(src, dst, random_lie_element(src, rng)))
        deviation, trajectory = totally_geodesic_check(src, dst, Z, config.integrator.T, config.integrator.dt,
                                                       config.quadrature.to_spec(seed), config.integrator.h,
                                                       config.integrator.radius, config.integrator.record_every)
        rows.append({'pair': label, 'src': str(src), 'dst': str(dst), 'deviation': deviation,
                     'energy_drift': trajectory.energy_drift(), 'stop_reason': trajectory.stop_reason})
        result.check('pair_%s' % label, deviation, config.param('tol'))
    result.tables['deviations'] = pd.DataFrame(rows)


def fixed_point_algebra_scenario(config, result, seed):
    """ The Lie algebra elements commuting with every kᵢ: ℝ(0 I; I 0) for O0(n,n). """
    rng = np.random.default_rng(seed)
    rows = []
    for group in _groups(config, ['O0(3,3)', 'O0(4,4)', 'SU(3,3)']):
        basis = fixed_point_algebra(group)
        dim = basis.batch_shape[0]
        row = {'group': str(group), 'dimension': dim}
        element = Mat(np.einsum('i,iabc->abc', rng.standard_normal(dim), basis.data), group.field)
        commuting = max(float(frob_norm(commutator(block_diag(A, A), element)))
                        for A in fixed_point_generators(group))
        row['commutator_residual'] = commuting
        result.check('commutes_%s' % group_slug(group), commuting, 1e-10)
        # for n ≥ 3 the Aⁱ act irreducibly, so each block of an element is a scalar matrix
        if group.field == Field.R and group.n >= 3:
            direction = _unit(boost_generator(group))
            alignment = 1.0 - abs(float(frob_inner(basis[0], direction))) if dim == 1 else 1.0
            row['alignment_defect'] = alignment
            result.check('dimension_%s' % group_slug(group), dim, 1, EQUAL)
            result.check('alignment_%s' % group_slug(group), alignment, 1e-10)
        elif group.field == Field.C and group.unimodular and group.n >= 3:
            result.check('dimension_%s' % group_slug(group), dim, 3, EQUAL)
        rows.append(row)
    result.tables['dimensions'] = pd.DataFrame(rows)


def corollary7(config, result, seed):
    """ Sp1 × Sp1 is totally geodesic in Sp(1,1); in O0(3,3) exp(t(L_ξ, R_η)) is a geodesic only for ξ = 0 or η = 0.
    """
    rng = np.random.default_rng(seed)
    times = config.param('times')
    h = config.integrator.h
    tol = config.param('tol')

    def _imaginary():
        v = rng.standard_normal(3)
        return v / np.linalg.norm(v)

    metric = _metric(O33, config, seed)
    floor = noise_floor(O33, metric, rng, config.param('floor_count'), times, h)
    result.metrics['noise_floor'] = floor
    rows = []
    zero = np.zeros(3)
    for i in range(config.param('single_count')):
        for xi, eta in ((_imaginary(), zero), (zero, _imaginary())):
            defect = corollary7_defect('o33', xi, eta, metric, times, h)
            rows.append({'context': 'o33', 'kind': 'single', 'defect': defect})
            result.check('o33_single_%d_%s' % (i, 'left' if eta is zero else 'right'), defect, tol)
    mixed = []
    for i in range(config.param('mixed_count')):
        defect = corollary7_defect('o33', _imaginary(), _imaginary(), metric, times, h)
        rows.append({'context': 'o33', 'kind': 'mixed', 'defect': defect})
        mixed.append(defect)
    result.check('o33_mixed_min_over_floor', min(mixed) / max(floor, np.finfo(float).tiny),
                 config.param('separation'), GREATER)

    metric = _metric(SP11, config, seed, corollary_symmetries('sp11'))
    for i in range(config.param('sp11_count')):
        defect = corollary7_defect('sp11', _imaginary(), _imaginary(), metric, times, h)
        rows.append({'context': 'sp11', 'kind': 'mixed', 'defect': defect})
        result.check('sp11_%d' % i, defect, tol)
    result.tables['defects'] = pd.DataFrame(rows)


# ---------------------------------------------------------------------------------------------------------------------
# algebraic checks
# ---------------------------------------------------------------------------------------------------------------------

def lowdim_diagrams(config, result, seed):
    """ The three commutative diagrams and the identities behind them. """
    rng = np.random.default_rng(seed)
    samples = config.param('samples')
    rows = []
    for which in DIAGRAMS:
        report = diagram_check(which, samples, seed, config.param('scale'))
        rows.append(report)
        result.check('diagram_%s' % which, report['max_residual'], report['tolerance'])
        if 'triviality_residual' in report:
            result.check('triviality_%s' % which, report['triviality_residual'], 1e-10)
    result.tables['diagrams'] = pd.DataFrame(rows)

    alpha, beta = rng.standard_normal((2, samples, 4))
    result.check('bracket_identity', np.max(bracket_identity_residual(alpha, beta)), 1e-10)
    X = random_lie_element(SP11, rng, size=samples)
    Y = random_lie_element(SP11, rng, size=samples)
    result.check('algebra_bracket', np.max(algebra_bracket_residual(X, Y)), 1e-10)
    w = rng.standard_normal((samples, 4))
    result.check('rotation_formula', np.max(np.abs(rotation_matrix_Iw(w) - conjugation_matrix(w))), 1e-12)

    minus = SplitQuaternion([-1., 0., 0., 0.])
    kernel = frob_norm(split_operator(minus, minus) - identity(4, Field.R))
    result.check('double_cover_kernel', kernel, 1e-12)

    conformal = SphereAction(CONFORMAL, 3)
    g1 = stack([random_element(SP11, rng) for _ in range(samples)])
    g2 = stack([random_element(SP11, rng) for _ in range(samples)])
    z = rng.standard_normal((samples, 4))
    z /= np.linalg.norm(z, axis=-1, keepdims=True)
    result.check('conformal_action_law',
                 np.max(conformal.action_law_residual(morphism_sp11(g1), morphism_sp11(g2), z)), 1e-10)
    projective = SphereAction(PROJECTIVE, 3)
    result.check('projective_action_law',
                 np.max(projective.action_law_residual(random_sl4(rng, samples), random_sl4(rng, samples), z)),
                 1e-10)


def oracle_equivalence(config, result, seed):
    """ act and act_on_graph agree. """
    rng = np.random.default_rng(seed)
    count = config.param('count')
    rows = []
    for group in _groups(config, DESK_NAMES):
        g = MobiusElement(group, stack([random_element(group, rng) for _ in range(count)]))
        U = haar_sample(group.compact_counterpart(), rng, count)
        difference = float(np.max(frob_norm(act(g, U) - act_on_graph(g, U))))
        rows.append({'group': str(group), 'max_difference': difference})
        result.check('oracle_%s' % group_slug(group), difference, config.param('tol'))
    result.tables['differences'] = pd.DataFrame(rows)


def _defaults(scenario, groups=None, quadrature=None, integrator=None, params=None):
    out = {'scenario': scenario, 'groups': groups or [], 'params': params or {}}
    if quadrature:
        out['quadrature'] = quadrature
    if integrator:
        out['integrator'] = integrator
    return out


SCENARIOS = {s.name: s for s in [
    Scenario('metric-closed-form', 'SU(1,1): the squared speed of the boost curve is 4π/(1 − t²)',
             metric_closed_form, _defaults('metric-closed-form', ['SU(1,1)']), MetricClosedFormParams,
             closed_form_group),
    Scenario('finite-length', 'Inextendible geodesics of finite length (boost curve of length π^{3/2} on SU(1,1))',
             finite_length, _defaults('finite-length', quadrature={'mode': WEYL_TORUS, 'grid': 12, 'refine': 14}),
             FiniteLengthParams, check_metric_group),
    Scenario('incompleteness', 'The speed of the boost curve grows like (1 − t²)^{-1/2}; its image is geodesic',
             incompleteness, _defaults('incompleteness', quadrature={'mode': WEYL_TORUS, 'grid': 16, 'refine': 12},
                                       integrator={'T': 1.0, 'dt': 0.05}),
             IncompletenessParams, check_metric_group),
    Scenario('isometry-KxK', 'K × K acts by isometries', isometry_kxk,
             _defaults('isometry-KxK', quadrature={'mode': MONTE_CARLO, 'samples': 256}), IsometryParams,
             check_metric_group),
    Scenario('bi-invariance', 'The metric induced on K is bi-invariant, ‖(X, 0)‖² = vol(M)|X|²', bi_invariance,
             _defaults('bi-invariance', quadrature={'mode': MONTE_CARLO, 'samples': 2000}), BiInvarianceParams,
             check_metric_group),
    Scenario('rigid-geodesic', 'exp(t·diag(X, 0)) is also a geodesic of G', rigid_geodesic,
             _defaults('rigid-geodesic', quadrature={'mode': MONTE_CARLO, 'samples': 128},
                       integrator={'T': 1.0, 'dt': 0.05}),
             RigidGeodesicParams, check_metric_group),
    Scenario('totally-geodesic', 'The inclusions (a)-(e) are totally geodesic', totally_geodesic,
             _defaults('totally-geodesic', quadrature={'mode': MONTE_CARLO, 'samples': 64},
                       integrator={'T': 1.0, 'dt': 0.05}),
             TotallyGeodesicParams),
    Scenario('fixed-point-algebra', 'The fixed point algebra of the kᵢ meets o(n,n) in ℝ(0 I; I 0)',
             fixed_point_algebra_scenario, _defaults('fixed-point-algebra'), FixedPointAlgebraParams,
             fixed_point_group),
    Scenario('mass-concentration', 'The mass of M concentrates at I along the boost curve', mass_concentration,
             _defaults('mass-concentration', ['SU(2,2)']), MassConcentrationParams, any_split),
    Scenario('lowdim-diagrams', 'Split quaternion, conformal and projective diagrams commute', lowdim_diagrams,
             _defaults('lowdim-diagrams'), LowdimDiagramsParams),
    Scenario('corollary7', 'Sp1 × Sp1 is totally geodesic; in O0(3,3) only single factor geodesics of K survive',
             corollary7, _defaults('corollary7', quadrature={'mode': CUBATURE, 'grid': 6}), Corollary7Params),
    Scenario('oracle-equivalence', 'The Möbius action equals the action on graphs of the Grassmannian',
             oracle_equivalence, _defaults('oracle-equivalence'), OracleParams, any_split),
]}


def get_scenario(name):
    return SCENARIOS[name]
