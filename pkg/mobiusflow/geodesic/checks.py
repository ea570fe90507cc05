import numpy as np
from scipy.integrate import quad
from scipy.linalg import null_space
from scipy.optimize import minimize_scalar
from scipy.stats import linregress

from ..algebra.matrices import Mat, identity, matmul, mexp, frob_norm, to_real_vector, scalar_matrix, stack, \
    block_diag, zeros
from ..algebra.scalars import Field, Scalar
from ..groups.curves import boost
from ..groups.embeddings import embedding_pair, defining_residual, complex_structure, quaternion_structures
from ..groups.liealgebra import lie_basis_stack, lie_residual, coordinates, from_coordinates
from ..metric.kinetic import KineticMetric
from ..metric.quadrature import build_sample_set
from ..metric.symmetries import Symmetry, SymmetryGroup
from ..utils.errors import MembershipError, ShapeError
from .chart import Chart, DEFAULT_RADIUS
from .solver import GeodesicSolver, GeodesicState, FD_STEP

__all__ = ['arc_length', 'curve_deviation', 'totally_geodesic_check', 'fixed_point_generators',
           'fixed_point_algebra', 'geodesic_defect', 'compact_factor_direction', 'noise_floor', 'boost_curve_distance',
           'incompleteness_exponent', 'symmetries_for_embedding', 'symmetries_for_boost', 'SUBALGEBRA_TOL']

SUBALGEBRA_TOL = 1e-8


def arc_length(metric, curve, velocity, t0, t1, class_function=False, limit=200):
    """ Length ∫ ‖σ′(t)‖ dt of a curve in the kinetic energy metric.

    Parameters
    ----------
    metric : KineticMetric
        Metric.

    curve : callable
        t ↦ σ(t) (Mat).

    velocity : callable
        t ↦ σ′(t) (Mat).

    t0, t1 : float
        Interval.

    class_function : bool
        The integrands q ↦ |σ̃′(q)|² are class functions (allows torus rules).

    limit : int
        Subinterval limit of the adaptive rule.

    Returns
    -------
    tuple
        Returns (length, error), the error adds the adaptive rule estimate and the propagated relative
        standard error of the metric.
    """
    if t1 == t0:
        return 0.0, 0.0
    relative = [0.0]

    def _speed(t):
        value = metric.norm2(curve(t), velocity(t), class_function=class_function, check=False)
        if value.value <= 0.0:
            return 0.0
        relative[0] = max(relative[0], 0.5 * value.std_error / value.value)
        return np.sqrt(value.value)

    length, error = quad(_speed, t0, t1, limit=limit)
    return length, error + relative[0] * abs(length)


def curve_deviation(trajectory, curve):
    """ Largest ‖g(t) − c(t)‖ over the recorded samples of a trajectory. """
    if len(trajectory) == 0:
        return 0.0
    points = stack(trajectory.points)
    return float(np.max(frob_norm(points - curve(np.array(trajectory.times)))))


def symmetries_for_embedding(src, dst):
    """ Isometries of the compact group of ``dst`` whose common fixed set in ``dst`` contains ``src``.

    (a) entrywise conjugation, (b) conjugation by iI, (c) by iI and jI, (d) by J, (e) by R_i and R_j.

    Returns
    -------
    SymmetryGroup
        Returns the finite group generated.
    """
    label = embedding_pair(src, dst)
    n = dst.n
    if label == 'a':
        generators = [Symmetry.conjugation(n)]
    elif label in ('b', 'c'):
        units = [[0., 1., 0., 0.]] if label == 'b' else [[0., 1., 0., 0.], [0., 0., 1., 0.]]
        generators = []
        for u in units:
            U = scalar_matrix(Scalar(u, Field.H), n, Field.H)
            generators.append(Symmetry(U, U))
    elif label == 'd':
        J = complex_structure(n // 2)
        generators = [Symmetry(J, J)]
    else:
        generators = [Symmetry(S, S) for S in quaternion_structures(n // 4)]
    return SymmetryGroup(generators)


def fixed_point_generators(gid):
    """ Matrices Aⁱ, i = 1..n−1, of the rotation by π/2 in the plane (e₀, eᵢ), over the field of gid. """
    n = gid.n
    out = []
    for i in range(1, n):
        a = np.eye(n)
        a[0, 0] = a[i, i] = 0.0
        a[0, i] = 1.0
        a[i, 0] = -1.0
        out.append(Mat.from_numpy(a, Field.R).astype(gid.field))
    return out


def fixed_point_algebra(gid):
    """ Elements of Lie(G) commuting with every kᵢ = diag(Aⁱ, Aⁱ).

    The commutator constraints are linear in the coordinates of the orthonormal basis; their null space
    is computed over the reals.

    Parameters
    ----------
    gid : GroupId
        Split group with n ≥ 2.

    Returns
    -------
    Mat
        Returns an orthonormal basis of the fixed point algebra, a stack with batch shape (r,).

    Raises
    ------
    ShapeError
        If n < 2.
    """
    if not gid.is_split():
        raise MembershipError('Error_split_only', str(gid))
    if gid.n < 2:
        raise ShapeError('n = %d < 2' % gid.n)
    basis = lie_basis_stack(gid)
    d = basis.batch_shape[0]
    constraints = []
    for A in fixed_point_generators(gid):
        k = block_diag(A, A)
        constraints.append(to_real_vector(matmul(k, basis) - matmul(basis, k)).reshape(d, -1).T)
    kernel = null_space(np.concatenate(constraints, axis=0))
    return from_coordinates(gid, kernel.T)


def symmetries_for_boost(group):
    """ Isometries of M whose common fixed set in G is the image of the boost curve.

    Conjugation by kᵢ = diag(Aⁱ, Aⁱ), plus entrywise conjugation for SU(n,n) and conjugation by iI and jI
    for Sp(n,n).

    Returns
    -------
    SymmetryGroup or None
        Returns None when there is no generator (O0(1,1)).
    """
    n = group.n
    generators = [Symmetry(A, A) for A in fixed_point_generators(group)]
    if group.field == Field.C:
        generators.append(Symmetry.conjugation(n))
    elif group.field == Field.H:
        for u in ([0., 1., 0., 0.], [0., 0., 1., 0.]):
            U = scalar_matrix(Scalar(u, Field.H), n, Field.H)
            generators.append(Symmetry(U, U))
    if not generators:
        return None
    return SymmetryGroup(generators)


def totally_geodesic_check(src, dst, Z, T, dt, spec, h=FD_STEP, radius=DEFAULT_RADIUS, record_every=1):
    """ Geodesic of ``dst`` from the identity with initial velocity Z in the subalgebra of ``src``.

    The metric is estimated on a sample set symmetrized by symmetries_for_embedding, so the embedded
    subgroup is a fixed point set of isometries of the empirical metric.

    Parameters
    ----------
    src, dst : GroupId
        One of the inclusions (a)-(e).

    Z : Mat
        Lie algebra element of dst.

    T, dt : float
        Integration time and step.

    spec : QuadratureSpec
        Quadrature.

    Returns
    -------
    tuple
        Returns (max defining relation residual along the trajectory, Trajectory).

    Raises
    ------
    MembershipError
        If Z is not in the embedded subalgebra.
    """
    residual = float(np.max(defining_residual(src, dst, Z))) + lie_residual(dst, Z)
    if residual > SUBALGEBRA_TOL:
        raise MembershipError('Error_subalgebra', '%.3e' % residual)
    samples = build_sample_set(dst, spec, symmetries_for_embedding(src, dst))
    solver = GeodesicSolver(KineticMetric(dst, samples), h)
    state = GeodesicState.at(dst, identity(dst.matrix_size(), dst.field), coordinates(dst, Z), radius)
    trajectory = solver.integrate(state, T, dt, record_every)
    deviation = float(np.max(defining_residual(src, dst, stack(trajectory.points))))
    return deviation, trajectory


def geodesic_defect(group, Z, metric, times, h=FD_STEP):
    """ Relative defect ‖Γ(z, z)‖_g / ‖z‖²_g of t ↦ exp(tZ).

    In the chart centred at exp(tZ) the curve is the straight line s ↦ s·z, so the geodesic equation
    reduces to Γ(z, z) = 0 at the origin.

    Parameters
    ----------
    group : GroupId
        Split group.

    Z : Mat
        Lie algebra element.

    metric : KineticMetric
        Metric.

    times : numpy.array
        Curve parameters.

    h : float
        Finite difference step.

    Returns
    -------
    numpy.array
        Returns one defect per time.
    """
    solver = GeodesicSolver(metric, h)
    z = coordinates(group, Z)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    origin = np.zeros(z.shape[0])
    out = np.zeros(times.shape[0])
    for i, t in enumerate(times):
        chart = Chart(group, mexp(Z, t))
        tensor = solver.metric_at(chart, origin)
        a = solver.acceleration(chart, origin, z, tensor)
        out[i] = np.sqrt(max(a.dot(tensor).dot(a), 0.0)) / z.dot(tensor).dot(z)
    return out


def compact_factor_direction(group, rng):
    """ Random unit X in the Lie algebra of M such that diag(X, 0) lies in Lie(G).

    For SU(n,n) the trace of X is removed; None is returned when nothing is left (SU(1,1)).
    """
    compact = group.compact_counterpart()
    n = group.n
    X = from_coordinates(compact, rng.standard_normal(compact.dimension()))
    if group.field == Field.C and group.unimodular:
        trace = np.sum(X.data[np.arange(n), np.arange(n), 1]) / n
        X = X - scalar_matrix(1j * trace, n, Field.C)
    size = float(frob_norm(X))
    if size < SUBALGEBRA_TOL:
        return None
    return X * (1.0 / size)


def noise_floor(group, metric, rng, count=3, times=(0.0, 0.5, 1.0), h=FD_STEP):
    """ Largest geodesic_defect over known geodesics exp(t·diag(X, 0)) and exp(t·diag(0, X)).

    These curves are geodesics for every sample set, so their defect measures the finite difference
    and roundoff error only.
    """
    n = group.n
    floor = 0.0
    for _ in range(count):
        X = compact_factor_direction(group, rng)
        if X is None:
            continue
        zero = zeros(n, n, group.field)
        for Z in (block_diag(X, zero), block_diag(zero, X)):
            floor = max(floor, float(np.max(geodesic_defect(group, Z, metric, times, h))))
    return floor


def boost_curve_distance(group, g):
    """ Distance ‖g − γ(s)‖ to the nearest point of the boost curve.

    The start value s = asinh(Re tr B / n) uses the upper right block B of g.

    Returns
    -------
    tuple
        Returns (distance, s).
    """
    n = group.n
    data = g.data
    start = float(np.arcsinh(np.sum(data[np.arange(n), n + np.arange(n), 0]) / n))

    def _distance(s):
        return float(frob_norm(g - boost(group, s)))

    result = minimize_scalar(_distance, bounds=(start - 0.5, start + 0.5), method='bounded',
                             options={'xatol': 1e-12})
    if result.fun < _distance(start):
        return float(result.fun), float(result.x)
    return _distance(start), start


def incompleteness_exponent(t, speeds):
    """ Least squares slope of log ‖σ′(t)‖ against log(1 − t²).

    Returns
    -------
    tuple
        Returns (slope, standard error of the slope).
    """
    t = np.asarray(t, dtype=float)
    fit = linregress(np.log(1.0 - t * t), np.log(np.asarray(speeds, dtype=float)))
    return float(fit.slope), float(fit.stderr)
