import numpy as np
from numpy.polynomial.legendre import leggauss

from ..algebra.matrices import Mat, matmul, complex_representation
from ..algebra.scalars import Field, left_matrix, right_matrix, qconj
from ..groups.groupid import GroupId
from ..groups.haarsampling import haar_sample, haar_volume
from ..groups.maximaltorus import torus_point, weyl_density
from ..utils.errors import QuadratureError
from ..utils.serializable import Serializable

__all__ = ['QuadratureSpec', 'SampleSet', 'build_sample_set', 'torus_rule', 'sphere3_rule',
           'MONTE_CARLO', 'WEYL_TORUS', 'CUBATURE', 'QUADRATURE_MODES', 'DEFAULT_SAMPLES', 'DEFAULT_GRID']

MONTE_CARLO = 'monte-carlo'
WEYL_TORUS = 'weyl-torus'
CUBATURE = 'cubature'
QUADRATURE_MODES = (MONTE_CARLO, WEYL_TORUS, CUBATURE)

DEFAULT_SAMPLES = 10 ** 5
DEFAULT_GRID = 64


class QuadratureSpec(object):
    """ How integrals over M are evaluated.

    Attributes
    ----------
    mode : str
        'monte-carlo' (Haar samples), 'weyl-torus' (class functions only) or 'cubature' (product rules
        for U1, SO2, Sp1, SO3 and U2).

    samples : int
        Number of Haar samples (monte-carlo).

    seed : int
        Seed of the random generator (monte-carlo).

    grid : int
        Nodes per torus angle (weyl-torus) or order of the product rule (cubature).

    refine : int
        Levels of geometric grading of the torus rule toward the angle π, 0 for the uniform rule.
    """

    def __init__(self, mode=MONTE_CARLO, samples=DEFAULT_SAMPLES, seed=0, grid=DEFAULT_GRID, refine=0):
        if mode not in QUADRATURE_MODES:
            raise QuadratureError('Error_mode', str(mode))
        if mode == MONTE_CARLO and int(samples) < 1:
            raise QuadratureError('Error_samples', str(samples))
        if mode != MONTE_CARLO and int(grid) < 1:
            raise QuadratureError('Error_samples', 'grid = %s' % grid)
        if int(refine) < 0:
            raise QuadratureError('Error_samples', 'refine = %s' % refine)
        self.mode = mode
        self.samples = int(samples)
        self.seed = int(seed)
        self.grid = int(grid)
        self.refine = int(refine)

    def to_dict(self):
        return {'mode': self.mode, 'samples': self.samples, 'seed': self.seed, 'grid': self.grid,
                'refine': self.refine, 'mass': 'vol(M) closed form'}

    @staticmethod
    def from_dict(data):
        return QuadratureSpec(mode=data.get('mode', MONTE_CARLO),
                              samples=data.get('samples', DEFAULT_SAMPLES),
                              seed=data.get('seed', 0),
                              grid=data.get('grid', DEFAULT_GRID),
                              refine=data.get('refine', 0))

    def replace(self, **kwargs):
        data = self.to_dict()
        data.update(kwargs)
        return QuadratureSpec.from_dict(data)

    def __eq__(self, other):
        return isinstance(other, QuadratureSpec) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'QuadratureSpec(%s)' % ', '.join('%s=%s' % kv for kv in sorted(self.to_dict().items()))


class SampleSet(Serializable):
    """ Quadrature nodes on M and their weights (the weights add up to vol(M)).

    Points of a symmetrized set are stored orbit after orbit: the points of orbit o occupy the indices
    o·orbit_size to (o + 1)·orbit_size − 1, and standard errors are computed from orbit means.

    Attributes
    ----------
    group : GroupId
        Compact group M.

    points : Mat
        Stack of nodes with batch shape (N,).

    weights : numpy.array
        Weights with shape (N,).

    spec : QuadratureSpec
        Rule that produced the set.

    class_only : bool
        True when the rule is only valid for class functions (weyl-torus).

    orbit_size : int
        Number of points per orbit of the symmetry group (1 without symmetrization).

    symmetries : SymmetryGroup or None
        Symmetries applied to the set.
    """

    def __init__(self, group, points, weights, spec, class_only=False, orbit_size=1, symmetries=None):
        weights = np.asarray(weights, dtype=float)
        if weights.size == 0:
            raise QuadratureError('Error_samples', '0')
        self.group = group
        self.points = points
        self.weights = weights
        self.spec = spec
        self.class_only = class_only
        self.orbit_size = int(orbit_size)
        self.symmetries = symmetries

    @property
    def size(self):
        return self.weights.shape[0]

    @property
    def orbits(self):
        return self.size // self.orbit_size

    def mass(self):
        return float(np.sum(self.weights))

    def integrate(self, values):
        """ Weighted sum of values with shape (..., N) and its standard error (0 for deterministic rules).
        """
        values = np.asarray(values, dtype=float)
        value = np.sum(values * self.weights, axis=-1)
        if self.spec.mode != MONTE_CARLO or self.orbits < 2:
            return value, np.zeros_like(value)
        means = values.reshape(values.shape[:-1] + (self.orbits, self.orbit_size)).mean(axis=-1)
        std = np.std(means, axis=-1, ddof=1)
        return value, self.mass() * std / np.sqrt(self.orbits)

    def chunks(self, size):
        """ Slices over the points, each holding whole orbits. """
        step = max(1, int(size) // self.orbit_size) * self.orbit_size
        for start in range(0, self.size, step):
            yield slice(start, min(start + step, self.size))

    def transported(self, transform):
        """ The same rule with every node q replaced by transform(q) (a Haar preserving map). """
        return SampleSet(self.group, transform(self.points), self.weights.copy(), self.spec, self.class_only,
                         self.orbit_size, self.symmetries)


def torus_rule(grid, refine=0):
    """ Nodes and weights of a rule on [0, 2π).

    The uniform rule (trapezoid on the circle) is used when refine is 0; otherwise composite
    Gauss-Legendre panels of ``grid`` nodes whose widths halve toward π, where the integrands of the
    boost family concentrate as the parameter approaches 1.
    """
    if refine == 0:
        nodes = 2.0 * np.pi * np.arange(grid) / grid
        return nodes, np.full(grid, 2.0 * np.pi / grid)
    x, w = leggauss(grid)
    distances = np.pi * 0.5 ** np.arange(refine + 1)
    panels = [(np.pi - distances[-1], np.pi + distances[-1])]
    for j in range(refine):
        panels.append((np.pi - distances[j], np.pi - distances[j + 1]))
        panels.append((np.pi + distances[j + 1], np.pi + distances[j]))
    nodes, weights = [], []
    for (a, b) in panels:
        nodes.append(0.5 * (b - a) * x + 0.5 * (b + a))
        weights.append(0.5 * (b - a) * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _torus_set(compact, spec):
    m = compact.rank()
    if m == 0:
        raise QuadratureError('Error_cubature', str(compact))
    nodes, weights = torus_rule(spec.grid, spec.refine)
    mesh = np.stack(np.meshgrid(*([nodes] * m), indexing='ij'), axis=-1).reshape(-1, m)
    wmesh = np.prod(np.stack(np.meshgrid(*([weights] * m), indexing='ij'), axis=-1).reshape(-1, m), axis=-1)
    density = weyl_density(compact, mesh)
    keep = density > 0.0
    return SampleSet(compact, torus_point(compact, mesh[keep]), (wmesh * density)[keep], spec, class_only=True)


def sphere3_rule(grid):
    """ Product rule on the unit quaternions S³ in Hopf coordinates.

    u = √(1−c) e^{iξ₁} + √c e^{iξ₂} j: Gauss-Legendre in c ∈ [0, 1] and the trapezoid rule in ξ₁, ξ₂
    (2·grid nodes each). The weights add up to vol(S³) = 2π².

    Returns
    -------
    tuple
        Returns (quaternions with shape (N, 4), weights with shape (N,)).
    """
    x, w = leggauss(grid)
    c = 0.5 * (x + 1.0)
    wc = 0.5 * w
    xi = 2.0 * np.pi * np.arange(2 * grid) / (2 * grid)
    wxi = 2.0 * np.pi / (2 * grid)
    C, X1, X2 = np.meshgrid(c, xi, xi, indexing='ij')
    W = np.broadcast_to(wc[:, None, None] * wxi * wxi * 0.5, C.shape)
    r1 = np.sqrt(1.0 - C)
    r2 = np.sqrt(C)
    quaternions = np.stack([r1 * np.cos(X1), r1 * np.sin(X1), r2 * np.cos(X2), r2 * np.sin(X2)], axis=-1)
    return quaternions.reshape(-1, 4), W.reshape(-1)


def _cubature_set(compact, spec):
    name = compact.get_name()
    g = spec.grid
    if name in ('U1', 'SO2'):
        theta = 2.0 * np.pi * np.arange(2 * g) / (2 * g)
        points = torus_point(compact, theta[:, None])
        weights = np.ones(theta.shape[0])
    elif name == 'Sp1':
        u, weights = sphere3_rule(g)
        points = Mat(u[:, None, None, :], Field.H)
    elif name == 'SO3':
        u, weights = sphere3_rule(g)
        # double cover S³ → SO3, u ↦ conjugation by u on Im(H)
        rotations = np.matmul(left_matrix(u), right_matrix(qconj(u)))[:, 1:, 1:]
        points = Mat.from_numpy(rotations, Field.R)
    elif name == 'U2':
        u, w3 = sphere3_rule(g)
        special = complex_representation(Mat(u[:, None, None, :], Field.H))
        phi = 2.0 * np.pi * np.arange(2 * g) / (2 * g)
        phases = np.exp(1j * phi)
        points = Mat.from_numpy((phases[:, None, None, None] * special[None]).reshape(-1, 2, 2), Field.C)
        weights = np.broadcast_to(w3[None, :], (phi.shape[0], w3.shape[0])).reshape(-1)
    else:
        raise QuadratureError('Error_cubature', name)
    weights = np.asarray(weights, dtype=float)
    weights = weights * (haar_volume(compact) / np.sum(weights))
    return SampleSet(compact, points, weights, spec)


def build_sample_set(group, spec, symmetries=None):
    """ Quadrature nodes and weights on the compact group of ``group``.

    Parameters
    ----------
    group : GroupId
        Compact group M, or a split group (its compact counterpart is used).

    spec : QuadratureSpec
        Rule.

    symmetries : SymmetryGroup or None
        When given, every node is replaced by its orbit (weights divided by the orbit size).

    Returns
    -------
    SampleSet
        Returns the nodes and weights.
    """
    if isinstance(group, str):
        group = GroupId.parse(group)
    compact = group.compact_counterpart()
    if spec.mode == MONTE_CARLO:
        rng = np.random.default_rng(spec.seed)
        points = haar_sample(compact, rng, spec.samples)
        sample_set = SampleSet(compact, points, np.full(spec.samples, haar_volume(compact) / spec.samples), spec)
    elif spec.mode == WEYL_TORUS:
        sample_set = _torus_set(compact, spec)
    else:
        sample_set = _cubature_set(compact, spec)
    if symmetries is not None:
        sample_set = symmetries.symmetrize(sample_set)
    return sample_set
