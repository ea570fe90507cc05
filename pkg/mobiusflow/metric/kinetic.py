import numpy as np

from ..action.fields import ActionFrame, check_tangent
from ..action.mobius import MobiusElement
from ..algebra.matrices import Mat, matmul, conj_transpose, entry_conj, frob_norm, frob_inner, block_diag, \
    zeros, stack, to_real_vector
from ..algebra.scalars import Field
from ..groups.groupid import GroupId
from ..groups.haarsampling import compact_factor_residual, haar_volume
from ..groups.maximaltorus import torus_point, weyl_density
from ..utils.errors import QuadratureError, MembershipError, DegenerateMetricError, ShapeError
from ..utils.logger import Logger
from ..utils.utils_translation import TextTranslation
from .quadrature import build_sample_set, torus_rule, MONTE_CARLO
from .symmetries import Symmetry

__all__ = ['MetricValue', 'KineticMetric', 'check_metric_group', 'DEFAULT_CHUNK', 'MAX_RESAMPLE', 'K_TOL']

DEFAULT_CHUNK = 4096
MAX_RESAMPLE = 3
K_TOL = 1e-8


def check_metric_group(group):
    """ Raise MembershipError unless the kinetic energy metric of ``group`` is nondegenerate.

    O0(1,1) acts on the single point SO1, and on SO2 one SL2 factor of O0(2,2) acts trivially.

    Parameters
    ----------
    group : GroupId
        Split group.
    """
    if not group.is_split():
        raise MembershipError('Error_split_only', str(group))
    if group.field == Field.R and group.n <= 2:
        raise MembershipError('Error_degenerate_group', str(group))


class MetricValue(object):
    """ Quadrature estimate of a metric coefficient.

    Attributes
    ----------
    value : float
        Estimate.

    std_error : float
        Monte Carlo standard error (0 for deterministic rules).

    spec : dict
        Quadrature specification used.
    """

    def __init__(self, value, std_error, spec):
        self.value = float(value)
        self.std_error = float(std_error)
        self.spec = spec

    def __float__(self):
        return self.value

    def to_dict(self):
        return {'value': self.value, 'std_error': self.std_error, 'spec': self.spec}

    def __repr__(self):
        return 'MetricValue(%.10g ± %.3g)' % (self.value, self.std_error)


class KineticMetric(object):
    """ Kinetic energy metric ⟨X, Y⟩_g = ∫_M ⟨X̃(q), Ỹ(q)⟩ dμ on a split group, with the integral over M
    replaced by a fixed sample set.

    Every evaluation reuses the same nodes, so differences of metric values (finite differences,
    isometry residuals) are free of sampling noise.

    Parameters
    ----------
    group : GroupId or str
        Split group G.

    samples : SampleSet
        Quadrature nodes on the compact counterpart of G.

    chunk : int
        Number of nodes processed at once.
    """

    def __init__(self, group, samples, chunk=DEFAULT_CHUNK):
        if isinstance(group, str):
            group = GroupId.parse(group)
        check_metric_group(group)
        if samples.group != group.compact_counterpart():
            raise MembershipError('Error_group', '%s for %s' % (samples.group, group))
        self.group = group
        self.samples = samples
        self.chunk = int(chunk)

    @property
    def spec(self):
        return self.samples.spec

    def _check_class(self, class_function):
        if self.samples.class_only and not class_function:
            raise QuadratureError('Error_class_function')

    def _as_element(self, g):
        if isinstance(g, MobiusElement):
            return g
        return MobiusElement(self.group, g)

    def _frames(self, g):
        for s in self.samples.chunks(self.chunk):
            yield s, ActionFrame(g, self.samples.points[s])

    def integrand(self, g, X, Y=None):
        """ ⟨X̃(q), Ỹ(q)⟩ at every node, with shape (N,). """
        g = self._as_element(g)
        values = []
        for _, frame in self._frames(g):
            fx = frame.field(X)
            fy = fx if Y is None else frame.field(Y)
            values.append(frob_inner(fx, fy))
        return np.concatenate(values)

    def inner(self, g, X, Y, class_function=False, check=True):
        """ Metric ⟨X, Y⟩ at g.

        Parameters
        ----------
        g : MobiusElement or Mat
            Base point.

        X, Y : Mat
            Tangent vectors at g.

        class_function : bool
            The caller declares q ↦ ⟨X̃(q), Ỹ(q)⟩ a class function (required by the torus rule).

        check : bool
            Verify that X and Y are tangent at g.

        Returns
        -------
        MetricValue
            Returns the estimate and its standard error.
        """
        self._check_class(class_function)
        g = self._as_element(g)
        if check:
            check_tangent(g, X)
            check_tangent(g, Y)
        value, error = self.samples.integrate(self.integrand(g, X, Y))
        return MetricValue(value, error, self.spec.to_dict())

    def norm2(self, g, X, class_function=False, check=True):
        self._check_class(class_function)
        g = self._as_element(g)
        if check:
            check_tangent(g, X)
        value, error = self.samples.integrate(self.integrand(g, X))
        return MetricValue(value, error, self.spec.to_dict())

    def energy(self, g, X):
        """ ‖X‖² at g as a float, without checks. """
        return float(np.sum(self.integrand(self._as_element(g), X) * self.samples.weights))

    def gram(self, g, directions):
        """ Matrix of inner products of a stack of directions and its standard errors.

        Parameters
        ----------
        g : MobiusElement or Mat
            Base point.

        directions : Mat
            Stack of tangent vectors with batch shape (d,).

        Returns
        -------
        tuple
            Returns (gram matrix, standard errors), both with shape (d, d).
        """
        g = self._as_element(g)
        d = directions.batch_shape[0]
        total = np.zeros((d, d))
        s1 = np.zeros((d, d))
        s2 = np.zeros((d, d))
        m = self.samples.orbit_size
        monte_carlo = self.spec.mode == MONTE_CARLO and self.samples.orbits > 1
        for s, frame in self._frames(g):
            data = frame.field(directions).data
            weights = self.samples.weights[s]
            total += np.einsum('n,inabc,jnabc->ij', weights, data, data)
            if monte_carlo:
                products = np.einsum('inabc,jnabc->ijn', data, data)
                means = products.reshape((d, d, -1, m)).mean(axis=-1)
                s1 += np.sum(means, axis=-1)
                s2 += np.sum(means * means, axis=-1)
        total = 0.5 * (total + total.T)
        if not monte_carlo:
            return total, np.zeros((d, d))
        orbits = self.samples.orbits
        variance = np.maximum(s2 - s1 * s1 / orbits, 0.0) / (orbits - 1)
        return total, self.samples.mass() * np.sqrt(variance / orbits)

    def metric_tensor(self, g, basis, class_function=False, resample=True, check=True):
        """ Metric coefficients on a basis of the tangent space at g.

        A tensor that is not positive definite is re-estimated with four times the Monte Carlo samples
        (at most MAX_RESAMPLE times) when ``resample`` is set.

        Parameters
        ----------
        g : MobiusElement or Mat
            Base point.

        basis : list[Mat] or Mat
            Basis of the tangent space (list or stack with batch shape (d,)).

        class_function : bool
            See inner.

        resample : bool
            Re-estimate instead of raising on a non positive definite tensor.

        check : bool
            Verify that the basis has full rank.

        Returns
        -------
        numpy.array
            Returns the symmetric positive definite d×d matrix.

        Raises
        ------
        DegenerateMetricError
            If the tensor is not positive definite.
        """
        self._check_class(class_function)
        if isinstance(basis, (list, tuple)):
            basis = stack(basis)
        if check:
            vectors = to_real_vector(basis)
            if np.linalg.matrix_rank(vectors) < basis.batch_shape[0]:
                raise ShapeError('%d' % basis.batch_shape[0], key='Error_basis')
        for attempt in range(MAX_RESAMPLE + 1):
            tensor, _ = self.gram(g, basis)
            eigenvalues = np.linalg.eigvalsh(tensor)
            if eigenvalues[0] > 0.0:
                return tensor
            if not resample or self.spec.mode != MONTE_CARLO or attempt == MAX_RESAMPLE:
                raise DegenerateMetricError(eigenvalues[0])
            spec = self.spec.replace(samples=4 * self.spec.samples)
            Logger().log('%s %d' % (TextTranslation().get_str('Log_resample'), spec.samples))
            self.samples = build_sample_set(self.group, spec, self.samples.symmetries)

    def _check_compact_factor(self, k):
        residual = compact_factor_residual(self.group, k)
        if residual > K_TOL:
            raise MembershipError('Error_maximal_compact', '%.3e' % residual)

    def isometry_values(self, k1, k2, g, X, common_random_numbers=True):
        """ (‖dF(X)‖² at F(g), ‖X‖² at g) for F(g) = k₁ g k₂⁻¹, k₁, k₂ ∈ K.

        With common random numbers the right hand side is evaluated on the nodes transported by
        q ↦ k₂⁻¹ ∗ q, the change of variables that makes both integrands equal; otherwise on an
        independent sample set (seed + 1).
        """
        self._check_compact_factor(k1)
        self._check_compact_factor(k2)
        g = self._as_element(g)
        k2inv = conj_transpose(k2)
        image = MobiusElement(self.group, matmul(k1, matmul(g.matrix, k2inv)), check=False)
        lhs = self.norm2(image, matmul(k1, matmul(X, k2inv)), check=False)
        if common_random_numbers:
            inverse = Symmetry.from_compact_element(k2inv)
            other = KineticMetric(self.group, self.samples.transported(inverse), self.chunk)
        else:
            spec = self.spec.replace(seed=self.spec.seed + 1)
            other = KineticMetric(self.group, build_sample_set(self.group, spec, self.samples.symmetries),
                                  self.chunk)
        rhs = other.norm2(g, X)
        return lhs, rhs

    def isometry_residual(self, k1, k2, g, X, common_random_numbers=True):
        """ |‖dF(X)‖² − ‖X‖²| / ‖X‖² for F(g) = k₁ g k₂⁻¹.

        Parameters
        ----------
        k1, k2 : Mat
            Elements of the maximal compact subgroup K.

        g : MobiusElement or Mat
            Base point.

        X : Mat
            Tangent vector at g.

        common_random_numbers : bool
            Evaluate both sides on the same (transported) nodes.

        Returns
        -------
        float
            Returns the relative residual.
        """
        lhs, rhs = self.isometry_values(k1, k2, g, X, common_random_numbers)
        return abs(lhs.value - rhs.value) / rhs.value

    def factor_norm_ratios(self, directions):
        """ ‖(X, 0)‖²/|X|² and ‖(0, X)‖²/|X|² at the identity, for every X of a list of Lie(M) elements.

        Returns
        -------
        dict
            Returns arrays 'left', 'left_std', 'right', 'right_std' and the volume of M.
        """
        g = MobiusElement.identity(self.group)
        n = self.group.n
        out = {'left': [], 'left_std': [], 'right': [], 'right_std': [],
               'volume': haar_volume(self.group.compact_counterpart())}
        for X in directions:
            size = float(frob_inner(X, X))
            zero = zeros(n, n, X.field)
            for name, Z in (('left', block_diag(X, zero)), ('right', block_diag(zero, X))):
                value = self.norm2(g, Z)
                out[name].append(value.value / size)
                out[name + '_std'].append(value.std_error / size)
        for name in ('left', 'left_std', 'right', 'right_std'):
            out[name] = np.array(out[name])
        return out

    def conjugation_residual(self, g, X):
        """ |‖conj(X)‖² at conj(g) − ‖X‖² at g| / ‖X‖² on SU(n,n), with conjugated nodes on the right.
        """
        if self.group.field != Field.C:
            raise MembershipError('Error_group', str(self.group))
        g = self._as_element(g)
        image = MobiusElement(self.group, entry_conj(g.matrix), check=False)
        lhs = self.norm2(image, entry_conj(X))
        other = KineticMetric(self.group, self.samples.transported(entry_conj), self.chunk)
        rhs = other.norm2(g, X)
        return abs(lhs.value - rhs.value) / rhs.value

    def weyl_bound_check(self, g, X, grid=64):
        """ Check ∫_M f dμ ≤ C ∫_T f dθ for f = |X̃|², with C the sup of the Weyl density on the grid.

        The left side is this metric's estimate; the right side uses the uniform torus grid without the
        density. Only the direction of the inequality is asserted.

        Returns
        -------
        dict
            Returns the estimate, its standard error, the constant, the bound and whether it holds.
        """
        compact = self.group.compact_counterpart()
        g = self._as_element(g)
        value = self.norm2(g, X, class_function=True)
        nodes, weights = torus_rule(grid)
        m = compact.rank()
        mesh = np.stack(np.meshgrid(*([nodes] * m), indexing='ij'), axis=-1).reshape(-1, m)
        cell = np.prod(np.stack(np.meshgrid(*([weights] * m), indexing='ij'), axis=-1).reshape(-1, m), axis=-1)
        constant = float(np.max(weyl_density(compact, mesh)))
        frame = ActionFrame(g, torus_point(compact, mesh))
        f = frob_norm(frame.field(X)) ** 2
        bound = constant * float(np.sum(f * cell))
        return {'estimate': value.value, 'std_error': value.std_error, 'constant': constant, 'bound': bound,
                'holds': bool(value.value <= bound + 3.0 * value.std_error)}
