import numpy as np
import pandas as pd

from ..groups.groupid import membership_residuals
from ..utils.errors import DegenerateMetricError, SingularMatrixError, InvariantViolation
from ..utils.logger import Logger
from ..utils.serializable import Serializable
from ..utils.utils_io import write_csv
from ..utils.utils_translation import TextTranslation
from .chart import Chart

__all__ = ['GeodesicState', 'GeodesicSolver', 'Trajectory', 'FD_STEP', 'RK4',
           'STOP_COMPLETED', 'STOP_DEGENERATE', 'STOP_NON_FINITE']

FD_STEP = 1e-3

STOP_COMPLETED = 'completed'
STOP_DEGENERATE = 'degenerate-metric'
STOP_NON_FINITE = 'non-finite'

# Butcher table of the classical fourth order method
RK4 = {'nodes': [0.5, 0.5, 1.0],
       'weights': [1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0],
       'coeff': [[0.5],
                 [0.0, 0.5],
                 [0.0, 0.0, 1.0]]}


class GeodesicState(object):
    """ Position and velocity in a chart.

    Attributes
    ----------
    chart : Chart
        Current chart.

    x : numpy.array
        Coordinates.

    v : numpy.array
        Coordinate velocity.

    t : float
        Time.

    energy : float or None
        Cached ½ g(x)(v, v).
    """

    def __init__(self, chart, x, v, t=0.0, energy=None):
        self.chart = chart
        self.x = np.asarray(x, dtype=float)
        self.v = np.asarray(v, dtype=float)
        self.t = float(t)
        self.energy = energy

    @staticmethod
    def at(group, center, v, radius=1.0):
        """ State at the centre of a new chart around ``center``. """
        chart = Chart(group, center, radius)
        return GeodesicState(chart, np.zeros(chart.dim), v)

    def point(self):
        return self.chart.point(self.x)

    def velocity(self):
        """ Velocity as a tangent matrix at point(). """
        return self.chart.differential(self.x, self.v)

    def reversed(self):
        return GeodesicState(self.chart, self.x.copy(), -self.v, self.t, self.energy)


class Trajectory(Serializable):
    """ Samples of an integrated geodesic.

    Attributes
    ----------
    times : list[float]
        Times.

    points : list[Mat]
        Points g(t).

    energies : list[float]
        ½ g(ẋ, ẋ) at each sample.

    residuals : list[float]
        Membership residual of each point.

    stop_reason : str
        'completed', 'degenerate-metric' or 'non-finite'.

    diagnostic : str
        Message of the condition that stopped the integration.

    final_state : GeodesicState or None
        State at the last time.

    recenterings : list[float]
        Times at which the chart was re-centred.
    """

    def __init__(self, group):
        self.group = group
        self.times = []
        self.points = []
        self.energies = []
        self.residuals = []
        self.stop_reason = STOP_COMPLETED
        self.diagnostic = ''
        self.final_state = None
        self.recenterings = []

    def append(self, t, point, energy):
        self.times.append(float(t))
        self.points.append(point)
        self.energies.append(float(energy))
        self.residuals.append(float(np.max(membership_residuals(self.group, point))))

    def __len__(self):
        return len(self.times)

    def energy_drift(self):
        """ Largest relative energy change per unit time. """
        if len(self.times) < 2 or self.energies[0] == 0.0:
            return 0.0
        span = abs(self.times[-1] - self.times[0])
        change = np.max(np.abs(np.array(self.energies) - self.energies[0])) / abs(self.energies[0])
        return float(change / max(span, 1.0))

    def to_frame(self):
        """ Table with columns t, g_<r>_<c>_<component> (components of the field), energy, membership. """
        rows = []
        field_dim = self.group.field.dim
        for t, point, energy, residual in zip(self.times, self.points, self.energies, self.residuals):
            row = {'t': t}
            data = point.data
            for r in range(data.shape[-3]):
                for c in range(data.shape[-2]):
                    for a in range(field_dim):
                        row['g_%d_%d_%d' % (r, c, a)] = data[r, c, a]
            row['energy'] = energy
            row['membership_residual'] = residual
            rows.append(row)
        return pd.DataFrame(rows)

    def to_csv(self, filename, scenario='trajectory', table='trajectory'):
        write_csv(self.to_frame(), filename, scenario, table)


class GeodesicSolver(object):
    """ Geodesics of a kinetic energy metric in exponential charts.

    Christoffel symbols come from central differences (step h) of the metric tensor, which the metric
    evaluates on one fixed sample set, so all stencil points share their nodes.

    Parameters
    ----------
    metric : KineticMetric
        Metric of the split group.

    h : float
        Finite difference step in chart coordinates.
    """

    def __init__(self, metric, h=FD_STEP):
        self.metric = metric
        self.h = float(h)

    @property
    def group(self):
        return self.metric.group

    def metric_at(self, chart, x):
        """ Metric tensor in coordinates at x. """
        return self.metric.metric_tensor(chart.point(x), chart.tangent_basis(x), class_function=False,
                                         resample=False, check=False)

    def energy_at(self, chart, x, v):
        """ vᵀ g(x) v, which needs the induced field of a single direction. """
        return self.metric.energy(chart.point(x), chart.differential(x, v))

    def christoffel(self, chart, x):
        """ Christoffel symbols Γ[k, i, j] at x.

        Γᵏᵢⱼ = ½ gᵏˡ (∂ᵢ g_lj + ∂ⱼ g_li − ∂ₗ g_ij) with central differences in every coordinate.

        Parameters
        ----------
        chart : Chart
            Chart.

        x : numpy.array
            Coordinates.

        Returns
        -------
        numpy.array
            Returns an array with shape (d, d, d), symmetric in the last two indices.

        Raises
        ------
        DegenerateMetricError
            If the tensor at x or at a stencil point is not positive definite.
        """
        x = np.asarray(x, dtype=float)
        d = chart.dim
        derivative = np.zeros((d, d, d))
        for m in range(d):
            e = np.zeros(d)
            e[m] = self.h
            derivative[m] = (self.metric_at(chart, x + e) - self.metric_at(chart, x - e)) / (2.0 * self.h)
        # derivative[m, l, j] = ∂_m g_lj
        lowered = 0.5 * (np.einsum('ilj->lij', derivative) + np.einsum('jli->lij', derivative) - derivative)
        gamma = np.linalg.solve(self.metric_at(chart, x), lowered.reshape(d, d * d)).reshape(d, d, d)
        return 0.5 * (gamma + np.swapaxes(gamma, 1, 2))

    def acceleration(self, chart, x, v, tensor=None):
        """ ẍ = −Γ(v, v) evaluated directionally.

        Γ(v, v) = g⁻¹ [(∂_v g) v − ½ ∇(vᵀ g v)]: the directional derivative uses two metric tensors
        and the gradient one induced field per stencil point.

        Returns
        -------
        numpy.array
            Returns the coordinate acceleration.
        """
        x = np.asarray(x, dtype=float)
        v = np.asarray(v, dtype=float)
        d = chart.dim
        speed = float(np.linalg.norm(v))
        if speed == 0.0:
            return np.zeros(d)
        if tensor is None:
            tensor = self.metric_at(chart, x)
        u = v / speed
        step = self.h * u
        directional = (self.metric_at(chart, x + step) - self.metric_at(chart, x - step)).dot(v) \
            * (speed / (2.0 * self.h))
        gradient = np.zeros(d)
        for m in range(d):
            e = np.zeros(d)
            e[m] = self.h
            gradient[m] = (self.energy_at(chart, x + e, v) - self.energy_at(chart, x - e, v)) / (2.0 * self.h)
        return -np.linalg.solve(tensor, directional - 0.5 * gradient)

    def _derivative(self, chart, state):
        d = chart.dim
        x, v = state[:d], state[d:]
        return np.concatenate([v, self.acceleration(chart, x, v)])

    def step(self, chart, x, v, dt, butcher=RK4):
        """ One explicit Runge-Kutta step of (x, v)' = (v, −Γ(v, v)). """
        d = chart.dim
        state = np.concatenate([x, v])
        k = [self._derivative(chart, state)]
        for i in range(len(butcher['nodes'])):
            param = np.copy(state)
            for j in range(len(butcher['coeff'][i])):
                param += butcher['coeff'][i][j] * dt * k[j]
            k.append(self._derivative(chart, param))
        new_state = np.copy(state)
        for i in range(len(k)):
            new_state += k[i] * butcher['weights'][i] * dt
        return new_state[:d], new_state[d:]

    def integrate(self, state, T, dt, record_every=1, progress=False):
        """ Integrate the geodesic equation with fixed steps for a time T.

        The chart is re-centred whenever ‖x‖ > r/2. A non positive definite metric or a singular
        evaluation stops the integration with stop_reason and diagnostic set; nothing is raised.

        Parameters
        ----------
        state : GeodesicState
            Initial state.

        T : float
            Integration time (positive).

        dt : float
            Step.

        record_every : int
            Record one sample every this many steps.

        progress : bool
            Show a progress bar through the Logger.

        Returns
        -------
        Trajectory
            Returns the recorded samples.
        """
        trajectory = Trajectory(self.group)
        chart, x, v, t = state.chart, state.x.copy(), state.v.copy(), state.t
        steps = int(round(abs(T) / dt))
        logger = Logger()
        try:
            trajectory.append(t, chart.point(x), 0.5 * v.dot(self.metric_at(chart, x)).dot(v))
            iterator = range(1, steps + 1)
            if progress:
                iterator = logger.progressbar(iterator, prefix='geodesic', end='')
            for i in iterator:
                x, v = self.step(chart, x, v, dt)
                t += dt
                if not (np.all(np.isfinite(x)) and np.all(np.isfinite(v))):
                    trajectory.stop_reason = STOP_NON_FINITE
                    trajectory.diagnostic = 't = %g' % t
                    break
                if chart.needs_recentering(x):
                    chart, v = chart.recentered(x, v)
                    x = np.zeros(chart.dim)
                    trajectory.recenterings.append(t)
                if i % record_every == 0 or i == steps:
                    energy = 0.5 * v.dot(self.metric_at(chart, x)).dot(v)
                    trajectory.append(t, chart.point(x), energy)
        except (DegenerateMetricError, SingularMatrixError, InvariantViolation, np.linalg.LinAlgError) as e:
            trajectory.stop_reason = STOP_DEGENERATE
            trajectory.diagnostic = '%s at t = %g' % (e, t)
            logger.log('%s: %s' % (TextTranslation().get_str('Log_stop'), trajectory.diagnostic))
        if trajectory.recenterings:
            logger.log('%s = %s' % (TextTranslation().get_str('Log_recenter'),
                                    ', '.join('%g' % s for s in trajectory.recenterings)))
        trajectory.final_state = GeodesicState(chart, x, v, t)
        if trajectory.energies:
            trajectory.final_state.energy = trajectory.energies[-1]
        return trajectory
