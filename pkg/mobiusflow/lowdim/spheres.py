import numpy as np

from ..utils.errors import InvariantViolation, ShapeError, ConfigError

__all__ = ['SphereAction', 'CONFORMAL', 'PROJECTIVE', 'TIMELIKE_TOL', 'lorentz_form', 'lorentz_residual',
           'conformal_act', 'projective_act']

CONFORMAL = 'conformal'
PROJECTIVE = 'projective'

TIMELIKE_TOL = 1e-14


def lorentz_form(m):
    """ diag(1, −I_{m+1}), the form preserved by O(1, m+1). """
    return np.diag(np.concatenate([[1.0], -np.ones(m + 1)]))


def lorentz_residual(A):
    """ Membership residual in O0(1, m+1): ‖AᵀηA − η‖ plus 1 when A reverses time or orientation. """
    A = np.asarray(A, dtype=float)
    eta = lorentz_form(A.shape[-1] - 2)
    residual = np.linalg.norm(np.swapaxes(A, -1, -2) @ eta @ A - eta, axis=(-2, -1))
    proper = (A[..., 0, 0] > 0.0) & (np.linalg.det(A) > 0.0)
    return residual + np.where(proper, 0.0, 1.0)


def _check_points(z, size):
    z = np.asarray(z, dtype=float)
    if z.shape[-1] != size:
        raise ShapeError('%s (expected %d coordinates)' % (z.shape, size))
    return z


def conformal_act(A, z):
    """ Conformal action of O0(1, m+1) on S^m: A(1, z)ᵀ ∈ R(1, z′)ᵀ.

    Parameters
    ----------
    A : numpy.array
        Matrix (or stack) with shape (..., m+2, m+2).

    z : numpy.array
        Unit vectors with shape (..., m+1).

    Returns
    -------
    numpy.array
        Returns z′, the spatial part of A(1, z)ᵀ over its time part.

    Raises
    ------
    InvariantViolation
        If the time part vanishes, which elements of O0(1, m+1) never produce.
    """
    A = np.asarray(A, dtype=float)
    z = _check_points(z, A.shape[-1] - 1)
    ones = np.ones(z.shape[:-1] + (1,))
    y = np.einsum('...ij,...j->...i', A, np.concatenate([ones, z], axis=-1))
    if np.any(np.abs(y[..., 0]) < TIMELIKE_TOL):
        raise InvariantViolation(key='Error_timelike')
    return y[..., 1:] / y[..., :1]


def projective_act(A, z):
    """ Projective action Az/|Az| of SL(m+1, R) on S^m. """
    A = np.asarray(A, dtype=float)
    z = _check_points(z, A.shape[-1])
    y = np.einsum('...ij,...j->...i', A, z)
    return y / np.linalg.norm(y, axis=-1, keepdims=True)


class SphereAction(object):
    """ Conformal or projective action on the sphere S^m.

    Attributes
    ----------
    kind : str
        'conformal' (group O0(1, m+1)) or 'projective' (group SL(m+1, R)).

    m : int
        Dimension of the sphere.
    """

    def __init__(self, kind, m):
        if kind not in (CONFORMAL, PROJECTIVE):
            raise ConfigError('kind', kind)
        self.kind = kind
        self.m = int(m)

    @property
    def matrix_size(self):
        return self.m + 2 if self.kind == CONFORMAL else self.m + 1

    def __call__(self, A, z):
        if self.kind == CONFORMAL:
            return conformal_act(A, z)
        return projective_act(A, z)

    def member_residual(self, A):
        if self.kind == CONFORMAL:
            return lorentz_residual(A)
        return np.abs(np.linalg.det(np.asarray(A, dtype=float)) - 1.0)

    def sphere_residual(self, z):
        """ |‖z‖ − 1| for each point. """
        return np.abs(np.linalg.norm(z, axis=-1) - 1.0)

    def action_law_residual(self, A, B, z):
        """ ‖(AB)·z − A·(B·z)‖ for each point. """
        AB = np.matmul(A, B)
        return np.linalg.norm(self(AB, z) - self(A, self(B, z)), axis=-1)
