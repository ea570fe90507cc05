import numpy as np

from ..algebra.matrices import identity, block_matrix
from ..utils.errors import MembershipError

__all__ = ['boost_generator', 'boost', 'sigma_curve', 'sigma_velocity']


def _check_split(gid):
    if not gid.is_split():
        raise MembershipError('Error_split_only', str(gid))


def _hyperbolic(gid, diagonal, off_diagonal):
    eye = identity(gid.n, gid.field)
    diagonal = eye * np.asarray(diagonal, dtype=float)
    off_diagonal = eye * np.asarray(off_diagonal, dtype=float)
    return block_matrix([[diagonal, off_diagonal], [off_diagonal, diagonal]])


def boost_generator(gid):
    """ The Lie algebra element (0 I; I 0). """
    _check_split(gid)
    return _hyperbolic(gid, 0.0, 1.0)


def boost(gid, t):
    """ γ(t) = exp(t (0 I; I 0)) = (cosh t I, sinh t I; sinh t I, cosh t I); t may be an array. """
    _check_split(gid)
    return _hyperbolic(gid, np.cosh(t), np.sinh(t))


def sigma_curve(gid, s):
    """ σ(s) = (1 − s²)^{-1/2} (I sI; sI I) for s ∈ (−1, 1), the reparametrization γ(artanh s). """
    _check_split(gid)
    s = np.asarray(s, dtype=float)
    c = 1.0 / np.sqrt(1.0 - s * s)
    return _hyperbolic(gid, c, s * c)


def sigma_velocity(gid, s):
    """ Exact derivative of sigma_curve with respect to s. """
    _check_split(gid)
    s = np.asarray(s, dtype=float)
    w = 1.0 - s * s
    return _hyperbolic(gid, s * w ** -1.5, s * s * w ** -1.5 + w ** -0.5)
