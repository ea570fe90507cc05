from math import factorial

import numpy as np

from ..algebra.matrices import Mat
from ..algebra.scalars import Field
from ..utils.errors import ShapeError, MembershipError
from .haarsampling import haar_volume

__all__ = ['torus_point', 'weyl_density', 'weyl_group_order']


def _check(gid, theta):
    if not gid.is_compact():
        raise MembershipError('Error_compact_only', str(gid))
    theta = np.asarray(theta, dtype=float)
    if theta.ndim == 0 or theta.shape[-1] != gid.rank():
        raise ShapeError('%d (got %s)' % (gid.rank(), theta.shape), key='Error_rank')
    return theta


def torus_point(gid, theta):
    """ Point of the maximal torus.

    diag(R_θ1, ..., R_θm) for SO2m, diag(R_θ1, ..., R_θm, 1) for SO2m+1 and diag(e^{iθ1}, ..., e^{iθn})
    for Un and Spn.

    Parameters
    ----------
    gid : GroupId
        Compact group.

    theta : numpy.array
        Angles with shape (..., rank).

    Returns
    -------
    Mat
        Returns the torus element (a stack when theta has leading axes).
    """
    theta = _check(gid, theta)
    n = gid.n
    batch = theta.shape[:-1]
    data = np.zeros(batch + (n, n, 4))
    if gid.field == Field.R:
        for k in range(gid.rank()):
            c, s = np.cos(theta[..., k]), np.sin(theta[..., k])
            data[..., 2 * k, 2 * k, 0] = c
            data[..., 2 * k, 2 * k + 1, 0] = -s
            data[..., 2 * k + 1, 2 * k, 0] = s
            data[..., 2 * k + 1, 2 * k + 1, 0] = c
        if n % 2 == 1:
            data[..., n - 1, n - 1, 0] = 1.0
    else:
        idx = np.arange(n)
        data[..., idx, idx, 0] = np.cos(theta)
        data[..., idx, idx, 1] = np.sin(theta)
    return Mat(data, gid.field)


def weyl_group_order(gid):
    m = gid.rank()
    if gid.field == Field.C:
        return factorial(m)
    if gid.field == Field.R and gid.n % 2 == 0:
        return 2 ** (m - 1) * factorial(m) if m > 0 else 1
    return 2 ** m * factorial(m)


def weyl_density(gid, theta):
    """ Weyl density on the torus cube [0, 2π)^rank.

    Class function integrals over M equal the integral of f(torus_point(θ)) weyl_density(θ) dθ; the
    density integrates to vol(M).

    Parameters
    ----------
    gid : GroupId
        Compact group.

    theta : numpy.array
        Angles with shape (..., rank).

    Returns
    -------
    numpy.array
        Returns the density with shape theta.shape[:-1].
    """
    theta = _check(gid, theta)
    m = gid.rank()
    density = np.ones(theta.shape[:-1])
    if gid.field == Field.C:
        z = np.exp(1j * theta)
        for j in range(m):
            for k in range(j + 1, m):
                density = density * np.abs(z[..., j] - z[..., k]) ** 2
    else:
        c = np.cos(theta)
        for j in range(m):
            for k in range(j + 1, m):
                density = density * (2.0 * c[..., j] - 2.0 * c[..., k]) ** 2
        if gid.field == Field.R and gid.n % 2 == 1:
            density = density * np.prod(2.0 - 2.0 * c, axis=-1)
        elif gid.field == Field.H:
            density = density * np.prod(4.0 * np.sin(theta) ** 2, axis=-1)
    norm = weyl_group_order(gid) * (2.0 * np.pi) ** m
    return haar_volume(gid) * density / norm
