import numpy as np
from scipy.special import gamma

from ..algebra.matrices import Mat, block_diag, gram_schmidt, mexp, matmul, random_gaussian, det, \
    frob_norm
from ..algebra.scalars import Field
from ..utils.errors import MembershipError
from .groupid import GroupId, membership_residuals
from .liealgebra import random_lie_element

__all__ = ['haar_sample', 'haar_volume', 'sphere_volume', 'random_compact_pair', 'compact_factor_residual',
           'random_element']


def _check_compact(gid):
    if not gid.is_compact():
        raise MembershipError('Error_compact_only', str(gid))


def haar_sample(gid, rng, size=None):
    """ Haar distributed elements of a compact group.

    Gaussian matrix, QR decomposition and phase correction of the diagonal of R for SOn and Un; for Spn
    the Gram-Schmidt process runs in quaternion arithmetic (right division by the norms), which gives a
    Q factor whose R has positive real diagonal.

    Parameters
    ----------
    gid : GroupId
        Compact group.

    rng : numpy.random.Generator
        Source of randomness.

    size : int or None
        Number of samples, None for a single matrix.

    Returns
    -------
    Mat
        Returns a matrix, or a stack with batch shape (size,).
    """
    _check_compact(gid)
    n = gid.n
    batch = () if size is None else (int(size),)
    if gid.field == Field.H:
        return gram_schmidt(random_gaussian(n, n, Field.H, rng, batch))

    if gid.field == Field.R:
        z = rng.standard_normal(batch + (n, n))
    else:
        z = (rng.standard_normal(batch + (n, n)) + 1j * rng.standard_normal(batch + (n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    ph = d / np.abs(d)
    q = q * ph[..., None, :]
    if gid.field == Field.R:
        # O(n) Haar conditioned to det = 1 by flipping one column
        sign = np.sign(np.linalg.det(q))
        q[..., :, 0] *= sign[..., None]
    return Mat.from_numpy(q, gid.field)


def sphere_volume(m):
    """ Volume of the unit sphere S^m. """
    return 2.0 * np.pi ** ((m + 1) / 2.0) / gamma((m + 1) / 2.0)


def haar_volume(gid):
    """ Riemannian volume of SOn, Un or Spn for the metric Re tr(conj(X)ᵀY).

    The fibration M_n → S^{dn−1} (first column) has fibre M_{n−1}; horizontal directions off the
    diagonal have norm √2 times their image, which gives vol(M_n) = Π_k vol(S^{dk−1}) 2^{(k−1)d/2}.

    Parameters
    ----------
    gid : GroupId
        Compact group.

    Returns
    -------
    float
        Returns vol(M).
    """
    _check_compact(gid)
    d = gid.field.dim
    volume = 1.0
    start = 2 if gid.field == Field.R else 1
    for k in range(start, gid.n + 1):
        volume *= sphere_volume(d * k - 1) * 2.0 ** ((k - 1) * d / 2.0)
    return float(volume)


def random_compact_pair(gid, rng):
    """ Random element diag(A, D) of the maximal compact subgroup K of a split group.

    For SU(n,n) the factor D is rotated by a central phase so that det(A) det(D) = 1.
    """
    compact = gid.compact_counterpart()
    a = haar_sample(compact, rng)
    d = haar_sample(compact, rng)
    if gid.field == Field.C and gid.unimodular:
        phase = np.angle(det(a) * det(d))
        d = Mat.from_numpy(d.to_numpy() * np.exp(-1j * phase / gid.n), Field.C)
    return block_diag(a, d)


def compact_factor_residual(gid, k):
    """ Residual of k ∈ K: off diagonal blocks, membership of both diagonal blocks and of k itself. """
    n = gid.n
    compact = gid.compact_counterpart()
    off = frob_norm(k.block(0, n, n, 2 * n)) + frob_norm(k.block(n, 2 * n, 0, n))
    top = membership_residuals(compact, k.block(0, n, 0, n))
    bottom = membership_residuals(compact, k.block(n, 2 * n, n, 2 * n))
    return float(np.max(off + top + bottom + membership_residuals(gid, k)))


def random_element(gid, rng, scale=1.0):
    """ Random element k · exp(X) of a split group with k ∈ K and X in the Lie algebra. """
    k = random_compact_pair(gid, rng)
    return matmul(k, mexp(random_lie_element(gid, rng, scale)))
