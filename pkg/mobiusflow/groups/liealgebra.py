from functools import lru_cache

import numpy as np

from ..algebra.matrices import Mat, frob_norm, frob_inner, matmul, conj_transpose, stack
from ..algebra.scalars import Field
from .groupid import GroupId, form_delta, MEMBERSHIP_TOL

__all__ = ['LieAlgElem', 'lie_residual', 'lie_basis', 'lie_basis_stack', 'coordinates',
           'from_coordinates', 'random_lie_element']


class LieAlgElem(object):
    """ Element of the Lie algebra of a group.

    Attributes
    ----------
    owner : GroupId
        Group whose algebra contains the element.

    value : Mat
        The matrix.
    """

    def __init__(self, owner, value):
        self.owner = owner
        self.value = value

    def residual(self):
        return lie_residual(self.owner, self.value)

    def is_valid(self, tol=MEMBERSHIP_TOL):
        return self.residual() < tol


def lie_residual(gid, X):
    """ Residual of the Lie algebra relations.

    Compact: ‖conj(X)ᵀ + X‖. Split: ‖conj(X)ᵀδ + δX‖, plus |tr X| for SU(n,n) where tr(a + b) must vanish.

    Returns
    -------
    float
        Returns the largest residual over a stack.
    """
    if gid.is_compact():
        residual = frob_norm(conj_transpose(X) + X)
    else:
        delta = form_delta(gid.n, gid.field)
        residual = frob_norm(matmul(conj_transpose(X), delta) + matmul(delta, X))
        if gid.field == Field.C and gid.unimodular:
            trace = np.sum(np.diagonal(X.data, axis1=-3, axis2=-2), axis=-1)
            residual = residual + np.hypot(trace[..., 0], trace[..., 1])
    return float(np.max(residual))


def _unit(size, field, entries):
    data = np.zeros((size, size, 4))
    for (r, s, component, value) in entries:
        data[r, s, component] += value
    return Mat(data, field)


def _skew_hermitian_entries(n, field, offset=0):
    """ Entry lists of an orthonormal basis of the skew-Hermitian n×n matrices, placed at offset. """
    d = field.dim
    basis = []
    for r in range(n):
        for a in range(1, d):
            basis.append([(offset + r, offset + r, a, 1.0)])
    w = 1.0 / np.sqrt(2.0)
    for r in range(n):
        for s in range(r + 1, n):
            for a in range(d):
                # x at (r, s) and −conj(x) at (s, r)
                basis.append([(offset + r, offset + s, a, w),
                              (offset + s, offset + r, a, -w if a == 0 else w)])
    return basis


@lru_cache(maxsize=None)
def _basis_entries(gid):
    n = gid.n
    field = gid.field
    d = field.dim
    if gid.is_compact():
        return tuple(tuple(e) for e in _skew_hermitian_entries(n, field))

    blocks = _skew_hermitian_entries(n, field, 0) + _skew_hermitian_entries(n, field, n)
    if field == Field.C and gid.unimodular:
        # imaginary diagonal directions of a and b are replaced by trace free combinations: Helmert
        # vectors inside each block and the difference of the block traces
        blocks = [e for e in blocks if len(e) != 1]
        for offset in (0, n):
            for m in range(1, n):
                norm = np.sqrt(m * (m + 1.0))
                entries = [(offset + p, offset + p, 1, 1.0 / norm) for p in range(m)]
                entries.append((offset + m, offset + m, 1, -m / norm))
                blocks.append(entries)
        w_trace = 1.0 / np.sqrt(2.0 * n)
        blocks.append([(p, p, 1, w_trace if p < n else -w_trace) for p in range(2 * n)])

    w = 1.0 / np.sqrt(2.0)
    for r in range(n):
        for s in range(n):
            for a in range(d):
                # c at (r, n+s) and conj(c) at (n+s, r)
                blocks.append([(r, n + s, a, w), (n + s, r, a, w if a == 0 else -w)])
    return tuple(tuple(e) for e in blocks)


def lie_basis(gid):
    """ Orthonormal basis (for the trace inner product) of the Lie algebra of a group.

    Split algebras are built from the block form (a c; conj(c)ᵀ b) with a, b skew-Hermitian.

    Parameters
    ----------
    gid : GroupId
        Group descriptor.

    Returns
    -------
    list[LieAlgElem]
        Returns dim G elements.
    """
    size = gid.matrix_size()
    return [LieAlgElem(gid, _unit(size, gid.field, entries)) for entries in _basis_entries(gid)]


def lie_basis_stack(gid):
    """ The basis of lie_basis as one stack of matrices with batch shape (dim,). """
    return stack([e.value for e in lie_basis(gid)])


def coordinates(gid, X):
    """ Coordinates of X (or of a stack) in the orthonormal basis. """
    basis = lie_basis_stack(gid)
    return np.moveaxis(frob_inner(Mat(basis.data[(slice(None),) + (None,) * len(X.batch_shape)], gid.field),
                                  X), 0, -1)


def from_coordinates(gid, coefficients):
    """ Σ cᵢ Eᵢ for coefficient vectors with shape (..., dim). """
    basis = lie_basis_stack(gid)
    coefficients = np.asarray(coefficients, dtype=float)
    return Mat(np.einsum('...i,iabc->...abc', coefficients, basis.data), gid.field)


def random_lie_element(gid, rng, scale=1.0, size=None):
    """ Random element of the Lie algebra with Gaussian coordinates of total expected norm ``scale``.
    """
    dim = len(_basis_entries(gid))
    shape = (dim,) if size is None else (size, dim)
    coefficients = rng.standard_normal(shape) * scale / np.sqrt(dim)
    return from_coordinates(gid, coefficients)
