import numpy as np

from ..algebra.matrices import Mat, matmul, conj_transpose, complex_representation, \
    from_complex_representation
from ..algebra.scalars import Field

__all__ = ['cartan_decomposition']


def _hermitian_functions(S):
    """ (log S / 2, S^{-1/2}) of a positive Hermitian matrix through an eigendecomposition. """
    if S.field == Field.H:
        values, vectors = np.linalg.eigh(complex_representation(S))
    else:
        values, vectors = np.linalg.eigh(S.to_numpy())
    values = np.maximum(values, np.finfo(float).tiny)

    def _apply(f):
        return np.einsum('...ij,...j,...kj->...ik', vectors, f(values), np.conj(vectors))

    half_log = _apply(lambda w: 0.5 * np.log(w))
    inv_sqrt = _apply(lambda w: w ** -0.5)
    if S.field == Field.H:
        return from_complex_representation(half_log), from_complex_representation(inv_sqrt)
    field = S.field
    if field == Field.R:
        half_log, inv_sqrt = np.real(half_log), np.real(inv_sqrt)
    return Mat.from_numpy(half_log, field), Mat.from_numpy(inv_sqrt, field)


def cartan_decomposition(g):
    """ Polar decomposition g = k · exp(P) of an element of a split group.

    exp(2P) = conj(g)ᵀ g is positive Hermitian and lies in the group, P is in the off diagonal part of
    the Lie algebra and k = g exp(−P) lies in the maximal compact subgroup K.

    Parameters
    ----------
    g : Mat
        Element of O0(n,n), SU(n,n) or Sp(n,n).

    Returns
    -------
    tuple
        Returns (k, P).
    """
    P, inv_sqrt = _hermitian_functions(matmul(conj_transpose(g), g))
    return matmul(g, inv_sqrt), P
