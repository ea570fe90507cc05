import numpy as np

from ..algebra.matrices import Mat
from ..algebra.scalars import Field
from ..groups.groupid import GroupId
from ..utils.errors import ShapeError

__all__ = ['SplitQuaternion', 'SPLIT_BASIS', 'SPLIT_FORM', 'O22', 'split_coordinates', 'split_operator',
           'circle_rotation', 'circle_action']

# 1, i, j, k as 2×2 real matrices
SPLIT_BASIS = np.array([[[1., 0.], [0., 1.]],
                        [[0., 1.], [-1., 0.]],
                        [[0., 1.], [1., 0.]],
                        [[1., 0.], [0., -1.]]])

# determinant form in the ordered basis (1, i, j, -k)
SPLIT_FORM = np.diag([1., 1., -1., -1.])

O22 = GroupId.split(Field.R, 2)


class SplitQuaternion(object):
    """ Split quaternion a + b𝐢 + c𝐣 + d𝐤, realized as a 2×2 real matrix.

    −𝐢² = 𝐣² = 𝐤² = 𝟏, 𝐢𝐣 = −𝐣𝐢 = 𝐤; the square norm a² + b² − c² − d² is the determinant.

    Parameters
    ----------
    coefficients : sequence
        (a, b, c, d), or an array with shape (..., 4).
    """

    def __init__(self, coefficients):
        self.coefficients = np.asarray(coefficients, dtype=float)
        if self.coefficients.shape[-1:] != (4,):
            raise ShapeError('%s' % (self.coefficients.shape,))

    @staticmethod
    def from_matrix(M):
        """ Coefficients of a 2×2 real matrix (or stack). """
        M = np.asarray(M, dtype=float)
        a = 0.5 * (M[..., 0, 0] + M[..., 1, 1])
        d = 0.5 * (M[..., 0, 0] - M[..., 1, 1])
        b = 0.5 * (M[..., 0, 1] - M[..., 1, 0])
        c = 0.5 * (M[..., 0, 1] + M[..., 1, 0])
        return SplitQuaternion(np.stack([a, b, c, d], axis=-1))

    @staticmethod
    def from_complex_pair(alpha, beta):
        """ p = α + 𝐣β with α, β ∈ C = R + 𝐢R. """
        alpha = np.asarray(alpha, dtype=complex)
        beta = np.asarray(beta, dtype=complex)
        # 𝐣(x + y𝐢) = x𝐣 − y𝐤
        return SplitQuaternion(np.stack([alpha.real, alpha.imag, beta.real, -beta.imag], axis=-1))

    def complex_pair(self):
        """ (α, β) with self = α + 𝐣β. """
        a, b, c, d = np.moveaxis(self.coefficients, -1, 0)
        return a + 1j * b, c - 1j * d

    def matrix(self):
        return np.einsum('...m,mab->...ab', self.coefficients, SPLIT_BASIS)

    def __mul__(self, other):
        return SplitQuaternion.from_matrix(np.matmul(self.matrix(), other.matrix()))

    def __neg__(self):
        return SplitQuaternion(-self.coefficients)

    def conj(self):
        return SplitQuaternion(self.coefficients * np.array([1., -1., -1., -1.]))

    def norm2(self):
        """ ⟨p, p⟩ = a² + b² − c² − d². """
        a, b, c, d = np.moveaxis(self.coefficients, -1, 0)
        return a * a + b * b - c * c - d * d

    def __repr__(self):
        return 'SplitQuaternion(%s)' % (self.coefficients,)


def split_coordinates(M):
    """ Coordinates of 2×2 real matrices in the ordered basis (1, i, j, −k). """
    coefficients = SplitQuaternion.from_matrix(M).coefficients
    return coefficients * np.array([1., 1., 1., -1.])


def split_operator(p, q=None):
    """ Matrix of L_p ∘ R_q̄ (x ↦ p x q̄) in the ordered basis (1, i, j, −k).

    For ⟨p, p⟩ = ⟨q, q⟩ = 1 it lies in O0(2,2), the blocks referring to the decomposition M = C ⊕ 𝐣C.

    Parameters
    ----------
    p : SplitQuaternion
        Left factor.

    q : SplitQuaternion or None
        Right factor (the identity when None).

    Returns
    -------
    Mat
        Returns the real 4×4 matrix (a stack for stacked p).
    """
    left = p.matrix()
    right = np.eye(2) if q is None else q.conj().matrix()
    signed = SPLIT_BASIS * np.array([1., 1., 1., -1.])[:, None, None]
    images = np.matmul(np.matmul(left[..., None, :, :], signed), right[..., None, :, :])
    # column m holds the coordinates of the image of the m-th basis vector
    return Mat.from_numpy(np.swapaxes(split_coordinates(images), -1, -2), Field.R)


def circle_rotation(u):
    """ ρ(u): the rotation z ↦ uz of C for unit complex numbers u, as a point of SO2. """
    u = np.asarray(u, dtype=complex)
    return Mat.from_numpy(np.stack([np.stack([u.real, -u.imag], axis=-1),
                                    np.stack([u.imag, u.real], axis=-1)], axis=-2), Field.R)


def circle_action(p, u):
    """ Conformal action p · u = (αu + β̄)(βu + ᾱ)⁻¹ of SL2(R) on the unit circle, p = α + 𝐣β. """
    alpha, beta = p.complex_pair()
    u = np.asarray(u, dtype=complex)
    return (alpha * u + np.conj(beta)) / (beta * u + np.conj(alpha))
