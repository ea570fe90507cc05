import numpy as np

from ..algebra.matrices import Mat, mexp, commutator, block_diag
from ..algebra.scalars import Field, qmul, qconj, qinv, qnorm2, left_matrix, right_matrix
from ..groups.cartan import cartan_decomposition
from ..groups.groupid import GroupId
from ..utils.errors import MembershipError

__all__ = ['SP11', 'O14_SIZE', 'O33', 'imaginary_basis', 'sl4_basis', 'lie_to_o14', 'morphism_sp11',
           'morphism_sl4', 'rotation_matrix_Iw', 'conjugation_matrix', 'cross_matrix', 'o4_to_o33',
           'bracket_identity_residual', 'algebra_bracket_residual']

SP11 = GroupId.split(Field.H, 1)
O33 = GroupId.split(Field.R, 3)
O14_SIZE = 5


def imaginary_basis():
    """ i, j, k as quaternion arrays with shape (3, 4). """
    return np.eye(4)[1:]


def sl4_basis():
    """ The (3,3) orthonormal basis L_i, L_j, L_k, R_i, R_j, R_k of o4, shape (6, 4, 4). """
    units = imaginary_basis()
    return np.concatenate([left_matrix(units), right_matrix(units)], axis=0)


def _check_quaternion(w):
    w = np.asarray(w, dtype=float)
    if np.any(qnorm2(w) == 0.0):
        raise MembershipError('Error_quaternion_zero')
    return w


def lie_to_o14(X):
    """ The Lie algebra isomorphism f: sp(1,1) → o(1,4).

    f(ξ ᾱ; α η) = (0 2αᵀ; 2α L_η − R_ξ) with ξ, η imaginary and α ∈ H read as a column of R⁴.

    Parameters
    ----------
    X : Mat
        Quaternionic 2×2 Lie algebra element (or stack).

    Returns
    -------
    numpy.array
        Returns the real 5×5 matrix (a stack for stacked X).
    """
    xi = X.data[..., 0, 0, :]
    eta = X.data[..., 1, 1, :]
    alpha = X.data[..., 1, 0, :]
    out = np.zeros(X.batch_shape + (O14_SIZE, O14_SIZE))
    out[..., 0, 1:] = 2.0 * alpha
    out[..., 1:, 0] = 2.0 * alpha
    out[..., 1:, 1:] = left_matrix(eta) - right_matrix(xi)
    return out


def morphism_sp11(g):
    """ The morphism F: Sp(1,1) → O0(1,4) integrating lie_to_o14.

    With the Cartan decomposition g = diag(p, q)·exp(P), F(g) = diag(1, L_q R_p̄)·exp(f(P)).

    Parameters
    ----------
    g : Mat
        Element (or stack) of Sp(1,1).

    Returns
    -------
    numpy.array
        Returns the 5×5 matrix of O0(1,4).
    """
    k, P = cartan_decomposition(g)
    p = k.data[..., 0, 0, :]
    q = k.data[..., 1, 1, :]
    rotation = np.zeros(g.batch_shape + (O14_SIZE, O14_SIZE))
    rotation[..., 0, 0] = 1.0
    rotation[..., 1:, 1:] = np.matmul(left_matrix(q), right_matrix(qconj(p)))
    boost = mexp(Mat.from_numpy(lie_to_o14(P), Field.R)).to_numpy()
    return np.matmul(rotation, boost)


def morphism_sl4(A):
    """ The morphism F: SL4(R) → O0(3,3), Φ(A)(Z) = A Z Aᵀ on o4 written in the basis sl4_basis.

    The basis is orthogonal for the Frobenius product with squared norms 4, so the coordinate k of
    Φ(A)(B_m) is ⟨B_k, A B_m Aᵀ⟩ / 4.

    Parameters
    ----------
    A : numpy.array
        Matrix (or stack) with shape (..., 4, 4) and determinant 1.

    Returns
    -------
    numpy.array
        Returns the 6×6 matrix.
    """
    A = np.asarray(A, dtype=float)
    basis = sl4_basis()
    images = np.matmul(np.matmul(A[..., None, :, :], basis), np.swapaxes(A, -1, -2)[..., None, :, :])
    return 0.25 * np.einsum('kab,...mab->...km', basis, images)


def rotation_matrix_Iw(w):
    """ Matrix of L_w R_w⁻¹ on Im(H) in the basis {i, j, k}, from its closed form.

    Parameters
    ----------
    w : numpy.array
        Nonzero quaternion (or array with shape (..., 4)).

    Returns
    -------
    numpy.array
        Returns the rotation with shape (..., 3, 3).
    """
    w = _check_quaternion(w)
    a, b, c, d = np.moveaxis(w, -1, 0)
    rows = [[a * a + b * b - d * d - c * c, -2 * a * d + 2 * b * c, 2 * b * d + 2 * a * c],
            [2 * a * d + 2 * b * c, a * a - b * b + c * c - d * d, -2 * a * b + 2 * c * d],
            [-2 * a * c + 2 * b * d, 2 * a * b + 2 * c * d, a * a - b * b + d * d - c * c]]
    out = np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)
    return out / qnorm2(w)[..., None, None]


def conjugation_matrix(w):
    """ Matrix of x ↦ w x w⁻¹ on Im(H) computed with quaternion products. """
    w = _check_quaternion(w)
    return np.matmul(left_matrix(w), right_matrix(qinv(w)))[..., 1:, 1:]


def cross_matrix(xi):
    """ [ξ]×, the matrix of y ↦ ξ × y. """
    xi = np.asarray(xi, dtype=float)
    x, y, z = np.moveaxis(xi[..., -3:], -1, 0)
    zero = np.zeros_like(x)
    return np.stack([np.stack([zero, -z, y], axis=-1),
                     np.stack([z, zero, -x], axis=-1),
                     np.stack([-y, x, zero], axis=-1)], axis=-2)


def o4_to_o33(xi, eta):
    """ Differential of morphism_sl4 at L_ξ + R_η: diag(2[ξ]×, −2[η]×) in o(3,3).

    Parameters
    ----------
    xi, eta : numpy.array
        Imaginary quaternions given by their 3 components (i, j, k).

    Returns
    -------
    Mat
        Returns the real 6×6 Lie algebra element of O0(3,3).
    """
    return block_diag(Mat.from_numpy(2.0 * cross_matrix(xi), Field.R),
                      Mat.from_numpy(-2.0 * cross_matrix(eta), Field.R))


def bracket_identity_residual(alpha, beta):
    """ ‖4(αβᵀ − βαᵀ) − (L_{αβ̄−βᾱ} − R_{ᾱβ−β̄α})‖ for quaternions read as columns of R⁴. """
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    lhs = 4.0 * (alpha[..., :, None] * beta[..., None, :] - beta[..., :, None] * alpha[..., None, :])
    rhs = left_matrix(qmul(alpha, qconj(beta)) - qmul(beta, qconj(alpha))) \
        - right_matrix(qmul(qconj(alpha), beta) - qmul(qconj(beta), alpha))
    return np.linalg.norm(lhs - rhs, axis=(-2, -1))


def algebra_bracket_residual(X, Y):
    """ ‖f([X, Y]) − [f(X), f(Y)]‖ for f = lie_to_o14. """
    fx = lie_to_o14(X)
    fy = lie_to_o14(Y)
    return np.linalg.norm(lie_to_o14(commutator(X, Y)) - (np.matmul(fx, fy) - np.matmul(fy, fx)), axis=(-2, -1))
