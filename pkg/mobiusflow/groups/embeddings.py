import numpy as np

from ..algebra.matrices import Mat, matmul, frob_norm, scalar_matrix
from ..algebra.scalars import Field, Scalar, left_matrix, right_matrix
from ..utils.errors import UnsupportedEmbeddingError
from .groupid import GroupId

__all__ = ['EMBEDDING_PAIRS', 'embedding_pair', 'embed', 'defining_residual', 'complex_structure',
           'quaternion_structures', 'realify_complex', 'realify_quaternion']

# (a)-(e): subgroup, ambient group, both as functions of the size n of the subgroup
EMBEDDING_PAIRS = {
    'a': (lambda n: GroupId.split(Field.R, n), lambda n: GroupId.split(Field.C, n)),
    'b': (lambda n: GroupId.split(Field.C, n, unimodular=False), lambda n: GroupId.split(Field.H, n)),
    'c': (lambda n: GroupId.split(Field.R, n), lambda n: GroupId.split(Field.H, n)),
    'd': (lambda n: GroupId.split(Field.C, n, unimodular=False), lambda n: GroupId.split(Field.R, 2 * n)),
    'e': (lambda n: GroupId.split(Field.H, n), lambda n: GroupId.split(Field.R, 4 * n)),
}


def embedding_pair(src, dst):
    """ Label ('a' to 'e') of the inclusion src ⊂ dst.

    Raises
    ------
    UnsupportedEmbeddingError
        If the pair is not one of the five inclusions.
    """
    if src.is_split() and dst.is_split():
        for label, (make_src, make_dst) in EMBEDDING_PAIRS.items():
            if make_src(src.n) == src and make_dst(src.n) == dst:
                return label
    raise UnsupportedEmbeddingError(src, dst)


def realify_complex(A):
    """ Real 2m×2m matrix of a complex m×m matrix, each entry a + bi becoming the block (a −b; b a). """
    a = A.data[..., 0]
    b = A.data[..., 1]
    batch = A.batch_shape
    m, k = A.shape
    out = np.zeros(batch + (2 * m, 2 * k))
    out[..., 0::2, 0::2] = a
    out[..., 0::2, 1::2] = -b
    out[..., 1::2, 0::2] = b
    out[..., 1::2, 1::2] = a
    return Mat.from_numpy(out, Field.R)


def realify_quaternion(A):
    """ Real 4m×4m matrix of a quaternionic m×m matrix acting on column vectors by left multiplication.
    """
    blocks = left_matrix(A.data)
    batch = A.batch_shape
    m, k = A.shape
    out = np.swapaxes(blocks, -3, -2).reshape(batch + (4 * m, 4 * k))
    return Mat.from_numpy(out, Field.R)


def complex_structure(size):
    """ J: block diagonal real matrix with blocks J0 = (0 −1; 1 0), of size 2·size. """
    return realify_complex(scalar_matrix(1j, size, Field.C))


def quaternion_structures(size):
    """ R_i and R_j: block diagonal real matrices of right multiplication by i and j, of size 4·size. """
    out = []
    for unit in ([0., 1., 0., 0.], [0., 0., 1., 0.]):
        block = right_matrix(np.array(unit))
        data = np.zeros((4 * size, 4 * size))
        for r in range(size):
            data[4 * r:4 * r + 4, 4 * r:4 * r + 4] = block
        out.append(Mat.from_numpy(data, Field.R))
    return out


def embed(src, dst, A):
    """ Image of A ∈ src under the inclusion src ⊂ dst (works for group and Lie algebra elements).

    Parameters
    ----------
    src : GroupId
        Subgroup.

    dst : GroupId
        Ambient group.

    A : Mat
        Matrix (or stack) of src.

    Returns
    -------
    Mat
        Returns the matrix of dst.
    """
    label = embedding_pair(src, dst)
    if label in ('a', 'b', 'c'):
        return A.astype(dst.field)
    if label == 'd':
        return realify_complex(A)
    return realify_quaternion(A)


def defining_residual(src, dst, A):
    """ Residual of the relations defining the image of src inside dst.

    (a) ‖Im A‖, (b) ‖iA − Ai‖, (c) ‖iA − Ai‖ + ‖jA − Aj‖, (d) ‖JA − AJ‖, (e) ‖R_iA − AR_i‖ + ‖R_jA − AR_j‖.

    Returns
    -------
    numpy.array
        Returns residuals with the batch shape of A.
    """
    label = embedding_pair(src, dst)
    size = dst.matrix_size()
    if label == 'a':
        return np.sqrt(np.sum(A.data[..., 1:] ** 2, axis=(-3, -2, -1)))
    if label in ('b', 'c'):
        units = [Scalar([0., 1., 0., 0.], Field.H)]
        if label == 'c':
            units.append(Scalar([0., 0., 1., 0.], Field.H))
        residual = 0.0
        for u in units:
            U = scalar_matrix(u, size, Field.H)
            residual = residual + frob_norm(matmul(U, A) - matmul(A, U))
        return residual
    if label == 'd':
        structures = [complex_structure(size // 2)]
    else:
        structures = quaternion_structures(size // 4)
    residual = 0.0
    for S in structures:
        residual = residual + frob_norm(matmul(S, A) - matmul(A, S))
    return residual
