import numpy as np

from .scalars import Field, Scalar, STRUCTURE, qmul, qconj, qinv, qnorm2
from ..utils.errors import FieldMismatchError, ShapeError, SingularMatrixError

__all__ = ['Mat', 'identity', 'zeros', 'scalar_matrix', 'random_gaussian',
           'matmul', 'conj_transpose', 'entry_conj', 'inverse', 'mexp', 'mexp_frechet',
           'frob_inner', 'frob_norm', 'max_abs_norm', 'inf_norm', 'commutator',
           'to_real_vector', 'from_real_vector', 'det',
           'complex_representation', 'from_complex_representation', 'gram_schmidt',
           'block_matrix', 'block_diag', 'split_blocks', 'stack',
           'PIVOT_TOL', 'MEXP_DEGREE', 'MEXP_THRESHOLD']

PIVOT_TOL = 1e-12
MEXP_DEGREE = 12
MEXP_THRESHOLD = 0.5


class Mat(object):
    """ Dense matrix, or stack of matrices, over R, C or H.

    Entries are stored as 4 real components in the last axis, so ``data`` has shape
    (*batch, rows, cols, 4). Every operation broadcasts over the batch axes.

    Attributes
    ----------
    data : numpy.array
        Components of the entries.

    field : Field
        Field tag.

    Parameters
    ----------
    data : numpy.array
        Array with shape (..., rows, cols, 4).

    field : Field or str
        Field tag.
    """

    def __init__(self, data, field):
        data = np.asarray(data, dtype=float)
        if data.ndim < 3 or data.shape[-1] != 4:
            raise ShapeError('%s' % (data.shape,))
        self.field = Field.parse(field)
        self.data = data

    @staticmethod
    def from_numpy(array, field=None):
        """ Build from a real or complex array with shape (..., rows, cols).

        Parameters
        ----------
        array : numpy.array or list
            Real or complex entries.

        field : Field or str
            Field tag, R for real arrays and C for complex arrays by default.

        Returns
        -------
        Mat
            Returns the matrix.
        """
        array = np.asarray(array)
        if array.ndim < 2:
            raise ShapeError('%s' % (array.shape,))
        data = np.zeros(array.shape + (4,))
        data[..., 0] = np.real(array)
        if np.iscomplexobj(array):
            data[..., 1] = np.imag(array)
            default = Field.C
        else:
            default = Field.R
        field = Field.parse(field) if field is not None else default
        if field == Field.R and np.any(data[..., 1] != 0.0):
            raise FieldMismatchError(Field.C.value, Field.R.value)
        return Mat(data, field)

    @staticmethod
    def from_quaternions(array):
        """ Build a quaternionic matrix from an array with shape (..., rows, cols, 4). """
        return Mat(array, Field.H)

    @property
    def rows(self):
        return self.data.shape[-3]

    @property
    def cols(self):
        return self.data.shape[-2]

    @property
    def shape(self):
        return self.data.shape[-3:-1]

    @property
    def batch_shape(self):
        return self.data.shape[:-3]

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        # only batch axes are indexed
        if not self.batch_shape:
            raise ShapeError('(indexing a single matrix)')
        return Mat(self.data[index], self.field)

    def __len__(self):
        if not self.batch_shape:
            raise ShapeError('(len of a single matrix)')
        return self.batch_shape[0]

    def entry(self, i, j):
        """ Scalar entry (i, j) of a single matrix. """
        return Scalar(self.data[..., i, j, :], self.field)

    def block(self, r0, r1, c0, c1):
        return Mat(self.data[..., r0:r1, c0:c1, :], self.field)

    def copy(self):
        return Mat(self.data.copy(), self.field)

    def astype(self, field):
        """ View the matrix over a larger field (R ⊂ C ⊂ H). """
        field = Field.parse(field)
        if field.dim < self.field.dim and np.any(self.data[..., field.dim:] != 0.0):
            raise FieldMismatchError(self.field.value, field.value)
        return Mat(self.data, field)

    def to_numpy(self):
        """ Real (field R) or complex (field C) array with shape (..., rows, cols). """
        if self.field == Field.R:
            return self.data[..., 0].copy()
        if self.field == Field.C:
            return self.data[..., 0] + 1j * self.data[..., 1]
        raise FieldMismatchError(self.field.value, Field.C.value)

    def conj(self):
        return entry_conj(self)

    @property
    def H(self):
        return conj_transpose(self)

    @property
    def T(self):
        return Mat(np.swapaxes(self.data, -3, -2), self.field)

    def __matmul__(self, other):
        return matmul(self, other)

    def _check_same(self, other):
        if not isinstance(other, Mat):
            raise ShapeError('(%s is not a matrix)' % type(other).__name__)
        if self.field != other.field:
            raise FieldMismatchError(self.field.value, other.field.value)
        if self.shape != other.shape:
            raise ShapeError('%s and %s' % (self.shape, other.shape))

    def __add__(self, other):
        self._check_same(other)
        return Mat(self.data + other.data, self.field)

    def __sub__(self, other):
        self._check_same(other)
        return Mat(self.data - other.data, self.field)

    def __neg__(self):
        return Mat(-self.data, self.field)

    def __mul__(self, factor):
        factor = np.asarray(factor, dtype=float)
        return Mat(self.data * factor[..., None, None, None], self.field)

    __rmul__ = __mul__

    def __truediv__(self, factor):
        return self * (1.0 / np.asarray(factor, dtype=float))

    def __repr__(self):
        return 'Mat(%s, shape=%s, batch=%s)' % (self.field.value, self.shape, self.batch_shape)


def identity(n, field, batch_shape=()):
    data = np.zeros(tuple(batch_shape) + (n, n, 4))
    idx = np.arange(n)
    data[..., idx, idx, 0] = 1.0
    return Mat(data, field)


def zeros(rows, cols, field, batch_shape=()):
    return Mat(np.zeros(tuple(batch_shape) + (rows, cols, 4)), field)


def scalar_matrix(value, n, field=None):
    """ λ I for a scalar λ (Scalar, real or complex number). """
    if not isinstance(value, Scalar):
        value = Scalar(value)
    field = Field.parse(field) if field is not None else value.field
    data = np.zeros((n, n, 4))
    idx = np.arange(n)
    data[idx, idx, :] = value.components
    return Mat(data, field)


def random_gaussian(rows, cols, field, rng, batch_shape=(), scale=1.0):
    """ Matrix with independent standard Gaussian coefficients in each real component of the field.
    """
    field = Field.parse(field)
    data = np.zeros(tuple(batch_shape) + (rows, cols, 4))
    data[..., :field.dim] = scale * rng.standard_normal(tuple(batch_shape) + (rows, cols, field.dim))
    return Mat(data, field)


def _check_field(A, B):
    if A.field != B.field:
        raise FieldMismatchError(A.field.value, B.field.value)


def _check_square(A):
    if not A.is_square():
        raise ShapeError('%s' % (A.shape,), key='Error_square')


def matmul(A, B):
    """ Matrix product A B (batch axes broadcast).

    Parameters
    ----------
    A : Mat
        Left factor.

    B : Mat
        Right factor.

    Returns
    -------
    Mat
        Returns the product.
    """
    _check_field(A, B)
    if A.cols != B.rows:
        raise ShapeError('%s and %s' % (A.shape, B.shape))
    if A.field == Field.R:
        out = np.matmul(A.data[..., 0], B.data[..., 0])
        data = np.zeros(out.shape + (4,))
        data[..., 0] = out
        return Mat(data, Field.R)
    if A.field == Field.C:
        return Mat.from_numpy(np.matmul(A.to_numpy(), B.to_numpy()), Field.C)
    left = np.einsum('...ika,abc->...ikbc', A.data, STRUCTURE)
    return Mat(np.einsum('...ikbc,...kjb->...ijc', left, B.data), Field.H)


def conj_transpose(A):
    """ conj(A)ᵀ with the conjugation of the field applied entrywise. """
    return Mat(qconj(np.swapaxes(A.data, -3, -2)), A.field)


def entry_conj(A):
    """ Entrywise conjugation (no transpose). """
    return Mat(qconj(A.data), A.field)


def commutator(X, Y):
    return matmul(X, Y) - matmul(Y, X)


def max_abs_norm(A):
    """ Largest entry modulus (per matrix of the stack). """
    return np.sqrt(np.max(qnorm2(A.data), axis=(-2, -1)))


def inf_norm(A):
    """ Induced ∞-norm: largest row sum of entry moduli (per matrix of the stack). """
    return np.max(np.sum(np.sqrt(qnorm2(A.data)), axis=-1), axis=-1)


def inverse(A):
    """ Inverse by Gauss-Jordan elimination with partial pivoting.

    Row operations are left multiplications by scalars, which keeps the elimination valid over H.

    Parameters
    ----------
    A : Mat
        Square matrix or stack of square matrices.

    Returns
    -------
    Mat
        Returns A⁻¹.

    Raises
    ------
    SingularMatrixError
        If a pivot falls below PIVOT_TOL · max_abs_norm(A).
    """
    _check_square(A)
    n = A.rows
    batch = A.batch_shape
    threshold = PIVOT_TOL * max_abs_norm(A)
    aug = np.concatenate([A.data, identity(n, A.field, batch).data], axis=-2)
    rows = np.arange(n)
    for k in range(n):
        mags = np.sqrt(qnorm2(aug[..., k:, k, :]))
        offset = np.asarray(np.argmax(mags, axis=-1))
        pivot_mag = np.take_along_axis(mags, offset[..., None], axis=-1)[..., 0]
        if np.any(pivot_mag <= threshold):
            raise SingularMatrixError(np.min(pivot_mag))
        p = offset + k
        perm = np.broadcast_to(rows, batch + (n,)).copy()
        np.put_along_axis(perm, p[..., None], k, axis=-1)
        perm[..., k] = p
        aug = np.take_along_axis(aug, perm[..., :, None, None], axis=-3).copy()

        pinv = qinv(aug[..., k, k, :])
        aug[..., k, :, :] = qmul(pinv[..., None, :], aug[..., k, :, :])
        factors = aug[..., :, k, :].copy()
        factors[..., k, :] = 0.0
        aug = aug - qmul(factors[..., :, None, :], aug[..., k, None, :, :])
    return Mat(aug[..., :, n:, :], A.field)


def mexp(A, t=1.0):
    """ Matrix exponential exp(t A) by scaling and squaring of a degree 12 Taylor polynomial.

    Parameters
    ----------
    A : Mat
        Square matrix or stack of square matrices.

    t : float
        Time.

    Returns
    -------
    Mat
        Returns exp(t A).
    """
    _check_square(A)
    X = A * t
    norm = float(np.max(inf_norm(X))) if X.data.size else 0.0
    s = 0 if norm <= MEXP_THRESHOLD else int(np.ceil(np.log2(norm / MEXP_THRESHOLD)))
    X = X * (0.5 ** s)
    eye = identity(A.rows, A.field, A.batch_shape)
    E = eye
    for k in range(MEXP_DEGREE, 0, -1):
        E = eye + matmul(X, E) * (1.0 / k)
    for _ in range(s):
        E = matmul(E, E)
    return E


def mexp_frechet(A, E):
    """ Directional derivative d/dε exp(A + εE) at ε = 0.

    Computed as the upper right block of exp((A E; 0 A)).
    """
    _check_field(A, E)
    n = A.rows
    big = block_matrix([[A, E], [zeros(n, n, A.field, A.batch_shape), A]])
    return mexp(big).block(0, n, n, 2 * n)


def frob_inner(X, Y):
    """ Real trace inner product Re tr(conj(X)ᵀ Y).

    For every entry Re(conj(x) y) is the dot product of the 4 components, so the inner product is
    the Euclidean product of the component arrays.
    """
    X._check_same(Y)
    return np.sum(X.data * Y.data, axis=(-3, -2, -1))


def frob_norm(X):
    return np.sqrt(frob_inner(X, X))


def to_real_vector(A):
    """ Flatten to a real vector keeping only the components of the field. """
    return A.data[..., :A.field.dim].reshape(A.batch_shape + (-1,))


def from_real_vector(vector, rows, cols, field):
    field = Field.parse(field)
    vector = np.asarray(vector, dtype=float)
    batch = vector.shape[:-1]
    data = np.zeros(batch + (rows, cols, 4))
    data[..., :field.dim] = vector.reshape(batch + (rows, cols, field.dim))
    return Mat(data, field)


def complex_representation(A):
    """ Complex 2n×2n matrix (Z1 Z2; −conj(Z2) conj(Z1)) of a quaternionic matrix Z1 + Z2 j. """
    z1 = A.data[..., 0] + 1j * A.data[..., 1]
    z2 = A.data[..., 2] + 1j * A.data[..., 3]
    top = np.concatenate([z1, z2], axis=-1)
    bottom = np.concatenate([-np.conj(z2), np.conj(z1)], axis=-1)
    return np.concatenate([top, bottom], axis=-2)


def from_complex_representation(Z):
    """ Quaternionic matrix from its complex representation (only the top blocks are read). """
    Z = np.asarray(Z)
    n = Z.shape[-1] // 2
    z1 = Z[..., :n, :n]
    z2 = Z[..., :n, n:]
    return Mat(np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1), Field.H)


def det(A):
    """ Determinant; over H the (real, non negative) determinant of the complex representation. """
    _check_square(A)
    if A.field == Field.H:
        return np.real(np.linalg.det(complex_representation(A)))
    return np.linalg.det(A.to_numpy())


def gram_schmidt(A, passes=2):
    """ Orthonormalize the columns of A as a right vector space (coefficients act on the right).

    Parameters
    ----------
    A : Mat
        Matrix (or stack) with linearly independent columns.

    passes : int
        Number of orthogonalization sweeps.

    Returns
    -------
    Mat
        Returns Q with conj(Q)ᵀ Q = I spanning the same right column space.
    """
    data = np.array(A.data, dtype=float, copy=True)
    cols = A.cols
    for k in range(cols):
        v = data[..., :, k, :]
        for _ in range(passes):
            for j in range(k):
                e = data[..., :, j, :]
                coeff = np.sum(qmul(qconj(e), v), axis=-2)
                v = v - qmul(e, coeff[..., None, :])
        norm = np.sqrt(np.sum(qnorm2(v), axis=-1))
        if np.any(norm <= PIVOT_TOL):
            raise SingularMatrixError(np.min(norm))
        data[..., :, k, :] = v / norm[..., None, None]
    return Mat(data, A.field)


def block_matrix(blocks):
    """ Assemble a matrix from a nested list of blocks. """
    for row in blocks:
        for b in row:
            _check_field(blocks[0][0], b)
    batch = np.broadcast_shapes(*[b.batch_shape for row in blocks for b in row])
    rows = [np.concatenate([np.broadcast_to(b.data, batch + b.data.shape[-3:]) for b in row], axis=-2)
            for row in blocks]
    return Mat(np.concatenate(rows, axis=-3), blocks[0][0].field)


def block_diag(A, D):
    return block_matrix([[A, zeros(A.rows, D.cols, A.field, A.batch_shape)],
                         [zeros(D.rows, A.cols, A.field, D.batch_shape), D]])


def split_blocks(M):
    """ The four n×n blocks (A, B, C, D) of a 2n×2n matrix. """
    n = M.rows // 2
    return (M.block(0, n, 0, n), M.block(0, n, n, 2 * n),
            M.block(n, 2 * n, 0, n), M.block(n, 2 * n, n, 2 * n))


def stack(mats):
    """ Stack matrices (or stacks) along a new leading batch axis. """
    return Mat(np.stack([m.data for m in mats]), mats[0].field)
