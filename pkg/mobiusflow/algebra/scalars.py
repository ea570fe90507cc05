from enum import Enum

import numpy as np

from ..utils.errors import FieldMismatchError, ShapeError, MembershipError

__all__ = ['Field', 'Scalar', 'mul', 'conj', 're',
           'qmul', 'qconj', 'qnorm2', 'qinv', 'left_matrix', 'right_matrix', 'STRUCTURE']


class Field(Enum):
    """ Scalar fields. Every scalar is stored as 4 real components (a, b, c, d) of a + bi + cj + dk,
    real and complex numbers leave the trailing components at zero.
    """
    R = 'R'
    C = 'C'
    H = 'H'

    @property
    def dim(self):
        """ Real dimension of the field. """
        return {'R': 1, 'C': 2, 'H': 4}[self.value]

    @staticmethod
    def parse(name):
        """ Field from its tag ('R', 'C', 'H') or from a Field.
        """
        if isinstance(name, Field):
            return name
        try:
            return Field(str(name).upper())
        except ValueError:
            raise MembershipError('Error_field_name', str(name))


def qmul(p, q):
    """ Hamilton product of quaternions stored in the last axis (broadcasting).

    Parameters
    ----------
    p : numpy.array
        Array with shape (..., 4).

    q : numpy.array
        Array with shape (..., 4).

    Returns
    -------
    numpy.array
        Returns the componentwise product p q.
    """
    p0, p1, p2, p3 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    q0, q1, q2, q3 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack([p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
                     p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
                     p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
                     p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0], axis=-1)


def qconj(q):
    """ Quaternion conjugation on the last axis. """
    out = np.array(q, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qnorm2(q):
    """ Squared norm a² + b² + c² + d² on the last axis. """
    return np.sum(np.square(q), axis=-1)


def qinv(q):
    """ Quaternion inverse conj(q) / |q|² on the last axis. """
    return qconj(q) / qnorm2(q)[..., None]


def _structure_tensor():
    basis = np.eye(4)
    # T[a, b, c] = c-th component of e_a e_b
    return np.array([[qmul(basis[a], basis[b]) for b in range(4)] for a in range(4)])


STRUCTURE = _structure_tensor()


def left_matrix(q):
    """ 4×4 real matrix of x ↦ q x in the ordered basis {1, i, j, k}.

    Parameters
    ----------
    q : numpy.array
        Array with shape (..., 4).

    Returns
    -------
    numpy.array
        Returns array with shape (..., 4, 4).
    """
    return np.einsum('...a,abc->...cb', np.asarray(q, dtype=float), STRUCTURE)


def right_matrix(q):
    """ 4×4 real matrix of x ↦ x q in the ordered basis {1, i, j, k}.
    """
    return np.einsum('...b,abc->...ca', np.asarray(q, dtype=float), STRUCTURE)


class Scalar(object):
    """ Element of R, C or H.

    Attributes
    ----------
    components : numpy.array
        The 4 real coefficients (a, b, c, d) of a + bi + cj + dk.

    field : Field
        Field tag.

    Parameters
    ----------
    components : float, complex or sequence
        A real or complex number, or up to 4 real coefficients.

    field : Field or str
        Field tag, inferred from the value when it is None.
    """

    def __init__(self, components, field=None):
        if isinstance(components, (int, float, np.floating, np.integer)):
            data = np.array([float(components), 0., 0., 0.])
            inferred = Field.R
        elif isinstance(components, (complex, np.complexfloating)):
            data = np.array([components.real, components.imag, 0., 0.])
            inferred = Field.C
        else:
            values = np.asarray(components, dtype=float).ravel()
            if values.size > 4:
                raise ShapeError('(%d components)' % values.size)
            data = np.zeros(4)
            data[:values.size] = values
            inferred = Field.H
        self.field = Field.parse(field) if field is not None else inferred
        if np.any(data[self.field.dim:] != 0.0):
            raise ShapeError('(%s scalar with components outside the field)' % self.field.value)
        self.components = data

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(self.field.value, other.field.value)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return mul(self, other)
        return Scalar(self.components * float(other), self.field)

    def __rmul__(self, other):
        return Scalar(self.components * float(other), self.field)

    def __add__(self, other):
        self._check(other)
        return Scalar(self.components + other.components, self.field)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.components - other.components, self.field)

    def __neg__(self):
        return Scalar(-self.components, self.field)

    def __eq__(self, other):
        return isinstance(other, Scalar) and self.field == other.field and \
            np.array_equal(self.components, other.components)

    def __hash__(self):
        return hash((self.field, tuple(self.components)))

    def __repr__(self):
        a, b, c, d = self.components
        return 'Scalar(%g%+gi%+gj%+gk, %s)' % (a, b, c, d, self.field.value)

    def isclose(self, other, atol=1e-12):
        self._check(other)
        return bool(np.allclose(self.components, other.components, rtol=0.0, atol=atol))

    def conj(self):
        return conj(self)

    def re(self):
        return re(self)

    def norm2(self):
        return float(qnorm2(self.components))

    def norm(self):
        return float(np.sqrt(self.norm2()))

    def inverse(self):
        if self.norm2() == 0.0:
            raise MembershipError('Error_quaternion_zero')
        return Scalar(qinv(self.components), self.field)

    def left_matrix(self):
        return left_matrix(self.components)

    def right_matrix(self):
        return right_matrix(self.components)

    def to_complex(self):
        """ Complex value of a real or complex scalar. """
        if self.field == Field.H:
            raise FieldMismatchError(self.field.value, Field.C.value)
        return complex(self.components[0], self.components[1])


def mul(p, q):
    """ Product of two scalars of the same field.

    Parameters
    ----------
    p : Scalar
        Left factor.

    q : Scalar
        Right factor.

    Returns
    -------
    Scalar
        Returns p q.
    """
    p._check(q)
    return Scalar(qmul(p.components, q.components), p.field)


def conj(q):
    """ Conjugate: negates the imaginary coefficients. """
    return Scalar(qconj(q.components), q.field)


def re(q):
    """ Real part. """
    return float(q.components[0])
