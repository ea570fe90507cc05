import re

import numpy as np

from ..algebra.matrices import Mat, identity, block_diag, frob_norm, matmul, conj_transpose, det
from ..algebra.scalars import Field
from ..utils.errors import ShapeError, FieldMismatchError, MembershipError

__all__ = ['GroupId', 'FormDelta', 'form_delta', 'membership_residuals', 'is_member',
           'COMPACT', 'SPLIT', 'MEMBERSHIP_TOL', 'DESK_GROUPS']

COMPACT = 'compact'
SPLIT = 'split'
MEMBERSHIP_TOL = 1e-9

_COMPACT_NAMES = {Field.R: 'SO', Field.C: 'U', Field.H: 'Sp'}
_SPLIT_NAMES = {Field.R: 'O0', Field.C: 'SU', Field.H: 'Sp'}


class GroupId(object):
    """ Descriptor of a compact group M = SOn, Un, Spn or a split group G = O0(n,n), SU(n,n), Sp(n,n).

    Attributes
    ----------
    field : Field
        Scalar field.

    n : int
        Size of the compact group (G acts by 2n×2n matrices).

    kind : str
        'compact' or 'split'.

    unimodular : bool
        Only for split groups over C: SU(n,n) when True and U(n,n) when False.
    """

    def __init__(self, field, n, kind=SPLIT, unimodular=True):
        if kind not in (COMPACT, SPLIT):
            raise MembershipError('Error_group', str(kind))
        if int(n) < 1:
            raise ShapeError('(n = %s)' % n)
        self.field = Field.parse(field)
        self.n = int(n)
        self.kind = kind
        self.unimodular = bool(unimodular) if (kind == SPLIT and self.field == Field.C) else True

    @staticmethod
    def compact(field, n):
        return GroupId(field, n, COMPACT)

    @staticmethod
    def split(field, n, unimodular=True):
        return GroupId(field, n, SPLIT, unimodular)

    @staticmethod
    def parse(name):
        """ Descriptor from a name such as 'SO3', 'U2', 'Sp1', 'O0(3,3)', 'SU(1,1)', 'U(1,1)', 'Sp(1,1)'.
        """
        text = str(name).replace(' ', '').replace('_', '')
        m = re.match(r'^(O0|SU|U|Sp)\((\d+),(\d+)\)$', text)
        if m:
            if m.group(2) != m.group(3):
                raise MembershipError('Error_group', name)
            prefix, n = m.group(1), int(m.group(2))
            if prefix == 'O0':
                return GroupId.split(Field.R, n)
            if prefix == 'SU':
                return GroupId.split(Field.C, n)
            if prefix == 'U':
                return GroupId.split(Field.C, n, unimodular=False)
            return GroupId.split(Field.H, n)
        m = re.match(r'^(SO|U|Sp)(\d+)$', text)
        if m:
            field = {'SO': Field.R, 'U': Field.C, 'Sp': Field.H}[m.group(1)]
            return GroupId.compact(field, int(m.group(2)))
        raise MembershipError('Error_group', name)

    def get_name(self):
        if self.kind == COMPACT:
            return '%s%d' % (_COMPACT_NAMES[self.field], self.n)
        prefix = _SPLIT_NAMES[self.field]
        if self.field == Field.C and not self.unimodular:
            prefix = 'U'
        return '%s(%d,%d)' % (prefix, self.n, self.n)

    def __str__(self):
        return self.get_name()

    def __repr__(self):
        return 'GroupId(%s)' % self.get_name()

    def __eq__(self, other):
        return isinstance(other, GroupId) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return self.field, self.n, self.kind, self.unimodular

    def is_compact(self):
        return self.kind == COMPACT

    def is_split(self):
        return self.kind == SPLIT

    def compact_counterpart(self):
        """ The compact group M on which a split group acts (a compact group is its own counterpart). """
        return GroupId.compact(self.field, self.n)

    def matrix_size(self):
        return self.n if self.is_compact() else 2 * self.n

    def rank(self):
        """ Rank of the maximal torus of a compact group. """
        if self.field == Field.R:
            return self.n // 2
        return self.n

    def dimension(self):
        """ Real dimension of the group. """
        n = self.n
        d = self.field.dim
        compact_dim = {Field.R: n * (n - 1) // 2, Field.C: n * n, Field.H: n * (2 * n + 1)}[self.field]
        if self.is_compact():
            return compact_dim
        dim = 2 * compact_dim + d * n * n
        if self.field == Field.C and self.unimodular:
            dim -= 1
        return dim


DESK_GROUPS = [GroupId.split(Field.R, 3), GroupId.split(Field.R, 4),
               GroupId.split(Field.C, 1), GroupId.split(Field.C, 2),
               GroupId.split(Field.H, 1)]


class FormDelta(object):
    """ Signature matrix δ = diag(In, −In) and the Hermitian form b(x, y) = conj(x)ᵀ δ y.

    Parameters
    ----------
    n : int
        Half size.

    field : Field or str
        Scalar field.
    """

    def __init__(self, n, field):
        self.n = int(n)
        self.field = Field.parse(field)
        self.matrix = block_diag(identity(self.n, self.field), -identity(self.n, self.field))

    def form(self, x, y):
        """ b(x, y) for column vectors (2n×1 matrices), returned as the 4 components of the scalar. """
        value = matmul(conj_transpose(x), matmul(self.matrix, y))
        return value.data[..., 0, 0, :]


def form_delta(n, field):
    return FormDelta(n, field).matrix


def _check_operand(gid, A):
    if A.field != gid.field:
        raise FieldMismatchError(gid.field.value, A.field.value)
    size = gid.matrix_size()
    if A.shape != (size, size):
        raise ShapeError('%s for %s' % (A.shape, gid))


def membership_residuals(gid, A):
    """ Membership residual of each matrix of a stack.

    ‖conj(A)ᵀA − I‖ for compact groups (plus |det A − 1| for SOn), ‖conj(A)ᵀδA − δ‖ for split groups
    (plus |det A − 1| for SU(n,n) and a unit penalty outside the identity component of O(n,n), detected
    by the signs of the determinants of the diagonal blocks).

    Parameters
    ----------
    gid : GroupId
        Group descriptor.

    A : Mat
        Matrix or stack of matrices.

    Returns
    -------
    numpy.array
        Returns residuals with the batch shape of A.
    """
    _check_operand(gid, A)
    size = gid.matrix_size()
    if gid.is_compact():
        residual = frob_norm(matmul(conj_transpose(A), A) - identity(size, A.field))
        if gid.field == Field.R:
            residual = residual + np.abs(det(A) - 1.0)
        return residual
    delta = form_delta(gid.n, gid.field)
    residual = frob_norm(matmul(conj_transpose(A), matmul(delta, A)) - delta)
    if gid.field == Field.R:
        n = gid.n
        top = det(A.block(0, n, 0, n))
        bottom = det(A.block(n, 2 * n, n, 2 * n))
        residual = residual + np.where((top > 0) & (bottom > 0), 0.0, 1.0)
    elif gid.field == Field.C and gid.unimodular:
        residual = residual + np.abs(det(A) - 1.0)
    return residual


def is_member(gid, A):
    """ Largest membership residual over a stack (a member has residual below MEMBERSHIP_TOL). """
    return float(np.max(membership_residuals(gid, A)))
