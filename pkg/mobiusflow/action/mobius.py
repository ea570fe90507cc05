import numpy as np

from ..algebra.matrices import Mat, matmul, inverse, conj_transpose, identity, split_blocks, block_matrix, \
    frob_norm
from ..groups.groupid import GroupId, is_member, membership_residuals, form_delta, MEMBERSHIP_TOL
from ..utils.errors import MembershipError, ShapeError, SingularMatrixError, InvariantViolation, \
    FieldMismatchError

__all__ = ['MobiusElement', 'act', 'check_compact', 'COMPACT_TOL']

# membership tolerance for points of M
COMPACT_TOL = 1e-8


class MobiusElement(object):
    """ Element g = (A B; C D) of a split group acting on its compact counterpart.

    Attributes
    ----------
    group : GroupId
        Split group containing g.

    matrix : Mat
        The assembled 2n×2n matrix.

    Parameters
    ----------
    group : GroupId or str
        Split group.

    matrix : Mat
        Matrix of the element.

    check : bool
        Verify membership (relative to the size of the entries).
    """

    def __init__(self, group, matrix, check=True):
        if isinstance(group, str):
            group = GroupId.parse(group)
        if not group.is_split():
            raise MembershipError('Error_split_only', str(group))
        if matrix.field != group.field:
            raise FieldMismatchError(group.field.value, matrix.field.value)
        size = group.matrix_size()
        if matrix.shape != (size, size):
            raise ShapeError('%s for %s' % (matrix.shape, group))
        self.group = group
        self.matrix = matrix
        if check:
            residual = is_member(group, matrix)
            scale = max(1.0, float(np.max(frob_norm(matrix))) ** 2)
            if residual > MEMBERSHIP_TOL * scale:
                raise MembershipError('Error_member', '%s (residual %.3e)' % (group, residual))

    @staticmethod
    def from_blocks(group, A, B, C, D, check=True):
        return MobiusElement(group, block_matrix([[A, B], [C, D]]), check)

    @staticmethod
    def identity(group):
        if isinstance(group, str):
            group = GroupId.parse(group)
        return MobiusElement(group, identity(group.matrix_size(), group.field), check=False)

    @property
    def n(self):
        return self.group.n

    @property
    def field(self):
        return self.group.field

    @property
    def blocks(self):
        """ The blocks (A, B, C, D). """
        return split_blocks(self.matrix)

    def residual(self):
        return membership_residuals(self.group, self.matrix)

    def compose(self, other):
        """ Group product self · other. """
        return MobiusElement(self.group, matmul(self.matrix, other.matrix), check=False)

    __matmul__ = compose

    def inverse(self):
        """ g⁻¹ = δ conj(g)ᵀ δ, exact for members of the group. """
        delta = form_delta(self.n, self.field)
        return MobiusElement(self.group, matmul(delta, matmul(conj_transpose(self.matrix), delta)), check=False)

    def right_translate(self, X):
        """ X g⁻¹ for a tangent vector X at g. """
        return matmul(X, self.inverse().matrix)

    def __repr__(self):
        return 'MobiusElement(%s)' % self.group


def check_compact(group, U, tol=COMPACT_TOL):
    """ Raise MembershipError unless every matrix of U is in the compact counterpart of group. """
    compact = group.compact_counterpart()
    if U.field != compact.field:
        raise FieldMismatchError(compact.field.value, U.field.value)
    residual = float(np.max(membership_residuals(compact, U)))
    if residual > tol:
        raise MembershipError('Error_member', '%s (residual %.3e)' % (compact, residual))


def _denominator_inverse(C, D, U):
    try:
        return inverse(matmul(C, U) + D)
    except SingularMatrixError as e:
        raise InvariantViolation('CU + D (pivot %.3e)' % e.pivot)


def act(g, U, check=True):
    """ Möbius action g ∗ U = (AU + B)(CU + D)⁻¹.

    Parameters
    ----------
    g : MobiusElement
        Element of a split group.

    U : Mat
        Point of the compact group M, or a stack of points.

    check : bool
        Verify that U lies in M.

    Returns
    -------
    Mat
        Returns g ∗ U (a stack when U is a stack).

    Raises
    ------
    InvariantViolation
        If CU + D is singular, which valid inputs never produce.
    """
    if check:
        check_compact(g.group, U)
    A, B, C, D = g.blocks
    return matmul(matmul(A, U) + B, _denominator_inverse(C, D, U))
