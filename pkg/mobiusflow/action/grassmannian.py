import numpy as np

from ..algebra.matrices import Mat, matmul, inverse, conj_transpose, identity, block_matrix, frob_norm, \
    gram_schmidt
from ..groups.groupid import form_delta
from ..utils.errors import SingularMatrixError, InvariantViolation
from .mobius import check_compact

__all__ = ['rgraph', 'graph_to_point', 'isotropy_residual', 'act_on_graph']


def rgraph(U):
    """ Orthonormal basis (columns) of the graph {(Ux, x)} of U, a maximal isotropic subspace. """
    n = U.rows
    return block_matrix([[U], [identity(n, U.field, U.batch_shape)]]) * (1.0 / np.sqrt(2.0))


def graph_to_point(W):
    """ The matrix U whose graph is spanned by the columns of W: U = W_top W_bottom⁻¹. """
    n = W.cols
    top = W.block(0, n, 0, n)
    bottom = W.block(n, 2 * n, 0, n)
    try:
        return matmul(top, inverse(bottom))
    except SingularMatrixError as e:
        raise InvariantViolation('pivot %.3e' % e.pivot, key='Error_rgraph')


def isotropy_residual(W):
    """ ‖conj(W)ᵀ δ W‖ for a 2n×n basis W. """
    delta = form_delta(W.cols, W.field)
    return frob_norm(matmul(conj_transpose(W), matmul(delta, W)))


def act_on_graph(g, U, check=True):
    """ Möbius action computed on subspaces: g maps the graph of U to the graph of g ∗ U.

    The image basis g·rgraph(U) is orthonormalized again before U′ is read off, so this path shares no
    formula with act.

    Parameters
    ----------
    g : MobiusElement
        Element of a split group.

    U : Mat
        Point (or stack of points) of M.

    Returns
    -------
    Mat
        Returns U′ with graph g·graph(U).
    """
    if check:
        check_compact(g.group, U)
    image = gram_schmidt(matmul(g.matrix, rgraph(U)))
    return graph_to_point(image)
