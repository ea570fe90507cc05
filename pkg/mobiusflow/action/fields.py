import numpy as np

from ..algebra.matrices import Mat, matmul, conj_transpose, split_blocks, frob_norm, max_abs_norm
from ..groups.liealgebra import lie_residual
from ..utils.errors import MembershipError
from .mobius import MobiusElement, check_compact, _denominator_inverse

__all__ = ['ActionFrame', 'InducedField', 'induced_field', 'tangent_residual', 'check_tangent',
           'TANGENT_TOL']

TANGENT_TOL = 1e-8


def check_tangent(g, X, tol=TANGENT_TOL):
    """ Raise MembershipError unless X g⁻¹ lies in the Lie algebra of the group of g. """
    scale = max(1.0, float(np.max(max_abs_norm(g.matrix))) ** 2)
    residual = lie_residual(g.group, g.right_translate(X))
    if residual > tol * scale * max(1.0, float(np.max(max_abs_norm(X)))):
        raise MembershipError('Error_tangent', '%s (residual %.3e)' % (g.group, residual))


def tangent_residual(points, vectors):
    """ ‖P + conj(P)ᵀ‖ with P = conj(p)ᵀ v: vanishes when v is tangent to M at p. """
    P = matmul(conj_transpose(points), vectors)
    return frob_norm(P + conj_transpose(P))


class ActionFrame(object):
    """ Quantities of the action of a fixed g on a fixed set of points of M.

    Caches g ∗ q and (Cq + D)⁻¹, so that the induced field of any direction X at g costs two products
    per point: X̃(q) = [(Ȧq + Ḃ) − (g ∗ q)(Ċq + Ḋ)](Cq + D)⁻¹, with (Ȧ Ḃ; Ċ Ḋ) the blocks of X.

    Parameters
    ----------
    g : MobiusElement
        Base point in G.

    samples : Mat
        Stack of points of M with batch shape (N,).
    """

    def __init__(self, g, samples):
        self.g = g
        self.samples = samples
        A, B, C, D = g.blocks
        self.winv = _denominator_inverse(C, D, samples)
        self.points = matmul(matmul(A, samples) + B, self.winv)

    def field(self, X):
        """ Induced field of one direction X (or a stack) at every point.

        Returns
        -------
        Mat
            Returns a stack with batch shape X.batch_shape + samples.batch_shape.
        """
        extra = len(self.samples.batch_shape)
        if X.batch_shape:
            X = Mat(X.data.reshape(X.batch_shape + (1,) * extra + X.data.shape[-3:]), X.field)
        dA, dB, dC, dD = split_blocks(X)
        q = self.samples
        return matmul(matmul(dA, q) + dB - matmul(self.points, matmul(dC, q) + dD), self.winv)


class InducedField(object):
    """ Velocity field X̃ on M induced by a tangent vector X at g.

    X̃(q) = d/dt|₀ exp(t X g⁻¹) g ∗ q lies in the tangent space of M at g ∗ q.

    Attributes
    ----------
    base : MobiusElement
        Base point g.

    direction : Mat
        Tangent vector X at g (X g⁻¹ in the Lie algebra).
    """

    def __init__(self, base, direction, check=True):
        if check:
            check_tangent(base, direction)
        self.base = base
        self.direction = direction

    def __call__(self, q):
        return ActionFrame(self.base, q).field(self.direction)

    def tangency_residual(self, q):
        frame = ActionFrame(self.base, q)
        return tangent_residual(frame.points, frame.field(self.direction))


def induced_field(g, X, q, check=True):
    """ Value X̃(q) of the induced field, computed analytically by the product and inverse rules.

    Parameters
    ----------
    g : MobiusElement
        Base point.

    X : Mat
        Tangent vector at g.

    q : Mat
        Point (or stack of points) of M.

    Returns
    -------
    Mat
        Returns the tangent vector of M at g ∗ q.
    """
    if check:
        check_compact(g.group, q)
    return InducedField(g, X, check)(q)
