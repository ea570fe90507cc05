import numpy as np

from ..action.mobius import MobiusElement
from ..algebra.matrices import Mat, matmul, mexp, mexp_frechet, to_real_vector
from ..groups.groupid import is_member
from ..groups.liealgebra import lie_basis_stack, from_coordinates, coordinates

__all__ = ['Chart', 'DEFAULT_RADIUS']

DEFAULT_RADIUS = 1.0


class Chart(object):
    """ Exponential chart x ↦ exp(Σ xᵢEᵢ)·g₀ around a point g₀ of a split group.

    Attributes
    ----------
    group : GroupId
        Split group.

    center : Mat
        The point g₀.

    basis : Mat
        Orthonormal basis E₁..E_d of the Lie algebra (stack with batch shape (d,)).

    radius : float
        Validity radius r; integrators move to a new chart when ‖x‖ > r/2.
    """

    def __init__(self, group, center, radius=DEFAULT_RADIUS):
        self.group = group
        self.center = center.matrix if isinstance(center, MobiusElement) else center
        self.basis = lie_basis_stack(group)
        self.radius = float(radius)

    @property
    def dim(self):
        return self.basis.batch_shape[0]

    def algebra_element(self, x):
        return from_coordinates(self.group, x)

    def point(self, x):
        """ exp(Σ xᵢEᵢ)·g₀ (x may carry leading axes). """
        return matmul(mexp(self.algebra_element(x)), self.center)

    def element(self, x):
        return MobiusElement(self.group, self.point(x), check=False)

    def differential(self, x, v):
        """ Tangent vector at point(x) of the coordinate velocity v. """
        A = self.algebra_element(x)
        return matmul(mexp_frechet(A, self.algebra_element(v)), self.center)

    def tangent_basis(self, x):
        """ Images of the coordinate directions at point(x), a stack with batch shape (d,). """
        A = self.algebra_element(x)
        A = Mat(np.broadcast_to(A.data, (self.dim,) + A.data.shape), A.field)
        return matmul(mexp_frechet(A, self.basis), self.center)

    def is_inside(self, x):
        return float(np.linalg.norm(x)) <= self.radius

    def needs_recentering(self, x):
        return float(np.linalg.norm(x)) > 0.5 * self.radius

    def recentered(self, x, v):
        """ Chart centred at point(x) and the coordinates of the velocity v in it.

        The differential of the new chart at 0 is E ↦ E·g₁, so the new velocity has coordinates
        ⟨Eᵢ, V g₁⁻¹⟩ with V the tangent vector of v.

        Returns
        -------
        tuple
            Returns (chart, velocity coordinates).
        """
        g1 = self.element(x)
        V = self.differential(x, v)
        chart = Chart(self.group, g1.matrix, self.radius)
        return chart, coordinates(self.group, g1.right_translate(V))

    def check(self, tol=1e-8):
        """ The centre is a member and the differential at 0 has full rank. """
        vectors = to_real_vector(self.tangent_basis(np.zeros(self.dim)))
        return is_member(self.group, self.center) < tol * max(1.0, float(np.max(np.abs(self.center.data))) ** 2) \
            and np.linalg.matrix_rank(vectors) == self.dim
