from collections import deque

import numpy as np

from ..algebra.matrices import Mat, matmul, conj_transpose, entry_conj, identity, block_diag, split_blocks
from ..algebra.scalars import Field
from ..utils.errors import QuadratureError, FieldMismatchError
from .quadrature import SampleSet

__all__ = ['Symmetry', 'SymmetryGroup', 'MAX_SYMMETRY_ORDER']

MAX_SYMMETRY_ORDER = 4096


class Symmetry(object):
    """ Isometry q ↦ A·c(q)·D⁻¹ of M, with A, D in M and c the identity or entrywise conjugation.

    Conjugation is only available over C, where it is an automorphism of the matrix product. The map
    is the action of k = diag(A, D) ∈ K composed with c, and it preserves the Haar measure.

    Parameters
    ----------
    left : Mat
        Matrix A.

    right : Mat
        Matrix D.

    conjugate : bool
        Apply entrywise conjugation first.
    """

    def __init__(self, left, right, conjugate=False):
        if left.field != right.field:
            raise FieldMismatchError(left.field.value, right.field.value)
        if conjugate and left.field != Field.C:
            raise FieldMismatchError(left.field.value, Field.C.value)
        self.left = left
        self.right = right
        self.conjugate = bool(conjugate)

    @staticmethod
    def identity(n, field):
        return Symmetry(identity(n, field), identity(n, field))

    @staticmethod
    def from_compact_element(k):
        """ Symmetry q ↦ k ∗ q of an element k = diag(A, D) of K. """
        A, _, _, D = split_blocks(k)
        return Symmetry(A, D)

    @staticmethod
    def conjugation(n):
        """ Entrywise conjugation q ↦ conj(q) of Un. """
        return Symmetry(identity(n, Field.C), identity(n, Field.C), conjugate=True)

    @property
    def field(self):
        return self.left.field

    def compact_element(self):
        """ diag(A, D) ∈ K (the conjugation part is not included). """
        return block_diag(self.left, self.right)

    def __call__(self, q):
        if self.conjugate:
            q = entry_conj(q)
        return matmul(matmul(self.left, q), conj_transpose(self.right))

    def compose(self, other):
        """ self ∘ other. """
        if self.conjugate:
            return Symmetry(matmul(self.left, entry_conj(other.left)), matmul(self.right, entry_conj(other.right)),
                            not other.conjugate)
        return Symmetry(matmul(self.left, other.left), matmul(self.right, other.right), other.conjugate)

    def key(self):
        """ Hashable key, equal for maps that differ by a central scalar in (A, D). """
        data = self.left.data.reshape(-1, 4)
        norms = np.sqrt(np.sum(data * data, axis=-1))
        first = int(np.argmax(norms > 1e-8))
        if self.field == Field.C:
            z = complex(data[first, 0], data[first, 1])
            phase = np.conj(z) / abs(z)
            left = self.left.to_numpy() * phase
            right = self.right.to_numpy() * phase
            arrays = [left.real, left.imag, right.real, right.imag]
        else:
            component = int(np.argmax(np.abs(data[first]) > 1e-8))
            sign = 1.0 if data[first, component] > 0 else -1.0
            arrays = [self.left.data * sign, self.right.data * sign]
        rounded = np.concatenate([np.round(a, 8).ravel() for a in arrays]) + 0.0
        return rounded.tobytes(), self.conjugate


class SymmetryGroup(object):
    """ Finite group of isometries of M generated by a list of symmetries.

    Symmetrizing a sample set by the group makes every element an exact symmetry of the quadrature:
    the empirical kinetic metric is invariant under the corresponding maps of G, so their fixed point
    sets are totally geodesic for the empirical metric as well.

    Parameters
    ----------
    generators : list[Symmetry]
        Generators (all over the same field and size).

    max_order : int
        Largest accepted group order.
    """

    def __init__(self, generators, max_order=MAX_SYMMETRY_ORDER):
        self.generators = list(generators)
        if not self.generators:
            raise QuadratureError('Error_samples', '(no generators)')
        n = self.generators[0].left.rows
        start = Symmetry.identity(n, self.generators[0].field)
        elements = {start.key(): start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for s in self.generators:
                candidate = s.compose(current)
                key = candidate.key()
                if key not in elements:
                    elements[key] = candidate
                    queue.append(candidate)
                    if len(elements) > max_order:
                        raise QuadratureError('Error_samples', 'symmetry group order > %d' % max_order)
        self.elements = list(elements.values())

    @property
    def order(self):
        return len(self.elements)

    def apply(self, points):
        """ Orbits of a stack of points: batch shape (N,) becomes (N·order,), orbit after orbit. """
        images = [s(points).data for s in self.elements]
        data = np.stack(images, axis=1)
        return Mat(data.reshape((-1,) + data.shape[2:]), points.field)

    def symmetrize(self, sample_set):
        """ Replace every node by its orbit, each image carrying the weight of the node over the order. """
        m = self.order
        weights = np.repeat(sample_set.weights / m, m)
        return SampleSet(sample_set.group, self.apply(sample_set.points), weights, sample_set.spec,
                         sample_set.class_only, sample_set.orbit_size * m, self)
