import numpy as np

from ..algebra.matrices import identity, det, frob_norm
from .mobius import act

__all__ = ['concentration_distance', 'has_no_eigenvalue', 'EIGENVALUE_THRESHOLD']

EIGENVALUE_THRESHOLD = 1e-8


def concentration_distance(g, q, eps=1.0):
    """ ‖g ∗ q − εI‖ for every point of q (γ(t) ∗ q → εI as t grows for q without eigenvalue −ε). """
    target = identity(q.rows, q.field) * float(eps)
    return frob_norm(act(g, q, check=False) - target)


def has_no_eigenvalue(q, value, threshold=EIGENVALUE_THRESHOLD):
    """ True where |det(q − λI)| exceeds the threshold (through the complex representation over H).

    Parameters
    ----------
    q : Mat
        Point or stack of points.

    value : float
        Real eigenvalue candidate λ.

    threshold : float
        Determinant threshold.

    Returns
    -------
    numpy.array
        Returns booleans with the batch shape of q.
    """
    shifted = q - identity(q.rows, q.field) * float(value)
    return np.abs(det(shifted)) > threshold
