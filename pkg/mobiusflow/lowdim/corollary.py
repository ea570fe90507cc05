import numpy as np

from ..algebra.matrices import Mat, identity, block_diag
from ..algebra.scalars import Field
from ..geodesic.checks import geodesic_defect
from ..geodesic.solver import FD_STEP
from ..metric.symmetries import Symmetry, SymmetryGroup
from ..utils.errors import ConfigError
from ..utils.utils_translation import TextTranslation
from .morphisms import SP11, O33, o4_to_o33

__all__ = ['COROLLARY_CONTEXTS', 'corollary_generator', 'corollary_symmetries', 'corollary7_defect']

COROLLARY_CONTEXTS = ('sp11', 'o33')


def _check_context(context):
    if context not in COROLLARY_CONTEXTS:
        raise ConfigError('context', '%s %s' % (TextTranslation().get_str('Error_corollary'), context))


def corollary_generator(context, xi, eta):
    """ Lie algebra element of the maximal compact subalgebra built from two imaginary quaternions.

    'sp11': diag(ξ, η) ∈ sp1 ⊕ sp1 ⊂ sp(1,1). 'o33': the image of L_ξ + R_η ∈ o4, that is
    diag(2[ξ]×, −2[η]×) ∈ o3 ⊕ o3 ⊂ o(3,3).

    Parameters
    ----------
    context : str
        'sp11' or 'o33'.

    xi, eta : numpy.array
        Imaginary quaternions given by their 3 components.

    Returns
    -------
    Mat
        Returns the generator Z.
    """
    _check_context(context)
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    if context == 'o33':
        return o4_to_o33(xi, eta)
    left = Mat(np.concatenate([[0.0], xi])[None, None, :], Field.H)
    right = Mat(np.concatenate([[0.0], eta])[None, None, :], Field.H)
    return block_diag(left, right)


def corollary_symmetries(context):
    """ q ↦ −q for Sp1, whose fixed point set in Sp(1,1) is the maximal compact subgroup; None for O0(3,3).
    """
    _check_context(context)
    if context == 'o33':
        return None
    one = identity(1, Field.H)
    return SymmetryGroup([Symmetry(one, one * -1.0)])


def corollary7_defect(context, xi, eta, metric, times=(0.0, 0.5, 1.0), h=FD_STEP):
    """ Largest geodesic defect of t ↦ exp(tZ) for Z = corollary_generator(context, ξ, η).

    In Sp(1,1) every such curve is a geodesic (Sp1 × Sp1 is totally geodesic); in O0(3,3) only the
    single factor ones are (ξ = 0 or η = 0).

    Parameters
    ----------
    context : str
        'sp11' or 'o33'.

    xi, eta : numpy.array
        Imaginary quaternions (3 components).

    metric : KineticMetric
        Metric of Sp(1,1) or O0(3,3).

    times : sequence
        Curve parameters where the defect is evaluated.

    h : float
        Finite difference step.

    Returns
    -------
    float
        Returns the largest relative defect.
    """
    _check_context(context)
    group = SP11 if context == 'sp11' else O33
    if metric.group != group:
        raise ConfigError('metric', str(metric.group))
    Z = corollary_generator(context, xi, eta)
    return float(np.max(geodesic_defect(group, Z, metric, times, h)))
