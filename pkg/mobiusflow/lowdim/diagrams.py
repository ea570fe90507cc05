import numpy as np

from ..action.mobius import MobiusElement, act
from ..algebra.matrices import Mat, mexp, frob_norm, stack
from ..algebra.scalars import Field, qconj
from ..groups.haarsampling import haar_sample, random_element
from ..utils.errors import ConfigError
from ..utils.utils_translation import TextTranslation
from .morphisms import SP11, O33, morphism_sp11, morphism_sl4, rotation_matrix_Iw
from .spheres import conformal_act, projective_act
from .splitquaternions import O22, SplitQuaternion, split_operator, circle_rotation, circle_action

__all__ = ['DIAGRAMS', 'DIAGRAM_TOL', 'TRIVIALITY_TOL', 'diagram_check', 'random_sl2', 'random_sl4',
           'o22_residuals', 'sp11_residuals', 'sl4_residuals']

DIAGRAMS = ('O22', 'sp11', 'sl4')
DIAGRAM_TOL = 1e-8
TRIVIALITY_TOL = 1e-10


def random_sl2(rng, size, scale=1.0):
    """ Random p = α + 𝐣β ∈ SL2(R) with α = cosh(r)e^{iθ}, β = sinh(r)e^{iφ}. """
    r = scale * rng.standard_normal(size)
    theta, phi = 2.0 * np.pi * rng.random((2, size))
    return SplitQuaternion.from_complex_pair(np.cosh(r) * np.exp(1j * theta), np.sinh(r) * np.exp(1j * phi))


def random_sl4(rng, size, scale=1.0):
    """ exp(X) for random trace free X with Gaussian entries of standard deviation scale/2. """
    X = 0.5 * scale * rng.standard_normal((size, 4, 4))
    X -= (np.trace(X, axis1=-2, axis2=-1) / 4.0)[:, None, None] * np.eye(4)
    return mexp(Mat.from_numpy(X, Field.R)).to_numpy()


def o22_residuals(p, q, u):
    """ Residuals of the O0(2,2) diagram and of the triviality of R_q̄.

    Returns
    -------
    tuple
        Returns (‖L_p ∗ ρ(u) − ρ(p·u)‖, ‖(L_p R_q̄) ∗ ρ(u) − L_p ∗ ρ(u)‖) for each sample.
    """
    U = circle_rotation(u)
    image = act(MobiusElement(O22, split_operator(p)), U)
    expected = circle_rotation(circle_action(p, u))
    both = act(MobiusElement(O22, split_operator(p, q)), U)
    return frob_norm(image - expected), frob_norm(both - image)


def sp11_residuals(g, u):
    """ ‖ρ(g ∗ u) − F(g) ∗_c ρ(u)‖ with ρ(u) = ū, for g ∈ Sp(1,1) and unit quaternions u. """
    points = Mat(u[..., None, None, :], Field.H)
    mobius = qconj(act(MobiusElement(SP11, g), points).data[..., 0, 0, :])
    conformal = conformal_act(morphism_sp11(g), qconj(u))
    return np.linalg.norm(mobius - conformal, axis=-1)


def sl4_residuals(A, u):
    """ ‖ρ(A ∗_p u) − F(A) ∗ ρ(u)‖ with ρ(u) = I_u, for A ∈ SL4(R) and unit quaternions u. """
    projective = rotation_matrix_Iw(projective_act(A, u))
    image = act(MobiusElement(O33, Mat.from_numpy(morphism_sl4(A), Field.R)),
                Mat.from_numpy(rotation_matrix_Iw(u), Field.R))
    return np.linalg.norm(projective - image.to_numpy(), axis=(-2, -1))


def diagram_check(which, samples=1000, seed=0, scale=1.0):
    """ Compare both paths around one of the commutative squares on random samples.

    Parameters
    ----------
    which : str
        'O22' (split quaternions and the circle), 'sp11' (conformal action on S³) or 'sl4' (projective
        action on S³).

    samples : int
        Number of random samples.

    seed : int
        Seed.

    scale : float
        Spread of the random group elements.

    Returns
    -------
    dict
        Returns the report {diagram, samples, seed, max_residual, tolerance, pass}; the O22 report also
        holds triviality_residual.

    Raises
    ------
    ConfigError
        If ``which`` is not a known diagram.
    """
    if which not in DIAGRAMS:
        raise ConfigError('diagram', '%s %s' % (TextTranslation().get_str('Error_diagram'), which))
    rng = np.random.default_rng(seed)
    report = {'diagram': which, 'samples': int(samples), 'seed': int(seed), 'tolerance': DIAGRAM_TOL}
    if which == 'O22':
        p = random_sl2(rng, samples, scale)
        q = random_sl2(rng, samples, scale)
        u = np.exp(2j * np.pi * rng.random(samples))
        residual, trivial = o22_residuals(p, q, u)
        report['triviality_residual'] = float(np.max(trivial))
        passed = report['triviality_residual'] < TRIVIALITY_TOL
    elif which == 'sp11':
        g = stack([random_element(SP11, rng, scale) for _ in range(samples)])
        u = haar_sample(SP11.compact_counterpart(), rng, samples).data[:, 0, 0, :]
        residual = sp11_residuals(g, u)
        passed = True
    else:
        A = random_sl4(rng, samples, scale)
        u = rng.standard_normal((samples, 4))
        u /= np.linalg.norm(u, axis=-1, keepdims=True)
        residual = sl4_residuals(A, u)
        passed = True
    report['max_residual'] = float(np.max(residual))
    report['pass'] = bool(passed and report['max_residual'] < DIAGRAM_TOL)
    return report
