from unittest import TestCase

import numpy as np

from mobiusflow.algebra import Mat, Field, identity, frob_norm, stack
from mobiusflow.groups import GroupId, random_element, random_lie_element, membership_residuals, lie_residual
from mobiusflow.lowdim import SplitQuaternion, SPLIT_BASIS, O22, split_operator, circle_rotation, circle_action, \
    SphereAction, CONFORMAL, PROJECTIVE, lorentz_residual, conformal_act, SP11, O33, morphism_sp11, morphism_sl4, \
    rotation_matrix_Iw, conjugation_matrix, o4_to_o33, bracket_identity_residual, algebra_bracket_residual, \
    DIAGRAMS, diagram_check, random_sl2, random_sl4, corollary_generator, corollary_symmetries, corollary7_defect
from mobiusflow.metric import QuadratureSpec, build_sample_set, KineticMetric, MONTE_CARLO, CUBATURE
from mobiusflow.utils import Logger, ConfigError, ShapeError, InvariantViolation, MembershipError, TextTranslation

__author__ = 'pdoren'
__project__ = 'MobiusFlow'

Logger().log_disable()


class TestSplitQuaternions(TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(40)

    def test_units(self):
        one, i, j, k = (SplitQuaternion(v) for v in np.eye(4))
        self.assertTrue(np.allclose((i * i).coefficients, -one.coefficients), 'Problem with i² = -1')
        self.assertTrue(np.allclose((j * j).coefficients, one.coefficients), 'Problem with j² = 1')
        self.assertTrue(np.allclose((k * k).coefficients, one.coefficients), 'Problem with k² = 1')
        self.assertTrue(np.allclose((i * j).coefficients, k.coefficients), 'Problem with ij = k')
        self.assertTrue(np.allclose((j * i).coefficients, (-k).coefficients), 'Problem with ji = -k')

    def test_product_and_norm(self):
        p = SplitQuaternion(self.rng.standard_normal(4))
        q = SplitQuaternion(self.rng.standard_normal(4))
        self.assertTrue(np.allclose((p * q).matrix(), p.matrix().dot(q.matrix())), 'Problem with product')
        self.assertTrue(np.isclose(p.norm2(), np.linalg.det(p.matrix())), 'Problem with norm (%g != %g)'
                        % (p.norm2(), np.linalg.det(p.matrix())))
        alpha, beta = p.complex_pair()
        self.assertTrue(np.allclose(SplitQuaternion.from_complex_pair(alpha, beta).coefficients, p.coefficients),
                        'Problem with complex pair')
        with self.assertRaises(ShapeError):
            SplitQuaternion([1.0, 2.0])
        self.assertEqual((4, 2, 2), SPLIT_BASIS.shape, 'Problem with basis shape')

    def test_split_operator(self):
        p = random_sl2(self.rng, 10)
        q = random_sl2(self.rng, 10)
        residual = float(np.max(membership_residuals(O22, split_operator(p, q))))
        self.assertTrue(residual < 1e-9, 'Problem with O0(2,2) membership (%g != 0)' % residual)
        minus = SplitQuaternion([-1.0, 0.0, 0.0, 0.0])
        kernel = float(frob_norm(split_operator(minus, minus) - identity(4, Field.R)))
        self.assertTrue(kernel < 1e-12, 'Problem with kernel of the double cover (%g != 0)' % kernel)

    def test_circle_action(self):
        p = random_sl2(self.rng, 20)
        u = np.exp(2j * np.pi * self.rng.random(20))
        self.assertTrue(np.allclose(np.abs(circle_action(p, u)), 1.0), 'Problem with circle action')
        residual = float(np.max(membership_residuals(GroupId.parse('SO2'), circle_rotation(u))))
        self.assertTrue(residual < 1e-12, 'Problem with circle rotation (%g != 0)' % residual)


class TestSpheres(TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(41)

    def test_action(self):
        with self.assertRaises(ConfigError):
            SphereAction('affine', 3)
        self.assertEqual(5, SphereAction(CONFORMAL, 3).matrix_size, 'Problem with conformal size')
        self.assertEqual(4, SphereAction(PROJECTIVE, 3).matrix_size, 'Problem with projective size')
        z = self.rng.standard_normal((10, 4))
        z /= np.linalg.norm(z, axis=-1, keepdims=True)
        conformal = SphereAction(CONFORMAL, 3)
        A = morphism_sp11(stack([random_element(SP11, self.rng) for _ in range(10)]))
        self.assertTrue(np.max(conformal.member_residual(A)) < 1e-9, 'Problem with O0(1,4) membership')
        self.assertTrue(np.max(conformal.sphere_residual(conformal(A, z))) < 1e-12, 'Problem with conformal image')
        projective = SphereAction(PROJECTIVE, 3)
        B = random_sl4(self.rng, 10)
        self.assertTrue(np.max(projective.member_residual(B)) < 1e-9, 'Problem with SL4 membership')
        C = random_sl4(self.rng, 10)
        law = np.max(projective.action_law_residual(B, C, z))
        self.assertTrue(law < 1e-10, 'Problem with projective action law (%g != 0)' % law)

    def test_conformal_errors(self):
        eta = np.diag([1.0, -1.0, -1.0, -1.0])
        self.assertEqual(0.0, float(lorentz_residual(np.eye(4))), 'Problem with identity')
        self.assertTrue(lorentz_residual(eta) >= 1.0, 'Problem with orientation of the form')
        with self.assertRaises(ShapeError):
            conformal_act(np.eye(4), np.array([1.0, 0.0]))
        with self.assertRaises(InvariantViolation):
            conformal_act(np.zeros((4, 4)), np.array([1.0, 0.0, 0.0]))


class TestMorphisms(TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

    def test_images(self):
        A = random_sl4(self.rng, 10)
        residual = float(np.max(membership_residuals(O33, Mat.from_numpy(morphism_sl4(A), Field.R))))
        self.assertTrue(residual < 1e-9, 'Problem with O0(3,3) image (%g != 0)' % residual)
        xi, eta = self.rng.standard_normal((2, 3))
        residual = lie_residual(O33, o4_to_o33(xi, eta))
        self.assertTrue(residual < 1e-12, 'Problem with o(3,3) element (%g != 0)' % residual)

    def test_identities(self):
        alpha, beta = self.rng.standard_normal((2, 50, 4))
        residual = float(np.max(bracket_identity_residual(alpha, beta)))
        self.assertTrue(residual < 1e-10, 'Problem with bracket identity (%g != 0)' % residual)
        X = random_lie_element(SP11, self.rng, size=20)
        Y = random_lie_element(SP11, self.rng, size=20)
        residual = float(np.max(algebra_bracket_residual(X, Y)))
        self.assertTrue(residual < 1e-10, 'Problem with Lie algebra morphism (%g != 0)' % residual)
        w = self.rng.standard_normal((20, 4))
        residual = float(np.max(np.abs(rotation_matrix_Iw(w) - conjugation_matrix(w))))
        self.assertTrue(residual < 1e-12, 'Problem with rotation formula (%g != 0)' % residual)
        with self.assertRaises(MembershipError):
            rotation_matrix_Iw(np.zeros(4))

    def test_diagrams(self):
        for which in DIAGRAMS:
            report = diagram_check(which, samples=50, seed=3)
            self.assertTrue(report['pass'], 'Problem with diagram %s (%g)' % (which, report['max_residual']))
            self.assertEqual(50, report['samples'], 'Problem with report')
        self.assertTrue('triviality_residual' in diagram_check('O22', samples=5), 'Problem with O22 report')
        with self.assertRaises(ConfigError) as context:
            diagram_check('so5')
        self.assertTrue(TextTranslation().get_str('Error_diagram') in str(context.exception),
                        'Problem with unknown diagram message')


class TestCorollary(TestCase):
    def test_generators(self):
        Z = corollary_generator('sp11', [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
        self.assertEqual(Field.H, Z.field, 'Problem with field of the generator')
        self.assertTrue(lie_residual(SP11, Z) < 1e-12, 'Problem with sp(1,1) generator')
        Z = corollary_generator('o33', [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
        self.assertEqual((6, 6), Z.shape, 'Problem with o(3,3) generator')
        with self.assertRaises(ConfigError) as context:
            corollary_generator('o22', [1.0, 0.0, 0.0], [0.0, 0.0, 0.0])
        self.assertTrue(TextTranslation().get_str('Error_corollary') in str(context.exception),
                        'Problem with unknown context message')
        self.assertIsNone(corollary_symmetries('o33'), 'Problem with O0(3,3) symmetries')
        self.assertEqual(2, corollary_symmetries('sp11').order, 'Problem with Sp(1,1) symmetries')

    def test_single_factor(self):
        metric = KineticMetric(O33, build_sample_set(O33, QuadratureSpec(MONTE_CARLO, samples=32, seed=5)))
        zero = np.zeros(3)
        for xi, eta in (([0.6, 0.8, 0.0], zero), (zero, [0.0, 0.6, 0.8])):
            defect = corollary7_defect('o33', xi, eta, metric, times=(0.0, 0.7))
            self.assertTrue(defect < 1e-4, 'Problem with single factor geodesic (%g != 0)' % defect)
        with self.assertRaises(ConfigError):
            corollary7_defect('sp11', [1.0, 0.0, 0.0], zero, metric)

    def test_sp11(self):
        samples = build_sample_set(SP11, QuadratureSpec(CUBATURE, grid=6), corollary_symmetries('sp11'))
        metric = KineticMetric(SP11, samples)
        defect = corollary7_defect('sp11', [0.6, 0.8, 0.0], [0.0, 0.0, 1.0], metric, times=(0.0, 0.7))
        self.assertTrue(defect < 1e-4, 'Problem with Sp(1,1) geodesic (%g != 0)' % defect)
