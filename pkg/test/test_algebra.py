from unittest import TestCase

import numpy as np
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.linalg import expm

from mobiusflow.algebra import Field, Scalar, Mat, qmul, qconj, qnorm2, left_matrix, right_matrix, identity, \
    matmul, inverse, mexp, mexp_frechet, frob_inner, frob_norm, conj_transpose, complex_representation, det, \
    gram_schmidt, random_gaussian, block_diag, split_blocks, scalar_matrix, to_real_vector, from_real_vector
from mobiusflow.utils import Logger, FieldMismatchError, ShapeError, SingularMatrixError

__author__ = 'pdoren'
__project__ = 'MobiusFlow'

Logger().log_disable()

quaternions = arrays(np.float64, (4,), elements=st.floats(min_value=-10.0, max_value=10.0))


class TestScalars(TestCase):
    @seed(1)
    @settings(max_examples=50, deadline=None)
    @given(p=quaternions, q=quaternions, r=quaternions)
    def test_hamilton_product(self, p, q, r):
        lhs = qmul(qmul(p, q), r)
        rhs = qmul(p, qmul(q, r))
        self.assertTrue(np.allclose(lhs, rhs, atol=1e-9), 'Problem with associativity')
        self.assertTrue(np.isclose(qnorm2(qmul(p, q)), qnorm2(p) * qnorm2(q), rtol=1e-12, atol=1e-9),
                        'Problem with multiplicative norm (%g != %g)' % (qnorm2(qmul(p, q)), qnorm2(p) * qnorm2(q)))
        self.assertTrue(np.allclose(qconj(qmul(p, q)), qmul(qconj(q), qconj(p)), atol=1e-9),
                        'Problem with conjugation of a product')

    @seed(2)
    @settings(max_examples=30, deadline=None)
    @given(p=quaternions, q=quaternions)
    def test_multiplication_matrices(self, p, q):
        self.assertTrue(np.allclose(left_matrix(p).dot(q), qmul(p, q), atol=1e-9), 'Problem with left matrix')
        self.assertTrue(np.allclose(right_matrix(q).dot(p), qmul(p, q), atol=1e-9), 'Problem with right matrix')

    def test_units(self):
        i, j, k = (Scalar(v) for v in np.eye(4)[1:])
        minus_one = Scalar([-1.0])
        self.assertEqual(Scalar(minus_one.components, Field.H), i * i, 'Problem with i² = -1')
        self.assertEqual(Scalar(minus_one.components, Field.H), i * j * k, 'Problem with ijk = -1')
        self.assertEqual(k, i * j, 'Problem with ij = k')
        self.assertEqual(-k, j * i, 'Problem with ji = -k')

    def test_field_tags(self):
        self.assertEqual(Field.R, Scalar(2.0).field, 'Problem with real tag')
        self.assertEqual(Field.C, Scalar(1.0 + 2.0j).field, 'Problem with complex tag')
        self.assertEqual((1 + 2j) * (3 - 1j), (Scalar(1 + 2j) * Scalar(3 - 1j)).to_complex(),
                         'Problem with complex product')
        with self.assertRaises(FieldMismatchError):
            Scalar(1.0) + Scalar(1j)
        with self.assertRaises(ShapeError):
            Scalar([0.0, 1.0], Field.R)

    def test_inverse(self):
        q = Scalar([1.0, -2.0, 0.5, 3.0])
        self.assertTrue((q * q.inverse()).isclose(Scalar([1.0], Field.H)), 'Problem with quaternion inverse')


class TestMatrices(TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(0)

    def test_complex_fast_path(self):
        A = self.rng.standard_normal((3, 3)) + 1j * self.rng.standard_normal((3, 3))
        B = self.rng.standard_normal((3, 3)) + 1j * self.rng.standard_normal((3, 3))
        C = matmul(Mat.from_numpy(A), Mat.from_numpy(B))
        self.assertEqual(Field.C, C.field, 'Problem with field of a product')
        self.assertTrue(np.allclose(C.to_numpy(), A.dot(B)), 'Problem with complex product')
        # the same product through the quaternionic kernel
        H = matmul(Mat(Mat.from_numpy(A).data, Field.H), Mat(Mat.from_numpy(B).data, Field.H))
        self.assertTrue(np.allclose(H.data, C.data), 'Problem with quaternionic product of complex entries')

    def test_quaternion_product(self):
        A = random_gaussian(3, 2, Field.H, self.rng)
        B = random_gaussian(2, 4, Field.H, self.rng)
        lhs = complex_representation(matmul(A, B))
        rhs = complex_representation(A).dot(complex_representation(B))
        self.assertTrue(np.allclose(lhs, rhs), 'Problem with complex representation of a product')

    def test_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            matmul(identity(2, Field.R), identity(2, Field.C))
        with self.assertRaises(ShapeError):
            matmul(identity(2, Field.R), identity(3, Field.R))
        with self.assertRaises(FieldMismatchError):
            Mat.from_numpy(np.array([[1j]]), Field.R)

    def test_inverse(self):
        for field in Field:
            A = random_gaussian(4, 4, field, self.rng, batch_shape=(5,))
            residual = np.max(frob_norm(matmul(A, inverse(A)) - identity(4, field)))
            self.assertTrue(residual < 1e-10, 'Problem with inverse over %s (%g != 0)' % (field.value, residual))

    def test_singular(self):
        A = Mat.from_numpy(np.array([[1.0, 2.0], [2.0, 4.0]]))
        with self.assertRaises(SingularMatrixError) as context:
            inverse(A)
        self.assertTrue(context.exception.pivot < 1e-10, 'Problem with pivot of singular matrix')

    def test_exponential(self):
        for scale in (0.1, 1.0, 3.0):
            A = scale * (self.rng.standard_normal((4, 4)) + 1j * self.rng.standard_normal((4, 4)))
            E = mexp(Mat.from_numpy(A)).to_numpy()
            reference = expm(A)
            error = np.linalg.norm(E - reference) / np.linalg.norm(reference)
            self.assertTrue(error < 1e-9, 'Problem with exponential (%g != 0)' % error)

    def test_exponential_quaternion(self):
        X = random_gaussian(3, 3, Field.H, self.rng)
        E = mexp(X, 2.0)
        reference = expm(2.0 * complex_representation(X))
        self.assertTrue(np.allclose(complex_representation(E), reference, atol=1e-10),
                        'Problem with quaternionic exponential')

    def test_frechet(self):
        A = random_gaussian(3, 3, Field.C, self.rng)
        E = random_gaussian(3, 3, Field.C, self.rng)
        h = 1e-6
        fd = (mexp(A + E * h) - mexp(A - E * h)) * (0.5 / h)
        error = float(frob_norm(mexp_frechet(A, E) - fd))
        self.assertTrue(error < 1e-6, 'Problem with Frechet derivative (%g != 0)' % error)

    def test_inner_product(self):
        X = random_gaussian(3, 3, Field.H, self.rng)
        Y = random_gaussian(3, 3, Field.H, self.rng)
        trace = np.sum(matmul(conj_transpose(X), Y).data[np.arange(3), np.arange(3), 0])
        self.assertTrue(np.isclose(frob_inner(X, Y), trace), 'Problem with Re tr (%g != %g)'
                        % (frob_inner(X, Y), trace))

    def test_study_determinant(self):
        X = random_gaussian(2, 2, Field.H, self.rng, batch_shape=(10,))
        self.assertTrue(np.all(det(X) >= 0.0), 'Problem with sign of quaternionic determinant')
        q = scalar_matrix(Scalar([1.0, 1.0, 1.0, 1.0]), 1, Field.H)
        self.assertTrue(np.isclose(det(q), 4.0), 'Problem with |q|² (%g != %g)' % (det(q), 4.0))

    def test_gram_schmidt(self):
        for field in Field:
            Q = gram_schmidt(random_gaussian(4, 4, field, self.rng))
            residual = float(frob_norm(matmul(conj_transpose(Q), Q) - identity(4, field)))
            self.assertTrue(residual < 1e-12, 'Problem with orthonormality over %s (%g != 0)'
                            % (field.value, residual))

    def test_blocks(self):
        A = random_gaussian(2, 2, Field.C, self.rng)
        D = random_gaussian(2, 2, Field.C, self.rng)
        a, b, c, d = split_blocks(block_diag(A, D))
        self.assertTrue(np.allclose(a.data, A.data) and np.allclose(d.data, D.data), 'Problem with diagonal blocks')
        self.assertEqual(0.0, float(frob_norm(b)) + float(frob_norm(c)), 'Problem with off diagonal blocks')

    def test_batch_broadcast(self):
        A = random_gaussian(3, 3, Field.R, self.rng, batch_shape=(4,))
        B = random_gaussian(3, 3, Field.R, self.rng)
        C = matmul(A, B)
        self.assertEqual((4,), C.batch_shape, 'Problem with batch shape')
        self.assertTrue(np.allclose(C[2].to_numpy(), A[2].to_numpy().dot(B.to_numpy())), 'Problem with batch product')
        scaled = A * np.arange(4.0)
        self.assertEqual(0.0, float(frob_norm(scaled[0])), 'Problem with batch scaling')

    def test_real_vector(self):
        X = random_gaussian(2, 3, Field.C, self.rng)
        v = to_real_vector(X)
        self.assertEqual(12, v.size, 'Problem with real dimension (%g != %g)' % (v.size, 12))
        self.assertTrue(np.allclose(from_real_vector(v, 2, 3, Field.C).data, X.data), 'Problem with real vector')
