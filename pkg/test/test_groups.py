from unittest import TestCase

import numpy as np
from scipy import stats

from mobiusflow.algebra import Field, matmul, mexp, frob_inner, frob_norm
from mobiusflow.groups import GroupId, DESK_GROUPS, membership_residuals, is_member, lie_basis_stack, \
    lie_residual, coordinates, from_coordinates, random_lie_element, haar_sample, haar_volume, sphere_volume, \
    random_compact_pair, compact_factor_residual, random_element, torus_point, weyl_density, EMBEDDING_PAIRS, \
    embed, defining_residual, embedding_pair, boost, boost_generator, sigma_curve, sigma_velocity, \
    cartan_decomposition, MEMBERSHIP_TOL
from mobiusflow.utils import Logger, MembershipError, UnsupportedEmbeddingError, ShapeError

__author__ = 'pdoren'
__project__ = 'MobiusFlow'

Logger().log_disable()

SPLIT_GROUPS = DESK_GROUPS + [GroupId.parse('U(1,1)'), GroupId.parse('Sp(2,2)')]


class TestGroupId(TestCase):
    def test_parse(self):
        for name in ('SO3', 'U2', 'Sp1', 'O0(3,3)', 'SU(1,1)', 'U(1,1)', 'Sp(1,1)'):
            self.assertEqual(name, str(GroupId.parse(name)), 'Problem with name %s' % name)
        self.assertEqual(GroupId.split(Field.C, 2), GroupId.parse('SU(2, 2)'), 'Problem with spaces in names')
        self.assertFalse(GroupId.parse('U(1,1)').unimodular, 'Problem with U(n,n)')
        for name in ('SU(1,2)', 'GL3', 'O(2,2)'):
            with self.assertRaises(MembershipError):
                GroupId.parse(name)

    def test_dimension(self):
        expected = {'O0(3,3)': 15, 'O0(4,4)': 28, 'SU(1,1)': 3, 'SU(2,2)': 15, 'U(1,1)': 4, 'Sp(1,1)': 10,
                    'SO3': 3, 'U2': 4, 'Sp1': 3}
        for name, dim in expected.items():
            gid = GroupId.parse(name)
            self.assertEqual(dim, gid.dimension(), 'Problem with dimension of %s (%g != %g)'
                             % (name, gid.dimension(), dim))

    def test_counterpart(self):
        self.assertEqual(GroupId.parse('U2'), GroupId.parse('SU(2,2)').compact_counterpart(),
                         'Problem with compact counterpart')
        self.assertEqual(2, GroupId.parse('SO4').rank(), 'Problem with rank of SO4')
        self.assertEqual(1, GroupId.parse('SO3').rank(), 'Problem with rank of SO3')


class TestLieAlgebra(TestCase):
    def test_orthonormal_basis(self):
        for gid in SPLIT_GROUPS + [GroupId.parse('U3'), GroupId.parse('Sp2'), GroupId.parse('SO4')]:
            basis = lie_basis_stack(gid)
            dim = basis.batch_shape[0]
            self.assertEqual(gid.dimension(), dim, 'Problem with basis size of %s (%g != %g)'
                             % (gid, dim, gid.dimension()))
            gram = frob_inner(basis[:, None], basis[None, :])
            error = np.max(np.abs(gram - np.eye(dim)))
            self.assertTrue(error < 1e-12, 'Problem with orthonormality of %s (%g != 0)' % (gid, error))
            residual = lie_residual(gid, basis)
            self.assertTrue(residual < 1e-12, 'Problem with Lie algebra of %s (%g != 0)' % (gid, residual))

    def test_exponential_in_group(self):
        rng = np.random.default_rng(1)
        for gid in SPLIT_GROUPS:
            X = random_lie_element(gid, rng, size=4)
            residual = is_member(gid, mexp(X))
            self.assertTrue(residual < MEMBERSHIP_TOL, 'Problem with exp of %s (%g != 0)' % (gid, residual))

    def test_coordinates(self):
        rng = np.random.default_rng(2)
        gid = GroupId.parse('Sp(1,1)')
        c = rng.standard_normal(gid.dimension())
        self.assertTrue(np.allclose(coordinates(gid, from_coordinates(gid, c)), c), 'Problem with coordinates')

    def test_trace_condition(self):
        gid = GroupId.parse('SU(2,2)')
        X = from_coordinates(gid, np.ones(gid.dimension()))
        trace = np.sum(X.data[np.arange(4), np.arange(4), 1])
        self.assertTrue(abs(trace) < 1e-12, 'Problem with trace of su(2,2) (%g != 0)' % trace)


class TestHaar(TestCase):
    def test_membership(self):
        rng = np.random.default_rng(3)
        for name in ('SO3', 'SO4', 'U1', 'U2', 'Sp1', 'Sp2'):
            gid = GroupId.parse(name)
            q = haar_sample(gid, rng, 50)
            residual = float(np.max(membership_residuals(gid, q)))
            self.assertTrue(residual < MEMBERSHIP_TOL, 'Problem with Haar samples of %s (%g != 0)'
                            % (name, residual))

    def test_distribution(self):
        # the trace of Haar samples against scipy's samplers
        rng = np.random.default_rng(4)
        q = haar_sample(GroupId.parse('U2'), rng, 2000).to_numpy()
        ours = np.real(np.trace(q, axis1=-2, axis2=-1))
        reference = np.real(np.trace(stats.unitary_group.rvs(2, size=2000, random_state=5), axis1=-2, axis2=-1))
        p = stats.ks_2samp(ours, reference).pvalue
        self.assertTrue(p > 1e-3, 'Problem with Haar distribution of U2 (p = %g)' % p)

        q = haar_sample(GroupId.parse('SO3'), rng, 2000).to_numpy()
        ours = np.trace(q, axis1=-2, axis2=-1)
        reference = np.trace(stats.special_ortho_group.rvs(3, size=2000, random_state=6), axis1=-2, axis2=-1)
        p = stats.ks_2samp(ours, reference).pvalue
        self.assertTrue(p > 1e-3, 'Problem with Haar distribution of SO3 (p = %g)' % p)

    def test_left_invariance(self):
        # Re tr of g and of U·h, h an independent draw, at the 1% level
        rng = np.random.default_rng(8)
        size = 10000
        critical = 1.628 * np.sqrt(2.0 / size)
        for name in ('U2', 'SO3', 'Sp2'):
            gid = GroupId.parse(name)
            U = haar_sample(gid, rng)
            g = haar_sample(gid, rng, size)
            h = matmul(U, haar_sample(gid, rng, size))
            traces = [np.trace(m.data[..., 0], axis1=-2, axis2=-1) for m in (g, h)]
            distance = stats.ks_2samp(*traces).statistic
            self.assertTrue(distance < critical, 'Problem with left invariance of %s (%g != 0)' % (name, distance))

    def test_first_entry_moment(self):
        # the first column is uniform on the unit sphere, so E|g₁₁|² = 1/n
        rng = np.random.default_rng(9)
        size = 10000
        for name in ('U2', 'SO3', 'Sp2'):
            gid = GroupId.parse(name)
            g = haar_sample(gid, rng, size)
            values = np.sum(g.data[:, 0, 0, :] ** 2, axis=-1)
            sigma = np.std(values) / np.sqrt(size)
            mean = np.mean(values)
            self.assertTrue(abs(mean - 1.0 / gid.n) < 3.0 * sigma, 'Problem with E|g11|^2 of %s (%g != %g)'
                            % (name, mean, 1.0 / gid.n))

    def test_volume(self):
        expected = {'SO2': 2.0 * np.pi * np.sqrt(2.0), 'U1': 2.0 * np.pi, 'Sp1': 2.0 * np.pi ** 2,
                    'SO3': sphere_volume(1) * np.sqrt(2.0) * sphere_volume(2) * 2.0}
        for name, volume in expected.items():
            value = haar_volume(GroupId.parse(name))
            self.assertTrue(np.isclose(value, volume), 'Problem with volume of %s (%g != %g)' % (name, value, volume))
        with self.assertRaises(MembershipError):
            haar_volume(GroupId.parse('SU(1,1)'))

    def test_compact_factor(self):
        rng = np.random.default_rng(7)
        for gid in SPLIT_GROUPS:
            k = random_compact_pair(gid, rng)
            residual = compact_factor_residual(gid, k)
            self.assertTrue(residual < MEMBERSHIP_TOL, 'Problem with K of %s (%g != 0)' % (gid, residual))
            g = random_element(gid, rng)
            residual = is_member(gid, g)
            self.assertTrue(residual < MEMBERSHIP_TOL, 'Problem with random element of %s (%g != 0)'
                            % (gid, residual))


class TestMaximalTorus(TestCase):
    def _mesh(self, gid, grid=32):
        nodes = 2.0 * np.pi * np.arange(grid) / grid
        m = gid.rank()
        return np.stack(np.meshgrid(*([nodes] * m), indexing='ij'), axis=-1).reshape(-1, m)

    def test_density_mass(self):
        for name in ('SO3', 'SO4', 'SO5', 'U1', 'U2', 'U3', 'Sp1', 'Sp2'):
            gid = GroupId.parse(name)
            theta = self._mesh(gid)
            mass = np.mean(weyl_density(gid, theta)) * (2.0 * np.pi) ** gid.rank()
            volume = haar_volume(gid)
            self.assertTrue(np.isclose(mass, volume, rtol=1e-10), 'Problem with Weyl mass of %s (%g != %g)'
                            % (name, mass, volume))

    def test_class_function(self):
        # ∫ |tr q|² dq = vol(M) for the defining representation of U2 and SO3
        for name in ('U2', 'SO3'):
            gid = GroupId.parse(name)
            theta = self._mesh(gid)
            q = torus_point(gid, theta)
            trace = np.sum(np.diagonal(q.data, axis1=-3, axis2=-2), axis=-1)
            f = trace[..., 0] ** 2 + trace[..., 1] ** 2
            value = np.mean(f * weyl_density(gid, theta)) * (2.0 * np.pi) ** gid.rank()
            volume = haar_volume(gid)
            self.assertTrue(np.isclose(value, volume, rtol=1e-10), 'Problem with class integral of %s (%g != %g)'
                            % (name, value, volume))

    def test_torus_membership(self):
        for name in ('SO5', 'U2', 'Sp2'):
            gid = GroupId.parse(name)
            q = torus_point(gid, self._mesh(gid, 4))
            residual = float(np.max(membership_residuals(gid, q)))
            self.assertTrue(residual < 1e-12, 'Problem with torus of %s (%g != 0)' % (name, residual))
        with self.assertRaises(ShapeError):
            torus_point(GroupId.parse('U2'), np.zeros(3))


class TestEmbeddings(TestCase):
    def test_pairs(self):
        rng = np.random.default_rng(8)
        for label, (make_src, make_dst) in sorted(EMBEDDING_PAIRS.items()):
            src, dst = make_src(1), make_dst(1)
            self.assertEqual(label, embedding_pair(src, dst), 'Problem with label %s' % label)
            A = random_element(src, rng)
            B = random_element(src, rng)
            image = embed(src, dst, A)
            residual = is_member(dst, image)
            self.assertTrue(residual < MEMBERSHIP_TOL, 'Problem with image of (%s) (%g != 0)' % (label, residual))
            residual = float(np.max(defining_residual(src, dst, image)))
            self.assertTrue(residual < 1e-10, 'Problem with relations of (%s) (%g != 0)' % (label, residual))
            error = float(frob_norm(embed(src, dst, matmul(A, B)) - matmul(image, embed(src, dst, B))))
            self.assertTrue(error < 1e-10, 'Problem with morphism (%s) (%g != 0)' % (label, error))
            X = random_lie_element(src, rng)
            residual = lie_residual(dst, embed(src, dst, X))
            self.assertTrue(residual < 1e-10, 'Problem with algebra image (%s) (%g != 0)' % (label, residual))

    def test_unsupported(self):
        with self.assertRaises(UnsupportedEmbeddingError):
            embedding_pair(GroupId.parse('Sp(1,1)'), GroupId.parse('SU(2,2)'))


class TestCurves(TestCase):
    def test_boost(self):
        gid = GroupId.parse('SU(2,2)')
        error = float(frob_norm(boost(gid, 0.7) - mexp(boost_generator(gid), 0.7)))
        self.assertTrue(error < 1e-12, 'Problem with boost (%g != 0)' % error)
        self.assertTrue(is_member(gid, boost(gid, np.linspace(-3, 3, 7))) < MEMBERSHIP_TOL,
                        'Problem with boost membership')

    def test_sigma(self):
        gid = GroupId.parse('Sp(1,1)')
        s = 0.6
        error = float(frob_norm(sigma_curve(gid, s) - boost(gid, np.arctanh(s))))
        self.assertTrue(error < 1e-12, 'Problem with σ reparametrization (%g != 0)' % error)
        h = 1e-6
        fd = (sigma_curve(gid, s + h) - sigma_curve(gid, s - h)) * (0.5 / h)
        error = float(frob_norm(sigma_velocity(gid, s) - fd))
        self.assertTrue(error < 1e-6, 'Problem with σ velocity (%g != 0)' % error)

    def test_split_only(self):
        with self.assertRaises(MembershipError):
            boost(GroupId.parse('U2'), 1.0)


class TestCartan(TestCase):
    def test_decomposition(self):
        rng = np.random.default_rng(9)
        for gid in DESK_GROUPS:
            g = random_element(gid, rng)
            k, P = cartan_decomposition(g)
            residual = compact_factor_residual(gid, k)
            self.assertTrue(residual < 1e-9, 'Problem with K factor of %s (%g != 0)' % (gid, residual))
            residual = lie_residual(gid, P)
            self.assertTrue(residual < 1e-9, 'Problem with P of %s (%g != 0)' % (gid, residual))
            n = gid.n
            diagonal = float(frob_norm(P.block(0, n, 0, n)) + frob_norm(P.block(n, 2 * n, n, 2 * n)))
            self.assertTrue(diagonal < 1e-9, 'Problem with off diagonal P of %s (%g != 0)' % (gid, diagonal))
            error = float(frob_norm(matmul(k, mexp(P)) - g))
            self.assertTrue(error < 1e-9, 'Problem with g = k exp(P) for %s (%g != 0)' % (gid, error))
