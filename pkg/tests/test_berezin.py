import numpy as np
import pytest

from bercalc.berezin import (
    ClosedFormOperator,
    DiscGrid,
    ExactSampler,
    InterpolationPath,
    MatrixOperator,
    MeanKind,
    RadialGrid,
    adjoint_pairing,
    berezin_norm,
    berezin_radius,
    berezin_transform,
    c_tilde,
    mean_eval,
    min_t_ber_mix,
    pairing,
    parse_sampler,
    sigma_t_norm,
    t_berezin_norm,
)
from bercalc.errors import DomainError, InputError
from bercalc.linalg import matrix_power
from bercalc.spaces import FiniteSpace, Fock, WeightedHardy

KINDS = list(MeanKind)
REMARK_A = np.array([[0, 2, 2], [0, 0, 3], [0, 0, 0]], dtype=complex)


def rand_complex(rng, n):
    return rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))


def finite_op(m):
    m = np.asarray(m, dtype=complex)
    return MatrixOperator(FiniteSpace(m.shape[0]), m)


def hardy_identity(beta):
    def fn(lam, mu):
        norm = np.sqrt((1 - beta * np.abs(lam) ** 2) * (1 - beta * np.abs(mu) ** 2))
        return norm / (1 - beta * np.conj(lam) * mu)

    return ClosedFormOperator(WeightedHardy(beta), fn, label="I")


def hardy_dilation(eta, beta):
    def fn(lam, mu):
        norm = np.sqrt((1 - beta * np.abs(lam) ** 2) * (1 - beta * np.abs(mu) ** 2))
        return norm / (1 - beta * np.conj(lam) * eta * mu)

    return ClosedFormOperator(WeightedHardy(beta), fn, label="dilation")


class TestMeans:
    def test_idempotent(self):
        rng = np.random.default_rng(0)
        for kind in KINDS:
            for t, c in zip(rng.uniform(0, 1, 50), rng.uniform(0, 10, 50)):
                assert mean_eval(InterpolationPath(kind, t), c, c) == pytest.approx(c, rel=1e-14)

    def test_geometric_example(self):
        assert mean_eval(InterpolationPath("geom", 0.5), 4.0, 9.0) == pytest.approx(6.0, rel=1e-15)

    def test_endpoints(self):
        rng = np.random.default_rng(1)
        a, b = rng.uniform(0, 5, (2, 100))
        for kind in KINDS:
            assert np.allclose(mean_eval(InterpolationPath(kind, 0.0), a, b), b, rtol=1e-15)
            assert np.allclose(mean_eval(InterpolationPath(kind, 1.0), a, b), a, rtol=1e-15)

    def test_betweenness_and_homogeneity(self):
        rng = np.random.default_rng(2)
        a, b, t, s = rng.uniform(0, 5, 200), rng.uniform(0, 5, 200), rng.uniform(0, 1, 200), rng.uniform(0.1, 10, 200)
        for kind in KINDS:
            for ai, bi, ti, si in zip(a, b, t, s):
                path = InterpolationPath(kind, ti)
                v = path(ai, bi)
                assert min(ai, bi) * (1 - 1e-12) <= v <= max(ai, bi) * (1 + 1e-12)
                assert path(si * ai, si * bi) == pytest.approx(si * v, rel=1e-12, abs=1e-300)

    def test_am_gm_hm_ordering(self):
        rng = np.random.default_rng(3)
        a, b, t = rng.uniform(0, 10, 1000), rng.uniform(0, 10, 1000), rng.uniform(0, 1, 1000)
        for ai, bi, ti in zip(a, b, t):
            am = mean_eval(InterpolationPath("arith", ti), ai, bi)
            gm = mean_eval(InterpolationPath("geom", ti), ai, bi)
            hm = mean_eval(InterpolationPath("harm", ti), ai, bi)
            assert hm <= gm * (1 + 1e-12) and gm <= am * (1 + 1e-12)

    def test_zero_conventions(self):
        assert mean_eval(InterpolationPath("geom", 0.3), 0.0, 2.0) == 0.0
        assert mean_eval(InterpolationPath("geom", 0.0), 0.0, 2.0) == 2.0
        assert mean_eval(InterpolationPath("harm", 0.3), 0.0, 2.0) == 0.0
        assert mean_eval(InterpolationPath("harm", 1.0), 3.0, 0.0) == 3.0

    def test_interpolation_axiom_ii(self):
        rng = np.random.default_rng(4)
        for kind in (MeanKind.ARITHMETIC, MeanKind.GEOMETRIC):
            half = InterpolationPath(kind, 0.5)
            for a, b, t, s in rng.uniform(0, 1, (200, 4)):
                a, b = 5 * a, 5 * b
                lhs = half(InterpolationPath(kind, t)(a, b), InterpolationPath(kind, s)(a, b))
                rhs = InterpolationPath(kind, (t + s) / 2)(a, b)
                assert abs(lhs - rhs) <= 1e-12 * max(1.0, rhs)

    def test_errors(self):
        with pytest.raises(DomainError):
            mean_eval(InterpolationPath("arith", 0.5), -1.0, 1.0)
        with pytest.raises(DomainError):
            InterpolationPath("arith", 1.5)
        with pytest.raises(InputError):
            MeanKind.parse("median")


class TestPairing:
    def test_finite_entry(self):
        rng = np.random.default_rng(5)
        m = rand_complex(rng, 4)
        op = finite_op(m)
        for i in range(4):
            for j in range(4):
                assert pairing(op, j, i) == m[i, j]
                assert adjoint_pairing(op, j, i) == np.conj(m[j, i])

    def test_identity(self):
        op = hardy_identity(0.7)
        for w in (0.0, 0.3 + 0.4j, -0.9j):
            assert berezin_transform(op, w) == pytest.approx(1.0, abs=1e-14)
        assert berezin_transform(finite_op(np.eye(3)), 2) == 1

    def test_finite_transform_is_diagonal(self):
        rng = np.random.default_rng(6)
        m = rand_complex(rng, 5)
        assert all(berezin_transform(finite_op(m), i) == m[i, i] for i in range(5))

    def test_dilation_matches_truncated_matrix(self):
        rng = np.random.default_rng(7)
        beta = 0.8
        for eta in (0.5, -0.75, 0.6j):
            closed = hardy_dilation(eta, beta)
            truncated = MatrixOperator(WeightedHardy(beta), np.diag(eta ** np.arange(400)))
            for _ in range(20):
                lam, mu = 0.9 * np.sqrt(rng.uniform(0, 1, 2)) * np.exp(2j * np.pi * rng.uniform(0, 1, 2))
                assert abs(pairing(closed, lam, mu) - pairing(truncated, lam, mu)) <= 1e-9

    def test_dilation_transform_formula(self):
        beta, eta = 0.5, 0.6j
        op = hardy_dilation(eta, beta)
        for w in (0.2, 0.5j, -0.7 + 0.1j):
            r2 = abs(w) ** 2
            assert berezin_transform(op, w) == pytest.approx((1 - r2 * beta) / (1 - r2 * eta * beta), abs=1e-14)

    def test_adjoint_definition(self):
        rng = np.random.default_rng(8)
        op = hardy_dilation(0.3 + 0.4j, 0.6)
        for lam, mu in 0.8 * np.exp(2j * np.pi * rng.uniform(0, 1, (20, 2))):
            assert abs(op.adjoint_pairing(lam, mu) - np.conj(op.pairing_fn(mu, lam))) <= 1e-12

    def test_matrix_size_checked(self):
        with pytest.raises(DomainError):
            MatrixOperator(FiniteSpace(3), np.eye(2))
        with pytest.raises(DomainError):
            MatrixOperator(Fock(1.0), np.eye(2))


class TestRadiusNorm:
    def test_remark_matrix(self):
        assert berezin_radius(finite_op(REMARK_A)) == 0.0
        pa = matrix_power(REMARK_A.conj().T @ REMARK_A, 2.0)
        pb = matrix_power(REMARK_A @ REMARK_A.conj().T, 2.0)
        assert berezin_radius(finite_op(pa + pb)) == pytest.approx(185.0, abs=1e-10)

    def test_identity(self):
        assert berezin_radius(finite_op(np.eye(4))) == 1.0
        assert berezin_radius(hardy_identity(0.5)) == pytest.approx(1.0, abs=1e-12)
        assert berezin_norm(hardy_identity(0.5)) == pytest.approx(1.0, abs=1e-12)

    def test_entrywise_oracle(self):
        rng = np.random.default_rng(9)
        for n in range(2, 7):
            m = rand_complex(rng, n)
            op = finite_op(m)
            assert berezin_radius(op) == np.max(np.abs(np.diag(m)))
            assert berezin_norm(op) == np.max(np.abs(m))
            assert c_tilde(op) == np.min(np.abs(m))

    def test_psd_radius_equals_norm(self):
        rng = np.random.default_rng(10)
        for _ in range(50):
            x = rand_complex(rng, 4)
            op = finite_op(x.conj().T @ x)
            assert abs(berezin_radius(op) - berezin_norm(op)) <= 1e-12

    def test_zero(self):
        op = finite_op(np.zeros((3, 3)))
        assert berezin_norm(op) == 0.0 and c_tilde(op) == 0.0 and t_berezin_norm(op, 0.3) == 0.0

    def test_monotone_refinement(self):
        op = hardy_dilation(0.6j, 0.5)
        grid = DiscGrid(n_r=40, n_theta=16, rounds=3)
        for fn, sign in ((berezin_radius, 1), (berezin_norm, 1), (c_tilde, -1)):
            hist = np.array(fn(op, grid, details=True).history)
            assert len(hist) == grid.rounds + 1
            assert np.all(sign * np.diff(hist) >= 0)

    def test_fock_identity(self):
        alpha = 1.5

        def fn(lam, mu):
            inner = np.sum(mu * np.conj(lam), axis=-1)
            half = 0.5 * alpha * (np.sum(np.abs(lam) ** 2, axis=-1) + np.sum(np.abs(mu) ** 2, axis=-1))
            return np.exp(alpha * inner - half)

        op = ClosedFormOperator(Fock(alpha, 1), fn)
        assert berezin_radius(op, RadialGrid(n_s=50, s_max=5)) == pytest.approx(1.0, abs=1e-12)

    def test_sampler_mismatch(self):
        with pytest.raises(InputError):
            berezin_radius(hardy_identity(0.5), RadialGrid())


class TestSigmaNorm:
    def test_t_one_gives_berezin_norm(self):
        rng = np.random.default_rng(11)
        for kind in KINDS:
            for p in (1.0, 2.0, 3.0):
                op = finite_op(rand_complex(rng, 4))
                v = sigma_t_norm(op, InterpolationPath(kind, 1.0), p)
                assert abs(v - berezin_norm(op)) <= 1e-12

    def test_hermitian_gives_berezin_norm(self):
        rng = np.random.default_rng(12)
        for kind in KINDS:
            x = rand_complex(rng, 5)
            op = finite_op(x + x.conj().T)
            for t, p in zip(rng.uniform(0, 1, 5), (1, 1.5, 2, 2.5, 3)):
                assert abs(sigma_t_norm(op, InterpolationPath(kind, t), p) - berezin_norm(op)) <= 1e-12

    def test_sandwich(self):
        rng = np.random.default_rng(13)
        for _ in range(1000):
            n = int(rng.integers(2, 7))
            op = finite_op(rand_complex(rng, n))
            kind = KINDS[int(rng.integers(3))]
            p = float(rng.choice([1.0, 2.0, 3.0]))
            v = sigma_t_norm(op, InterpolationPath(kind, rng.uniform()), p)
            assert berezin_radius(op) - v >= -1e-10 or v - berezin_radius(op) >= -1e-10
            assert v - berezin_radius(op) >= -1e-10
            assert berezin_norm(op) - v >= -1e-10

    def test_seminorm_axioms(self):
        rng = np.random.default_rng(14)
        for kind in KINDS:
            for _ in range(30):
                n = int(rng.integers(2, 7))
                m = rand_complex(rng, n)
                t, p = rng.uniform(), rng.uniform(1, 3)
                c = complex(*rng.normal(size=2))
                path = InterpolationPath(kind, t)
                v = sigma_t_norm(finite_op(m), path, p)
                assert abs(sigma_t_norm(finite_op(m.conj().T), path, p) - v) <= 1e-12
                assert abs(sigma_t_norm(finite_op(c * m), path, p) - abs(c) * v) <= 1e-10
                assert abs(sigma_t_norm(finite_op(m), path.with_t(1 - t), p) - v) <= 1e-12
                assert v > 0
            assert sigma_t_norm(finite_op(np.zeros((3, 3))), InterpolationPath(kind, 0.4), 2.0) == 0.0

    def test_geometric_not_definite(self):
        # a strictly upper-triangular unit has no symmetric partner entry
        op = finite_op([[0, 1], [0, 0]])
        assert sigma_t_norm(op, InterpolationPath("geom", 0.5), 1.0) == 0.0
        assert sigma_t_norm(op, InterpolationPath("arith", 0.5), 1.0) == 0.5

    def test_p_below_one(self):
        with pytest.raises(DomainError):
            sigma_t_norm(finite_op(np.eye(2)), InterpolationPath("arith", 0.5), 0.5)

    def test_hardy_sandwich(self):
        op = hardy_dilation(0.6j, 0.5)
        grid = DiscGrid(n_r=60, n_theta=24, rounds=2)
        v = sigma_t_norm(op, InterpolationPath("geom", 0.3), 2.0, grid)
        assert berezin_radius(op, grid) - v <= 1e-6
        assert v <= 1.0 + 1e-12


class TestTBerezinNorm:
    def test_half_entrywise(self):
        rng = np.random.default_rng(15)
        for n in range(2, 7):
            m = rand_complex(rng, n)
            a = np.abs(m)
            assert abs(t_berezin_norm(finite_op(m), 0.5) - np.max((a + a.T) / 2)) <= 1e-12

    def test_t_zero(self):
        rng = np.random.default_rng(16)
        op = finite_op(rand_complex(rng, 4))
        assert abs(t_berezin_norm(op, 0.0) - berezin_norm(op)) <= 1e-12


class TestMinTBerMix:
    def test_remark_value(self):
        t, v = min_t_ber_mix(REMARK_A, 4.0)
        assert v == pytest.approx(481 / 6, abs=1e-10)
        assert 0.0 <= t <= 1.0

    def test_hermitian_independent_of_t(self):
        rng = np.random.default_rng(17)
        x = rand_complex(rng, 4)
        h = x + x.conj().T
        _, v = min_t_ber_mix(h, 2.0)
        assert v == pytest.approx(berezin_radius(finite_op(h @ h)), rel=1e-10)

    def test_dense_scan(self):
        rng = np.random.default_rng(18)
        ts = np.linspace(0, 1, 10001)
        for _ in range(20):
            m = rand_complex(rng, 3)
            pa = np.diag(matrix_power(m.conj().T @ m, 1.0)).real
            pb = np.diag(matrix_power(m @ m.conj().T, 1.0)).real
            scan = np.min(np.max(ts[:, None] * pa + (1 - ts[:, None]) * pb, axis=1))
            t, v = min_t_ber_mix(m, 2.0)
            assert v <= scan + 1e-12
            # the envelope is Lipschitz with constant max|pa - pb|, so the scan is within half a step of it
            assert scan - v <= np.max(np.abs(pa - pb)) * 0.5e-4 + 1e-12
            assert v == pytest.approx(np.max(t * pa + (1 - t) * pb), abs=1e-12)

    def test_accepts_operator(self):
        assert min_t_ber_mix(finite_op(REMARK_A), 4.0)[1] == pytest.approx(481 / 6, abs=1e-10)


class TestSamplerParsing:
    def test_descriptors(self):
        assert isinstance(parse_sampler("exact"), ExactSampler)
        assert parse_sampler("grid:100x32:0.01:2") == DiscGrid(100, 32, 0.01, 2)
        assert parse_sampler("grid:500:20") == RadialGrid(500, 20.0)
        assert parse_sampler(DiscGrid().describe()) == DiscGrid()

    @pytest.mark.parametrize("text", ["grid", "grid:10xq", "grid:1x1:0.5", "grid:10x4:0.1:1:9", "mesh:3"])
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_sampler(text)
