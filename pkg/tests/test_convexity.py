import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bercalc.berezin import DiscGrid, RadialGrid
from bercalc.convexity import (
    ConvexityReport,
    SampledRange,
    blaschke_range,
    blaschke_transform,
    convex_hull,
    convexity_diagnostic,
    dilation_convexity,
    dilation_range,
    finite_rank_range,
    finite_rank_transform,
    fock_diag_convexity,
    fock_diag_transform,
    fock_example_distance,
    fock_scalar_convexity,
    fock_scalar_range,
    fock_scalar_transform,
    hardy_dilation_transform,
    points_to_csv,
    rank_one_diag_range,
    rank_one_diag_transform,
    rank_one_offdiag_disc,
    rank_one_offdiag_transform,
)
from bercalc.errors import DomainError, InputError, SingularityError

SMALL = DiscGrid(n_r=100, n_theta=32)


def disc_points(rng, k, rmax=0.99):
    return rmax * np.sqrt(rng.uniform(0, 1, k)) * np.exp(2j * np.pi * rng.uniform(0, 1, k))


def point_in_polygon(q, poly, margin=1e-12):
    # ccw polygon: q is inside when it is left of (or within margin of) every edge
    a, b = poly, np.roll(poly, -1)
    edge = b - a
    cross = edge.real * (q - a).imag - edge.imag * (q - a).real
    return bool(np.all(cross >= -margin * np.maximum(np.abs(edge), 1.0)))


class TestDilation:
    def test_identity_symbol(self):
        rng = np.random.default_rng(0)
        w = disc_points(rng, 50)
        assert np.allclose(hardy_dilation_transform(1.0, 0.4, w), 1.0, rtol=0, atol=1e-15)

    def test_origin(self):
        for eta in (0.3, -1.0, 0.6j):
            assert hardy_dilation_transform(eta, 0.5, 0.0) == 1.0

    def test_limit_value(self):
        v = hardy_dilation_transform(-0.75, 0.25, 1.0 - 1e-9).real
        assert v == pytest.approx(0.75 / 1.1875, abs=1e-8)
        assert 0.75 / 1.1875 == pytest.approx(0.631578947368421, abs=1e-15)

    def test_radial(self):
        rng = np.random.default_rng(1)
        w = disc_points(rng, 20)
        rot = w * np.exp(2j * np.pi * rng.uniform(0, 1, 20))
        assert np.allclose(hardy_dilation_transform(0.6j, 0.5, w), hardy_dilation_transform(0.6j, 0.5, rot), atol=1e-15)

    def test_eta_outside_disc(self):
        with pytest.raises(DomainError):
            hardy_dilation_transform(1.1, 0.5, 0.2)
        with pytest.raises(DomainError):
            dilation_convexity(1j + 0.1, 0.5)

    def test_real_eta_convex(self):
        res = dilation_convexity(-0.75, 0.25)
        assert res.characterization and res.report.verdict and res.agrees
        assert res.interval.inf == pytest.approx(0.6315789473684211, abs=1e-5)
        assert res.interval.sup == 1.0 and not res.interval.inf_included and res.interval.sup_included
        assert str(res.interval).startswith("(0.63157")

    def test_imaginary_eta_not_convex(self):
        res = dilation_convexity(0.6j, 0.5)
        assert not res.characterization and not res.report.verdict and res.agrees
        assert res.report.hull_deviation > 1e-2 * res.report.diameter

    def test_unit_eta_singleton(self):
        res = dilation_convexity(1.0, 0.5, SMALL)
        assert res.characterization and res.report.verdict
        assert res.interval.inf == res.interval.sup == 1.0

    def test_real_grid(self):
        etas = np.linspace(-1, 1, 50)
        betas = np.linspace(0.02, 1, 50)
        for eta, beta in zip(etas, betas[::-1]):
            res = dilation_convexity(eta, beta, SMALL)
            assert np.all(res.sampled.points.imag == 0.0)
            assert res.characterization and res.report.verdict

    def test_nonreal_not_convex(self):
        rng = np.random.default_rng(2)
        count = 0
        while count < 50:
            eta = complex(*rng.uniform(-1, 1, 2))
            if abs(eta) >= 1 or abs(eta.imag) < 0.1:
                continue
            count += 1
            res = dilation_convexity(eta, rng.uniform(0.5, 1.0), SMALL)
            assert not res.characterization and not res.report.verdict

    def test_characterization_only(self):
        res = dilation_convexity(0.2, 0.5, sample=False)
        assert res.report is None and res.characterization and res.agrees


class TestBlaschke:
    def test_zero_alpha(self):
        rng = np.random.default_rng(3)
        assert np.allclose(blaschke_transform(0.0, 0.7, disc_points(rng, 30)), 1.0, atol=1e-15)

    def test_origin(self):
        assert blaschke_transform(0.4 - 0.2j, 0.5, 0.0) == 1.0

    def test_formula(self):
        rng = np.random.default_rng(4)
        alpha, beta = 0.3 + 0.5j, 0.8
        for w in disc_points(rng, 20):
            phi = (w - alpha) / (1 - np.conj(alpha) * w)
            direct = (1 - abs(w) ** 2 * beta) / (1 - np.conj(w) * phi * beta)
            assert abs(blaschke_transform(alpha, beta, w) - direct) <= 1e-12

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            rho, theta = 0.95 * rng.uniform(), rng.uniform(0, 2 * np.pi)
            r, phi = 0.99 * rng.uniform(), rng.uniform(0, 2 * np.pi)
            beta = rng.uniform(0.05, 1.0)
            alpha = rho * np.exp(1j * theta)
            a = blaschke_transform(alpha, beta, r * np.exp(1j * phi))
            b = blaschke_transform(alpha, beta, r * np.exp(1j * (2 * theta - phi)))
            assert abs(a - np.conj(b)) <= 1e-12

    def test_denominator_bounded_below(self):
        # Re(den) = 1 - beta |w|^2 - (1 - beta) Re(conj(alpha) w) >= 1 - |w|
        rng = np.random.default_rng(12)
        for _ in range(200):
            alpha = 0.999 * disc_points(rng, 1)[0]
            beta = rng.uniform(0.01, 1.0)
            w = disc_points(rng, 1, 0.999)[0]
            den = 1 - np.conj(alpha) * w - abs(w) ** 2 * beta + alpha * np.conj(w) * beta
            assert den.real >= 1 - abs(w) - 1e-15

    def test_singular_guard(self, monkeypatch):
        monkeypatch.setattr("bercalc.convexity.SINGULAR_TOL", 10.0)
        with pytest.raises(SingularityError):
            blaschke_transform(0.5, 1.0, 0.5)

    def test_range_shape(self):
        rng = blaschke_range(0.5, 0.7, SMALL)
        assert len(rng) == 100 * 32 and rng.shape == (100, 32)


class TestRankOne:
    def test_diag_examples(self):
        res = rank_one_diag_range(1, 1.0)
        assert not res.boundary
        assert res.closed_form == pytest.approx(0.25, abs=1e-15)
        assert abs(res.numeric - 0.25) <= 1e-8

    @pytest.mark.parametrize("n, beta", [(1, 1.0), (3, 0.9), (1, 0.6), (4, 0.95)])
    def test_diag_numeric_matches(self, n, beta):
        res = rank_one_diag_range(n, beta)
        assert not res.boundary
        assert abs(res.numeric - res.closed_form) <= 1e-8
        r = np.linspace(0, 1, 200001)[:-1]
        assert np.max(r ** (2 * n) - beta * r ** (2 * n + 2)) <= res.closed_form + 1e-15

    def test_diag_boundary_case(self):
        # maximizer r^2 = n / (beta (n + 1)) = 4/3 lies outside the disc
        res = rank_one_diag_range(2, 0.5)
        assert res.boundary and res.maximizer_sq == pytest.approx(4 / 3)
        assert res.closed_form == pytest.approx(16 / 27)
        assert res.supremum == 0.5
        assert res.numeric < res.supremum and res.supremum - res.numeric <= 1e-5
        assert not res.interval.sup_included

    def test_diag_transform(self):
        assert rank_one_diag_transform(2, 0.5, 0.0) == 0.0
        assert rank_one_diag_transform(2, 0.5, 0.5j) == pytest.approx((1 - 0.5 * 0.25) * 0.25**2)

    def test_offdiag_radius(self):
        sup, rng = rank_one_offdiag_disc(2, 1, 1.0, DiscGrid(n_r=400, n_theta=32))
        expected = 0.4 * 0.6**1.5
        assert sup.closed_form == pytest.approx(expected, abs=1e-15)
        assert abs(sup.numeric - expected) <= 1e-6
        mods = np.abs(rng.points)
        assert np.all(mods <= expected + 1e-9)
        assert 0.0 in rng.points

    def test_offdiag_modulus_radial(self):
        rng = np.random.default_rng(6)
        w = disc_points(rng, 30)
        rot = w * np.exp(2j * np.pi * rng.uniform(0, 1, 30))
        a = np.abs(rank_one_offdiag_transform(3, 1, 0.7, w))
        b = np.abs(rank_one_offdiag_transform(3, 1, 0.7, rot))
        assert np.allclose(a, b, rtol=1e-12, atol=1e-15)

    def test_offdiag_requires_m_above_n(self):
        with pytest.raises(DomainError):
            rank_one_offdiag_disc(1, 1, 0.5)
        with pytest.raises(DomainError):
            rank_one_offdiag_transform(1, 2, 0.5, 0.1)


class TestFiniteRank:
    def test_specializes_to_rank_one(self):
        rng = np.random.default_rng(7)
        w = disc_points(rng, 20)
        mono = np.zeros(4)
        mono[3] = 1.0
        assert np.allclose(finite_rank_transform([mono], 0.6, w), (1 - 0.6 * np.abs(w) ** 2) * np.abs(w) ** 6)

    def test_zero(self):
        assert finite_rank_transform([[0.0, 0.0], []], 0.5, 0.3j) == 0.0

    def test_range_is_interval(self):
        rng = np.random.default_rng(8)
        g = [rng.normal(size=3) + 1j * rng.normal(size=3) for _ in range(2)]
        sampled = finite_rank_range(g, 0.8, SMALL)
        assert np.all(sampled.points.imag == 0.0)
        report = convexity_diagnostic(sampled)
        assert report.hull_deviation <= 1e-12 and report.verdict


class TestFock:
    def test_unit_lambda(self):
        res = fock_scalar_convexity(1.0, 2.0)
        assert np.all(res.sampled.points == 1.0)
        assert res.characterization and res.report.verdict

    @pytest.mark.parametrize("lam", [-1.0, -0.3, 0.0, 0.7])
    def test_real_lambda_range(self, lam):
        pts = fock_scalar_range(lam, 1.0).points
        assert np.all(pts.imag == 0.0) and np.all((pts.real > 0) & (pts.real <= 1))
        assert abs(pts.real.max() - 1.0) <= 1e-6
        assert abs(pts.real.min() - math.exp((lam - 1) * 50)) <= 1e-6
        res = fock_scalar_convexity(lam, 1.0)
        assert res.characterization and res.report.verdict

    def test_imaginary_lambda(self):
        res = fock_scalar_convexity(0.5j, 1.0)
        assert not res.characterization and not res.report.verdict

    def test_scalar_transform_vector(self):
        w = np.array([0.3 + 0.1j, -0.2j])
        s = 2.0 * np.sum(np.abs(w) ** 2)
        assert fock_scalar_transform(0.2 + 0.3j, 2.0, w) == pytest.approx(np.exp((0.2 + 0.3j - 1) * s))

    def test_diag_origin(self):
        rng = np.random.default_rng(9)
        for a, b in rng.uniform(-0.7, 0.7, (20, 2)):
            assert fock_diag_transform(a, b, 1.3, 0.0) == 1.0

    def test_diag_convexity(self):
        assert not fock_diag_convexity(0.0, 1.0).report.verdict
        res = fock_diag_convexity(0.3, 0.0)
        assert res.characterization and res.report.verdict
        assert res.interval.sup == 1.0 and not res.interval.inf_included

    def test_diag_random_real(self):
        rng = np.random.default_rng(10)
        for a in rng.uniform(-1, 1, 20):
            res = fock_diag_convexity(float(a), 0.0, grid=RadialGrid(n_s=500))
            assert res.characterization and res.report.verdict

    def test_diag_bad_symbol(self):
        with pytest.raises(DomainError):
            fock_diag_transform(0.9, 0.9, 1.0, 1.0)
        with pytest.raises(DomainError):
            fock_scalar_transform(0.5, 0.0, 1.0)

    def test_example_distance(self):
        dist, mid = fock_example_distance()
        assert mid == pytest.approx((1 - math.exp(-math.pi)) / 2)
        assert dist > 0.01
        # both curve points whose midpoint is tested are sampled values
        assert fock_diag_transform(0.0, 1.0, 1.0, 0.0) == 1.0
        assert fock_diag_transform(0.0, 1.0, 1.0, math.pi) == pytest.approx(-math.exp(-math.pi), abs=1e-15)


class TestDiagnostic:
    def test_collinear(self):
        report = convexity_diagnostic(SampledRange([0.0, 0.5, 1.0], "three points"))
        assert report.hull_deviation == 0.0 and report.verdict

    def test_arc(self):
        theta = np.linspace(0, np.pi, 100)
        report = convexity_diagnostic(SampledRange(np.exp(1j * theta), "arc", (100,)))
        assert not report.verdict
        assert report.hull_deviation == pytest.approx(1.0, abs=1e-3)
        assert report.diameter == pytest.approx(2.0, abs=1e-12)

    def test_cloud_arc(self):
        theta = np.linspace(0, np.pi, 100)
        report = convexity_diagnostic(SampledRange(np.exp(1j * theta), "arc"))
        assert not report.verdict and report.hull_deviation == pytest.approx(1.0, abs=1e-3)

    def test_filled_square_convex(self):
        x, y = np.meshgrid(np.linspace(0, 1, 40), np.linspace(0, 1, 40), indexing="ij")
        report = convexity_diagnostic(SampledRange((x + 1j * y).ravel(), "square", (40, 40)))
        assert report.verdict and report.hull_deviation <= 1e-12

    def test_imaginary_dilation(self):
        report = convexity_diagnostic(dilation_range(0.6j, 0.5))
        assert not report.verdict and report.ratio > 1e-2

    def test_too_few_points(self):
        with pytest.raises(InputError):
            convexity_diagnostic(SampledRange([1.0], "one"))
        with pytest.raises(InputError):
            convex_hull([0, 1])

    def test_report_dict(self):
        d = ConvexityReport(0.5, 2.0, 1e-3, 0.5j, 10).to_dict()
        assert d["verdict"] == "not convex" and d["witnessMidpoint"] == [0.0, 0.5]

    def test_bad_range(self):
        with pytest.raises(InputError):
            SampledRange([1.0, np.nan], "nan")
        with pytest.raises(InputError):
            SampledRange([1.0, 2.0, 3.0], "shape", (2, 2))


class TestHull:
    def test_square(self):
        pts = [0, 1, 1 + 1j, 1j, 0.5 + 0.5j, 0.5]
        hull = convex_hull(pts)
        assert set(hull.tolist()) == {0, 1, 1 + 1j, 1j}
        # counterclockwise orientation has positive signed area
        area = 0.5 * np.sum(hull.real * np.roll(hull.imag, -1) - np.roll(hull.real, -1) * hull.imag)
        assert area == pytest.approx(1.0)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3)), min_size=3, max_size=60))
    def test_contains_points(self, coords):
        pts = np.array([complex(x, y) for x, y in coords])
        span = np.ptp(pts.real) + np.ptp(pts.imag)
        if span == 0:
            return
        hull = convex_hull(pts)
        margin = 1e-12 * max(1.0, float(np.max(np.abs(pts)))) ** 2
        for q in pts:
            assert point_in_polygon(q, hull, margin)


class TestCsv:
    def test_format(self):
        text = points_to_csv([0.1 + 0.2j, -1.0])
        lines = text.splitlines()
        assert lines[0] == "re,im"
        assert lines[1] == "0.10000000000000001,0.20000000000000001"
        assert lines[2] == "-1,0"
        assert text.endswith("\n")

    def test_roundtrip(self):
        rng = np.random.default_rng(11)
        z = rng.normal(size=10) + 1j * rng.normal(size=10)
        rows = [line.split(",") for line in points_to_csv(z).splitlines()[1:]]
        back = np.array([float(a) + 1j * float(b) for a, b in rows])
        assert np.array_equal(back, z)
