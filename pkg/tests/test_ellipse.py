import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pythagorean import DegenerateCloud, DomainError, InvalidArgument, MeanKind, WeightedSample, mean
from pythagorean.ellipse import PointCloud2D, eig2x2_sym, fit_ellipse
from pythagorean.io import parse_points_csv

AM, GM, HM = MeanKind.ARITHMETIC, MeanKind.GEOMETRIC, MeanKind.HARMONIC


@pytest.fixture(scope="module")
def cloud(fixtures):
    return parse_points_csv(fixtures / "cloud.csv")


def rotation(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


class TestEig:
    def test_diagonal(self):
        vals, vecs = eig2x2_sym(4, 0, 1)
        assert vals == (4, 1)
        assert vecs == ((1, 0), (0, 1))

    def test_diagonal_swapped(self):
        vals, vecs = eig2x2_sym(1, 0, 4)
        assert vals == (4, 1)
        assert vecs == ((0, 1), (1, 0))

    def test_coupled(self):
        vals, vecs = eig2x2_sym(2, 1, 2)
        assert vals == pytest.approx((3, 1))
        r = 1 / math.sqrt(2)
        assert vecs[0] == pytest.approx((r, r))
        assert vecs[1] == pytest.approx((r, -r))

    def test_isotropic(self):
        vals, vecs = eig2x2_sym(2.5, 0, 2.5)
        assert vals == (2.5, 2.5)
        assert vecs == ((1, 0), (0, 1))

    @given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
    def test_eigen_equation(self, a, b, c):
        m = np.array([[a, b], [b, c]])
        (l1, l2), (v1, v2) = eig2x2_sym(a, b, c)
        assert l1 >= l2
        scale = max(1.0, abs(a), abs(b), abs(c))
        for lam, v in ((l1, v1), (l2, v2)):
            v = np.array(v)
            assert np.linalg.norm(m @ v - lam * v) <= 1e-10 * scale
            assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)
            assert next(x for x in v if x != 0) > 0
        assert abs(np.dot(v1, v2)) <= 1e-12
        assert (l1, l2) == pytest.approx(tuple(sorted(np.linalg.eigvalsh(m), reverse=True)), abs=1e-9 * scale)


class TestCloud:
    def test_too_few(self):
        with pytest.raises(DegenerateCloud):
            PointCloud2D([(0, 0), (1, 1)])

    def test_collinear(self):
        with pytest.raises(DegenerateCloud):
            PointCloud2D([(0, 0), (1, 1), (2, 2), (5, 5)])


class TestFit:
    def test_axis_aligned(self):
        p = PointCloud2D([(1, 1), (3, 1), (1, 2), (3, 2)])
        f = fit_ellipse(p, AM)
        assert f.center_original == pytest.approx((2, 1.5))
        assert f.directions == ((1, 0), (0, 1))
        # sample covariance with 1/(m-1): diag(4/3, 1/3)
        assert f.spreads == pytest.approx((4 / 3, 1 / 3))

    def test_symmetric_isotropic(self):
        c = 5.0
        pts = [(c + dx, c + dy) for dx, dy in [(1, 0), (-1, 0), (0, 1), (0, -1)]]
        f = fit_ellipse(PointCloud2D(pts), AM)
        assert f.center_original == pytest.approx((c, c))
        assert f.spreads[0] == pytest.approx(f.spreads[1])

    @pytest.mark.parametrize("k", list(MeanKind))
    def test_structure(self, cloud, k):
        f = fit_ellipse(cloud, k, boundary_points=64)
        v = np.array(f.directions)
        assert v @ v.T == pytest.approx(np.eye(2), abs=1e-10)
        assert f.spreads[0] >= f.spreads[1] > 0
        assert len(f.boundary) == 64
        assert f.boundary[0] == f.boundary[-1]

    @pytest.mark.parametrize("k", list(MeanKind))
    def test_center_is_coordinatewise_mean(self, cloud, k):
        f = fit_ellipse(cloud, k)
        xs, ys = zip(*cloud.points)
        assert f.center_original == pytest.approx((mean(WeightedSample(xs), k), mean(WeightedSample(ys), k)), rel=1e-12)

    def test_center_ordering(self, cloud):
        c = {k: fit_ellipse(cloud, k).center_original for k in MeanKind}
        for i in (0, 1):
            assert c[HM][i] < c[GM][i] < c[AM][i]

    def test_directions_agree(self, cloud):
        v = {k: np.array(fit_ellipse(cloud, k).directions[0]) for k in MeanKind}
        assert abs(v[AM] @ v[GM]) > 0.95
        assert abs(v[AM] @ v[HM]) > 0.95

    def test_identity_matches_pca(self, cloud):
        pts = cloud.as_array()
        cov = np.cov(pts.T)
        w, vecs = np.linalg.eigh(cov)
        f = fit_ellipse(cloud, AM)
        assert f.center_original == pytest.approx(tuple(pts.mean(axis=0)), abs=1e-9)
        assert f.spreads == pytest.approx(tuple(w[::-1]), abs=1e-9)
        for mine, ref in zip(f.directions, vecs.T[::-1]):
            assert abs(np.dot(mine, ref)) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("k", list(MeanKind))
    def test_boundary_transport(self, cloud, k):
        f = fit_ellipse(cloud, k, scale=1.5)
        t = k.transform
        y = t.forward(cloud.as_array())
        prec = np.linalg.inv(np.cov(y.T))
        c = np.array(f.center_transformed)
        for b in f.boundary:
            d = t.forward(np.array(b)) - c
            assert math.sqrt(d @ prec @ d) == pytest.approx(1.5, abs=1e-9)

    @given(st.floats(0, 2 * math.pi))
    def test_rotation_equivariance(self, theta):
        base = np.array([[0, 0], [4, 0], [0, 1], [4, 1], [2, 0.2], [1, 0.9]], dtype=float)
        f0 = fit_ellipse(PointCloud2D(base), AM)
        r = rotation(theta)
        f1 = fit_ellipse(PointCloud2D(base @ r.T), AM)
        for v0, v1 in zip(f0.directions, f1.directions):
            assert abs(np.dot(r @ np.array(v0), v1)) == pytest.approx(1.0, abs=1e-9)
        assert f1.spreads == pytest.approx(f0.spreads, rel=1e-9)

    def test_domain(self):
        p = PointCloud2D([(1, 1), (-1, 2), (3, 0.5)])
        fit_ellipse(p, AM)
        with pytest.raises(DomainError):
            fit_ellipse(p, GM)

    def test_reciprocal_boundary_out_of_range(self):
        p = PointCloud2D([(0.1, 1), (10, 1.2), (5, 3), (0.5, 2)])
        with pytest.raises(DomainError):
            fit_ellipse(p, HM, scale=50)

    def test_bad_args(self, cloud):
        with pytest.raises(InvalidArgument):
            fit_ellipse(cloud, AM, scale=0)
        with pytest.raises(InvalidArgument):
            fit_ellipse(cloud, AM, boundary_points=10)
