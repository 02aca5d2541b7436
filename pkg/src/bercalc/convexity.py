"""Berezin ranges of closed-form operators and numerical convexity tests.

The transforms below are exact formulas for composition operators on the
weighted Hardy space ``H^2(beta)`` (kernel ``1 / (1 - beta conj(w) z)``),
finite rank operators built from polynomials, and composition operators on
the Fock space.  Sampled ranges are checked for convexity by measuring how
far pair midpoints fall from the sampled set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial import cKDTree

from .berezin import DiscGrid, RadialGrid
from .errors import DomainError, InputError, SingularityError
from .spaces import WeightedHardy

__all__ = [
    "SampledRange",
    "ConvexityReport",
    "RangeInterval",
    "ConvexityResult",
    "RadialSupremum",
    "convex_hull",
    "convexity_diagnostic",
    "hardy_dilation_transform",
    "dilation_range",
    "dilation_convexity",
    "blaschke_transform",
    "blaschke_range",
    "rank_one_diag_transform",
    "rank_one_diag_range",
    "rank_one_offdiag_transform",
    "rank_one_offdiag_disc",
    "finite_rank_transform",
    "finite_rank_range",
    "fock_scalar_transform",
    "fock_scalar_range",
    "fock_scalar_convexity",
    "fock_diag_transform",
    "fock_diag_range",
    "fock_diag_convexity",
    "fock_example_distance",
    "write_points_csv",
    "points_to_csv",
]

REL_TOL = 1e-3
MAX_PAIR_POINTS = 2000
REAL_TOL = 1e-14
COLLINEAR_TOL = 1e-12
SINGULAR_TOL = 1e-14
OPEN_END_EPS = 1e-6
NEIGHBOURS = 3
_BATCH = 65536


# ----------------------------------------------------------------------
# sampled ranges and the convexity diagnostic


@dataclass
class SampledRange:
    """Values of a transform on a parameter grid.

    Parameters
    ----------
    points : ndarray of complex
        Values in grid order (row-major over ``shape``).
    param_grid : str
        Human readable description of the parameter domain.
    shape : tuple of int, optional
        ``(n,)`` for a curve, ``(n_r, n_theta)`` for a surface patch.  The
        grid connectivity is used to interpolate between samples.  ``None``
        treats the points as an unstructured cloud.
    periodic : bool
        Whether the last grid axis wraps around.
    """

    points: np.ndarray
    param_grid: str
    shape: tuple | None = None
    periodic: bool = False

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.complex128).ravel()
        if not np.all(np.isfinite(self.points)):
            raise InputError("sampled range contains non-finite values")
        if self.shape is not None:
            self.shape = tuple(int(v) for v in self.shape)
            if int(np.prod(self.shape)) != self.points.size or len(self.shape) not in (1, 2):
                raise InputError(f"shape {self.shape} does not match {self.points.size} points")

    def __len__(self) -> int:
        return self.points.size

    def elements(self) -> np.ndarray:
        """Triangles ``(m, 3)`` of vertex indices; segments repeat a vertex."""
        if self.shape is None:
            return np.zeros((0, 3), dtype=np.int64)
        if len(self.shape) == 1:
            n = self.shape[0]
            a = np.arange(n - 1)
            b = a + 1
            if self.periodic and n > 2:
                a = np.append(a, n - 1)
                b = np.append(b, 0)
            return np.column_stack([a, b, b])
        n_r, n_t = self.shape
        idx = np.arange(n_r * n_t).reshape(n_r, n_t)
        nxt = np.roll(idx, -1, axis=1) if self.periodic else idx[:, 1:]
        cur = idx if self.periodic else idx[:, :-1]
        p00, p01 = cur[:-1].ravel(), nxt[:-1].ravel()
        p10, p11 = cur[1:].ravel(), nxt[1:].ravel()
        return np.concatenate([np.column_stack([p00, p10, p01]), np.column_stack([p10, p11, p01])])

    def to_csv(self) -> str:
        return points_to_csv(self.points)


def points_to_csv(points) -> str:
    """``re,im`` header then one point per line with 17 significant digits."""
    pts = np.asarray(points, dtype=np.complex128).ravel()
    lines = ["re,im"]
    lines.extend(f"{z.real:.17g},{z.imag:.17g}" for z in pts)
    return "\n".join(lines) + "\n"


def write_points_csv(path, points) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(points_to_csv(points))


@dataclass
class ConvexityReport:
    """Outcome of :func:`convexity_diagnostic`.

    ``hull_deviation`` is exact whenever it exceeds ``resolution``; below
    that level the search stops early and the true value is at most
    ``resolution``.
    """

    hull_deviation: float
    diameter: float
    rel_tol: float
    witness_midpoint: complex
    pairs: int
    resolution: float = 0.0

    @property
    def verdict(self) -> bool:
        return self.hull_deviation <= self.rel_tol * self.diameter

    @property
    def ratio(self) -> float:
        return self.hull_deviation / self.diameter if self.diameter > 0 else 0.0

    def to_dict(self) -> dict:
        return {
            "hullDeviation": self.hull_deviation,
            "diameter": self.diameter,
            "relTol": self.rel_tol,
            "verdict": "convex" if self.verdict else "not convex",
            "witnessMidpoint": [self.witness_midpoint.real, self.witness_midpoint.imag],
            "pairs": self.pairs,
        }


def _cross(u, v):
    return u.real * v.imag - u.imag * v.real


def convex_hull(points) -> np.ndarray:
    """Convex hull by the monotone chain method.

    Points are sorted lexicographically on ``(re, im)``; collinear boundary
    points are dropped.  Returns the hull vertices in counterclockwise order
    starting from the lexicographically smallest point.
    """
    pts = np.asarray(points, dtype=np.complex128).ravel()
    if pts.size < 3:
        raise InputError(f"convex hull needs at least 3 points, got {pts.size}")
    if not np.all(np.isfinite(pts)):
        raise InputError("points must be finite")
    order = np.lexsort((pts.imag, pts.real))
    xy = np.column_stack([pts.real[order], pts.imag[order]])
    keep = np.ones(len(xy), dtype=bool)
    keep[1:] = np.any(xy[1:] != xy[:-1], axis=1)
    xy = xy[keep].tolist()
    if len(xy) == 1:
        return np.array([complex(*xy[0])])

    def chain(seq):
        out = []
        for x, y in seq:
            while len(out) >= 2:
                (x1, y1), (x2, y2) = out[-2], out[-1]
                if (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1) <= 0.0:
                    out.pop()
                else:
                    break
            out.append((x, y))
        return out

    lower = chain(xy)
    upper = chain(reversed(xy))
    hull = lower[:-1] + upper[:-1]
    return np.array([complex(x, y) for x, y in hull])


def _diameter(pts: np.ndarray) -> float:
    cand = convex_hull(pts) if pts.size >= 3 else pts
    if cand.size > 4000:
        cand = cand[:: int(math.ceil(cand.size / 4000))]
    best = 0.0
    for i in range(0, cand.size, 512):
        d = np.abs(cand[i : i + 512, None] - cand[None, :])
        best = max(best, float(d.max()))
    return best


def _is_collinear(pts: np.ndarray, diameter: float) -> bool:
    if diameter == 0.0:
        return True
    xy = np.column_stack([pts.real - pts.real.mean(), pts.imag - pts.imag.mean()])
    _, _, vt = np.linalg.svd(xy, full_matrices=False)
    normal = vt[-1]
    return float(np.max(np.abs(xy @ normal))) <= COLLINEAR_TOL * max(1.0, diameter)


def _segment_distance(q, a, b):
    d = b - a
    dd = d.real**2 + d.imag**2
    safe = np.where(dd > 0.0, dd, 1.0)
    t = np.clip(((q - a) * d.conj()).real / safe, 0.0, 1.0)
    t = np.where(dd > 0.0, t, 0.0)
    return np.abs(q - (a + t * d))


def _triangle_distance(q, a, b, c):
    area = _cross(b - a, c - a)
    c1, c2, c3 = _cross(b - a, q - a), _cross(c - b, q - b), _cross(a - c, q - c)
    inside = (area != 0.0) & (
        ((c1 >= 0) & (c2 >= 0) & (c3 >= 0)) | ((c1 <= 0) & (c2 <= 0) & (c3 <= 0))
    )
    out = np.zeros(q.shape)
    o = ~inside
    if np.any(o):
        q, a, b, c = q[o], a[o], b[o], c[o]
        out[o] = np.minimum(np.minimum(_segment_distance(q, a, b), _segment_distance(q, b, c)), _segment_distance(q, c, a))
    return out


class _Interpolant:
    """Distance to the piecewise-linear surface spanned by a sampled range.

    Vertices closer than ``1e-12 * diameter`` are merged first, which
    collapses grids whose values do not depend on every parameter.
    """

    def __init__(self, rng: SampledRange, diameter: float):
        quantum = COLLINEAR_TOL * max(diameter, np.finfo(float).tiny)
        keys = np.round(rng.points.real / quantum) + 1j * np.round(rng.points.imag / quantum)
        _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
        self.pts = rng.points[first]
        self.tree = cKDTree(np.column_stack([self.pts.real, self.pts.imag]))
        elements = np.sort(inverse.ravel()[rng.elements()], axis=1)
        if len(elements):
            elements = np.unique(elements, axis=0)
            elements = elements[elements[:, 0] != elements[:, 2]]
        self.elements = elements
        if len(elements):
            vert = elements.ravel()
            elem = np.repeat(np.arange(len(elements)), 3)
            order = np.argsort(vert, kind="stable")
            self.incident = elem[order]
            self.indptr = np.searchsorted(vert[order], np.arange(self.pts.size + 1))

    def nearest(self, q: np.ndarray, k: int = 1):
        k = min(k, self.pts.size)
        d, idx = self.tree.query(np.column_stack([q.real, q.imag]), k=k)
        return d.reshape(q.size, k), idx.reshape(q.size, k)

    def _element_distance(self, q, elems):
        tri = self.elements[elems]
        return _triangle_distance(q, self.pts[tri[:, 0]], self.pts[tri[:, 1]], self.pts[tri[:, 2]])

    def distance(self, q: np.ndarray, d: np.ndarray, idx: np.ndarray) -> np.ndarray:
        """Upper bound on the distance from each ``q`` to the surface.

        ``d, idx`` come from :meth:`nearest`.  Only elements touching those
        vertices are inspected, so a zero is exact while positive values may
        overestimate; :meth:`exact_distance` settles those.
        """
        best = d[:, 0].copy()
        if not len(self.elements):
            return best
        verts = idx.ravel()
        counts = self.indptr[verts + 1] - self.indptr[verts]
        total = int(counts.sum())
        if total == 0:
            return best
        per_query = counts.reshape(idx.shape).sum(axis=1)
        qi = np.repeat(np.arange(q.size), per_query)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        elems = self.incident[np.repeat(self.indptr[verts], counts) + offsets]
        dist = self._element_distance(q[qi], elems)
        has = per_query > 0
        starts = (np.cumsum(per_query) - per_query)[has]
        best[has] = np.minimum(best[has], np.minimum.reduceat(dist, starts))
        return best

    def exact_distance(self, q: np.ndarray, bound: np.ndarray) -> np.ndarray:
        """Distances from ``q``, scanning every element that can be closer than ``bound``."""
        if not len(self.elements):
            return bound
        if not hasattr(self, "_centroids"):
            tri = self.pts[self.elements]
            cen = tri.mean(axis=1)
            self._reach = float(np.max(np.abs(tri - cen[:, None])))
            self._centroids = cKDTree(np.column_stack([cen.real, cen.imag]))
        near = self._centroids.query_ball_point(np.column_stack([q.real, q.imag]), self._reach + bound)
        sizes = np.array([len(v) for v in near])
        out = bound.copy()
        if sizes.sum() == 0:
            return out
        elems = np.concatenate([np.asarray(v, dtype=np.int64) for v in near])
        qi = np.repeat(np.arange(q.size), sizes)
        dist = self._element_distance(q[qi], elems)
        has = sizes > 0
        starts = (np.cumsum(sizes) - sizes)[has]
        out[has] = np.minimum(out[has], np.minimum.reduceat(dist, starts))
        return out


def _pair_midpoints(pts: np.ndarray) -> np.ndarray:
    if pts.size > MAX_PAIR_POINTS:
        pts = pts[:: int(math.ceil(pts.size / MAX_PAIR_POINTS))]
    i, j = np.triu_indices(pts.size, 1)
    return 0.5 * (pts[i] + pts[j])


def convexity_diagnostic(rng: SampledRange, rel_tol: float = REL_TOL) -> ConvexityReport:
    """Estimate how far a sampled range is from being convex.

    Every pair of (sub)sampled points contributes its midpoint; the
    deviation is the largest distance from such a midpoint to the range.
    Gaps between neighbouring samples are bridged by the piecewise-linear
    interpolant of the parameter grid, so a curve is measured against its
    polyline and a surface patch against its triangulation.  Collinear
    ranges are images of connected parameter sets and count as intervals.

    Parameters
    ----------
    rng : SampledRange
        At least two points.
    rel_tol : float
        The verdict is convex when ``hull_deviation <= rel_tol * diameter``.
    """
    if not isinstance(rng, SampledRange):
        rng = SampledRange(rng, "points")
    pts = rng.points
    if pts.size < 2:
        raise InputError(f"convexity diagnostic needs at least 2 points, got {pts.size}")
    if not rel_tol >= 0.0:
        raise InputError(f"rel_tol must be non-negative, got {rel_tol}")
    diameter = _diameter(pts)
    if _is_collinear(pts, diameter):
        return ConvexityReport(0.0, diameter, rel_tol, complex(0.5 * (pts[0] + pts[-1])), 0)

    interp = _Interpolant(rng, diameter)
    mids = _pair_midpoints(interp.pts)
    d1, i1 = interp.nearest(mids)
    upper = d1[:, 0]
    order = np.argsort(-upper, kind="stable")
    resolution = 1e-3 * rel_tol * diameter
    best, witness = -1.0, complex(mids[order[0]])
    for start in range(0, order.size, _BATCH):
        chunk = order[start : start + _BATCH]
        chunk = chunk[upper[chunk] > max(best, resolution)]
        if chunk.size == 0:
            break
        dist = interp.distance(mids[chunk], d1[chunk], i1[chunk])
        again = dist > max(best, resolution)
        if np.any(again):
            q = mids[chunk[again]]
            dist[again] = np.minimum(dist[again], interp.distance(q, *interp.nearest(q, NEIGHBOURS)))
        cand = np.argsort(-dist, kind="stable")
        for lo in range(0, cand.size, 256):
            group = cand[lo : lo + 256]
            group = group[dist[group] > max(best, resolution)]
            if group.size == 0:
                break
            floor = max(best, resolution)
            exact = interp.exact_distance(mids[chunk[group]], np.full(group.size, floor))
            for k in np.flatnonzero(exact >= floor):
                if dist[group[k]] <= best:
                    continue
                q = mids[chunk[group[k]] : chunk[group[k]] + 1]
                value = float(interp.exact_distance(q, dist[group[k : k + 1]])[0])
                if value > best:
                    best, witness = value, complex(q[0])
    return ConvexityReport(max(best, 0.0), diameter, rel_tol, witness, mids.size, resolution)


@dataclass(frozen=True)
class RangeInterval:
    """Real interval ``[inf, sup]`` with inclusivity flags.

    An excluded endpoint is the limit value; its attained neighbour is
    evaluated at parameter ``1 - 1e-6`` (disc) or at the end of the sampled
    Fock domain.
    """

    inf: float
    sup: float
    inf_included: bool
    sup_included: bool

    def __str__(self) -> str:
        lo = "[" if self.inf_included else "("
        hi = "]" if self.sup_included else ")"
        return f"{lo}{self.inf:.15g}, {self.sup:.15g}{hi}"


@dataclass
class ConvexityResult:
    """Exact characterization next to the numerical estimate."""

    characterization: bool
    report: ConvexityReport | None = None
    interval: RangeInterval | None = None
    sampled: SampledRange | None = field(default=None, repr=False)

    @property
    def agrees(self) -> bool:
        return self.report is None or self.report.verdict == self.characterization


# ----------------------------------------------------------------------
# weighted Hardy space


def _disc_points(w) -> np.ndarray:
    w = np.asarray(w, dtype=np.complex128)
    if not np.all(np.abs(w) < 1.0):
        raise DomainError("points must lie in the open unit disc")
    return w


def _scalar_or_array(out, like):
    return complex(out) if np.ndim(like) == 0 else out


def _grid_points(grid: DiscGrid) -> np.ndarray:
    return grid.to_points(grid.params())


def hardy_dilation_transform(eta, beta: float, w):
    """Berezin transform of ``f -> f(eta z)`` on ``H^2(beta)``.

    Equals ``(1 - beta |w|^2) / (1 - eta beta |w|^2)`` and depends on
    ``|w|`` only.
    """
    eta = complex(eta)
    if abs(eta) > 1.0:
        raise DomainError(f"|eta| = {abs(eta):.6g} exceeds 1")
    WeightedHardy(beta)
    w = _disc_points(w)
    x = w.real**2 + w.imag**2
    out = (1.0 - beta * x) / (1.0 - eta * beta * x)
    return _scalar_or_array(out, w)


def dilation_range(eta, beta: float, grid: DiscGrid | None = None) -> SampledRange:
    grid = grid or DiscGrid()
    vals = hardy_dilation_transform(eta, beta, _grid_points(grid))
    return SampledRange(vals, f"disc {grid.describe()}", (grid.n_r, grid.n_theta), periodic=True)


def _is_real_unit(z: complex) -> bool:
    return abs(z.imag) <= REAL_TOL and -1.0 <= z.real <= 1.0


def dilation_convexity(eta, beta: float, grid: DiscGrid | None = None, rel_tol: float = REL_TOL,
                       sample: bool = True) -> ConvexityResult:
    """Convexity of the Berezin range of ``f -> f(eta z)`` on ``H^2(beta)``.

    The range is convex exactly when ``eta`` is real.  For real ``eta < 1``
    it is the interval ``((1 - beta) / (1 - eta beta), 1]``.
    """
    eta = complex(eta)
    if abs(eta) > 1.0:
        raise DomainError(f"|eta| = {abs(eta):.6g} exceeds 1")
    WeightedHardy(beta)
    exact = _is_real_unit(eta)
    interval = None
    if exact:
        edge = hardy_dilation_transform(eta, beta, 1.0 - OPEN_END_EPS).real
        if eta.real == 1.0:
            interval = RangeInterval(1.0, 1.0, True, True)
        else:
            interval = RangeInterval(edge, 1.0, False, True)
    if not sample:
        return ConvexityResult(exact, None, interval)
    rng = dilation_range(eta, beta, grid)
    return ConvexityResult(exact, convexity_diagnostic(rng, rel_tol), interval, rng)


def blaschke_transform(alpha, beta: float, w):
    """Berezin transform of ``f -> f o phi_alpha`` on ``H^2(beta)``.

    ``phi_alpha(z) = (z - alpha) / (1 - conj(alpha) z)`` is the disc
    automorphism swapping ``alpha`` and ``0``.
    """
    alpha = complex(alpha)
    if not abs(alpha) < 1.0:
        raise DomainError(f"|alpha| = {abs(alpha):.6g} must be below 1")
    WeightedHardy(beta)
    w = _disc_points(w)
    x = w.real**2 + w.imag**2
    ac = alpha.conjugate()
    den = 1.0 - ac * w - x * beta + alpha * w.conj() * beta
    if np.any(np.abs(den) < SINGULAR_TOL):
        raise SingularityError("Blaschke transform denominator vanishes")
    out = (1.0 - x * beta) * (1.0 - ac * w) / den
    return _scalar_or_array(out, w)


def blaschke_range(alpha, beta: float, grid: DiscGrid | None = None) -> SampledRange:
    grid = grid or DiscGrid()
    vals = blaschke_transform(alpha, beta, _grid_points(grid))
    return SampledRange(vals, f"disc {grid.describe()}", (grid.n_r, grid.n_theta), periodic=True)


@dataclass(frozen=True)
class RadialSupremum:
    """Supremum of ``r^k - beta r^(k+2)`` over ``r in [0, 1)``.

    ``closed_form`` is the critical-point value at ``r^2 = k / (beta (k+2))``.
    When that point is not inside the disc (``boundary``) the supremum is the
    unattained limit ``1 - beta`` at ``r -> 1``, stored in ``supremum``.
    """

    closed_form: float
    numeric: float
    maximizer_sq: float
    boundary: bool
    supremum: float

    @property
    def interval(self) -> RangeInterval:
        return RangeInterval(0.0, self.supremum, True, not self.boundary)


def _radial_profile(k: int, beta: float):
    return lambda r: r**k - beta * r ** (k + 2)


def _numeric_radial_max(f, r_hi: float, n: int = 4001) -> float:
    r = np.linspace(0.0, r_hi, n)
    vals = f(r)
    i = int(np.argmax(vals))
    lo, hi = r[max(i - 1, 0)], r[min(i + 1, n - 1)]
    res = minimize_scalar(lambda x: -f(x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-13})
    return float(max(vals[i], -res.fun))


def _radial_supremum(k: int, beta: float) -> RadialSupremum:
    WeightedHardy(beta)
    x = k / (beta * (k + 2))
    closed = (2.0 / (k + 2)) * x ** (k / 2.0)
    boundary = x >= 1.0
    numeric = _numeric_radial_max(_radial_profile(k, beta), 1.0 - OPEN_END_EPS if boundary else 1.0 - 1e-12)
    return RadialSupremum(closed, numeric, x, boundary, 1.0 - beta if boundary else closed)


def rank_one_diag_transform(n: int, beta: float, lam):
    """Transform of ``f -> <f, z^n> z^n``: ``(1 - beta |lam|^2) |lam|^(2n)``."""
    return finite_rank_transform([_monomial(n)], beta, lam)


def rank_one_diag_range(n: int, beta: float) -> RadialSupremum:
    """Right endpoint of the range ``[0, sup]`` of ``f -> <f, z^n> z^n``.

    The closed form ``(n / (beta (n+1)))^n / (n+1)`` holds when the
    maximizer ``r^2 = n / (beta (n+1))`` is below 1; otherwise the result is
    flagged as a boundary case with supremum ``1 - beta``.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    return _radial_supremum(2 * int(n), beta)


def rank_one_offdiag_transform(m: int, n: int, beta: float, lam):
    """Transform of ``f -> <f, z^n> z^m``: ``(1 - beta |lam|^2) conj(lam)^n lam^m``."""
    _check_offdiag(m, n)
    WeightedHardy(beta)
    lam = _disc_points(lam)
    x = lam.real**2 + lam.imag**2
    out = (1.0 - beta * x) * lam.conj() ** n * lam**m
    return _scalar_or_array(out, lam)


def _check_offdiag(m, n):
    if int(m) != m or int(n) != n or n < 0:
        raise DomainError(f"m, n must be non-negative integers, got {m}, {n}")
    if m <= n:
        raise DomainError(f"need m > n, got m = {m}, n = {n}")


def rank_one_offdiag_disc(m: int, n: int, beta: float, grid: DiscGrid | None = None):
    """Radius of the disc ``Ber(f -> <f, z^n> z^m)`` and a sampled range.

    Returns
    -------
    sup : RadialSupremum
        ``closed_form`` is ``(2/(m+n+2)) ((m+n)/(beta (m+n+2)))^((m+n)/2)``.
    rng : SampledRange
        Transform values on a polar grid (default 2000 x 64).
    """
    _check_offdiag(m, n)
    sup = _radial_supremum(int(m + n), beta)
    grid = grid or DiscGrid(n_r=2000, n_theta=64)
    vals = rank_one_offdiag_transform(m, n, beta, _grid_points(grid))
    rng = SampledRange(vals, f"disc {grid.describe()}", (grid.n_r, grid.n_theta), periodic=True)
    return sup, rng


def _monomial(n: int) -> np.ndarray:
    c = np.zeros(int(n) + 1, dtype=np.complex128)
    c[-1] = 1.0
    return c


def finite_rank_transform(g, beta: float, lam):
    """Transform of ``f -> sum_i <f, g_i> g_i``: ``(1 - beta |lam|^2) sum_i |g_i(lam)|^2``.

    Parameters
    ----------
    g : sequence of array_like
        Coefficients of each polynomial ``g_i`` in the monomial basis,
        constant term first.
    """
    WeightedHardy(beta)
    lam = _disc_points(lam)
    x = lam.real**2 + lam.imag**2
    total = np.zeros(lam.shape)
    for coeffs in g:
        c = np.asarray(coeffs, dtype=np.complex128).ravel()
        vals = np.polynomial.polynomial.polyval(lam, c) if c.size else np.zeros(lam.shape)
        total = total + np.abs(vals) ** 2
    out = (1.0 - beta * x) * total
    return float(out) if np.ndim(lam) == 0 else out


def finite_rank_range(g, beta: float, grid: DiscGrid | None = None) -> SampledRange:
    grid = grid or DiscGrid()
    vals = finite_rank_transform(g, beta, _grid_points(grid))
    return SampledRange(vals, f"disc {grid.describe()}", (grid.n_r, grid.n_theta), periodic=True)


# ----------------------------------------------------------------------
# Fock space


def _check_alpha(alpha: float):
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")


def fock_scalar_transform(lam, alpha: float, w):
    """Transform of ``f -> f(lam z)`` on the Fock space: ``exp((lam - 1) alpha |w|^2)``.

    ``w`` is a point of ``C^n`` (last axis) or a batch of such points.
    """
    lam = complex(lam)
    if abs(lam) > 1.0:
        raise DomainError(f"|lambda| = {abs(lam):.6g} exceeds 1")
    _check_alpha(alpha)
    w = np.atleast_1d(np.asarray(w, dtype=np.complex128))
    s = alpha * np.sum(w.real**2 + w.imag**2, axis=-1)
    out = np.exp((lam - 1.0) * s)
    return complex(out) if out.ndim == 0 else out


def _fock_s(grid: RadialGrid | None) -> tuple[np.ndarray, RadialGrid]:
    grid = grid or RadialGrid()
    return np.linspace(0.0, grid.s_max, grid.n_s), grid


def fock_scalar_range(lam, alpha: float, grid: RadialGrid | None = None) -> SampledRange:
    """Range sampled over ``s = alpha |w|^2 in [0, s_max]``."""
    s, grid = _fock_s(grid)
    vals = fock_scalar_transform(lam, alpha, np.sqrt(s / alpha)[:, None])
    return SampledRange(vals, f"reduced {grid.describe()}", (s.size,))


def fock_scalar_convexity(lam, alpha: float, grid: RadialGrid | None = None, rel_tol: float = REL_TOL,
                          sample: bool = True) -> ConvexityResult:
    """Convexity of the range of ``f -> f(lam z)``; convex exactly when ``lam`` is real."""
    lam = complex(lam)
    if abs(lam) > 1.0:
        raise DomainError(f"|lambda| = {abs(lam):.6g} exceeds 1")
    _check_alpha(alpha)
    exact = _is_real_unit(lam)
    interval = None
    if exact:
        if lam.real == 1.0:
            interval = RangeInterval(1.0, 1.0, True, True)
        else:
            s_max = (grid or RadialGrid()).s_max
            interval = RangeInterval(math.exp((lam.real - 1.0) * s_max), 1.0, False, True)
    if not sample:
        return ConvexityResult(exact, None, interval)
    rng = fock_scalar_range(lam, alpha, grid)
    return ConvexityResult(exact, convexity_diagnostic(rng, rel_tol), interval, rng)


def _check_ab(a: float, b: float):
    if a * a + b * b > 1.0 + 1e-12:
        raise DomainError(f"a^2 + b^2 = {a * a + b * b:.6g} exceeds 1")


def fock_diag_transform(a: float, b: float, alpha: float, s):
    """Transform of ``f -> f(A z)`` with ``A = diag(1, .., a + ib, .., 1)``.

    In the reduced variable ``s = |z_k|^2`` it reads
    ``exp(alpha (a - 1) s) exp(i alpha b s)``.
    """
    _check_ab(a, b)
    _check_alpha(alpha)
    s = np.asarray(s, dtype=np.float64)
    if np.any(s < 0.0):
        raise DomainError("s must be non-negative")
    out = np.exp(alpha * (a - 1.0) * s) * np.exp(1j * alpha * b * s)
    return _scalar_or_array(out, s)


def fock_diag_range(a: float, b: float, alpha: float = 1.0, grid: RadialGrid | None = None) -> SampledRange:
    s, grid = _fock_s(grid)
    vals = fock_diag_transform(a, b, alpha, s / alpha)
    return SampledRange(vals, f"reduced {grid.describe()}", (s.size,))


def fock_diag_convexity(a: float, b: float, alpha: float = 1.0, grid: RadialGrid | None = None,
                        rel_tol: float = REL_TOL, sample: bool = True) -> ConvexityResult:
    """Convexity for a diagonal symbol with one entry ``a + ib``; convex exactly when ``b = 0``."""
    _check_ab(a, b)
    _check_alpha(alpha)
    exact = b == 0.0
    interval = None
    if exact:
        if a == 1.0:
            interval = RangeInterval(1.0, 1.0, True, True)
        else:
            s_max = (grid or RadialGrid()).s_max
            interval = RangeInterval(math.exp((a - 1.0) * s_max), 1.0, False, True)
    if not sample:
        return ConvexityResult(exact, None, interval)
    rng = fock_diag_range(a, b, alpha, grid)
    return ConvexityResult(exact, convexity_diagnostic(rng, rel_tol), interval, rng)


def fock_example_distance(t_max: float = 40.0, step: float = 1e-4) -> tuple[float, complex]:
    """Distance from ``(1 - e^-pi) / 2`` to the curve ``e^(-t) e^(it)``, ``t in [0, t_max]``.

    The curve is the range for ``a = 0, b = 1, alpha = 1``; the midpoint of
    its values at ``t = 0`` and ``t = pi`` is the witness.
    """
    t = np.linspace(0.0, t_max, int(round(t_max / step)) + 1)
    curve = fock_diag_transform(0.0, 1.0, 1.0, t)
    mid = 0.5 * (1.0 - math.exp(-math.pi))
    dist = np.abs(curve - mid)
    return float(dist.min()), complex(mid)
