"""Berezin transform, Berezin radius and norm, and the sigma_t seminorms.

Operators are modelled either by a matrix in an orthonormal basis
(:class:`MatrixOperator`) or by a closed-form pairing
``(lam, mu) -> <A k_lam, k_mu>`` between normalised kernels
(:class:`ClosedFormOperator`).  On :class:`~bercalc.spaces.FiniteSpace` every
supremum and infimum is an exact maximum or minimum over matrix entries.  On
the disc and on Fock space they are estimated on a deterministic grid and
then polished by coordinate golden-section search.  Refinement only accepts
improvements, so a reported supremum is a lower bound of the true one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, InputError
from .linalg import as_matrix, matrix_power
from .spaces import FiniteSpace, Fock, KernelSpace, WeightedHardy

__all__ = [
    "MeanKind",
    "InterpolationPath",
    "mean_eval",
    "MatrixOperator",
    "ClosedFormOperator",
    "ExactSampler",
    "DiscGrid",
    "RadialGrid",
    "Estimate",
    "default_sampler",
    "parse_sampler",
    "pairing",
    "adjoint_pairing",
    "berezin_transform",
    "berezin_radius",
    "berezin_norm",
    "c_tilde",
    "sigma_t_norm",
    "t_berezin_norm",
    "min_t_ber_mix",
]


# ----------------------------------------------------------------------
# means and interpolation paths


class MeanKind(enum.Enum):
    ARITHMETIC = "arith"
    GEOMETRIC = "geom"
    HARMONIC = "harm"

    @classmethod
    def parse(cls, text: str) -> "MeanKind":
        key = text.strip().lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        raise InputError(f"unknown mean kind {text!r} (expected arith, geom or harm)")


@dataclass(frozen=True)
class InterpolationPath:
    """A weighted mean ``a sigma_t b`` with ``t = 1`` giving ``a`` and ``t = 0`` giving ``b``."""

    kind: MeanKind
    t: float

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", MeanKind.parse(self.kind))
        if not 0.0 <= self.t <= 1.0:
            raise DomainError(f"t must lie in [0, 1], got {self.t}")

    def __call__(self, a, b):
        return mean_eval(self, a, b)

    def with_t(self, t: float) -> "InterpolationPath":
        return InterpolationPath(self.kind, t)


def mean_eval(path: InterpolationPath, a, b):
    """Evaluate ``a sigma_t b`` elementwise for nonnegative ``a`` and ``b``.

    Zero arguments follow the limits from the interior: the geometric mean
    uses ``0**0 = 1`` and the harmonic mean vanishes once a zero argument
    carries positive weight.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a < 0) or np.any(b < 0):
        raise DomainError("means are defined for nonnegative arguments only")
    t = path.t
    if path.kind is MeanKind.ARITHMETIC:
        out = t * a + (1.0 - t) * b
    elif path.kind is MeanKind.GEOMETRIC:
        out = np.power(a, t) * np.power(b, 1.0 - t)
    else:
        if t == 1.0:
            out = a + 0.0 * b
        elif t == 0.0:
            out = b + 0.0 * a
        else:
            a, b = np.broadcast_arrays(a, b)
            out = np.zeros(a.shape)
            pos = (a > 0) & (b > 0)
            out[pos] = 1.0 / (t / a[pos] + (1.0 - t) / b[pos])
    return out if out.ndim else float(out)


# ----------------------------------------------------------------------
# operator models


@dataclass(frozen=True)
class MatrixOperator:
    """An operator given by its matrix in the orthonormal basis of ``space``.

    On :class:`WeightedHardy` the basis is ``z^n / beta_n`` and the matrix is
    the compression to the first ``N`` basis vectors.
    """

    space: KernelSpace
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix, square=True)
        if isinstance(self.space, FiniteSpace) and m.shape[0] != self.space.n:
            raise DomainError(f"{m.shape} matrix does not act on C^{self.space.n}")
        if isinstance(self.space, Fock):
            raise DomainError("matrix models on Fock space are not supported; use a closed-form pairing")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def adjoint(self) -> "MatrixOperator":
        return MatrixOperator(self.space, self.matrix.conj().T)


@dataclass(frozen=True)
class ClosedFormOperator:
    """An operator known only through ``pairing(lam, mu) = <A k_lam, k_mu>``.

    Both callables must broadcast over array arguments; Fock points carry
    their coordinates on the last axis.  The adjoint pairing defaults to
    ``conj(pairing(mu, lam))``.
    """

    space: KernelSpace
    pairing_fn: Callable
    adjoint_fn: Optional[Callable] = None
    label: str = ""

    def adjoint_pairing(self, lam, mu):
        if self.adjoint_fn is not None:
            return self.adjoint_fn(lam, mu)
        return np.conj(self.pairing_fn(mu, lam))

    @property
    def adjoint(self) -> "ClosedFormOperator":
        return ClosedFormOperator(self.space, self.adjoint_pairing, self.pairing_fn, self.label + "*")


_CHUNK = 2048


def _hardy_coordinate_rows(beta: float, pts: np.ndarray, size: int) -> np.ndarray:
    """Rows ``c(w) / ||k_w||`` truncated to ``size`` coordinates."""
    pts = np.atleast_1d(np.asarray(pts, dtype=np.complex128))
    if np.any(np.abs(pts) >= 1.0):
        raise DomainError("points must lie in the open unit disc")
    n = np.arange(size)
    rows = (math.sqrt(beta) * pts.conj())[:, None] ** n[None, :]
    return rows * np.sqrt(1.0 - beta * np.abs(pts) ** 2)[:, None]


def _pairing_grid(op, lam, mu, adjoint=False) -> np.ndarray:
    """``G[j, i] = <A k_lam[i], k_mu[j]>`` (or the adjoint pairing)."""
    if isinstance(op, MatrixOperator):
        m = op.matrix.conj().T if adjoint else op.matrix
        if isinstance(op.space, FiniteSpace):
            li = np.atleast_1d(lam).astype(int)
            mi = np.atleast_1d(mu).astype(int)
            return m[np.ix_(mi, li)]
        size = m.shape[0]
        cl = _hardy_coordinate_rows(op.space.beta, lam, size)
        cm = _hardy_coordinate_rows(op.space.beta, mu, size)
        # <M c(lam), c(mu)> = c(mu)^* M c(lam)
        return cm.conj() @ m @ cl.T
    fn = op.adjoint_pairing if adjoint else op.pairing_fn
    if isinstance(op.space, Fock):
        lam = np.asarray(lam, dtype=np.complex128).reshape(-1, op.space.dim)
        mu = np.asarray(mu, dtype=np.complex128).reshape(-1, op.space.dim)
        out = fn(lam[None, :, :], mu[:, None, :])
        return np.asarray(out, dtype=np.complex128) * np.ones((len(mu), len(lam)))
    lam = np.atleast_1d(lam)
    mu = np.atleast_1d(mu)
    return np.asarray(fn(lam[None, :], mu[:, None]), dtype=np.complex128) * np.ones((mu.size, lam.size))


def _diag_values(op, pts, adjoint=False) -> np.ndarray:
    """``<A k_w, k_w>`` for each point (without forming the full grid)."""
    if isinstance(op, MatrixOperator):
        m = op.matrix.conj().T if adjoint else op.matrix
        if isinstance(op.space, FiniteSpace):
            return m.diagonal()[np.atleast_1d(pts).astype(int)]
        pts = np.atleast_1d(pts)
        out = np.empty(pts.size, dtype=np.complex128)
        for s in range(0, pts.size, _CHUNK):
            c = _hardy_coordinate_rows(op.space.beta, pts[s : s + _CHUNK], m.shape[0])
            out[s : s + _CHUNK] = np.einsum("ij,jk,ik->i", c.conj(), m, c)
        return out
    fn = op.adjoint_pairing if adjoint else op.pairing_fn
    if isinstance(op.space, Fock):
        pts = np.asarray(pts, dtype=np.complex128).reshape(-1, op.space.dim)
    else:
        pts = np.atleast_1d(pts)
    return np.asarray(fn(pts, pts), dtype=np.complex128) * np.ones(len(pts))


def pairing(op, lam, mu) -> complex:
    """``<A k_lam, k_mu>`` between normalised kernels."""
    lam = op.space.check_point(lam)
    mu = op.space.check_point(mu)
    if not isinstance(op.space, Fock):
        lam, mu = [lam], [mu]
    return complex(_pairing_grid(op, lam, mu)[0, 0])


def adjoint_pairing(op, lam, mu) -> complex:
    """``<A* k_lam, k_mu>`` between normalised kernels."""
    return complex(np.conj(pairing(op, mu, lam)))


def berezin_transform(op, lam) -> complex:
    """``<A k_lam, k_lam>`` with normalised kernels."""
    return pairing(op, lam, lam)


# ----------------------------------------------------------------------
# samplers


@dataclass(frozen=True)
class ExactSampler:
    """All indices of a :class:`FiniteSpace`; sups become exact maxima."""

    def describe(self) -> str:
        return "exact"


@dataclass(frozen=True)
class DiscGrid:
    """Polar grid ``r in [0, 1 - eps]``, ``theta in [0, 2 pi)`` on the disc.

    Two-point quantities use a coarser ``pair_r x pair_theta`` subgrid before
    refinement, which keeps the pair count manageable.
    """

    n_r: int = 400
    n_theta: int = 64
    eps: float = 1e-3
    rounds: int = 3
    pair_r: int = 24
    pair_theta: int = 16

    def __post_init__(self):
        if self.n_r < 2 or self.n_theta < 1 or not 0.0 < self.eps < 1.0 or self.rounds < 0:
            raise InputError(f"invalid disc grid {self}")

    def describe(self) -> str:
        return f"grid:{self.n_r}x{self.n_theta}:{self.eps:g}:{self.rounds}"

    @property
    def r_max(self) -> float:
        return 1.0 - self.eps

    def params(self, n_r=None, n_theta=None) -> np.ndarray:
        n_r = n_r or self.n_r
        n_theta = n_theta or self.n_theta
        r = np.linspace(0.0, self.r_max, n_r)
        th = np.arange(n_theta) * (2.0 * np.pi / n_theta)
        rr, tt = np.meshgrid(r, th, indexing="ij")
        return np.column_stack([rr.ravel(), tt.ravel()])

    def bounds(self):
        return np.array([[0.0, self.r_max], [-np.inf, np.inf]])

    def cell(self, n_r=None, n_theta=None):
        return np.array([self.r_max / ((n_r or self.n_r) - 1), 2.0 * np.pi / (n_theta or self.n_theta)])

    def to_points(self, params: np.ndarray) -> np.ndarray:
        params = np.atleast_2d(params)
        return params[:, 0] * np.exp(1j * params[:, 1])


@dataclass(frozen=True)
class RadialGrid:
    """Fock-space grid ``w = sqrt(s / alpha) e^(i theta) e_1`` with ``s in [0, s_max]``.

    ``s = alpha |w|^2`` is the reduced variable on which the closed-form
    transforms depend.
    """

    n_s: int = 2000
    s_max: float = 50.0
    rounds: int = 3
    n_theta: int = 16
    pair_s: int = 48
    pair_theta: int = 8

    def __post_init__(self):
        if self.n_s < 2 or self.s_max <= 0 or self.rounds < 0 or self.n_theta < 1:
            raise InputError(f"invalid radial grid {self}")

    def describe(self) -> str:
        return f"grid:{self.n_s}:{self.s_max:g}"

    def params(self, n_s=None, n_theta=None) -> np.ndarray:
        s = np.linspace(0.0, self.s_max, n_s or self.n_s)
        th = np.arange(n_theta or self.n_theta) * (2.0 * np.pi / (n_theta or self.n_theta))
        ss, tt = np.meshgrid(s, th, indexing="ij")
        return np.column_stack([ss.ravel(), tt.ravel()])

    def bounds(self):
        return np.array([[0.0, self.s_max], [-np.inf, np.inf]])

    def cell(self, n_s=None, n_theta=None):
        return np.array([self.s_max / ((n_s or self.n_s) - 1), 2.0 * np.pi / (n_theta or self.n_theta)])

    def points_for(self, space: Fock, params: np.ndarray) -> np.ndarray:
        params = np.atleast_2d(params)
        pts = np.zeros((len(params), space.dim), dtype=np.complex128)
        pts[:, 0] = np.sqrt(params[:, 0] / space.alpha) * np.exp(1j * params[:, 1])
        return pts


def default_sampler(space: KernelSpace):
    if isinstance(space, FiniteSpace):
        return ExactSampler()
    if isinstance(space, WeightedHardy):
        return DiscGrid()
    return RadialGrid()


def parse_sampler(text: str):
    """Parse ``exact``, ``grid:<Nr>x<Ntheta>:<eps>:<rounds>`` or ``grid:<Ns>:<Smax>``."""
    t = text.strip().lower()
    if t == "exact":
        return ExactSampler()
    parts = t.split(":")
    try:
        if parts[0] == "grid" and len(parts) >= 2 and "x" in parts[1]:
            n_r, n_th = (int(v) for v in parts[1].split("x"))
            eps = float(parts[2]) if len(parts) > 2 else 1e-3
            rounds = int(parts[3]) if len(parts) > 3 else 3
            if len(parts) > 4:
                raise ValueError("too many fields")
            return DiscGrid(n_r, n_th, eps, rounds)
        if parts[0] == "grid" and len(parts) == 3:
            return RadialGrid(int(parts[1]), float(parts[2]))
    except (ValueError, InputError) as exc:
        raise InputError(f"bad sampler descriptor {text!r}: {exc}") from exc
    raise InputError(f"bad sampler descriptor {text!r}")


# ----------------------------------------------------------------------
# sampled optimisation


@dataclass
class Estimate:
    """A sampled extremum with the sequence of values after each stage.

    ``history[0]`` is the grid value and each later entry follows one
    refinement round, so the sequence is monotone.
    """

    value: float
    location: tuple
    history: list = field(default_factory=list)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden(f, lo, hi, iters=40):
    """Golden-section search for a maximum of ``f`` on ``[lo, hi]``."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def _refine(objective, x0, f0, bounds, widths, rounds):
    """Coordinate golden-section ascent that never accepts a worse point."""
    x = np.array(x0, dtype=float)
    best = f0
    history = [best]
    widths = np.array(widths, dtype=float)
    for _ in range(rounds):
        for k in range(len(x)):
            lo = max(bounds[k][0], x[k] - widths[k])
            hi = min(bounds[k][1], x[k] + widths[k])
            if hi <= lo:
                continue

            def f1(v, k=k):
                y = x.copy()
                y[k] = v
                return objective(y)

            xv, fv = _golden(f1, lo, hi)
            for cand, fc in ((xv, fv), (lo, f1(lo)), (hi, f1(hi))):
                if fc > best:
                    best, x[k] = fc, cand
        history.append(best)
        widths *= 0.5
    return x, best, history


def _grid_for(space, sampler):
    if isinstance(space, WeightedHardy):
        if not isinstance(sampler, DiscGrid):
            raise InputError(f"weighted Hardy space needs a disc grid, got {sampler.describe()}")
        return sampler, lambda prm: sampler.to_points(prm)
    if isinstance(space, Fock):
        if not isinstance(sampler, RadialGrid):
            raise InputError(f"Fock space needs a radial grid, got {sampler.describe()}")
        return sampler, lambda prm: sampler.points_for(space, prm)
    raise InputError("exact sampling only applies to finite spaces")


def _optimize_diag(op, sampler, score, maximize=True) -> Estimate:
    """Extremum over one point of ``score(<A k_w, k_w>, <A* k_w, k_w>)``."""
    sign = 1.0 if maximize else -1.0
    if isinstance(op.space, FiniteSpace):
        pts = np.arange(op.space.n)
        vals = sign * score(_diag_values(op, pts), _diag_values(op, pts, adjoint=True))
        i = int(np.argmax(vals))
        return Estimate(sign * float(vals[i]), (i,), [sign * float(vals[i])])
    grid, to_pts = _grid_for(op.space, sampler)
    prm = grid.params()
    sign = 1.0 if maximize else -1.0
    vals = sign * score(_diag_values(op, to_pts(prm)), _diag_values(op, to_pts(prm), adjoint=True))
    i = int(np.argmax(vals))

    def objective(x):
        p = to_pts(x[None, :])
        return float(sign * score(_diag_values(op, p), _diag_values(op, p, adjoint=True))[0])

    x, best, hist = _refine(objective, prm[i], float(vals[i]), grid.bounds(), grid.cell(), grid.rounds)
    loc = to_pts(x[None, :])[0]
    return Estimate(sign * best, (loc,), [sign * h for h in hist])


def _pair_grid_sizes(grid):
    if isinstance(grid, DiscGrid):
        return dict(n_r=grid.pair_r, n_theta=grid.pair_theta)
    return dict(n_s=grid.pair_s, n_theta=grid.pair_theta)


def _optimize_pair(op, sampler, score, maximize=True) -> Estimate:
    """Extremum over pairs of ``score(<A k_lam, k_mu>, <A* k_lam, k_mu>)``."""
    if isinstance(op.space, FiniteSpace):
        sign = 1.0 if maximize else -1.0
        pts = np.arange(op.space.n)
        vals = sign * score(_pairing_grid(op, pts, pts), _pairing_grid(op, pts, pts, adjoint=True))
        j, i = np.unravel_index(int(np.argmax(vals)), vals.shape)
        return Estimate(sign * float(vals[j, i]), (int(i), int(j)), [sign * float(vals[j, i])])
    grid, to_pts = _grid_for(op.space, sampler)
    sizes = _pair_grid_sizes(grid)
    prm = grid.params(**sizes)
    pts = to_pts(prm)
    sign = 1.0 if maximize else -1.0
    vals = sign * score(_pairing_grid(op, pts, pts), _pairing_grid(op, pts, pts, adjoint=True))
    j, i = np.unravel_index(int(np.argmax(vals)), vals.shape)
    x0 = np.concatenate([prm[i], prm[j]])

    def objective(x):
        lam = to_pts(x[None, :2])
        mu = to_pts(x[None, 2:])
        return float(sign * score(_pairing_grid(op, lam, mu), _pairing_grid(op, lam, mu, adjoint=True))[0, 0])

    bounds = np.vstack([grid.bounds(), grid.bounds()])
    cell = np.concatenate([grid.cell(**sizes)] * 2)
    x, best, hist = _refine(objective, x0, float(vals[j, i]), bounds, cell, grid.rounds)
    lam = to_pts(x[None, :2])[0]
    mu = to_pts(x[None, 2:])[0]
    return Estimate(sign * best, (lam, mu), [sign * h for h in hist])


def _resolve(op, sampler):
    return default_sampler(op.space) if sampler is None else sampler


def _is_finite(op) -> bool:
    return isinstance(op, MatrixOperator) and isinstance(op.space, FiniteSpace)


# ----------------------------------------------------------------------
# Berezin quantities


def berezin_radius(op, sampler=None, *, details: bool = False):
    """``ber(A) = sup_w |<A k_w, k_w>|``."""
    if _is_finite(op):
        d = np.abs(op.matrix.diagonal())
        i = int(np.argmax(d))
        est = Estimate(float(d[i]), (i,), [float(d[i])])
    else:
        est = _optimize_diag(op, _resolve(op, sampler), lambda a, b: np.abs(a))
    return est if details else est.value


def berezin_norm(op, sampler=None, *, details: bool = False):
    """``||A||_ber = sup_{lam, mu} |<A k_lam, k_mu>|``."""
    if _is_finite(op):
        m = np.abs(op.matrix)
        j, i = np.unravel_index(int(np.argmax(m)), m.shape)
        est = Estimate(float(m[j, i]), (int(i), int(j)), [float(m[j, i])])
    else:
        est = _optimize_pair(op, _resolve(op, sampler), lambda a, b: np.abs(a))
    return est if details else est.value


def c_tilde(op, sampler=None, *, details: bool = False):
    """``inf_{lam, mu} |<A k_lam, k_mu>|``."""
    if _is_finite(op):
        m = np.abs(op.matrix)
        j, i = np.unravel_index(int(np.argmin(m)), m.shape)
        est = Estimate(float(m[j, i]), (int(i), int(j)), [float(m[j, i])])
    else:
        est = _optimize_pair(op, _resolve(op, sampler), lambda a, b: np.abs(a), maximize=False)
    return est if details else est.value


def _check_p(p: float):
    if not p >= 1.0:
        raise DomainError(f"p must be at least 1, got {p}")


def sigma_t_norm(op, path: InterpolationPath, p: float = 1.0, sampler=None, *, details: bool = False):
    """The seminorm ``sup_{lam, mu} (|<A k_lam, k_mu>|^p sigma_t |<A* k_lam, k_mu>|^p)^(1/p)``.

    The supremum is taken of the combined mean, not of each term separately.
    """
    _check_p(p)

    def score(a, b):
        return mean_eval(path, np.abs(a) ** p, np.abs(b) ** p)

    if _is_finite(op):
        m = op.matrix
        # rows index mu, columns lam: P = M, adjoint pairing = conj(M^T)
        vals = score(m, m.T)
        j, i = np.unravel_index(int(np.argmax(vals)), vals.shape)
        v = float(vals[j, i]) ** (1.0 / p)
        est = Estimate(v, (int(i), int(j)), [v])
    else:
        raw = _optimize_pair(op, _resolve(op, sampler), score)
        est = Estimate(raw.value ** (1.0 / p), raw.location, [h ** (1.0 / p) for h in raw.history])
    return est if details else est.value


def t_berezin_norm(op, t: float, sampler=None, *, details: bool = False):
    """Arithmetic-path seminorm with ``p = 1``."""
    return sigma_t_norm(op, InterpolationPath(MeanKind.ARITHMETIC, t), 1.0, sampler, details=details)


def _abs_powers(m: np.ndarray, p: float):
    """``|A|^p`` and ``|A*|^p``."""
    return matrix_power(m.conj().T @ m, p / 2.0), matrix_power(m @ m.conj().T, p / 2.0)


def min_t_ber_mix(op, p: float, sampler=None, *, tol: float = 1e-9) -> tuple[float, float]:
    """Minimise ``ber(t |A|^p + (1 - t) |A*|^p)`` over ``t in [0, 1]``.

    On a finite space the objective is the upper envelope of the affine maps
    ``t d1_i + (1 - t) d2_i`` (diagonals of the two powers).  It is
    minimised exactly by checking the endpoints and every pairwise crossing.
    Elsewhere a ternary search on the convex objective is used.

    Returns
    -------
    t_star, value : float
    """
    _check_p(p)
    if not isinstance(op, MatrixOperator):
        m = as_matrix(op, square=True)
        op = MatrixOperator(FiniteSpace(m.shape[0]), m)
    pa, pb = _abs_powers(op.matrix, p)
    if isinstance(op.space, FiniteSpace):
        d1 = pa.diagonal().real
        d2 = pb.diagonal().real
        slope = d1 - d2
        cands = [0.0, 1.0]
        ds = slope[:, None] - slope[None, :]
        dc = d2[None, :] - d2[:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            cross = dc / ds
        ok = np.isfinite(cross) & (cross > 0.0) & (cross < 1.0)
        cands.extend(np.unique(cross[ok]).tolist())
        ts = np.array(cands)
        env = (ts[:, None] * d1[None, :] + (1.0 - ts[:, None]) * d2[None, :]).max(axis=1)
        k = int(np.argmin(env))
        return float(ts[k]), float(env[k])
    sampler = _resolve(op, sampler)

    def obj(t):
        return berezin_radius(MatrixOperator(op.space, t * pa + (1.0 - t) * pb), sampler)

    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if obj(m1) <= obj(m2):
            hi = m2
        else:
            lo = m1
    t = 0.5 * (lo + hi)
    best = min((obj(t), t), (obj(0.0), 0.0), (obj(1.0), 1.0))
    return best[1], best[0]
