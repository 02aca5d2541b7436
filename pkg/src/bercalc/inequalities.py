"""Seeded fuzz suites that check Berezin-norm inequalities numerically.

Each predicate turns one inequality ``lhs <= rhs`` into an
:class:`InequalityCase` whose slack is ``rhs - lhs``.  Everything runs on
:class:`~bercalc.spaces.FiniteSpace`, where every supremum and infimum is
exact, so a negative slack beyond rounding is a genuine counterexample.

Three suites are provided:

``lemma``
    Vector-level inequalities (mixed Schwarz, power means, Jensen, Buzano).
``section3``
    Bounds on the sigma_t seminorm in terms of Berezin radii of positive
    operators built from ``|A|`` and ``|A*|``.
``blocks``
    Bounds for 2x2 operator matrices and the block unitary characterisation.

Functions ``f`` and ``g`` are drawn from the power family ``s**gamma``,
``s**(1 - gamma)``, so that ``f(s) g(s) = s`` wherever that is required.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .berezin import InterpolationPath, MatrixOperator, MeanKind, mean_eval, min_t_ber_mix, sigma_t_norm
from .errors import ContractError, DimensionError, InputError, SingularMatrixError
from .linalg import as_matrix, gram, hermitian_eig, inverse, operator_norm, polar, spectral_radius
from .spaces import FiniteSpace

__all__ = [
    "InequalityCase",
    "InequalityReport",
    "TOL_EXACT",
    "TOL_SAMPLED",
    "SUITES",
    "run_suite",
    "lemma_suite",
    "section3_suite",
    "blocks_suite",
    "unitary_check",
    "block_diag",
    "block_offdiag",
    "block_full",
    "block_ops",
    "equality_case_probe",
    "random_matrix",
    "random_unitary",
    "SpectralPair",
]

TOL_EXACT = 1e-9
TOL_SAMPLED = 1e-6
UNITARY_TOL = 1e-9
PATHS = (MeanKind.ARITHMETIC, MeanKind.GEOMETRIC, MeanKind.HARMONIC)


@dataclass
class InequalityCase:
    """One evaluated inequality ``lhs <= rhs``."""

    id: str
    params: dict
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def passed(self, tol: float = TOL_EXACT) -> bool:
        return self.slack >= -tol

    def to_dict(self) -> dict:
        return {"id": self.id, "params": self.params, "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack}


@dataclass
class InequalityReport:
    """Outcome of a suite run; deterministic given ``(suite, seed, trials)``."""

    suite: str
    seed: int
    trials: int
    cases: int = 0
    min_slack: float = float("inf")
    min_slack_by_id: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    tol: float = TOL_EXACT

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, case: InequalityCase) -> None:
        self.cases += 1
        s = case.slack
        self.min_slack = min(self.min_slack, s)
        prev = self.min_slack_by_id.get(case.id)
        if prev is None or s < prev:
            self.min_slack_by_id[case.id] = s
        if not case.passed(self.tol):
            self.failures.append(case)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "cases": self.cases,
            "tol": self.tol,
            "minSlack": self.min_slack,
            "minSlackById": dict(sorted(self.min_slack_by_id.items())),
            "failures": [c.to_dict() for c in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# ----------------------------------------------------------------------
# generators


def random_matrix(rng: np.random.Generator, n: int, m: int | None = None) -> np.ndarray:
    """Entries with independent real and imaginary parts uniform in [-1, 1]."""
    m = n if m is None else m
    return rng.uniform(-1, 1, (n, m)) + 1j * rng.uniform(-1, 1, (n, m))


def random_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-style unitary: QR of a random matrix with the phases of ``R`` removed."""
    q, r = np.linalg.qr(random_matrix(rng, n))
    d = r.diagonal()
    return q * (d / np.abs(d))


class SpectralPair:
    """Cached spectral data of ``A*A`` and ``AA*`` for one matrix.

    ``mod(f)`` returns ``f(|A|)`` and ``comod(f)`` returns ``f(|A*|)`` for a
    vectorised ``f`` on singular values.
    """

    def __init__(self, a: np.ndarray):
        self.a = a
        self._right = hermitian_eig(gram(a))
        self._left = hermitian_eig(gram(a.conj().T))

    @staticmethod
    def _apply(eig, f):
        s = np.sqrt(np.clip(eig.eigenvalues, 0.0, None))
        v = eig.vectors
        h = (v * f(s)) @ v.conj().T
        return 0.5 * (h + h.conj().T)

    def mod(self, f) -> np.ndarray:
        return self._apply(self._right, f)

    def comod(self, f) -> np.ndarray:
        return self._apply(self._left, f)


def _power(e: float) -> Callable[[np.ndarray], np.ndarray]:
    return lambda s: np.power(s, e)


def _ber(m: np.ndarray) -> float:
    """Berezin radius on a finite space: the largest diagonal modulus."""
    return float(np.abs(np.diagonal(m)).max())


def _ber_norm(m: np.ndarray) -> float:
    return float(np.abs(m).max())


def _sigma(m: np.ndarray, path: InterpolationPath, p: float) -> float:
    return sigma_t_norm(MatrixOperator(FiniteSpace(m.shape[0]), m), path, p)


def _inner(x, y) -> complex:
    """``<x, y>``, linear in ``x``."""
    return complex(np.vdot(y, x))


def _quad(h, x) -> float:
    """``<H x, x>`` for Hermitian ``H`` (real part)."""
    return float(np.vdot(x, h @ x).real)


# ----------------------------------------------------------------------
# lemma suite


def _lemma_trial(rng: np.random.Generator, trial: int, dims) -> list[InequalityCase]:
    n = int(rng.integers(dims[0], dims[1] + 1))
    p = float(rng.uniform(1.0, 3.0))
    gamma = float(rng.uniform(0.0, 1.0))
    f, g = _power(gamma), _power(1.0 - gamma)
    f2, g2 = _power(2 * gamma), _power(2 * (1.0 - gamma))
    a, b = random_matrix(rng, n), random_matrix(rng, n)
    x, y = random_vector(rng, n), random_vector(rng, n)
    prm = {"trial": trial, "dim": n, "p": p, "gamma": gamma}
    sa, sb = SpectralPair(a), SpectralPair(b)
    ua, ub = polar(a).isometry, polar(b).isometry
    out = []

    lhs = abs(_inner(sb.mod(g) @ sa.comod(f) @ ua @ x, y)) ** 2
    rhs = _quad(sa.mod(f2), x) * _quad(sb.mod(g2), y)
    out.append(InequalityCase("mixed-schwarz-AB", prm, lhs, rhs))

    lhs = abs(_inner(sa.mod(g) @ sb.comod(f) @ ub @ x, y)) ** 2
    rhs = _quad(sb.mod(f2), x) * _quad(sa.mod(g2), y)
    out.append(InequalityCase("mixed-schwarz-BA", prm, lhs, rhs))

    lhs = abs(_inner(a @ x, y)) ** 2
    rhs = _quad(sa.mod(f2), x) * _quad(sa.comod(g2), y)
    out.append(InequalityCase("mixed-schwarz", prm, lhs, rhs))

    k = int(rng.integers(1, 7))
    vals = rng.uniform(0.0, 2.0, k)
    out.append(InequalityCase("power-sum", {**prm, "terms": k}, float(vals.sum() ** p),
                              float(k ** (p - 1) * np.sum(vals**p))))

    # B is a real polynomial in |A|, hence |A| B = B* |A|
    c = rng.uniform(-1.0, 1.0, 3)
    mod = sa.mod(_power(1.0))
    bb = c[0] * np.eye(n) + c[1] * mod + c[2] * (mod @ mod)
    comm = np.abs(mod @ bb - bb.conj().T @ mod).max()
    if comm > 1e-10:
        raise ContractError(f"generator broke |A|B = B*|A| (residual {comm:.3e})")
    r = spectral_radius(bb)
    lhs = abs(_inner(a @ bb @ x, y)) ** 2
    rhs = r**2 * _quad(sa.mod(f2), x) * _quad(sa.comod(g2), y)
    out.append(InequalityCase("commuting-product", {**prm, "coeffs": c.tolist()}, lhs, rhs))

    t_psd = gram(a)
    e = x / np.linalg.norm(x)
    tp = SpectralPair(a).mod(_power(2 * p))  # (A*A)^p
    out.append(InequalityCase("jensen-power", prm, _quad(t_psd, e) ** p, _quad(tp, e)))
    q = 1.0 / p
    tq = SpectralPair(a).mod(_power(2 * q))
    out.append(InequalityCase("jensen-power-reverse", {**prm, "q": q}, _quad(tq, e), _quad(t_psd, e) ** q))

    lhs = abs(_inner(x, e) * _inner(e, y))
    rhs = 0.5 * (abs(_inner(x, y)) + np.linalg.norm(x) * np.linalg.norm(y))
    out.append(InequalityCase("buzano", prm, lhs, float(rhs)))
    return out


# ----------------------------------------------------------------------
# section3 suite


def _mix(t, x, y):
    return t * x + (1.0 - t) * y


def _section3_trial(rng: np.random.Generator, trial: int, dims) -> list[InequalityCase]:
    n = int(rng.integers(dims[0], dims[1] + 1))
    kind = PATHS[trial % 3]
    t = float(rng.uniform(0.0, 1.0))
    path = InterpolationPath(kind, t)
    p = float(rng.choice([1.0, 2.0, 3.0]))
    p2 = max(p, 2.0)
    gamma = float(rng.uniform(0.0, 1.0))
    n_terms = int(rng.integers(1, 4))
    # r and its conjugate both stay in [1.25, 5] so s**(p r) cannot overflow
    r_exp = float(rng.uniform(1.25, 5.0))
    s_exp = r_exp / (r_exp - 1.0)
    prm = {"trial": trial, "dim": n, "path": kind.value, "t": t, "p": p, "gamma": gamma,
           "terms": n_terms, "r": r_exp}
    a = random_matrix(rng, n)
    sa = SpectralPair(a)
    out = []

    sig = _sigma(a, path, p)
    ber_a = _ber(a)
    norm_a = _ber_norm(a)
    out.append(InequalityCase("sandwich-lower", prm, ber_a, sig))
    out.append(InequalityCase("sandwich-upper", prm, sig, norm_a))

    ct = float(np.abs(a).min())
    lhs = max(mean_eval(path, ct**p, norm_a**p), mean_eval(path, norm_a**p, ct**p))
    out.append(InequalityCase("ctilde-lower", prm, lhs, sig**p))

    if 0.0 < t < 1.0:
        attains = equality_case_probe(a, path, p, check=False)
        agree = attains == (abs(sig - norm_a) <= 1e-10)
        out.append(InequalityCase("equality-case", prm, 0.0, 0.0 if agree else -1.0))

    # p >= 2 bounds through |A|^p and |A*|^p
    sig2 = _sigma(a, path, p2)
    pa, pb = sa.mod(_power(p2)), sa.comod(_power(p2))
    prm2 = {**prm, "p": p2}
    out.append(InequalityCase("mix-upper-stated", prm2, sig2**p2, _ber(_mix(t, pb, pa))))
    out.append(InequalityCase("mix-upper-proof", prm2, sig2**p2, _ber(_mix(t, pa, pb))))
    _, mval = min_t_ber_mix(a, p2)
    out.append(InequalityCase("mix-min-radius", prm2, ber_a**p2, mval))
    out.append(InequalityCase("mix-min-vs-half", prm2, mval, 0.5 * _ber(pa + pb)))

    # product bound with |A| B = B* |A|
    c = rng.uniform(-1.0, 1.0, 3)
    mod = sa.mod(_power(1.0))
    bb = c[0] * np.eye(n) + c[1] * mod + c[2] * (mod @ mod)
    f2p, g2p = _power(2 * gamma * p), _power(2 * (1.0 - gamma) * p)
    fa, ga = sa.mod(f2p), sa.comod(g2p)
    rhs = spectral_radius(bb) ** p * np.sqrt(_ber(_mix(t, fa, ga)) * _ber(_mix(t, ga, fa)))
    out.append(InequalityCase("product-bound", {**prm, "coeffs": c.tolist()}, _sigma(a @ bb, path, p) ** p, float(rhs)))

    # sums over polar factors
    aa = [random_matrix(rng, n) for _ in range(n_terms)]
    bs = [random_matrix(rng, n) for _ in range(n_terms)]
    sas = [SpectralPair(m) for m in aa]
    sbs = [SpectralPair(m) for m in bs]
    us = [polar(m).isometry for m in aa]
    f, g = _power(gamma), _power(1.0 - gamma)
    gen = sum(sb.mod(g) @ s.comod(f) @ u for s, sb, u in zip(sas, sbs, us))
    scale = n_terms ** (p - 1) / 2.0
    rhs = scale * sum(
        _ber(_mix(t, s.mod(f2p), sb.mod(g2p))) + _ber(_mix(t, sb.mod(g2p), s.mod(f2p))) for s, sb in zip(sas, sbs)
    )
    out.append(InequalityCase("polar-sum-general", prm, _sigma(gen, path, p) ** p, rhs))
    rhs = scale * sum(
        _ber(_mix(t, s.mod(f2p), s.comod(g2p))) + _ber(_mix(t, s.comod(g2p), s.mod(f2p))) for s in sas
    )
    out.append(InequalityCase("polar-sum", prm, _sigma(sum(aa), path, p) ** p, rhs))

    # Young-type bound, p >= 2
    fr, gs = _power(gamma * p2 * r_exp), _power((1.0 - gamma) * p2 * s_exp)
    s0, sb0, u0 = sas[0], sbs[0], us[0]
    gen1 = sb0.mod(g) @ s0.comod(f) @ u0
    rhs = _ber(_mix(t, s0.mod(fr) / r_exp, sb0.mod(gs) / s_exp)) + _ber(
        _mix(t, sb0.mod(gs) / s_exp, s0.mod(fr) / r_exp)
    )
    out.append(InequalityCase("young-general", prm2, _sigma(gen1, path, p2) ** p2, rhs))
    rhs = _ber(_mix(t, sa.mod(fr) / r_exp, sa.comod(gs) / s_exp)) + _ber(
        _mix(t, sa.comod(gs) / s_exp, sa.mod(fr) / r_exp)
    )
    out.append(InequalityCase("young", prm2, sig2**p2, rhs))

    # 2p-th power bound through products f^{2p}(|A_i|) g^{2p}(|B_i|)
    f4p, g4p = _power(4 * gamma * p), _power(4 * (1.0 - gamma) * p)
    scale = n_terms ** (2 * p - 1) / 2.0
    rhs = scale * sum(
        _ber(s.mod(f2p) @ sb.mod(g2p)) + 0.5 * (operator_norm(s.mod(f4p)) + operator_norm(sb.mod(g4p)))
        for s, sb in zip(sas, sbs)
    )
    out.append(InequalityCase("product-power-general", prm, _sigma(gen, path, p) ** (2 * p), rhs))
    rhs = scale * sum(
        _ber(s.mod(f2p) @ s.comod(g2p)) + 0.5 * (operator_norm(s.mod(f4p)) + operator_norm(s.comod(g4p)))
        for s in sas
    )
    out.append(InequalityCase("product-power", prm, _sigma(sum(aa), path, p) ** (2 * p), rhs))

    half = _power(p)
    rhs = 0.5 * (_ber(sa.mod(half) @ sa.comod(half)) + 0.5 * (operator_norm(a) ** (2 * p) * 2.0))
    out.append(InequalityCase("radius-product-power", prm, ber_a ** (2 * p), rhs))

    cart = sa.mod(_power(2.0)) + sa.comod(_power(2.0))
    out.append(InequalityCase("cartesian-bound", prm, sig**p, _ber(cart) ** (p / 2.0)))
    return out


# ----------------------------------------------------------------------
# 2x2 operator matrices


def _square_blocks(*blocks):
    ms = [as_matrix(b, square=True) for b in blocks]
    if len({m.shape for m in ms}) != 1:
        raise DimensionError(f"blocks must share one shape, got {[m.shape for m in ms]}")
    return ms


def block_diag(a, b) -> np.ndarray:
    """``[[A, 0], [0, B]]``."""
    a, b = _square_blocks(a, b)
    z = np.zeros_like(a)
    return np.block([[a, z], [z, b]])


def block_offdiag(a, b) -> np.ndarray:
    """``[[0, A], [B, 0]]``."""
    a, b = _square_blocks(a, b)
    z = np.zeros_like(a)
    return np.block([[z, a], [b, z]])


def block_full(a, b, c, d) -> np.ndarray:
    """``[[A, B], [C, D]]``."""
    a, b, c, d = _square_blocks(a, b, c, d)
    return np.block([[a, b], [c, d]])


def block_ops(a, b, c=None, d=None) -> dict:
    """All three block assemblies; ``C`` and ``D`` default to zero."""
    a, b = _square_blocks(a, b)
    c = np.zeros_like(a) if c is None else c
    d = np.zeros_like(a) if d is None else d
    return {"diag": block_diag(a, b), "offdiag": block_offdiag(a, b), "full": block_full(a, b, c, d)}


def unitary_check(a, path: InterpolationPath, p: float = 1.0) -> bool:
    """Characterise unitarity of an invertible matrix by two seminorm bounds.

    True iff the seminorms of ``A*A`` and ``(A*A)^-1`` are both at most one
    (up to ``1e-9``).

    Raises
    ------
    SingularMatrixError
        If ``A`` is numerically singular.
    """
    a = as_matrix(a, square=True)
    inverse(a)  # pivot guard
    h = gram(a)
    return bool(_sigma(h, path, p) <= 1.0 + UNITARY_TOL and _sigma(inverse(h), path, p) <= 1.0 + UNITARY_TOL)


def _block_unitary_char(a, b) -> bool:
    ha, hb = gram(a), gram(b)
    return bool(
        max(_ber(ha), _ber(hb)) <= 1.0 + UNITARY_TOL
        and max(_ber(inverse(ha)), _ber(inverse(hb))) <= 1.0 + UNITARY_TOL
    )


def _is_unitary(m) -> bool:
    return bool(np.abs(m.conj().T @ m - np.eye(m.shape[0])).max() <= 1e-8)


def _blocks_trial(rng: np.random.Generator, trial: int, dims) -> list[InequalityCase]:
    n = int(rng.integers(dims[0], dims[1] + 1))
    kind = PATHS[trial % 3]
    t = float(rng.uniform(0.0, 1.0))
    path = InterpolationPath(kind, t)
    nabla = InterpolationPath(MeanKind.ARITHMETIC, t)
    p = float(rng.choice([1.0, 2.0, 3.0]))
    gamma = float(rng.uniform(0.0, 1.0))
    prm = {"trial": trial, "dim": n, "path": kind.value, "t": t, "p": p, "gamma": gamma}
    a, b, c, d = (random_matrix(rng, n) for _ in range(4))
    out = []
    zero = np.zeros_like(a)

    lhs = _sigma(block_diag(a, b), path, p)
    out.append(InequalityCase("blockdiag-bound", prm, lhs, max(_sigma(a, nabla, p), _sigma(b, nabla, p))))

    off = block_offdiag(a, b)
    s_off = _sigma(off, path, p)
    swapped = _sigma(block_offdiag(b, a), path, p)
    out.append(InequalityCase("offdiag-swap", prm, abs(s_off - swapped), 0.0))

    corner = _sigma(block_offdiag(a, zero), nabla, p) ** p
    out.append(InequalityCase("corner-bound", prm, corner, max(t, 1 - t) * _ber_norm(a) ** p))

    rhs = max(t, 1 - t) ** (1.0 / p) * (_ber_norm(a) + _ber_norm(b))
    out.append(InequalityCase("offdiag-sum-bound", prm, s_off, rhs))

    f2p, g2p = _power(2 * gamma * p), _power(2 * (1 - gamma) * p)

    def side(m):
        s = SpectralPair(m)
        return _ber(_mix(t, s.mod(f2p), s.comod(f2p))) + _ber(_mix(t, s.comod(g2p), s.mod(g2p)))

    out.append(InequalityCase("offdiag-fg-bound", prm, s_off**p, 2.0**p / 4.0 * max(side(a), side(b))))

    na, nd = _sigma(a, nabla, p), _sigma(d, nabla, p)
    nb, nc = _ber_norm(b), _ber_norm(c)
    m = np.array([
        [na, (t * nb**p + (1 - t) * nc**p) ** (1 / p)],
        [(t * nc**p + (1 - t) * nb**p) ** (1 / p), nd],
    ])
    out.append(InequalityCase("block-2x2-bound", prm, _sigma(block_full(a, b, c, d), path, p), operator_norm(m)))

    # characterisation of unitary block diagonals, both directions
    if trial % 2 == 0:
        ua, ub = random_unitary(rng, n), random_unitary(rng, n)
    else:
        ua, ub = a, b
    try:
        tmat = block_diag(ua, ub)
        direct = _is_unitary(tmat)
        agree = _block_unitary_char(ua, ub) == direct and unitary_check(tmat, path, p) == direct
        out.append(InequalityCase("block-unitary", {**prm, "unitary": direct}, 0.0, 0.0 if agree else -1.0))
    except SingularMatrixError:
        pass
    return out


# ----------------------------------------------------------------------
# equality case


def equality_case_probe(a, path: InterpolationPath, p: float = 1.0, *, check: bool = True) -> bool:
    """Whether some entry pair attains ``|A_ij| = |A_ji| = ||A||_ber``.

    On a finite space the limit condition on kernel sequences reduces to
    attainment at a pair of indices.  With ``check`` set and ``t`` in
    ``(0, 1)`` the result is compared against ``sigma_t-norm = ||A||_ber``
    and a :class:`ContractError` is raised on disagreement.
    """
    a = as_matrix(a, square=True)
    mags = np.abs(a)
    top = float(mags.max())
    hit = (np.abs(mags - top) <= 1e-10) & (np.abs(mags.T - top) <= 1e-10)
    attains = bool(np.any(hit))
    if check and 0.0 < path.t < 1.0:
        equal = abs(_sigma(a, path, p) - top) <= 1e-10
        if equal != attains:
            raise ContractError("attainment and norm equality disagree")
    return attains


# ----------------------------------------------------------------------
# driver

SUITES = {
    "lemma": (1, _lemma_trial),
    "section3": (2, _section3_trial),
    "blocks": (3, _blocks_trial),
}


def _threads() -> int:
    raw = os.environ.get("BERCALC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"BERCALC_THREADS must be an integer, got {raw!r}") from None


def run_suite(suite: str, seed: int = 0, trials: int = 1000, dims=(2, 6), tol: float = TOL_EXACT) -> InequalityReport:
    """Run a named suite.

    Trial ``i`` draws from ``default_rng((seed, suite_code, i))``, so trials
    are independent and the report does not depend on thread scheduling.
    """
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if trials < 1:
        raise InputError("trials must be at least 1")
    if seed < 0:
        raise InputError("seed must be nonnegative")
    lo, hi = int(dims[0]), int(dims[1])
    if not 1 <= lo <= hi <= 32:
        raise InputError(f"dimension range {dims} must satisfy 1 <= lo <= hi <= 32")
    code, fn = SUITES[suite]

    def one(i):
        return fn(np.random.default_rng((seed, code, i)), i, (lo, hi))

    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(one, range(trials)))
    else:
        results = [one(i) for i in range(trials)]
    report = InequalityReport(suite=suite, seed=seed, trials=trials, tol=tol)
    for cases in results:
        for case in cases:
            report.add(case)
    return report


def lemma_suite(seed: int = 0, trials: int = 1000, dims=(2, 6)) -> InequalityReport:
    return run_suite("lemma", seed, trials, dims)


def section3_suite(seed: int = 0, trials: int = 1000, dims=(2, 6)) -> InequalityReport:
    return run_suite("section3", seed, trials, dims)


def blocks_suite(seed: int = 0, trials: int = 1000, dims=(2, 6)) -> InequalityReport:
    return run_suite("blocks", seed, trials, dims)
