"""Dense complex linear algebra for small operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; :func:`as_matrix`
is the validating constructor used at every public entry point.  The
Hermitian eigensolver is a cyclic Jacobi method, which converges
unconditionally on Hermitian input and is accurate to working precision for
the dimensions used here (at most 64).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numba
import numpy as np

from .errors import (
    ContractError,
    ConvergenceError,
    DimensionError,
    DomainError,
    InputError,
    SingularMatrixError,
)

__all__ = [
    "HermitianEigen",
    "PolarParts",
    "as_matrix",
    "adjoint",
    "add",
    "scale",
    "matmul",
    "inverse",
    "hermitian_eig",
    "matrix_function",
    "matrix_power",
    "gram",
    "modulus",
    "polar",
    "spectral_radius",
    "operator_norm",
    "real_part",
    "imag_part",
    "matrix_to_json",
    "matrix_from_json",
    "read_matrix",
    "write_matrix",
]

MAX_DIM = 64
HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
PSD_CLAMP = 1e-10
PINV_THRESHOLD = 1e-10
PIVOT_TOL = 1e-13


def as_matrix(a, *, square: bool = False) -> np.ndarray:
    """Return ``a`` as a finite 2-D complex128 array (a copy)."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError("matrix entries must be finite")
    if square and m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot add {a.shape} and {b.shape}")
    return a + b


def scale(c: complex, a) -> np.ndarray:
    return complex(c) * as_matrix(a)


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def inverse(a) -> np.ndarray:
    """Gauss-Jordan inverse with partial pivoting.

    A pivot smaller than ``1e-13`` times the largest entry of its (original)
    row is treated as zero and raises :class:`SingularMatrixError`.
    """
    a = as_matrix(a, square=True)
    n = a.shape[0]
    row_scale = np.abs(a).max(axis=1)
    if np.any(row_scale == 0.0):
        raise SingularMatrixError("matrix has a zero row")
    aug = np.hstack([a, np.eye(n, dtype=np.complex128)])
    scales = row_scale.copy()
    for col in range(n):
        piv = col + int(np.argmax(np.abs(aug[col:, col]) / scales[col:]))
        if abs(aug[piv, col]) < PIVOT_TOL * scales[piv]:
            raise SingularMatrixError(f"pivot {abs(aug[piv, col]):.3e} in column {col} below tolerance")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
            scales[[col, piv]] = scales[[piv, col]]
        aug[col] /= aug[col, col]
        others = np.arange(n) != col
        aug[others] -= np.outer(aug[others, col], aug[col])
    return aug[:, n:]


@dataclass(frozen=True)
class HermitianEigen:
    """Spectral decomposition ``H = V diag(eigenvalues) V*``.

    ``eigenvalues`` are real and ascending; the columns of ``vectors`` are
    the matching orthonormal eigenvectors.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        v = self.vectors
        return (v * self.eigenvalues) @ v.conj().T


@numba.njit(cache=True)
def _jacobi_sweeps(a, v, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += 2.0 * (a[p, q].real ** 2 + a[p, q].imag ** 2)
        off = math.sqrt(off)
        if off <= tol:
            return sweep, off
        if sweep == max_sweeps:
            return -1, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                # phase d turns a[p, q] real, then a real rotation finishes it
                d = (apq / mag).conjugate()
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    xp = a[k, p]
                    xq = a[k, q]
                    a[k, p] = c * xp - s * d * xq
                    a[k, q] = s * xp + c * d * xq
                dc = d.conjugate()
                for k in range(n):
                    xp = a[p, k]
                    xq = a[q, k]
                    a[p, k] = c * xp - s * dc * xq
                    a[q, k] = s * xp + c * dc * xq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                for k in range(n):
                    xp = v[k, p]
                    xq = v[k, q]
                    v[k, p] = c * xp - s * d * xq
                    v[k, q] = s * xp + c * d * xq
    return -1, off


def hermitian_eig(h, *, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius mass is at most
    ``tol * ||H||_F``.

    Raises
    ------
    ContractError
        If ``max|H - H*| > 1e-10 * max(1, max|H|)``.
    ConvergenceError
        If ``max_sweeps`` sweeps do not reach the tolerance.
    """
    h = as_matrix(h, square=True)
    if h.shape[0] > MAX_DIM:
        raise DimensionError(f"dimension {h.shape[0]} exceeds {MAX_DIM}")
    asym = np.abs(h - h.conj().T).max()
    if asym > HERMITIAN_TOL * max(1.0, float(np.abs(h).max())):
        raise ContractError(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    a = 0.5 * (h + h.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    fro = float(np.linalg.norm(a))
    sweeps, off = _jacobi_sweeps(a, v, tol * fro, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", residual=off)
    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return HermitianEigen(eigenvalues=w[order], vectors=v[:, order], sweeps=int(sweeps))


def _apply(eig: HermitianEigen, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    w = eig.eigenvalues
    floor = -PSD_CLAMP * max(1.0, float(np.abs(w).max()))
    if np.any(w < floor):
        raise ContractError(f"matrix is not positive semidefinite (eigenvalue {w.min():.3e})")
    w = np.clip(w, 0.0, None)
    with np.errstate(all="ignore"):
        fw = np.asarray(f(w), dtype=np.complex128)
    if fw.shape != w.shape or not np.all(np.isfinite(fw)):
        raise DomainError("function is undefined at some eigenvalue")
    v = eig.vectors
    return (v * fw) @ v.conj().T


def matrix_function(h, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """``f(H)`` for Hermitian positive semidefinite ``H``.

    ``f`` is applied elementwise to the eigenvalues (a vectorised callable).
    Eigenvalues down to ``-1e-10`` (relative to the spectral scale when that
    exceeds one) are clamped to zero first.
    """
    if isinstance(h, HermitianEigen):
        return _apply(h, f)
    return _apply(hermitian_eig(h), f)


def matrix_power(h, gamma: float) -> np.ndarray:
    """``H**gamma`` for PSD ``H`` and ``gamma >= 0`` (with ``0**0 = 1``)."""
    if gamma < 0:
        raise DomainError("negative powers of a PSD matrix are not supported")
    return matrix_function(h, lambda s: np.power(s, gamma))


@dataclass(frozen=True)
class PolarParts:
    """``A = U |A|`` with ``U`` a partial isometry and ``|A| = (A*A)^(1/2)``."""

    isometry: np.ndarray
    modulus: np.ndarray


def gram(a) -> np.ndarray:
    """``A*A``, symmetrised so that rounding cannot break Hermiticity."""
    a = as_matrix(a)
    g = a.conj().T @ a
    return 0.5 * (g + g.conj().T)


def modulus(a) -> np.ndarray:
    """``|A| = (A*A)^(1/2)``."""
    a = as_matrix(a, square=True)
    return matrix_function(gram(a), np.sqrt)


def polar(a) -> PolarParts:
    """Polar decomposition with ``U = A |A|^+``.

    The pseudo-inverse keeps eigenvalues of ``|A|`` above ``1e-10 * max``
    and zeroes the rest, so ``U*U`` is the projection onto ``range(|A|)``.
    """
    a = as_matrix(a, square=True)
    eig = hermitian_eig(gram(a))
    mod = _apply(eig, np.sqrt)
    sing = np.sqrt(np.clip(eig.eigenvalues, 0.0, None))
    top = sing.max()
    inv = np.zeros_like(sing)
    if top > 0:
        keep = sing > PINV_THRESHOLD * top
        inv[keep] = 1.0 / sing[keep]
    v = eig.vectors
    pinv = (v * inv) @ v.conj().T
    return PolarParts(isometry=a @ pinv, modulus=mod)


def operator_norm(a) -> float:
    """Largest singular value."""
    a = as_matrix(a)
    g = gram(a) if a.shape[1] <= a.shape[0] else gram(a.conj().T)
    top = hermitian_eig(g).eigenvalues[-1]
    return math.sqrt(max(top, 0.0))


def spectral_radius(b, *, squarings: int = 40) -> float:
    """Spectral radius of a square matrix.

    Hermitian input is handled exactly through :func:`hermitian_eig`.  For
    general input the Gelfand limit ``||B^(2^k)||^(1/2^k)`` is evaluated by
    repeated squaring; every square is renormalised (Frobenius norm, which
    is equivalent for this limit) and the log-scales are accumulated, so
    nothing overflows.  The final factor uses the spectral norm.
    """
    b = as_matrix(b, square=True)
    if np.abs(b - b.conj().T).max() <= HERMITIAN_TOL * max(1.0, float(np.abs(b).max())):
        return float(np.abs(hermitian_eig(b).eigenvalues).max())
    norm0 = np.linalg.norm(b)
    if norm0 == 0.0:
        return 0.0
    m = b / norm0
    log_r = math.log(norm0)
    weight = 1.0
    for _ in range(squarings):
        m = m @ m
        c = np.linalg.norm(m)
        if c == 0.0 or not math.isfinite(c):
            return 0.0
        m /= c
        weight *= 0.5
        log_r += weight * math.log(c)
    log_r += weight * math.log(operator_norm(m))
    return math.exp(log_r)


def real_part(a) -> np.ndarray:
    """``(A + A*) / 2``."""
    a = as_matrix(a, square=True)
    return 0.5 * (a + a.conj().T)


def imag_part(a) -> np.ndarray:
    """``(A - A*) / (2i)``."""
    a = as_matrix(a, square=True)
    return (a - a.conj().T) / 2j


# ----------------------------------------------------------------------
# JSON matrix files: {"rows": n, "cols": m, "data": [[re, im], ...]}


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    rows, cols = a.shape
    data = [[float(z.real), float(z.imag)] for z in a.ravel()]
    return {"rows": rows, "cols": cols, "data": data}


def matrix_from_json(obj: dict) -> np.ndarray:
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed matrix object: {exc}") from exc
    if rows <= 0 or cols <= 0 or len(data) != rows * cols:
        raise InputError(f"expected {rows}x{cols} entries, got {len(data)}")
    try:
        flat = [complex(float(re), float(im)) for re, im in data]
    except (TypeError, ValueError) as exc:
        raise InputError(f"entries must be [re, im] pairs: {exc}") from exc
    return as_matrix(np.array(flat).reshape(rows, cols))


def read_matrix(path) -> np.ndarray:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return matrix_from_json(obj)


def write_matrix(a, path) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(a)) + "\n")
