"""Reproducing kernel Hilbert spaces used by the Berezin calculus.

Three families are modelled:

* :class:`FiniteSpace` -- ``C^n`` with the standard basis as kernels, so
  domain points are indices ``0 .. n-1``.
* :class:`WeightedHardy` -- power series on the unit disc with kernel
  ``1 / (1 - beta * conj(w) * z)``.
* :class:`Fock` -- entire functions on ``C^dim`` with kernel
  ``exp(alpha * <z, w>)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DimensionError, DomainError, InputError
from .linalg import as_matrix, hermitian_eig, operator_norm

__all__ = [
    "FiniteSpace",
    "WeightedHardy",
    "Fock",
    "KernelSpace",
    "kernel_value",
    "normalized_kernel_norm_sq",
    "hardy_kernel_coordinates",
    "is_bounded_fock_symbol",
    "parse_space",
]

HARDY_TAIL_TOL = 1e-12
HARDY_MAX_ORDER = 2000
FOCK_UNIT_TOL = 1e-10


@dataclass(frozen=True)
class FiniteSpace:
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"FiniteSpace needs a positive integer dimension, got {self.n}")

    def check_point(self, j) -> int:
        if int(j) != j or not 0 <= j < self.n:
            raise DomainError(f"index {j} outside 0..{self.n - 1}")
        return int(j)


@dataclass(frozen=True)
class WeightedHardy:
    beta: float

    def __post_init__(self):
        if not 0.0 < self.beta <= 1.0:
            raise DomainError(f"beta must lie in (0, 1], got {self.beta}")

    def check_point(self, w) -> complex:
        w = complex(w)
        if not abs(w) < 1.0:
            raise DomainError(f"point {w} is outside the open unit disc")
        return w


@dataclass(frozen=True)
class Fock:
    alpha: float
    dim: int = 1

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")
        if int(self.dim) != self.dim or self.dim < 1:
            raise DomainError(f"dim must be a positive integer, got {self.dim}")

    def check_point(self, w) -> np.ndarray:
        v = np.atleast_1d(np.asarray(w, dtype=np.complex128))
        if v.shape != (self.dim,):
            raise DimensionError(f"expected a point in C^{self.dim}, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise DomainError("Fock points must be finite")
        return v


KernelSpace = Union[FiniteSpace, WeightedHardy, Fock]


def kernel_value(space: KernelSpace, z, w) -> complex:
    """Evaluate ``k_w(z) = <k_w, k_z>``."""
    if isinstance(space, FiniteSpace):
        return 1.0 + 0j if space.check_point(z) == space.check_point(w) else 0j
    if isinstance(space, WeightedHardy):
        z, w = space.check_point(z), space.check_point(w)
        q = space.beta * w.conjugate() * z
        if abs(q) >= 1.0:
            raise DomainError("kernel series diverges")
        return 1.0 / (1.0 - q)
    if isinstance(space, Fock):
        z, w = space.check_point(z), space.check_point(w)
        return complex(np.exp(space.alpha * np.sum(z * w.conj())))
    raise TypeError(f"unsupported space {space!r}")


def normalized_kernel_norm_sq(space: KernelSpace, w) -> float:
    """``||k_w||^2 = k_w(w)``, the factor that normalises ``k_w``."""
    return kernel_value(space, w, w).real


def hardy_kernel_coordinates(beta: float, lam: complex, order: int | None = None):
    """Coordinates of ``k_lam`` in the orthonormal basis ``z^n / beta_n``.

    Parameters
    ----------
    beta : float
        Weight parameter in ``(0, 1]``.
    lam : complex
        Point of the open unit disc.
    order : int, optional
        Fixed truncation order ``N``.  By default the smallest ``N`` whose
        geometric tail ``q^(N+1) / (1 - q)`` (``q = beta |lam|^2``) is below
        ``1e-12``, capped at 2000.

    Returns
    -------
    coords : ndarray
        ``c_n = (sqrt(beta) conj(lam))^n`` for ``n = 0 .. N``.
    tail : float
        Squared norm of the discarded part.
    """
    WeightedHardy(beta)
    lam = complex(lam)
    if not abs(lam) < 1.0:
        raise DomainError(f"point {lam} is outside the open unit disc")
    q = beta * abs(lam) ** 2
    if order is None:
        if q == 0.0:
            order = 0
        else:
            # smallest N with q^(N+1) < tol * (1 - q)
            order = max(0, math.ceil(math.log(HARDY_TAIL_TOL * (1.0 - q)) / math.log(q)) - 1)
            while q ** (order + 1) / (1.0 - q) >= HARDY_TAIL_TOL:
                order += 1
            while order > 0 and q**order / (1.0 - q) < HARDY_TAIL_TOL:
                order -= 1
            order = min(order, HARDY_MAX_ORDER)
    tail = q ** (order + 1) / (1.0 - q)
    coords = (math.sqrt(beta) * lam.conjugate()) ** np.arange(order + 1)
    return coords.astype(np.complex128), tail


def is_bounded_fock_symbol(a, b) -> tuple[bool, str]:
    """Test whether ``phi(z) = A z + B`` induces a bounded composition operator.

    The criterion is ``||A|| <= 1`` together with ``<A zeta, B> = 0`` for every
    ``zeta`` with ``|A zeta| = |zeta|``.
    """
    a = as_matrix(a, square=True)
    b = np.atleast_1d(np.asarray(b, dtype=np.complex128))
    if b.shape != (a.shape[0],):
        raise DimensionError(f"B has shape {b.shape}, expected ({a.shape[0]},)")
    norm = operator_norm(a)
    if norm > 1.0 + FOCK_UNIT_TOL:
        return False, f"||A|| = {norm:.6g} exceeds 1"
    eig = hermitian_eig(a.conj().T @ a)
    isometric = np.abs(eig.eigenvalues - 1.0) <= FOCK_UNIT_TOL
    for zeta in eig.vectors[:, isometric].T:
        inner = np.vdot(b, a @ zeta)
        if abs(inner) > FOCK_UNIT_TOL:
            return False, f"<A zeta, B> = {inner:.3g} on an isometric direction"
    if not np.any(isometric):
        return True, "A is a strict contraction"
    return True, "B is orthogonal to A applied to every isometric direction"


def parse_space(text: str) -> KernelSpace:
    """Parse ``finite:<n>``, ``hardy:<beta>`` or ``fock:<alpha>:<dim>``."""
    parts = text.strip().split(":")
    try:
        kind = parts[0].lower()
        if kind == "finite" and len(parts) == 2:
            return FiniteSpace(int(parts[1]))
        if kind == "hardy" and len(parts) == 2:
            return WeightedHardy(float(parts[1]))
        if kind == "fock" and len(parts) in (2, 3):
            dim = int(parts[2]) if len(parts) == 3 else 1
            return Fock(float(parts[1]), dim)
    except (ValueError, DomainError) as exc:
        raise InputError(f"bad space descriptor {text!r}: {exc}") from exc
    raise InputError(f"bad space descriptor {text!r}")
