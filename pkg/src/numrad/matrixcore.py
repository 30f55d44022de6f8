"""Dense complex matrix primitives used by everything else.

All functions accept anything ``np.asarray`` can turn into a 2-D complex
array and validate shape/finiteness up front, so downstream code never has
to re-check.  Matrices are plain ``complex128`` ndarrays; structured results
(eigen/SVD/polar factorizations) come back as small frozen dataclasses.

Conventions:

* the adjoint is written ``A*`` in docstrings and computed by `adjoint`,
* Hermitian eigenvalues are returned in ascending order,
* ``|A|`` always means the positive-semidefinite factor ``(A* A)^(1/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DomainViolationError,
    NotHermitianError,
    NotSquareError,
    SingularMatrixError,
)

__all__ = [
    "HermEigen",
    "SVDResult",
    "PolarParts",
    "as_cmatrix",
    "adjoint",
    "add",
    "sub",
    "matmul",
    "scale",
    "is_hermitian",
    "herm_eigen",
    "general_eigenvalues",
    "op_norm",
    "min_eig",
    "max_eig",
    "abs_op",
    "inverse",
    "svd_parts",
    "polar",
    "apply_fn",
    "block2x2",
]

# Relative tolerance for "is this Hermitian / inside the domain" decisions.
HERM_TOL = 1e-10
DOMAIN_TOL = 1e-10
# Singular values below this fraction of the largest are treated as zero.
INVERT_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class HermEigen:
    """Spectral factorization H = V diag(w) V* of a Hermitian matrix.

    ``eigenvalues`` is real and ascending; the columns of ``eigenvectors``
    form an orthonormal basis.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def compose(self, values: np.ndarray | None = None) -> np.ndarray:
        """Rebuild V diag(values) V*; defaults to the original eigenvalues."""
        w = self.eigenvalues if values is None else np.asarray(values)
        v = self.eigenvectors
        return (v * w) @ v.conj().T


@dataclass(frozen=True, eq=False)
class SVDResult:
    """Thin singular value decomposition A = U diag(s) Vh."""

    u: np.ndarray
    s: np.ndarray
    vh: np.ndarray


@dataclass(frozen=True, eq=False)
class PolarParts:
    """Polar decomposition A = unitary @ positive of a square matrix."""

    unitary: np.ndarray
    positive: np.ndarray


def as_cmatrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce input to a finite 2-D complex128 array.

    Raises DimensionMismatchError for wrong rank and ValueError for
    NaN/inf entries.  Lists of lists, real arrays and complex arrays are
    all accepted; the result is always a fresh C-ordered complex copy.
    """
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise DimensionMismatchError(
            f"{name} must be 2-D, got ndim={arr.ndim}"
        )
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return np.array(arr, order="C")


def _require_square(a: np.ndarray, name: str) -> None:
    if a.shape[0] != a.shape[1]:
        raise NotSquareError(f"{name} must be square, got shape {a.shape}")


def adjoint(a) -> np.ndarray:
    """Conjugate transpose A*."""
    return as_cmatrix(a, "A").conj().T


def add(a, b) -> np.ndarray:
    a = as_cmatrix(a, "A")
    b = as_cmatrix(b, "B")
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    return a + b


def sub(a, b) -> np.ndarray:
    a = as_cmatrix(a, "A")
    b = as_cmatrix(b, "B")
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    return a - b


def matmul(a, b) -> np.ndarray:
    a = as_cmatrix(a, "A")
    b = as_cmatrix(b, "B")
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(
            f"cannot multiply {a.shape} by {b.shape}"
        )
    return a @ b


def scale(c: complex, a) -> np.ndarray:
    return complex(c) * as_cmatrix(a, "A")


def is_hermitian(a, tol: float = HERM_TOL) -> bool:
    """True when ||A - A*||_F <= tol * (1 + ||A||_F)."""
    a = as_cmatrix(a, "A")
    if a.shape[0] != a.shape[1]:
        return False
    dev = np.linalg.norm(a - a.conj().T)
    return bool(dev <= tol * (1.0 + np.linalg.norm(a)))


def herm_eigen(h, tol: float = HERM_TOL) -> HermEigen:
    """Eigen-decompose a Hermitian matrix.

    The input may carry floating-point asymmetry up to
    ``tol * (1 + ||H||_F)``; it is symmetrized before the solve.  Anything
    worse raises NotHermitianError rather than silently projecting.
    """
    h = as_cmatrix(h, "H")
    _require_square(h, "H")
    if h.size == 0:
        return HermEigen(np.zeros(0), np.zeros((0, 0), dtype=np.complex128))
    dev = np.linalg.norm(h - h.conj().T)
    if dev > tol * (1.0 + np.linalg.norm(h)):
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {dev:.3e}"
        )
    sym = 0.5 * (h + h.conj().T)
    w, v = np.linalg.eigh(sym)
    return HermEigen(w, v)


def general_eigenvalues(a) -> np.ndarray:
    """Eigenvalues of an arbitrary square matrix (unordered, complex)."""
    a = as_cmatrix(a, "A")
    _require_square(a, "A")
    if a.size == 0:
        return np.zeros(0, dtype=np.complex128)
    return np.linalg.eigvals(a)


def op_norm(a) -> float:
    """Spectral norm: the largest singular value."""
    a = as_cmatrix(a, "A")
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def min_eig(h) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    e = herm_eigen(h)
    if e.eigenvalues.size == 0:
        raise NotSquareError("min_eig of an empty matrix is undefined")
    return float(e.eigenvalues[0])


def max_eig(h) -> float:
    """Largest eigenvalue of a Hermitian matrix."""
    e = herm_eigen(h)
    if e.eigenvalues.size == 0:
        raise NotSquareError("max_eig of an empty matrix is undefined")
    return float(e.eigenvalues[-1])


def abs_op(a) -> np.ndarray:
    """Modulus |A| = (A* A)^(1/2), positive semidefinite.

    Computed through the Hermitian eigendecomposition of A* A with
    negative round-off eigenvalues clipped to zero before the square
    root, so the result is PSD to machine precision.
    """
    a = as_cmatrix(a, "A")
    _require_square(a, "A")
    gram = a.conj().T @ a
    e = herm_eigen(gram, tol=1e-8)
    w = np.sqrt(np.clip(e.eigenvalues, 0.0, None))
    return e.compose(w)


def inverse(a) -> np.ndarray:
    """Inverse of a square matrix, guarded against ill-conditioning.

    Raises SingularMatrixError when the smallest singular value does not
    exceed ``1e-12 * ||A||``.
    """
    a = as_cmatrix(a, "A")
    _require_square(a, "A")
    if a.size == 0:
        return a.copy()
    u, s, vh = np.linalg.svd(a)
    if s[-1] <= INVERT_RTOL * s[0] or s[0] == 0.0:
        raise SingularMatrixError(
            f"matrix is numerically singular (smin={s[-1]:.3e}, smax={s[0]:.3e})"
        )
    return (vh.conj().T * (1.0 / s)) @ u.conj().T


def svd_parts(a) -> SVDResult:
    """Thin SVD wrapper returning an SVDResult."""
    a = as_cmatrix(a, "A")
    u, s, vh = np.linalg.svd(a, full_matrices=False)
    return SVDResult(u, s, vh)


def polar(a) -> PolarParts:
    """Polar decomposition A = U |A| with U unitary (square input).

    U = W Vh from the SVD A = W diag(s) Vh; this choice is unitary even
    when A is singular, unlike |A|^{-1}-based constructions.
    """
    a = as_cmatrix(a, "A")
    _require_square(a, "A")
    if a.size == 0:
        return PolarParts(a.copy(), a.copy())
    w, _, vh = np.linalg.svd(a)
    return PolarParts(w @ vh, abs_op(a))


def apply_fn(h, fn, domain: tuple[float, float] | None = None,
             name: str = "fn") -> np.ndarray:
    """Hermitian functional calculus: V diag(fn(w)) V*.

    ``fn`` must accept a real eigenvalue vector.  When ``domain`` is
    given, eigenvalues may stray outside it by at most
    ``1e-10 * max(1, ||H||)`` (they are clamped back to the closed
    interval before evaluation); beyond that DomainViolationError is
    raised.
    """
    e = herm_eigen(h)
    w = e.eigenvalues
    if domain is not None and w.size:
        lo, hi = domain
        slack = DOMAIN_TOL * max(1.0, float(np.max(np.abs(w))))
        if np.min(w) < lo - slack or np.max(w) > hi + slack:
            raise DomainViolationError(
                f"spectrum [{np.min(w):.6g}, {np.max(w):.6g}] leaves the "
                f"domain [{lo:.6g}, {hi:.6g}] of {name}"
            )
        w = np.clip(w, lo, hi if np.isfinite(hi) else None)
    vals = np.asarray(fn(w), dtype=float)
    if vals.shape != w.shape:
        raise ValueError(f"{name} must map eigenvalues elementwise")
    return e.compose(vals)


def block2x2(a, b, c, d) -> np.ndarray:
    """Assemble [[A, B], [C, D]] with conformability checks."""
    a, b = as_cmatrix(a, "A"), as_cmatrix(b, "B")
    c, d = as_cmatrix(c, "C"), as_cmatrix(d, "D")
    if a.shape[0] != b.shape[0] or c.shape[0] != d.shape[0]:
        raise DimensionMismatchError("row blocks must share heights")
    if a.shape[1] != c.shape[1] or b.shape[1] != d.shape[1]:
        raise DimensionMismatchError("column blocks must share widths")
    return np.block([[a, b], [c, d]])
