"""Dense complex linear algebra for 2x2 and 4x4 matrices.

Matrices are plain numpy arrays of dtype complex128.  Everything here is a
pure function of its inputs; randomness is always routed through an explicit
seed or generator.  Helpers marked stack-aware accept arrays of shape
``(..., n, n)`` and operate on the trailing two axes.

The deterministic generator used throughout the package is numpy's Philox
(4x64, 10 rounds), keyed directly by the user-supplied seed, so streams are
reproducible across platforms and processes.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    BadDimensionError,
    BadParameterError,
    DimensionMismatchError,
    InvalidDensityMatrixError,
    InvalidSpectrumError,
    NoConvergenceError,
    NotHermitianError,
    NotPSDError,
)

SUPPORTED_DIMS = (2, 4)

#: default max-norm budget for Hermiticity preconditions
HERMITIAN_TOL = 1e-10
#: eigenvalues in [-PSD_TOL, 0) are rounding noise and clamp to zero;
#: anything below -PSD_TOL is treated as genuinely invalid input
PSD_TOL = 1e-10
#: identifier of the deterministic RNG (fixed; part of the CLI version string)
RNG_ALGORITHM = "philox4x64-10"


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose; stack-aware (swaps the last two axes)."""
    return np.conj(np.swapaxes(a, -1, -2))


def max_abs(a) -> float:
    """Largest entry magnitude (entrywise max norm)."""
    return float(np.max(np.abs(a)))


def as_matrix(m, dims: tuple[int, ...] = SUPPORTED_DIMS) -> np.ndarray:
    """Coerce ``m`` to a square complex array of a supported dimension."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in dims:
        raise DimensionMismatchError(
            f"unsupported dimension {a.shape[0]}, expected one of {dims}"
        )
    return a


def hermiticity_defect(m) -> float:
    """Max-norm distance from ``m`` to its conjugate transpose."""
    a = np.asarray(m, dtype=complex)
    return max_abs(a - dagger(a))


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_defect(m) <= tol


def _eigh(a):
    """numpy eigh with the convergence failure mapped to NoConvergenceError."""
    try:
        return np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def _eigvalsh(a):
    try:
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def _eigh_desc(a):
    """Eigenvalues sorted non-ascending with matching eigenvector columns."""
    w, v = _eigh(a)
    return w[..., ::-1], v[..., :, ::-1]


def hermitian_eig(m, tol: float = HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : array_like
        Square matrix of dimension 2 or 4, Hermitian within ``tol``.
    tol : float
        Allowed max-norm Hermiticity defect.

    Returns
    -------
    (values, vectors)
        Real eigenvalues sorted non-ascending and the matching eigenvector
        columns of a unitary matrix, so ``m = vectors @ diag(values) @
        vectors^dag`` up to rounding.
    """
    a = as_matrix(m)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitianError(
            f"hermiticity defect {defect:.3e} exceeds tolerance {tol:.3e}"
        )
    return _eigh_desc((a + dagger(a)) / 2.0)


def clamp_spectrum(w, floor: float = PSD_TOL) -> np.ndarray:
    """Zero out small negative eigenvalues; reject genuinely negative ones."""
    w = np.asarray(w, dtype=float)
    low = float(np.min(w))
    if low < -floor:
        raise NotPSDError(f"eigenvalue {low:.3e} below -{floor:.0e}")
    return np.where(w < 0.0, 0.0, w)


def sqrt_psd(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix."""
    w, v = hermitian_eig(m, tol=tol)
    root = (v * np.sqrt(clamp_spectrum(w))) @ dagger(v)
    return (root + dagger(root)) / 2.0


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices.

    Row-major block convention: ``out[2i+k, 2j+l] = a[i, j] * b[k, l]``.
    """
    a = as_matrix(a, dims=(2,))
    b = as_matrix(b, dims=(2,))
    return np.kron(a, b)


def generator_from_seed(seed: int) -> np.random.Generator:
    """Deterministic generator: Philox keyed directly by ``seed``."""
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool) or seed < 0:
        raise BadParameterError(f"seed must be a nonnegative integer, got {seed!r}")
    return np.random.Generator(np.random.Philox(key=int(seed)))


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary drawn from an existing generator.

    Ginibre matrix, QR factorization, then each column rescaled by the unit
    phase of the corresponding R diagonal entry (the phase correction that
    makes plain QR output Haar-uniform).
    """
    if dim not in SUPPORTED_DIMS:
        raise BadDimensionError(f"dim must be one of {SUPPORTED_DIMS}, got {dim}")
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z / np.sqrt(2.0))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_haar_unitary(dim: int, seed: int) -> np.ndarray:
    """Seeded Haar-random unitary; identical output for identical (dim, seed)."""
    return haar_unitary(dim, generator_from_seed(seed))


def phase_fixed(v) -> np.ndarray:
    """Rescale a vector's global phase so its largest entry is real >= 0."""
    v = np.asarray(v, dtype=complex)
    k = int(np.argmax(np.abs(v)))
    mag = abs(v[k])
    if mag == 0.0:
        return v.copy()
    return v * (np.conj(v[k]) / mag)


def validate_density_matrix(
    m,
    dim: int | None = None,
    herm_tol: float = HERMITIAN_TOL,
    trace_tol: float = 1e-10,
    eig_floor: float = PSD_TOL,
) -> np.ndarray:
    """Check the density-matrix invariants and return the spectrum.

    Verifies Hermiticity, unit trace and positive semidefiniteness (within
    ``eig_floor``); returns the eigenvalues sorted non-ascending.  Raises
    InvalidDensityMatrixError on any violation.
    """
    a = as_matrix(m)
    if dim is not None and a.shape[0] != dim:
        raise DimensionMismatchError(f"expected a {dim}x{dim} matrix, got {a.shape}")
    defect = hermiticity_defect(a)
    if defect > herm_tol:
        raise InvalidDensityMatrixError(
            f"not Hermitian: defect {defect:.3e} exceeds {herm_tol:.1e}"
        )
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > trace_tol:
        raise InvalidDensityMatrixError(f"trace {tr:.12g} is not 1 within {trace_tol:.1e}")
    w = _eigvalsh((a + dagger(a)) / 2.0)[::-1]
    if w[-1] < -eig_floor:
        raise InvalidDensityMatrixError(f"negative eigenvalue {w[-1]:.3e}")
    return w


def validate_spectrum(values, dim: int = 4, tol: float = 1e-10) -> np.ndarray:
    """Validate a density-matrix spectrum.

    Requires exactly ``dim`` values, sorted non-ascending, nonnegative and
    summing to one within ``tol``.  Returns the values as floats with any
    negative rounding noise clamped to zero.
    """
    w = np.asarray(values, dtype=float).reshape(-1)
    if w.size != dim:
        raise InvalidSpectrumError(f"expected {dim} values, got {w.size}")
    if not np.all(np.isfinite(w)):
        raise InvalidSpectrumError("spectrum contains non-finite values")
    if np.any(np.diff(w) > 0.0):
        raise InvalidSpectrumError("values are not sorted non-ascending")
    if w[-1] < -tol:
        raise InvalidSpectrumError(f"negative weight {w[-1]:.3e}")
    total = float(w.sum())
    if abs(total - 1.0) > tol:
        raise InvalidSpectrumError(f"sum {total:.12g} is not 1 within {tol:.1e}")
    return np.where(w < 0.0, 0.0, w)
