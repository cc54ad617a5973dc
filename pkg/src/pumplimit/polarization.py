"""Pump polarization states.

The pump is described by its 2x2 coherency matrix of second-order field
moments ``J[a, b] = <E_a E_b*>`` (H first, then V), normalized to unit trace.
This module computes the degree of polarization, splits a pump into its fully
polarized and fully unpolarized parts, and embeds the 2x2 pump into the 4x4
space of photon-pair states so that one-photon and two-photon spectra can be
compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameterError
from .linalg import (
    _eigh_desc,
    _eigvalsh,
    as_matrix,
    dagger,
    phase_fixed,
    tensor,
    validate_density_matrix,
)

J_HERMITIAN_TOL = 1e-12
J_TRACE_TOL = 1e-12

#: below this pure-part weight the polarized direction is considered
#: degenerate and the convention vector (1, 0) is returned
_DEGENERATE_P = 1e-15


def validate_polarization_matrix(j) -> np.ndarray:
    """Check the coherency-matrix invariants; return its spectrum (desc)."""
    return validate_density_matrix(
        j, dim=2, herm_tol=J_HERMITIAN_TOL, trace_tol=J_TRACE_TOL
    )


def canonical_pump(p: float) -> np.ndarray:
    """Coherency matrix ``[[1/2, p/2], [p/2, 1/2]]``.

    Equal H/V power with a real, nonnegative cross moment; its degree of
    polarization is exactly ``p``.  This is the pump convention assumed by
    the analytic element formulas of the source simulator.
    """
    p = float(p)
    if not np.isfinite(p) or not 0.0 <= p <= 1.0:
        raise BadParameterError(f"degree of polarization must be in [0, 1], got {p!r}")
    return np.array([[0.5, p / 2.0], [p / 2.0, 0.5]], dtype=complex)


def degree_of_polarization(j) -> float:
    """Gap between the two coherency eigenvalues, in [0, 1].

    Basis-invariant: unchanged under ``J -> U J U^dag``.  Zero for fully
    unpolarized light, one for a pure polarization state.
    """
    w = validate_polarization_matrix(j)
    return float(min(max(w[0] - w[1], 0.0), 1.0))


@dataclass(frozen=True)
class PolarizationDecomposition:
    """Split of a pump into polarized and unpolarized parts.

    ``J = p |psi><psi| + (1 - p) I/2`` with ``p`` the degree of polarization
    and ``psi`` the unit eigenvector of the larger eigenvalue.
    """

    p: float
    pure_state: np.ndarray
    unpolarized_weight: float

    def reconstruct(self) -> np.ndarray:
        """The coherency matrix this decomposition represents."""
        psi = self.pure_state
        return self.p * np.outer(psi, np.conj(psi)) + self.unpolarized_weight * np.eye(2) / 2.0


def polar_decompose(j) -> PolarizationDecomposition:
    """Decompose a pump into its polarized and unpolarized parts.

    For an exactly unpolarized pump the polarized direction is arbitrary;
    the basis vector (1, 0) is returned by convention (its weight is zero,
    so the choice carries no physical content).
    """
    a = as_matrix(j, dims=(2,))
    validate_polarization_matrix(a)
    w, v = _eigh_desc((a + dagger(a)) / 2.0)
    p = float(min(max(w[0] - w[1], 0.0), 1.0))
    if p < _DEGENERATE_P:
        psi = np.array([1.0, 0.0], dtype=complex)
    else:
        psi = phase_fixed(v[:, 0])
    return PolarizationDecomposition(p=p, pure_state=psi, unpolarized_weight=1.0 - p)


@dataclass(frozen=True)
class EmbeddedPump:
    """4x4 embedding of the pump with its spectrum.

    ``sigma`` carries the coherency matrix in the top-left 2x2 block and
    zeros elsewhere, so its spectrum is ((1+P)/2, (1-P)/2, 0, 0).
    """

    sigma: np.ndarray
    spectrum: np.ndarray


def embed_pump(j) -> EmbeddedPump:
    """Embed a 2x2 pump into the 4x4 two-photon space."""
    a = as_matrix(j, dims=(2,))
    validate_polarization_matrix(a)
    sigma = tensor(np.diag([1.0, 0.0]), a)
    spectrum = _eigvalsh((sigma + dagger(sigma)) / 2.0)[::-1]
    return EmbeddedPump(sigma=sigma, spectrum=spectrum)
