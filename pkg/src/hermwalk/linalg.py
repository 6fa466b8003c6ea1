"""Dense complex-matrix kernel.

Hermitian eigendecomposition via cyclic Jacobi rotations, spectrally
computed unitary evolution operators, the closed-form exponential for
anticommuting pairs, and projection of a unitary onto the nearest
monomial matrix.  Matrix comparisons throughout the package use the
entrywise max-modulus norm so tolerances stay dimension independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NoConvergence,
    NotAnticommuting,
    NotHermitian,
    NotPositive,
    NotUnitary,
)
from .swaut import MonomialMatrix

_HERMITIAN_TOL = 1e-12
_JACOBI_THRESHOLD = 1e-13
_JACOBI_SWEEP_CAP = 100
_UNITARY_TOL = 1e-10
_RECONSTRUCTION_TOL = 1e-9


def max_abs(m: np.ndarray) -> float:
    """Entrywise max-modulus norm."""
    return float(np.max(np.abs(m))) if m.size else 0.0


def as_square_complex(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("matrix entries must be finite")
    return a


@dataclass(eq=False)
class SpectralDecomposition:
    """Eigenvalues (real, ascending) and a unitary matrix of eigenvectors.

    Column k of ``eigenvectors`` is the eigenvector for ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)


def hermitian_eigendecomposition(a) -> SpectralDecomposition:
    """Diagonalize a Hermitian matrix with cyclic two-sided Jacobi rotations.

    Deterministic for a fixed input: sweeps visit (p, q) pairs in ascending
    order, and each eigenvector column is rotated so that its
    largest-magnitude entry is real positive.  Raises NotHermitian when the
    input fails the symmetry check and NoConvergence if the off-diagonal
    mass has not dropped below threshold within the sweep cap.
    """
    a = as_square_complex(a)
    if max_abs(a - a.conj().T) > _HERMITIAN_TOL:
        raise NotHermitian("matrix is not Hermitian within 1e-12")
    n = a.shape[0]
    work = a.copy()
    vec = np.eye(n, dtype=complex)
    # threshold scales with the input magnitude so large spectra still converge
    scale = max(1.0, max_abs(a))
    thresh = _JACOBI_THRESHOLD * scale
    if n > 1:
        prev_fro = math.inf
        for _ in range(_JACOBI_SWEEP_CAP):
            off = work.copy()
            np.fill_diagonal(off, 0.0)
            off_max = max_abs(off)
            if off_max <= thresh:
                break
            # the off-diagonal mass decreases monotonically in exact
            # arithmetic, so a non-decreasing sweep means the rounding floor
            off_fro = float(np.linalg.norm(off))
            if off_fro >= prev_fro:
                if off_max <= 1e-9 * scale:
                    break
                raise NoConvergence("Jacobi stalled above the accuracy target")
            prev_fro = off_fro
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = work[p, q]
                    r = abs(apq)
                    if r <= thresh:
                        continue
                    theta = math.atan2(apq.imag, apq.real)
                    app = work[p, p].real
                    aqq = work[q, q].real
                    phi = 0.5 * math.atan2(2.0 * r, aqq - app)
                    c = math.cos(phi)
                    s = math.sin(phi)
                    ph = complex(math.cos(theta), -math.sin(theta))
                    rot = np.array([[c, s], [-s * ph, c * ph]], dtype=complex)
                    work[:, [p, q]] = work[:, [p, q]] @ rot
                    work[[p, q], :] = rot.conj().T @ work[[p, q], :]
                    vec[:, [p, q]] = vec[:, [p, q]] @ rot
        else:
            raise NoConvergence(f"Jacobi sweeps exceeded {_JACOBI_SWEEP_CAP}")
    eigenvalues = np.real(np.diag(work)).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vec = vec[:, order]
    # phase convention: largest-magnitude entry of each column real positive
    for k in range(n):
        j = int(np.argmax(np.abs(vec[:, k])))
        pivot = vec[j, k]
        vec[:, k] *= abs(pivot) / pivot
    sd = SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=vec)
    if max_abs(vec.conj().T @ vec - np.eye(n)) > _UNITARY_TOL:
        raise NoConvergence("eigenvector matrix failed the unitarity check")
    recon = (vec * eigenvalues) @ vec.conj().T
    if max_abs(recon - a) > _RECONSTRUCTION_TOL * max(1.0, max_abs(a)):
        raise NoConvergence("eigendecomposition failed the reconstruction check")
    return sd


def evolution_operator(sd: SpectralDecomposition, t: float) -> np.ndarray:
    """Unitary exp(-i t A) assembled from the spectral decomposition of A."""
    if not math.isfinite(t):
        raise ValueError("time must be finite")
    phases = np.exp(-1j * t * sd.eigenvalues)
    return (sd.eigenvectors * phases) @ sd.eigenvectors.conj().T


def anticommuting_exponential(a, b, t: float) -> np.ndarray:
    """exp(i t (A+B)) for anticommuting A, B with A^2 + B^2 positive definite.

    Because AB = -BA, even powers of A+B collapse to powers of M = A^2 + B^2,
    which gives exp(it(A+B)) = cos(t sqrt(M)) + i (A+B) M^(-1/2) sin(t sqrt(M)).
    The matrix functions are evaluated spectrally on the Hermitian M.
    """
    a = as_square_complex(a)
    b = as_square_complex(b)
    if a.shape != b.shape:
        raise ValueError("A and B must have the same shape")
    if not math.isfinite(t):
        raise ValueError("time must be finite")
    if max_abs(a @ b + b @ a) > 1e-10:
        raise NotAnticommuting("AB + BA is not zero within 1e-10")
    m = a @ a + b @ b
    sd = hermitian_eigendecomposition(m)
    if sd.eigenvalues[0] <= 1e-12:
        raise NotPositive("A^2 + B^2 must be positive definite")
    roots = np.sqrt(sd.eigenvalues)
    v = sd.eigenvectors
    cos_part = (v * np.cos(t * roots)) @ v.conj().T
    sinc_part = (v * (np.sin(t * roots) / roots)) @ v.conj().T
    return cos_part + 1j * (a + b) @ sinc_part


def nearest_monomial(u) -> tuple[MonomialMatrix | None, float]:
    """Project a unitary onto the closest monomial matrix.

    The candidate permutation sends column k to the row of its
    largest-magnitude entry.  If that map is not a bijection the result is
    (None, inf).  Otherwise the diagonal phases are read off the dominant
    entries and the residual is the max-modulus distance between u and the
    fitted monomial.  The returned monomial is the canonical projective
    representative; the residual refers to the best-phase fit.
    """
    u = as_square_complex(u)
    n = u.shape[0]
    if max_abs(u.conj().T @ u - np.eye(n)) > 1e-8:
        raise NotUnitary("input is not unitary within 1e-8")
    phi = [int(np.argmax(np.abs(u[:, k]))) for k in range(n)]
    if len(set(phi)) != n:
        return None, math.inf
    d = np.array([u[phi[k], k] for k in range(n)])
    d /= np.abs(d)
    fitted = np.zeros((n, n), dtype=complex)
    fitted[phi, range(n)] = d
    residual = max_abs(u - fitted)
    return MonomialMatrix(tuple(phi), d), residual
