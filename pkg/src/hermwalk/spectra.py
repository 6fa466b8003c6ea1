"""Spectral necessary-condition checks for universal state transfer.

Closed-form circulant spectra, eigenvalue simplicity, flatness of the
eigenbasis, rationality of eigenvalue ratios, and the phase-forcing
inequality behind near-unit-modulus convex combinations of unit phasors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonRealEigenvalue, NotHermitianCirculant, TraceNotZero, WeightsInvalid
from .linalg import SpectralDecomposition

_HERMITIAN_TOL = 1e-12


def circulant_eigenvalues(weights) -> np.ndarray:
    """Eigenvalues lambda_k = sum_j a_j omega^(jk) of a Hermitian circulant,
    in Fourier index order k = 0..n-1 (not sorted)."""
    w = np.asarray(weights, dtype=complex)
    n = len(w)
    if abs(w[0].imag) > _HERMITIAN_TOL:
        raise NotHermitianCirculant("weights[0] must be real")
    for k in range(1, n):
        if abs(w[(n - k) % n] - np.conj(w[k])) > _HERMITIAN_TOL:
            raise NotHermitianCirculant(f"weights[{n - k}] must conjugate weights[{k}]")
    lam = n * np.fft.ifft(w)
    if float(np.max(np.abs(lam.imag))) > 1e-10:
        raise NonRealEigenvalue("circulant eigenvalues acquired imaginary parts")
    return lam.real.copy()


def eigenvalue_simplicity(sd: SpectralDecomposition, gap_tol: float = 1e-8) -> tuple[bool, float]:
    """Minimum gap between adjacent sorted eigenvalues; simple when it
    exceeds gap_tol."""
    if sd.n < 2:
        return True, math.inf
    min_gap = float(np.min(np.diff(sd.eigenvalues)))
    return min_gap > gap_tol, min_gap


def flat_eigenbasis_check(sd: SpectralDecomposition, tol: float = 1e-8) -> tuple[bool, float]:
    """Whether every eigenvector entry has modulus 1/sqrt(n).

    Only meaningful when the eigenvalues are simple; with degeneracies the
    eigenbasis is not unique and this reports on the basis provided.
    """
    target = 1.0 / math.sqrt(sd.n)
    deviation = float(np.max(np.abs(np.abs(sd.eigenvectors) - target)))
    return deviation <= tol, deviation


@dataclass(eq=False)
class RatioEntry:
    j: int
    k: int
    value: float
    numerator: int | None
    denominator: int | None
    rational: bool


@dataclass(eq=False)
class RatioReport:
    entries: list[RatioEntry]
    all_rational: bool


def _reconstruct_fraction(x: float, max_den: int, tol: float) -> tuple[int, int] | None:
    frac = Fraction(x).limit_denominator(max_den)
    if abs(x - float(frac)) <= tol:
        return frac.numerator, frac.denominator
    return None


def eigenvalue_ratio_rationality(
    sd: SpectralDecomposition, max_den: int = 10**4, tol: float = 1e-9
) -> RatioReport:
    """Test whether every ratio lambda_j / lambda_k (nonzero denominator) is
    rational, via continued-fraction reconstruction with a denominator cap.

    Requires a traceless matrix (the hypothesis under which the rationality
    of the ratios is a necessary condition).  Pairs with |lambda_k| <= tol
    are skipped since the zero-denominator case carries no information here.
    """
    lam = sd.eigenvalues
    if abs(float(np.sum(lam))) > 1e-9:
        raise TraceNotZero("eigenvalues do not sum to zero within 1e-9")
    nonzero = [k for k in range(len(lam)) if abs(lam[k]) > tol]
    if not nonzero:
        raise ValueError("need at least one eigenvalue with modulus above tol")
    entries = []
    all_rational = True
    for k in nonzero:
        for j in range(len(lam)):
            if j == k:
                continue
            ratio = float(lam[j] / lam[k])
            rec = _reconstruct_fraction(ratio, max_den, tol)
            if rec is None:
                entries.append(RatioEntry(j, k, ratio, None, None, False))
                all_rational = False
            else:
                entries.append(RatioEntry(j, k, ratio, rec[0], rec[1], True))
    return RatioReport(entries=entries, all_rational=all_rational)


def phase_alignment(coefficients, tol: float) -> tuple[bool, float]:
    """Given positive weights beta_k summing to 1 and angles alpha_k, decide
    whether |sum beta_k exp(i alpha_k)| is within tol of 1 and report the
    maximum circular distance between any two angles.

    When the modulus is that close to 1, the pairwise inequality
    sum_{j<k} beta_j beta_k (1 - cos(alpha_j - alpha_k)) < tol forces all
    angles together: the spread is bounded by sqrt(2 tol / min beta_j beta_k).
    """
    betas = np.array([float(b) for b, _ in coefficients])
    alphas = np.array([float(a) for _, a in coefficients])
    if len(betas) == 0:
        raise WeightsInvalid("need at least one coefficient")
    if np.any(betas <= 0):
        raise WeightsInvalid("all weights must be positive")
    if abs(float(np.sum(betas)) - 1.0) > 1e-12:
        raise WeightsInvalid("weights must sum to 1 within 1e-12")
    s = abs(complex(np.sum(betas * np.exp(1j * alphas))))
    aligned = s >= 1.0 - tol
    spread = 0.0
    if len(alphas) > 1:
        diff = np.abs(alphas[:, None] - alphas[None, :]) % (2.0 * math.pi)
        circ = np.minimum(diff, 2.0 * math.pi - diff)
        spread = float(np.max(circ))
    if aligned and len(betas) > 1:
        # exact consequence of s >= 1 - tol: the weighted cosine defect
        # sum_{j<k} beta_j beta_k (1 - cos(alpha_j - alpha_k)) = (1 - s^2)/2
        gap = alphas[:, None] - alphas[None, :]
        iu = np.triu_indices(len(betas), k=1)
        defect = float(np.sum(np.outer(betas, betas)[iu] * (1.0 - np.cos(gap[iu]))))
        assert defect <= tol + 1e-15, "cosine defect exceeds tol despite alignment"
    return aligned, spread
