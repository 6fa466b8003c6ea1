"""Integer utilities and a bounded integer-relation heuristic.

The relation detector searches for a nonzero integer vector a with
|sum a_k x_k| below a tolerance, using size-reduction plus Lovasz swaps on
the classic integer-relation lattice.  A miss is evidence of rational
independence, never a proof; the verdict is labeled accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd  # re-exported: standard Euclid

import numpy as np

__all__ = [
    "gcd",
    "modular_inverse",
    "integer_relation",
    "independence_screen",
    "IndependenceReport",
]

_LOVASZ_DELTA = 0.75
_FALLBACK_BOUND = 50


def modular_inverse(j: int, n: int) -> int | None:
    """Inverse of j modulo n, or None when gcd(j, n) != 1."""
    if n < 1:
        raise ValueError("modulus must be positive")
    try:
        return pow(int(j), -1, int(n))
    except ValueError:
        return None


def _lll_reduce(basis: np.ndarray, delta: float = _LOVASZ_DELTA) -> np.ndarray:
    """Floating-point LLL on the rows of `basis` (small dimensions only).

    The Gram-Schmidt data is recomputed from scratch after every change;
    wasteful but robust, and the lattices here have at most nine rows.
    """
    b = basis.astype(float).copy()
    rows = b.shape[0]

    def gso():
        star = np.zeros_like(b)
        mu = np.zeros((rows, rows))
        for i in range(rows):
            star[i] = b[i]
            for j in range(i):
                denom = star[j] @ star[j]
                mu[i, j] = (b[i] @ star[j]) / denom if denom > 0 else 0.0
                star[i] = star[i] - mu[i, j] * star[j]
        return star, mu

    star, mu = gso()
    k = 1
    guard = 0
    while k < rows:
        guard += 1
        if guard > 100_000:
            break
        for j in range(k - 1, -1, -1):
            if abs(mu[k, j]) > 0.5:
                b[k] = b[k] - round(mu[k, j]) * b[j]
                star, mu = gso()
        lhs = star[k] @ star[k]
        rhs = (delta - mu[k, k - 1] ** 2) * (star[k - 1] @ star[k - 1])
        if lhs >= rhs:
            k += 1
        else:
            b[[k - 1, k]] = b[[k, k - 1]]
            star, mu = gso()
            k = max(k - 1, 1)
    return b


def _normalize_sign(a: np.ndarray) -> np.ndarray:
    for x in a:
        if x != 0:
            return a if x > 0 else -a
    return a


def _exhaustive_relation(xs: np.ndarray, bound: int, tol: float) -> np.ndarray | None:
    """Brute force over small coefficient boxes, m <= 3 only."""
    m = len(xs)
    axes = [np.arange(-bound, bound + 1)] * m
    grids = np.meshgrid(*axes, indexing="ij")
    coeffs = np.stack([g.ravel() for g in grids], axis=1)
    sums = coeffs @ xs
    hit = np.abs(sums) <= tol
    hit &= np.any(coeffs != 0, axis=1)
    idx = np.flatnonzero(hit)
    if len(idx) == 0:
        return None
    # smallest by max-coefficient, then lexicographic, for determinism
    cand = coeffs[idx]
    order = np.lexsort(tuple(cand[:, i] for i in range(m - 1, -1, -1)))
    cand = cand[order]
    best = min(range(len(cand)), key=lambda i: (int(np.max(np.abs(cand[i]))), i))
    return _normalize_sign(cand[best].astype(int))


def _lattice_relation(xs: np.ndarray, coeff_bound: int, tol: float) -> np.ndarray | None:
    m = len(xs)
    if m == 0:
        return None
    if m == 1:
        # a*x = 0 with |x| > tol is impossible for integer a != 0 and |a| >= 1
        if abs(xs[0]) <= tol:
            return np.array([1])
        return None
    scale = 1.0 / tol
    basis = np.hstack([np.eye(m), (xs * scale)[:, None]])
    reduced = _lll_reduce(basis)
    norms = np.einsum("ij,ij->i", reduced, reduced)
    candidates = []
    for i in np.argsort(norms, kind="stable"):
        a = np.rint(reduced[i, :m]).astype(np.int64)
        if not np.any(a):
            continue
        if np.max(np.abs(a)) > coeff_bound:
            continue
        if abs(float(a @ xs)) <= tol:
            candidates.append(_normalize_sign(a.astype(int)))
    if candidates:
        return candidates[0]
    if m <= 3:
        return _exhaustive_relation(xs, min(_FALLBACK_BOUND, coeff_bound), tol)
    return None


def integer_relation(xs, coeff_bound: int, tol: float) -> list[int] | None:
    """Nonzero integers a with |a_k| <= coeff_bound and |sum a_k x_k| <= tol,
    or None when the lattice search (plus an exhaustive fallback for up to
    three values) finds nothing."""
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 1:
        raise ValueError("xs must be a 1-d array")
    if len(xs) > 8:
        raise ValueError("at most 8 values supported")
    if coeff_bound < 1 or coeff_bound > 10**6:
        raise ValueError("coeff_bound must be in [1, 10^6]")
    if tol <= 0:
        raise ValueError("tol must be positive")
    result = _lattice_relation(xs, coeff_bound, tol)
    return None if result is None else [int(v) for v in result]


@dataclass(eq=False)
class IndependenceReport:
    likely_independent: bool
    relation: list[int] | None
    values: np.ndarray
    residual: float | None


def independence_screen(eigs, tol: float = 1e-10) -> IndependenceReport:
    """Heuristic rational-independence screen for a set of eigenvalues.

    Exact duplicates and values within tol of zero are dropped before the
    lattice search (coefficient bound 10^4).  The screened set may exceed
    the public integer_relation size cap; the search itself has no such
    limit, only a reliability one.
    """
    values = np.unique(np.asarray(eigs, dtype=float))
    values = values[np.abs(values) > tol]
    if len(values) == 0:
        return IndependenceReport(True, None, values, None)
    relation = _lattice_relation(values, 10**4, tol)
    if relation is None:
        return IndependenceReport(True, None, values, None)
    residual = abs(float(np.asarray(relation, dtype=float) @ values))
    return IndependenceReport(False, [int(v) for v in relation], values, residual)
