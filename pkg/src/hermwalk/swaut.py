"""Switching automorphisms of Hermitian graphs.

A monomial matrix is a permutation matrix times a unit-modulus diagonal.
The monomials commuting with an adjacency matrix form the switching
automorphism group; modulo global phase that group is finite, and this
module enumerates it and reports its structure (abelian, cyclic, order,
fixed points).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, DisconnectedSupport

_UNIT_TOL = 1e-12
_PROJ_TOL = 1e-9


@dataclass(eq=False)
class MonomialMatrix:
    """Permutation plus unit-modulus column phases, in canonical projective form.

    The matrix acts as e_k -> phases[k] * e_perm[k].  The global phase is
    quotiented out by rescaling so that the phase at the smallest index k
    with perm[k] != k (or index 0 for the identity permutation) equals 1.
    """

    perm: tuple[int, ...]
    phases: np.ndarray

    def __post_init__(self):
        self.perm = tuple(int(p) for p in self.perm)
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm is not a bijection on 0..n-1")
        ph = np.asarray(self.phases, dtype=complex).copy()
        if ph.shape != (n,):
            raise ValueError("phases must have one entry per column")
        mags = np.abs(ph)
        if np.max(np.abs(mags - 1.0)) > _UNIT_TOL:
            raise ValueError("phases must have unit modulus")
        ph /= mags
        anchor = next((k for k in range(n) if self.perm[k] != k), 0)
        ph /= ph[anchor]
        self.phases = ph

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "MonomialMatrix":
        return cls(tuple(range(n)), np.ones(n, dtype=complex))

    def is_identity_class(self, tol: float = _PROJ_TOL) -> bool:
        if self.perm != tuple(range(self.n)):
            return False
        return float(np.max(np.abs(self.phases - self.phases[0]))) <= tol

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=complex)
        m[list(self.perm), range(self.n)] = self.phases
        return m

    def inverse(self) -> "MonomialMatrix":
        n = self.n
        inv = [0] * n
        for k, p in enumerate(self.perm):
            inv[p] = k
        phases = np.conj(self.phases[inv])
        return MonomialMatrix(tuple(inv), phases)


def compose(m1: MonomialMatrix, m2: MonomialMatrix) -> MonomialMatrix:
    """Product of two monomials: apply m2 first, then m1.

    matrix(compose(m1, m2)) equals matrix(m1) @ matrix(m2) up to the global
    phase removed by canonicalization.
    """
    if m1.n != m2.n:
        raise DimensionMismatch(f"dimensions differ: {m1.n} vs {m2.n}")
    perm = tuple(m1.perm[p] for p in m2.perm)
    phases = m1.phases[list(m2.perm)] * m2.phases
    return MonomialMatrix(perm, phases)


def projectively_equal(m1: MonomialMatrix, m2: MonomialMatrix, tol: float = _PROJ_TOL) -> bool:
    if m1.perm != m2.perm:
        return False
    return float(np.max(np.abs(m1.phases - m2.phases))) <= tol


def projective_order(m: MonomialMatrix, cap: int | None = None) -> int:
    """Smallest k >= 1 with m^k projectively equal to the identity."""
    if cap is None:
        cap = 2 * m.n
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity_class():
            return k
        acc = compose(acc, m)
    raise RuntimeError("projective order exceeded cap; element is not torsion at this size")


@dataclass(eq=False)
class SwitchingGroup:
    """Enumerated switching automorphism group, modulo global phase."""

    elements: list[MonomialMatrix]
    order: int
    is_abelian: bool
    is_cyclic: bool
    generator_index: int | None


@dataclass(eq=False)
class StructureReport:
    order: int
    is_abelian: bool
    order_divides_n: bool
    is_cyclic: bool
    fixed_point_counts: list[int] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)


def _support_components(adj: np.ndarray) -> int:
    n = adj.shape[0]
    seen = [False] * n
    comps = 0
    for start in range(n):
        if seen[start]:
            continue
        comps += 1
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            for v in range(n):
                if v != u and not seen[v] and adj[u, v] != 0:
                    seen[v] = True
                    stack.append(v)
    return comps


def _spanning_tree_order(adj: np.ndarray) -> list[tuple[int, int]]:
    """BFS tree edges (parent, child) over the nonzero off-diagonal support."""
    n = adj.shape[0]
    seen = [False] * n
    seen[0] = True
    queue = [0]
    edges = []
    while queue:
        u = queue.pop(0)
        for v in range(n):
            if v != u and not seen[v] and adj[u, v] != 0:
                seen[v] = True
                edges.append((u, v))
                queue.append(v)
    return edges


def _row_signature(adj: np.ndarray, u: int) -> tuple[float, np.ndarray]:
    mags = np.abs(adj[u])
    off = np.sort(np.delete(mags, u))
    return float(adj[u, u].real), off


def _signatures_match(s1, s2, tol: float) -> bool:
    d1, m1 = s1
    d2, m2 = s2
    return abs(d1 - d2) <= tol and bool(np.all(np.abs(m1 - m2) <= tol))


def _monomial_search(a_from: np.ndarray, a_to: np.ndarray, phase_tol: float, find_all: bool):
    """Backtracking search for monomials M with M @ a_from = a_to @ M.

    For a_from == a_to these are the switching automorphisms; for two
    different matrices they witness a switching isomorphism
    a_from = M^dagger a_to M.  Permutation candidates are pruned by
    per-vertex magnitude signatures, phases are propagated along a
    spanning tree of the source support graph with d[0] = 1, and every
    entry of the defining identity is verified before a candidate is
    accepted.  Deterministic: vertices are processed most-constrained
    first (ties by index) and candidate targets in ascending order.
    """
    n = a_from.shape[0]
    mag_tol = 1e-9
    sig_from = [_row_signature(a_from, u) for u in range(n)]
    sig_to = [_row_signature(a_to, u) for u in range(n)]
    pools = [
        [w for w in range(n) if _signatures_match(sig_from[u], sig_to[w], mag_tol)]
        for u in range(n)
    ]
    if any(not pool for pool in pools):
        return []
    order = sorted(range(n), key=lambda u: (len(pools[u]), u))
    tree = _spanning_tree_order(a_from)
    results = []
    phi = [-1] * n
    used = [False] * n

    def consistent(u: int, w: int) -> bool:
        if abs(a_from[u, u] - a_to[w, w]) > mag_tol:
            return False
        for v in range(n):
            x = phi[v]
            if x < 0 or v == u:
                continue
            if (a_from[u, v] != 0) != (a_to[w, x] != 0):
                return False
            if abs(abs(a_from[u, v]) - abs(a_to[w, x])) > mag_tol:
                return False
        return True

    def accept() -> bool:
        d = np.zeros(n, dtype=complex)
        d[0] = 1.0
        for u, v in tree:
            denom = a_to[phi[u], phi[v]]
            if denom == 0:
                return False
            d[v] = d[u] * a_from[u, v] / denom
        mags = np.abs(d)
        if np.any(mags == 0):
            return False
        d /= mags
        # full verification: d_u * a_from[u,v] == a_to[phi(u),phi(v)] * d_v
        lhs = d[:, None] * a_from
        rhs = a_to[np.ix_(phi, phi)] * d[None, :]
        if float(np.max(np.abs(lhs - rhs))) > phase_tol:
            return False
        results.append(MonomialMatrix(tuple(phi), d))
        return True

    def backtrack(depth: int) -> bool:
        if depth == n:
            found = accept()
            return found and not find_all
        u = order[depth]
        for w in pools[u]:
            if used[w] or not consistent(u, w):
                continue
            phi[u] = w
            used[w] = True
            if backtrack(depth + 1):
                return True
            phi[u] = -1
            used[w] = False
        return False

    backtrack(0)
    return results


def enumerate_switching_automorphisms(g, phase_tol: float = 1e-9) -> SwitchingGroup:
    """Enumerate all monomials commuting with g.adjacency, modulo global phase.

    The support graph must be connected; otherwise the phase propagation is
    underdetermined and the projective group is not finite.
    """
    adj = np.asarray(g.adjacency, dtype=complex)
    n = adj.shape[0]
    if _support_components(adj) > 1:
        raise DisconnectedSupport("support graph has more than one component")
    elements = _monomial_search(adj, adj, phase_tol, find_all=True)
    elements.sort(key=lambda m: m.perm)
    order = len(elements)
    is_abelian = all(
        projectively_equal(compose(e1, e2), compose(e2, e1))
        for i, e1 in enumerate(elements)
        for e2 in elements[i + 1 :]
    )
    generator_index = None
    for i, e in enumerate(elements):
        if projective_order(e) == order:
            generator_index = i
            break
    return SwitchingGroup(
        elements=elements,
        order=order,
        is_abelian=is_abelian,
        is_cyclic=generator_index is not None,
        generator_index=generator_index,
    )


def is_switching_isomorphic(g1, g2, phase_tol: float = 1e-9) -> MonomialMatrix | None:
    """Witness M with A(g2) = M^dagger A(g1) M, or None if no monomial works."""
    a1 = np.asarray(g1.adjacency, dtype=complex)
    a2 = np.asarray(g2.adjacency, dtype=complex)
    if a1.shape != a2.shape:
        raise DimensionMismatch("graphs must have the same number of vertices")
    if _support_components(a1) > 1 or _support_components(a2) > 1:
        raise DisconnectedSupport("support graphs must be connected")
    found = _monomial_search(a2, a1, phase_tol, find_all=False)
    return found[0] if found else None


def structure_report(group: SwitchingGroup, n: int, upgst_evidence: bool = False) -> StructureReport:
    """Check the group against the structural constraints that universal
    state transfer forces: abelian, order dividing n, and no fixed points
    in non-identity elements.  With upgst_evidence set, violations are
    listed explicitly (a numerical alarm, not a proof of anything).
    """
    divides = group.order > 0 and n % group.order == 0
    fixed_counts = []
    for e in group.elements:
        if e.is_identity_class():
            continue
        fixed_counts.append(sum(1 for k, p in enumerate(e.perm) if p == k))
    violations = []
    if upgst_evidence:
        if not group.is_abelian:
            violations.append("group is not abelian despite universal transfer evidence")
        if not divides:
            violations.append(f"group order {group.order} does not divide n={n}")
        if any(c > 0 for c in fixed_counts):
            violations.append("a non-identity element has a fixed point")
    return StructureReport(
        order=group.order,
        is_abelian=group.is_abelian,
        order_divides_n=divides,
        is_cyclic=group.is_cyclic,
        fixed_point_counts=fixed_counts,
        violations=violations,
    )


def format_group(group: SwitchingGroup) -> str:
    """Plain-text rendering: order, flags, one line per element."""
    lines = [
        f"order={group.order} abelian={group.is_abelian} cyclic={group.is_cyclic}"
    ]
    for e in group.elements:
        cycles = _cycle_notation(e.perm)
        ph = " ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in e.phases)
        lines.append(f"  {cycles} phases=[{ph}]")
    return "\n".join(lines)


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        v = perm[start]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = perm[v]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "id"
