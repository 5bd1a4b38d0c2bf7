"""Solving the relative norm equation x * conj(x) = mu over Q(zeta_n).

``mu`` lies in the real subfield.  Only exact desk-scale strategies are
offered; when they all fail the solver says so instead of guessing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclofield import Cyclotomic, real_subfield_basis, totient
from .cyclolinalg import CycMatrix, kernel, solve
from .errors import InternalInvariantViolation, NormEquationNotSolved

DEFAULT_BOUND = 4
DEFAULT_MAX_CANDIDATES = 2_000_000

RATIONAL_SQUARE = "rational_square"
REAL_SQRT_SEARCH = "real_sqrt_search"
BOUNDED_SEARCH = "bounded_search"
ODD_DEGREE = "odd_degree_closed_form"
STABLE_SUBSPACE = "stable_subspace"

STRATEGIES = (RATIONAL_SQUARE, REAL_SQRT_SEARCH, BOUNDED_SEARCH, ODD_DEGREE, STABLE_SUBSPACE)


@dataclass(frozen=True)
class NormSolution:
    x: Cyclotomic
    strategy: str

    def check(self, mu: Cyclotomic) -> bool:
        return self.x * self.x.conj() == mu


def _verified(x: Cyclotomic, mu: Cyclotomic, strategy: str) -> NormSolution:
    sol = NormSolution(x, strategy)
    if not sol.check(mu):
        raise InternalInvariantViolation(f"{strategy} produced x with N(x) != {mu}")
    return sol


def _as_field_element(mu, conductor: int | None) -> Cyclotomic:
    if not isinstance(mu, Cyclotomic):
        return Cyclotomic.rational(mu, conductor or 1)
    if conductor is not None and conductor != mu.conductor:
        return mu.lift(conductor)
    return mu


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def solve_norm(
    mu,
    conductor: int | None = None,
    bound: int = DEFAULT_BOUND,
    denominators=None,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> NormSolution:
    """Find x in Q(zeta_n) with x * conj(x) == mu.

    Strategies, in order: mu a rational square; y in the real subfield with
    y^2 == mu, y = (integer combination of the real basis)/D; finally
    x = (sum a_i z^i)/D.  Coordinates range over [-bound, bound] and D over
    ``denominators`` (default: divisors of 2n), enumerated lexicographically
    in (D, a_0, a_1, ...) with each coordinate running 0, 1, -1, 2, -2, ...
    ``max_candidates`` caps each search.
    """
    mu = _as_field_element(mu, conductor)
    n = mu.conductor
    if mu.is_zero():
        raise ValueError("mu must be nonzero")
    if not mu.is_real():
        raise ValueError("mu must be fixed by complex conjugation")
    if mu.is_rational():
        r = rational_sqrt(mu.to_rational())
        if r is not None:
            return _verified(Cyclotomic.rational(r, n), mu, RATIONAL_SQUARE)
    if denominators is None:
        denominators = [d for d in range(1, 2 * n + 1) if (2 * n) % d == 0]
    denominators = sorted(set(int(d) for d in denominators))

    exhausted = False
    hit = _quadratic_search(mu, real_subfield_basis(n), False, bound, denominators, max_candidates)
    if hit is True:
        exhausted = True
    elif hit is not None:
        return _verified(hit, mu, REAL_SQRT_SEARCH)

    power_basis = [Cyclotomic.zeta(n, i) for i in range(totient(n))]
    hit = _quadratic_search(mu, power_basis, True, bound, denominators, max_candidates)
    if hit is True:
        exhausted = True
    elif hit is not None:
        return _verified(hit, mu, BOUNDED_SEARCH)
    reason = f"denominators {denominators}"
    if exhausted:
        reason += f"; candidate budget {max_candidates} exhausted"
    raise NormEquationNotSolved(mu, n, bound, reason)


def _quadratic_search(mu, basis, conjugate, bound, denominators, budget):
    """First a (lexicographic) with form(a) == D^2 * mu, where
    form(a) = (sum a_i b_i) * (sum a_j b_j)' and ' is conj or identity.

    Returns the element (sum a_i b_i)/D, None when nothing matches, or True
    when the budget ran out first.
    """
    n = mu.conductor
    m = len(basis)
    phi = totient(n)
    table = np.zeros((m, m, phi), dtype=object)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            prod = bi * (bj.conj() if conjugate else bj)
            # basis products are integral: Phi_n is monic
            table[i, j, :] = [int(c) for c in prod.coeffs]
    bound_abs = int(np.abs(table).sum(axis=(0, 1)).max()) * bound * bound
    if bound_abs >= 2**62:
        raise ValueError("bound too large for the integer search")
    table = table.astype(np.int64)
    base = 2 * bound + 1
    per_d = base**m
    spent = 0
    mu_c = mu.coeffs
    for D in denominators:
        target = [c * D * D for c in mu_c]
        if any(t.denominator != 1 for t in target):
            continue
        target = np.array([int(t) for t in target], dtype=np.int64)
        if np.abs(target).max() > bound_abs:
            continue
        chunk = 1 << 15
        for start in range(0, per_d, chunk):
            if spent >= budget:
                return True
            stop = min(per_d, start + chunk, start + budget - spent)
            idx = np.arange(start, stop, dtype=np.int64)
            spent += stop - start
            digits = np.empty((len(idx), m), dtype=np.int64)
            rest = idx.copy()
            for pos in range(m - 1, -1, -1):
                digits[:, pos] = rest % base
                rest //= base
            # digit k stands for 0, 1, -1, 2, -2, ... so small coordinates come first
            digits = np.where(digits % 2 == 1, (digits + 1) // 2, -(digits // 2))
            match = np.ones(len(idx), dtype=bool)
            for k in range(phi):
                vals = np.einsum("ni,ij,nj->n", digits, table[:, :, k], digits)
                match &= vals == target[k]
                if not match.any():
                    break
            found = np.flatnonzero(match)
            if found.size:
                a = digits[found[0]]
                x = Cyclotomic.rational(0, n)
                for ai, bi in zip(a, basis):
                    if ai:
                        x = x + bi * int(ai)
                return x / D
    return None


def solve_norm_odd_degree(P: CycMatrix, mu: Cyclotomic) -> NormSolution:
    """x = mu^(-k) * det(P) for P of odd size 2k+1 with P * conj(P) == mu*I."""
    d = P.rows
    if d % 2 == 0:
        raise ValueError("odd-degree formula needs odd d")
    x = mu ** (-(d // 2)) * P.det()
    return _verified(x, mu, ODD_DEGREE)


def _basis_matrix(n, vectors) -> CycMatrix:
    return CycMatrix.from_columns(n, vectors)


def _intersection(n, U, W):
    # U, W: lists of column vectors spanning subspaces
    stacked = CycMatrix.from_columns(n, list(U) + [tuple(-x for x in w) for w in W])
    coeffs = kernel(stacked)
    Um = _basis_matrix(n, U)
    return [Um.matvec(c[: len(U)]) for c in coeffs]


def _restrict(P: CycMatrix, mu: Cyclotomic, vectors) -> NormSolution:
    n = P.conductor
    B = _basis_matrix(n, vectors)
    # P maps span(B) onto span(conj(B)): P B = conj(B) C, and C conj(C) = mu I
    C = solve(B.conj_entries(), P @ B)
    return solve_norm_odd_degree(C, mu)


def solve_norm_stable_subspace(
    P: CycMatrix,
    mu: Cyclotomic,
    elements,
    max_elements: int = 500,
    max_subspaces: int = 24,
) -> NormSolution | None:
    """Solve the norm equation from an odd-dimensional subspace V with
    P V = conj(V).

    For g in the group, g + g^-1 commutes with the intertwiner up to
    conjugation and has real eigenvalues z^k + z^-k, so its eigenspaces are
    such subspaces; intersections of them are too.  Restricting P to one of
    odd dimension reduces to the odd-degree formula.  Returns None if no odd
    candidate turns up among the first ``max_elements`` elements.
    """
    n = P.conductor
    d = P.rows
    ident = CycMatrix.identity(n, d)
    thetas = []
    for k in range(n // 2 + 1):
        t = Cyclotomic.zeta(n, k) + Cyclotomic.zeta(n, -k)
        if t not in thetas:
            thetas.append(t)
    found = []
    seen = set()
    for g in list(elements)[:max_elements]:
        if g.scalar_value() is not None:
            continue
        A = g + g.inverse()
        if A in seen or A.scalar_value() is not None:
            continue
        seen.add(A)
        total = 0
        for t in thetas:
            K = kernel(A - ident * t)
            if not K:
                continue
            total += len(K)
            if len(K) % 2:
                return _as_stable(_restrict(P, mu, K))
            for U in found[:max_subspaces]:
                V = _intersection(n, U, K)
                if len(V) % 2:
                    return _as_stable(_restrict(P, mu, V))
            found.append(K)
            if total == d:
                break
    return None


def _as_stable(sol: NormSolution) -> NormSolution:
    return NormSolution(sol.x, STABLE_SUBSPACE)
