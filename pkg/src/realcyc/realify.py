"""Rewriting a real-type irreducible representation over the real subfield.

Pipeline for rho with matrices over F = Q(zeta_n):

1. an invariant bilinear form M (rho(g)^T M rho(g) = M) and the invariant
   Hermitian form Sigma = sum over the group of h^T conj(h);
2. the intertwiner P = Sigma^-1 M, which satisfies P rho(g) = conj(rho(g)) P,
   and the real scalar mu with P conj(P) = mu I;
3. x with x conj(x) = mu, and P' = P / x, so that P' conj(P') = I;
4. xi with Q = conj(xi) conj(P') + xi I invertible.  Then P' Q = conj(Q) and
   every Q^-1 rho(g) Q has entries fixed by conjugation.

Every intermediate identity is re-checked exactly as it is produced.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclofield import Cyclotomic, totient
from .cyclolinalg import CycMatrix, inverse, kernel
from .errors import (
    IntertwinerCheckFailed,
    InternalInvariantViolation,
    MuNotReal,
    NotIrreducible,
    NotRealValued,
    NotScalar,
    QuaternionicType,
    XiSearchExhausted,
)
from .normeq import (
    DEFAULT_BOUND,
    DEFAULT_MAX_CANDIDATES,
    RATIONAL_SQUARE,
    NormSolution,
    rational_sqrt,
    solve_norm,
    solve_norm_odd_degree,
    solve_norm_stable_subspace,
)
from .repcore import GroupClosure, Representation, frobenius_schur


@dataclass
class Diagnostics:
    nu2: int | None
    group_order: int
    M: CycMatrix | None = None
    Sigma: CycMatrix | None = None
    P_raw: CycMatrix | None = None
    mu: Cyclotomic | None = None
    norm_solution: NormSolution | None = None
    P_normalized: CycMatrix | None = None
    xi: Cyclotomic | None = None
    xi_attempts: int = 0
    xi_rejected: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def norm_strategy(self) -> str:
        return self.norm_solution.strategy if self.norm_solution else "none"


@dataclass
class RealizationResult:
    Q: CycMatrix
    conjugated_generators: list[CycMatrix]
    diagnostics: Diagnostics


# invariant forms ---------------------------------------------------------


def _seeds(n: int, d: int):
    ident = CycMatrix.identity(n, d)
    yield ident

    def unit(cells):
        rows = [[0] * d for _ in range(d)]
        for (i, j), v in cells:
            rows[i][j] = v
        return CycMatrix(n, rows)

    for j in range(d):
        yield unit([((j, j), 1)])
    for j in range(d):
        for k in range(j + 1, d):
            yield unit([((j, k), 1), ((k, j), 1)])
    for j in range(d):
        for k in range(j + 1, d):
            yield unit([((j, k), 1), ((k, j), -1)])


def average_bilinear(X: CycMatrix, closure: GroupClosure) -> CycMatrix:
    """(1/|G|) * sum g^T X g."""
    total = CycMatrix.zeros(X.conductor, X.rows)
    for g in closure.elements:
        total = total + g.T @ X @ g
    return total * Fraction(1, closure.order)


def _bilinear_by_kernel(rep: Representation) -> CycMatrix:
    n, d = rep.conductor, rep.degree
    # unknown M flattened row-major; each generator contributes g^T M g - M = 0
    rows = []
    for g in rep.generators:
        for a in range(d):
            for b in range(d):
                row = []
                for i in range(d):
                    for j in range(d):
                        coeff = g[i, a] * g[j, b]
                        if i == a and j == b:
                            coeff = coeff - 1
                        row.append(coeff)
                rows.append(row)
    K = kernel(CycMatrix(n, rows))
    if not K:
        raise NotRealValued("no invariant bilinear form exists")
    if len(K) != 1:
        raise InternalInvariantViolation(
            f"invariant bilinear forms span dimension {len(K)}, expected 1"
        )
    v = K[0]
    return CycMatrix(n, [v[i * d : (i + 1) * d] for i in range(d)])


def invariant_bilinear(
    rep: Representation, closure: GroupClosure | None = None, method: str = "average"
) -> CycMatrix:
    """A nonzero M with g^T M g = M for all g in the group.

    ``method="average"`` projects the seeds I, E_jj, E_jk + E_kj, E_jk - E_kj
    onto the invariants and keeps the first nonzero result;
    ``method="kernel"`` solves the generator constraints directly.
    """
    closure = rep.closure() if closure is None else closure
    if method == "kernel":
        M = _bilinear_by_kernel(rep)
    elif method == "average":
        M = None
        for X in _seeds(rep.conductor, rep.degree):
            Y = average_bilinear(X, closure)
            if not Y.is_zero():
                M = Y
                break
        if M is None:
            raise NotRealValued("every seed averages to zero: no invariant bilinear form")
    else:
        raise ValueError(f"unknown method {method!r}")
    for g in rep.generators:
        if g.T @ M @ g != M:
            raise InternalInvariantViolation("bilinear form is not invariant")
    if M.det().is_zero():
        raise InternalInvariantViolation(
            "invariant bilinear form is singular; the representation is reducible"
        )
    return M


def invariant_hermitian(rep: Representation, closure: GroupClosure | None = None) -> CycMatrix:
    """Sigma = sum over all h in the group of h^T conj(h)."""
    closure = rep.closure() if closure is None else closure
    S = CycMatrix.zeros(rep.conductor, rep.degree)
    for h in closure.elements:
        S = S + h.T @ h.conj_entries()
    if S.T.conj_entries() != S:
        raise InternalInvariantViolation("Sigma is not Hermitian")
    return S


# P, mu, normalization ------------------------------------------------------


def compute_P(M: CycMatrix, Sigma: CycMatrix, generators=()) -> CycMatrix:
    P = inverse(Sigma) @ M
    for g in generators:
        if P @ g != g.conj_entries() @ P:
            raise IntertwinerCheckFailed("P rho(g) != conj(rho(g)) P")
    return P


def compute_mu(P: CycMatrix) -> Cyclotomic:
    mu = (P @ P.conj_entries()).scalar_value()
    if mu is None:
        raise NotScalar("P conj(P) is not a scalar matrix")
    if not mu.is_real():
        raise MuNotReal(f"mu = {mu} is not real")
    return mu


def normalize_P(
    P: CycMatrix,
    mu: Cyclotomic,
    d: int | None = None,
    elements=None,
    bound: int = DEFAULT_BOUND,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> tuple[CycMatrix, NormSolution]:
    """Rescale P by 1/x with x conj(x) = mu so that P' conj(P') = I.

    Odd d uses x = mu^-k det(P).  Even d tries, in order: mu a rational
    square, an odd P-stable subspace built from ``elements`` (group matrices,
    optional), then the bounded searches of :func:`solve_norm`.
    """
    d = P.rows if d is None else d
    if d % 2:
        sol = solve_norm_odd_degree(P, mu)
    else:
        sol = None
        if mu.is_rational():
            r = rational_sqrt(mu.to_rational())
            if r is not None:
                sol = NormSolution(Cyclotomic.rational(r, mu.conductor), RATIONAL_SQUARE)
        if sol is None and elements is not None:
            sol = solve_norm_stable_subspace(P, mu, elements)
        if sol is None:
            sol = solve_norm(mu, bound=bound, max_candidates=max_candidates)
    if not sol.check(mu):
        raise InternalInvariantViolation("norm solution does not satisfy x conj(x) = mu")
    Pn = P / sol.x
    if (Pn @ Pn.conj_entries()).scalar_value() != 1:
        raise InternalInvariantViolation("normalized P does not satisfy P conj(P) = I")
    return Pn, sol


# xi and Q ---------------------------------------------------------------


def xi_candidates(n: int):
    """1, z, then 1 + j*z for j = 1, 2, ..."""
    yield Cyclotomic.rational(1, n)
    z = Cyclotomic.zeta(n)
    yield z
    j = 1
    while True:
        yield 1 + z * j
        j += 1


def build_Q(P: CycMatrix, xi: Cyclotomic) -> CycMatrix:
    """Q = conj(xi) conj(P) + xi I."""
    ident = CycMatrix.identity(P.conductor, P.rows)
    return P.conj_entries() * xi.conj() + ident * xi


def find_xi(P: CycMatrix, n: int | None = None, max_tries: int | None = None):
    """First candidate xi with det(build_Q(P, xi)) != 0.

    Returns (xi, Q, rejected).  Candidates whose ratio -conj(xi)/xi repeats an
    earlier one are skipped, so at most d + 1 are ever tested: Q is singular
    exactly when that ratio is an eigenvalue of conj(P).
    """
    n = P.conductor if n is None else n
    d = P.rows
    max_tries = 4 * (d + 1) + 8 if max_tries is None else max_tries
    ratios = set()
    rejected = []
    for tries, xi in enumerate(xi_candidates(n)):
        if tries >= max_tries:
            break
        ratio = -xi.conj() / xi
        if ratio in ratios:
            continue
        ratios.add(ratio)
        Q = build_Q(P, xi)
        if not Q.det().is_zero():
            return xi, Q, rejected
        rejected.append(xi)
        if len(rejected) > d:
            raise InternalInvariantViolation(
                f"{len(rejected)} distinct ratios rejected but P has only {d} eigenvalues"
            )
    raise XiSearchExhausted(
        f"could not produce {d + 1} distinct ratios in conductor {n}"
    )


def random_Q(P: CycMatrix, seed: int, spread: int = 2, max_tries: int = 100):
    """Q = conj(Y) + conj(P) Y for random small integer-coefficient Y."""
    rng = random.Random(seed)
    n, d = P.conductor, P.rows
    phi = totient(n)
    Pc = P.conj_entries()
    for attempt in range(1, max_tries + 1):
        Y = CycMatrix(
            n,
            [
                [Cyclotomic(n, [rng.randint(-spread, spread) for _ in range(phi)]) for _ in range(d)]
                for _ in range(d)
            ],
        )
        Q = Y.conj_entries() + Pc @ Y
        if not Q.det().is_zero():
            return Q, attempt
    raise XiSearchExhausted(f"no invertible random Q in {max_tries} tries")


# the pipeline ----------------------------------------------------------------


def conjugate(Q: CycMatrix, generators) -> list[CycMatrix]:
    Qi = inverse(Q)
    return [Qi @ g @ Q for g in generators]


def realify(
    rep: Representation,
    bound: int = DEFAULT_BOUND,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    seed: int | None = None,
    bilinear_method: str = "average",
) -> RealizationResult:
    """Find Q with every Q^-1 rho(g) Q defined over the real subfield.

    Raises NotIrreducible, NotRealValued (indicator 0), QuaternionicType
    (indicator -1), ClosureCapExceeded or NormEquationNotSolved.
    """
    timings = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = now - clock
        clock = now

    n, d = rep.conductor, rep.degree
    closure = rep.closure()
    lap("closure")
    ident = CycMatrix.identity(n, d)

    if n <= 2:
        # every entry is already rational
        diag = Diagnostics(nu2=None, group_order=closure.order, timings=timings)
        try:
            diag.nu2 = frobenius_schur(rep, closure)
        except NotIrreducible:
            pass
        return RealizationResult(ident, list(rep.generators), diag)

    nu2 = frobenius_schur(rep, closure)
    lap("indicator")
    if nu2 == 0:
        raise NotRealValued("indicator 0: the character is not real-valued")
    if nu2 == -1:
        raise QuaternionicType(
            "indicator -1: real-valued character not afforded by a real representation"
        )
    diag = Diagnostics(nu2=nu2, group_order=closure.order, timings=timings)

    if d == 1:
        # a real linear character takes values +-1 only
        if not all(g[0, 0] in (1, -1) for g in rep.generators):
            raise InternalInvariantViolation("real-type linear character with value not +-1")
        return RealizationResult(ident, list(rep.generators), diag)

    M = invariant_bilinear(rep, closure, method=bilinear_method)
    if M.T != M:
        raise InternalInvariantViolation("indicator 1 but invariant form is not symmetric")
    Sigma = invariant_hermitian(rep, closure)
    lap("forms")
    P = compute_P(M, Sigma, rep.generators)
    mu = compute_mu(P)
    diag.M, diag.Sigma, diag.P_raw, diag.mu = M, Sigma, P, mu
    lap("intertwiner")

    Pn, sol = normalize_P(
        P, mu, d, elements=closure.elements, bound=bound, max_candidates=max_candidates
    )
    diag.norm_solution, diag.P_normalized = sol, Pn
    lap("norm_equation")

    if seed is None:
        xi, Q, rejected = find_xi(Pn, n)
        diag.xi, diag.xi_rejected, diag.xi_attempts = xi, rejected, len(rejected) + 1
    else:
        Q, attempts = random_Q(Pn, seed)
        diag.xi_attempts = attempts
    if Pn @ Q != Q.conj_entries():
        raise InternalInvariantViolation("P' Q != conj(Q)")
    lap("build_Q")

    real_gens = conjugate(Q, rep.generators)
    for g, h in zip(rep.generators, real_gens):
        if not h.is_real():
            raise InternalInvariantViolation("conjugated generator has a non-real entry")
        if h.trace() != g.trace():
            raise InternalInvariantViolation("conjugation changed a trace")
    lap("conjugate")
    return RealizationResult(Q, real_gens, diag)


__all__ = [
    "Diagnostics",
    "RealizationResult",
    "average_bilinear",
    "invariant_bilinear",
    "invariant_hermitian",
    "compute_P",
    "compute_mu",
    "normalize_P",
    "xi_candidates",
    "find_xi",
    "build_Q",
    "random_Q",
    "conjugate",
    "realify",
]
