from fractions import Fraction

import pytest

from helpers import random_invertible
from realcyc.cyclofield import Cyclotomic, rational, zeta
from realcyc.cyclolinalg import CycMatrix
from realcyc.errors import NormEquationNotSolved
from realcyc.normeq import (
    BOUNDED_SEARCH,
    ODD_DEGREE,
    RATIONAL_SQUARE,
    REAL_SQRT_SEARCH,
    STABLE_SUBSPACE,
    rational_sqrt,
    solve_norm,
    solve_norm_odd_degree,
    solve_norm_stable_subspace,
)


def norm(x):
    return x * x.conj()


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None


@pytest.mark.parametrize("n", [1, 3, 4, 8, 24])
def test_mu_four(n):
    sol = solve_norm(4, n)
    assert sol.x == 2 and sol.strategy == RATIONAL_SQUARE


def test_mu_two_conductor_eight():
    sol = solve_norm(2, 8, bound=1)
    assert norm(sol.x) == 2
    assert sol.x == zeta(8) - zeta(8, 3)
    assert sol.strategy in (REAL_SQRT_SEARCH, BOUNDED_SEARCH)


def test_mu_one_sixty_fourth():
    sol = solve_norm(Fraction(1, 64), 4)
    assert sol.x == Fraction(1, 8) and sol.strategy == RATIONAL_SQUARE


def test_bounded_search_when_no_real_root():
    # 2 + sqrt 2 is a norm from Q(zeta_8) (of 1 + zeta_8) but not a square in E
    mu = (1 + zeta(8)) * (1 + zeta(8)).conj()
    sol = solve_norm(mu, bound=1)
    assert norm(sol.x) == mu
    assert sol.strategy == BOUNDED_SEARCH
    # 5 = N(2 + i) needs the general search in Q(i)
    sol = solve_norm(5, 4, bound=2)
    assert norm(sol.x) == 5 and sol.strategy == BOUNDED_SEARCH


def test_out_of_reach_raises():
    with pytest.raises(NormEquationNotSolved) as info:
        solve_norm(2, 8, bound=0)
    err = info.value
    assert err.bound == 0 and err.conductor == 8 and err.mu == 2
    assert "not" in str(err) and "limit" in str(err)
    # 3 is not a norm from Q(i) at all
    with pytest.raises(NormEquationNotSolved):
        solve_norm(3, 4, bound=3)


def test_budget_is_reported():
    with pytest.raises(NormEquationNotSolved) as info:
        solve_norm(7, 24, bound=4, max_candidates=1000)
    assert "budget" in str(info.value)


def test_bad_mu():
    with pytest.raises(ValueError):
        solve_norm(0, 5)
    with pytest.raises(ValueError):
        solve_norm(zeta(4))


def test_determinism():
    mu = (2 + zeta(12)) * (2 + zeta(12)).conj()
    a = solve_norm(mu, bound=2)
    b = solve_norm(mu, bound=2)
    assert a == b and norm(a.x) == mu


def test_odd_degree_examples():
    sol = solve_norm_odd_degree(CycMatrix(7, [[zeta(7)]]), rational(1, 7))
    assert sol.x == zeta(7) and sol.strategy == ODD_DEGREE
    assert solve_norm_odd_degree(CycMatrix.identity(5, 3), rational(1, 5)).x == 1
    P = CycMatrix.identity(5, 3) * zeta(5)
    x = solve_norm_odd_degree(P, rational(1, 5)).x
    assert x == zeta(5, 3)
    assert x * zeta(5, -3) == 1
    with pytest.raises(ValueError):
        solve_norm_odd_degree(CycMatrix.identity(5, 2), rational(1, 5))


def test_odd_degree_on_conjugated_scalar(rng):
    n = 12
    for _ in range(5):
        A = random_invertible(rng, n, 3, spread=1)
        # U = conj(A)^-1 A satisfies U conj(U) = I
        U = A.conj_entries().inverse() @ A
        c = 1 + zeta(n) * rng.randint(1, 3)
        mu = norm(c)
        sol = solve_norm_odd_degree(U * c, mu)
        assert norm(sol.x) == mu


def test_stable_subspace_on_dihedral_square():
    from helpers import dihedral_square
    from realcyc.realify import compute_mu, compute_P, invariant_bilinear, invariant_hermitian

    rep = dihedral_square(3, 4, 12)
    cl = rep.closure()
    T = CycMatrix(
        12,
        [
            [1, zeta(12), 0, 0],
            [0, 1, 2, 0],
            [0, 0, 1, zeta(12, 5)],
            [1, 0, 0, 1],
        ],
    )
    Ti = T.inverse()
    from realcyc.repcore import Representation

    conj_rep = Representation(12, 4, [Ti @ g @ T for g in rep.generators])
    ccl = conj_rep.closure()
    P = compute_P(invariant_bilinear(conj_rep, ccl), invariant_hermitian(conj_rep, ccl))
    mu = compute_mu(P)
    sol = solve_norm_stable_subspace(P, mu, ccl.elements)
    assert sol is not None and sol.strategy == STABLE_SUBSPACE
    assert norm(sol.x) == mu
    assert cl.order == ccl.order == 48
