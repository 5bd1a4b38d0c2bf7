import itertools
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_cyclotomic
from realcyc.cyclofield import Cyclotomic, rational, zeta
from realcyc.cyclolinalg import CycMatrix, det, inverse, kernel, matmul, solve, transpose
from realcyc.errors import ConductorMismatch, DimensionMismatch, NotSquare, Singular


def leibniz_det(A: CycMatrix) -> Cyclotomic:
    d = A.rows
    total = rational(0, A.conductor)
    for perm in itertools.permutations(range(d)):
        sign = 1
        for i in range(d):
            for j in range(i + 1, d):
                if perm[i] > perm[j]:
                    sign = -sign
        term = rational(sign, A.conductor)
        for i, j in enumerate(perm):
            term = term * A[i, j]
        total = total + term
    return total


def numeric(A: CycMatrix) -> np.ndarray:
    return np.array([[x.approx() for x in r] for r in A], dtype=complex)


def random_matrix(rng, n, r, c=None, density=0.6):
    c = r if c is None else c
    return CycMatrix(n, [[random_cyclotomic(rng, n, 3, 2, density) for _ in range(c)] for _ in range(r)])


def test_det_examples():
    i = zeta(4)
    assert det(CycMatrix(4, [[1, i], [-i, 1]])) == 0
    assert det(CycMatrix(4, [[0, 1], [1, 0]])) == -1
    assert det(CycMatrix.identity(7, 3)) == 1


def test_inverse_examples():
    i = zeta(4)
    A = CycMatrix(4, [[1, i], [0, 1]])
    assert inverse(A) == CycMatrix(4, [[1, -i], [0, 1]])
    with pytest.raises(Singular):
        inverse(CycMatrix(4, [[1, i], [-i, 1]]))


def test_kernel_example():
    i = zeta(4)
    K = kernel(CycMatrix(4, [[1, i], [-i, 1]]))
    assert len(K) == 1
    assert K[0] == (-i, rational(1, 4))


def test_det_matches_leibniz_and_numeric(rng):
    for n, d in [(3, 2), (5, 3), (8, 3), (12, 4), (7, 4), (24, 3)]:
        for _ in range(4):
            A = random_matrix(rng, n, d)
            exact = det(A)
            assert exact == leibniz_det(A)
            assert abs(exact.approx() - np.linalg.det(numeric(A))) < 1e-8 * max(1, abs(exact.approx()))


def test_inverse_is_two_sided_and_agrees_with_adjugate(rng):
    for n, d in [(4, 2), (5, 3), (12, 3), (16, 4)]:
        A = random_matrix(rng, n, d, density=1.0)
        D = det(A)
        if D.is_zero():
            continue
        Ai = inverse(A)
        ident = CycMatrix.identity(n, d)
        assert A @ Ai == ident and Ai @ A == ident
        # adjugate entry (j, i) = (-1)^(i+j) * minor(i, j)
        for i in range(d):
            for j in range(d):
                minor = CycMatrix(
                    n, [[A[r, c] for c in range(d) if c != j] for r in range(d) if r != i]
                )
                cof = leibniz_det(minor) * (-1) ** (i + j)
                assert Ai[j, i] == cof / D


def test_det_is_multiplicative(rng):
    for n in [3, 8, 9]:
        A, B = random_matrix(rng, n, 3), random_matrix(rng, n, 3)
        assert det(A @ B) == det(A) * det(B)
        assert det(transpose(A)) == det(A)
        assert det(A.conj_entries()) == det(A).conj()


def test_singular_detection():
    n = 5
    z = zeta(5)
    A = CycMatrix(n, [[1, z, z * z], [z, z * z, z**3], [0, 1, 2]])
    assert det(A) == 0
    with pytest.raises(Singular):
        inverse(A)
    K = kernel(A)
    assert len(K) == 1
    assert all(x.is_zero() for x in A.matvec(K[0]))


def test_kernel_dimension_and_annihilation(rng):
    n = 12
    for _ in range(5):
        B = random_matrix(rng, n, 2, 4)
        # rows 3 and 4 are combinations of rows 1 and 2
        c = [random_cyclotomic(rng, n, 2, 2) for _ in range(4)]
        rows = [B.row(0), B.row(1)]
        rows.append(tuple(c[0] * x + c[1] * y for x, y in zip(*rows[:2])))
        rows.append(tuple(c[2] * x + c[3] * y for x, y in zip(*rows[:2])))
        A = CycMatrix(n, rows)
        K = kernel(A)
        rank = np.linalg.matrix_rank(numeric(A), tol=1e-8)
        assert len(K) == 4 - rank
        for v in K:
            assert all(x.is_zero() for x in A.matvec(v))


def test_solve(rng):
    n = 8
    A = random_matrix(rng, n, 4, 2, density=1.0)
    X = random_matrix(rng, n, 2, 3)
    assert solve(A, A @ X) == X
    B = A @ X
    bad = CycMatrix(n, [list(r) for r in B.tolist()])
    rows = bad.tolist()
    rows[0][0] = rows[0][0] + 1
    # an extra unit in one entry leaves the column space for generic A
    if np.linalg.matrix_rank(np.column_stack([numeric(A), numeric(CycMatrix(n, rows))[:, 0]]), tol=1e-9) == 3:
        with pytest.raises(Singular):
            solve(A, CycMatrix(n, rows))


def test_shape_and_conductor_errors():
    A = CycMatrix(4, [[1, 2, 3]])
    with pytest.raises(NotSquare):
        det(A)
    with pytest.raises(NotSquare):
        inverse(A)
    with pytest.raises(DimensionMismatch):
        matmul(A, A)
    with pytest.raises(DimensionMismatch):
        CycMatrix(4, [[1, 2], [3]])
    with pytest.raises(ConductorMismatch):
        CycMatrix(4, [[1]]) @ CycMatrix(8, [[1]])
    with pytest.raises(ConductorMismatch):
        CycMatrix(4, [[zeta(8)]])


def test_matrix_helpers():
    n = 6
    z = zeta(6)
    A = CycMatrix(n, [[z, 1], [Fraction(1, 2), -z]])
    assert A.trace() == 0
    assert (A * 2) / 2 == A
    assert A.T.T == A
    assert (A - A).is_zero()
    assert CycMatrix.diag(n, [z, z]).scalar_value() == z
    assert A.scalar_value() is None
    assert CycMatrix.from_columns(n, [A.column(0), A.column(1)]) == A
    assert A.lift(12) == CycMatrix(12, [[zeta(12, 2), 1], [Fraction(1, 2), -zeta(12, 2)]])
    assert hash(A) == hash(CycMatrix(n, A.tolist()))
