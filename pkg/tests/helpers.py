"""Real-type test representations and random conjugation."""
from __future__ import annotations

import random

from realcyc.cyclofield import Cyclotomic, totient
from realcyc.cyclolinalg import CycMatrix
from realcyc.repcore import Representation, rotation_reflection


def kron(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    n = A.conductor
    rows = []
    for i in range(A.rows):
        for k in range(B.rows):
            rows.append([A[i, j] * B[k, l] for j in range(A.cols) for l in range(B.cols)])
    return CycMatrix(n, rows)


def tetrahedral(n: int = 1) -> Representation:
    """Rotations of the tetrahedron (A4) as signed permutation matrices."""
    a = CycMatrix(n, [[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    b = CycMatrix(n, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return Representation(n, 3, [a, b])


def octahedral(n: int = 1) -> Representation:
    """Rotations of the cube (S4), degree 3."""
    a = CycMatrix(n, [[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    b = CycMatrix(n, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return Representation(n, 3, [a, b])


def _perm_on_sum_zero(perm, n):
    # basis f_i = e_i - e_last; sigma f_i = f_sigma(i) - f_sigma(last), f_last = 0
    k = len(perm) - 1
    cols = []
    for i in range(k):
        col = [0] * k
        if perm[i] < k:
            col[perm[i]] += 1
        if perm[k] < k:
            col[perm[k]] -= 1
        cols.append(col)
    return CycMatrix.from_columns(n, cols)


def symmetric_standard(k: int = 5, n: int = 1) -> Representation:
    """Standard (k-1)-dimensional representation of S_k."""
    swap = [1, 0] + list(range(2, k))
    cycle = list(range(1, k)) + [0]
    return Representation(
        n, k - 1, [_perm_on_sum_zero(swap, n), _perm_on_sum_zero(cycle, n)]
    )


def dihedral_square(m1: int, m2: int, n: int) -> Representation:
    """Outer tensor product of two rotation/reflection pairs, degree 4."""
    r1 = rotation_reflection(m1, n)
    r2 = rotation_reflection(m2, n)
    I2 = CycMatrix.identity(n, 2)
    gens = [kron(g, I2) for g in r1.generators] + [kron(I2, g) for g in r2.generators]
    return Representation(n, 4, gens)


def lifted(rep: Representation, n: int) -> Representation:
    return Representation(n, rep.degree, [g.lift(n) for g in rep.generators])


def random_element(rng: random.Random, n: int, spread: int = 2) -> Cyclotomic:
    return Cyclotomic(n, [rng.randint(-spread, spread) for _ in range(totient(n))])


def random_invertible(rng: random.Random, n: int, d: int, spread: int = 2) -> CycMatrix:
    while True:
        T = CycMatrix(n, [[random_element(rng, n, spread) for _ in range(d)] for _ in range(d)])
        if not T.det().is_zero():
            return T


def conjugated(rep: Representation, T: CycMatrix) -> Representation:
    Ti = T.inverse()
    return Representation(rep.conductor, rep.degree, [Ti @ g @ T for g in rep.generators])


def real_type_instance(rng: random.Random, max_degree: int = 4, conductors=(4, 8, 12, 16, 20, 24)):
    """A random real-type irreducible representation over Q(zeta_n) together
    with the real-entry representation it was conjugated from."""
    n = rng.choice(conductors)
    d = rng.randint(2, max_degree)
    divisors = [m for m in range(3, n + 1) if n % m == 0]
    if d == 2:
        base = rotation_reflection(rng.choice(divisors), n)
    elif d == 3:
        base = lifted(rng.choice([tetrahedral(), octahedral()]), n)
    else:
        if rng.random() < 0.5:
            base = lifted(symmetric_standard(5), n)
        else:
            small = [m for m in divisors if m <= 6] or divisors[:1]
            base = dihedral_square(rng.choice(small), rng.choice(small), n)
    T = random_invertible(rng, n, d, spread=1)
    return conjugated(base, T), base, T


def words(rng: random.Random, k: int, count: int, length: int = 4):
    return [[rng.randrange(k) for _ in range(rng.randint(1, length))] for _ in range(count)]


__all__ = [
    "kron",
    "tetrahedral",
    "octahedral",
    "symmetric_standard",
    "dihedral_square",
    "lifted",
    "random_element",
    "random_invertible",
    "conjugated",
    "real_type_instance",
    "words",
]
