#!/usr/bin/env python
# Hide a real representation behind a random complex change of basis and
# recover a real form.  The recovered matrices need not equal the originals,
# only be real with the same traces.
import random

from realcyc import CycMatrix, Cyclotomic, Representation, realify, rotation_reflection
from realcyc.cyclofield import totient

rng = random.Random(2024)
n = 20
base = rotation_reflection(5, n)


def random_matrix():
    while True:
        T = CycMatrix(n, [[Cyclotomic(n, [rng.randint(-2, 2) for _ in range(totient(n))])
                           for _ in range(2)] for _ in range(2)])
        if not T.det().is_zero():
            return T


T = random_matrix()
Ti = T.inverse()
hidden = Representation(n, 2, [Ti @ g @ T for g in base.generators])
print("hidden rotation has real entries:", hidden.generators[0].is_real())

res = realify(hidden)
print("mu =", res.diagnostics.mu)
print("norm strategy:", res.diagnostics.norm_strategy)
for g, h in zip(base.generators, res.conjugated_generators):
    print("real:", h.is_real(), " trace:", h.trace(), " original trace:", g.trace())
