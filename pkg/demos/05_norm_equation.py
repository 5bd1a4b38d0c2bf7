#!/usr/bin/env python
# The norm equation x * conj(x) = mu and the limits of the bounded searches.
from realcyc import solve_norm, zeta
from realcyc.errors import NormEquationNotSolved

for mu, n, bound in [(4, 24, 4), (2, 8, 1), (5, 4, 2), (3, 12, 4)]:
    sol = solve_norm(mu, n, bound=bound)
    print(f"mu = {mu} in Q(zeta_{n}): x = {sol.x}  [{sol.strategy}]")

mu = (1 + zeta(8)) * (1 + zeta(8)).conj()
sol = solve_norm(mu, bound=1)
print(f"mu = {mu}: x = {sol.x}  [{sol.strategy}]")

# 3 is not a norm from Q(i); the solver reports a search limit and stops
try:
    solve_norm(3, 4, bound=4)
except NormEquationNotSolved as exc:
    print("gave up:", exc)
