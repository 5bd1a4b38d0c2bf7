#!/usr/bin/env python
# Exact arithmetic in Q(zeta_n), checked against floating point embeddings.
import cmath
import math

from realcyc import Cyclotomic, cyclotomic_polynomial, zeta

print("Phi_12 coefficients:", cyclotomic_polynomial(12))

z = zeta(12)
a = 1 + 2 * z - z**5
b = a.inv()
print("a       =", a)
print("1/a     =", b)
print("a * 1/a =", a * b)

# the real subfield: z + z^-1 = 2 cos(pi/6) = sqrt(3)
r = z + z**-1
print("z + 1/z =", r, " real:", r.is_real(), " square:", r * r)

w = cmath.exp(2j * math.pi / 12)
print("float check:", abs(a.approx() - (1 + 2 * w - w**5)) < 1e-12)

# everything lives in one conductor; lift to compare across fields
i = zeta(4)
print("i lifted to conductor 12:", i.lift(12), "==", z**3, ":", i.lift(12) == z**3)
print("rationals are conductor-free:", Cyclotomic.rational(3, 7) == 3)
