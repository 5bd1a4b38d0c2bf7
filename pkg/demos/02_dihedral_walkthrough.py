#!/usr/bin/env python
# The dihedral group of order 8, complex form diag(i, -i) and the swap,
# walked through each stage of the construction.
from realcyc import dihedral, realify

rep = dihedral(4)
for g in rep.generators:
    print("input generator:", g)

res = realify(rep)
d = res.diagnostics
print()
print("group order     ", d.group_order, " indicator", d.nu2)
print("M (bilinear)    ", d.M)
print("Sigma           ", d.Sigma)
print("P = Sigma^-1 M  ", d.P_raw)
print("mu              ", d.mu)
print("norm solution   ", d.norm_solution.x, "via", d.norm_strategy)
print("P'              ", d.P_normalized)
print("rejected xi     ", [str(x) for x in d.xi_rejected])
print("xi              ", d.xi)
print("Q               ", res.Q)
print()
for g, h in zip(rep.generators, res.conjugated_generators):
    print(g, "->", h, " trace", g.trace(), "->", h.trace())
