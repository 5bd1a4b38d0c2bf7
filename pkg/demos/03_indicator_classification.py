#!/usr/bin/env python
# Frobenius-Schur indicators and what the pipeline does with each type.
from realcyc import cyclic_linear, dihedral, frobenius_schur, quaternion, realify
from realcyc.errors import RealcycError

cases = {
    "dihedral(5)": dihedral(5),
    "quaternion": quaternion(),
    "cyclic_linear(3, 1)": cyclic_linear(3, 1),
    "cyclic_linear(6, 3)": cyclic_linear(6, 3),
}

for name, rep in cases.items():
    nu = frobenius_schur(rep)
    try:
        res = realify(rep)
        outcome = f"realized, Q = {res.Q}"
    except RealcycError as exc:
        outcome = f"{exc.kind} (exit code {exc.exit_code})"
    print(f"{name:22s} nu2 = {nu:2d}   {outcome}")
