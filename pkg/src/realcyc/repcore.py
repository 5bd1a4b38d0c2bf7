"""Matrix groups given by generators: closure, characters, and the
Frobenius-Schur indicator.

The group is identified with its matrix image, so every sum here runs over
the distinct matrices rho(G).  The conductor of the input matrices is used as
the working n; it is not checked against the exponent of the group.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclofield import Cyclotomic
from .cyclolinalg import CycMatrix
from .errors import (
    ClosureCapExceeded,
    ConductorMismatch,
    DimensionMismatch,
    InternalInvariantViolation,
    NotIrreducible,
    Singular,
    UnknownFixture,
)

DEFAULT_CLOSURE_CAP = 100_000


def default_closure_cap() -> int:
    env = os.environ.get("REALCYC_CLOSURE_CAP")
    return int(env) if env else DEFAULT_CLOSURE_CAP


@dataclass
class Representation:
    conductor: int
    degree: int
    generators: list[CycMatrix]
    closure_cap: int = field(default_factory=default_closure_cap)
    _closure: GroupClosure | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.degree < 1:
            raise DimensionMismatch("degree must be at least 1")
        if self.closure_cap < 1:
            raise ValueError("closure_cap must be positive")
        self.generators = list(self.generators)
        for g in self.generators:
            if g.conductor != self.conductor:
                raise ConductorMismatch(
                    f"generator conductor {g.conductor} != {self.conductor}"
                )
            if g.shape != (self.degree, self.degree):
                raise DimensionMismatch(
                    f"generator of shape {g.shape} in degree {self.degree}"
                )
            if g.det().is_zero():
                raise Singular("generators must be invertible")

    def closure(self) -> GroupClosure:
        if self._closure is None:
            self._closure = group_closure(self)
        return self._closure

    def identity(self) -> CycMatrix:
        return CycMatrix.identity(self.conductor, self.degree)


@dataclass(frozen=True)
class GroupClosure:
    elements: tuple[CycMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g):
        return g in self._index

    @property
    def _index(self):
        # frozen dataclass: build lazily and stash outside the field set
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(self.elements)
            object.__setattr__(self, "_idx", idx)
        return idx


def group_closure(rep: Representation, cap: int | None = None) -> GroupClosure:
    """Breadth-first closure of the generators under right multiplication."""
    cap = rep.closure_cap if cap is None else cap
    ident = rep.identity()
    seen = {ident}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in rep.generators:
            y = x @ g
            if y not in seen:
                if len(elements) >= cap:
                    raise ClosureCapExceeded(
                        f"more than {cap} elements; group too large or infinite"
                    )
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return GroupClosure(tuple(elements))


def character(rep: Representation, closure: GroupClosure | None = None) -> dict:
    closure = rep.closure() if closure is None else closure
    return {g: g.trace() for g in closure.elements}


def trivial_character(rep: Representation, closure: GroupClosure | None = None) -> dict:
    closure = rep.closure() if closure is None else closure
    one = Cyclotomic.rational(1, rep.conductor)
    return {g: one for g in closure.elements}


def char_inner(chi1: dict, chi2: dict, order: int | None = None) -> Cyclotomic:
    """(1/|G|) * sum chi1(g) * conj(chi2(g)) over the common domain."""
    order = len(chi1) if order is None else order
    total = None
    for g, a in chi1.items():
        term = a * chi2[g].conj()
        total = term if total is None else total + term
    return total / order


def is_irreducible(rep: Representation) -> bool:
    chi = character(rep)
    return char_inner(chi, chi) == 1


def frobenius_schur(rep: Representation, closure: GroupClosure | None = None) -> int:
    """The indicator (1/|G|) sum chi(g^2), one of -1, 0, 1."""
    closure = rep.closure() if closure is None else closure
    chi = character(rep, closure)
    norm = char_inner(chi, chi, closure.order)
    if norm != 1:
        raise NotIrreducible(f"[chi, chi] = {norm}, expected 1")
    total = Cyclotomic.rational(0, rep.conductor)
    for g in closure.elements:
        total = total + (g @ g).trace()
    value = total / closure.order
    if not value.is_rational() or value.to_rational() not in (-1, 0, 1):
        raise InternalInvariantViolation(f"indicator sum gave {value}")
    return int(value.to_rational())


# built-in representations ----------------------------------------------------


def dihedral(m: int) -> Representation:
    """a -> diag(z_m, z_m^-1), b -> swap, over Q(zeta_m)."""
    if m < 3:
        raise ValueError("dihedral fixture needs m >= 3")
    a = CycMatrix.diag(m, [Cyclotomic.zeta(m), Cyclotomic.zeta(m, -1)])
    b = CycMatrix(m, [[0, 1], [1, 0]])
    return Representation(m, 2, [a, b])


def quaternion() -> Representation:
    i = CycMatrix.diag(4, [Cyclotomic.zeta(4), -Cyclotomic.zeta(4)])
    j = CycMatrix(4, [[0, 1], [-1, 0]])
    return Representation(4, 2, [i, j])


def cyclic_linear(m: int, k: int = 0) -> Representation:
    return Representation(m, 1, [CycMatrix(m, [[Cyclotomic.zeta(m, k)]])])


def rotation_reflection(m: int, n: int | None = None) -> Representation:
    """Rotation by 2*pi/m and the reflection diag(1, -1), entries in the real
    subfield of Q(zeta_n).

    Needs 4 | n (so that sin(2*pi/m) is real cyclotomic) and m | n.
    """
    if n is None:
        n = m * 4 // math.gcd(m, 4)
    if n % 4 or n % m or m < 1:
        raise ValueError("rotation_reflection needs m | n and 4 | n")
    z = Cyclotomic.zeta(n, n // m)
    zi = Cyclotomic.zeta(n, -(n // m))
    i = Cyclotomic.zeta(n, n // 4)
    c = (z + zi) * Fraction(1, 2)
    s = (z - zi) / (2 * i)
    rot = CycMatrix(n, [[c, -s], [s, c]])
    ref = CycMatrix(n, [[1, 0], [0, -1]])
    return Representation(n, 2, [rot, ref])


FIXTURES = {
    "dihedral": dihedral,
    "quaternion": quaternion,
    "cyclic_linear": cyclic_linear,
    "rotation_reflection": rotation_reflection,
}


def fixtures(name: str, *params: int) -> Representation:
    try:
        make = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}"
        ) from None
    return make(*params)
