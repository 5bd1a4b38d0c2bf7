"""Exact realization of real-type finite group representations over the
maximal real subfield of a cyclotomic field."""

from .cyclofield import Cyclotomic, cyclotomic_polynomial, totient, zeta
from .cyclolinalg import CycMatrix
from .errors import (
    ClosureCapExceeded,
    ConductorMismatch,
    NormEquationNotSolved,
    NotIrreducible,
    NotRealValued,
    ParseError,
    QuaternionicType,
    RealcycError,
    VerificationFailed,
)
from .normeq import NormSolution, solve_norm, solve_norm_odd_degree
from .realify import RealizationResult, realify
from .repcore import (
    GroupClosure,
    Representation,
    char_inner,
    character,
    cyclic_linear,
    dihedral,
    fixtures,
    frobenius_schur,
    group_closure,
    is_irreducible,
    quaternion,
    rotation_reflection,
)

__version__ = "0.1.0"
