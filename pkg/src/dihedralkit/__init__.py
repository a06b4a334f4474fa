"""Toolkit for modules over dihedral 2-groups in characteristic 2.

Builds string and band modules from alternating words, decomposes
Klein-four restrictions by Kronecker pencil reduction, walks stable
Auslander-Reiten components, and probes tensor-power closure.
"""

from dihedralkit.errors import (
    CertificationFailed,
    InvalidBand,
    InvalidWord,
    IsoUndecided,
    NotInvertible,
    NotSignatureEligible,
    OperatorUndefined,
    PreconditionViolated,
    QMismatch,
    ToolkitError,
    UnknownSuite,
    Unreachable,
    UnsupportedSubgroup,
)
from dihedralkit.gf2 import BitMatrix, Poly2, kronecker_product, min_poly, rank_kernel, solve_linear
from dihedralkit.words import Letter, Word, apply_L, apply_R, ar_neighbors, invert_word, omega2_word, validate_word

__all__ = [
    "BitMatrix",
    "Poly2",
    "rank_kernel",
    "solve_linear",
    "min_poly",
    "kronecker_product",
    "Letter",
    "Word",
    "validate_word",
    "invert_word",
    "apply_L",
    "apply_R",
    "omega2_word",
    "ar_neighbors",
    "ToolkitError",
    "InvalidWord",
    "OperatorUndefined",
    "QMismatch",
    "InvalidBand",
    "NotInvertible",
    "UnsupportedSubgroup",
    "PreconditionViolated",
    "NotSignatureEligible",
    "CertificationFailed",
    "IsoUndecided",
    "UnknownSuite",
    "Unreachable",
]
