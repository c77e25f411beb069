"""Exception hierarchy for ssmod.

Every failure mode that callers are expected to handle has its own class;
they all derive from SsmodError so a CLI can catch one thing.
"""


class SsmodError(Exception):
    """Base class for all ssmod errors."""


# -- field / polynomial layer -------------------------------------------------

class NonPrime(SsmodError):
    """A value that must be prime is not."""


class UnsupportedPrime(SsmodError):
    """Prime outside the supported range (p < 5, or p < 11 where required)."""


class ZeroPolynomial(SsmodError):
    """Root finding was asked for the zero polynomial."""


class ExtensionConstructionFailure(SsmodError):
    """No irreducible modulus found for a requested extension degree."""


# -- modular polynomial data --------------------------------------------------

class ParseError(SsmodError):
    """Malformed modular-polynomial data file."""


class SymmetryViolation(SsmodError):
    """Phi_ell data is not symmetric in (X, Y)."""


class DegreeMismatch(SsmodError):
    """deg_X Phi_ell != ell + 1."""


class KroneckerViolation(SsmodError):
    """Phi_ell fails the Kronecker congruence mod ell."""


class EllEqualsP(SsmodError):
    """Reduction of Phi_ell mod p requested with ell == p."""


# -- supersingular graph ------------------------------------------------------

class NonSupersingularRoot(SsmodError):
    """A root of Phi_ell(j_i, X) in F_p^2 is not a basis vertex."""


class InvariantViolation(SsmodError):
    """A hard internal invariant failed (corrupt data or a bug)."""


# -- elliptic curve layer -----------------------------------------------------

class SingularCurve(SsmodError):
    """Discriminant is zero."""


class NonPrimeConductor(SsmodError):
    """|Delta| is not a prime power, so the conductor cannot be a prime."""


class NonMinimalModel(SsmodError):
    """The model can be rescaled to a smaller integral model."""


class AdditiveReduction(SsmodError):
    """Reduction at p is additive (conductor p^2, not p)."""


class BadReductionPrime(SsmodError):
    """Point count requested at the conductor."""


class Inconclusive(SsmodError):
    """A numeric routine could not certify its answer at the tolerance."""


class WrongResidueClass(SsmodError):
    """Operation requires p = 3 mod 4."""


# -- module vectors / eigenvector extraction ----------------------------------

class DimensionMismatch(SsmodError):
    """Vector length does not match the basis."""


class GenusZero(SsmodError):
    """X_0(p) has genus zero; there is no cuspidal eigenvector."""


class EigenspaceNotRankOne(SsmodError):
    """Joint eigenspace has rank > 1 after all supported Hecke operators."""


class EigenvalueMismatch(SsmodError):
    """Joint eigenspace is empty; curve and level do not match."""


# -- verification layer -------------------------------------------------------

class NonDivisibleNorm(SsmodError):
    """torsion order does not divide <v,v>; wrong v_E, torsion or a
    non-strong-Weil input."""


class NoWeightTwoVertex(SsmodError):
    """No vertex of weight 2 exists (p = 1 mod 4)."""
