"""Exception types shared across the library."""


class GradecsError(Exception):
    """Base class for all library-specific errors."""


class ModulusOverflow(GradecsError):
    """A cyclotomic modulus exceeded the configured safety bound."""


class NotAPowerPoly(GradecsError):
    """R(x) is not a polynomial in x^d for the requested d."""


class InvalidType(GradecsError):
    """Unknown or out-of-range root-system type."""


class InfiniteFixedGroup(GradecsError):
    """The fixed-point subgroup of the torus is not finite."""


class OracleBoundExceeded(GradecsError):
    """The ambient Weyl group is too large for brute-force enumeration."""


class UnsupportedP(GradecsError):
    """G(m,p,r) requested with p outside {1, 2}."""


class SizeBoundExceeded(GradecsError):
    """Explicit element enumeration would exceed the size bound."""


class NoEmbeddingAttached(GradecsError):
    """A reflection-group operation needs an ambient Weyl embedding."""


class RealizationMismatch(GradecsError):
    """A realized automorphism disagrees with its descriptor."""


class OracleDisagreement(GradecsError):
    """Structured construction and brute-force oracle disagree (a bug)."""


class LemmaMismatch(GradecsError):
    """Computed orbit data disagrees with the attached closed form."""


class UnclassifiedRankOne(GradecsError):
    """A rank-one reduction fell outside the implemented families."""


class PowerExtractionFailed(GradecsError):
    """A monodromy polynomial failed its guaranteed power extraction."""


class OrbitInconsistency(GradecsError):
    """Two reflections in one hyperplane orbit yielded different relations."""


class TheoremMismatch(GradecsError):
    """A computed Hecke descriptor disagrees with the expected table."""


class DegreeMismatch(GradecsError):
    """A Hecke relation polynomial has the wrong degree for its orbit."""


class RecursionUnsupported(GradecsError):
    """A dual-side component falls outside the implemented families."""
