"""Exception types raised at the library's validation boundaries.

Every message names the offending elements, so a failed CLI run can be
diagnosed from the error line alone.  The CLI prints the class name on
stderr and exits 1 for any of these.
"""


class PSTSError(Exception):
    """Base class for all domain errors."""


# -- configuration validation -------------------------------------------------

class DuplicatePoint(PSTSError):
    pass


class InvalidLabel(PSTSError):
    pass


class DuplicateLine(PSTSError):
    pass


class LineNotTriple(PSTSError):
    pass


class UnknownPointInLine(PSTSError):
    pass


class TwoPointsOnTwoLines(PSTSError):
    pass


class PointsNotSubset(PSTSError):
    pass


# -- constructions ------------------------------------------------------------

class SizeTooSmall(PSTSError):
    pass


class NotBinomial(PSTSError):
    pass


class SizeMismatch(PSTSError):
    pass


class NotDisjoint(PSTSError):
    pass


class NotBijective(PSTSError):
    pass


class AxisIndexMismatch(PSTSError):
    pass


class XiNotInvolutivePair(PSTSError):
    pass


class XiDiagonalNotIdentity(PSTSError):
    pass


# -- transforms ---------------------------------------------------------------

class TooManySubgraphs(PSTSError):
    pass


class EnumerationNotComplete(PSTSError):
    pass


class AxisTooSmall(PSTSError):
    pass


class NotExactlyTwo(PSTSError):
    pass


class NoAdmissiblePair(PSTSError):
    pass


class CertificateStale(PSTSError):
    pass


class AxiomViolation(PSTSError):
    pass


# -- analysis -----------------------------------------------------------------

class NotFreelyContained(PSTSError):
    pass


class NotDistinct(PSTSError):
    pass


class SharedVertexNotUnique(PSTSError):
    pass


class OutOfRange(PSTSError):
    pass


class StructureViolation(PSTSError):
    """Carries the number of the failing structure assertion (1..11)."""

    def __init__(self, item: int, message: str):
        super().__init__(f"item {item}: {message}")
        self.item = item


# -- verification -------------------------------------------------------------

class PropertyFailure(PSTSError):
    pass


class WitnessGap(PSTSError):
    pass


# -- file formats -------------------------------------------------------------

class ConfigSyntaxError(PSTSError):
    """Malformed text document; message carries line number and token."""
