"""Exception hierarchy shared by all ccx modules."""


class CcxError(Exception):
    """Base class for every error raised by this package."""


# -- complex construction ----------------------------------------------------

class EmptyCell(CcxError):
    """A cell with no vertices was supplied."""


class VertexOutOfRange(CcxError):
    """A cell references a vertex identifier outside 0..n-1."""


class DuplicateCell(CcxError):
    """The same vertex set was supplied twice (at any rank)."""


class RankOrderViolation(CcxError):
    """A contained cell was assigned a higher rank than its container."""


class InvalidRankPair(CcxError):
    """An incidence query was made with r >= s."""


# -- operators ---------------------------------------------------------------

class NotSimplicialAtRank(CcxError):
    """A signed boundary was requested where cells are not simplices."""


class RankAbsent(CcxError):
    """No cells exist at the requested rank."""


class RankTooHigh(CcxError):
    """The complex exceeds the maximum rank supported by this operator."""


class NotSquare(CcxError):
    """A square matrix was required."""


class DimensionMismatch(CcxError):
    """Matrix/vector shapes do not line up."""


# -- geometry ----------------------------------------------------------------

class TooFewPoints(CcxError):
    """Fewer points than the operation can triangulate."""


class DegenerateInput(CcxError):
    """All points are collinear; no triangulation exists."""


# -- training ----------------------------------------------------------------

class EmptyMask(CcxError):
    """A loss or accuracy was requested over an empty index set."""


class NonFiniteGradient(CcxError):
    """An optimizer step received NaN or infinite gradients."""


# -- command line ------------------------------------------------------------

class UsageError(CcxError):
    """Invalid flag combination."""


class IoError(CcxError):
    """A path could not be read or written."""


class FormatError(CcxError):
    """A file exists but its contents are malformed."""
