"""Exception types shared across the toolkit."""


class RoleretError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(RoleretError):
    """Invalid configuration value or combination."""


class ShapeError(RoleretError):
    """Operand shapes do not agree."""


class TokenizationEmpty(RoleretError):
    """Text produced no tokens."""


class TapeEmpty(RoleretError):
    """Gradient tape holds no records."""


class ParseError(RoleretError):
    """Malformed input file; message carries the offending line."""


class DuplicateId(RoleretError):
    """The same id appears twice in a dataset."""


class BadMagic(RoleretError):
    """File does not start with the expected magic / format marker."""


class VersionMismatch(RoleretError):
    """File version or declared shapes disagree with the payload."""


class TruncatedPayload(RoleretError):
    """File ends before the header-promised payload."""


class NonFiniteValue(RoleretError):
    """NaN or Inf encountered where finite values are required."""


class EmptyMatrix(RoleretError):
    """A matrix with zero rows was supplied."""


class MissingVideo(RoleretError):
    """A caption's video_id has no clip in the feature archive."""


class MissingAnnotation(RoleretError):
    """Caption lacks the class annotations a metric needs."""


class NoRelevantItems(RoleretError):
    """Query has no relevant gallery item; signals a skip, not a failure."""


class AllZeroGains(RoleretError):
    """Query has no positive graded gain; signals a skip."""


class EmptyDataset(RoleretError):
    """Operation requires at least one item."""


class DatasetTooSmall(RoleretError):
    """Dataset smaller than one batch."""


class NonFiniteLoss(RoleretError):
    """Training loss became NaN/Inf."""


class NonFiniteGradient(RoleretError):
    """A gradient became NaN/Inf; parameters were left untouched."""
