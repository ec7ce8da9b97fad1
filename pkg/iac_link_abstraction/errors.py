"""Exceptions raised by the link abstraction toolkit.

Every exception carries the process exit code the CLI terminates with.
"""


class LinkAbstractionError(Exception):
    """Base class for all toolkit errors"""
    exit_code = 3


class ConfigError(LinkAbstractionError):
    """Invalid configuration or command usage"""
    exit_code = 2


class UnsupportedOrder(LinkAbstractionError):
    """Modulation order outside {4, 16, 64}"""
    exit_code = 2


class FormatVersionError(LinkAbstractionError):
    """File with an unknown schema major version or a malformed header"""
    exit_code = 3


class GridTooSmall(LinkAbstractionError):
    """SNR grid with fewer than two points"""
    exit_code = 3


class EmptyInput(LinkAbstractionError):
    """Reduction over an empty sequence"""
    exit_code = 3


class EmptyTrainingSet(LinkAbstractionError):
    """Training requested without any (channel, SNR) sample"""
    exit_code = 3


class MissingMeasurement(LinkAbstractionError):
    """No cached BLER measurement for a requested (channel, SNR) sample"""
    exit_code = 3


class LengthMismatch(LinkAbstractionError):
    """Array length does not match the interleaver or code framing"""
    exit_code = 3


class CandidateSetTooLarge(LinkAbstractionError):
    """Joint candidate set above the exhaustive-enumeration guard"""
    exit_code = 3


class NotPositiveDefinite(LinkAbstractionError):
    """Cholesky pivot below the configured floor"""
    exit_code = 4


class DegenerateBounds(LinkAbstractionError):
    """Lower and upper MIB bounds too close to identify a combining ratio"""
    exit_code = 4


class ZeroServingChannel(LinkAbstractionError):
    """Serving channel column with vanishing norm"""
    exit_code = 4


class MaxIterationsExceeded(LinkAbstractionError):
    """Directed search did not settle within its move budget"""
    exit_code = 4
