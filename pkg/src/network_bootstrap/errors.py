"""Exception hierarchy with stable machine-readable error codes."""

from __future__ import annotations


class NetworkBootstrapError(ValueError):
    """Base error for invalid inputs; ``code`` is reported verbatim by the CLI."""

    default_code = "invalid_input"

    def __init__(self, message: str, code: str | None = None) -> None:
        super().__init__(message)
        self.code = code or self.default_code

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class NetworkValidationError(NetworkBootstrapError):
    """Raised when an edge list violates the network invariants."""

    default_code = "invalid_network"


class DimensionMismatchError(NetworkBootstrapError):
    default_code = "dimension_mismatch"


class NonPSDError(NetworkBootstrapError):
    """Raised when a matrix expected to be PSD has a clearly negative eigenvalue."""

    default_code = "non_psd"


class CovarianceError(NetworkBootstrapError):
    default_code = "non_finite"


class BlockSizeError(NetworkBootstrapError):
    default_code = "blocks_too_large"


class GammaCoverageError(NetworkBootstrapError):
    default_code = "gamma_too_short"


class ParameterError(NetworkBootstrapError):
    default_code = "invalid_parameter"


class DataFileError(NetworkBootstrapError):
    default_code = "malformed_file"


class ConfigurationError(NetworkBootstrapError):
    default_code = "invalid_config"


class UsageError(NetworkBootstrapError):
    """Raised for unknown flags or a missing sub-command."""

    default_code = "usage_error"


__all__ = [
    "NetworkBootstrapError",
    "NetworkValidationError",
    "DimensionMismatchError",
    "NonPSDError",
    "CovarianceError",
    "BlockSizeError",
    "GammaCoverageError",
    "ParameterError",
    "DataFileError",
    "ConfigurationError",
    "UsageError",
]
