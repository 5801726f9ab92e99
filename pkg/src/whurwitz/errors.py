class HurwitzError(Exception):
    """Base class; ``kind`` is the machine-readable tag used by the CLI."""

    kind = "error"


class WeightMismatch(HurwitzError, ValueError):
    kind = "weight_mismatch"


class CapExceeded(HurwitzError):
    kind = "cap_exceeded"


class ParameterError(HurwitzError, ValueError):
    kind = "parameter_error"


class UnsupportedPreset(HurwitzError):
    kind = "unsupported_preset"


class RouteMismatch(HurwitzError):
    kind = "route_mismatch"


class InterpolationError(HurwitzError):
    kind = "interpolation_error"
