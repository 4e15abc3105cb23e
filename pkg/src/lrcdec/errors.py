class ParameterError(ValueError):
    """Rejected input: parameters or data outside the supported range."""
