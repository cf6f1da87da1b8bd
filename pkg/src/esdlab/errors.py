"""Exception types shared across the package."""


class EsdlabError(Exception):
    """Base class for all esdlab errors."""


class ParameterError(EsdlabError, ValueError):
    """An argument or configuration value is outside its allowed range."""


class InvalidStateError(EsdlabError, ValueError):
    """A density matrix or transfer tensor violates its invariants."""
