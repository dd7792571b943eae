class SnCoverError(Exception):
    """Base class for errors raised by this package."""


class DomainError(SnCoverError, ValueError):
    """An argument lies outside the range where the computation is defined."""


class ResourceLimitError(SnCoverError):
    """A configured enumeration or closure ceiling would be exceeded."""


class UnsupportedFamilyError(SnCoverError, ValueError):
    """The requested quantity is not modeled for this subgroup family."""


class CatalogError(SnCoverError):
    """The primitive-group catalog is malformed or lacks a required class."""
