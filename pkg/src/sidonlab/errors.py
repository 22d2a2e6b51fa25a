"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: DomainError/ValidationError -> 2,
CapabilityError -> 2, InternalCheckError -> 3.
"""


class SidonlabError(Exception):
    pass


class DomainError(SidonlabError, ValueError):
    """An argument is outside the operation's domain (e.g. inverse of 0)."""


class ValidationError(SidonlabError, ValueError):
    """A structured input fails its invariants (e.g. a non-Sidon point set)."""


class CapabilityError(SidonlabError):
    """The request is valid but beyond the supported size limits."""


class InternalCheckError(SidonlabError):
    """An internal exactness assertion failed; indicates a bug, not bad input."""
