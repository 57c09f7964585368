"""Exception types shared across the library.

The command line front end maps these onto exit codes, so user-facing
failure modes get their own class instead of a bare ValueError.
"""


class ForestHopfError(Exception):
    """Base class for all library errors."""


class ParseError(ForestHopfError):
    """Malformed text input (forest grammar, word, permutation, path file)."""


class BoundExceededError(ForestHopfError):
    """A degree argument exceeded the configured computation bound."""


class StructureMismatchError(ForestHopfError):
    """Operands belong to different Hopf structures or value algebras."""


class SingularAtomError(ForestHopfError):
    """A skeleton integral hit a vanishing frequency partial sum."""


class MagnitudeTieError(ForestHopfError):
    """An atom has two frequencies of equal magnitude; its sector is not unique."""
