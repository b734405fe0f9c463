"""Exception types shared across the package."""


class HeavyWordsError(ValueError):
    """Base class for all library errors."""


class EmptyWordError(HeavyWordsError):
    """An operation that needs an average weight was given the empty word."""


class DomainError(HeavyWordsError):
    """An argument lies outside the operation's domain (non-binary letter,
    negative index into a one-sided sequence, target outside [0, 1], ...)."""


class ContractError(HeavyWordsError):
    """A caller-supplied precondition does not hold."""


class NotDerivableError(HeavyWordsError):
    """A word does not have the run structure required for desubstitution."""


class FixedPointError(HeavyWordsError):
    """No iterate of the substitution extends the seed letter."""


class BudgetError(HeavyWordsError):
    """An enumeration or window-growth budget was exceeded."""


class ParseError(HeavyWordsError):
    """Malformed textual input (word, target, substitution file, descriptor)."""
