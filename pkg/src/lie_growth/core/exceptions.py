"""Exception hierarchy."""


class LieGrowthError(Exception):
    """Base class for every error raised by lie-growth."""


class AlphabetError(LieGrowthError, ValueError):
    """Malformed alphabet, or words from different alphabets mixed together."""


class WordError(LieGrowthError, ValueError):
    """A word does not satisfy an operation's precondition."""


class ExpressionError(LieGrowthError, ValueError):
    """A bracket expression could not be parsed."""

    def __init__(self, message: str, position: int = 0, text: str = ""):
        super().__init__(f"{message} (at offset {position})")
        self.message = message
        self.position = position
        self.text = text


class NotLieError(LieGrowthError, ValueError):
    """A polynomial is not a Lie element; `word` is the non-LS leading word met."""

    def __init__(self, word: str):
        super().__init__(f"not a Lie element: leading word {word!r} is not an LS-word")
        self.word = word


class DegreeCapError(LieGrowthError):
    """The requested degree exceeds the configured cap of the active field mode."""


class SubspaceError(LieGrowthError, ValueError):
    """Generators do not lie in the ambient subspace."""


class ReducibleSetError(LieGrowthError, ValueError):
    """A generating set that must be irreducible is not."""


class ConvergenceError(LieGrowthError):
    """An iterative numerical method did not converge."""


class DivergenceError(LieGrowthError, ValueError):
    """A generating function was evaluated outside its domain of convergence."""


class ConsistencyError(LieGrowthError):
    """An internal identity failed; this signals a bug, not bad input."""


class GeneratorError(LieGrowthError, ValueError):
    """A generating set violates a precondition (zero element, wrong shape)."""
