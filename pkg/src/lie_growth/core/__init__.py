"""Core module."""

from .config import Config, get_config
from .exceptions import (
    AlphabetError,
    ConsistencyError,
    DegreeCapError,
    ExpressionError,
    LieGrowthError,
    NotLieError,
    WordError,
)
from .models import (
    BaseResult,
    ConditionReport,
    Engine,
    EscapeResult,
    FieldMode,
    GreedySequence,
    GrowthRow,
    GrowthTable,
    OutputFormat,
)
from .words import BracketTree, GradedAlphabet, IndexedAlphabet, Word

__all__ = [
    "Config",
    "get_config",
    "LieGrowthError",
    "AlphabetError",
    "WordError",
    "ExpressionError",
    "NotLieError",
    "DegreeCapError",
    "ConsistencyError",
    "GrowthRow",
    "GrowthTable",
    "ConditionReport",
    "BaseResult",
    "GreedySequence",
    "EscapeResult",
    "OutputFormat",
    "FieldMode",
    "Engine",
    "GradedAlphabet",
    "IndexedAlphabet",
    "Word",
    "BracketTree",
]
