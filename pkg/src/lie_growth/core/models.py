"""Data model definitions."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


class FieldMode(str, Enum):
    RATIONAL = "rational"
    PRIME = "prime"


class Engine(str, Enum):
    """Cogrowth computation path."""

    FORMULA = "formula"
    LSWORDS = "lswords"
    LINEAR = "linear"


@dataclass(frozen=True)
class GrowthRow:
    n: int
    d: int
    g: int


@dataclass
class GrowthTable:
    """Graded values d(n) with their running totals g(n).

    `offset` is the value of g just before the first row: 0 for Lie algebras,
    and the table of a word monoid starts at n=0 with d(0)=1 instead.
    """

    rows: list[GrowthRow] = field(default_factory=list)
    offset: int = 0

    @classmethod
    def from_dimensions(
        cls, dims: Iterable[int], start: int = 1, offset: int = 0
    ) -> "GrowthTable":
        rows = []
        total = offset
        for n, d in enumerate(dims, start):
            total += d
            rows.append(GrowthRow(n=n, d=d, g=total))
        return cls(rows=rows, offset=offset)

    def _row(self, n: int) -> GrowthRow:
        for row in self.rows:
            if row.n == n:
                return row
        raise KeyError(n)

    def d(self, n: int) -> int:
        return self._row(n).d

    def g(self, n: int) -> int:
        return self._row(n).g

    @property
    def dims(self) -> list[int]:
        return [row.d for row in self.rows]

    @property
    def totals(self) -> list[int]:
        return [row.g for row in self.rows]

    @property
    def max_degree(self) -> int:
        return self.rows[-1].n if self.rows else 0

    def truncate(self, max_degree: int) -> "GrowthTable":
        return GrowthTable(
            rows=[row for row in self.rows if row.n <= max_degree], offset=self.offset
        )

    def to_rows(self) -> list[dict]:
        return [{"n": row.n, "d": row.d, "g": row.g} for row in self.rows]


@dataclass(frozen=True)
class ConditionReport:
    """Conditions G and W_z for a histogram at parameter z."""

    g: bool
    wz: bool
    f0: Optional[Fraction] = None


@dataclass(frozen=True)
class BaseResult:
    """Exponential base z0 bracketed by exact rationals.

    F(0) > 1 at `lo` and F(0) <= 1 at `hi`. `poly` lists the integer
    coefficients of z^d - k_1 z^(d-1) - ... - k_d, leading coefficient first.
    """

    lo: Fraction
    hi: Fraction
    poly: tuple[int, ...]
    sign_changes: int
    exact: bool = False

    @property
    def z0(self) -> float:
        if self.exact:
            return float(self.hi)
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class GreedySequence:
    """The 0/1 histogram chosen greedily for a target base m0, with remainders a_j."""

    m0: Fraction
    coefficients: tuple[int, ...]
    remainders: tuple[Fraction, ...]


@dataclass(frozen=True)
class EscapeResult:
    """Outcome of an escape-exponent search.

    `exponent` is None when no escape was found within `cap` steps; otherwise
    `witness` is a monomial of D^exponent(a) whose letter indices all exceed k.
    """

    exponent: Optional[int]
    cap: int
    witness: Optional[tuple[int, ...]] = None
    term_counts: tuple[int, ...] = ()

    @property
    def found(self) -> bool:
        return self.exponent is not None
