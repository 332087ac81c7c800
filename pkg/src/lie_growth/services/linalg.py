"""Exact sparse linear algebra: coefficient fields, incremental echelon forms, graded subspaces."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Optional

from ..core.config import DEFAULT_PRIME, get_config
from ..core.exceptions import DegreeCapError, LieGrowthError
from ..core.models import FieldMode
from ..core.words import GradedAlphabet
from .lsbasis import LSBasis, basis_for

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Vector = dict[int, object]
Provenance = dict[Hashable, object]


# ── Fields ────────────────────────────────────────────────────────────


class RationalField:
    """The rationals, as Python Fractions."""

    mode = FieldMode.RATIONAL
    prime: Optional[int] = None

    def coerce(self, value: Fraction | int) -> Fraction:
        return Fraction(value)

    def normalize(self, value: Fraction) -> Fraction:
        return value

    def inverse(self, value: Fraction) -> Fraction:
        return Fraction(1) / value

    def to_fraction(self, value: Fraction) -> Fraction:
        return value


@dataclass(frozen=True)
class PrimeField:
    """Integers modulo a fixed prime."""

    prime: int = DEFAULT_PRIME
    mode = FieldMode.PRIME

    def coerce(self, value: Fraction | int) -> int:
        value = Fraction(value)
        if value.denominator % self.prime == 0:
            raise LieGrowthError(f"coefficient {value} is not defined modulo {self.prime}")
        return value.numerator * pow(value.denominator, -1, self.prime) % self.prime

    def normalize(self, value: int) -> int:
        return value % self.prime

    def inverse(self, value: int) -> int:
        return pow(value, -1, self.prime)

    def to_fraction(self, value: int) -> Fraction:
        """Symmetric lift to (-p/2, p/2]."""
        value %= self.prime
        return Fraction(value - self.prime if value > self.prime // 2 else value)


Field = RationalField | PrimeField


def make_field(mode: FieldMode | str, prime: int = DEFAULT_PRIME) -> Field:
    if FieldMode(mode) is FieldMode.PRIME:
        return PrimeField(prime)
    return RationalField()


# ── Echelon form ──────────────────────────────────────────────────────


class Echelon:
    """Rows in reduced row-echelon form, grown one vector at a time.

    Rows are sparse dicts column -> value with pivot value 1; the pivot of a
    row is its smallest column and no other row has an entry there. With
    `track` set, each row also carries its provenance: the combination of
    added inputs that produced it.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict[int, Vector] = {}
        self.provenance: dict[int, Provenance] = {}
        self._column_rows: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def _axpy(self, target: dict, source: Mapping, factor) -> None:
        """target -= factor * source, dropping zeros."""
        normalize = self.field.normalize
        for key, value in source.items():
            updated = normalize(target.get(key, 0) - factor * value)
            if updated:
                target[key] = updated
            else:
                target.pop(key, None)

    def reduce(
        self, vector: Mapping[int, object], provenance: Optional[Provenance] = None
    ) -> tuple[Vector, Provenance]:
        """Reduce a vector against the rows; returns the remainder and its provenance."""
        normalize = self.field.normalize
        rest = {c: normalize(v) for c, v in vector.items()}
        rest = {c: v for c, v in rest.items() if v}
        origin = dict(provenance or {})
        for pivot in [c for c in rest if c in self.rows]:
            factor = rest.get(pivot)
            if not factor:
                continue
            self._axpy(rest, self.rows[pivot], factor)
            if self.track:
                self._axpy(origin, self.provenance[pivot], factor)
        return rest, origin

    def contains(self, vector: Mapping[int, object]) -> bool:
        rest, _ = self.reduce(vector)
        return not rest

    def express(self, vector: Mapping[int, object]) -> Optional[Provenance]:
        """Inputs combining to `vector`, or None when it is outside the row space."""
        if not self.track:
            raise LieGrowthError("express() needs an echelon built with track=True")
        rest, origin = self.reduce(vector)
        if rest:
            return None
        return {key: self.field.normalize(-value) for key, value in origin.items() if value}

    def add(self, vector: Mapping[int, object], provenance: Optional[Provenance] = None) -> bool:
        """Insert a vector; returns False when it was already in the row space.

        `provenance` names the vector as a combination of inputs, usually {tag: 1}.
        Every stored row equals the combination recorded for it.
        """
        rest, origin = self.reduce(vector, provenance)
        if not rest:
            return False
        pivot = min(rest)
        scale = self.field.inverse(rest[pivot])
        row = {c: self.field.normalize(v * scale) for c, v in rest.items()}
        if self.track:
            origin = {k: self.field.normalize(v * scale) for k, v in origin.items() if v}

        for other in list(self._column_rows.get(pivot, ())):
            if other == pivot:
                continue
            other_row = self.rows[other]
            factor = other_row.get(pivot)
            if not factor:
                continue
            self._untrack(other, other_row)
            self._axpy(other_row, row, factor)
            self._track_columns(other, other_row)
            if self.track:
                self._axpy(self.provenance[other], origin, factor)

        self.rows[pivot] = row
        self._track_columns(pivot, row)
        if self.track:
            self.provenance[pivot] = origin
        return True

    def _track_columns(self, pivot: int, row: Vector) -> None:
        for c in row:
            self._column_rows.setdefault(c, set()).add(pivot)

    def _untrack(self, pivot: int, row: Vector) -> None:
        for c in row:
            self._column_rows.get(c, set()).discard(pivot)

    def basis(self) -> list[Vector]:
        return [self.rows[p] for p in self.pivots]

    def free_columns(self, width: int) -> list[int]:
        return [c for c in range(width) if c not in self.rows]


def rank_of(vectors: Iterable[Mapping[int, object]], field: Optional[Field] = None) -> int:
    echelon = Echelon(field or RationalField())
    for vector in vectors:
        echelon.add(vector)
    return echelon.rank


# ── Graded subspaces ──────────────────────────────────────────────────


class GradedSubspace:
    """A graded subspace of a free Lie algebra, truncated at `max_degree`.

    Degree n holds an echelon form over LS-commutator coordinates of L_n.
    """

    def __init__(
        self,
        alphabet: GradedAlphabet,
        max_degree: int,
        field: Optional[Field] = None,
        basis: Optional[LSBasis] = None,
    ):
        self.alphabet = alphabet
        self.max_degree = max_degree
        self.field = field or RationalField()
        self.basis = basis or basis_for(alphabet)
        self.components: dict[int, Echelon] = {}

    def __repr__(self) -> str:
        return f"GradedSubspace({self.alphabet}, dims={self.dims()})"

    @classmethod
    def full(cls, alphabet: GradedAlphabet, max_degree: int, field: Optional[Field] = None):
        """L itself up to max_degree."""
        space = cls(alphabet, max_degree, field or RationalField())
        for n in range(1, max_degree + 1):
            echelon = space.component(n)
            for column in range(space.basis.dimension(n)):
                echelon.add({column: 1})
        return space

    def component(self, degree: int) -> Echelon:
        if degree not in self.components:
            self.components[degree] = Echelon(self.field)
        return self.components[degree]

    def dim(self, degree: int) -> int:
        return self.component(degree).rank

    def dims(self) -> list[int]:
        return [self.dim(n) for n in range(1, self.max_degree + 1)]

    def ambient_dim(self, degree: int) -> int:
        return self.basis.dimension(degree)

    def to_columns(self, coordinates: Mapping[Monomial, object]) -> dict[int, object]:
        return {
            self.basis.column(w): self.field.coerce(c) if isinstance(c, Fraction) else c
            for w, c in coordinates.items()
        }

    def to_words(self, degree: int, vector: Mapping[int, object]) -> dict[Monomial, object]:
        return {self.basis.word_at(degree, c): v for c, v in vector.items()}

    def add(self, degree: int, coordinates: Mapping[Monomial, object]) -> bool:
        return self.component(degree).add(self.to_columns(coordinates))

    def contains(self, degree: int, coordinates: Mapping[Monomial, object]) -> bool:
        if degree > self.max_degree:
            raise LieGrowthError(f"degree {degree} is beyond the truncation {self.max_degree}")
        return self.component(degree).contains(self.to_columns(coordinates))

    def rows(self, degree: int) -> list[dict[Monomial, object]]:
        """Basis of the degree-n component, as LS-word coordinate dicts."""
        return [self.to_words(degree, row) for row in self.component(degree).basis()]

    def is_full(self, degree: int) -> bool:
        return self.dim(degree) == self.ambient_dim(degree)

    def issubspace(self, other: "GradedSubspace") -> bool:
        """Row-space containment degree by degree, up to the common truncation."""
        top = min(self.max_degree, other.max_degree)
        return all(
            other.component(n).contains(row)
            for n in range(1, top + 1)
            for row in self.component(n).basis()
        )


def check_degree_cap(max_degree: int, field: Field, cap: Optional[int] = None) -> None:
    """Refuse linear-algebra work beyond the configured degree cap of the field mode."""
    if cap is None:
        cap = get_config().degree_cap(prime_field=field.mode is FieldMode.PRIME)
    if max_degree > cap:
        hint = " (try --field-mode prime)" if field.mode is FieldMode.RATIONAL else ""
        raise DegreeCapError(
            f"degree {max_degree} exceeds the {field.mode.value} cap of {cap}{hint}"
        )
