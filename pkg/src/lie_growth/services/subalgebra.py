"""Subalgebra service: leading parts, irreducible sets, growth tables, free complements."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Optional

from ..core.exceptions import GeneratorError, ReducibleSetError
from ..core.models import GrowthTable
from ..core.words import GradedAlphabet
from .freealg import LieElement, NcPoly, bracket
from .linalg import Field, GradedSubspace, RationalField, check_degree_cap
from .series import greedy_base_sequence

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Coordinates = dict[Monomial, object]
# degree -> [(tag, LS coordinates)]
GradedGenerators = dict[int, list[tuple[Hashable, Coordinates]]]


@dataclass(frozen=True)
class GeneratorSet:
    """A finite set of Lie elements generating a subalgebra or subideal."""

    elements: tuple[LieElement, ...]

    @classmethod
    def of(cls, elements: Iterable[LieElement]) -> "GeneratorSet":
        return cls(tuple(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def homogeneous(self) -> bool:
        return all(e.is_homogeneous for e in self.elements)

    @property
    def max_degree(self) -> int:
        return max((e.degree for e in self.elements), default=0)

    def histogram(self) -> tuple[int, ...]:
        """Number of generators per degree, for homogeneous sets."""
        counts = [0] * self.max_degree
        for e in self.elements:
            counts[e.degree - 1] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class ComplementResult:
    """Generators adjoined to complete a homogeneous set, and the resulting codimensions."""

    added: GeneratorSet
    codim: GrowthTable


def graded_coordinates(element: LieElement) -> dict[int, dict[Monomial, Fraction]]:
    """LS coordinates of an element, split by degree."""
    parts: dict[int, dict[Monomial, Fraction]] = {}
    for word, c in element.coordinates.items():
        parts.setdefault(word.degree, {})[word.letters] = c
    return parts


def homogeneous_generators(S: GeneratorSet, field: Field) -> GradedGenerators:
    """Tag each homogeneous generator by its position and convert to field coordinates."""
    gens: GradedGenerators = {}
    for i, element in enumerate(S.elements):
        if not element:
            continue
        (degree, coords), *rest = graded_coordinates(element).items()
        if rest:
            raise GeneratorError(f"generator {element} is not homogeneous")
        gens.setdefault(degree, []).append((i, {w: field.coerce(c) for w, c in coords.items()}))
    return gens


def grow(
    space: GradedSubspace,
    gens: GradedGenerators,
    degrees: Optional[Iterable[int]] = None,
    track: bool = False,
) -> GradedSubspace:
    """Fill `space` with the subalgebra generated by homogeneous generators.

    Degree n is spanned by the generators of degree n and the brackets
    [h, g] with h in degree n - e and g a generator of degree e. With `track`
    each row remembers its left-normed monomials in generator tags.
    """
    basis = space.basis
    for n in degrees or range(1, space.max_degree + 1):
        component = space.component(n)
        if track:
            component.track = True
        for tag, coords in gens.get(n, []):
            component.add(space.to_columns(coords), {(tag,): 1} if track else None)
        for e, generators in sorted(gens.items()):
            if e >= n:
                continue
            lower = space.component(n - e)
            for pivot in lower.pivots:
                row = space.to_words(n - e, lower.rows[pivot])
                origin = lower.provenance.get(pivot, {}) if track else None
                for tag, coords in generators:
                    image = basis.bracket_vectors(row, coords)
                    if not image:
                        continue
                    provenance = (
                        {m + (tag,): c for m, c in origin.items()} if track else None
                    )
                    component.add(space.to_columns(image), provenance)
        logger.debug("degree %d: dimension %d", n, component.rank)
    return space


def leading_parts(S: GeneratorSet) -> GeneratorSet:
    """The top homogeneous component of every generator."""
    for element in S.elements:
        if not element:
            raise GeneratorError("generating sets may not contain zero")
    return GeneratorSet(tuple(e.leading_part() for e in S.elements))


def _left_normed_poly(monomial: Monomial, elements: list[LieElement]) -> NcPoly:
    result = elements[monomial[0]].poly
    for tag in monomial[1:]:
        result = bracket(result, elements[tag].poly)
    return result


def _membership_witness(
    target: LieElement, others: list[LieElement], alphabet: GradedAlphabet
) -> Optional[NcPoly]:
    """An element of <others> whose leading part is Lp(target), if one exists."""
    lead = target.leading_part()
    degree = lead.degree
    space = GradedSubspace(alphabet, degree, RationalField())
    gens = homogeneous_generators(leading_parts(GeneratorSet(tuple(others))), space.field)
    gens = {e: g for e, g in gens.items() if e <= degree}
    grow(space, gens, track=True)
    coords = graded_coordinates(lead)[degree]
    combination = space.component(degree).express(space.to_columns(coords))
    if combination is None:
        return None
    witness = NcPoly.zero(alphabet)
    for monomial, c in combination.items():
        witness = witness + _left_normed_poly(monomial, others).scale(c)
    return witness


def irreducible_reduce(S: GeneratorSet, max_degree: int) -> GeneratorSet:
    """Rewrite S until no leading part lies in the subalgebra generated by the others'.

    Each rewrite subtracts from s an element of the subalgebra generated by the
    remaining generators, so the generated subalgebra does not change; the
    degree of s drops, or s vanishes and is dropped.
    """
    if S.max_degree > max_degree:
        raise GeneratorError(f"generators of degree {S.max_degree} exceed degree {max_degree}")
    elements = [e for e in S.elements if e]
    if not elements:
        return GeneratorSet(())
    alphabet = elements[0].alphabet
    position = 0
    while position < len(elements):
        s = elements[position]
        others = elements[:position] + elements[position + 1 :]
        witness = _membership_witness(s, others, alphabet) if others else None
        if witness is None:
            position += 1
            continue
        reduced = LieElement.from_poly(s.poly - witness)
        logger.debug("generator %s reduced to %s", s, reduced)
        if reduced:
            elements[position] = reduced
        else:
            del elements[position]
        position = 0
    return GeneratorSet(tuple(elements))


def is_irreducible(S: GeneratorSet, max_degree: int) -> bool:
    elements = list(S.elements)
    if any(e.degree > max_degree for e in elements):
        raise GeneratorError(f"generators exceed degree {max_degree}")
    if not all(elements):
        return False
    if len(elements) < 2:
        return True
    alphabet = elements[0].alphabet
    return all(
        _membership_witness(s, elements[:i] + elements[i + 1 :], alphabet) is None
        for i, s in enumerate(elements)
    )


def homogeneous_form(S: GeneratorSet, max_degree: int) -> GeneratorSet:
    if S.homogeneous:
        return S
    logger.warning("generators are not homogeneous; working with leading parts of a reduced set")
    return leading_parts(irreducible_reduce(S, max(max_degree, S.max_degree)))


def subalgebra_space(
    S: GeneratorSet, alphabet: GradedAlphabet, max_degree: int, field: Optional[Field] = None
) -> GradedSubspace:
    """gr H for the subalgebra H generated by S, truncated at max_degree."""
    field = field or RationalField()
    check_degree_cap(max_degree, field)
    S = homogeneous_form(S, max_degree)
    space = GradedSubspace(alphabet, max_degree, field)
    return grow(space, homogeneous_generators(S, field))


def subalgebra_growth(
    S: GeneratorSet, alphabet: GradedAlphabet, max_degree: int, field: Optional[Field] = None
) -> GrowthTable:
    """d(n) = dim(gr H ∩ L_n) and its running total."""
    return GrowthTable.from_dimensions(subalgebra_space(S, alphabet, max_degree, field).dims())


def algebra_generators(space: GradedSubspace) -> GradedGenerators:
    """A minimal homogeneous generating set of a graded subalgebra, degree by degree.

    In degree n the generators complete the part already generated by lower
    generators to the whole component.
    """
    gens: GradedGenerators = {}
    generated = GradedSubspace(space.alphabet, space.max_degree, space.field, space.basis)
    for n in range(1, space.max_degree + 1):
        grow(generated, gens, degrees=[n])
        component = generated.component(n)
        for row in space.component(n).basis():
            if component.add(row):
                gens.setdefault(n, []).append((len(gens.get(n, [])), space.to_words(n, row)))
        logger.debug("degree %d: %d algebra generators", n, len(gens.get(n, [])))
    return gens


def free_complement(
    B0: GeneratorSet, alphabet: GradedAlphabet, max_degree: int, field: Optional[Field] = None
) -> ComplementResult:
    """Adjoin homogeneous elements to an irreducible homogeneous set until it generates L_n, n >= t.

    t is the top degree of B0. In each degree s >= t the LS-commutators on
    columns outside the echelon of the generated component are adjoined.
    """
    field = field or RationalField()
    check_degree_cap(max_degree, field)
    if not B0.homogeneous:
        raise GeneratorError("free_complement needs homogeneous generators")
    if not is_irreducible(B0, max_degree):
        raise ReducibleSetError("the generating set is reducible")
    top = B0.max_degree
    space = GradedSubspace(alphabet, max_degree, field)
    gens = homogeneous_generators(B0, field)
    added: list[LieElement] = []
    for n in range(1, max_degree + 1):
        grow(space, gens, degrees=[n])
        if n < top:
            continue
        component = space.component(n)
        for column in component.free_columns(space.ambient_dim(n)):
            word = space.basis.word_at(n, column)
            component.add({column: 1})
            gens.setdefault(n, []).append((len(B0) + len(added), {word: field.coerce(1)}))
            added.append(space.basis.element({word: 1}))
    codim = [space.ambient_dim(n) - space.dim(n) for n in range(1, max_degree + 1)]
    return ComplementResult(added=GeneratorSet(tuple(added)), codim=GrowthTable.from_dimensions(codim))


def greedy_generators(m0: str | Fraction, length: int) -> GeneratorSet:
    """Generators [x, y, ..., y] of degree i for each k_i = 1 of the greedy sequence for m0.

    They are part of the free basis x, [x,y], [x,y,y], ... of the ideal of
    L(x, y) generated by x, so they freely generate a subalgebra whose
    generating data is the greedy sequence.
    """
    alphabet = GradedAlphabet.free(2)
    x, y = alphabet.code_of("x"), alphabet.code_of("y")
    sequence = greedy_base_sequence(m0, length)
    elements = []
    for degree, k in enumerate(sequence.coefficients, 1):
        if k:
            word = (x,) + (y,) * (degree - 1)
            elements.append(LieElement.from_coordinates({word: 1}, alphabet))
    return GeneratorSet(tuple(elements))
