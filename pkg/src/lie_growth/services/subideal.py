"""Subideal service: ideal and ℓ-subideal closures, cogrowth tables and their closed forms."""

import logging
from dataclasses import dataclass
from typing import Optional

from sympy import fibonacci
from sympy.ntheory import divisors

from ..core.config import get_config
from ..core.exceptions import ConsistencyError, GeneratorError, SubspaceError
from ..core.models import Engine, FieldMode, GrowthTable
from ..core.words import FILTER_MAX_DEGREE, GradedAlphabet, Word, iter_ls_words
from .counting import mobius
from .freealg import LieElement
from .linalg import Field, GradedSubspace, RationalField, check_degree_cap
from .subalgebra import (
    GeneratorSet,
    GradedGenerators,
    algebra_generators,
    graded_coordinates,
    homogeneous_form,
    homogeneous_generators,
)

logger = logging.getLogger(__name__)


@dataclass
class SubidealChain:
    """Stages id^1 S ⊇ id^2 S ⊇ ... ⊇ id^level S, each truncated at the same degree."""

    level: int
    stages: list[GradedSubspace]
    generators: GeneratorSet

    @property
    def closure(self) -> GradedSubspace:
        return self.stages[-1]

    @property
    def max_degree(self) -> int:
        return self.closure.max_degree

    def cogrowth(self) -> GrowthTable:
        return cogrowth_table(self.closure)

    def is_descending(self) -> bool:
        """Stage j+1 lies inside stage j in every degree."""
        return all(
            inner.issubspace(outer) for outer, inner in zip(self.stages, self.stages[1:])
        )


def letter_generators(alphabet: GradedAlphabet, field: Field) -> GradedGenerators:
    gens: GradedGenerators = {}
    for code in alphabet.codes:
        gens.setdefault(alphabet.degree_of(code), []).append((code, {(code,): field.coerce(1)}))
    return gens


def _check_inside(S: GeneratorSet, ambient: GradedSubspace) -> None:
    for element in S:
        for degree, coords in graded_coordinates(element).items():
            if degree > ambient.max_degree:
                continue
            if not ambient.contains(degree, coords):
                raise SubspaceError(f"generator {element} does not lie in the ambient subalgebra")


def ideal_closure(
    S: GeneratorSet,
    alphabet: GradedAlphabet,
    max_degree: int,
    field: Optional[Field] = None,
    ambient: Optional[GradedSubspace] = None,
    ambient_generators: Optional[GradedGenerators] = None,
) -> GradedSubspace:
    """The ideal generated by S inside `ambient` (the whole algebra when omitted).

    Degree n of the ideal is spanned by the generators of degree n and the
    left-normed brackets [u, a] with u in degree n - e and a an algebra
    generator of the ambient in degree e. Brackets raise degree, so one pass
    per degree reaches the closure.
    """
    field = field or (ambient.field if ambient is not None else RationalField())
    check_degree_cap(max_degree, field)
    S = homogeneous_form(S, max_degree)
    if ambient is not None:
        _check_inside(S, ambient)
        if ambient_generators is None:
            ambient_generators = algebra_generators(ambient)
    elif ambient_generators is None:
        ambient_generators = letter_generators(alphabet, field)

    space = GradedSubspace(alphabet, max_degree, field)
    basis = space.basis
    seeds = homogeneous_generators(S, field)
    for n in range(1, max_degree + 1):
        component = space.component(n)
        for _, coords in seeds.get(n, []):
            component.add(space.to_columns(coords))
        for e, generators in sorted(ambient_generators.items()):
            if e >= n:
                continue
            lower = space.component(n - e)
            for pivot in lower.pivots:
                row = space.to_words(n - e, lower.rows[pivot])
                for _, coords in generators:
                    image = basis.bracket_vectors(row, coords)
                    if image:
                        component.add(space.to_columns(image))
        logger.debug("ideal closure degree %d: dimension %d", n, component.rank)
    return space


def subideal_closure(
    S: GeneratorSet,
    level: int,
    alphabet: GradedAlphabet,
    max_degree: int,
    field: Optional[Field] = None,
) -> SubidealChain:
    """id^level S: the ideal of the previous stage generated by S, starting from L."""
    if level < 1:
        raise ValueError(f"level must be at least 1, got {level}")
    field = field or RationalField()
    check_degree_cap(max_degree, field)
    S = homogeneous_form(S, max_degree)
    stages: list[GradedSubspace] = []
    ambient: Optional[GradedSubspace] = None
    gens: Optional[GradedGenerators] = None
    for stage in range(1, level + 1):
        closure = ideal_closure(S, alphabet, max_degree, field, ambient, gens)
        logger.debug("stage %d of %d: dims %s", stage, level, closure.dims())
        stages.append(closure)
        if stage < level:
            ambient, gens = closure, algebra_generators(closure)
    return SubidealChain(level=level, stages=stages, generators=S)


def cogrowth_table(H: GradedSubspace, max_degree: Optional[int] = None) -> GrowthTable:
    """d(n) = dim L_n - dim(H ∩ L_n)."""
    top = H.max_degree if max_degree is None else max_degree
    if top > H.max_degree:
        raise ValueError(f"subspace is truncated at {H.max_degree}, below {top}")
    return GrowthTable.from_dimensions(H.ambient_dim(n) - H.dim(n) for n in range(1, top + 1))


# ── Closed forms ──────────────────────────────────────────────────────


def fibonacci_cogrowth(max_degree: int) -> GrowthTable:
    """Cogrowth of the 2-subideal closure of x in L(x, y).

    d(n) = (1/n) sum_(d|n) μ(d) (Fib(n/d - 1) + Fib(n/d + 1)), the necklace
    count of binary words without a cyclic factor xx.
    """
    if max_degree < 1:
        raise ValueError(f"max degree must be at least 1, got {max_degree}")
    dims = []
    for n in range(1, max_degree + 1):
        total = sum(
            mobius(d) * int(fibonacci(n // d - 1) + fibonacci(n // d + 1)) for d in divisors(n)
        )
        value, rest = divmod(total, n)
        if rest:
            raise ConsistencyError(f"Lucas sum {total} not divisible by {n}")
        dims.append(value)
    return GrowthTable.from_dimensions(dims)


def ls_avoidance_cogrowth(
    level: int,
    max_degree: int,
    alphabet: Optional[GradedAlphabet] = None,
    filter_max_degree: int = FILTER_MAX_DEGREE,
) -> GrowthTable:
    """Count LS-words, other than the maximal letter x, with no factor x^level.

    Those words index a basis of L modulo the level-subideal closure of x.
    """
    if level < 1:
        raise ValueError(f"level must be at least 1, got {level}")
    alphabet = alphabet or GradedAlphabet.free(2)
    _check_binary(alphabet)
    x = alphabet.max_code
    power = Word((x,) * level, alphabet)
    dims = [0] * max_degree
    for word in iter_ls_words(alphabet, max_degree, filter_max_degree):
        if word.letters == (x,) or word.contains(power):
            continue
        dims[word.degree - 1] += 1
    return GrowthTable.from_dimensions(dims)


def _check_binary(alphabet: GradedAlphabet) -> None:
    if alphabet.histogram() != (2,):
        raise GeneratorError(f"needs two letters of degree 1, got {alphabet}")


def _is_maximal_letter(S: GeneratorSet, alphabet: GradedAlphabet) -> bool:
    return len(S) == 1 and S.elements[0] == LieElement.letter(alphabet, alphabet.max_code)


# ── Engines ───────────────────────────────────────────────────────────


def cogrowth(
    engine: Engine | str,
    S: GeneratorSet,
    alphabet: GradedAlphabet,
    level: int,
    max_degree: int,
    field: Optional[Field] = None,
) -> GrowthTable:
    """Cogrowth of id^level S by one of three independent computations.

    `formula` is the closed form and covers only S = {x}, level 2 over two
    degree-1 letters; `lswords` covers S = {x} at any level; `linear` runs the
    closure itself. In prime-field mode the linear engine re-checks the
    degrees within the exact cap over the rationals.
    """
    engine = Engine(engine)
    field = field or RationalField()
    if engine is Engine.FORMULA:
        _check_binary(alphabet)
        if level != 2 or not _is_maximal_letter(S, alphabet):
            raise GeneratorError("the formula engine covers S = {x} at level 2 only")
        return fibonacci_cogrowth(max_degree)
    if engine is Engine.LSWORDS:
        _check_binary(alphabet)
        if not _is_maximal_letter(S, alphabet):
            raise GeneratorError("the lswords engine covers S = {x} only, x the greatest letter")
        return ls_avoidance_cogrowth(level, max_degree, alphabet, get_config().ls_filter_max_degree)

    table = subideal_closure(S, level, alphabet, max_degree, field).cogrowth()
    if field.mode is FieldMode.PRIME:
        top = min(max_degree, get_config().exact_degree_cap)
        exact = subideal_closure(S, level, alphabet, top).cogrowth()
        if exact.dims != table.truncate(top).dims:
            raise ConsistencyError(
                f"prime-field cogrowth {table.truncate(top).dims} differs from exact {exact.dims}"
            )
    return table
