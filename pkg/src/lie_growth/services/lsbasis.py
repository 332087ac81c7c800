"""LS-commutator bases per degree and their bracket structure constants."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from ..core.words import (
    FILTER_MAX_DEGREE,
    GradedAlphabet,
    Word,
    cfl_factorize,
    generate_ls_words,
    is_ls_sequence,
)
from .freealg import LieElement

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Coordinates = dict[Monomial, int]


class LSBasis:
    """LS-words of each degree, used as coordinate columns, and their brackets.

    Columns of degree n are the LS-words of degree n, greatest first.
    """

    def __init__(self, alphabet: GradedAlphabet, filter_max_degree: int = FILTER_MAX_DEGREE):
        self.alphabet = alphabet
        self.filter_max_degree = filter_max_degree
        self._words: dict[int, list[Monomial]] = {}
        self._index: dict[int, dict[Monomial, int]] = {}
        self._brackets: dict[tuple[Monomial, Monomial], Coordinates] = {}
        self._right_factor: dict[Monomial, int] = {}

    def words(self, degree: int) -> list[Monomial]:
        if degree not in self._words:
            found = generate_ls_words(self.alphabet, degree, self.filter_max_degree)
            words = [w.letters for w in found]
            self._words[degree] = words
            self._index[degree] = {w: i for i, w in enumerate(words)}
            logger.debug("LS basis in degree %d has %d elements", degree, len(words))
        return self._words[degree]

    def dimension(self, degree: int) -> int:
        return len(self.words(degree))

    def column(self, word: Monomial) -> int:
        degree = self.degree(word)
        self.words(degree)
        return self._index[degree][word]

    def word_at(self, degree: int, column: int) -> Monomial:
        return self.words(degree)[column]

    def degree(self, word: Monomial) -> int:
        return sum(self.alphabet.degree_of(c) for c in word)

    def split(self, word: Monomial) -> tuple[Monomial, Monomial]:
        """Standard factorization w = w1 w2, where w2 is the last factor of the tail."""
        if word not in self._right_factor:
            tail = cfl_factorize(Word(word[1:], self.alphabet))
            self._right_factor[word] = len(word) - len(tail[-1])
        cut = self._right_factor[word]
        return word[:cut], word[cut:]

    def bracket(self, a: Monomial, b: Monomial) -> Coordinates:
        """[a, b] of two LS-commutators in LS-commutator coordinates.

        For a > b: if a is a letter, or its standard right factor a2 <= b, then
        ab is an LS-word and [a, b] is its commutator. Otherwise [a, b] =
        [a1, [a2, b]] + [[a1, b], a2].
        """
        key = (a, b)
        if key in self._brackets:
            return self._brackets[key]
        if a == b:
            result: Coordinates = {}
        elif _less(a, b):
            result = {w: -c for w, c in self.bracket(b, a).items()}
        else:
            result = self._bracket_ordered(a, b)
        self._brackets[key] = result
        return result

    def _bracket_ordered(self, a: Monomial, b: Monomial) -> Coordinates:
        if len(a) == 1:
            return {a + b: 1}
        a1, a2 = self.split(a)
        if not _less(b, a2):
            return {a + b: 1}
        result: Coordinates = {}
        for w, c in self.bracket(a2, b).items():
            for v, d in self.bracket(a1, w).items():
                result[v] = result.get(v, 0) + c * d
        for w, c in self.bracket(a1, b).items():
            for v, d in self.bracket(w, a2).items():
                result[v] = result.get(v, 0) + c * d
        return {w: c for w, c in result.items() if c}

    def bracket_vectors(
        self, u: Mapping[Monomial, Fraction | int], v: Mapping[Monomial, Fraction | int]
    ) -> dict[Monomial, Fraction | int]:
        """Bilinear extension of `bracket` to coordinate vectors."""
        result: dict[Monomial, Fraction | int] = {}
        for a, c in u.items():
            for b, d in v.items():
                for w, e in self.bracket(a, b).items():
                    result[w] = result.get(w, 0) + c * d * e
        return {w: c for w, c in result.items() if c}

    def element(self, coordinates: Mapping[Monomial, Fraction | int]) -> LieElement:
        return LieElement.from_coordinates(coordinates, self.alphabet)


def _less(u: Monomial, v: Monomial) -> bool:
    """u < v in the prefix-greater order."""
    for x, y in zip(u, v):
        if x != y:
            return x < y
    return len(u) > len(v)


@lru_cache(maxsize=16)
def basis_for(alphabet: GradedAlphabet, filter_max_degree: int = FILTER_MAX_DEGREE) -> LSBasis:
    """Shared LSBasis per alphabet, so structure constants are computed once."""
    return LSBasis(alphabet, filter_max_degree)


def ls_bracket(u: Word, v: Word) -> dict[Word, int]:
    """Bracket of the LS-commutators [u] and [v], expanded in LS-commutators."""
    if not (is_ls_sequence(u.letters) and is_ls_sequence(v.letters)):
        raise ValueError(f"{u} and {v} must both be LS-words")
    basis = basis_for(u.alphabet)
    return {Word(w, u.alphabet): c for w, c in basis.bracket(u.letters, v.letters).items()}
