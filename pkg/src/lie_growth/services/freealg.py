"""Free associative algebra over the rationals, and Lie elements inside it."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from ..core.exceptions import AlphabetError, ConsistencyError, NotLieError
from ..core.words import (
    Alphabet,
    BracketTree,
    Word,
    descending_key,
    is_ls_sequence,
    standard_bracketing,
)

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


class NcPoly:
    """Sparse noncommutative polynomial: word -> nonzero rational coefficient.

    Terms iterate greatest word first, so the leading word is the first term.
    """

    def __init__(self, terms: Mapping[Monomial, Fraction | int], alphabet: Alphabet):
        self.alphabet = alphabet
        self._terms = {w: Fraction(c) for w, c in terms.items() if c}

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls({}, alphabet)

    @classmethod
    def letter(cls, alphabet: Alphabet, code: int) -> "NcPoly":
        return cls({(code,): 1}, alphabet)

    # ── Inspection ──

    @cached_property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return tuple(sorted(self._terms.items(), key=lambda item: descending_key(item[0])))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coefficient(self, word: Word | Monomial) -> Fraction:
        letters = word.letters if isinstance(word, Word) else word
        return self._terms.get(letters, Fraction(0))

    def word_degree(self, letters: Monomial) -> int:
        return sum(self.alphabet.degree_of(c) for c in letters)

    @property
    def degree(self) -> int:
        """Largest word degree; 0 for the zero polynomial."""
        return max((self.word_degree(w) for w in self._terms), default=0)

    @property
    def leading_word(self) -> Word:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading word")
        return Word(self.terms[0][0], self.alphabet)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def homogeneous_components(self) -> dict[int, "NcPoly"]:
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for w, c in self._terms.items():
            parts.setdefault(self.word_degree(w), {})[w] = c
        return {d: NcPoly(parts[d], self.alphabet) for d in sorted(parts)}

    @property
    def is_homogeneous(self) -> bool:
        return len({self.word_degree(w) for w in self._terms}) <= 1

    def leading_part(self) -> "NcPoly":
        """Top-degree homogeneous component."""
        if not self._terms:
            return self
        top = self.degree
        return NcPoly(
            {w: c for w, c in self._terms.items() if self.word_degree(w) == top}, self.alphabet
        )

    # ── Arithmetic ──

    def _check(self, other: "NcPoly") -> None:
        if self.alphabet is not other.alphabet and self.alphabet != other.alphabet:
            raise AlphabetError("polynomials come from different alphabets")

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return NcPoly(terms, self.alphabet)

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self._terms.items()}, self.alphabet)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def scale(self, factor: Fraction | int) -> "NcPoly":
        return NcPoly({w: c * factor for w, c in self._terms.items()}, self.alphabet)

    def __mul__(self, other: "NcPoly | Fraction | int") -> "NcPoly":
        if isinstance(other, NcPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, factor: Fraction | int) -> "NcPoly":
        return self.scale(factor)

    def __str__(self) -> str:
        return _signed_sum((c, self.alphabet.format_word(w) or "1") for w, c in self.terms)

    def __repr__(self) -> str:
        return f"NcPoly({self!s})"


def _signed_sum(terms: Iterable[tuple[Fraction, str]]) -> str:
    """Render c_1*t_1 + c_2*t_2 ... with unit coefficients omitted."""
    text = ""
    for c, body in terms:
        if abs(c) != 1:
            body = f"{abs(c)}*{body}"
        if not text:
            text = ("-" if c < 0 else "") + body
        else:
            text += (" - " if c < 0 else " + ") + body
    return text or "0"


def multiply(a: NcPoly, b: NcPoly) -> NcPoly:
    """Concatenation product, extended bilinearly."""
    a._check(b)
    terms: dict[Monomial, Fraction] = {}
    for u, c in a._terms.items():
        for v, d in b._terms.items():
            w = u + v
            terms[w] = terms.get(w, 0) + c * d
    return NcPoly(terms, a.alphabet)


def bracket(a: NcPoly, b: NcPoly) -> NcPoly:
    """[a, b] = ab - ba."""
    return multiply(a, b) - multiply(b, a)


def expand(tree: BracketTree) -> NcPoly:
    """Expand a commutator into associative words."""
    if tree.is_leaf:
        return NcPoly.letter(tree.alphabet, tree.letter)
    return bracket(expand(tree.left), expand(tree.right))


class _Expansions:
    """Per-call cache of expanded LS-commutators."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._cache: dict[Monomial, NcPoly] = {}

    def __call__(self, letters: Monomial) -> NcPoly:
        if letters not in self._cache:
            self._cache[letters] = expand(standard_bracketing(Word(letters, self.alphabet)))
        return self._cache[letters]


def ls_decompose(e: NcPoly) -> dict[Word, Fraction]:
    """Coordinates of e in the basis of LS-commutators.

    Repeatedly subtracts (leading coefficient) * [leading word] from each
    homogeneous component. Fails with NotLieError as soon as a leading word is
    not an LS-word, which certifies that e is not a Lie element.
    """
    expansions = _Expansions(e.alphabet)
    result: dict[Word, Fraction] = {}
    for component in e.homogeneous_components().values():
        rest = component
        while rest:
            letters, coefficient = rest.terms[0]
            if not letters or not is_ls_sequence(letters):
                raise NotLieError(e.alphabet.format_word(letters) or "1")
            basis = expansions(letters)
            lead_letters, lead = basis.terms[0]
            if lead_letters != letters:
                raise ConsistencyError(
                    f"[{e.alphabet.format_word(letters)}] does not lead with its own support"
                )
            if lead != 1:
                # non-unit leading coefficient: the factor below divides by it
                logger.warning(
                    "LS-commutator of %s has leading coefficient %s",
                    e.alphabet.format_word(letters),
                    lead,
                )
            factor = coefficient / lead
            result[Word(letters, e.alphabet)] = factor
            rest = rest - basis.scale(factor)
    return result


def combine(terms: Iterable[tuple[Fraction, Word]], alphabet: Alphabet) -> NcPoly:
    """sum c_w * expand([w]) over LS-words w."""
    expansions = _Expansions(alphabet)
    total: dict[Monomial, Fraction] = {}
    for coefficient, word in terms:
        for w, c in expansions(word.letters):
            total[w] = total.get(w, 0) + coefficient * c
    return NcPoly(total, alphabet)


@dataclass(frozen=True, eq=False)
class LieElement:
    """A Lie element: rational combination of commutators with its expansion.

    `trees` is the bracket view as given; `poly` is its expansion in the free
    associative algebra. `from_poly` builds the LS-commutator view.
    """

    trees: tuple[tuple[Fraction, BracketTree], ...]
    poly: NcPoly

    @classmethod
    def from_trees(cls, trees: Iterable[tuple[Fraction | int, BracketTree]], alphabet: Alphabet):
        pairs = tuple((Fraction(c), t) for c, t in trees if c)
        total: dict[Monomial, Fraction] = {}
        for c, tree in pairs:
            for w, d in expand(tree):
                total[w] = total.get(w, 0) + c * d
        poly = NcPoly(total, alphabet)
        return cls(trees=pairs, poly=poly)

    @classmethod
    def from_poly(cls, poly: NcPoly) -> "LieElement":
        coordinates = ls_decompose(poly)
        trees = tuple((c, standard_bracketing(w)) for w, c in coordinates.items())
        return cls(trees=trees, poly=poly)

    @classmethod
    def from_coordinates(
        cls, coordinates: Mapping[Monomial, Fraction | int], alphabet: Alphabet
    ) -> "LieElement":
        """Build from LS-word coordinates (letter tuples)."""
        ordered = sorted(coordinates.items(), key=lambda item: descending_key(item[0]))
        words = [(Fraction(c), Word(w, alphabet)) for w, c in ordered if c]
        trees = tuple((c, standard_bracketing(w)) for c, w in words)
        return cls(trees=trees, poly=combine(words, alphabet))

    @classmethod
    def letter(cls, alphabet: Alphabet, code: int) -> "LieElement":
        return cls.from_trees([(1, BracketTree.leaf(alphabet, code))], alphabet)

    @property
    def alphabet(self) -> Alphabet:
        return self.poly.alphabet

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __bool__(self) -> bool:
        return bool(self.poly)

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def is_homogeneous(self) -> bool:
        return self.poly.is_homogeneous

    @cached_property
    def coordinates(self) -> dict[Word, Fraction]:
        """LS-commutator coordinates by ascending degree, greatest word first within a degree."""
        return ls_decompose(self.poly)

    def leading_part(self) -> "LieElement":
        return LieElement.from_poly(self.poly.leading_part())

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(trees=self.trees + other.trees, poly=self.poly + other.poly)

    def scale(self, factor: Fraction | int) -> "LieElement":
        factor = Fraction(factor)
        return LieElement(
            trees=tuple((c * factor, t) for c, t in self.trees if c * factor),
            poly=self.poly.scale(factor),
        )

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def bracket(self, other: "LieElement") -> "LieElement":
        trees = tuple(
            (c * d, BracketTree.pair(s, t)) for c, s in self.trees for d, t in other.trees
        )
        return LieElement(trees=trees, poly=bracket(self.poly, other.poly))

    def __str__(self) -> str:
        """Canonical text: LS-commutators greatest first, unit coefficients omitted."""
        return _signed_sum(
            (c, str(standard_bracketing(word))) for word, c in self.coordinates.items()
        )

    def __repr__(self) -> str:
        return f"LieElement({self!s})"
