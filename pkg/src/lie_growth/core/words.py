"""Graded alphabets, words, the prefix-greater order and Lyndon-Shirshov words.

Letters are stored as integer codes; a larger code is a greater letter. Words
are compared by the prefix-greater lexicographic order: the first differing
letter decides, and a proper prefix is greater than any of its extensions.
Under this order the LS-words are the words strictly greater than all of
their nontrivial rotations.
"""

import re
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

from .exceptions import AlphabetError, WordError

# LS-words up to this degree are found by filtering all words; above it they
# are streamed from the necklace successor rule.
FILTER_MAX_DEGREE = 14

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INDEXED_RE = re.compile(r"^x(\d+)(?:_(\d+))?$")


# ── Alphabets ─────────────────────────────────────────────────────────


class Alphabet(ABC):
    """Letters addressed by integer code, greater code = greater letter."""

    @abstractmethod
    def name_of(self, code: int) -> str: ...

    @abstractmethod
    def degree_of(self, code: int) -> int: ...

    @abstractmethod
    def code_of(self, name: str) -> int: ...

    def format_word(self, letters: tuple[int, ...]) -> str:
        names = [self.name_of(c) for c in letters]
        sep = "." if any(len(n) > 1 for n in names) else ""
        return sep.join(names)

    def split_word(self, text: str) -> list[str]:
        return text.split(".")

    def word(self, text: str) -> "Word":
        """Parse a word written as letter names, '.'-separated when names are long."""
        text = text.strip()
        if not text:
            return Word((), self)
        return Word(tuple(self.code_of(name) for name in self.split_word(text)), self)

    def letter(self, code: int) -> "Word":
        return Word((code,), self)


@dataclass(frozen=True)
class Letter:
    name: str
    degree: int = 1


@dataclass(frozen=True, eq=True)
class GradedAlphabet(Alphabet):
    """A finite ordered set of letters with positive degrees.

    The listed order is ascending: the last letter is the greatest.
    """

    letters: tuple[Letter, ...]

    def __post_init__(self):
        if not self.letters:
            raise AlphabetError("an alphabet needs at least one letter")
        names = [letter.name for letter in self.letters]
        duplicates = [name for name, count in Counter(names).items() if count > 1]
        if duplicates:
            raise AlphabetError(f"duplicate letter names: {', '.join(duplicates)}")
        for letter in self.letters:
            if not _NAME_RE.match(letter.name):
                raise AlphabetError(f"invalid letter name: {letter.name!r}")
            if letter.degree < 1:
                raise AlphabetError(f"letter {letter.name!r} has degree {letter.degree} < 1")

    @classmethod
    def parse(cls, spec: str) -> "GradedAlphabet":
        """Build an alphabet from text such as ``y:1,x:1`` (ascending order, so x > y).

        A missing degree means degree 1.
        """
        letters = []
        for item in spec.split(","):
            item = item.strip()
            if not item:
                raise AlphabetError(f"empty letter in alphabet spec {spec!r}")
            name, sep, degree = item.partition(":")
            if sep:
                try:
                    value = int(degree)
                except ValueError:
                    raise AlphabetError(f"invalid degree {degree!r} for letter {name!r}") from None
            else:
                value = 1
            letters.append(Letter(name=name.strip(), degree=value))
        return cls(tuple(letters))

    @classmethod
    def free(cls, rank: int) -> "GradedAlphabet":
        """Degree-1 alphabet of the given rank; x is the greatest letter."""
        if rank < 1:
            raise AlphabetError(f"rank must be at least 1, got {rank}")
        if rank <= 3:
            names = ["z", "y", "x"][3 - rank :]
        else:
            names = [f"x{i}" for i in range(1, rank + 1)]
        return cls(tuple(Letter(name) for name in names))

    @classmethod
    def from_histogram(cls, histogram: tuple[int, ...] | list[int]) -> "GradedAlphabet":
        """Letters a1, a2, ... listed by increasing degree, k_i of degree i."""
        letters = []
        for degree, count in enumerate(histogram, 1):
            if count < 0:
                raise AlphabetError(f"negative letter count k_{degree}={count}")
            for _ in range(count):
                letters.append(Letter(f"a{len(letters) + 1}", degree))
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ",".join(f"{letter.name}:{letter.degree}" for letter in self.letters)

    @cached_property
    def _codes(self) -> dict[str, int]:
        return {letter.name: code for code, letter in enumerate(self.letters)}

    def name_of(self, code: int) -> str:
        return self.letters[code].name

    def degree_of(self, code: int) -> int:
        return self.letters[code].degree

    def code_of(self, name: str) -> int:
        try:
            return self._codes[name]
        except KeyError:
            raise AlphabetError(f"unknown letter {name!r}") from None

    def split_word(self, text: str) -> list[str]:
        if "." in text or any(len(letter.name) > 1 for letter in self.letters):
            return text.split(".")
        return list(text)

    @property
    def codes(self) -> range:
        return range(len(self.letters))

    @property
    def max_code(self) -> int:
        return len(self.letters) - 1

    @property
    def min_degree(self) -> int:
        return min(letter.degree for letter in self.letters)

    @property
    def max_degree(self) -> int:
        return max(letter.degree for letter in self.letters)

    def histogram(self) -> tuple[int, ...]:
        """k_i = number of letters of degree i, for i = 1..max degree."""
        counts = [0] * self.max_degree
        for letter in self.letters:
            counts[letter.degree - 1] += 1
        return tuple(counts)

    def words_of_degree(self, degree: int) -> Iterator[tuple[int, ...]]:
        """All letter tuples of exactly the given degree, in code order."""
        if degree == 0:
            yield ()
            return
        for code, letter in enumerate(self.letters):
            if letter.degree <= degree:
                for rest in self.words_of_degree(degree - letter.degree):
                    yield (code, *rest)


@dataclass(frozen=True)
class IndexedAlphabet(Alphabet):
    """The countable alphabet x_1, x_2, ... in one or more families, every letter of degree 1.

    Letter x_i of family j has code (i-1)*families + (j-1), so raising an index
    by one adds `families` to the code. Names are ``x<i>`` for a single family
    and ``x<j>_<i>`` otherwise.
    """

    families: int = 1

    def __post_init__(self):
        if self.families < 1:
            raise AlphabetError(f"families must be at least 1, got {self.families}")

    def code(self, index: int, family: int = 1) -> int:
        if index < 1 or not 1 <= family <= self.families:
            raise AlphabetError(f"no letter x_{index} in family {family}")
        return (index - 1) * self.families + (family - 1)

    def index_of(self, code: int) -> int:
        return code // self.families + 1

    def family_of(self, code: int) -> int:
        return code % self.families + 1

    def name_of(self, code: int) -> str:
        if self.families == 1:
            return f"x{self.index_of(code)}"
        return f"x{self.family_of(code)}_{self.index_of(code)}"

    def degree_of(self, code: int) -> int:
        return 1

    def code_of(self, name: str) -> int:
        match = _INDEXED_RE.match(name)
        if not match:
            raise AlphabetError(f"unknown letter {name!r}")
        if self.families == 1:
            if match.group(2) is not None:
                raise AlphabetError(f"unknown letter {name!r}: single-family names are x<i>")
            return self.code(int(match.group(1)))
        if match.group(2) is None:
            raise AlphabetError(f"unknown letter {name!r}: family names are x<j>_<i>")
        return self.code(int(match.group(2)), int(match.group(1)))

    def split_word(self, text: str) -> list[str]:
        return text.split(".")


# ── Words ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Word:
    """Immutable sequence of letter codes over an alphabet."""

    letters: tuple[int, ...]
    alphabet: Alphabet = field(compare=False, repr=False)
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "degree", sum(self.alphabet.degree_of(c) for c in self.letters)
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.alphabet.format_word(self.letters)

    def __add__(self, other: "Word") -> "Word":
        _check_same_alphabet(self, other)
        return Word(self.letters + other.letters, self.alphabet)

    def __getitem__(self, item: slice) -> "Word":
        return Word(self.letters[item], self.alphabet)

    def rotations(self) -> Iterator["Word"]:
        """The nontrivial rotations vu of w = uv."""
        for i in range(1, len(self.letters)):
            yield Word(self.letters[i:] + self.letters[:i], self.alphabet)

    def contains(self, factor: "Word") -> bool:
        """True if `factor` occurs as a contiguous subword."""
        return _find(self.letters, factor.letters)


def _find(letters: tuple[int, ...], factor: tuple[int, ...]) -> bool:
    size = len(factor)
    return any(letters[i : i + size] == factor for i in range(len(letters) - size + 1))


def _check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet is not v.alphabet and u.alphabet != v.alphabet:
        raise AlphabetError("words come from different alphabets")


def _compare(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    if len(a) == len(b):
        return 0
    # a proper prefix is greater
    return 1 if len(a) < len(b) else -1


def compare_words(u: Word, v: Word) -> int:
    """Return 1, 0 or -1 as u is greater than, equal to or less than v."""
    _check_same_alphabet(u, v)
    return _compare(u.letters, v.letters)


def descending_key(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Sort key placing greater words first."""
    return tuple(-c for c in letters)


def is_ls_sequence(letters: tuple[int, ...]) -> bool:
    return all(
        _compare(letters, letters[i:] + letters[:i]) > 0 for i in range(1, len(letters))
    )


def is_ls_word(w: Word) -> bool:
    if not w.letters:
        raise WordError("the empty word is not an LS-word candidate")
    return is_ls_sequence(w.letters)


def cfl_factorize(w: Word) -> list[Word]:
    """Factor w into LS-words u_1 <= u_2 <= ... <= u_s (Duval's algorithm)."""
    if not w.letters:
        raise WordError("cannot factorize the empty word")
    s = w.letters
    n = len(s)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] >= s[j]:
            k = i if s[k] > s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(Word(s[i : i + j - k], w.alphabet))
            i += j - k
    return factors


# ── LS-word generation ────────────────────────────────────────────────


def enumerate_ls_words(alphabet: GradedAlphabet, degree: int) -> list[Word]:
    """LS-words of a degree by filtering every word of that degree."""
    found = [letters for letters in alphabet.words_of_degree(degree) if is_ls_sequence(letters)]
    found.sort(key=descending_key)
    return [Word(letters, alphabet) for letters in found]


def stream_ls_words(alphabet: GradedAlphabet, degree: int) -> Iterator[Word]:
    """LS-words of a degree in descending order, from the necklace successor rule.

    Walks all LS-words of length up to degree / min letter degree, greatest
    first, and keeps those of the right degree.
    """
    max_length = degree // alphabet.min_degree
    if max_length == 0:
        return
    top = alphabet.max_code + 1
    w = [top]
    while w:
        w[-1] -= 1
        if sum(alphabet.degree_of(c) for c in w) == degree:
            yield Word(tuple(w), alphabet)
        size = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - size])
        while w and w[-1] == 0:
            w.pop()


def generate_ls_words(
    alphabet: GradedAlphabet, degree: int, filter_max_degree: int = FILTER_MAX_DEGREE
) -> list[Word]:
    """All LS-words of exactly `degree`, each once, greatest first."""
    if degree < 1:
        raise WordError(f"degree must be at least 1, got {degree}")
    if degree <= filter_max_degree:
        return enumerate_ls_words(alphabet, degree)
    return list(stream_ls_words(alphabet, degree))


def iter_ls_words(
    alphabet: GradedAlphabet, max_degree: int, filter_max_degree: int = FILTER_MAX_DEGREE
) -> Iterator[Word]:
    """LS-words of degree 1..max_degree, by degree, greatest first within a degree."""
    for degree in range(1, max_degree + 1):
        if degree <= filter_max_degree:
            yield from enumerate_ls_words(alphabet, degree)
        else:
            yield from stream_ls_words(alphabet, degree)


# ── Commutators ───────────────────────────────────────────────────────


@dataclass(frozen=True)
class BracketTree:
    """A leaf letter or a bracket [left, right] of two trees."""

    alphabet: Alphabet = field(compare=False, repr=False)
    letter: Optional[int] = None
    left: Optional["BracketTree"] = None
    right: Optional["BracketTree"] = None

    @classmethod
    def leaf(cls, alphabet: Alphabet, code: int) -> "BracketTree":
        return cls(alphabet=alphabet, letter=code)

    @classmethod
    def pair(cls, left: "BracketTree", right: "BracketTree") -> "BracketTree":
        if left.alphabet is not right.alphabet and left.alphabet != right.alphabet:
            raise AlphabetError("cannot bracket trees over different alphabets")
        return cls(alphabet=left.alphabet, left=left, right=right)

    @property
    def is_leaf(self) -> bool:
        return self.letter is not None

    @cached_property
    def support(self) -> Word:
        """The associative word obtained by erasing brackets."""
        if self.is_leaf:
            return Word((self.letter,), self.alphabet)
        return self.left.support + self.right.support

    @property
    def degree(self) -> int:
        return self.support.degree

    def __str__(self) -> str:
        if self.is_leaf:
            return self.alphabet.name_of(self.letter)
        return f"[{self.left},{self.right}]"


def left_normed(trees: list[BracketTree]) -> BracketTree:
    """[t_1, t_2, ..., t_s] = [[...[t_1, t_2], ...], t_s]."""
    result = trees[0]
    for tree in trees[1:]:
        result = BracketTree.pair(result, tree)
    return result


def standard_bracketing(w: Word) -> BracketTree:
    """The LS-commutator whose associative support is the LS-word w.

    Strips the first (greatest) letter y, factors the tail into LS-words
    u_1 <= ... <= u_s and returns [y, [u_1], ..., [u_s]] left-normed.
    """
    if not w.letters or not is_ls_sequence(w.letters):
        raise WordError(f"{w!s} is not an LS-word")
    return _bracket(w)


def _bracket(w: Word) -> BracketTree:
    head = BracketTree.leaf(w.alphabet, w.letters[0])
    if len(w) == 1:
        return head
    return left_normed([head] + [_bracket(u) for u in cfl_factorize(w[1:])])


def is_ls_commutator(tree: BracketTree) -> bool:
    """Check that a tree is an LS-commutator.

    Letters are; a pair c = [c1, c2] is when both halves are, c1 > c2, and
    c1 = [c11, c12] implies c12 <= c2.
    """
    if tree.is_leaf:
        return True
    if not (is_ls_commutator(tree.left) and is_ls_commutator(tree.right)):
        return False
    if compare_words(tree.left.support, tree.right.support) <= 0:
        return False
    if not tree.left.is_leaf:
        return compare_words(tree.left.right.support, tree.right.support) <= 0
    return True
