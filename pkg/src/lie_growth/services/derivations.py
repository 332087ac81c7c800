"""The shifting derivation D x_i = x_(i+1) and escape from the ideals I_k = (x_1, ..., x_k)."""

import logging
from fractions import Fraction
from typing import Optional

from ..core.exceptions import AlphabetError
from ..core.models import EscapeResult
from ..core.words import IndexedAlphabet
from .freealg import LieElement, NcPoly

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


def _indexed(p: NcPoly | LieElement) -> tuple[NcPoly, IndexedAlphabet]:
    poly = p.poly if isinstance(p, LieElement) else p
    if not isinstance(poly.alphabet, IndexedAlphabet):
        raise AlphabetError("the shift acts on indexed alphabets x1, x2, ...")
    return poly, poly.alphabet


def shift_once(p: NcPoly | LieElement) -> NcPoly:
    """D(p), extended from the letters by the Leibniz rule."""
    poly, alphabet = _indexed(p)
    step = alphabet.families
    terms: dict[Monomial, Fraction] = {}
    for word, c in poly:
        for i, code in enumerate(word):
            shifted = word[:i] + (code + step,) + word[i + 1 :]
            terms[shifted] = terms.get(shifted, 0) + c
    return NcPoly(terms, alphabet)


def apply_shift(p: NcPoly | LieElement, n: int) -> NcPoly:
    """D^n(p)."""
    if n < 0:
        raise ValueError(f"shift power must be nonnegative, got {n}")
    poly, _ = _indexed(p)
    for _ in range(n):
        poly = shift_once(poly)
    return poly


def _small(alphabet: IndexedAlphabet, code: int, k: int, block: Optional[int]) -> bool:
    index = alphabet.index_of(code)
    if block is not None:
        index = (index - 1) % block + 1
    return index <= k


def escaping_monomials(p: NcPoly, k: int, block: Optional[int] = None) -> list[Monomial]:
    """Monomials of p with every letter index above k, greatest first."""
    if k < 1:
        raise ValueError(f"cutoff k must be at least 1, got {k}")
    poly, alphabet = _indexed(p)
    return [
        word
        for word, _ in poly
        if not any(_small(alphabet, code, k, block) for code in word)
    ]


def in_monomial_ideal(p: NcPoly | LieElement, k: int, block: Optional[int] = None) -> bool:
    """Membership in the ideal generated by x_1, ..., x_k.

    The ideal is spanned by monomials, so p is a member exactly when each of
    its monomials has a letter of index <= k. With `block`, indices are read
    modulo the block size, matching `relabel_families`.
    """
    poly, _ = _indexed(p)
    return not escaping_monomials(poly, k, block)


def escape_exponent(
    a: NcPoly | LieElement, k: int, cap: int, block: Optional[int] = None
) -> EscapeResult:
    """Least n <= cap with D^n(a) outside I_k.

    Escape from I_k also means escape from the Lie ideal generated by x_1..x_k,
    which lies inside it. When no escape happens within `cap` steps the result
    has no exponent.
    """
    poly, alphabet = _indexed(a)
    if not poly:
        raise ValueError("the zero element never escapes")
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    if block is not None:
        top = max(
            (alphabet.index_of(c) - 1) % block + 1 for word, _ in poly for c in word
        )
        if top + cap > block:
            raise ValueError(f"block {block} is too small for {cap} shifts from index {top}")
    counts = []
    for n in range(cap + 1):
        counts.append(len(poly))
        escaping = escaping_monomials(poly, k, block)
        if escaping:
            logger.debug("escaped I_%d after %d shifts with %d terms", k, n, len(poly))
            return EscapeResult(
                exponent=n, cap=cap, witness=escaping[0], term_counts=tuple(counts)
            )
        poly = shift_once(poly)
    logger.warning("no escape from I_%d within %d shifts", k, cap)
    return EscapeResult(exponent=None, cap=cap, term_counts=tuple(counts))


def claim_bound(c: int, k: int, d: int) -> int:
    """K_d = (2k+2)^(2^(c-d)) / 2, so K_c = k+1 and K_d = 2 K_(d+1)^2."""
    if not 1 <= d <= c:
        raise ValueError(f"need 1 <= d <= c, got c={c}, d={d}")
    if k < 1:
        raise ValueError(f"cutoff k must be at least 1, got {k}")
    return (2 * k + 2) ** (2 ** (c - d)) // 2


def relabel_families(p: NcPoly | LieElement, block: int) -> NcPoly:
    """Send x_i of family j to x_(i + (j-1)*block) in a single-family alphabet.

    Every family lands in its own block of indices, so one shift on the
    relabelled element acts as the family-wise shift while no index leaves its
    block.
    """
    poly, alphabet = _indexed(p)
    if block < 1:
        raise ValueError(f"block must be at least 1, got {block}")
    target = IndexedAlphabet()
    terms: dict[Monomial, Fraction] = {}
    for word, c in poly:
        relabelled = []
        for code in word:
            index = alphabet.index_of(code)
            if index > block:
                raise ValueError(f"index {index} does not fit in blocks of {block}")
            relabelled.append(target.code(index + (alphabet.family_of(code) - 1) * block))
        terms[tuple(relabelled)] = c
    return NcPoly(terms, target)
