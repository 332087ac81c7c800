"""Generating-function service: F(ζ), Conditions G and W_z, exponential bases, Lazard elimination."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..core.exceptions import AlphabetError, DivergenceError
from ..core.models import BaseResult, ConditionReport, GreedySequence
from ..core.words import BracketTree, GradedAlphabet, Letter, left_normed

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = "1e-12"

Number = Fraction | float


def to_exact(value: str | int | float | Fraction) -> Fraction:
    """Parse a decimal string (or number) into an exact rational."""
    try:
        return Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a number: {value!r}") from None


@dataclass(frozen=True)
class SeriesSpec:
    """Letter counts k_i of a graded alphabet as generating data.

    `histogram[i-1]` is k_i. With `tail_start` set, k_i = `tail_value` for every
    i >= tail_start (entries of `histogram` from there on are not allowed).
    `truncated` marks a histogram cut off at a degree bound, whose last entry
    therefore has no meaningful successor.
    """

    histogram: tuple[int, ...]
    tail_start: Optional[int] = None
    tail_value: int = 0
    z: Optional[Number] = None
    truncated: bool = False

    def __post_init__(self):
        if any(k < 0 for k in self.histogram) or self.tail_value < 0:
            raise ValueError("letter counts must be nonnegative")
        if self.tail_start is not None:
            if self.tail_start < 1:
                raise ValueError(f"tail must start at degree >= 1, got {self.tail_start}")
            if len(self.histogram) >= self.tail_start:
                raise ValueError("histogram entries overlap the constant tail")

    @classmethod
    def finite(cls, histogram: Sequence[int], z: Optional[Number] = None) -> "SeriesSpec":
        return cls(histogram=tuple(histogram), z=z)

    @classmethod
    def constant(cls, value: int, start: int = 1, z: Optional[Number] = None) -> "SeriesSpec":
        """k_i = value for every i >= start."""
        return cls(histogram=(0,) * (start - 1), tail_start=start, tail_value=value, z=z)

    @property
    def has_tail(self) -> bool:
        return self.tail_start is not None and self.tail_value > 0

    def k(self, i: int) -> int:
        if self.tail_start is not None and i >= self.tail_start:
            return self.tail_value
        return self.histogram[i - 1] if 1 <= i <= len(self.histogram) else 0


def _exact(value: Number | int) -> Number:
    return value if isinstance(value, float) else Fraction(value)


def eval_F(spec: SeriesSpec, zeta: Number = 0, z: Optional[Number] = None) -> Number:
    """F(ζ) = sum_i k_i / (z - ζ)^i.

    Exact when z and ζ are rationals. Constant tails use the closed form and
    need z - ζ > 1.
    """
    z = spec.z if z is None else z
    if z is None:
        raise ValueError("no value of z given")
    w = _exact(z) - _exact(zeta)
    if w == 0:
        raise DivergenceError("F is undefined at ζ = z")
    if spec.has_tail and w <= 1:
        raise DivergenceError(f"constant tail diverges for z - ζ = {w} <= 1")
    finite_end = spec.tail_start - 1 if spec.tail_start is not None else len(spec.histogram)
    total = sum((spec.k(i) / w**i for i in range(1, finite_end + 1) if spec.k(i)), Fraction(0))
    if spec.has_tail:
        total += spec.tail_value / (w ** (spec.tail_start - 1) * (w - 1))
    return total


def _condition_g(spec: SeriesSpec) -> bool:
    """Either k_2 = k_3 = ... = 0, or k_i > 0 forces k_(i+1) > 0."""
    finite_end = spec.tail_start - 1 if spec.tail_start is not None else len(spec.histogram)
    if not spec.has_tail and all(spec.k(i) == 0 for i in range(2, finite_end + 1)):
        return True
    last = finite_end if spec.has_tail else len(spec.histogram)
    for i in range(1, last + 1):
        if spec.truncated and not spec.has_tail and i == len(spec.histogram):
            continue
        if spec.k(i) > 0 and spec.k(i + 1) == 0:
            return False
    return True


def check_conditions(spec: SeriesSpec, z: Optional[Number] = None) -> ConditionReport:
    """Condition G, and Condition W_z: F converges near 0 and F(0) <= 1."""
    z = spec.z if z is None else z
    g = _condition_g(spec)
    converges = z is not None and (z > 1 if spec.has_tail else z > 0)
    if not converges:
        return ConditionReport(g=g, wz=False)
    f0 = eval_F(spec, 0, z)
    return ConditionReport(g=g, wz=f0 <= 1, f0=f0 if isinstance(f0, Fraction) else None)


# ── Exponential base ──────────────────────────────────────────────────


def base_polynomial(histogram: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of z^d - k_1 z^(d-1) - ... - k_d, leading first."""
    return (1, *(-k for k in histogram))


def sign_changes(coefficients: Sequence[int]) -> int:
    signs = [c > 0 for c in coefficients if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _f0(histogram: Sequence[int], z: Fraction) -> Fraction:
    return sum((Fraction(k) / z**i for i, k in enumerate(histogram, 1) if k), Fraction(0))


def exponential_base(
    histogram: Sequence[int], tolerance: str | Fraction = DEFAULT_TOLERANCE
) -> BaseResult:
    """Bracket z0, the root of F(0) = 1, i.e. the unique positive root of z^d = sum k_i z^(d-i).

    Bisection in exact rationals starting from [1, sum k_i]; every step keeps
    F(0) > 1 at lo and F(0) <= 1 at hi.
    """
    counts = list(histogram)
    while counts and counts[-1] == 0:
        counts.pop()
    if not counts:
        raise AlphabetError("exponential base needs a nonzero histogram")
    if any(k < 0 for k in counts):
        raise ValueError("letter counts must be nonnegative")
    tolerance = to_exact(tolerance)
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    poly = base_polynomial(counts)
    changes = sign_changes(poly)

    total = sum(counts)
    hi = Fraction(total)
    if total == 1 or _f0(counts, hi) == 1:
        return BaseResult(lo=hi, hi=hi, poly=poly, sign_changes=changes, exact=True)

    lo = Fraction(1)
    steps = 0
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        value = _f0(counts, mid)
        if value == 1:
            return BaseResult(lo=mid, hi=mid, poly=poly, sign_changes=changes, exact=True)
        if value > 1:
            lo = mid
        else:
            hi = mid
        steps += 1
    logger.debug("base of %s bracketed in %d bisection steps", counts, steps)
    return BaseResult(lo=lo, hi=hi, poly=poly, sign_changes=changes)


def verify_certificate(histogram: Sequence[int], result: BaseResult) -> bool:
    """Re-check the sign certificate of a BaseResult in exact arithmetic."""
    counts = list(histogram)
    if result.exact:
        return _f0(counts, result.hi) == 1
    return _f0(counts, result.lo) > 1 and _f0(counts, result.hi) <= 1


def greedy_base_sequence(m0: str | Fraction, length: int) -> GreedySequence:
    """Greedy 0/1 letter counts k_1..k_N with sum k_i / m0^i approaching 1 from below.

    k_(j+1) = 0 when a_j < m0^-(j+1), otherwise 1, where a_j = 1 - sum_(i<=j) k_i / m0^i.
    For m0 < 2 every remainder satisfies 0 <= a_j < m0^-j; at m0 = 2 equality holds.
    """
    m0 = to_exact(m0)
    if not 1 < m0 <= 2:
        raise ValueError(f"m0 must lie in (1, 2], got {m0}")
    if length < 1:
        raise ValueError(f"sequence length must be positive, got {length}")
    remainder = Fraction(1)
    weight = Fraction(1)
    coefficients = []
    remainders = []
    for _ in range(length):
        weight /= m0
        if remainder < weight:
            coefficients.append(0)
        else:
            coefficients.append(1)
            remainder -= weight
        remainders.append(remainder)
    return GreedySequence(m0=m0, coefficients=tuple(coefficients), remainders=tuple(remainders))


# ── Lazard elimination ────────────────────────────────────────────────


def minimal_letter(alphabet: GradedAlphabet) -> int:
    """Code of the earliest-listed letter of minimal degree."""
    degree = alphabet.min_degree
    return next(code for code in alphabet.codes if alphabet.degree_of(code) == degree)


def _elimination(alphabet: GradedAlphabet, max_degree: int) -> list[tuple[int, int, int]]:
    """(y, t, degree) for each letter [y, x, ..., x] with t copies of x, sorted by degree then y."""
    if len(alphabet) < 2:
        raise AlphabetError("Lazard elimination needs at least two letters")
    x = minimal_letter(alphabet)
    s = alphabet.degree_of(x)
    entries = []
    for y in alphabet.codes:
        if y == x:
            continue
        t = 0
        while alphabet.degree_of(y) + t * s <= max_degree:
            entries.append((y, t, alphabet.degree_of(y) + t * s))
            t += 1
    entries.sort(key=lambda e: (e[2], e[0]))
    return entries


def lazard_transform(alphabet: GradedAlphabet, max_degree: int) -> GradedAlphabet:
    """Free generators [y, x, ..., x] of the ideal of codimension one, up to max_degree.

    The letter [y, x^t] is named ``<y>_<t>``.
    """
    letters = tuple(
        Letter(f"{alphabet.name_of(y)}_{t}", degree)
        for y, t, degree in _elimination(alphabet, max_degree)
    )
    if not letters:
        raise AlphabetError(f"no letters of degree <= {max_degree} survive elimination")
    return GradedAlphabet(letters)


def lazard_commutators(alphabet: GradedAlphabet, max_degree: int) -> list[BracketTree]:
    """The commutators behind `lazard_transform`, as trees over the original alphabet."""
    x = BracketTree.leaf(alphabet, minimal_letter(alphabet))
    return [
        left_normed([BracketTree.leaf(alphabet, y)] + [x] * t)
        for y, t, _ in _elimination(alphabet, max_degree)
    ]


def lazard_chain(alphabet: GradedAlphabet, steps: int, max_degree: int) -> list[GradedAlphabet]:
    """Apply the elimination repeatedly; the result starts with the input alphabet."""
    chain = [alphabet]
    for step in range(steps):
        if len(chain[-1]) < 2:
            logger.debug("elimination chain stopped after %d steps: one letter left", step)
            break
        chain.append(lazard_transform(chain[-1], max_degree))
    return chain


def lazard_series(spec: SeriesSpec) -> SeriesSpec:
    """Eliminate a degree-1 letter from a finite histogram.

    The new counts are k'_j = k_1 + ... + k_j - 1, constant from the top
    degree on, so the result has a constant tail.
    """
    if spec.has_tail:
        raise ValueError("elimination is only defined here for finite histograms")
    counts = list(spec.histogram)
    while counts and counts[-1] == 0:
        counts.pop()
    if not counts or counts[0] == 0:
        raise ValueError("elimination of a degree-1 letter needs k_1 > 0")
    if sum(counts) < 2:
        raise AlphabetError("Lazard elimination needs at least two letters")
    top = len(counts)
    head = tuple(sum(counts[:j]) - 1 for j in range(1, top))
    return SeriesSpec(histogram=head, tail_start=top, tail_value=sum(counts) - 1, z=spec.z)
