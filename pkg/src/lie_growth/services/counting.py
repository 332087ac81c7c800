"""Counting service: Möbius and Witt numbers, word counts, Lie dimensions, avoidance."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, gcd
from typing import Sequence

import numpy as np
from sympy.ntheory import divisors

try:
    from sympy.functions.combinatorial.numbers import mobius as _sympy_mobius
except ImportError:  # sympy < 1.13
    from sympy.ntheory import mobius as _sympy_mobius

from ..core.exceptions import AlphabetError, ConsistencyError, ConvergenceError, WordError
from ..core.models import GrowthTable
from ..core.words import GradedAlphabet, Word

logger = logging.getLogger(__name__)

POWER_ITERATION_TOLERANCE = 1e-9
POWER_ITERATION_LIMIT = 100_000

Histogram = Sequence[int]


def histogram_of(source: GradedAlphabet | Histogram) -> tuple[int, ...]:
    if isinstance(source, GradedAlphabet):
        return source.histogram()
    return tuple(int(k) for k in source)


def _k(histogram: Histogram, i: int) -> int:
    return histogram[i - 1] if 1 <= i <= len(histogram) else 0


# ── Möbius / Witt ─────────────────────────────────────────────────────


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError(f"Möbius function is defined for d >= 1, got {d}")
    return int(_sympy_mobius(d))


def witt_dimension(m: int, n: int) -> int:
    """dim L_n of the free Lie algebra of rank m (Witt's formula)."""
    if m < 1 or n < 1:
        raise ValueError(f"rank and degree must be positive, got m={m}, n={n}")
    total = sum(mobius(d) * m ** (n // d) for d in divisors(n))
    value, rest = divmod(total, n)
    if rest:
        raise ConsistencyError(f"Witt sum {total} not divisible by {n}")
    return value


def witt_table(m: int, max_degree: int) -> GrowthTable:
    return GrowthTable.from_dimensions(witt_dimension(m, n) for n in range(1, max_degree + 1))


def degree_gcd(source: GradedAlphabet | Histogram) -> int:
    """δ: the gcd of the degrees i with k_i > 0."""
    histogram = histogram_of(source)
    result = 0
    for i, k in enumerate(histogram, 1):
        if k > 0:
            result = gcd(result, i)
    if result == 0:
        raise AlphabetError("histogram has no letters")
    return result


# ── Word counts and Lie dimensions ────────────────────────────────────


def word_dimensions(source: GradedAlphabet | Histogram, max_degree: int) -> list[int]:
    """d_X(0..max_degree) from d_X(n) = sum_i k_i d_X(n-i)."""
    histogram = histogram_of(source)
    dims = [1]
    for n in range(1, max_degree + 1):
        dims.append(sum(_k(histogram, i) * dims[n - i] for i in range(1, n + 1)))
    return dims


def word_count(source: GradedAlphabet | Histogram, max_degree: int) -> GrowthTable:
    """Words of each degree 0..max_degree; the empty word gives d(0) = 1."""
    if max_degree < 0:
        raise ValueError(f"max degree must be nonnegative, got {max_degree}")
    return GrowthTable.from_dimensions(word_dimensions(source, max_degree), start=0)


def graded_lie_dimension(source: GradedAlphabet | Histogram, max_degree: int) -> GrowthTable:
    """Dimensions of the free Lie algebra on a graded set, via log of its word series.

    With A(t) = 1/(1 - sum k_i t^i), the coefficients of t d/dt log A(t) are
    c_n = sum_i i k_i a_(n-i), and dim L_n = (1/n) sum_(d|n) μ(n/d) c_d.
    """
    histogram = histogram_of(source)
    a = word_dimensions(histogram, max_degree)
    c = [0] + [
        sum(i * _k(histogram, i) * a[n - i] for i in range(1, n + 1))
        for n in range(1, max_degree + 1)
    ]
    dims = []
    for n in range(1, max_degree + 1):
        total = sum(mobius(n // d) * c[d] for d in divisors(n))
        value = Fraction(total, n)
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(f"Lie dimension at degree {n} came out as {value}")
        dims.append(int(value))
    return GrowthTable.from_dimensions(dims)


def pbw_series(dims: Sequence[int], max_degree: int) -> list[int]:
    """Coefficients of prod_n (1 - t^n)^(-dims[n-1]) up to t^max_degree.

    Applied to Lie dimensions this rebuilds the word series.
    """
    series = [1] + [0] * max_degree
    for n, ell in enumerate(dims, 1):
        if n > max_degree or ell == 0:
            continue
        factor = [0] * (max_degree + 1)
        for j in range(max_degree // n + 1):
            factor[n * j] = comb(ell + j - 1, j)
        series = [
            sum(series[i] * factor[total - i] for i in range(total + 1))
            for total in range(max_degree + 1)
        ]
    return series


def words_bound_holds(source: GradedAlphabet | Histogram, z: Fraction, max_degree: int) -> bool:
    """Check d_X(n) <= z^n for every n <= max_degree."""
    z = Fraction(z)
    return all(d <= z**n for n, d in enumerate(word_dimensions(source, max_degree)))


# ── Subword avoidance ─────────────────────────────────────────────────


@dataclass
class AvoidanceAutomaton:
    """Prefix-match automaton of a forbidden word.

    State s < len(u) means the longest suffix read so far that is a prefix of
    u has length s; state len(u) is the absorbing dead state.
    """

    alphabet: GradedAlphabet
    forbidden: Word

    def __post_init__(self):
        if not self.forbidden.letters:
            raise WordError("the forbidden word must be nonempty")

    @property
    def dead(self) -> int:
        return len(self.forbidden)

    @property
    def size(self) -> int:
        return len(self.forbidden) + 1

    @cached_property
    def failure(self) -> list[int]:
        u = self.forbidden.letters
        fail = [0] * len(u)
        k = 0
        for i in range(1, len(u)):
            while k and u[i] != u[k]:
                k = fail[k - 1]
            if u[i] == u[k]:
                k += 1
            fail[i] = k
        return fail

    def step(self, state: int, code: int) -> int:
        if state == self.dead:
            return state
        u = self.forbidden.letters
        while state and u[state] != code:
            state = self.failure[state - 1]
        return state + 1 if u[state] == code else 0

    @cached_property
    def transitions(self) -> list[list[int]]:
        return [[self.step(s, c) for c in self.alphabet.codes] for s in range(self.size)]

    def transfer_matrices(self) -> dict[int, list[list[int]]]:
        """For each letter degree i, M_i[s][t] = letters of degree i taking s to t."""
        matrices: dict[int, list[list[int]]] = {}
        for code in self.alphabet.codes:
            degree = self.alphabet.degree_of(code)
            matrix = matrices.setdefault(degree, [[0] * self.size for _ in range(self.size)])
            for s in range(self.size):
                matrix[s][self.transitions[s][code]] += 1
        return matrices

    def count(self, max_degree: int) -> list[int]:
        """f_u(0..max_degree): words of each degree with no factor u."""
        live = range(self.dead)
        table = [[0] * self.dead for _ in range(max_degree + 1)]
        table[0][0] = 1
        letters = [(code, self.alphabet.degree_of(code)) for code in self.alphabet.codes]
        for n in range(1, max_degree + 1):
            row = table[n]
            for code, degree in letters:
                if degree > n:
                    continue
                for s in live:
                    count = table[n - degree][s]
                    if count:
                        t = self.transitions[s][code]
                        if t != self.dead:
                            row[t] += count
        return [sum(row) for row in table]


def count_avoiding(alphabet: GradedAlphabet, u: Word, max_degree: int) -> GrowthTable:
    """f_u(n), the number of degree-n words without the factor u, for n = 0..max_degree."""
    automaton = AvoidanceAutomaton(alphabet, u)
    return GrowthTable.from_dimensions(automaton.count(max_degree), start=0)


def avoidance_growth_rate(
    alphabet: GradedAlphabet,
    u: Word,
    tolerance: float = POWER_ITERATION_TOLERANCE,
    max_iterations: int = POWER_ITERATION_LIMIT,
) -> float:
    """Perron root of the degree-step transfer system of the avoidance automaton.

    Letters of degree i feed degree n from degree n-i, so the live transfer
    matrices are stacked into a companion block matrix C. Power iteration runs
    on C + I, whose dominant eigenvalue is the only one of maximal modulus.
    """
    if len(alphabet) < 2:
        raise AlphabetError("growth rate needs an alphabet with at least two letters")
    automaton = AvoidanceAutomaton(alphabet, u)
    live = automaton.dead
    depth = alphabet.max_degree
    size = live * depth
    companion = np.zeros((size, size))
    for degree, matrix in automaton.transfer_matrices().items():
        block = np.array(matrix, dtype=float)[:live, :live]
        companion[:live, (degree - 1) * live : degree * live] = block.T
    for j in range(1, depth):
        companion[j * live : (j + 1) * live, (j - 1) * live : j * live] = np.eye(live)
    shifted = companion + np.eye(size)

    vector = np.ones(size) / size
    estimate = 0.0
    for iteration in range(1, max_iterations + 1):
        image = shifted @ vector
        estimate = float(image.sum())
        if estimate == 0:
            raise ConvergenceError("transfer system vanished during power iteration")
        # vector sums to 1, so the image sum is the eigenvalue estimate
        residual = float(np.abs(image - estimate * vector).sum())
        vector = image / estimate
        if residual <= tolerance * estimate:
            logger.debug("power iteration converged after %d steps", iteration)
            return estimate - 1.0
    raise ConvergenceError(
        f"power iteration did not converge in {max_iterations} steps (last estimate {estimate - 1.0})"
    )
