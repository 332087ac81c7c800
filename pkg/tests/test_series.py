"""Tests for generating functions, exponential bases, greedy sequences and Lazard elimination."""

from fractions import Fraction

import pytest

from lie_growth.core.exceptions import AlphabetError, DivergenceError
from lie_growth.core.words import BracketTree, GradedAlphabet
from lie_growth.services.counting import graded_lie_dimension, word_count
from lie_growth.services.freealg import LieElement
from lie_growth.services.linalg import rank_of
from lie_growth.services.lsbasis import basis_for
from lie_growth.services.series import (
    SeriesSpec,
    check_conditions,
    eval_F,
    exponential_base,
    greedy_base_sequence,
    lazard_chain,
    lazard_commutators,
    lazard_series,
    lazard_transform,
    to_exact,
    verify_certificate,
)

GOLDEN_RATIO = (1 + 5**0.5) / 2


class TestEvalF:
    def test_single_degree(self):
        assert eval_F(SeriesSpec.finite((2,)), 0, Fraction(2)) == 1

    def test_exact_rational(self):
        value = eval_F(SeriesSpec.finite((1, 1)), 0, Fraction(2))
        assert value == Fraction(3, 4)

    def test_integer_arguments_stay_exact(self):
        value = eval_F(SeriesSpec.finite((1, 1)), 0, 2)
        assert isinstance(value, Fraction)
        assert value == Fraction(3, 4)
        assert eval_F(SeriesSpec.constant(1), 1, 3) == 1

    def test_golden_ratio(self):
        assert eval_F(SeriesSpec.finite((1, 1)), 0, GOLDEN_RATIO) == pytest.approx(1.0)

    def test_constant_tail(self):
        assert eval_F(SeriesSpec.constant(1), 0, Fraction(2)) == 1

    def test_constant_tail_diverges(self):
        with pytest.raises(DivergenceError):
            eval_F(SeriesSpec.constant(1), 0, Fraction(1))

    def test_pole(self):
        with pytest.raises(DivergenceError):
            eval_F(SeriesSpec.finite((1,)), Fraction(2), Fraction(2))

    def test_spec_z(self):
        spec = SeriesSpec.finite((2,), z=Fraction(4))
        assert eval_F(spec) == Fraction(1, 2)

    def test_tail_overlap(self):
        with pytest.raises(ValueError):
            SeriesSpec(histogram=(1, 1), tail_start=2, tail_value=1)


class TestConditions:
    def test_single_degree(self):
        report = check_conditions(SeriesSpec.finite((2,)), Fraction(2))
        assert report.g and report.wz
        assert report.f0 == 1

    def test_integer_z_reports_exact_f0(self):
        report = check_conditions(SeriesSpec.finite((0, 4)), 2)
        assert report.wz
        assert report.f0 == 1
        assert isinstance(report.f0, Fraction)

    def test_gap_violates_g(self):
        assert not check_conditions(SeriesSpec.finite((1, 0, 1)), Fraction(2)).g

    def test_constant_tail(self):
        report = check_conditions(SeriesSpec.constant(1), Fraction(2))
        assert report.g and report.wz

    def test_wz_fails_below_base(self):
        assert not check_conditions(SeriesSpec.finite((2,)), Fraction(3, 2)).wz

    def test_no_z(self):
        assert not check_conditions(SeriesSpec.finite((2,))).wz


class TestExponentialBase:
    def test_golden_ratio(self):
        result = exponential_base((1, 1))
        assert result.z0 == pytest.approx(1.6180339887, abs=1e-9)
        assert result.width <= Fraction(1, 10**12)
        assert result.sign_changes == 1
        assert result.poly == (1, -1, -1)
        assert verify_certificate((1, 1), result)

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_single_degree_is_exact(self, m):
        result = exponential_base((m,))
        assert result.exact
        assert result.hi == m
        assert result.z0 == m

    def test_single_letter(self):
        assert exponential_base((1,)).z0 == 1

    def test_plastic_number(self):
        result = exponential_base((0, 1, 1))
        assert result.z0 == pytest.approx(1.3247179572, abs=1e-9)
        assert verify_certificate((0, 1, 1), result)

    def test_trailing_zeros_ignored(self):
        assert exponential_base((2, 0, 0)).hi == 2

    def test_all_zero(self):
        with pytest.raises(AlphabetError):
            exponential_base((0, 0))

    def test_tolerance_string(self):
        result = exponential_base((1, 2), "1e-6")
        assert result.width <= to_exact("1e-6")
        # z^2 = z + 2 has root 2
        assert result.z0 == pytest.approx(2.0, abs=1e-6)

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            exponential_base((1, 1), "0")

    @pytest.mark.parametrize("histogram", [(2,), (1, 1)])
    def test_word_growth_approaches_base(self, histogram):
        d40 = word_count(histogram, 40).dims[40]
        assert abs(d40 ** (1 / 40) - exponential_base(histogram).z0) <= 0.05

    def test_lie_growth_ratio_approaches_base(self):
        """d(n+1)/d(n) * (n+1)/n tends to the base of (1,1)."""
        dims = graded_lie_dimension((1, 1), 20).dims
        ratio = dims[19] / dims[18] * 20 / 19
        assert abs(ratio - exponential_base((1, 1)).z0) <= 0.05


class TestGreedySequence:
    def test_two(self):
        assert greedy_base_sequence("2", 5).coefficients == (1, 1, 1, 1, 1)

    def test_three_halves(self):
        assert greedy_base_sequence("1.5", 3).coefficients == (1, 0, 1)

    @pytest.mark.parametrize("m0", ["1.2", "1.5", "1.9"])
    def test_remainders_strictly_bounded(self, m0):
        sequence = greedy_base_sequence(m0, 40)
        m = to_exact(m0)
        for j, a in enumerate(sequence.remainders, 1):
            assert 0 <= a < m**-j

    def test_remainders_at_two(self):
        sequence = greedy_base_sequence("2", 10)
        assert all(a == Fraction(1, 2**j) for j, a in enumerate(sequence.remainders, 1))

    def test_base_of_sequence_approaches_m0(self):
        sequence = greedy_base_sequence("1.5", 30)
        assert exponential_base(sequence.coefficients).z0 == pytest.approx(1.5, abs=1e-3)

    @pytest.mark.parametrize("m0", ["1", "2.5", "0.5"])
    def test_out_of_range(self, m0):
        with pytest.raises(ValueError):
            greedy_base_sequence(m0, 5)


# ── Lazard elimination ───────────────────────────────────────────────


class TestLazard:
    def test_binary(self):
        assert lazard_transform(GradedAlphabet.free(2), 4).histogram() == (1, 1, 1, 1)

    def test_ternary(self):
        assert lazard_transform(GradedAlphabet.free(3), 3).histogram() == (2, 2, 2)

    def test_names(self, binary):
        eliminated = lazard_transform(binary, 3)
        assert [eliminated.name_of(c) for c in eliminated.codes] == ["x_0", "x_1", "x_2"]

    def test_single_letter(self):
        with pytest.raises(AlphabetError):
            lazard_transform(GradedAlphabet.parse("x:1"), 4)

    def test_series_evaluates_to_one(self):
        spec = lazard_series(SeriesSpec.finite((2,)))
        assert spec.tail_start == 1 and spec.tail_value == 1
        assert eval_F(spec, 0, Fraction(2)) == 1

    def test_series_rank_three(self):
        spec = lazard_series(SeriesSpec.finite((3,)))
        assert eval_F(spec, 0, Fraction(3)) == 1

    def test_series_mixed_degrees(self):
        spec = lazard_series(SeriesSpec.finite((1, 1)))
        # k'_1 = 0, then k'_j = 1 from degree 2 on
        assert [spec.k(i) for i in range(1, 6)] == [0, 1, 1, 1, 1]

    def test_preserves_conditions(self):
        eliminated = lazard_transform(GradedAlphabet.free(2), 6)
        spec = SeriesSpec(histogram=eliminated.histogram(), truncated=True)
        report = check_conditions(spec, Fraction(2))
        assert report.g and report.wz

    def test_chain_removes_low_degrees(self):
        chain = lazard_chain(GradedAlphabet.free(2), 3, 6)
        assert len(chain) == 4
        assert chain[1].min_degree == 1
        assert chain[2].min_degree == 2

    def test_dimensions_of_eliminated_ideal(self):
        """The ideal generated by y has L_n minus the x-line as its dimensions."""
        binary = GradedAlphabet.free(2)
        eliminated = lazard_transform(binary, 8)
        dims = graded_lie_dimension(eliminated.histogram(), 8).dims
        witt = graded_lie_dimension((2,), 8).dims
        assert dims == [witt[0] - 1] + witt[1:]

    def test_commutators_are_independent(self):
        binary = GradedAlphabet.free(2)
        trees = lazard_commutators(binary, 5)
        assert str(trees[0]) == "x"
        assert str(trees[2]) == "[[x,y],y]"
        basis = basis_for(binary)
        for degree in range(1, 6):
            vectors = [
                {basis.column(w.letters): c for w, c in _coordinates(t).items()}
                for t in trees
                if t.degree == degree
            ]
            assert rank_of(vectors) == len(vectors)


def _coordinates(tree: BracketTree):
    return LieElement.from_trees([(1, tree)], tree.alphabet).coordinates
