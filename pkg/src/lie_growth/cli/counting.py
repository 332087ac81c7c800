"""Counting commands: Witt dimensions, LS-words, subword avoidance."""

from typing import Optional

import typer

from ..core.config import get_config
from ..core.models import GrowthTable, OutputFormat
from ..core.words import iter_ls_words, standard_bracketing
from ..services.counting import (
    avoidance_growth_rate,
    count_avoiding,
    degree_gcd,
    graded_lie_dimension,
    witt_table,
)
from ..utils.display import print_info
from .common import (
    alphabet_option,
    computation,
    echo_report,
    format_option,
    max_degree_option,
    parse_alphabet,
)


def witt(
    rank: int = typer.Option(2, "--rank", "-r", min=1, help="Number of degree-1 letters"),
    alphabet: Optional[str] = typer.Option(
        None, "--alphabet", "-a", help="Graded alphabet; overrides --rank"
    ),
    max_degree: int = max_degree_option(),
    format: OutputFormat = format_option(),
    count_words: bool = typer.Option(
        False, "--count-words", help="Count LS-words instead of using the formula"
    ),
):
    """Dimensions of the free Lie algebra per degree."""
    with computation():
        if alphabet is None:
            table = witt_table(rank, max_degree)
            delta = 1
        else:
            letters = parse_alphabet(alphabet)
            delta = degree_gcd(letters)
            if count_words:
                dims = [0] * max_degree
                for word in iter_ls_words(letters, max_degree, get_config().ls_filter_max_degree):
                    dims[word.degree - 1] += 1
                table = GrowthTable.from_dimensions(dims)
            else:
                table = graded_lie_dimension(letters, max_degree)
        if delta > 1:
            print_info(f"degrees share the factor δ = {delta}")
    echo_report(table, format)


def lyndon(
    alphabet: str = alphabet_option(),
    max_degree: int = max_degree_option(4),
    format: OutputFormat = format_option(),
):
    """List LS-words with their LS-commutators, greatest first in each degree."""
    with computation():
        letters = parse_alphabet(alphabet)
        rows = [
            {"n": word.degree, "word": str(word), "commutator": str(standard_bracketing(word))}
            for word in iter_ls_words(letters, max_degree, get_config().ls_filter_max_degree)
        ]
    echo_report(rows, format)


def avoid(
    word: str = typer.Option(..., "--word", "-w", help="Forbidden factor, e.g. xx"),
    alphabet: str = alphabet_option(),
    max_degree: int = max_degree_option(),
    format: OutputFormat = format_option(),
    rate: bool = typer.Option(False, "--rate", help="Report the growth rate instead"),
):
    """Count words without a given factor, or their exponential growth rate."""
    with computation():
        letters = parse_alphabet(alphabet)
        forbidden = letters.word(word)
        if rate:
            config = get_config()
            value = avoidance_growth_rate(
                letters,
                forbidden,
                tolerance=config.power_iteration_tolerance,
                max_iterations=config.power_iteration_limit,
            )
            report = {"word": str(forbidden), "rate": value}
        else:
            report = count_avoiding(letters, forbidden, max_degree)
    echo_report(report, format)
