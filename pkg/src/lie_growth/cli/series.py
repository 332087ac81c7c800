"""Exponential-base commands."""

from typing import Optional

import typer

from ..core.config import get_config
from ..core.models import OutputFormat
from ..services.counting import degree_gcd
from ..services.series import (
    SeriesSpec,
    check_conditions,
    exponential_base,
    greedy_base_sequence,
    to_exact,
)
from ..utils.display import print_error
from .common import computation, echo_report, format_option


def _histogram(text: str) -> tuple[int, ...]:
    try:
        counts = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise typer.BadParameter(f"expected integers k_1,k_2,..., got {text!r}") from None
    if any(k < 0 for k in counts):
        raise typer.BadParameter("letter counts must be nonnegative")
    return counts


def base(
    degrees: Optional[str] = typer.Option(
        None, "--degrees", "-d", help="Letter counts k_1,k_2,... (1,1 means one letter each of degree 1 and 2)"
    ),
    tolerance: Optional[str] = typer.Option(
        None, "--tolerance", "-t", help="Width of the final bracket"
    ),
    greedy: Optional[str] = typer.Option(
        None, "--greedy", help="Target base m0 in (1, 2]; prints the greedy letter counts"
    ),
    length: int = typer.Option(20, "--length", "-l", min=1, help="Greedy sequence length"),
    format: OutputFormat = format_option(),
):
    """Exponential base of the free Lie algebra on a graded alphabet."""
    if (degrees is None) == (greedy is None):
        print_error("give exactly one of --degrees and --greedy")
        raise typer.Exit(2)

    with computation():
        if greedy is not None:
            sequence = greedy_base_sequence(to_exact(greedy), length)
            rows = [
                {"i": i, "k": k, "remainder": float(a)}
                for i, (k, a) in enumerate(zip(sequence.coefficients, sequence.remainders), 1)
            ]
            echo_report(rows, format)
            return

        histogram = _histogram(degrees)
        tol = to_exact(tolerance or get_config().default_tolerance)
        if tol <= 0:
            raise typer.BadParameter("tolerance must be positive", param_hint="--tolerance")
        result = exponential_base(histogram, tol)
        conditions = check_conditions(SeriesSpec.finite(histogram), result.hi)
        report = {
            "z0": result.z0,
            "lo": result.lo,
            "hi": result.hi,
            "exact": result.exact,
            "sign_changes": result.sign_changes,
            "delta": degree_gcd(histogram),
            "condition_g": conditions.g,
            "poly": list(result.poly),
        }
    echo_report(report, format)
