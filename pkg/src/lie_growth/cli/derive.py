"""Escape from the ideals I_k under the shifting derivation."""

import typer

from ..core.models import OutputFormat
from ..core.words import IndexedAlphabet
from ..services.derivations import claim_bound, escape_exponent
from ..services.expression import parse_expression
from .common import computation, echo_report, format_option


def derive(
    element: str = typer.Option(..., "--element", "-x", help='Lie element, e.g. "[x1,x2]"'),
    k: int = typer.Option(1, "--k", "-k", min=1, help="Escape from the ideal of x1..xk"),
    max_steps: int = typer.Option(50, "--max-steps", "-s", min=1, help="Shifts to try"),
    families: int = typer.Option(
        1, "--families", min=1, help="Letter families; names become x<j>_<i>"
    ),
    bound: bool = typer.Option(False, "--bound", help="Also report the a priori bound K_1"),
    format: OutputFormat = format_option(),
):
    """Least n with D^n(a) outside the ideal generated by x1, ..., xk."""
    with computation():
        alphabet = IndexedAlphabet(families)
        a = parse_expression(element, alphabet)
        result = escape_exponent(a, k, max_steps)
        report = {
            "element": str(a),
            "k": k,
            "found": result.found,
            "exponent": result.exponent,
            "witness": alphabet.format_word(result.witness) if result.witness else None,
            "cap": result.cap,
        }
        if bound:
            report["bound"] = claim_bound(max(a.degree, 1), k, 1)
    echo_report(report, format)
