"""Options and helpers shared by the commands."""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer

from ..core.config import get_config
from ..core.exceptions import AlphabetError, LieGrowthError
from ..core.models import FieldMode, OutputFormat
from ..core.words import GradedAlphabet
from ..services.expression import parse_generators
from ..services.linalg import Field, make_field
from ..services.subalgebra import GeneratorSet
from ..utils.display import emit, print_error

DEFAULT_ALPHABET = "y:1,x:1"


def alphabet_option(default: str = DEFAULT_ALPHABET) -> str:
    return typer.Option(
        default, "--alphabet", "-a", help="Letters as name:degree, ascending (y:1,x:1 means x > y)"
    )


def max_degree_option(default: int = 10) -> int:
    return typer.Option(default, "--max-degree", "-n", min=1, help="Largest degree computed")


def format_option() -> OutputFormat:
    return typer.Option(OutputFormat.TABLE, "--format", "-f", help="Output format")


def field_mode_option() -> FieldMode:
    return typer.Option(
        FieldMode.RATIONAL, "--field-mode", help="Coefficients for linear algebra"
    )


def generators_option() -> Optional[Path]:
    return typer.Option(
        None,
        "--generators",
        "-g",
        exists=True,
        dir_okay=False,
        readable=True,
        help="File with one Lie expression per line",
    )


def generators_inline_option() -> Optional[str]:
    return typer.Option(
        None, "--generators-inline", help="Generators separated by ';', e.g. \"x; [x,y]\""
    )


def parse_alphabet(spec: str) -> GradedAlphabet:
    try:
        return GradedAlphabet.parse(spec)
    except AlphabetError as e:
        raise typer.BadParameter(str(e), param_hint="--alphabet") from None


def load_generators(
    alphabet: GradedAlphabet, path: Optional[Path], inline: Optional[str]
) -> GeneratorSet:
    """Generators from a file or from the inline option, never both."""
    if path is not None and inline is not None:
        raise typer.BadParameter(
            "give --generators or --generators-inline, not both", param_hint="--generators"
        )
    if path is None and inline is None:
        raise typer.BadParameter("no generators given", param_hint="--generators")
    lines = path.read_text().splitlines() if path is not None else inline.split(";")
    return GeneratorSet.of(parse_generators(lines, alphabet))


def field_for(mode: FieldMode) -> Field:
    return make_field(mode, get_config().prime)


def echo_report(obj, fmt: OutputFormat, field: Optional[Field] = None, title: Optional[str] = None):
    prime = field.prime if field is not None and field.mode is FieldMode.PRIME else None
    typer.echo(emit(obj, fmt, prime=prime, title=title))


@contextmanager
def computation() -> Iterator[None]:
    """Report library errors as a one-line diagnostic; exit 1, or 2 for bad values."""
    try:
        yield
    except LieGrowthError as e:
        print_error(str(e))
        raise typer.Exit(1) from None
    except ValueError as e:
        print_error(str(e))
        raise typer.Exit(2) from None
