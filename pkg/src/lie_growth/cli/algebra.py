"""Subalgebra and subideal commands."""

from pathlib import Path
from typing import Optional

import typer

from ..core.models import Engine, FieldMode, OutputFormat
from ..services.subalgebra import free_complement, subalgebra_growth
from ..services.subideal import cogrowth as compute_cogrowth
from ..utils.display import print_info
from .common import (
    alphabet_option,
    computation,
    echo_report,
    field_for,
    field_mode_option,
    format_option,
    generators_inline_option,
    generators_option,
    load_generators,
    max_degree_option,
    parse_alphabet,
)


def growth(
    alphabet: str = alphabet_option(),
    generators: Optional[Path] = generators_option(),
    generators_inline: Optional[str] = generators_inline_option(),
    max_degree: int = max_degree_option(8),
    field_mode: FieldMode = field_mode_option(),
    format: OutputFormat = format_option(),
):
    """Growth of the subalgebra generated by the given elements."""
    letters = parse_alphabet(alphabet)
    with computation():
        S = load_generators(letters, generators, generators_inline)
        field = field_for(field_mode)
        table = subalgebra_growth(S, letters, max_degree, field)
    echo_report(table, format, field)


def cogrowth(
    alphabet: str = alphabet_option(),
    generators: Optional[Path] = generators_option(),
    generators_inline: Optional[str] = generators_inline_option(),
    level: int = typer.Option(1, "--level", "-l", min=1, help="Subideal level ℓ"),
    max_degree: int = max_degree_option(8),
    engine: Engine = typer.Option(Engine.LINEAR, "--engine", "-e", help="Computation path"),
    field_mode: FieldMode = field_mode_option(),
    format: OutputFormat = format_option(),
):
    """Cogrowth of the ℓ-subideal closure of the given elements."""
    letters = parse_alphabet(alphabet)
    with computation():
        S = load_generators(letters, generators, generators_inline)
        field = field_for(field_mode)
        table = compute_cogrowth(engine, S, letters, level, max_degree, field)
    echo_report(table, format, field if engine is Engine.LINEAR else None)


def complement(
    alphabet: str = alphabet_option(),
    generators: Optional[Path] = generators_option(),
    generators_inline: Optional[str] = generators_inline_option(),
    max_degree: int = max_degree_option(6),
    field_mode: FieldMode = field_mode_option(),
    format: OutputFormat = format_option(),
):
    """Complete an irreducible homogeneous set to generate every degree from its top degree on."""
    letters = parse_alphabet(alphabet)
    with computation():
        B0 = load_generators(letters, generators, generators_inline)
        field = field_for(field_mode)
        result = free_complement(B0, letters, max_degree, field)
    added: dict[int, list[str]] = {}
    for element in result.added:
        added.setdefault(element.degree, []).append(str(element))
    rows = [
        {"n": row.n, "codim": row.d, "added": added.get(row.n, [])} for row in result.codim.rows
    ]
    print_info(f"{len(result.added)} generators added")
    echo_report(rows, format, field)
