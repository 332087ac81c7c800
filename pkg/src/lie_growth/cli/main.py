"""CLI main entry point."""

import logging
from pathlib import Path
from typing import Optional

import typer
from rich.logging import RichHandler

from ..core.config import ConfigFileError, get_config, read_config_file
from ..utils.display import console, err_console

app = typer.Typer(
    name="liegrowth",
    help="Growth and cogrowth of subalgebras and subideals of free Lie algebras",
    no_args_is_help=True,
)


def version_callback(value: bool):
    if value:
        from .. import __version__

        console.print(f"lie-growth v{__version__}")
        raise typer.Exit()


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version",
    ),
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Log progress to stderr"),
    config: Optional[Path] = typer.Option(
        None, "--config", dir_okay=False, help="key=value file with option defaults"
    ),
):
    """Growth and cogrowth of subalgebras and subideals of free Lie algebras."""
    _setup_logging(verbose)

    # Values from the config file become option defaults of every command
    path = config or get_config().config_path
    if config is not None or path.exists():
        try:
            values = read_config_file(path)
        except OSError as e:
            raise typer.BadParameter(f"cannot read {path}: {e}", param_hint="--config") from None
        except ConfigFileError as e:
            raise typer.BadParameter(str(e), param_hint="--config") from None
        ctx.default_map = {name: dict(values) for name in COMMANDS}


# Import and register subcommands
from . import algebra, counting, derive, series  # noqa: E402

COMMANDS = {
    "witt": counting.witt,
    "lyndon": counting.lyndon,
    "avoid": counting.avoid,
    "base": series.base,
    "growth": algebra.growth,
    "cogrowth": algebra.cogrowth,
    "complement": algebra.complement,
    "derive": derive.derive,
}

for _name, _command in COMMANDS.items():
    app.command(name=_name)(_command)


if __name__ == "__main__":
    app()
