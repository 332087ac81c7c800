"""Shared test fixtures."""

from pathlib import Path

import pytest
from typer.testing import CliRunner

from lie_growth.core.config import Config
from lie_growth.core.words import GradedAlphabet, IndexedAlphabet
from lie_growth.services.expression import parse_expression
from lie_growth.services.freealg import LieElement
from lie_growth.services.subalgebra import GeneratorSet

DATA_DIR = Path(__file__).parent / "data"

TABLE1_D = [1, 1, 1, 1, 2, 2, 4, 5, 8, 11, 18, 25, 40, 58, 90, 135, 210, 316, 492, 750]
TABLE1_G = [1, 2, 3, 4, 6, 8, 12, 17, 25, 36, 54, 79, 119, 177, 267, 402, 612, 928, 1420, 2170]


@pytest.fixture()
def tmp_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Config:
    """An isolated Config whose config file lives in a temp directory."""
    config = Config(config_path=tmp_path / "config")

    # Reset the global config singleton so it doesn't leak between tests
    monkeypatch.setattr("lie_growth.core.config._config", config)
    return config


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture()
def binary() -> GradedAlphabet:
    """L(x, y) with x > y."""
    return GradedAlphabet.parse("y:1,x:1")


@pytest.fixture()
def ternary() -> GradedAlphabet:
    return GradedAlphabet.parse("z:1,y:1,x:1")


@pytest.fixture()
def indexed() -> IndexedAlphabet:
    return IndexedAlphabet()


@pytest.fixture()
def lie(binary):
    """Parse a Lie expression over the binary alphabet."""

    def _lie(text: str) -> LieElement:
        return parse_expression(text, binary)

    return _lie


@pytest.fixture()
def gens(lie):
    """Build a GeneratorSet from expressions over the binary alphabet."""

    def _gens(*texts: str) -> GeneratorSet:
        return GeneratorSet.of(lie(t) for t in texts)

    return _gens
