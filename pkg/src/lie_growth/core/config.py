"""Configuration management."""

import os
from dataclasses import dataclass
from pathlib import Path

from .exceptions import LieGrowthError

# Mersenne prime 2^61 - 1
DEFAULT_PRIME = 2**61 - 1


class ConfigFileError(LieGrowthError, ValueError):
    """A config file line is not of the form key=value."""


@dataclass
class Config:
    """Application configuration."""

    # Optional key=value file that pre-sets CLI flags
    config_path: Path

    # Linear algebra
    exact_degree_cap: int = 12
    prime_degree_cap: int = 20
    prime: int = DEFAULT_PRIME

    # LS words are enumerated by filtering up to this degree, streamed above it
    ls_filter_max_degree: int = 14

    # Root finding and power iteration
    default_tolerance: str = "1e-12"
    power_iteration_tolerance: float = 1e-9
    power_iteration_limit: int = 100_000

    @classmethod
    def default(cls) -> "Config":
        """Load default configuration."""
        # Priority: XDG_CONFIG_HOME > ~/.config
        config_home = os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config")
        return cls(config_path=Path(config_home) / "lie-growth" / "config")

    def degree_cap(self, prime_field: bool) -> int:
        """Maximum degree for linear-algebra computations in the given field mode."""
        return self.prime_degree_cap if prime_field else self.exact_degree_cap


def read_config_file(path: Path) -> dict[str, str]:
    """Parse a key=value file into option defaults.

    Blank lines and lines starting with '#' are skipped. Keys are CLI flag
    names; dashes are normalised to underscores so they match parameter names.
    """
    values: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise ConfigFileError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        values[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return values


# Global config instance
_config: Config | None = None


def get_config() -> Config:
    """Get configuration."""
    global _config
    if _config is None:
        _config = Config.default()
    return _config
