"""Configuration management for EinsteinCheck."""

from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from einsteincheck.core.rootsys import EXCEPTIONAL_RANKS, MAX_RANK, MIN_RANKS
from einsteincheck.exceptions import ConfigurationError
from einsteincheck.utils import read_toml, read_yaml, to_fraction


OUTPUT_FORMATS = ('human', 'json', 'csv')

RATIONAL_FIELDS = ('width', 'residual_threshold', 'tolerance')


@dataclass
class RunConfig:
    """Selector, precision and output settings of one run."""
    group: Optional[str] = None
    family: Optional[str] = None
    n: Optional[int] = None
    p: Optional[int] = None
    node: Optional[int] = None
    dtype: Optional[str] = None
    precision: int = 12
    width: Fraction = Fraction(1, 10**12)
    sweep: Optional[Tuple[int, int]] = None
    output_format: str = 'human'
    residual_threshold: Fraction = Fraction(1, 10**8)
    tolerance: Fraction = Fraction(1, 10**6)
    jobs: int = 1
    unit_einstein: bool = False
    verbose: bool = False

    def validate(self) -> None:
        """Check the run invariants.

        Raises:
            ConfigurationError: If a field is out of range
        """
        if self.precision < 6:
            raise ConfigurationError(f"precision must be at least 6 digits, got {self.precision}")
        if not 0 < self.width <= Fraction(1, 10**6):
            raise ConfigurationError(f"width must lie in (0, 1e-6], got {self.width}")
        if self.residual_threshold <= 0:
            raise ConfigurationError("residual_threshold must be positive")
        if self.tolerance <= 0:
            raise ConfigurationError("tolerance must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"Unknown output format {self.output_format!r}; expected one of {', '.join(OUTPUT_FORMATS)}"
            )
        if self.jobs < 1:
            raise ConfigurationError(f"jobs must be at least 1, got {self.jobs}")
        if self.sweep is not None:
            self._validate_sweep()

    def _validate_sweep(self) -> None:
        lo, hi = self.sweep
        family = (self.family or '').upper()
        if family not in MIN_RANKS:
            if family in EXCEPTIONAL_RANKS:
                raise ConfigurationError(f"{family} has a fixed rank and cannot be swept")
            raise ConfigurationError("--sweep needs --family B, C or D")
        if lo > hi:
            raise ConfigurationError(f"empty sweep {lo}..{hi}")
        if lo < MIN_RANKS[family] or hi > MAX_RANK:
            raise ConfigurationError(
                f"{family}_n sweeps must stay within {MIN_RANKS[family]}..{MAX_RANK}, got {lo}..{hi}"
            )


def parse_sweep(text: str) -> Tuple[int, int]:
    """``"5..30"`` to ``(5, 30)``."""
    try:
        lo, hi = str(text).split('..')
        return int(lo), int(hi)
    except ValueError:
        raise ConfigurationError(f"sweep must look like a..b, got {text!r}")


class ConfigManager:
    """Manages configuration loading from various sources."""

    CONFIG_FILES = ['einsteincheck.yaml', '.einsteincheck.yaml', 'einsteincheck.yml']

    def __init__(self, base_dir: Optional[Path] = None):
        self.base_dir = base_dir or Path.cwd()

    def load(self, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """Defaults, then the config file or pyproject table, then ``overrides``.

        Keys of ``overrides`` whose value is None are ignored.

        Raises:
            ConfigurationError: If a file is malformed or the result is invalid
        """
        values: Dict[str, Any] = {}
        config_path = self._find_config_file()
        if config_path:
            values.update(self._load_config(config_path))
        else:
            values.update(self.load_from_pyproject() or {})
        values.update({k: v for k, v in (overrides or {}).items() if v is not None})

        config = self._parse_config(values)
        config.validate()
        return config

    def _find_config_file(self) -> Optional[Path]:
        """Find first existing config file."""
        for filename in self.CONFIG_FILES:
            config_path = self.base_dir / filename
            if config_path.exists():
                return config_path
        return None

    def _load_config(self, config_path: Path) -> Dict[str, Any]:
        """Load configuration from file."""
        try:
            if config_path.suffix in ['.yaml', '.yml']:
                config = read_yaml(str(config_path))
            elif config_path.suffix == '.toml':
                config = read_toml(str(config_path))
            else:
                raise ConfigurationError(f"Unsupported config format: {config_path.suffix}")
        except ConfigurationError:
            raise
        except Exception as e:
            raise ConfigurationError(f"Failed to load {config_path}: {e}")
        if not isinstance(config, dict):
            raise ConfigurationError("Configuration must be a dictionary")
        return config

    def load_from_pyproject(self) -> Optional[Dict[str, Any]]:
        """Settings from the ``[tool.einsteincheck]`` table of pyproject.toml."""
        pyproject_path = self.base_dir / 'pyproject.toml'
        if not pyproject_path.exists():
            return None
        try:
            config = read_toml(str(pyproject_path))
        except Exception as e:
            raise ConfigurationError(f"Failed to load from pyproject.toml: {e}")
        table = config.get('tool', {}).get('einsteincheck')
        if table is not None and not isinstance(table, dict):
            raise ConfigurationError("[tool.einsteincheck] must be a table")
        return table

    def _parse_config(self, values: Dict[str, Any]) -> RunConfig:
        """Build a RunConfig, converting rationals and sweep strings."""
        known = {f.name for f in fields(RunConfig)}
        if 'format' in values and 'output_format' not in values:
            values['output_format'] = values.pop('format')
        unknown = sorted(set(values) - known - {'format'})
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys: {', '.join(unknown)}")
        values = {k: v for k, v in values.items() if k in known}

        for name in RATIONAL_FIELDS:
            if name in values:
                try:
                    values[name] = to_fraction(values[name])
                except (ValueError, ZeroDivisionError) as e:
                    raise ConfigurationError(f"{name} must be a rational number: {e}")
        if isinstance(values.get('sweep'), str):
            values['sweep'] = parse_sweep(values['sweep'])
        elif values.get('sweep') is not None:
            try:
                lo, hi = values['sweep']
            except (TypeError, ValueError):
                raise ConfigurationError(f"sweep must be a pair of ranks, got {values['sweep']!r}")
            values['sweep'] = (int(lo), int(hi))
        for name in ('precision', 'jobs', 'n', 'p', 'node'):
            if values.get(name) is not None:
                try:
                    values[name] = int(values[name])
                except (TypeError, ValueError):
                    raise ConfigurationError(f"{name} must be an integer, got {values[name]!r}")
        return replace(RunConfig(), **values)
