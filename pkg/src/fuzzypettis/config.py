"""Configuration management for the fuzzypettis tools."""

import copy
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

LOG_LEVEL_ENV = "FUZZYPETTIS_LOG_LEVEL"
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "default_config.yaml"

DEFAULTS: Dict[str, Any] = {
    'tolerances': {
        'distance': 1e-9,
        'support': 1e-9,
        'atom': 1e-12,
        'decomposition': 1e-12,
    },
    'solver': {
        'prune_vertices': False,
    },
    'grid': {
        'size_2d': 64,
        'sample_3d': 128,
        'seed': 0,
    },
    'oracle': {
        'grid_divisions': 200,
    },
    'logging': {
        'level': 'WARNING',
        'to_file': False,
        'file_path': 'logs/fuzzypettis.log',
    },
    'verify': {
        'seed': 0,
        'partition_parts': 3,
        'linearity_lambdas': [0.0, 1.0, 2.5],
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Configuration manager: built-in defaults, overridden by a YAML file."""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration.

        Without ``config_path`` the shipped config/default_config.yaml is read when it
        exists; an installed package without it runs on the built-in defaults.
        """
        if config_path:
            self.config_path = Path(config_path)
        elif DEFAULT_CONFIG_PATH.exists():
            self.config_path = DEFAULT_CONFIG_PATH
        else:
            self.config_path = None
        self._config = _merge(DEFAULTS, self._load_config())
        self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        if self.config_path is None:
            return {}
        if not self.config_path.exists():
            raise FileNotFoundError(f"Config file not found: {self.config_path}")

        with open(self.config_path, 'r') as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"Config file {self.config_path} must contain a mapping")
        return loaded

    def _validate_config(self) -> None:
        """Validate required configuration sections and tolerance signs."""
        for section in ('tolerances', 'solver', 'grid', 'oracle', 'logging', 'verify'):
            if not isinstance(self._config.get(section), dict):
                raise ValueError(f"Missing required config section: {section}")
        for name, value in self._config['tolerances'].items():
            if not float(value) > 0:
                raise ValueError(f"Tolerance tolerances.{name} must be positive, got {value}")

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by dotted key."""
        keys = key.split('.')
        value = self._config
        for k in keys:
            if isinstance(value, dict):
                value = value.get(k, default)
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Override a dotted key, as command-line flags do."""
        *parents, last = key.split('.')
        node = self._config
        for k in parents:
            node = node.setdefault(k, {})
        node[last] = value

    @property
    def distance_tol(self) -> float:
        return float(self.get('tolerances.distance'))

    @property
    def support_tol(self) -> float:
        return float(self.get('tolerances.support'))

    @property
    def atom_tol(self) -> float:
        return float(self.get('tolerances.atom'))

    @property
    def decomposition_tol(self) -> float:
        return float(self.get('tolerances.decomposition'))

    @property
    def prune_vertices(self) -> bool:
        return bool(self.get('solver.prune_vertices'))

    @property
    def grid_size_2d(self) -> int:
        return int(self.get('grid.size_2d'))

    @property
    def grid_sample_3d(self) -> int:
        return int(self.get('grid.sample_3d'))

    @property
    def grid_seed(self) -> int:
        return int(self.get('grid.seed'))

    @property
    def oracle_grid_divisions(self) -> int:
        return int(self.get('oracle.grid_divisions'))

    @property
    def verify_seed(self) -> int:
        return int(self.get('verify.seed'))

    @property
    def partition_parts(self) -> int:
        return int(self.get('verify.partition_parts'))

    @property
    def linearity_lambdas(self) -> List[float]:
        return [float(k) for k in self.get('verify.linearity_lambdas')]

    @property
    def logging(self) -> Dict[str, Any]:
        settings = dict(self.get('logging'))
        level = os.getenv(LOG_LEVEL_ENV)
        if level:
            settings['level'] = level.upper()
        return settings
