# src/ig_cli/config/loader.py

from pathlib import Path
from typing import Any, Dict, Optional, cast

from omegaconf import DictConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException
from pydantic import ValidationError
from yaml import YAMLError

from ig_cli.errors import ConfigError

from .schemas import AppConfig

DEFAULTS_PATH: Path = Path(__file__).resolve().parent / "defaults.yml"


def _load_yaml(path: Path) -> DictConfig:
    if not path.is_file():
        raise ConfigError(f"config file not found at {path}")
    try:
        loaded = OmegaConf.load(path)
    except (OmegaConfBaseException, YAMLError) as e:
        raise ConfigError(f"could not parse config file {path}: {e}") from e
    if not isinstance(loaded, DictConfig):
        raise ConfigError(f"config file {path} must have a mapping at its root")
    return loaded


def load_config(
    config_file: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None
) -> AppConfig:
    """Merges defaults, an optional user file and flag overrides, in that order.

    Raises:
        ConfigError: if a file cannot be read or the merged tree fails validation.
    """
    layers = [_load_yaml(DEFAULTS_PATH)]
    if config_file is not None:
        layers.append(_load_yaml(Path(config_file)))
    if overrides:
        layers.append(OmegaConf.create(overrides))
    try:
        merged = OmegaConf.merge(*layers)
        data = cast(Dict[str, Any], OmegaConf.to_container(merged, resolve=True))
        return AppConfig.model_validate(data)
    except OmegaConfBaseException as e:
        raise ConfigError(f"could not merge configuration: {e}") from e
    except ValidationError as e:
        raise ConfigError(f"invalid configuration: {e}") from e


def flag_overrides(**flags: Any) -> Dict[str, Any]:
    """Nests ``section__key=value`` flags that were actually given into a config tree."""
    tree: Dict[str, Dict[str, Any]] = {}
    for key, value in flags.items():
        if value is None:
            continue
        section, _, name = key.partition("__")
        tree.setdefault(section, {})[name] = value
    return tree
