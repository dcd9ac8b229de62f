# tests/ig_cli/test_config.py

from pathlib import Path

import pytest
from ig_cli.errors import ConfigError

# Subject under test
from ig_cli.config import DEFAULTS_PATH, AppConfig, flag_overrides, load_config

# Test Cases


def test_defaults_match_the_packaged_file():
    """Tests that loading without layers gives the schema defaults."""
    # Act
    config = load_config()

    # Assert
    assert DEFAULTS_PATH.is_file()
    assert config == AppConfig()
    assert config.enumeration.max_cosets == 100_000
    assert config.simplification.strategy == "paper"
    assert config.simplification.verify_checkpoints is None
    assert config.report.format == "text"


def test_user_file_is_merged_over_the_defaults(tmp_path: Path):
    """Tests that a partial file only changes the keys it names."""
    # Arrange
    path = tmp_path / "run.yml"
    path.write_text("simplification:\n  strategy: greedy\nenumeration:\n  max_cosets: 500\n")

    # Act
    config = load_config(path)

    # Assert
    assert config.simplification.strategy == "greedy"
    assert config.simplification.max_defining_length == 16
    assert config.enumeration.max_cosets == 500


def test_flags_win_over_the_file(tmp_path: Path):
    """Tests the merge order defaults, file, flags."""
    # Arrange
    path = tmp_path / "run.yml"
    path.write_text("report:\n  format: json\n  allow_unknown: true\n")
    overrides = flag_overrides(report__format="text", enumeration__max_cosets=None)

    # Act
    config = load_config(path, overrides)

    # Assert
    assert config.report.format == "text"
    assert config.report.allow_unknown is True
    assert config.enumeration.max_cosets == 100_000


def test_flag_overrides_skip_missing_flags():
    """Tests that only given flags are nested into the override tree."""
    # Act
    tree = flag_overrides(report__format="json", report__output=None, logging__verbose=True)

    # Assert
    assert tree == {"report": {"format": "json"}, "logging": {"verbose": True}}


@pytest.mark.parametrize(
    "overrides",
    [
        {"report": {"format": "xml"}},
        {"enumeration": {"max_cosets": 0}},
        {"simplification": {"strategy": "random"}},
    ],
)
def test_invalid_values_raise_config_error(overrides):
    """Tests that values outside the schema are rejected."""
    # Act & Assert
    with pytest.raises(ConfigError, match="invalid configuration"):
        load_config(None, overrides)


def test_missing_file_raises_config_error(tmp_path: Path):
    """Tests that a config path that does not exist is an error."""
    # Act & Assert
    with pytest.raises(ConfigError, match="not found"):
        load_config(tmp_path / "absent.yml")


def test_non_mapping_file_raises_config_error(tmp_path: Path):
    """Tests that a YAML list at the root is refused."""
    # Arrange
    path = tmp_path / "list.yml"
    path.write_text("- a\n- b\n")

    # Act & Assert
    with pytest.raises(ConfigError):
        load_config(path)
