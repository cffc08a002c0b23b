"""Configuration management for hahnlab"""

import logging
import os
import sys
from typing import Any, Dict, Optional

import yaml
from pydantic import Field, PrivateAttr, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .coeffs.field import CoeffField
from .defaults import (
    DEFAULT_CMAP,
    DEFAULT_COEFF_FIELD,
    DEFAULT_DAGGER_SEARCH_BOUND,
    DEFAULT_EXAMPLE_SEED,
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_TRUNCATION,
    DEFAULT_VALUE_GROUP,
)
from .exceptions import ConfigurationError, HahnLabError
from .groups.value_group import ValueGroup
from .hahn.series import FieldSpec
from .parsing.literals import parse_cmap

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = frozenset({"text", "json"})
LOG_LEVELS = frozenset({"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"})

_LITERAL_FIELDS = {"field": "coeff_field", "group": "value_group", "cmap": "cmap", "truncation": "truncation"}

# Session-file keys and the config fields they set.
SESSION_FILE_KEYS = {
    "field": "coeff_field",
    "group": "value_group",
    "cmap": "cmap",
    "truncation": "truncation",
    "format": "output_format",
    "search_bound": "search_bound",
    "max_lift_iterations": "max_lift_iterations",
    "seed": "example_seed",
    "log_level": "log_level",
}


def _get_env_file() -> str:
    """Determine which .env file to use based on environment"""
    if os.getenv("PYTEST_CURRENT_TEST") or os.getenv("ENVIRONMENT") == "test" or "pytest" in sys.modules:
        return ".env.test"
    return ".env"


class HahnLabConfig(BaseSettings):
    """Session configuration: the field spec literals plus solver and output settings"""

    # Field spec literals
    coeff_field: str = Field(
        default=DEFAULT_COEFF_FIELD,
        alias="HAHNLAB_FIELD",
        description="Coefficient field tag: Q (trivial derivation) or Qx (d/dx)",
    )

    value_group: str = Field(
        default=DEFAULT_VALUE_GROUP,
        alias="HAHNLAB_GROUP",
        description="Value group literal: Z, Q, Z/d or Z^nlex",
    )

    cmap: str = Field(
        default=DEFAULT_CMAP,
        alias="HAHNLAB_CMAP",
        description="c-map literal, e.g. '1 -> x', 'e1 -> 1, e2 -> 1/x' or '0'",
    )

    truncation: str = Field(
        default=DEFAULT_TRUNCATION,
        alias="HAHNLAB_TRUNCATION",
        description="Default truncation bound for series literals without O(...)",
    )

    # Output
    output_format: str = Field(
        default=DEFAULT_OUTPUT_FORMAT,
        alias="HAHNLAB_FORMAT",
        description="Output format: text or json",
    )

    log_level: str = Field(
        default=DEFAULT_LOG_LEVEL,
        alias="HAHNLAB_LOG_LEVEL",
        description="Logging level for diagnostics on stderr",
    )

    # Solvers
    search_bound: int = Field(
        default=DEFAULT_DAGGER_SEARCH_BOUND,
        alias="HAHNLAB_SEARCH_BOUND",
        gt=0,
        description="Search bound for solve_dagger when no structural certificate applies",
    )

    max_lift_iterations: Optional[int] = Field(
        default=None,
        alias="HAHNLAB_MAX_LIFT_ITERATIONS",
        gt=0,
        description="Override for the lifting iteration cap (default: derived from the bound)",
    )

    example_seed: int = Field(
        default=DEFAULT_EXAMPLE_SEED,
        alias="HAHNLAB_EXAMPLE_SEED",
        description="Seed for the sampled examples of the example suite",
    )

    model_config = SettingsConfigDict(
        env_file=_get_env_file(),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    _field_spec: Optional[FieldSpec] = PrivateAttr(default=None)

    @field_validator("coeff_field", "value_group", "cmap", "truncation", mode="before")
    @classmethod
    def stringify_literal(cls, v: Any) -> Any:
        """YAML and overrides may hand over numbers; literals are kept as text"""
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return str(v)
        return v

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        v = v.strip().lower()
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {sorted(OUTPUT_FORMATS)}, got {v!r}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        v = v.strip().upper()
        if v not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {sorted(LOG_LEVELS)}, got {v!r}")
        return v

    @model_validator(mode="after")
    def build_spec(self) -> "HahnLabConfig":
        """Parse the literals together; a bad literal is reported with its name and position"""
        literal = "field"
        try:
            field = CoeffField.parse(self.coeff_field)
            literal = "group"
            group = ValueGroup.parse(self.value_group)
            literal = "cmap"
            cmap = parse_cmap(self.cmap, group, field)
            literal = "truncation"
            truncation = group.element(self.truncation)
            self._field_spec = FieldSpec.build(field, group, cmap, truncation)
        except HahnLabError as e:
            raise ValueError(f"{literal} literal {getattr(self, _LITERAL_FIELDS[literal])!r}: {e}") from e
        return self

    @property
    def field_spec(self) -> FieldSpec:
        if self._field_spec is None:  # pragma: no cover
            raise ConfigurationError("configuration has no field spec")
        return self._field_spec


def load_session_file(path: str) -> Dict[str, Any]:
    """Read a YAML session file into config field names"""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except FileNotFoundError:
        raise ConfigurationError(f"Session file not found: {path}")
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" at {mark.line + 1}:{mark.column + 1}" if mark is not None else ""
        raise ConfigurationError(f"Session file {path} is not valid YAML{where}")

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Session file {path} must contain a mapping, got {type(data).__name__}")
    unknown = sorted(str(k) for k in data if k not in SESSION_FILE_KEYS)
    if unknown:
        raise ConfigurationError(f"Unknown key(s) in session file {path}: {', '.join(unknown)}")
    logger.debug("Loaded session file %s with keys %s", path, sorted(data))
    return {SESSION_FILE_KEYS[k]: v for k, v in data.items() if v is not None}


def load_config(config_file: Optional[str] = None, **overrides: Any) -> HahnLabConfig:
    """Load configuration: defaults < environment < session file < overrides"""
    try:
        values: Dict[str, Any] = {}
        if config_file:
            values.update(load_session_file(config_file))
        values.update({k: v for k, v in overrides.items() if v is not None})
        config = HahnLabConfig(**values)
        validate_config(config)
        return config

    except ConfigurationError:
        raise
    except Exception as e:
        raise ConfigurationError(f"Failed to load configuration: {str(e)}")


def validate_config(config: HahnLabConfig) -> None:
    """Validate cross-field constraints of a loaded configuration"""
    spec = config.field_spec
    if not spec.truncation.is_positive():
        raise ConfigurationError(f"Truncation bound must be positive, got {spec.truncation}")
    if spec.cmap.group != spec.group:
        raise ConfigurationError(f"c-map is defined on {spec.cmap.group}, not on {spec.group}")

    if not spec.group.finitely_generated:
        logger.info("Value group Q is not finitely generated; group questions run on <1> unless --within is given")
    if config.max_lift_iterations is not None and config.max_lift_iterations < 4:
        logger.warning("Low max_lift_iterations (%d) may stop lifting early", config.max_lift_iterations)


def build_field_spec(config: Optional[HahnLabConfig] = None) -> FieldSpec:
    """The FieldSpec described by a configuration (the loaded default when None)"""
    if config is None:
        config = load_config()
    return config.field_spec
