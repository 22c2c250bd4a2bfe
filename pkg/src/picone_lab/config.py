"""Run configuration: built-in defaults < YAML file < command-line flags."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from picone_lab.errors import ConfigError, DimensionMismatch, UnknownCatalogEntry
from picone_lab.fields.catalog import resolve_field
from picone_lab.fields.nonlinearity import resolve_profile
from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.rules import QuadratureRule

Subcommand = Literal[
    "verify-identity",
    "young",
    "hardy",
    "sturm",
    "eigen",
    "monotonicity",
    "singular",
    "morse",
    "suite",
]
Identity = Literal["power", "nonlinear", "dunninger"]

OUT_ENV = "PICONE_LAB_OUT"
DEFAULT_OUT = Path("reports")

IDENTITY_ALIASES = {"2.2": "power", "2.3": "nonlinear"}

# p is not needed by young (samples its own), morse (p = 2) or suite (fixed scenarios)
NEEDS_P = {"verify-identity", "hardy", "sturm", "eigen", "monotonicity", "singular"}

# descriptor keys resolved against the domain when the config is parsed
FIELD_KEYS = ("u", "v", "g", "a", "f1", "f2")


class RunConfig(BaseModel):
    """Everything one subcommand needs. Unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    subcommand: Subcommand
    domain: str = "interval 0 1"
    domain2: str | None = None
    p: float | None = None
    identity: Identity = "power"
    form: Literal["printed", "rederived"] = "rederived"
    u: str | None = None
    v: str | None = None
    f: str = "linear"
    g: str = "poly 1"
    a: str = "poly 1"
    f1: str | None = None
    f2: str | None = None
    c1: float | None = None
    lambda_: float | None = Field(default=None, alias="lambda")
    corpus: list[str] | None = None
    N: int = Field(default=399, ge=3)
    max_iters: int = Field(default=500, ge=1)
    grad_tol: float = Field(default=1e-6, gt=0.0)
    panels: int = Field(default=32, ge=1)
    gauss_order: int = Field(default=5, ge=1, le=64)
    samples: int = Field(default=500, ge=1)
    seed: int = 0
    out: Path = DEFAULT_OUT
    verbose: bool = False

    @field_validator("identity", mode="before")
    @classmethod
    def _identity_alias(cls, value: Any) -> Any:
        return IDENTITY_ALIASES.get(str(value), value)

    @field_validator("p")
    @classmethod
    def _p_above_one(cls, value: float | None) -> float | None:
        if value is not None and not value > 1.0:
            raise ValueError(f"p must be > 1, got {value}")
        return value

    @property
    def rule(self) -> QuadratureRule:
        return QuadratureRule(panels=self.panels, order=self.gauss_order)

    def parsed_domain(self) -> Domain:
        return Domain.parse(self.domain)

    def echo(self) -> dict[str, Any]:
        """The config as written into report envelopes (no output path)."""
        return self.model_dump(mode="json", by_alias=True, exclude={"out", "verbose"})

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunConfig:
        return cls.model_validate(data)

    @classmethod
    def from_yaml(cls, path: Path, subcommand: str) -> RunConfig:
        return parse_config(subcommand, {}, path)


def _default_out() -> Path:
    return Path(os.environ.get(OUT_ENV) or DEFAULT_OUT)


def _key_lines(text: str) -> dict[str, int]:
    """1-based line of every top-level key in a YAML mapping."""
    node = yaml.compose(text)
    if not isinstance(node, yaml.MappingNode):
        return {}
    return {key.value: key.start_mark.line + 1 for key, _ in node.value}


def load_yaml(path: Path) -> tuple[dict[str, Any], dict[str, int]]:
    """Read a config file into ``(data, key -> line)``; hyphenated keys are normalized."""
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError("config", f"cannot read {path}: {e}") from e
    try:
        data = yaml.safe_load(text) or {}
        lines = _key_lines(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ConfigError("config", f"invalid YAML: {e}", mark.line + 1 if mark else None) from e
    if not isinstance(data, dict):
        raise ConfigError("config", "top level must be a mapping")
    data = {str(k).replace("-", "_"): v for k, v in data.items()}
    lines = {k.replace("-", "_"): n for k, n in lines.items()}
    return data, lines


def _check_references(config: RunConfig, lines: dict[str, int]) -> None:
    domain = config.parsed_domain()
    descriptors = [(key, getattr(config, key)) for key in FIELD_KEYS]
    descriptors += [("corpus", d) for d in config.corpus or []]
    for key, descriptor in descriptors:
        if descriptor is None:
            continue
        try:
            resolve_field(descriptor, domain)
        except (ConfigError, UnknownCatalogEntry, DimensionMismatch) as e:
            raise ConfigError(key, str(e), lines.get(key)) from e
    try:
        resolve_profile(config.f, config.p or 2.0)
    except (ConfigError, DimensionMismatch) as e:
        raise ConfigError("f", str(e), lines.get("f")) from e
    if config.domain2 is not None:
        Domain.parse(config.domain2)


def parse_config(
    subcommand: str,
    flags: dict[str, Any] | None = None,
    config_path: Path | None = None,
) -> RunConfig:
    """Merge defaults, an optional YAML file and flags into a validated RunConfig.

    Flags whose value is None are treated as not given.
    """
    merged: dict[str, Any] = {"out": _default_out()}
    lines: dict[str, int] = {}
    if config_path is not None:
        data, lines = load_yaml(config_path)
        merged.update(data)
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    merged["subcommand"] = subcommand

    try:
        config = RunConfig.model_validate(merged)
    except ValidationError as e:
        err = e.errors()[0]
        key = str(err["loc"][0]) if err["loc"] else "config"
        key = "lambda" if key == "lambda_" else key
        raise ConfigError(key, err["msg"], lines.get(key)) from e

    if config.subcommand in NEEDS_P and config.p is None:
        # verify-identity without u/v runs the corpus over its own exponents
        corpus_mode = config.subcommand == "verify-identity" and config.u is None
        if not corpus_mode:
            raise ConfigError("p", f"required for {config.subcommand}")
    if config.subcommand == "verify-identity" and (config.u is None) != (config.v is None):
        raise ConfigError("u" if config.u is None else "v", "u and v must be given together")

    _check_references(config, lines)
    return config
