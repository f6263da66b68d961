"""Centralized application configuration."""

import tomllib
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, computed_field

_DEFAULT_DATA_DIR = Path("~/.local/laser-cp")


class Config(BaseModel):
    """Application-wide configuration."""

    data_dir: Path = Field(description="Directory for the log file and the optional config.toml")
    workers: int = Field(default=1, ge=1, description="Threads used for curve and sweep evaluation")

    @computed_field(description="Rotating log file")
    @property
    def log_path(self) -> Path:
        """Rotating log file."""
        return self.data_dir / "laser-cp.log"

    @computed_field(description="Optional TOML configuration file")
    @property
    def config_path(self) -> Path:
        """Optional TOML configuration file."""
        return self.data_dir / "config.toml"

    @staticmethod
    def build(data_dir: Path | None = None, workers: int | None = None) -> Config:
        """Build a Config from CLI args / default, with optional TOML overlay."""
        resolved = (data_dir or _DEFAULT_DATA_DIR).expanduser()
        resolved.mkdir(parents=True, exist_ok=True)

        kwargs: dict[str, Any] = {"data_dir": resolved}
        config_path = resolved / "config.toml"
        if config_path.is_file():
            with config_path.open("rb") as f:
                toml_data = tomllib.load(f)
            compute = toml_data.get("compute", {})
            if isinstance(compute, dict):
                val = compute.get("workers")
                if isinstance(val, int) and val >= 1:
                    kwargs["workers"] = val
        if workers is not None:
            kwargs["workers"] = workers

        return Config(**kwargs)
