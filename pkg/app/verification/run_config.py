"""Loading of the TOML run configuration. Command line values take precedence
over the file, which takes precedence over the settings defaults.
"""

import tomllib
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from app.exceptions import ConfigError, LabError
from app.lab_logger import logger
from app.reduce.catalog import get_case

from .models import RunConfig


def _read_toml(path: Path) -> dict:
    try:
        with path.open(mode="rb") as config_file:
            return tomllib.load(config_file)
    except OSError as error:
        msg = f"Cannot read run config {path} : {error}"
        raise ConfigError(msg) from error
    except tomllib.TOMLDecodeError as error:
        msg = f"Malformed run config {path} : {error}"
        raise ConfigError(msg) from error


def check_overrides(config: RunConfig) -> None:
    """Reject overrides naming unknown parameters or presets"""
    for system_id, override in config.case.items():
        case = get_case(system_id)
        try:
            case.system.bind_params(override.params)
            if override.preset is not None:
                case.preset(override.preset)
        except LabError as error:
            msg = f"Invalid override for {system_id} : {error}"
            raise ConfigError(msg) from error


def load_run_config(
    path: str | Path | None = None,
    seed: int | None = None,
    tol: float | None = None,
    cases: Sequence[str] | None = None,
) -> RunConfig:
    data = _read_toml(Path(path)) if path is not None else {}
    flags = {"seed": seed, "tol": tol, "cases": list(cases) if cases else None}
    data.update({key: value for key, value in flags.items() if value is not None})
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as error:
        msg = f"Invalid run config : {error}"
        raise ConfigError(msg) from error
    check_overrides(config)
    logger.debug(
        "Run config loaded from {} : seed {}, tol {}",
        path or "defaults",
        config.seed,
        config.tol,
    )
    return config
