from pathlib import Path

import pytest

from app.config import settings
from app.exceptions import ConfigError
from app.systems.enums import SystemId
from app.verification.run_config import load_run_config


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "run.toml"
    path.write_text(text, encoding="utf-8")
    return path


def test_defaults():
    config = load_run_config()

    assert config.seed == settings.default_seed
    assert config.tol == settings.default_tol
    assert config.selected_cases == list(SystemId)
    assert config.thresholds.energy_drift == settings.energy_drift_threshold
    assert config.override(SystemId.PERLICK_I).params == {}


def test_values_from_file(tmp_path: Path):
    path = _write(
        tmp_path,
        """
seed = 7
cases = ["perlick_ii", "taub_nut"]

[thresholds]
energy_drift = 1e-9

[case.perlick_ii]
preset = "linearizable"
params = { lam = 0.5 }
window = [0.0, 0.25]
""",
    )

    config = load_run_config(path)

    assert config.seed == 7
    assert config.selected_cases == [SystemId.PERLICK_II, SystemId.TAUB_NUT]
    assert config.thresholds.energy_drift == 1e-9
    override = config.override(SystemId.PERLICK_II)
    assert override.preset == "linearizable"
    assert override.params == {"lam": 0.5}
    assert override.window == (0.0, 0.25)
    assert not override.force_second_order


def test_flags_take_precedence_over_the_file(tmp_path: Path):
    path = _write(tmp_path, 'seed = 7\ntol = 1e-8\ncases = ["perlick_i"]\n')

    config = load_run_config(path, seed=3, cases=["taub_nut"])

    assert config.seed == 3
    assert config.tol == 1e-8
    assert config.selected_cases == [SystemId.TAUB_NUT]


@pytest.mark.parametrize(
    "text",
    [
        "seed = ",
        "tol = 1.0",
        "tol = 1e-14",
        "unknown = 1",
        'cases = ["perlick_iii"]',
        "[thresholds]\nenergy = 1e-8",
        "[case.perlick_i]\nparams = { kappa = 1.0 }",
        '[case.perlick_i]\npreset = "linearizable"',
        "[case.perlick_i]\ninitial_state = [1.0, 0.0]",
    ],
)
def test_invalid_config(tmp_path: Path, text: str):
    with pytest.raises(ConfigError):
        load_run_config(_write(tmp_path, text))


def test_missing_config_file(tmp_path: Path):
    with pytest.raises(ConfigError):
        load_run_config(tmp_path / "missing.toml")


def test_tolerance_flag_out_of_range():
    with pytest.raises(ConfigError):
        load_run_config(tol=1e-2)
