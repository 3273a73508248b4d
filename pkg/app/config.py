"""Project constants module"""

import tomllib
from functools import cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


@cache
def get_app_version() -> str:
    pyproject_path = Path(__file__).resolve().parent.parent / "pyproject.toml"
    if not pyproject_path.exists():
        return "unknown"
    with pyproject_path.open(mode="rb") as project_file:
        project_data = tomllib.load(project_file)
    return project_data["project"]["version"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_prefix="LAB_")

    ############
    # APPLICATION SETTINGS
    ############

    # Application version, retrieved from pyproject.toml. It should never be
    # overriden in dotenv. Only written into the JSON reports.
    app_version: str = get_app_version()

    # Log level for Loguru
    log_level: str = "info"

    # Write logs into a rotating file under logs_root_path as well as stderr
    log_to_file: bool = False

    # Root path for Loguru log files
    logs_root_path: str = f"{Path.cwd()}/logs"

    # Number of worker processes for the verification suite (0 = sequential)
    max_workers: int = 4

    ############
    # RUN DEFAULTS
    ############

    # Seed of every random sample drawn by the suite
    default_seed: int = 42

    # Integrator tolerance used when neither the CLI nor the run config sets one
    default_tol: float = 1e-10

    # Admissible tolerance range for the integrator
    min_tol: float = 1e-12
    max_tol: float = 1e-4

    ############
    # NUMERICS
    ############

    # Highest jet order accepted when seeding a variable
    max_jet_order: int = 4

    # Central difference step used by fd_check
    fd_step: float = 1e-6

    # Strict margin for domain guards along trajectories
    guard_margin: float = 1e-9

    # Margin kept between evaluation windows and singular loci
    window_margin: float = 0.05

    # Integrator limits
    max_steps: int = 200_000
    min_step: float = 1e-14

    # Secant iteration used for linearizability presets
    preset_max_iterations: int = 50
    preset_tolerance: float = 1e-13

    ############
    # SAMPLE COUNTS
    ############

    rhs_sample_count: int = 50
    fd_sample_count: int = 100
    jet_point_count: int = 100
    closure_point_count: int = 20
    closed_form_point_count: int = 100

    # Number of samples kept along reduced solutions for linear residuals
    residual_sample_count: int = 60

    # Number of samples per trace file along reduced solutions
    trace_sample_count: int = 200

    ############
    # VERDICT THRESHOLDS
    ############

    energy_drift_threshold: float = 1e-8
    cyclic_drift_threshold: float = 1e-10
    rhs_transcription_threshold: float = 1e-10
    fd_check_threshold: float = 1e-6
    reduced_vs_full_threshold: float = 1e-6
    closure_consistency_threshold: float = 1e-7
    raised_consistency_threshold: float = 1e-8
    linear_residual_threshold: float = 1e-6
    negative_control_threshold: float = 1e-3
    symmetry_residual_threshold: float = 1e-9
    commutator_threshold: float = 1e-10
    closure_residual_threshold: float = 1e-8
    closed_form_threshold: float = 1e-7
    structure_fit_threshold: float = 1e-6


@cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
