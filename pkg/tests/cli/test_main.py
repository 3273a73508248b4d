import json
from pathlib import Path

import pytest

from app.cli.main import EXIT_FAILED, EXIT_PASSED, EXIT_USAGE, main
from app.systems.enums import SystemId
from app.verification.models import RunConfig, VerificationReport


def _fake_suite(error: str | None = None):
    def run_suite(config: RunConfig, workers: int | None) -> list[VerificationReport]:
        return [
            VerificationReport(
                case_id=system_id,
                params={},
                constants={},
                provenance={},
                seed=config.seed,
                tol=config.tol,
                error=error,
            )
            for system_id in config.selected_cases
        ]

    return run_suite


def test_list(capsys: pytest.CaptureFixture):
    assert main(["list"]) == EXIT_PASSED

    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(SystemId)
    assert lines[0].startswith("perlick_i\tforms: second_order")
    assert "free_particle" in lines[0]


def test_verify_to_stdout(monkeypatch: pytest.MonkeyPatch, capsys):
    monkeypatch.setattr("app.cli.main.run_suite", _fake_suite())

    status = main(["verify", "--case", "perlick_i", "--case", "dI_1", "--seed", "5"])

    assert status == EXIT_PASSED
    report = json.loads(capsys.readouterr().out)
    assert report["seed"] == 5
    assert report["passed"] is True
    assert [r["case_id"] for r in report["reports"]] == ["perlick_i", "dI_1"]


def test_failing_verify_to_a_file(monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
    monkeypatch.setattr("app.cli.main.run_suite", _fake_suite(error="crash"))
    out = tmp_path / "report.json"

    status = main(["verify", "--case", "taub_nut", "--out", str(out)])

    assert status == EXIT_FAILED
    assert json.loads(out.read_text(encoding="utf-8"))["passed"] is False


def test_verify_with_a_config_file(monkeypatch: pytest.MonkeyPatch, tmp_path, capsys):
    monkeypatch.setattr("app.cli.main.run_suite", _fake_suite())
    config = tmp_path / "run.toml"
    config.write_text('tol = 1e-9\ncases = ["taub_nut"]\n', encoding="utf-8")

    assert main(["verify", "--config", str(config)]) == EXIT_PASSED

    report = json.loads(capsys.readouterr().out)
    assert report["tol"] == 1e-9
    assert [r["case_id"] for r in report["reports"]] == ["taub_nut"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--case", "perlick_iii"],
        ["verify", "--tol", "1.0"],
        ["trace", "--case", "perlick_iii", "--dir", "traces"],
    ],
)
def test_usage_errors(argv: list[str]):
    assert main(argv) == EXIT_USAGE


def test_malformed_config(tmp_path: Path):
    config = tmp_path / "run.toml"
    config.write_text("seed = ", encoding="utf-8")

    assert main(["verify", "--config", str(config)]) == EXIT_USAGE
    trace_argv = ["trace", "--case", "perlick_i", "--dir", str(tmp_path)]
    assert main([*trace_argv, "--config", str(config)]) == EXIT_USAGE


def test_trace(monkeypatch: pytest.MonkeyPatch, tmp_path: Path, capsys):
    written = tmp_path / "perlick_i_flow.csv"
    monkeypatch.setattr(
        "app.cli.main.trace", lambda system_id, config, directory: [written]
    )

    assert main(["trace", "--case", "perlick_i", "--dir", str(tmp_path)]) == 0

    assert capsys.readouterr().out == f"{written}\n"


@pytest.mark.parametrize(("argv", "code"), [([], 2), (["--version"], 0)])
def test_parser_exits(argv: list[str], code: int):
    with pytest.raises(SystemExit) as exit_info:
        main(argv)

    assert exit_info.value.code == code


def test_verify_the_whole_catalog(tmp_path: Path):
    # Every metric of every case passes, is a diagnostic or does not apply
    out = tmp_path / "report.json"

    status = main(["verify", "--workers", "1", "--out", str(out)])

    report = json.loads(out.read_text(encoding="utf-8"))
    failures = [
        f"{case['case_id']} {metric['name']} : {metric['diagnostics']}"
        for case in report["reports"]
        for metric in case["metrics"]
        if metric["verdict"] not in {"pass", "diagnostic", "not_applicable"}
    ]
    assert failures == []
    assert [case["case_id"] for case in report["reports"]] == list(SystemId)
    assert all(case["error"] is None for case in report["reports"])
    assert status == EXIT_PASSED
