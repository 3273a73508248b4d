import csv
from pathlib import Path

import pytest

from app.linearize.models import LinearizationChain, linear_target
from app.linearize.transforms import identity
from app.systems.enums import SystemId
from app.verification.context import case_context
from app.verification.models import RunConfig
from app.verification.traces import trace, write_chain, write_csv


def _read(path: Path) -> tuple[list[str], list[list[float]]]:
    with path.open(encoding="utf-8", newline="") as csv_file:
        header, *rows = csv.reader(csv_file)
    return header, [[float(value) for value in row] for row in rows]


def test_write_csv(tmp_path: Path):
    path = write_csv(tmp_path / "values.csv", ["a", "b"], [[0.1, 1.0 / 3.0]])

    assert path.read_text(encoding="utf-8") == (
        "a,b\n0.10000000000000001,0.33333333333333331\n"
    )


@pytest.fixture(scope="module")
def perlick_i_traces(tmp_path_factory: pytest.TempPathFactory) -> list[Path]:
    directory = tmp_path_factory.mktemp("traces")
    return trace(SystemId.PERLICK_I, RunConfig(), directory)


def test_trace_files(perlick_i_traces):
    assert [path.name for path in perlick_i_traces] == [
        "perlick_i_flow.csv",
        "perlick_i_free_particle_reduced.csv",
        "perlick_i_free_particle_transformed.csv",
        "perlick_i_harmonic_reduced.csv",
        "perlick_i_harmonic_transformed.csv",
    ]


def test_flow_trace(perlick_i_traces):
    header, rows = _read(perlick_i_traces[0])

    assert header == ["t", "r", "theta", "p_r", "p_theta", "H", "p_cyclic"]
    assert rows[0][0] == 0.0
    assert rows[-1][0] == 1.0
    assert all(row[6] == rows[0][6] for row in rows)


def test_transformed_trace(perlick_i_traces):
    header, rows = _read(perlick_i_traces[2])

    assert header[0] == "Y"
    assert header[-1] == "residual"
    assert len(rows) == 200
    assert max(row[-1] for row in rows) <= 1e-6


def test_stage_files_of_a_staged_chain(tmp_path: Path):
    chain = LinearizationChain(
        "doubled",
        "second_order",
        (identity(), identity()),
        linear_target("free_particle", 2, lambda y, d, p: 0.0 * d[1]),
    )
    paths = write_chain(case_context(SystemId.PERLICK_I, RunConfig()), chain, tmp_path)

    assert [path.name for path in paths] == [
        "perlick_i_doubled_reduced.csv",
        "perlick_i_doubled_stage1.csv",
        "perlick_i_doubled_transformed.csv",
    ]
    header, _ = _read(paths[1])
    assert header[0] == "x1"
