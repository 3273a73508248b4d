"""CSV traces of one case: the Hamiltonian flow, then for every chain the
reduced samples, their images in each intermediate chart and in the chart
of the linear target, with the residual of each sample.
"""

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

import numpy as np

from app.config import settings
from app.exceptions import LabError, NoCyclicMomentumError
from app.integrate.trajectory import Trajectory
from app.lab_logger import logger
from app.linearize.catalog import chain_params
from app.linearize.models import LinearizationChain
from app.linearize.residuals import residual_series
from app.linearize.samples import chain_samples, stage_samples, transformed_samples
from app.reduce.catalog import bind_form
from app.systems.catalog import cyclic_momentum
from app.systems.enums import SystemId

from .context import CaseContext, case_context
from .linear_metrics import chain_inputs, primary_chains
from .models import RunConfig

_FLOAT_FORMAT = "%.17g"


def write_csv(
    path: Path, header: Sequence[str], rows: Iterable[Sequence[float]]
) -> Path:
    with path.open(mode="w", newline="", encoding="utf-8") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([_FLOAT_FORMAT % value for value in row] for row in rows)
    logger.debug("Trace written to {}", path)
    return path


def _trajectory_rows(
    samples: Trajectory, residuals: np.ndarray | None = None
) -> list[list[float]]:
    columns = [samples.times[:, None], samples.states]
    if residuals is not None:
        columns.append(residuals[:, None])
    return np.hstack(columns).tolist()


def write_flow(ctx: CaseContext, directory: Path) -> Path:
    """t, the phase space coordinates, H and the cyclic momentum (nan when the
    case has none) along the flow
    """
    flow = ctx.flow
    rows = []
    for t, state in zip(flow.times, flow.states, strict=True):
        try:
            momentum = cyclic_momentum(ctx.system_id, state)
        except NoCyclicMomentumError:
            momentum = float("nan")
        energy = ctx.system.energy(ctx.params, state)
        rows.append([float(t), *state, energy, momentum])
    header = ["t", *ctx.system.state_labels, "H", "p_cyclic"]
    return write_csv(directory / f"{ctx.system_id}_flow.csv", header, rows)


def _reduced_residuals(
    ctx: CaseContext,
    chain: LinearizationChain,
    params: dict[str, float],
    state: list[float],
    samples: Trajectory,
) -> np.ndarray | None:
    """Residual of the reduced form along the samples, when they reach its
    highest derivative
    """
    form = ctx.case.form(chain.form)
    if samples.states.shape[1] <= form.order:
        return None
    ode = bind_form(form, params, ctx.case.constants(params, state))
    clipped = Trajectory(
        times=samples.times,
        states=samples.states[:, : form.order + 1],
        labels=samples.labels[: form.order + 1],
    )
    return residual_series(ode, {}, clipped)


def write_chain(
    ctx: CaseContext, chain: LinearizationChain, directory: Path
) -> list[Path]:
    params, state, force = chain_inputs(ctx, chain)
    bound = chain_params(ctx.system_id, chain, params, state, force=force)
    samples = chain_samples(
        ctx.system_id,
        chain,
        params,
        state,
        settings.trace_sample_count,
        ctx.tol,
        ctx.span,
    )
    prefix = f"{ctx.system_id}_{chain.name}"
    variable = ctx.case.form(chain.form).ode.variable

    reduced = _reduced_residuals(ctx, chain, params, state, samples)
    header = [variable, *samples.labels]
    if reduced is not None:
        header.append("residual")
    paths = [
        write_csv(
            directory / f"{prefix}_reduced.csv",
            header,
            _trajectory_rows(samples, reduced),
        )
    ]

    if len(chain.stages) > 1:
        for index, stage in enumerate(stage_samples(chain, bound, samples)[:-1]):
            paths.append(
                write_csv(
                    directory / f"{prefix}_stage{index + 1}.csv",
                    [f"x{index + 1}", *stage.labels],
                    _trajectory_rows(stage),
                )
            )

    images = transformed_samples(chain, bound, samples)
    residuals = residual_series(chain.target, bound, images)
    paths.append(
        write_csv(
            directory / f"{prefix}_transformed.csv",
            [chain.target.variable, *images.labels, "residual"],
            _trajectory_rows(images, residuals),
        )
    )
    return paths


def trace(
    system_id: SystemId, config: RunConfig, directory: str | Path
) -> list[Path]:
    """Write the traces of a case, returning the files written"""
    ctx = case_context(system_id, config)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    logger.info("Tracing {} into {}", system_id, directory)

    paths = [write_flow(ctx, directory)]
    for chain in primary_chains(system_id):
        try:
            paths.extend(write_chain(ctx, chain, directory))
        except LabError as error:
            logger.warning(
                "No trace for chain {} of {} : {}", chain.name, system_id, error
            )
    return paths
