from app.enums import Verdict
from app.linearize.catalog import transform_chain
from app.systems.enums import SystemId
from app.verification.context import case_context
from app.verification.linear_metrics import (
    chain_inputs,
    closed_form_metric,
    linear_residual_metric,
    negative_control,
    primary_chains,
    structure_fit,
)
from app.verification.models import CaseOverride, RunConfig


def test_primary_chains_leave_out_derived_ones():
    names = [chain.name for chain in primary_chains(SystemId.TAUB_NUT)]

    assert "canonical" in names
    assert "harmonic" in names
    assert "canonical_derived" not in names


def test_conditional_chain_runs_on_its_preset():
    ctx = case_context(SystemId.PERLICK_II, RunConfig())
    chain = transform_chain(SystemId.PERLICK_II, "second_order")

    params, state, force = chain_inputs(ctx, chain)
    forced_params, _, forced = chain_inputs(ctx, chain, force=True)

    assert not force
    assert params["B"] != ctx.params["B"]
    assert params["lam"] == ctx.params["lam"]
    assert state == ctx.state
    assert forced
    assert forced_params == ctx.params


def test_forced_second_order_override():
    config = RunConfig(
        case={SystemId.PERLICK_II: CaseOverride(force_second_order=True)}
    )
    ctx = case_context(SystemId.PERLICK_II, config)
    chain = transform_chain(SystemId.PERLICK_II, "second_order")

    params, _, force = chain_inputs(ctx, chain)

    assert force
    assert params == ctx.params


def test_linear_residual(perlick_i_context):
    result = linear_residual_metric(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value <= 1e-6


def test_nothing_conditional_nor_closed(perlick_i_context):
    assert negative_control(perlick_i_context).verdict == Verdict.NOT_APPLICABLE
    assert closed_form_metric(perlick_i_context).verdict == Verdict.NOT_APPLICABLE


def test_negative_control_skipped_on_the_preset():
    config = RunConfig(case={SystemId.PERLICK_II: CaseOverride(preset="linearizable")})

    result = negative_control(case_context(SystemId.PERLICK_II, config))

    assert result.verdict == Verdict.NOT_APPLICABLE
    assert "second_order skipped" in result.diagnostics[0]


def test_structure_fit(perlick_i_context):
    result = structure_fit(perlick_i_context)

    assert result.verdict == Verdict.PASS
    assert result.value <= 1e-6
