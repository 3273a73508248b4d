import numpy as np

from app.enums import Provenance, StopReason
from app.reduce.catalog import get_case
from app.systems.enums import SystemId
from app.verification.context import case_context
from app.verification.models import CaseOverride, RunConfig


def test_defaults_of_the_case(perlick_i_context):
    case = get_case(SystemId.PERLICK_I)

    assert perlick_i_context.params == case.system.bind_params()
    assert perlick_i_context.state == list(case.system.default_state)
    assert perlick_i_context.span == case.time_span
    assert perlick_i_context.seed == 42
    assert perlick_i_context.bound == {
        **perlick_i_context.params,
        **perlick_i_context.constants,
    }


def test_provenance_of_a_preset():
    config = RunConfig(
        seed=10, case={SystemId.PERLICK_II: CaseOverride(preset="linearizable")}
    )

    ctx = case_context(SystemId.PERLICK_II, config)

    assert ctx.seed == 11
    assert ctx.provenance["B"] == Provenance.PRESET
    assert ctx.provenance["lam"] == Provenance.CONFIG
    assert ctx.params["B"] != get_case(SystemId.PERLICK_II).system.bind_params()["B"]
    for name in ctx.constants:
        assert ctx.provenance[name] == Provenance.DERIVED


def test_window_override():
    config = RunConfig(case={SystemId.PERLICK_I: CaseOverride(window=(0.0, 0.2))})

    ctx = case_context(SystemId.PERLICK_I, config)

    assert ctx.span == (0.0, 0.2)
    assert ctx.flow.span[1] == 0.2
    assert ctx.stop_reasons == {"flow": StopReason.SPAN_END}


def test_streams_are_reproducible(perlick_i_context):
    again = case_context(SystemId.PERLICK_I, RunConfig())

    np.testing.assert_array_equal(
        perlick_i_context.rng(3).uniform(size=5), again.rng(3).uniform(size=5)
    )
    assert perlick_i_context.rng(3).uniform() != perlick_i_context.rng(4).uniform()
