"""Catalog of the linearizing chains. Reduced forms that are linear as they
stand get an identity chain evaluated on the Hamiltonian flow, the other
chains come from the family modules.
"""

from collections.abc import Mapping, Sequence
from functools import cache

from app.enums import ChainSource
from app.exceptions import UnknownCaseError
from app.reduce.catalog import get_case
from app.reduce.presets import check_preset
from app.systems.catalog import parse_system_id
from app.systems.enums import SystemId

from . import darboux_i, darboux_ii, darboux_iii, darboux_iv, perlick
from .models import LinearizationChain
from .transforms import identity

_FAMILY_CHAINS: dict[SystemId, tuple[LinearizationChain, ...]] = {
    **perlick.CHAINS,
    **darboux_i.CHAINS,
    **darboux_ii.CHAINS,
    **darboux_iii.CHAINS,
    **darboux_iv.CHAINS,
}


def identity_chains(system_id: str | SystemId) -> tuple[LinearizationChain, ...]:
    return tuple(
        LinearizationChain(
            form.name,
            form.name,
            (identity(),),
            form.ode,
            source=ChainSource.FLOW,
            variant=form.variant,
            fallback=form.fallback,
        )
        for form in get_case(system_id).forms()
        if form.ode.linear
    )


@cache
def list_chains(system_id: str | SystemId) -> tuple[LinearizationChain, ...]:
    system_id = parse_system_id(system_id)
    return identity_chains(system_id) + _FAMILY_CHAINS.get(system_id, ())


def transform_chain(
    system_id: str | SystemId, name: str | None = None
) -> LinearizationChain:
    """Chain of the given name, the first one of the case by default"""
    chains = list_chains(system_id)
    if name is None:
        return chains[0]
    for chain in chains:
        if chain.name == name:
            return chain
    msg = (
        f"No linearizing chain {name!r} for {system_id}, "
        f"expected one of {[c.name for c in chains]}"
    )
    raise UnknownCaseError(msg)


def chain_params(
    system_id: str | SystemId,
    chain: LinearizationChain,
    params: Mapping[str, float],
    state: Sequence[float],
    force: bool = False,
) -> dict[str, float]:
    """Parameters and reduction constants the chain is evaluated with.
    Conditional chains require their preset to hold unless forced.
    """
    case = get_case(system_id)
    if chain.conditional and not force:
        check_preset(case, case.preset(chain.preset), params, state)
    return case.bound_constants(params, state)
