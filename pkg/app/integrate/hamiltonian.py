"""Integration of the Hamilton equations of a catalog system"""

from collections.abc import Mapping, Sequence

from app.systems.catalog import get_system
from app.systems.enums import SystemId

from .solver import integrate
from .trajectory import Trajectory


def hamiltonian_trajectory(
    system_id: str | SystemId,
    params: Mapping[str, float] | None,
    state: Sequence[float],
    span: tuple[float, float],
    tol: float | None = None,
) -> Trajectory:
    """Trajectory of the symplectic gradient, stopped before the singular
    loci of the system.
    """
    system = get_system(system_id)
    bound = system.bind_params(params)
    initial = [float(v) for v in state]
    system.check_domain(bound, initial)
    return integrate(
        lambda t, y: system.symplectic_gradient(bound, y),
        initial,
        span,
        tol,
        guard=lambda t, y: system.guard_margin(bound, y),
        labels=system.state_labels,
    )
