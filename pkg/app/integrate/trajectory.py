"""Sampled solution of an ODE, with the dense output of the integrator"""

from dataclasses import dataclass, field, replace

import numpy as np

from app.enums import StopReason
from app.exceptions import OutOfSpanError


@dataclass(frozen=True)
class Trajectory:
    """Samples (times[i], states[i]) strictly monotone in the direction of
    integration. `dense` holds, for each step, the five coefficient vectors of
    the continuous extension. Reparametrized trajectories carry no dense output
    but keep the original times of their samples in `source`.
    """

    times: np.ndarray
    states: np.ndarray
    labels: tuple[str, ...]
    stop_reason: StopReason = StopReason.SPAN_END
    dense: np.ndarray | None = None
    source: np.ndarray | None = None
    steps: dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def direction(self) -> float:
        if len(self.times) < 2:
            return 1.0
        return float(np.sign(self.times[-1] - self.times[0]))

    @property
    def span(self) -> tuple[float, float]:
        return float(self.times[0]), float(self.times[-1])

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def truncated(self) -> bool:
        return self.stop_reason != StopReason.SPAN_END

    def column(self, label: str) -> np.ndarray:
        return self.states[:, self.labels.index(label)]

    def contains(self, t: float) -> bool:
        start, end = sorted(self.span)
        return start <= t <= end

    def evaluate(self, t: float) -> np.ndarray:
        """State at t by the continuous extension of the step containing t"""
        if self.dense is None:
            msg = "Trajectory carries no dense output"
            raise OutOfSpanError(msg)
        if not self.contains(t):
            msg = f"{t!r} outside of the integrated span {self.span}"
            raise OutOfSpanError(msg)
        if len(self.times) == 1:
            return self.states[0].copy()

        oriented = self.direction * self.times
        index = int(np.searchsorted(oriented, self.direction * t, side="right")) - 1
        index = min(max(index, 0), len(self.times) - 2)

        start, end = self.times[index], self.times[index + 1]
        theta = (t - start) / (end - start)
        theta1 = 1.0 - theta
        rc1, rc2, rc3, rc4, rc5 = self.dense[index]
        return rc1 + theta * (rc2 + theta1 * (rc3 + theta * (rc4 + theta1 * rc5)))

    def evaluate_many(self, times: np.ndarray) -> np.ndarray:
        return np.array([self.evaluate(float(t)) for t in times])

    def truncate(self, index: int, reason: StopReason) -> "Trajectory":
        """Keep the samples up to `index` included"""
        keep = slice(0, index + 1)
        return replace(
            self,
            times=self.times[keep],
            states=self.states[keep],
            stop_reason=reason,
            dense=None if self.dense is None else self.dense[:index],
            source=None if self.source is None else self.source[keep],
        )
