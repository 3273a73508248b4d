"""Value types shared by the Hamiltonian systems"""

from collections.abc import Mapping, Sequence

import numpy as np

from app.jets.jet import Num

# Named real parameters of a family (k, A, lam, delta, b1, ...)
type Params = Mapping[str, float]

# Phase space point (q1, q2, p1, p2), floats or jets
type StateLike = Sequence[Num]

# Concrete phase space point
type State = np.ndarray
