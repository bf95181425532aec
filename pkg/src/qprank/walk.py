"""Coherent two-register walk driven by a column-stochastic matrix.

The walker lives on ordered node pairs |j>_1 |k>_2. Writing R for the
entrywise square root of the transition matrix G, each node j carries the
unit vector |psi_j> = sum_k R[k, j] |j>_1 |k>_2, and one step applies
U = S (2 P - 1), where P projects onto span{|psi_j>} and S swaps the two
registers. States reachable from the uniform superposition of the |psi_j>
stay inside span{|psi_j>} + S span{|psi_k>}, so the dynamics closes on 2n
real coefficients (a, b):

    U:  (a, b)  ->  (-b, a + 2 D b),      D[j, k] = R[k, j] * R[j, k]

with conserved norm  a.a + b.b + 2 a.(D b).  A second-register measurement
of the state gives the node distribution

    p_i = (G (a*a))_i + 2 b_i (D a)_i + b_i**2.

``SzegedyWalk`` is the production simulator built on that recursion;
``DenseWalk`` realizes the same dynamics literally on the n**2 amplitude
vector and serves as a cross-check for small n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .google import GoogleMatrix

DEFAULT_HORIZON = 1000
DENSE_NODE_LIMIT = 64


@dataclass
class WalkState:
    """Coefficients (a, b) of sum_j a_j |psi_j> + sum_k b_k S|psi_k>."""

    a: np.ndarray
    b: np.ndarray


class SzegedyWalk:
    """Reduced-subspace simulator: O(n) state, O(n**2) work per step."""

    def __init__(self, gm: GoogleMatrix):
        self.n = gm.n
        self.g = gm.entries
        r = np.sqrt(self.g)
        self.d = r * r.T

    def initial_state(self) -> WalkState:
        """Uniform superposition of the per-node vectors; unit norm by construction."""
        return WalkState(np.full(self.n, 1.0 / np.sqrt(self.n)), np.zeros(self.n))

    def step(self, state: WalkState) -> WalkState:
        """One application of the walk unitary: (a, b) -> (-b, a + 2 D b)."""
        return WalkState(-state.b, state.a + 2.0 * (self.d @ state.b))

    def measure(self, state: WalkState) -> np.ndarray:
        """Second-register outcome distribution of the current state.

        Rounding can push individual entries a few ulp below zero; those are
        clamped to 0 so downstream consumers see a valid distribution.
        """
        a, b = state.a, state.b
        p = self.g @ (a * a) + 2.0 * b * (self.d @ a) + b * b
        return np.maximum(p, 0.0)

    def norm_sq(self, state: WalkState) -> float:
        """Conserved squared norm a.a + b.b + 2 a.(D b)."""
        a, b = state.a, state.b
        return float(a @ a + b @ b + 2.0 * (a @ (self.d @ b)))

    def trajectory(self, horizon: int) -> np.ndarray:
        """Instantaneous node distributions; row t is the measurement after t
        double-steps of the unitary (row 0 is the initial state)."""
        if horizon < 1:
            raise ParameterError("horizon must be >= 1")
        out = np.empty((horizon, self.n))
        state = self.initial_state()
        out[0] = self.measure(state)
        for t in range(1, horizon):
            state = self.step(self.step(state))
            out[t] = self.measure(state)
        return out

    def average_with_convergence(self, horizon: int = DEFAULT_HORIZON) -> tuple[np.ndarray, float]:
        """Time-averaged node distribution over ``horizon`` double-steps.

        Also reports the sup-norm gap between the full average and the
        half-horizon average, a direct handle on how settled the Cesaro mean
        is (NaN when horizon == 1).
        """
        if horizon < 1:
            raise ParameterError("averaging horizon must be >= 1")
        state = self.initial_state()
        acc = self.measure(state)
        half = horizon // 2
        half_snapshot = acc.copy() if half == 1 else None
        for t in range(1, horizon):
            state = self.step(self.step(state))
            acc += self.measure(state)
            if t + 1 == half:
                half_snapshot = acc.copy()
        avg = acc / horizon
        if half_snapshot is None:
            return avg, float("nan")
        return avg, float(np.abs(avg - half_snapshot / half).max())

    def average(self, horizon: int = DEFAULT_HORIZON) -> np.ndarray:
        return self.average_with_convergence(horizon)[0]


def average_qpr(gm: GoogleMatrix, horizon: int = DEFAULT_HORIZON) -> np.ndarray:
    """Time-averaged walk distribution for a transition matrix; deterministic."""
    return SzegedyWalk(gm).average(horizon)


class DenseWalk:
    """Literal simulator on the full n**2 amplitude vector.

    Builds the projector, the register swap, and the one-step unitary as
    explicit dense matrices. Exponential in memory, hence the hard size
    guard; intended as an independent reference for ``SzegedyWalk``.
    """

    def __init__(self, gm: GoogleMatrix):
        if gm.n > DENSE_NODE_LIMIT:
            raise ParameterError(f"dense simulator limited to n <= {DENSE_NODE_LIMIT}")
        n = gm.n
        self.n = n
        r = np.sqrt(gm.entries)
        # Column j holds |psi_j>: amplitude R[k, j] at pair index j*n + k.
        cols = np.zeros((n * n, n))
        for j in range(n):
            cols[j * n : (j + 1) * n, j] = r[:, j]
        self.psi_columns = cols
        swap = np.zeros((n * n, n * n))
        for j in range(n):
            for k in range(n):
                swap[k * n + j, j * n + k] = 1.0
        self.swap = swap
        reflection = 2.0 * (cols @ cols.T) - np.eye(n * n)
        self.u = swap @ reflection

    def initial_state(self) -> np.ndarray:
        return self.psi_columns @ np.full(self.n, 1.0 / np.sqrt(self.n))

    def step(self, state: np.ndarray) -> np.ndarray:
        return self.u @ state

    def measure(self, state: np.ndarray) -> np.ndarray:
        """Distribution of the second register: sum the squared amplitudes of
        all pairs whose second index is i."""
        amp = state.reshape(self.n, self.n)
        return (amp * amp).sum(axis=0)
