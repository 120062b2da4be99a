"""Dimensional context: angle grids, deformation parameter, index mapping."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

ROTOR = "rotor"
OSCILLATOR = "oscillator"
KINDS = (ROTOR, OSCILLATOR)


@dataclass(frozen=True)
class FinitePhaseSpace:
    """A finite state space together with its uniform angle grid.

    kind
        ``"rotor"``: quantum numbers m = -l..l, dimension 2l+1.
        ``"oscillator"``: quantum numbers n = 0..s, dimension s+1.
    l_or_s
        l for the rotor, s (the truncation order) for the oscillator.
    theta0
        Reference angle; the grid is theta_n = theta0 + 2*pi*n/dim.
    """

    kind: str
    l_or_s: int
    theta0: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if not isinstance(self.l_or_s, (int, np.integer)) or isinstance(self.l_or_s, bool):
            raise ValueError(f"order must be an integer, got {self.l_or_s!r}")
        if self.l_or_s < 0:
            raise ValueError(f"order must be >= 0, got {self.l_or_s}")

    @property
    def dim(self) -> int:
        return 2 * self.l_or_s + 1 if self.kind == ROTOR else self.l_or_s + 1

    @property
    def q(self) -> complex:
        """Deformation parameter exp(-2*pi*i/dim); a primitive dim-th root of unity."""
        if self.dim == 1:
            return 1 + 0j  # exp(-2*pi*i) exactly; cmath would leave a 1-ulp imaginary part
        return cmath.exp(-2j * math.pi / self.dim)

    @property
    def quantum_numbers(self) -> np.ndarray:
        if self.kind == ROTOR:
            return np.arange(-self.l_or_s, self.l_or_s + 1)
        return np.arange(0, self.l_or_s + 1)

    @property
    def thetas(self) -> np.ndarray:
        """All grid angles; lie in [theta0, theta0 + 2*pi)."""
        return self.theta0 + (2.0 * np.pi * np.arange(self.dim)) / self.dim

    def theta(self, n: int) -> float:
        if not 0 <= n < self.dim:
            raise ValueError(f"grid index {n} outside [0, {self.dim})")
        return self.theta0 + (2.0 * math.pi * n) / self.dim

    def index_of(self, qn: int) -> int:
        """Row/column index of a quantum number (rotor: m -> m + l)."""
        lo = -self.l_or_s if self.kind == ROTOR else 0
        hi = self.l_or_s
        if not lo <= qn <= hi:
            raise ValueError(f"quantum number {qn} outside {lo}..{hi}")
        return int(qn - lo)

    def quantum_number_of(self, index: int) -> int:
        if not 0 <= index < self.dim:
            raise ValueError(f"index {index} outside [0, {self.dim})")
        return index - self.l_or_s if self.kind == ROTOR else index


def make_space(kind: str, l_or_s: int, theta0: float = 0.0) -> FinitePhaseSpace:
    """Build a validated space; rejects unknown kinds and negative order."""
    return FinitePhaseSpace(kind, l_or_s, theta0)
