"""Shift-and-phase error operators and the generalized Bell basis.

The N^2 unitaries U_{m,n} shift the computational basis by m and twist
it by n phase steps.  They label both the error channels a cloner can
inflict and the maximally entangled basis of two N-level systems, so a
cloner is characterized entirely by an amplitude it assigns to each
(m, n) pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import Operator, StateVector


@dataclass(frozen=True)
class WeylIndex:
    """An error-operator label (m, n), reduced modulo dim.

    Negative inputs are wrapped, so e.g. n = -1 becomes dim - 1.
    """

    m: int
    n: int
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"dim must be at least 2, got {self.dim}")
        object.__setattr__(self, "m", self.m % self.dim)
        object.__setattr__(self, "n", self.n % self.dim)


def weyl_operator(idx: WeylIndex) -> Operator:
    """The unitary U_{m,n} = sum_k exp(2 pi i k n / N) |k+m mod N><k|."""
    big_n = idx.dim
    mat = np.zeros((big_n, big_n), dtype=complex)
    ks = np.arange(big_n)
    mat[(ks + idx.m) % big_n, ks] = np.exp(2j * np.pi * ks * idx.n / big_n)
    return Operator(mat)


def bell_state(idx: WeylIndex) -> StateVector:
    """The maximally entangled state with error label (m, n).

    |B_{m,n}> = N^{-1/2} sum_k exp(2 pi i k n / N) |k>|k+m mod N>,
    equal to (I x U_{m,n}) applied to the m = n = 0 state.  Lives on
    C^(N^2) with the left factor as the slow index.
    """
    big_n = idx.dim
    amps = np.zeros(big_n * big_n, dtype=complex)
    ks = np.arange(big_n)
    amps[ks * big_n + (ks + idx.m) % big_n] = np.exp(2j * np.pi * ks * idx.n / big_n) / np.sqrt(big_n)
    return StateVector(amps)
