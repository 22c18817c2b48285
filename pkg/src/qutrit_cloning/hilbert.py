"""Finite-dimensional Hilbert space primitives.

State vectors, density matrices, and operators over C^N, plus the
bookkeeping needed for multi-party systems: tensor products, partial
traces, pure-state fidelity, and Shannon entropy of measurement
statistics.  Validation happens at construction so downstream code can
assume normalized states and well-formed density matrices.

Index convention: in any tensor product the leftmost factor is the
slowest (most significant) index, matching ``np.kron``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

# Default absolute tolerance for normalization / hermiticity checks.
ATOL = 1e-10

# Eigenvalues of a density matrix may dip slightly negative from float
# round-off; anything above this floor counts as positive semidefinite.
PSD_FLOOR = -1e-9


def _as_matrix(entries, name: str) -> np.ndarray:
    arr = np.asarray(entries, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"{name} must be a nonempty square matrix, got shape {arr.shape}")
    return arr


class StateVector:
    """A normalized pure state on C^dim."""

    __slots__ = ("_amps",)

    def __init__(self, amplitudes) -> None:
        arr = np.asarray(amplitudes, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError(f"amplitudes must be a nonempty 1-D array, got shape {arr.shape}")
        norm = np.linalg.norm(arr)
        if abs(norm - 1.0) > ATOL:
            raise ValueError(f"state vector is not normalized: |psi| = {norm!r}")
        arr = arr.copy()
        arr.setflags(write=False)
        self._amps = arr

    @classmethod
    def renormalized(cls, amplitudes) -> "StateVector":
        """Escape hatch: scale an unnormalized vector to unit norm."""
        arr = np.asarray(amplitudes, dtype=complex)
        norm = np.linalg.norm(arr)
        if norm == 0.0:
            raise ValueError("cannot renormalize the zero vector")
        return cls(arr / norm)

    @classmethod
    def basis_state(cls, dim: int, k: int) -> "StateVector":
        """The k-th computational basis state of C^dim."""
        if not 0 <= k < dim:
            raise ValueError(f"basis index {k} out of range for dim {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[k] = 1.0
        return cls(amps)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def dim(self) -> int:
        return self._amps.size

    def inner(self, other: "StateVector") -> complex:
        """Inner product <self|other>."""
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return complex(np.vdot(self._amps, other._amps))

    def density(self) -> "DensityMatrix":
        """The rank-one projector |psi><psi|."""
        return DensityMatrix(np.outer(self._amps, self._amps.conj()))

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim})"


class DensityMatrix:
    """A density matrix: hermitian, unit trace, positive semidefinite."""

    __slots__ = ("_entries",)

    def __init__(self, entries) -> None:
        arr = _as_matrix(entries, "density matrix")
        if not np.allclose(arr, arr.conj().T, atol=ATOL, rtol=0.0):
            raise ValueError("density matrix is not hermitian")
        tr = np.trace(arr)
        if abs(tr - 1.0) > ATOL:
            raise ValueError(f"density matrix trace is {tr!r}, expected 1")
        if np.linalg.eigvalsh(arr).min() < PSD_FLOOR:
            raise ValueError("density matrix has a negative eigenvalue")
        arr = arr.copy()
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def raw(cls, entries) -> "DensityMatrix":
        """Skip validation; for intermediate arithmetic only."""
        obj = cls.__new__(cls)
        arr = _as_matrix(entries, "density matrix").copy()
        arr.setflags(write=False)
        obj._entries = arr
        return obj

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


class Operator:
    """A linear operator on C^dim (not required to be unitary)."""

    __slots__ = ("_entries",)

    def __init__(self, entries) -> None:
        arr = _as_matrix(entries, "operator").copy()
        arr.setflags(write=False)
        self._entries = arr

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def is_unitary(self, atol: float = ATOL) -> bool:
        eye = np.eye(self.dim)
        return np.allclose(self._entries @ self._entries.conj().T, eye, atol=atol, rtol=0.0)

    def dagger(self) -> "Operator":
        return Operator(self._entries.conj().T)

    def apply(self, state: StateVector) -> StateVector:
        """Apply to a state; the result must still be normalized."""
        if state.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {state.dim}")
        return StateVector(self._entries @ state.amplitudes)

    def __matmul__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return Operator(self._entries @ other._entries)

    def __repr__(self) -> str:
        return f"Operator(dim={self.dim})"


def tensor(a, b):
    """Tensor product of two states or two operators (left factor slow)."""
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        return StateVector(np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, Operator) and isinstance(b, Operator):
        return Operator(np.kron(a.entries, b.entries))
    raise TypeError(f"tensor expects two states or two operators, got {type(a).__name__} and {type(b).__name__}")


def partial_trace(rho: DensityMatrix, dims: Sequence[int], keep) -> DensityMatrix:
    """Trace out all subsystems not in `keep`.

    Parameters
    ----------
    rho : DensityMatrix
        State on the full tensor product space.
    dims : sequence of int
        Subsystem dimensions, leftmost factor first.
    keep : int or sequence of int
        Indices of the subsystems to keep; their original relative
        order is preserved in the output.
    """
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    if math.prod(dims) != rho.dim:
        raise ValueError(f"dims {dims} do not factor a {rho.dim}-dimensional state")
    if isinstance(keep, (int, np.integer)):
        keep_set = {int(keep)}
    else:
        keep_set = {int(k) for k in keep}
    if not keep_set:
        raise ValueError("keep set must not be empty")
    if not keep_set <= set(range(len(dims))):
        raise ValueError(f"keep set {sorted(keep_set)} out of range for {len(dims)} subsystems")

    arr = rho.entries.reshape(*dims, *dims)
    count = len(dims)
    # Trace the dropped subsystems highest-index first so the axis
    # numbers of the remaining ones stay valid.
    for i in sorted(set(range(count)) - keep_set, reverse=True):
        arr = np.trace(arr, axis1=i, axis2=i + count)
        count -= 1
    d_out = math.prod(dims[i] for i in sorted(keep_set))
    return DensityMatrix(arr.reshape(d_out, d_out))


def fidelity(psi: StateVector, rho: DensityMatrix) -> float:
    """Pure-state fidelity <psi|rho|psi> as a real number in [0, 1]."""
    if psi.dim != rho.dim:
        raise ValueError(f"dimension mismatch: {psi.dim} vs {rho.dim}")
    val = np.vdot(psi.amplitudes, rho.entries @ psi.amplitudes)
    if abs(val.imag) > ATOL:
        raise ValueError(f"fidelity has a nonreal value {val!r}")
    f = float(val.real)
    # Clip float overshoot just past the ends of [0, 1].
    if -ATOL < f < 0.0:
        f = 0.0
    elif 1.0 < f < 1.0 + ATOL:
        f = 1.0
    return f


def shannon_entropy(probabilities) -> float:
    """Shannon entropy in bits of a probability array (any shape)."""
    p = np.asarray(probabilities, dtype=float).ravel()
    if p.size == 0:
        raise ValueError("probability array is empty")
    if p.min() < -1e-12:
        raise ValueError(f"negative probability {p.min()!r}")
    total = p.sum()
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"probabilities sum to {total!r}, expected 1")
    p = p[p > 0.0]
    return float(-(p * np.log2(p)).sum())
