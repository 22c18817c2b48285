"""Mutually unbiased bases for qutrits and qubits.

A qutrit admits four bases that are pairwise unbiased (every cross
overlap has squared magnitude 1/3); a qubit admits three.  The vectors
here are stored exactly in their conventional printed form, without
re-phasing, because downstream fidelity bookkeeping identifies each
basis by the error operators that permute it.

Bases 2-4 of the qutrit all live on the "generalized equator": states
(|0> + e^{i a}|1> + e^{i b}|2>)/sqrt(3) and their two twisted branches.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import StateVector

# Primitive cube root of unity.
GAMMA = np.exp(2j * np.pi / 3)

_UNBIASED_ATOL = 1e-10


@dataclass(frozen=True)
class EquatorParams:
    """Phase angles (alpha, beta) picking a point on the equator."""

    alpha: float
    beta: float


class Basis:
    """An orthonormal basis of C^dim with a 1-based integer label."""

    __slots__ = ("_label", "_vectors")

    def __init__(self, label: int, vectors) -> None:
        vectors = tuple(vectors)
        if not vectors:
            raise ValueError("basis needs at least one vector")
        dim = vectors[0].dim
        if len(vectors) != dim or any(v.dim != dim for v in vectors):
            raise ValueError(f"need exactly {dim} vectors of dim {dim}")
        gram = np.array([[u.inner(v) for v in vectors] for u in vectors])
        if not np.allclose(gram, np.eye(dim), atol=_UNBIASED_ATOL, rtol=0.0):
            raise ValueError(f"basis {label} is not orthonormal")
        self._label = int(label)
        self._vectors = vectors

    @property
    def label(self) -> int:
        return self._label

    @property
    def dim(self) -> int:
        return self._vectors[0].dim

    @property
    def vectors(self) -> tuple[StateVector, ...]:
        return self._vectors

    def __iter__(self):
        return iter(self._vectors)

    def __repr__(self) -> str:
        return f"Basis(label={self._label}, dim={self.dim})"


class MubSet:
    """An ordered collection of pairwise mutually unbiased bases."""

    __slots__ = ("_bases",)

    def __init__(self, bases) -> None:
        bases = tuple(bases)
        if not bases:
            raise ValueError("need at least one basis")
        dim = bases[0].dim
        if any(b.dim != dim for b in bases):
            raise ValueError("all bases must share one dimension")
        for i, bi in enumerate(bases):
            for bj in bases[i + 1 :]:
                for u in bi:
                    for v in bj:
                        if abs(abs(u.inner(v)) ** 2 - 1.0 / dim) > _UNBIASED_ATOL:
                            raise ValueError(f"bases {bi.label} and {bj.label} are not mutually unbiased")
        self._bases = bases

    @property
    def dim(self) -> int:
        return self._bases[0].dim

    @property
    def bases(self) -> tuple[Basis, ...]:
        return self._bases

    def basis(self, label: int) -> Basis:
        for b in self._bases:
            if b.label == label:
                return b
        raise KeyError(f"no basis labeled {label}")

    def __iter__(self):
        return iter(self._bases)

    def __len__(self) -> int:
        return len(self._bases)


def qutrit_mubs() -> MubSet:
    """The four mutually unbiased qutrit bases.

    Basis 1 is computational.  Basis 2 is the Fourier basis; bases 3
    and 4 twist one amplitude by gamma and gamma^2 respectively.
    """
    g = GAMMA
    s = 1.0 / np.sqrt(3.0)
    rows = {
        2: [(1, 1, 1), (1, g, g**2), (1, g**2, g)],
        3: [(1, 1, g), (1, g, 1), (g, 1, 1)],
        4: [(1, 1, g**2), (1, g**2, 1), (g**2, 1, 1)],
    }
    bases = [Basis(1, [StateVector.basis_state(3, k) for k in range(3)])]
    for label in (2, 3, 4):
        bases.append(Basis(label, [StateVector(s * np.asarray(r, dtype=complex)) for r in rows[label]]))
    return MubSet(bases)


def qubit_mubs() -> MubSet:
    """The three mutually unbiased qubit bases, ordered z, x, y."""
    s = 1.0 / np.sqrt(2.0)
    rows = {
        2: [(1, 1), (1, -1)],
        3: [(1, 1j), (1j, 1)],
    }
    bases = [Basis(1, [StateVector.basis_state(2, k) for k in range(2)])]
    for label in (2, 3):
        bases.append(Basis(label, [StateVector(s * np.asarray(r, dtype=complex)) for r in rows[label]]))
    return MubSet(bases)


def equator_state(params: EquatorParams, branch: int = 0) -> StateVector:
    """A qutrit equator state.

    Branch b twists the phases by gamma^b and gamma^{2b}:
    (|0> + gamma^b e^{i alpha}|1> + gamma^{2b} e^{i beta}|2>)/sqrt(3).
    """
    if branch not in (0, 1, 2):
        raise ValueError(f"branch must be 0, 1 or 2, got {branch}")
    amps = np.array(
        [
            1.0,
            GAMMA**branch * np.exp(1j * params.alpha),
            GAMMA ** (2 * branch) * np.exp(1j * params.beta),
        ],
        dtype=complex,
    ) / np.sqrt(3.0)
    return StateVector(amps)
