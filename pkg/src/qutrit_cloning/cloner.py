"""The cloning engine: amplitude matrices, duality, and clone outputs.

A cloner for N-level systems is specified by an N x N complex amplitude
matrix a.  Clone A receives the input state degraded by error operator
U_{m,n} with probability |a_{m,n}|^2; clone B is degraded according to
the two-dimensional Fourier transform b of a.  Both clones can be
produced either directly from that mixture description or by building
the four-party entangled state on reference/clone-A/clone-B/ancilla and
projecting the reference, which is how the machine acts physically.
The two routes agree to float precision and the tests hold them to it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import ATOL, DensityMatrix, StateVector, partial_trace, shannon_entropy
from .mub import EquatorParams
from .weyl import WeylIndex, bell_state, weyl_operator

# |a|^2 entries below this are treated as exact zeros (0 log 0 guard).
PROBABILITY_DUST = 1e-14


def _phase_table(dim: int) -> np.ndarray:
    """ph[i, j] = exp(2 pi i * i j / dim)."""
    ks = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(ks, ks) / dim)


class AmplitudeMatrix:
    """Cloner amplitudes a_{m,n}, row = shift index m, unit 2-norm."""

    __slots__ = ("_a",)

    def __init__(self, a) -> None:
        arr = np.asarray(a, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 2:
            raise ValueError(f"amplitude matrix must be square with dim >= 2, got shape {arr.shape}")
        total = float(np.sum(np.abs(arr) ** 2))
        if abs(total - 1.0) > ATOL:
            raise ValueError(f"amplitude matrix has squared norm {total!r}, expected 1")
        arr = arr.copy()
        arr.setflags(write=False)
        self._a = arr

    @classmethod
    def identity(cls, dim: int) -> "AmplitudeMatrix":
        """The perfect-first-clone machine: all weight on (m, n) = (0, 0)."""
        arr = np.zeros((dim, dim), dtype=complex)
        arr[0, 0] = 1.0
        return cls(arr)

    @property
    def a(self) -> np.ndarray:
        return self._a

    @property
    def dim(self) -> int:
        return self._a.shape[0]

    def probabilities(self) -> "ProbabilityMatrix":
        """|a|^2 with sub-dust entries clamped to exact zero."""
        p = np.abs(self._a) ** 2
        p[p < PROBABILITY_DUST] = 0.0
        return ProbabilityMatrix(p)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "a": [[[float(z.real), float(z.imag)] for z in row] for row in self._a],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AmplitudeMatrix":
        dim = int(obj["dim"])
        rows = obj["a"]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"amplitude matrix JSON does not describe a {dim} x {dim} matrix")
        arr = np.array([[complex(re, im) for re, im in row] for row in rows])
        return cls(arr)

    def __repr__(self) -> str:
        return f"AmplitudeMatrix(dim={self.dim})"


class ProbabilityMatrix:
    """Error-channel probabilities p_{m,n} >= 0 summing to 1."""

    __slots__ = ("_p",)

    def __init__(self, p) -> None:
        arr = np.asarray(p, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 2:
            raise ValueError(f"probability matrix must be square with dim >= 2, got shape {arr.shape}")
        if arr.min() < 0.0:
            raise ValueError(f"negative probability {arr.min()!r}")
        total = float(arr.sum())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        arr = arr.copy()
        arr.setflags(write=False)
        self._p = arr

    @property
    def p(self) -> np.ndarray:
        return self._p

    @property
    def dim(self) -> int:
        return self._p.shape[0]

    def __repr__(self) -> str:
        return f"ProbabilityMatrix(dim={self.dim})"


@dataclass(frozen=True)
class CloneOutputs:
    """Both clones of one input state plus their error-channel weights."""

    rho_a: DensityMatrix
    rho_b: DensityMatrix
    p: ProbabilityMatrix
    q: ProbabilityMatrix


@dataclass(frozen=True)
class JointState:
    """The four-party machine state on reference, A, B, ancilla."""

    psi: StateVector
    dim: int  # single-subsystem dimension N; psi lives on C^(N^4)


@dataclass(frozen=True)
class EntropicCheck:
    """The no-cloning entropy budget H[p] + H[q] >= log2(N^2)."""

    h_p: float
    h_q: float
    entropy_sum: float
    bound: float
    satisfied: bool


def fourier_dual(a: AmplitudeMatrix) -> AmplitudeMatrix:
    """Clone B's amplitudes: b_{m,n} = (1/N) sum_{x,y} e^{2 pi i (n x - m y)/N} a_{x,y}.

    Applying it twice returns to a (up to the parity flip built into the
    double transform), and it preserves the unit norm, so the output is
    again a valid amplitude matrix.
    """
    dim = a.dim
    ph = _phase_table(dim)
    b = np.einsum("nx,my,xy->mn", ph, ph.conj(), a.a) / dim
    return AmplitudeMatrix(b)


def row_fourier(a: AmplitudeMatrix, inverse: bool = False) -> AmplitudeMatrix:
    """Fourier transform each row over the phase index n.

    Forward: a^F_{m,n} = N^{-1/2} sum_{n'} e^{-2 pi i n n'/N} a_{m,n'};
    the inverse uses the conjugate phase.  Row-wise unitary, so norms
    survive.  The dual matrix satisfies b^F = (a^F)^T.
    """
    ph = _phase_table(a.dim)
    kernel = ph if inverse else ph.conj()
    return AmplitudeMatrix(a.a @ kernel / np.sqrt(a.dim))


def clone_outputs_mixture(a: AmplitudeMatrix, psi: StateVector) -> CloneOutputs:
    """Clone psi via the error-mixture description of both clones."""
    if psi.dim != a.dim:
        raise ValueError(f"state dim {psi.dim} does not match cloner dim {a.dim}")
    p = a.probabilities()
    q = fourier_dual(a).probabilities()
    outs = []
    for probs in (p, q):
        rho = np.zeros((a.dim, a.dim), dtype=complex)
        for m in range(a.dim):
            for n in range(a.dim):
                if probs.p[m, n] == 0.0:
                    continue
                u = weyl_operator(WeylIndex(m, n, a.dim)).entries
                v = u @ psi.amplitudes
                rho += probs.p[m, n] * np.outer(v, v.conj())
        outs.append(DensityMatrix(rho))
    return CloneOutputs(rho_a=outs[0], rho_b=outs[1], p=p, q=q)


def joint_state(a: AmplitudeMatrix) -> JointState:
    """Assemble the four-party machine state from clone A's expansion.

    |Psi> = sum_{m,n} a_{m,n} |B_{m,n}>_{R,A} |B_{m,-n}>_{B,C} with
    subsystem order R, A, B, C and the left factor as the slow index.
    """
    dim = a.dim
    psi = np.zeros(dim**4, dtype=complex)
    for m in range(dim):
        for n in range(dim):
            if a.a[m, n] == 0.0:
                continue
            u = bell_state(WeylIndex(m, n, dim)).amplitudes
            w = bell_state(WeylIndex(m, -n, dim)).amplitudes
            psi += a.a[m, n] * np.kron(u, w)
    return JointState(psi=StateVector(psi), dim=dim)


def joint_state_dual(a: AmplitudeMatrix) -> JointState:
    """Assemble the same four-party state from clone B's expansion.

    Uses sum_{m,n} b_{m,n} |B_{m,n}>_{R,B} |B_{m,-n}>_{A,C}; equals
    joint_state(a) entrywise, which the tests assert.
    """
    dim = a.dim
    b = fourier_dual(a)
    psi = np.zeros((dim, dim, dim, dim), dtype=complex)
    for m in range(dim):
        for n in range(dim):
            if b.a[m, n] == 0.0:
                continue
            u = bell_state(WeylIndex(m, n, dim)).amplitudes.reshape(dim, dim)
            w = bell_state(WeylIndex(m, -n, dim)).amplitudes.reshape(dim, dim)
            psi += b.a[m, n] * np.einsum("rb,ac->rabc", u, w)
    return JointState(psi=StateVector(psi.reshape(dim**4)), dim=dim)


def clone_by_projection(a: AmplitudeMatrix, psi: StateVector) -> CloneOutputs:
    """Clone psi by projecting the reference onto its conjugate.

    Projecting R of the four-party state onto |psi*> and rescaling by
    sqrt(N) leaves a normalized three-party state on A, B, C; the
    clones are its partial traces.
    """
    if psi.dim != a.dim:
        raise ValueError(f"state dim {psi.dim} does not match cloner dim {a.dim}")
    dim = a.dim
    full = joint_state(a).psi.amplitudes.reshape(dim, dim**3)
    # <psi*|_R has components conj(psi*) = psi.
    chi = np.sqrt(dim) * (psi.amplitudes @ full)
    norm = float(np.linalg.norm(chi))
    if abs(norm - 1.0) > 1e-8:
        raise ValueError(f"post-projection norm {norm!r}; amplitude matrix is inconsistent")
    rho_abc = StateVector(chi).density()
    rho_a = partial_trace(rho_abc, [dim, dim, dim], keep=0)
    rho_b = partial_trace(rho_abc, [dim, dim, dim], keep=1)
    return CloneOutputs(
        rho_a=rho_a,
        rho_b=rho_b,
        p=a.probabilities(),
        q=fourier_dual(a).probabilities(),
    )


# Which error class (m, n) falls in for each basis label: the fidelity
# of a basis is the total probability of the errors that permute it
# into itself.  Class functionals: m, n, n - m, n + m (mod N).
_CLASS_FUNCTIONALS = {
    1: lambda m, n, dim: m % dim,
    2: lambda m, n, dim: n % dim,
    3: lambda m, n, dim: (n - m) % dim,
    4: lambda m, n, dim: (n + m) % dim,
}


def fidelity_in_basis(p: ProbabilityMatrix, basis_label: int) -> tuple[float, float, float]:
    """(F, D1, D2) for one clone measured in one unbiased basis.

    Supports qutrits (labels 1-4) and qubits (labels 1-3, with D2
    fixed at 0 since a qubit has a single disturbance class).
    """
    dim = p.dim
    if dim == 3:
        valid = (1, 2, 3, 4)
    elif dim == 2:
        # For qubits the n + m and n - m classes coincide.
        valid = (1, 2, 3)
    else:
        raise ValueError(f"basis bookkeeping covers dim 2 and 3 only, got {dim}")
    if basis_label not in valid:
        raise ValueError(f"basis label must be one of {valid} for dim {dim}, got {basis_label}")
    functional = _CLASS_FUNCTIONALS[basis_label]
    sums = np.zeros(dim)
    for m in range(dim):
        for n in range(dim):
            sums[functional(m, n, dim)] += p.p[m, n]
    d2 = float(sums[2]) if dim == 3 else 0.0
    return float(sums[0]), float(sums[1]), d2


def _phase_sum(alpha: float, beta: float, shift: float) -> float:
    return float(
        np.cos(alpha + beta + shift) + np.cos(alpha - 2.0 * beta + shift) + np.cos(beta - 2.0 * alpha + shift)
    )


def fidelity_equator(p: ProbabilityMatrix, params: EquatorParams) -> tuple[float, float, float]:
    """(F, D1, D2) for a clone measured against an equator state.

    Closed form in (alpha, beta); at the four special angle choices it
    reduces to the per-basis sums of fidelity_in_basis.  F here follows
    the branch-0 state; D1 and D2 follow branches 1 and 2.
    """
    if p.dim != 3:
        raise ValueError(f"equator fidelities are defined for qutrits, got dim {p.dim}")
    alpha, beta = params.alpha, params.beta
    third = 2.0 * np.pi / 3.0
    off = float(p.p[1, :].sum() + p.p[2, :].sum())
    out = []
    for j in range(3):
        c_zero = p.p[1, j] + p.p[2, j]
        c_plus = p.p[1, (j + 2) % 3] + p.p[2, (j + 1) % 3]
        c_minus = p.p[1, (j + 1) % 3] + p.p[2, (j + 2) % 3]
        val = (
            p.p[0, j]
            + off / 3.0
            + (2.0 / 9.0)
            * (
                c_zero * _phase_sum(alpha, beta, 0.0)
                + c_plus * _phase_sum(alpha, beta, third)
                + c_minus * _phase_sum(alpha, beta, -third)
            )
        )
        out.append(float(val))
    return out[0], out[1], out[2]


def entropic_check(p: ProbabilityMatrix, q: ProbabilityMatrix, slack: float = 1e-9) -> EntropicCheck:
    """No-cloning entropy budget: H[p] + H[q] >= log2(N^2) within slack."""
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    h_p = shannon_entropy(p.p)
    h_q = shannon_entropy(q.p)
    bound = float(np.log2(p.dim**2))
    total = h_p + h_q
    return EntropicCheck(
        h_p=h_p,
        h_q=h_q,
        entropy_sum=total,
        bound=bound,
        satisfied=bool(total >= bound - slack),
    )
