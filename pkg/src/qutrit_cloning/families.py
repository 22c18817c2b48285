"""Parametric cloner families and their closed-form fidelities.

Each family is a low-dimensional slice through amplitude-matrix space
chosen so that a set of unbiased bases is cloned equally well:

* two_basis         clones qutrit bases 3 and 4 equally,
* three_basis_sym   clones qutrit bases 2, 3, 4 equally and treats both
                    clones symmetrically,
* three_basis_asym  clones qutrit bases 2, 3, 4 equally with a tunable
                    split between the clones,
* universal         clones every state of an N-level system equally,
* qubit_phase_cov   clones the two unbiased qubit bases x and z equally.

Parameters are real.  `build` turns params into an AmplitudeMatrix,
`dual_params` gives the same-family parameters seen by clone B, and
`family_fidelities` evaluates the closed forms that the simulation
tests are held against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cloner import AmplitudeMatrix, ProbabilityMatrix
from .mub import GAMMA

# Family normalizations hold to this tolerance at construction.
PARAM_ATOL = 1e-9


@dataclass(frozen=True)
class FamilyFidelities:
    """Closed-form figures for one family member.

    f / d: clone A's fidelity and per-class disturbance on the bases
    the family clones equally; f_tilde / d_tilde: same for clone B.
    """

    f: float
    d: float
    f_tilde: float
    d_tilde: float


@dataclass(frozen=True)
class TwoBasisParams:
    """Amplitudes (v, y, y / y, x, x / y, x, x); v^2 + 4x^2 + 4y^2 = 1."""

    v: float
    x: float
    y: float

    def __post_init__(self) -> None:
        _require_normalized(self.v**2 + 4.0 * self.x**2 + 4.0 * self.y**2, type(self).__name__)


@dataclass(frozen=True)
class ThreeBasisSymParams:
    """Self-dual three-basis cloner; 3x^2 + 6y^2 + 6z^2 = 1."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_normalized(
            3.0 * self.x**2 + 6.0 * self.y**2 + 6.0 * self.z**2, type(self).__name__
        )


@dataclass(frozen=True)
class ThreeBasisAsymParams:
    """Amplitudes (v, y, y / x, x, x / x, x, x); v^2 + 6x^2 + 2y^2 = 1."""

    v: float
    x: float
    y: float

    def __post_init__(self) -> None:
        _require_normalized(self.v**2 + 6.0 * self.x**2 + 2.0 * self.y**2, type(self).__name__)


@dataclass(frozen=True)
class UniversalParams:
    """State-independent cloner a = alpha delta + beta/N for dim N.

    Normalization alpha^2 + (2/N) alpha beta + beta^2 = 1.
    """

    alpha: float
    beta: float
    dim: int = 3

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"dim must be at least 2, got {self.dim}")
        _require_normalized(
            self.alpha**2 + (2.0 / self.dim) * self.alpha * self.beta + self.beta**2,
            type(self).__name__,
        )


@dataclass(frozen=True)
class QubitPhaseCovParams:
    """Qubit amplitudes (v, x / x, y); v^2 + 2x^2 + y^2 = 1."""

    v: float
    x: float
    y: float

    def __post_init__(self) -> None:
        _require_normalized(self.v**2 + 2.0 * self.x**2 + self.y**2, type(self).__name__)


FamilyParams = (
    TwoBasisParams | ThreeBasisSymParams | ThreeBasisAsymParams | UniversalParams | QubitPhaseCovParams
)

FAMILY_NAMES = {
    TwoBasisParams: "two_basis",
    ThreeBasisSymParams: "three_basis_sym",
    ThreeBasisAsymParams: "three_basis_asym",
    UniversalParams: "universal",
    QubitPhaseCovParams: "qubit_phase_cov",
}

_PARAMS_BY_NAME = {name: cls for cls, name in FAMILY_NAMES.items()}


def _require_normalized(total: float, name: str) -> None:
    if abs(total - 1.0) > PARAM_ATOL:
        raise ValueError(f"{name} normalization is {total!r}, expected 1")


def build(params: FamilyParams) -> AmplitudeMatrix:
    """The amplitude matrix of a family member."""
    if isinstance(params, TwoBasisParams):
        v, x, y = params.v, params.x, params.y
        return AmplitudeMatrix([[v, y, y], [y, x, x], [y, x, x]])
    if isinstance(params, ThreeBasisSymParams):
        x, y, z = params.x, params.y, params.z
        g = GAMMA
        row0 = [x + y + z, x + g * y + g**2 * z, x + g**2 * y + g * z]
        return AmplitudeMatrix([row0, [y, y, y], [z, z, z]])
    if isinstance(params, ThreeBasisAsymParams):
        v, x, y = params.v, params.x, params.y
        return AmplitudeMatrix([[v, y, y], [x, x, x], [x, x, x]])
    if isinstance(params, UniversalParams):
        arr = np.full((params.dim, params.dim), params.beta / params.dim, dtype=complex)
        arr[0, 0] += params.alpha
        return AmplitudeMatrix(arr)
    if isinstance(params, QubitPhaseCovParams):
        v, x, y = params.v, params.x, params.y
        return AmplitudeMatrix([[v, x], [x, y]])
    raise TypeError(f"unknown family params {type(params).__name__}")


def dual_params(params: FamilyParams) -> FamilyParams:
    """Parameters of the dual matrix seen by clone B.

    Each family is closed under the Fourier dual: the substitution
    below reproduces fourier_dual(build(params)) exactly, which the
    tests assert entrywise.
    """
    if isinstance(params, TwoBasisParams):
        v, x, y = params.v, params.x, params.y
        return TwoBasisParams(
            v=(v + 4.0 * x + 4.0 * y) / 3.0,
            x=(v + x - 2.0 * y) / 3.0,
            y=(v - 2.0 * x + y) / 3.0,
        )
    if isinstance(params, ThreeBasisSymParams):
        return params
    if isinstance(params, ThreeBasisAsymParams):
        v, x, y = params.v, params.x, params.y
        return ThreeBasisAsymParams(
            v=(v + 6.0 * x + 2.0 * y) / 3.0,
            x=(v - y) / 3.0,
            y=(v - 3.0 * x + 2.0 * y) / 3.0,
        )
    if isinstance(params, UniversalParams):
        return UniversalParams(alpha=params.beta, beta=params.alpha, dim=params.dim)
    if isinstance(params, QubitPhaseCovParams):
        v, x, y = params.v, params.x, params.y
        return QubitPhaseCovParams(
            v=(v + 2.0 * x + y) / 2.0,
            x=(v - y) / 2.0,
            y=(v - 2.0 * x + y) / 2.0,
        )
    raise TypeError(f"unknown family params {type(params).__name__}")


def family_fidelities(params: FamilyParams) -> FamilyFidelities:
    """Closed-form fidelities on the bases a family clones equally."""
    if isinstance(params, TwoBasisParams):
        v, x, y = params.v, params.x, params.y
        return FamilyFidelities(
            f=v**2 + 2.0 * x**2,
            d=x**2 + 2.0 * y**2,
            f_tilde=(v**2 + 6.0 * x**2 + 8.0 * y**2 + 4.0 * v * x + 8.0 * x * y) / 3.0,
            d_tilde=(v**2 + 3.0 * x**2 + 2.0 * y**2 - 2.0 * v * x - 4.0 * x * y) / 3.0,
        )
    if isinstance(params, ThreeBasisSymParams):
        x, y, z = params.x, params.y, params.z
        quad = x**2 + 2.0 * y**2 + 2.0 * z**2
        cross = x * y + y * z + x * z
        return FamilyFidelities(
            f=quad + 2.0 * cross,
            d=quad - cross,
            f_tilde=quad + 2.0 * cross,
            d_tilde=quad - cross,
        )
    if isinstance(params, ThreeBasisAsymParams):
        v, x, y = params.v, params.x, params.y
        return FamilyFidelities(
            f=v**2 + 2.0 * x**2,
            d=2.0 * x**2 + y**2,
            f_tilde=(v**2 + 12.0 * x**2 + 2.0 * y**2 + 4.0 * v * x + 8.0 * x * y) / 3.0,
            d_tilde=(v**2 + 3.0 * x**2 + 2.0 * y**2 - 2.0 * v * x - 4.0 * x * y) / 3.0,
        )
    if isinstance(params, UniversalParams):
        al, be, dim = params.alpha, params.beta, params.dim
        return FamilyFidelities(
            f=(al + be / dim) ** 2 + (dim - 1) * (be / dim) ** 2,
            d=be**2 / dim,
            f_tilde=(be + al / dim) ** 2 + (dim - 1) * (al / dim) ** 2,
            d_tilde=al**2 / dim,
        )
    if isinstance(params, QubitPhaseCovParams):
        v, x, y = params.v, params.x, params.y
        return FamilyFidelities(
            f=v**2 + x**2,
            d=x**2 + y**2,
            f_tilde=0.5 + v * x + x * y,
            d_tilde=0.5 - v * x - x * y,
        )
    raise TypeError(f"unknown family params {type(params).__name__}")


def _close(u: float, w: float, atol: float) -> bool:
    return abs(u - w) <= atol


def check_two_basis_constraints(p: ProbabilityMatrix, atol: float = 1e-10) -> bool:
    """True iff the error weights clone qutrit bases 3 and 4 equally."""
    if p.dim != 3:
        raise ValueError(f"two-basis constraints are defined for qutrits, got dim {p.dim}")
    m = p.p
    return (
        _close(m[1, 1] + m[2, 2], m[1, 2] + m[2, 1], atol)
        and _close(m[1, 2] + m[2, 0], m[1, 0] + m[2, 2], atol)
        and _close(m[1, 0] + m[2, 1], m[1, 1] + m[2, 0], atol)
    )


def check_three_basis_constraints(p: ProbabilityMatrix, atol: float = 1e-10) -> bool:
    """True iff the error weights clone qutrit bases 2, 3, 4 equally."""
    if p.dim != 3:
        raise ValueError(f"three-basis constraints are defined for qutrits, got dim {p.dim}")
    m = p.p
    col = [m[1, j] + m[2, j] for j in range(3)]
    return (
        _close(m[0, 1] + col[1], m[0, 2] + col[2], atol)
        and _close(m[1, 0] + m[2, 0], m[1, 1] + m[2, 2], atol)
        and _close(m[1, 0] + m[2, 0], m[1, 2] + m[2, 1], atol)
        and _close(m[1, 1] + m[2, 1], m[1, 2] + m[2, 0], atol)
        and _close(m[1, 1] + m[2, 1], m[1, 0] + m[2, 2], atol)
        and _close(m[1, 2] + m[2, 2], m[1, 0] + m[2, 1], atol)
        and _close(m[1, 2] + m[2, 2], m[1, 1] + m[2, 0], atol)
    )


def check_three_basis_canonical(p: ProbabilityMatrix, atol: float = 1e-10) -> bool:
    """Canonical three-basis shape: rows 1 and 2 constant, p01 = p02."""
    if p.dim != 3:
        raise ValueError(f"three-basis constraints are defined for qutrits, got dim {p.dim}")
    m = p.p
    return (
        _close(m[0, 1], m[0, 2], atol)
        and _close(m[1, 0], m[1, 1], atol)
        and _close(m[1, 0], m[1, 2], atol)
        and _close(m[2, 0], m[2, 1], atol)
        and _close(m[2, 0], m[2, 2], atol)
    )


def check_four_basis_constraints(p: ProbabilityMatrix, atol: float = 1e-10) -> bool:
    """True iff the error weights clone all four qutrit bases equally."""
    if not check_three_basis_constraints(p, atol):
        return False
    m = p.p
    return (
        _close(m[0, 1] + m[0, 2], m[1, 0] + m[2, 0], atol)
        and _close(m[1, 0] + m[1, 2], m[0, 1] + m[2, 1], atol)
        and _close(m[2, 0] + m[2, 1], m[0, 2] + m[1, 2], atol)
    )


def params_to_json(params: FamilyParams) -> dict:
    """Serialize family params as {"family": name, "params": {...}}."""
    name = FAMILY_NAMES.get(type(params))
    if name is None:
        raise TypeError(f"unknown family params {type(params).__name__}")
    fields = {k: (int(v) if isinstance(v, int) else float(v)) for k, v in vars(params).items()}
    return {"family": name, "params": fields}


def params_from_json(obj: dict) -> FamilyParams:
    """Inverse of params_to_json; validates the family name and fields."""
    try:
        name = obj["family"]
        fields = dict(obj["params"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"family JSON needs 'family' and 'params' keys: {exc}") from exc
    cls = _PARAMS_BY_NAME.get(name)
    if cls is None:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(_PARAMS_BY_NAME)}")
    try:
        return cls(**fields)
    except TypeError as exc:
        raise ValueError(f"bad params for family {name!r}: {exc}") from exc
