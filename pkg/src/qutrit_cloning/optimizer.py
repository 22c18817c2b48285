"""Optimal fidelity trade-offs between the two clones.

For each family this module answers: given that clone A reaches
fidelity F on the family's bases, how good can clone B get?  The
two-basis and qubit families have closed-form optima.  The three-basis
asymmetric family does not; its curve is computed numerically by
eliminating the constraints down to one free amplitude and running a
bounded scalar maximization.  An independent grid-scan oracle
(`brute_force_optimal`) cross-checks every curve without sharing any
search code with the fast path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .cloner import AmplitudeMatrix, fourier_dual
from .families import (
    FamilyParams,
    QubitPhaseCovParams,
    ThreeBasisAsymParams,
    ThreeBasisSymParams,
    TwoBasisParams,
    UniversalParams,
    family_fidelities,
)

# Feasible first-clone fidelity ranges along the optimal curves.
TWO_BASIS_DOMAIN = (1.0 / 3.0, 1.0)
THREE_BASIS_ASYM_DOMAIN = (1.0 / 3.0, 1.0)
QUBIT_PHASE_COV_DOMAIN = (0.5, 1.0)
UNIVERSAL_ALPHA_DOMAIN = (0.0, 1.0)

_DOMAIN_SLACK = 1e-12


@dataclass(frozen=True)
class TradeoffPoint:
    """One point on a trade-off curve: clone fidelities and the params."""

    f_a: float
    f_b: float
    params: FamilyParams


def _check_domain(value: float, lo: float, hi: float, what: str) -> float:
    if not lo - _DOMAIN_SLACK <= value <= hi + _DOMAIN_SLACK:
        raise ValueError(f"{what} must lie in [{lo}, {hi}], got {value}")
    return min(max(value, lo), hi)


def two_basis_tradeoff(f: float) -> TradeoffPoint:
    """Best clone-B fidelity when clone A copies bases 3 and 4 at f.

    The optimum sits at v = f, x = sqrt(f(1-f)/2), y = (1-f)/2, giving
    f_b = (2-f)/3 + (2 sqrt(2)/3) sqrt(f(1-f)).
    """
    f = _check_domain(f, *TWO_BASIS_DOMAIN, what="two-basis fidelity")
    params = TwoBasisParams(v=f, x=math.sqrt(f * (1.0 - f) / 2.0), y=(1.0 - f) / 2.0)
    f_b = (2.0 - f) / 3.0 + (2.0 * math.sqrt(2.0) / 3.0) * math.sqrt(f * (1.0 - f))
    return TradeoffPoint(f_a=f, f_b=f_b, params=params)


def qubit_phase_cov_tradeoff(f: float) -> TradeoffPoint:
    """Best clone-B fidelity when clone A copies qubit bases z and x at f.

    Optimum at v = f, x = sqrt(f(1-f)), y = 1-f, giving
    f_b = 1/2 + sqrt(f(1-f)).
    """
    f = _check_domain(f, *QUBIT_PHASE_COV_DOMAIN, what="qubit phase-covariant fidelity")
    params = QubitPhaseCovParams(v=f, x=math.sqrt(f * (1.0 - f)), y=1.0 - f)
    return TradeoffPoint(f_a=f, f_b=0.5 + math.sqrt(f * (1.0 - f)), params=params)


def three_basis_symmetric_optimal() -> TradeoffPoint:
    """The best symmetric cloner of qutrit bases 2, 3, 4.

    Maximizing f = x^2 + 2y^2 + 2z^2 + 2(xy + yz + xz) under
    x^2 + 2y^2 + 2z^2 = 1/3 puts y = z and pins the multiplier to
    (1 + sqrt(17))/4, giving F_max = (5 + sqrt(17))/12 ~ 0.7603.
    """
    s = math.sqrt(17.0)
    x = math.sqrt((17.0 - s) / 102.0)
    y = math.sqrt((17.0 + s) / 408.0)
    f_max = (5.0 + s) / 12.0
    return TradeoffPoint(f_a=f_max, f_b=f_max, params=ThreeBasisSymParams(x=x, y=y, z=y))


def universal_tradeoff(alpha: float, dim: int = 3) -> TradeoffPoint:
    """The state-independent trade-off point at a given alpha.

    beta is fixed (nonnegative root) by the normalization
    alpha^2 + (2/N) alpha beta + beta^2 = 1.
    """
    if dim < 2:
        raise ValueError(f"dim must be at least 2, got {dim}")
    alpha = _check_domain(alpha, *UNIVERSAL_ALPHA_DOMAIN, what="universal cloner alpha")
    beta = -alpha / dim + math.sqrt(1.0 - alpha**2 * (1.0 - 1.0 / dim**2))
    params = UniversalParams(alpha=alpha, beta=beta, dim=dim)
    fids = family_fidelities(params)
    return TradeoffPoint(f_a=fids.f, f_b=fids.f_tilde, params=params)


def _asym_clone_b(f: float, x: float) -> float:
    """Clone-B fidelity along the three-basis slice with clone A at f.

    With v^2 = f - 2x^2 and 2y^2 = 1 - f - 4x^2 eliminated, the
    closed form collapses to (1 + 6x^2 + 4vx + 8xy)/3.
    """
    v = math.sqrt(max(f - 2.0 * x * x, 0.0))
    y = math.sqrt(max((1.0 - f - 4.0 * x * x) / 2.0, 0.0))
    return (1.0 + 6.0 * x * x + 4.0 * v * x + 8.0 * x * y) / 3.0


def three_basis_asym_tradeoff(f: float, xatol: float = 1e-12) -> TradeoffPoint:
    """Best clone-B fidelity when clone A copies bases 2, 3, 4 at f.

    No closed form is known; the feasible set reduces to one free
    amplitude x in [0, sqrt(1-f)/2], scanned coarsely and then
    maximized with a bounded scalar search.  Ties prefer the largest v.
    """
    f = _check_domain(f, *THREE_BASIS_ASYM_DOMAIN, what="three-basis fidelity")
    x_hi = math.sqrt(max(1.0 - f, 0.0)) / 2.0
    if x_hi < 1e-12:
        return TradeoffPoint(f_a=1.0, f_b=1.0 / 3.0, params=ThreeBasisAsymParams(v=1.0, x=0.0, y=0.0))

    xs = np.linspace(0.0, x_hi, 513)
    vals = np.array([_asym_clone_b(f, x) for x in xs])
    peak = int(vals.argmax())
    lo = xs[max(peak - 1, 0)]
    hi = xs[min(peak + 1, xs.size - 1)]
    res = minimize_scalar(
        lambda x: -_asym_clone_b(f, x),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": xatol},
    )
    if not res.success:
        raise RuntimeError(f"bounded search failed on bracket [{lo}, {hi}] for F={f}: {res.message}")

    # Candidate refinement: keep the best of the polished point, the
    # coarse peak, and the domain endpoints; ties go to the smallest x,
    # which is the largest v.
    candidates = sorted({float(res.x), float(xs[peak]), 0.0, x_hi})
    best_x, best_val = None, -np.inf
    for x in candidates:
        val = _asym_clone_b(f, x)
        if val > best_val + 1e-14:
            best_x, best_val = x, val
    v = math.sqrt(max(f - 2.0 * best_x**2, 0.0))
    y = math.sqrt(max((1.0 - f - 4.0 * best_x**2) / 2.0, 0.0))
    params = ThreeBasisAsymParams(v=v, x=best_x, y=y)
    return TradeoffPoint(f_a=f, f_b=family_fidelities(params).f_tilde, params=params)


# Brute-force oracle table per searchable family: normalization
# coefficients for (v, x, y), the ellipse coefficients (e_x, e_y) such
# that F = f reads e_x x^2 + e_y y^2 = 1 - f once v is eliminated, the
# clone-B form, and the params constructor.
_BRUTE_FAMILIES = {
    "two_basis": (
        (4.0, 4.0),
        (2.0, 4.0),
        lambda v, x, y: (v**2 + 6.0 * x**2 + 8.0 * y**2 + 4.0 * v * x + 8.0 * x * y) / 3.0,
        TwoBasisParams,
    ),
    "three_basis_asym": (
        (6.0, 2.0),
        (4.0, 2.0),
        lambda v, x, y: (v**2 + 12.0 * x**2 + 2.0 * y**2 + 4.0 * v * x + 8.0 * x * y) / 3.0,
        ThreeBasisAsymParams,
    ),
    "qubit_phase_cov": (
        (2.0, 1.0),
        (1.0, 1.0),
        lambda v, x, y: 0.5 + v * x + x * y,
        QubitPhaseCovParams,
    ),
}


def brute_force_optimal(family: str, f: float, resolution: int = 1000, *, signed: bool = False) -> TradeoffPoint:
    """Grid-scan oracle for the trade-off at first-clone fidelity f.

    Phase one scans the (x, y) simplex exhaustively at the given
    resolution with v fixed by normalization, keeping points within a
    band around F = f and taking the best clone-B value.  Phase two
    refines by coordinate descent with shrinking steps, projecting
    every trial point exactly back onto the constraint (an ellipse in
    the (x, y) plane), so the walk can travel the whole constraint
    curve at each scale.  With `signed` the scan includes negative x
    and y (v >= 0 loses nothing: a global sign flip never changes the
    error weights).  Entirely independent of the fast-path search.
    """
    if family not in _BRUTE_FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(_BRUTE_FAMILIES)}")
    if resolution < 100:
        raise ValueError(f"resolution must be at least 100, got {resolution}")
    (cx, cy), (ex, ey), fb_of, make = _BRUTE_FAMILIES[family]
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"first-clone fidelity must lie in [0, 1], got {f}")
    x_hi, y_hi = 1.0 / math.sqrt(cx), 1.0 / math.sqrt(cy)
    x_lo = -x_hi if signed else 0.0
    y_lo = -y_hi if signed else 0.0
    level = 1.0 - f

    def v_of(x: float, y: float) -> float:
        return math.sqrt(max(1.0 - cx * x * x - cy * y * y, 0.0))

    def project(x: float, y: float):
        """Radially rescale (x, y) onto the constraint ellipse."""
        s = ex * x * x + ey * y * y
        if s <= 0.0:
            return (0.0, 0.0) if level == 0.0 else None
        t = math.sqrt(level / s)
        px, py = t * x, t * y
        if 1.0 - cx * px * px - cy * py * py < -1e-12:
            return None
        return px, py

    # Phase one: exhaustive scan, keep the band |F - f| < 6 grid steps.
    step = max(x_hi - x_lo, y_hi - y_lo) / resolution
    grid_x, grid_y = np.meshgrid(
        np.linspace(x_lo, x_hi, resolution + 1),
        np.linspace(y_lo, y_hi, resolution + 1),
        indexing="ij",
    )
    v_sq = 1.0 - cx * grid_x**2 - cy * grid_y**2
    feasible = v_sq >= -1e-15
    v_grid = np.sqrt(np.clip(v_sq, 0.0, None))
    f_grid = 1.0 - ex * grid_x**2 - ey * grid_y**2
    in_band = feasible & (np.abs(f_grid - f) < 6.0 * step)
    if not in_band.any():
        raise ValueError(
            f"no feasible grid point near F={f} for family {family!r} at resolution {resolution}"
        )
    flat = np.where(in_band, fb_of(v_grid, grid_x, grid_y), -np.inf)
    i, j = np.unravel_index(int(flat.argmax()), flat.shape)
    start = project(float(grid_x[i, j]), float(grid_y[i, j]))
    if start is None:
        # The scan winner projects outside the feasible arc; restart
        # from the x = 0 end of the ellipse, which is always feasible.
        start = (0.0, math.sqrt(level / ey))
    best_x, best_y = start
    best_fb = fb_of(v_of(best_x, best_y), best_x, best_y)

    # Phase two: projected coordinate descent with shrinking steps.
    h = 2.0 * step
    trials = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1))
    while h > 1e-12:
        for _ in range(40 * resolution):
            improved = False
            for dx, dy in trials:
                cand = project(best_x + dx * h, best_y + dy * h)
                if cand is None:
                    continue
                if not signed and (cand[0] < 0.0 or cand[1] < 0.0):
                    continue
                fb = fb_of(v_of(*cand), *cand)
                if fb > best_fb + 1e-15:
                    best_x, best_y = cand
                    best_fb = fb
                    improved = True
            if not improved:
                break
        h *= 0.5

    params = make(v_of(best_x, best_y), best_x, best_y)
    fids = family_fidelities(params)
    return TradeoffPoint(f_a=fids.f, f_b=fids.f_tilde, params=params)


def tradeoff_curve(family: str, grid: int = 101) -> list[TradeoffPoint]:
    """Sample a family's optimal trade-off on a uniform grid.

    The sweep variable is the first-clone fidelity, except for the
    universal family where it is alpha (fidelity is not a linear grid
    there).  Points arrive with f_a nondecreasing.
    """
    if grid < 2:
        raise ValueError(f"grid must be at least 2, got {grid}")
    if family == "two_basis":
        lo, hi = TWO_BASIS_DOMAIN
        return [two_basis_tradeoff(f) for f in np.linspace(lo, hi, grid)]
    if family == "three_basis_asym":
        lo, hi = THREE_BASIS_ASYM_DOMAIN
        return [three_basis_asym_tradeoff(f) for f in np.linspace(lo, hi, grid)]
    if family == "qubit_phase_cov":
        lo, hi = QUBIT_PHASE_COV_DOMAIN
        return [qubit_phase_cov_tradeoff(f) for f in np.linspace(lo, hi, grid)]
    if family == "universal":
        lo, hi = UNIVERSAL_ALPHA_DOMAIN
        return [universal_tradeoff(al) for al in np.linspace(lo, hi, grid)]
    raise ValueError(
        "unknown family "
        f"{family!r}; expected one of ['qubit_phase_cov', 'three_basis_asym', 'two_basis', 'universal']"
    )


def scan_canonical_three_basis(f: float, resolution: int = 24) -> tuple[float, float, dict]:
    """Coarse probe of the widest shape that clones bases 2-4 equally.

    Scans amplitude matrices (v, w e^{i phi}, w e^{-i phi} / x, x, x /
    y, y, y), which realize every error-weight pattern compatible with
    equal cloning of bases 2, 3 and 4, and reports the best worst-basis
    clone-B fidelity found near first-clone fidelity f.  This is a
    numerical check that the (v, y, y / x, x, x / x, x, x) slice is not
    beaten by the wider shape; results are indicative only at coarse
    resolution.
    """
    if resolution < 8:
        raise ValueError(f"resolution must be at least 8, got {resolution}")
    band = 3.0 / resolution
    best = (-np.inf, None)
    ws = np.linspace(0.0, 1.0 / math.sqrt(2.0), resolution)
    xs = np.linspace(0.0, 1.0 / math.sqrt(3.0), resolution)
    ys = np.linspace(0.0, 1.0 / math.sqrt(3.0), resolution)
    phis = np.linspace(0.0, 2.0 * np.pi, resolution, endpoint=False)
    for w in ws:
        for x in xs:
            for y in ys:
                v_sq = 1.0 - 2.0 * w**2 - 3.0 * x**2 - 3.0 * y**2
                if v_sq < 0.0:
                    continue
                f_a = v_sq + x**2 + y**2
                if abs(f_a - f) >= band:
                    continue
                v = math.sqrt(v_sq)
                for phi in phis:
                    top = [v, w * np.exp(1j * phi), w * np.exp(-1j * phi)]
                    a = AmplitudeMatrix([top, [x, x, x], [y, y, y]])
                    q = fourier_dual(a).probabilities().p
                    worst = min(
                        q[0, 0] + q[1, 0] + q[2, 0],
                        q[0, 0] + q[1, 1] + q[2, 2],
                        q[0, 0] + q[1, 2] + q[2, 1],
                    )
                    if worst > best[0]:
                        best = (worst, {"v": v, "w": w, "x": x, "y": y, "phi": float(phi), "f_a": f_a})
    if best[1] is None:
        raise ValueError(f"no feasible point near F={f} at resolution {resolution}")
    return best[1]["f_a"], best[0], best[1]
