"""Command-line interface.

One entry point with five commands selected by --command:

* verify    recompute the library's headline fidelity claims and report
            expected vs computed with a pass/fail verdict per row,
* table     per-basis fidelity table (F, D1, D2) for both clones of a
            given cloner,
* tradeoff  sweep a family's optimal trade-off curve onto a grid,
* clone     clone one input state and emit both output density
            matrices, the error weights, and the entropy check,
* entropy   just the entropy budget of a cloner.

Matrices come from --matrix (raw amplitude JSON) or --family (family
params JSON); both accept a file path or an inline JSON string.  All
data goes to stdout (or --out) as CSV or JSON with deterministic
12-significant-digit formatting; warnings go to stderr.  --plot
renders a matplotlib figure next to the data for the report commands.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .cloner import (
    AmplitudeMatrix,
    clone_outputs_mixture,
    entropic_check,
    fidelity_in_basis,
    fourier_dual,
)
from .families import build, params_from_json
from .hilbert import StateVector, fidelity
from .mub import qubit_mubs, qutrit_mubs
from .optimizer import (
    three_basis_asym_tradeoff,
    three_basis_symmetric_optimal,
    tradeoff_curve,
    two_basis_tradeoff,
    universal_tradeoff,
    qubit_phase_cov_tradeoff,
)

_CURVE_FAMILIES = ("qubit_phase_cov", "three_basis_asym", "two_basis", "universal")

# Commands whose --plot is defined, mapped in _render_plot.
_PLOTTABLE = ("verify", "table", "tradeoff")


class CliError(Exception):
    """User-facing configuration or input problem (exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    """Validated run settings for one invocation."""

    command: str
    family: str | None
    matrix: str | None
    state: str | None
    grid: int
    out: str | None
    fmt: str
    tolerance: float
    only: str | None
    plot: str | None


def format_number(x: float) -> str:
    """12 significant digits; scientific only below 1e-4; stable bytes."""
    if x == 0.0:
        return "0"
    return f"{float(x):.12g}"


def _json_number(x: float) -> float:
    return float(format_number(x))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutrit-cloning",
        description="Asymmetric cloning of N-level systems: fidelity tables and optimal trade-offs.",
    )
    parser.add_argument(
        "--command",
        required=True,
        choices=["verify", "table", "tradeoff", "clone", "entropy"],
        help="what to run",
    )
    parser.add_argument(
        "--family",
        help="family name (tradeoff) or family params JSON, inline or a file path (other commands)",
    )
    parser.add_argument("--matrix", help="amplitude matrix JSON, inline or a file path")
    parser.add_argument("--state", help="input state as a JSON list of [re, im] pairs, inline or a file path")
    parser.add_argument("--grid", type=int, default=101, help="number of sweep points (default 101)")
    parser.add_argument("--out", help="write data here instead of stdout")
    parser.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv", help="output format")
    parser.add_argument("--tolerance", type=float, default=1e-9, help="pass/fail tolerance for verify")
    parser.add_argument("--only", help="verify: keep only checks whose name contains this substring")
    parser.add_argument("--plot", help="also render a figure to this file (verify, table, tradeoff)")
    return parser


def _resolve_out_path(path: str | None) -> str | None:
    """Relative outputs land in $QUTRIT_CLONING_OUTDIR when it is set."""
    if path is None:
        return None
    base = os.environ.get("QUTRIT_CLONING_OUTDIR")
    if base and not os.path.isabs(path):
        return str(Path(base) / path)
    return path


def make_config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=ns.command,
        family=ns.family,
        matrix=ns.matrix,
        state=ns.state,
        grid=ns.grid,
        out=_resolve_out_path(ns.out),
        fmt=ns.fmt,
        tolerance=ns.tolerance,
        only=ns.only,
        plot=_resolve_out_path(ns.plot),
    )
    if cfg.grid < 2:
        raise CliError(f"--grid must be at least 2, got {cfg.grid}")
    if cfg.tolerance <= 0.0:
        raise CliError(f"--tolerance must be positive, got {cfg.tolerance}")
    if cfg.command in ("table", "clone", "entropy") and (cfg.matrix is None) == (cfg.family is None):
        raise CliError(f"--command {cfg.command} needs exactly one of --matrix or --family")
    if cfg.command == "tradeoff":
        if cfg.family is None:
            raise CliError("--command tradeoff needs --family with one of: " + ", ".join(_CURVE_FAMILIES))
        if cfg.family not in _CURVE_FAMILIES:
            raise CliError(f"unknown trade-off family {cfg.family!r}; expected one of: " + ", ".join(_CURVE_FAMILIES))
    if cfg.command == "clone" and cfg.state is None:
        raise CliError("--command clone needs --state")
    if cfg.plot is not None and cfg.command not in _PLOTTABLE:
        raise CliError(f"--plot supports commands {', '.join(_PLOTTABLE)}, not {cfg.command}")
    return cfg


def _load_json_source(source: str, what: str):
    text = source.strip()
    if text.startswith("{") or text.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliError(f"inline {what} JSON does not parse: {exc}") from exc
    path = Path(source)
    if not path.exists():
        raise CliError(f"{what} file not found: {source}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CliError(f"{what} file {source} does not parse as JSON: {exc}") from exc


def _resolve_matrix(cfg: RunConfig) -> AmplitudeMatrix:
    try:
        if cfg.matrix is not None:
            return AmplitudeMatrix.from_json(_load_json_source(cfg.matrix, "matrix"))
        return build(params_from_json(_load_json_source(cfg.family, "family")))
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"bad cloner description: {exc}") from exc


def _resolve_state(cfg: RunConfig, dim: int) -> StateVector:
    obj = _load_json_source(cfg.state, "state")
    try:
        amps = np.array([complex(re, im) for re, im in obj])
    except (TypeError, ValueError) as exc:
        raise CliError(f"state must be a JSON list of [re, im] pairs: {exc}") from exc
    if amps.size != dim:
        raise CliError(f"state has dim {amps.size} but the cloner has dim {dim}")
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise CliError("state vector is zero")
    if abs(norm - 1.0) > 1e-6:
        print(f"warning: state norm {norm!r} deviates from 1; renormalizing", file=sys.stderr)
    return StateVector.renormalized(amps)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _csv(lines: list[str]) -> str:
    return "\n".join(lines) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- verify -----------------------------------------------------------------

def _worst(values, expected: float) -> float:
    """The computed value farthest from what is claimed."""
    return max(values, key=lambda v: abs(v - expected))


def _simulated_basis_fidelities(a: AmplitudeMatrix, labels, clones=("a", "b")) -> list[float]:
    mubs = qutrit_mubs() if a.dim == 3 else qubit_mubs()
    vals = []
    for label in labels:
        for vec in mubs.basis(label):
            out = clone_outputs_mixture(a, vec)
            if "a" in clones:
                vals.append(fidelity(vec, out.rho_a))
            if "b" in clones:
                vals.append(fidelity(vec, out.rho_b))
    return vals


def _verify_rows() -> list[dict]:
    """Recompute every headline number through the simulation path."""
    rows = []

    def add(name: str, expected: float, computed: float) -> None:
        rows.append({"name": name, "expected": float(expected), "computed": float(computed)})

    sym_f = 0.5 + 1.0 / math.sqrt(12.0)
    a = build(two_basis_tradeoff(sym_f).params)
    add("two_basis_symmetric_cloned_bases", sym_f, _worst(_simulated_basis_fidelities(a, (3, 4)), sym_f))
    rem = 0.5 + 1.0 / (2.0 * math.sqrt(12.0))
    add("two_basis_symmetric_remaining_bases", rem, _worst(_simulated_basis_fidelities(a, (1, 2)), rem))

    a = build(two_basis_tradeoff(1.0).params)
    add(
        "two_basis_perfect_clone_a_leaves_b_one_third",
        1.0 / 3.0,
        _worst(_simulated_basis_fidelities(a, (3, 4), clones=("b",)), 1.0 / 3.0),
    )

    best = three_basis_symmetric_optimal()
    a = build(best.params)
    add(
        "three_basis_symmetric_optimum",
        (5.0 + math.sqrt(17.0)) / 12.0,
        _worst(_simulated_basis_fidelities(a, (2, 3, 4)), best.f_a),
    )
    curve = three_basis_asym_tradeoff(best.f_a)
    add("three_basis_curve_through_symmetric_point", best.f_a, curve.f_b)

    a = build(universal_tradeoff(math.sqrt(3.0 / 8.0)).params)
    add("universal_qutrit_symmetric", 0.75, _worst(_simulated_basis_fidelities(a, (1, 2, 3, 4)), 0.75))
    a = build(universal_tradeoff(math.sqrt(1.0 / 3.0), dim=2).params)
    add("universal_qubit_symmetric", 5.0 / 6.0, _worst(_simulated_basis_fidelities(a, (1, 2, 3)), 5.0 / 6.0))

    # Dimension formula (3+N)/(2(1+N)) spot-checked at N=5 on a fixed state.
    pt = universal_tradeoff(math.sqrt(5.0 / 12.0), dim=5)
    a = build(pt.params)
    state = StateVector(np.full(5, 1.0 / math.sqrt(5.0)))
    out = clone_outputs_mixture(a, state)
    add("universal_dim5_symmetric", 8.0 / 12.0, _worst([fidelity(state, out.rho_a), fidelity(state, out.rho_b)], 8.0 / 12.0))

    qubit_f = 0.5 + 1.0 / math.sqrt(8.0)
    a = build(qubit_phase_cov_tradeoff(qubit_f).params)
    add("qubit_phase_cov_symmetric", qubit_f, _worst(_simulated_basis_fidelities(a, (1, 2)), qubit_f))
    add("qubit_phase_cov_third_basis", 0.75, _worst(_simulated_basis_fidelities(a, (3,)), 0.75))

    for dim in (2, 3):
        ident = AmplitudeMatrix.identity(dim)
        chk = entropic_check(ident.probabilities(), fourier_dual(ident).probabilities())
        add(f"entropy_sum_identity_dim{dim}", math.log2(dim**2), chk.entropy_sum)

    return rows


def cmd_verify(cfg: RunConfig) -> int:
    rows = _verify_rows()
    if cfg.only:
        rows = [r for r in rows if cfg.only in r["name"]]
        if not rows:
            raise CliError(f"--only {cfg.only!r} matches no check")
    for r in rows:
        r["delta"] = abs(r["computed"] - r["expected"])
        r["ok"] = r["delta"] <= cfg.tolerance
    if cfg.fmt == "csv":
        lines = ["check,expected,computed,delta,status"]
        for r in rows:
            lines.append(
                f"{r['name']},{format_number(r['expected'])},{format_number(r['computed'])},"
                f"{format_number(r['delta'])},{'pass' if r['ok'] else 'fail'}"
            )
        _emit(_csv(lines), cfg.out)
    else:
        payload = [
            {
                "check": r["name"],
                "expected": _json_number(r["expected"]),
                "computed": _json_number(r["computed"]),
                "delta": _json_number(r["delta"]),
                "status": "pass" if r["ok"] else "fail",
            }
            for r in rows
        ]
        _emit(_json_text(payload), cfg.out)
    if cfg.plot:
        from . import plots

        plots.verify_figure(rows, cfg.plot, cfg.tolerance)
    return 0 if all(r["ok"] for r in rows) else 1


# --- table ------------------------------------------------------------------

def _table_rows(a: AmplitudeMatrix) -> list[dict]:
    labels = (1, 2, 3, 4) if a.dim == 3 else (1, 2, 3)
    p = a.probabilities()
    q = fourier_dual(a).probabilities()
    rows = []
    for clone, probs in (("a", p), ("b", q)):
        for label in labels:
            f, d1, d2 = fidelity_in_basis(probs, label)
            rows.append({"clone": clone, "basis": label, "f": f, "d1": d1, "d2": d2})
    return rows


def cmd_table(cfg: RunConfig) -> int:
    rows = _table_rows(_resolve_matrix(cfg))
    if cfg.fmt == "csv":
        lines = ["clone,basis,f,d1,d2"]
        for r in rows:
            lines.append(
                f"{r['clone']},{r['basis']},{format_number(r['f'])},"
                f"{format_number(r['d1'])},{format_number(r['d2'])}"
            )
        _emit(_csv(lines), cfg.out)
    else:
        payload = [
            {
                "clone": r["clone"],
                "basis": r["basis"],
                "f": _json_number(r["f"]),
                "d1": _json_number(r["d1"]),
                "d2": _json_number(r["d2"]),
            }
            for r in rows
        ]
        _emit(_json_text(payload), cfg.out)
    if cfg.plot:
        from . import plots

        plots.table_figure(rows, cfg.plot)
    return 0


# --- tradeoff ---------------------------------------------------------------

def _params_columns(family: str) -> list[str]:
    if family == "universal":
        return ["alpha", "beta", "dim"]
    if family == "three_basis_sym":
        return ["x", "y", "z"]
    return ["v", "x", "y"]


def cmd_tradeoff(cfg: RunConfig) -> int:
    points = tradeoff_curve(cfg.family, cfg.grid)
    sweep = "alpha" if cfg.family == "universal" else "f_a"
    cols = _params_columns(cfg.family)
    lo = points[0].params.alpha if cfg.family == "universal" else points[0].f_a
    hi = points[-1].params.alpha if cfg.family == "universal" else points[-1].f_a
    if cfg.fmt == "csv":
        lines = [
            f"# family={cfg.family},grid={cfg.grid},sweep={sweep},"
            f"lo={format_number(lo)},hi={format_number(hi)}",
            "f_a,f_b," + ",".join(cols),
        ]
        for pt in points:
            vals = [getattr(pt.params, c) for c in cols]
            lines.append(
                f"{format_number(pt.f_a)},{format_number(pt.f_b)},"
                + ",".join(str(v) if isinstance(v, int) else format_number(v) for v in vals)
            )
        _emit(_csv(lines), cfg.out)
    else:
        payload = {
            "family": cfg.family,
            "grid": cfg.grid,
            "sweep": sweep,
            "points": [
                {
                    "f_a": _json_number(pt.f_a),
                    "f_b": _json_number(pt.f_b),
                    **{
                        c: (getattr(pt.params, c) if isinstance(getattr(pt.params, c), int) else _json_number(getattr(pt.params, c)))
                        for c in cols
                    },
                }
                for pt in points
            ],
        }
        _emit(_json_text(payload), cfg.out)
    if cfg.plot:
        from . import plots

        plots.tradeoff_figure(points, cfg.family, cfg.plot)
    return 0


# --- clone ------------------------------------------------------------------

def cmd_clone(cfg: RunConfig) -> int:
    a = _resolve_matrix(cfg)
    state = _resolve_state(cfg, a.dim)
    out = clone_outputs_mixture(a, state)
    f_a = fidelity(state, out.rho_a)
    f_b = fidelity(state, out.rho_b)
    chk = entropic_check(out.p, out.q)
    if cfg.fmt == "csv":
        lines = ["record,i,j,re,im"]
        lines.append(f"f_a,,,{format_number(f_a)},")
        lines.append(f"f_b,,,{format_number(f_b)},")
        for name, rho in (("rho_a", out.rho_a), ("rho_b", out.rho_b)):
            for i in range(rho.dim):
                for j in range(rho.dim):
                    z = rho.entries[i, j]
                    lines.append(f"{name},{i},{j},{format_number(z.real)},{format_number(z.imag)}")
        for name, probs in (("p", out.p), ("q", out.q)):
            for m in range(probs.dim):
                for n in range(probs.dim):
                    lines.append(f"{name},{m},{n},{format_number(probs.p[m, n])},")
        lines.append(f"entropy_h_p,,,{format_number(chk.h_p)},")
        lines.append(f"entropy_h_q,,,{format_number(chk.h_q)},")
        lines.append(f"entropy_sum,,,{format_number(chk.entropy_sum)},")
        lines.append(f"entropy_bound,,,{format_number(chk.bound)},")
        lines.append(f"entropy_ok,,,{1 if chk.satisfied else 0},")
        _emit(_csv(lines), cfg.out)
    else:
        def mat(z) -> list:
            return [[[_json_number(v.real), _json_number(v.imag)] for v in row] for row in z]

        payload = {
            "f_a": _json_number(f_a),
            "f_b": _json_number(f_b),
            "rho_a": mat(out.rho_a.entries),
            "rho_b": mat(out.rho_b.entries),
            "p": [[_json_number(v) for v in row] for row in out.p.p],
            "q": [[_json_number(v) for v in row] for row in out.q.p],
            "entropy": {
                "h_p": _json_number(chk.h_p),
                "h_q": _json_number(chk.h_q),
                "sum": _json_number(chk.entropy_sum),
                "bound": _json_number(chk.bound),
                "ok": chk.satisfied,
            },
        }
        _emit(_json_text(payload), cfg.out)
    return 0


# --- entropy ----------------------------------------------------------------

def cmd_entropy(cfg: RunConfig) -> int:
    a = _resolve_matrix(cfg)
    chk = entropic_check(a.probabilities(), fourier_dual(a).probabilities())
    if cfg.fmt == "csv":
        lines = [
            "metric,value",
            f"h_p,{format_number(chk.h_p)}",
            f"h_q,{format_number(chk.h_q)}",
            f"sum,{format_number(chk.entropy_sum)}",
            f"bound,{format_number(chk.bound)}",
            f"ok,{1 if chk.satisfied else 0}",
        ]
        _emit(_csv(lines), cfg.out)
    else:
        payload = {
            "h_p": _json_number(chk.h_p),
            "h_q": _json_number(chk.h_q),
            "sum": _json_number(chk.entropy_sum),
            "bound": _json_number(chk.bound),
            "ok": chk.satisfied,
        }
        _emit(_json_text(payload), cfg.out)
    return 0


_COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "tradeoff": cmd_tradeoff,
    "clone": cmd_clone,
    "entropy": cmd_entropy,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = make_config(ns)
        return _COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
