"""Figure rendering for the CLI report paths.

Each function takes the already-computed rows a command is about to
emit and draws the matching figure to a file.  Rendering is opt-in
from the CLI (`--plot`), so the delimited output stays byte-identical
whether or not a figure is requested.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

_STYLE = {
    "figure.figsize": (7.0, 4.5),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
}


def tradeoff_figure(points, family: str, path: str) -> None:
    """Clone-B versus clone-A fidelity along one family's curve."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        f_a = [pt.f_a for pt in points]
        f_b = [pt.f_b for pt in points]
        ax.plot(f_a, f_b, "-", color="tab:blue", lw=1.8, label=family)
        # Mark the symmetric point, where the clones fare equally.
        sym = min(points, key=lambda pt: abs(pt.f_a - pt.f_b))
        ax.plot([sym.f_a], [sym.f_b], "o", color="tab:red", ms=6,
                label=f"symmetric ({sym.f_a:.4f})")
        ax.plot([min(f_a), max(f_a)], [min(f_a), max(f_a)], ":", color="gray", lw=1)
        ax.set_xlabel("clone A fidelity")
        ax.set_ylabel("clone B fidelity")
        ax.set_title(f"optimal trade-off: {family}")
        ax.legend()
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)


def table_figure(rows, path: str) -> None:
    """Grouped bars of per-basis fidelity for both clones.

    Expects dict rows with keys clone, basis, f, d1, d2.
    """
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        clones = sorted({r["clone"] for r in rows})
        bases = sorted({r["basis"] for r in rows})
        width = 0.8 / len(clones)
        for k, clone in enumerate(clones):
            vals = [next(r["f"] for r in rows if r["clone"] == clone and r["basis"] == b) for b in bases]
            offs = [b + (k - (len(clones) - 1) / 2.0) * width for b in range(len(bases))]
            ax.bar(offs, vals, width=width, label=f"clone {clone}")
        ax.set_xticks(range(len(bases)), [f"basis {b}" for b in bases])
        ax.set_ylim(0.0, 1.05)
        ax.set_ylabel("fidelity")
        ax.set_title("per-basis cloning fidelity")
        ax.legend()
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)


def verify_figure(rows, path: str, tolerance: float) -> None:
    """Log-scale deviations of every verified claim against tolerance.

    Expects dict rows with keys name, delta, ok.
    """
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(7.0, 0.4 * max(len(rows), 4) + 1.5))
        names = [r["name"] for r in rows]
        # Floor zero deviations at a displayable value.
        deltas = [max(r["delta"], 1e-18) for r in rows]
        colors = ["tab:green" if r["ok"] else "tab:red" for r in rows]
        ax.barh(range(len(rows)), deltas, color=colors)
        ax.axvline(tolerance, color="black", ls="--", lw=1, label=f"tolerance {tolerance:g}")
        ax.set_yticks(range(len(rows)), names)
        ax.set_xscale("log")
        ax.set_xlabel("|computed - expected|")
        ax.set_title("verification deviations")
        ax.invert_yaxis()
        ax.legend(loc="lower right")
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
