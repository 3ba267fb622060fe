"""Report figures.

Figures are built on bare ``Figure`` objects (no pyplot state), so the
module works headless and never opens a window.  Floats appear only here,
for drawing; every value plotted has already been computed exactly.
"""
from __future__ import annotations

import os

import numpy as np
from matplotlib.figure import Figure
from matplotlib.ticker import MaxNLocator

FIG_SIZE = (6.0, 4.0)
DPI = 120

_VERDICT_ORDER = ["cocycle", "product", "not-integral", "unsolvable", "solved"]


def _save(fig: Figure, path: str) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    return path


def verdict_bars(counts: dict, path: str, title: str = "") -> str:
    """Bar chart of how many candidate tuples ended at each filter."""
    labels = [v for v in _VERDICT_ORDER if v in counts] + \
             sorted(v for v in counts if v not in _VERDICT_ORDER)
    fig = Figure(figsize=FIG_SIZE)
    ax = fig.add_subplot()
    bars = ax.bar(labels, [counts[v] for v in labels], color="0.55", edgecolor="k")
    for b, v in zip(bars, labels):
        if v == "solved":
            b.set_color("tab:green")
    ax.bar_label(bars)
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_ylabel("tuples")
    ax.set_title(title or "candidate tuples by verdict")
    return _save(fig, path)


def root_scatter(polys, path: str, title: str = "") -> str:
    """Complex roots of integer polynomials (coefficients lowest first), one marker per polynomial."""
    fig = Figure(figsize=FIG_SIZE)
    ax = fig.add_subplot()
    for k, F in enumerate(polys):
        r = np.roots([float(c) for c in reversed(F)])
        ax.scatter(r.real, r.imag, s=30, label=f"rep {k + 1}")
    ax.axhline(0, color="0.8", lw=0.8)
    ax.axvline(0, color="0.8", lw=0.8)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if polys and len(polys) <= 12:
        ax.legend(fontsize=7)
    ax.set_title(title or "roots of representatives")
    return _save(fig, path)


def brute_force_scatter(polys, classes, path: str, title: str = "") -> str:
    """Brute-force solutions in the (a_{n-1}, a_0) coefficient plane, coloured by class."""
    fig = Figure(figsize=FIG_SIZE)
    ax = fig.add_subplot()
    for k, cls in enumerate(classes):
        xs = [polys[i][-2] for i in cls]
        ys = [polys[i][0] for i in cls]
        ax.scatter(xs, ys, s=18, label=f"class {k + 1}")
    ax.set_xlabel("coefficient of X^(n-1)")
    ax.set_ylabel("constant coefficient")
    if classes and len(classes) <= 12:
        ax.legend(fontsize=7)
    ax.set_title(title or "brute-force solutions")
    return _save(fig, path)


def quotient_layers(block: dict, path: str, title: str = "") -> str:
    """Sizes of the prime layers in each step of a quotient computation."""
    fig = Figure(figsize=FIG_SIZE)
    ax = fig.add_subplot()
    labels, sizes = [], []
    for i, st in enumerate(block.get("steps", [])):
        for L in st.get("layers", []):
            labels.append(f"g{i + 1}:p={L['prime']}")
            sizes.append(L["size"] if L["size"] is not None else 0)
    if labels:
        bars = ax.bar(labels, sizes, color="tab:blue")
        ax.bar_label(bars, labels=[str(s) if s else "inf" for s in sizes])
    else:
        ax.text(0.5, 0.5, "trivial quotient", ha="center", va="center", transform=ax.transAxes)
    ax.set_ylabel("layer size")
    ax.tick_params(axis="x", labelrotation=30)
    status = "finite" if block.get("finite") else "infinite"
    ax.set_title(title or f"quotient layers ({status})")
    return _save(fig, path)


def inequivalence_grid(m_max: int, inequivalent: dict, disc_ok, path: str, title: str = "") -> str:
    """Pairwise inequivalence matrix of a counterexample family, with a row of discriminant checks."""
    grid = np.full((m_max, m_max), np.nan)
    for (i, j), v in inequivalent.items():
        grid[i - 1, j - 1] = grid[j - 1, i - 1] = 1.0 if v else 0.0
    fig = Figure(figsize=(FIG_SIZE[0], FIG_SIZE[0] * 0.9))
    ax = fig.add_subplot()
    ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1)
    ticks = list(range(m_max))
    ax.set_xticks(ticks, [str(m + 1) for m in ticks])
    ax.set_yticks(ticks, [f"{m + 1} {'ok' if ok else 'BAD'}" for m, ok in zip(ticks, disc_ok)])
    ax.set_xlabel("m'")
    ax.set_ylabel("m  (discriminant check)")
    ax.set_title(title or "green: F_m and F_m' inequivalent")
    return _save(fig, path)
