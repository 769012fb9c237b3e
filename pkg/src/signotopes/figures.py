"""Figure rendering for the report commands.  File output only, no display."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .counting import PlusCountTable
from .enumeration import HasseDiagram
from .ferrers import FerrersDiagram
from .serialize import plus_label


def render_table_curves(table: PlusCountTable, path: str) -> None:
    """One growth curve per d, level sizes over p, log scale."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ps = list(range(table.max_p + 1))
    for d in range(1, table.max_d + 1):
        ax.plot(ps, [table.value(d, p) for p in ps], marker="o", label=f"d={d}")
    ax.set_yscale("log")
    ax.set_xlabel("level p")
    ax.set_ylabel("co-signotopes at level p")
    ax.set_title("Level sizes by rank")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_hasse(h: HasseDiagram, path: str) -> None:
    """Layered drawing: levels bottom to top, edges as straight segments."""
    per_level: dict[int, list[int]] = {}
    for idx, level in enumerate(h.node_levels):
        per_level.setdefault(level, []).append(idx)
    positions = {}
    for level, members in per_level.items():
        for slot, idx in enumerate(members):
            positions[idx] = (slot - (len(members) - 1) / 2, level)
    fig, ax = plt.subplots(figsize=(7, 1.2 + 1.3 * (h.max_level + 1)))
    for a, b in h.edges:
        (xa, ya), (xb, yb) = positions[a], positions[b]
        ax.plot([xa, xb], [ya, yb], color="gray", linewidth=0.8, zorder=1)
    xs = [positions[i][0] for i in range(len(h.nodes))]
    ys = [positions[i][1] for i in range(len(h.nodes))]
    ax.scatter(xs, ys, s=60, color="tab:blue", zorder=2)
    if len(h.nodes) <= 24:  # labels become unreadable past this
        for idx, t in enumerate(h.nodes):
            x, y = positions[idx]
            ax.annotate(
                plus_label(t),
                (x, y),
                textcoords="offset points",
                xytext=(0, 7),
                ha="center",
                fontsize=7,
            )
    ax.set_title(f"Single-step order, n={h.params.n}, d={h.params.d}, levels 0..{h.max_level}")
    ax.set_axis_off()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_ferrers_grid(diagrams: list[FerrersDiagram], path: str) -> None:
    """Cell pictures of one level's diagrams; only d <= 2 has a planar drawing."""
    if not diagrams:
        raise ValueError("no diagrams to render")
    d = diagrams[0].d
    if d > 2:
        raise ValueError(f"cell rendering is defined for d <= 2 only, got d={d}")
    cols = min(len(diagrams), 6)
    rows = (len(diagrams) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(1.8 * cols, 1.8 * rows), squeeze=False)
    for slot, diagram in enumerate(diagrams):
        ax = axes[slot // cols][slot % cols]
        for pt in diagram.sorted_points():
            x = pt[0] - 1
            y = pt[1] - 1 if d == 2 else 0
            ax.add_patch(
                plt.Rectangle((x, y), 1, 1, facecolor="tab:blue", edgecolor="black")
            )
        extent = max(max(pt) for pt in diagram.points) if diagram.points else 1
        ax.set_xlim(0, extent)
        ax.set_ylim(0, extent if d == 2 else 1)
        ax.set_aspect("equal")
        ax.set_xticks([])
        ax.set_yticks([])
    for slot in range(len(diagrams), rows * cols):
        axes[slot // cols][slot % cols].set_axis_off()
    fig.suptitle(f"d={diagrams[0].d}, i={diagrams[0].i}, {len(diagrams)} diagrams", fontsize=9)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
