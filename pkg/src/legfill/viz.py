"""Schematic matplotlib rendering of fronts and filling traces.

Strands are drawn per column at their sweep levels, cusps as tips joining
the two strands, and crossings as transversal swaps with the under-strand
(the ascending one) broken.  These are combinatorial schematics for reports,
not isotopy-faithful drawings.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .front import CROSSING, LEFT_CUSP, RIGHT_CUSP, Front


def _strand_points(front: Front):
    """Per-strand column points, cusp tips, and crossing decorations."""
    st = front.structure
    pts: dict[int, list[tuple[float, float]]] = {s.index: [] for s in st.strands}
    for col in range(1, len(st.stacks)):
        x = col - 0.5
        for pos, s in enumerate(st.stacks[col]):
            pts[s].append((x, -float(pos)))
    tips = []
    overs = []
    for cusp in st.left_cusps:
        k = cusp.level - 1
        tip = (float(cusp.event_index), -(k + 0.5))
        pts[cusp.upper].insert(0, tip)
        pts[cusp.lower].insert(0, tip)
        tips.append(tip)
    for cusp in st.right_cusps:
        k = cusp.level - 1
        tip = (float(cusp.event_index), -(k + 0.5))
        pts[cusp.upper].append(tip)
        pts[cusp.lower].append(tip)
        tips.append(tip)
    for c in st.crossings:
        k = c.level - 1
        x = float(c.event_index)
        overs.append(((x - 0.5, -float(k)), (x + 0.5, -float(k + 1)), (x, -(k + 0.5))))
    return pts, tips, overs


def draw_front(front: Front, ax=None, title: str | None = None):
    """Draw the front schematic onto ``ax`` (a new figure when omitted)."""
    own = ax is None
    if own:
        width = max(4.0, len(front.events) * 0.45)
        _, ax = plt.subplots(figsize=(width, 3))
    if front.events:
        pts, tips, overs = _strand_points(front)
        comp_of = front.structure.component_of_strand
        cmap = plt.get_cmap("tab10")
        for s, seq in pts.items():
            if len(seq) < 2:
                continue
            ax.plot([p[0] for p in seq], [p[1] for p in seq],
                    lw=1.8, color=cmap(comp_of[s] % 10), solid_capstyle="round")
        for (a, b, center) in overs:
            ax.plot([center[0]], [center[1]], marker="o", ms=10, color="white", zorder=3)
            ax.plot([a[0], b[0]], [a[1], b[1]], lw=1.8, color="black", zorder=4)
    else:
        ax.text(0.5, 0.5, "(empty front)", ha="center", va="center", fontsize=8)
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=9)
    return ax.figure if own else None


def save_front_figure(front: Front, path: str, title: str | None = None) -> str:
    fig = draw_front(front, title=title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_trace_figure(trace, path: str, title: str | None = None) -> str:
    """Thumbnails of the front after each step, left to right."""
    from .cobordism import format_move

    steps = trace.steps
    cols = min(max(len(steps), 1), 6)
    rows = (max(len(steps), 1) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 2.2 * rows), squeeze=False)
    for i in range(rows * cols):
        ax = axes[i // cols][i % cols]
        if i < len(steps):
            move, front = steps[i]
            draw_front(front, ax=ax, title=f"{i}: {format_move(move)}")
        else:
            ax.set_axis_off()
    if title:
        fig.suptitle(title, fontsize=10)
    fig.savefig(path, dpi=130, bbox_inches="tight")
    plt.close(fig)
    return path
