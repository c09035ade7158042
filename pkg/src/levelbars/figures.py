"""Static figure rendering for barcodes and point configurations.

Bars are horizontal segments stacked by degree, with solid ticks on closed
ends, hollow ticks on open ends, and an arrowhead for unbounded bars.
Configurations are planar scatters sized by multiplicity with the diagonal
drawn.  Output is written through the Agg backend with a fixed hash salt so
repeated runs produce identical files.
"""

from __future__ import annotations

import math
from collections import Counter

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "levelbars"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_DEGREE_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red",
                  "tab:purple", "tab:brown")


def _finite_span(by_degree: dict[int, Counter]) -> tuple[float, float]:
    points = [bar.left for pool in by_degree.values() for bar in pool]
    points += [bar.right for pool in by_degree.values() for bar in pool
               if not math.isinf(bar.right)]
    if not points:
        return 0.0, 1.0
    lo, hi = min(points), max(points)
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def render_barcodes(by_degree: dict[int, Counter], path: str,
                    title: str = "barcode") -> None:
    lo, hi = _finite_span(by_degree)
    pad = 0.08 * (hi - lo)
    arrow_tip = hi + 4 * pad
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    y = 0
    ticks, labels = [], []
    for degree in sorted(by_degree):
        color = _DEGREE_COLORS[degree % len(_DEGREE_COLORS)]
        start = y
        for bar in sorted(by_degree[degree], key=lambda b: b.sort_key()):
            for _ in range(by_degree[degree][bar]):
                right = arrow_tip if math.isinf(bar.right) else bar.right
                ax.hlines(y, bar.left, right, color=color, linewidth=2)
                left_fill = color if bar.left_closed else "white"
                ax.plot([bar.left], [y], marker="o", markersize=6,
                        markerfacecolor=left_fill, markeredgecolor=color)
                if math.isinf(bar.right):
                    ax.plot([right], [y], marker=">", markersize=7,
                            color=color)
                else:
                    right_fill = color if bar.right_closed else "white"
                    ax.plot([right], [y], marker="o", markersize=6,
                            markerfacecolor=right_fill, markeredgecolor=color)
                y += 1
        if y > start:
            ticks.append((start + y - 1) / 2)
            labels.append(f"degree {degree}")
            y += 1
    ax.set_yticks(ticks, labels)
    ax.set_xlabel("value")
    ax.set_title(title)
    ax.set_ylim(-1, max(y, 1))
    ax.set_xlim(lo - pad, arrow_tip + pad)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def render_configurations(configurations: dict[str, dict[int, "object"]],
                          path: str, title: str = "configurations") -> None:
    """Scatter the delta and gamma point multisets, one panel per map."""
    panels = [(tag, degree, conf)
              for tag in ("delta", "gamma")
              for degree, conf in sorted(configurations.get(tag, {}).items())]
    if not panels:
        panels = [("delta", 0, None)]
    fig, axes = plt.subplots(1, len(panels),
                             figsize=(3.2 * len(panels), 3.2), squeeze=False)
    for ax, (tag, degree, conf) in zip(axes[0], panels):
        points = conf.points if conf is not None else Counter()
        xs = [p[0] for p in sorted(points)]
        ys = [p[1] for p in sorted(points)]
        sizes = [40 * points[p] for p in sorted(points)]
        span = xs + ys or [0.0, 1.0]
        lo, hi = min(span), max(span)
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5
        pad = 0.12 * (hi - lo)
        lo, hi = lo - pad, hi + pad
        ax.plot([lo, hi], [lo, hi], color="0.8", linewidth=1, zorder=1)
        marker = "o" if tag == "delta" else "s"
        ax.scatter(xs, ys, s=sizes, marker=marker, color="tab:blue" if
                   tag == "delta" else "tab:red", zorder=2)
        ax.set_xlim(lo, hi)
        ax.set_ylim(lo, hi)
        ax.set_aspect("equal")
        greek = "\N{GREEK SMALL LETTER DELTA}" if tag == "delta" else \
            "\N{GREEK SMALL LETTER GAMMA}"
        ax.set_title(f"{greek}_{degree}")
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
