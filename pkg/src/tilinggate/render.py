"""File renderers: deterministic SVG for regions/tilings, report figures.

SVG coordinates come from the diagnostics float path (6 decimal digits,
10 px per side-length unit); feasibility is never decided here.
"""

from __future__ import annotations

from .tiler.frontier import PlacedTile, Region

SCALE = 10.0  # px per unit
MARGIN = 20.0

_FILLS = ("#c8c8ff", "#c8ffc8", "#ffc8c8", "#ffffc8")


def _xy(p) -> tuple[float, float]:
    return float(p.x), float(p.y)


def render_svg(region: Region, tiles: list[PlacedTile],
               labels: bool = False) -> str:
    """SVG document: region outline plus one polygon per placed tile."""
    pts = [_xy(p) for p in region.vertices]
    tris = [[_xy(v) for v in t.ccw_vertices()] for t in tiles]
    all_pts = pts + [v for tri in tris for v in tri]
    xmin = min(x for x, _ in all_pts)
    xmax = max(x for x, _ in all_pts)
    ymin = min(y for _, y in all_pts)
    ymax = max(y for _, y in all_pts)
    width = (xmax - xmin) * SCALE + 2 * MARGIN
    height = (ymax - ymin) * SCALE + 2 * MARGIN

    def to_canvas(x: float, y: float) -> str:
        cx = (x - xmin) * SCALE + MARGIN
        cy = (ymax - y) * SCALE + MARGIN  # y grows upward in the model
        return f"{cx:.6f},{cy:.6f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.6f}" height="{height:.6f}">',
    ]
    for i, tri in enumerate(tris):
        path = " ".join(to_canvas(x, y) for x, y in tri)
        fill = _FILLS[i % len(_FILLS)]
        lines.append(
            f'<polygon points="{path}" fill="{fill}" '
            'stroke="black" stroke-width="1"/>'
        )
    outline = " ".join(to_canvas(x, y) for x, y in pts)
    lines.append(
        f'<polygon points="{outline}" fill="none" '
        'stroke="black" stroke-width="2"/>'
    )
    if labels:
        for name, (x, y) in zip("ACB", pts):
            lines.append(
                f'<text x="{to_canvas(x, y).split(",")[0]}" '
                f'y="{to_canvas(x, y).split(",")[1]}" font-size="12">{name}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def report_figure(report, path: str) -> None:
    """Bar chart of per-shape minimum surviving N against documented bounds."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [s.shape.value for s in report.summaries]
    computed = [s.min_n if s.min_n is not None else 0 for s in report.summaries]
    reference = [s.reference_bound for s in report.summaries]
    fig, ax = plt.subplots(figsize=(9, 4.5))
    pos = range(len(names))
    ax.bar([p - 0.2 for p in pos], computed, width=0.4,
           label=f"smallest surviving N (nmax={report.nmax})", color="#5b8dd9")
    ax.bar([p + 0.2 for p in pos], reference, width=0.4,
           label="documented bound", color="#d9965b")
    ax.set_xticks(list(pos))
    ax.set_xticklabels(names, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("N")
    ax.legend(fontsize=8)
    ax.set_title("Smallest candidate N per shape of ABC")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
