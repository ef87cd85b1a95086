"""Plot rendering for the fraction table."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .combinatorics import FractionRow


def render_fraction_plot(rows: Sequence[FractionRow], path: str | Path) -> None:
    """Render the log10 fraction against domain size, one line per codomain size.

    Uses the Agg backend with volatile PNG metadata stripped, so
    rendering the same rows twice gives byte-identical files.
    """
    if not rows:
        raise ValueError("no rows to plot")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_y: dict[int, list[FractionRow]] = {}
    for row in rows:
        by_y.setdefault(row.y_size, []).append(row)
    fig, ax = plt.subplots(figsize=(6.4, 4.8), dpi=100)
    for y in sorted(by_y):
        cells = sorted(by_y[y], key=lambda r: r.x_size)
        ax.plot(
            [c.x_size for c in cells],
            [c.fraction.log10_value for c in cells],
            marker="o",
            label=f"codomain size {y}",
        )
    ax.set_xlabel("domain size")
    ax.set_ylabel("log10 fraction of subsets closed under permutation")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.savefig(path, format="png", metadata={"Software": None})
    plt.close(fig)
