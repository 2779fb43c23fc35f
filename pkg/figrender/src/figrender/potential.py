"""Potential-profile panel figures, one curve per angular number."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .output import save_figure
from .panelspec import PanelSpec, potential_series, read_table
from .styling import apply_styles, color_for, load_styles


@dataclass(frozen=True)
class PanelsResult:
    path: Path
    panels: int
    series: int


def render_potential_panels(spec: PanelSpec) -> PanelsResult:
    """One panel per input table, laid out on the spec's grid."""
    tables = [read_table(p) for p in spec.inputs]
    parsed = [potential_series(t) for t in tables]  # validates before any write

    styles = load_styles(spec.styles)
    apply_styles(styles)
    import matplotlib.pyplot as plt

    rows, cols = spec.layout
    fig, axes = plt.subplots(rows, cols, figsize=styles["figsize"]["potential"], squeeze=False)
    flat = list(axes.flat)
    series = 0
    for ax, table, (rho, curves) in zip(flat, tables, parsed):
        for m, values in curves:
            ax.plot(
                rho, values,
                color=color_for(styles, m),
                linewidth=styles["line_width"],
                label=f"m = {m}",
            )
            series += 1
        ax.set_xlabel(spec.axis_labels["x"])
        ax.set_ylabel(spec.axis_labels["y"])
        ax.set_title(table.path.stem, fontsize=9)
        ax.legend(fontsize=8)
    for ax in flat[len(tables):]:
        ax.set_axis_off()
    if spec.title:
        fig.suptitle(spec.title)
    fig.tight_layout()
    try:
        save_figure(fig, spec.output, spec.format)
    finally:
        plt.close(fig)
    return PanelsResult(path=spec.output, panels=len(tables), series=series)
