"""Energy-versus-angular-number figures with solid/dotted branch styling."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .output import save_figure
from .panelspec import PanelSpec, read_table, spectrum_records
from .styling import apply_styles, color_for, line_style_for, load_styles


@dataclass(frozen=True)
class SpectrumResult:
    path: Path
    points: int
    series: int
    omitted: int


def render_spectrum(spec: PanelSpec) -> SpectrumResult:
    """Valid rows as markers joined per (mass pair, branch); invalid rows counted."""
    table = read_table(spec.inputs[0])
    records = spectrum_records(table)
    valid = [r for r in records if r.energy is not None]
    omitted = len(records) - len(valid)

    # one color per mass pair, in file order; linestyle tells branches apart
    pair_order: list[tuple[float, float]] = []
    groups: dict[tuple[float, float, str], list] = {}
    for r in valid:
        pair = (r.m1, r.m2)
        if pair not in pair_order:
            pair_order.append(pair)
        groups.setdefault((r.m1, r.m2, r.branch), []).append(r)

    styles = load_styles(spec.styles)
    apply_styles(styles)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=styles["figsize"]["spectrum"])
    labeled = set()
    for (m1, m2, branch), rs in groups.items():
        rs = sorted(rs, key=lambda r: r.m)
        pair = (m1, m2)
        label = f"M1 = {m1:g}, M2 = {m2:g}"
        ax.plot(
            [r.m for r in rs], [r.energy for r in rs],
            color=color_for(styles, pair_order.index(pair)),
            linestyle=line_style_for(styles, branch),
            linewidth=styles["line_width"],
            marker=styles["marker"],
            markersize=styles["marker_size"],
            label=label if pair not in labeled else "_nolegend_",
        )
        labeled.add(pair)
    ax.set_xlabel(spec.axis_labels["x"])
    ax.set_ylabel(spec.axis_labels["y"])
    if valid:
        ax.set_xticks(sorted({r.m for r in valid}))
        ax.legend(fontsize=8)
        if omitted:
            ax.text(
                0.02, 0.98, f"{omitted} not allowed",
                transform=ax.transAxes, va="top", fontsize=8,
            )
    else:
        ax.text(0.5, 0.5, "0 allowed states", transform=ax.transAxes, ha="center")

    title = spec.title
    if title is None:
        label = table.meta.get("label")
        level = table.meta.get("n")
        if label is not None:
            title = str(label) if level is None else f"{label} (n = {level})"
    if title:
        ax.set_title(title)
    fig.tight_layout()
    try:
        save_figure(fig, spec.output, spec.format)
    finally:
        plt.close(fig)
    return SpectrumResult(
        path=spec.output, points=len(valid), series=len(groups), omitted=omitted
    )
