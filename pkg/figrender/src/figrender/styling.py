"""Checked-in styling table; look-and-feel lives in styles.json, not code."""

from __future__ import annotations

import json
from importlib import resources

import matplotlib

matplotlib.use("Agg")


def load_styles(overrides: dict | None = None) -> dict:
    table = json.loads((resources.files(__package__) / "styles.json").read_text())
    for key, value in (overrides or {}).items():
        table[key] = value
    return table


def apply_styles(styles: dict) -> None:
    matplotlib.rcParams.update(styles["rcparams"])


def color_for(styles: dict, index: int) -> str:
    cycle = styles["color_cycle"]
    return cycle[index % len(cycle)]


def line_style_for(styles: dict, branch: str) -> str:
    return styles["branch_styles"].get(branch, "solid")
