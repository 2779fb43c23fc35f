"""Render-spec loading and CSV table access.

Everything that can go wrong is checked here, before any figure exists, so a
bad spec or a mismatched table never leaves a file behind.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

SERIES_COLUMN = re.compile(r"^veff_m(\d+)$")
SPECTRUM_COLUMNS = [
    "m1", "m2", "m", "n", "branch", "energy", "frequency", "x",
    "x_real", "frequency_positive", "discriminant_real", "nondegenerate_x",
]

_SPEC_KEYS = {"kind", "inputs", "layout", "axis_labels", "title", "output", "format", "styles"}
_STYLE_KEYS = {"rcparams", "figsize", "color_cycle", "branch_styles", "line_width", "marker", "marker_size"}
_KINDS = ("potential", "spectrum")
_FORMATS = ("svg", "png")
_DEFAULT_LAYOUT = {"potential": (2, 2), "spectrum": (1, 1)}
_DEFAULT_LABELS = {
    "potential": {"x": "rho", "y": "effective potential"},
    "spectrum": {"x": "m", "y": "energy"},
}


class SpecError(Exception):
    """Bad render spec or input table; maps to exit code 2."""


@dataclass(frozen=True)
class PanelSpec:
    kind: str
    inputs: tuple[Path, ...]
    layout: tuple[int, int]
    axis_labels: dict
    title: Optional[str]
    output: Path
    format: str
    styles: dict


def load_spec(path: Path) -> PanelSpec:
    """Parse and validate a render spec; raises SpecError on any problem."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SpecError(f"cannot read spec: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SpecError("spec must be a JSON object")
    unknown = set(raw) - _SPEC_KEYS
    if unknown:
        raise SpecError(f"unknown spec keys: {sorted(unknown)}")

    kind = raw.get("kind")
    if kind not in _KINDS:
        raise SpecError(f"kind must be one of {list(_KINDS)}")
    inputs = raw.get("inputs")
    if not isinstance(inputs, list) or not inputs or not all(isinstance(s, str) for s in inputs):
        raise SpecError("inputs must be a nonempty list of CSV paths")
    if kind == "spectrum" and len(inputs) != 1:
        raise SpecError("spectrum takes exactly one input CSV")
    paths = tuple(Path(s) for s in inputs)
    for p in paths:
        if not p.is_file():
            raise SpecError(f"input not found: {p}")

    layout = raw.get("layout", list(_DEFAULT_LAYOUT[kind]))
    if (
        not isinstance(layout, list) or len(layout) != 2
        or not all(isinstance(v, int) and v >= 1 for v in layout)
    ):
        raise SpecError("layout must be [rows, cols] with positive integers")
    rows, cols = layout
    if rows * cols < len(paths):
        raise SpecError(f"layout {rows}x{cols} cannot hold {len(paths)} inputs")

    labels = dict(_DEFAULT_LABELS[kind])
    given = raw.get("axis_labels", {})
    if not isinstance(given, dict) or set(given) - {"x", "y"}:
        raise SpecError('axis_labels must be an object with keys "x"/"y"')
    labels.update({k: str(v) for k, v in given.items()})

    title = raw.get("title")
    if title is not None and not isinstance(title, str):
        raise SpecError("title must be a string")

    out = raw.get("output")
    if not isinstance(out, str) or not out:
        raise SpecError("output path is required")
    output = Path(out)
    fmt = raw.get("format", output.suffix.lstrip(".").lower() or "svg")
    if fmt not in _FORMATS:
        raise SpecError(f"format must be one of {list(_FORMATS)}")

    styles = raw.get("styles", {})
    if not isinstance(styles, dict) or set(styles) - _STYLE_KEYS:
        raise SpecError(f"styles keys must be among {sorted(_STYLE_KEYS)}")

    return PanelSpec(
        kind=kind, inputs=paths, layout=(rows, cols), axis_labels=labels,
        title=title, output=output, format=fmt, styles=styles,
    )


@dataclass(frozen=True)
class Table:
    path: Path
    header: list[str]
    rows: list[list[Optional[str]]]
    meta: dict


def read_table(path: Path) -> Table:
    """CSV plus its metadata sidecar; blank cells become None."""
    with open(path, newline="") as fh:
        records = list(csv.reader(fh))
    if not records:
        raise SpecError(f"{path.name}: empty file")
    header, data = records[0], records[1:]
    if not data:
        raise SpecError(f"{path.name}: no data rows")
    width = len(header)
    rows = []
    for i, rec in enumerate(data, start=2):
        if len(rec) != width:
            raise SpecError(f"{path.name}: row {i} has {len(rec)} cells, expected {width}")
        rows.append([cell if cell != "" else None for cell in rec])

    meta_path = path.with_suffix(".meta.json")
    try:
        meta = json.loads(meta_path.read_text())
    except OSError as exc:
        raise SpecError(f"missing metadata sidecar: {meta_path}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{meta_path.name}: not valid JSON") from exc
    return Table(path=path, header=header, rows=rows, meta=meta)


def _float(table: Table, row: int, col: int) -> float:
    cell = table.rows[row][col]
    try:
        return float(cell)  # None rejects too
    except (TypeError, ValueError):
        raise SpecError(
            f"{table.path.name}: cell ({row + 2}, {table.header[col]}) is not a number"
        ) from None


def potential_series(table: Table) -> tuple[list[float], list[tuple[int, list[float]]]]:
    """(rho values, [(m, curve values)...]) from a potential-profile table."""
    if not table.header or table.header[0] != "rho":
        raise SpecError(f"{table.path.name}: first column must be rho")
    ms = []
    for name in table.header[1:]:
        hit = SERIES_COLUMN.match(name)
        if hit is None:
            raise SpecError(f"{table.path.name}: unexpected column {name!r}")
        ms.append(int(hit.group(1)))
    if not ms:
        raise SpecError(f"{table.path.name}: no veff_m columns")
    rho = [_float(table, i, 0) for i in range(len(table.rows))]
    curves = [
        (m, [_float(table, i, j) for i in range(len(table.rows))])
        for j, m in enumerate(ms, start=1)
    ]
    return rho, curves


@dataclass(frozen=True)
class SpectrumRow:
    m1: float
    m2: float
    m: int
    branch: Optional[str]
    energy: Optional[float]


def spectrum_records(table: Table) -> list[SpectrumRow]:
    """Typed rows from a spectrum table; blank energy marks a disallowed state."""
    if table.header != SPECTRUM_COLUMNS:
        raise SpecError(
            f"{table.path.name}: header does not match the spectrum schema"
        )
    out = []
    for i, row in enumerate(table.rows):
        energy = None if row[5] is None else _float(table, i, 5)
        out.append(SpectrumRow(
            m1=_float(table, i, 0),
            m2=_float(table, i, 1),
            m=int(_float(table, i, 2)),
            branch=row[4],
            energy=energy,
        ))
    return out
