"""CSV and sidecar-metadata writers.

Every table the command line emits goes through ``write_csv`` so the on-disk
contract stays in one place: snake_case headers, 17 significant digits for
floats, booleans as ``true``/``false``, blanks for missing values, ``\\n``
line endings, and an atomic rename so a crash never leaves a half-written
file.  Each ``name.csv`` gets a ``name.meta.json`` sidecar recording the
inputs that produced it.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Mapping, Sequence

FLOAT_FORMAT = ".17g"


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:{FLOAT_FORMAT}}"
    return str(value)


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def meta_path_for(csv_path: Path) -> Path:
    return csv_path.parent / (csv_path.stem + ".meta.json")


def write_csv(
    path: Path,
    header: Sequence[str],
    rows: Sequence[Sequence[Any]],
    meta: Mapping[str, Any],
) -> Path:
    """Write rows + header to ``path`` and the run metadata to the sidecar.

    Returns the sidecar path.  Cells are formatted by ``format_cell``; every
    row must match the header width.
    """
    path = Path(path)
    for i, row in enumerate(rows):
        if len(row) != len(header):
            raise ValueError(f"row {i} has {len(row)} cells, header has {len(header)}")
    lines = [",".join(header)]
    lines.extend(",".join(format_cell(c) for c in row) for row in rows)
    _atomic_write(path, "\n".join(lines) + "\n")
    side = meta_path_for(path)
    _atomic_write(side, json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return side
