"""Atomic figure writing; a failed render never leaves a partial file."""

from __future__ import annotations

import os
from pathlib import Path


def save_figure(fig, path: Path, fmt: str) -> None:
    path = Path(path)
    if path.parent != Path("") and not path.parent.exists():
        path.parent.mkdir(parents=True)
    tmp = path.with_name(path.name + ".tmp")
    # dropping the Date field keeps SVG output byte-identical across runs
    metadata = {"Date": None} if fmt == "svg" else None
    try:
        fig.savefig(tmp, format=fmt, metadata=metadata)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise
    os.replace(tmp, path)
