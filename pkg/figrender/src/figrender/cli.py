"""render_figures: turn the spectrum CLI's CSV products into figures."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .panelspec import SpecError, load_spec
from .potential import render_potential_panels
from .spectrum import render_spectrum


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render potential-panel and spectrum figures from CSV products.",
    )
    parser.add_argument("--spec", required=True, help="render spec JSON path")
    args = parser.parse_args(argv)

    try:
        spec = load_spec(Path(args.spec))
        if spec.kind == "potential":
            res = render_potential_panels(spec)
            print(f"wrote {res.path} ({res.panels} panels, {res.series} curves)")
        else:
            res = render_spectrum(spec)
            print(f"wrote {res.path} ({res.points} points, {res.omitted} omitted)")
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
