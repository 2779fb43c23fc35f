"""Figure renderer for helix-spectra CSV products.

Reads the CSV + .meta.json files the spectrum CLI writes and renders SVG/PNG
figures; it never computes physics, every plotted number is a CSV cell.
"""

from .panelspec import PanelSpec, SpecError, load_spec
from .potential import PanelsResult, render_potential_panels
from .spectrum import SpectrumResult, render_spectrum

__all__ = [
    "PanelSpec",
    "PanelsResult",
    "SpecError",
    "SpectrumResult",
    "load_spec",
    "render_potential_panels",
    "render_spectrum",
]
