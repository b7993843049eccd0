"""Figure renderer for cfree density grids and atom sidecars."""

from .render import FigureSpec, PanelData, PanelSpec, atom_side, load_panel, render_figures
from .sweep import build_figures, gaussian_sweep_spec, poisson_sweep_spec

__version__ = "0.1.0"
