"""Standard parameter sweeps: drive the cfree CLI, then render the figures.

Sweep one: central-limit densities at fixed beta = 1 over six alphas that
cross the atom threshold.  Sweep two: Poisson densities at fixed alpha = 1
over six betas chosen so the nonzero atom starts right of the continuous
part, vanishes, and reappears on the left.
"""

from __future__ import annotations

import os
import subprocess

from .render import FigureSpec, PanelSpec, render_figures

GAUSSIAN_BETA = 1.0
GAUSSIAN_ALPHAS = (0.5, 1.0, 1.2, 1.5, 2.0, 3.0)
GAUSSIAN_GRID = "-4:4:641"

POISSON_ALPHA = 1.0
POISSON_BETAS = (0.2, 0.3, 1.0, 1.5, 3.0, 4.0)
POISSON_GRID = "-0.5:10:841"


def _emit_density(cli, family, alpha, beta, grid, out_path):
    subprocess.run(
        [
            cli,
            "density",
            family,
            "--alpha",
            str(alpha),
            "--beta",
            str(beta),
            "--grid=%s" % grid,
            "--out",
            out_path,
        ],
        check=True,
    )


def gaussian_sweep_spec(outdir: str, fmt: str = "png", cli: str = "cfree") -> FigureSpec:
    panels = []
    for alpha in GAUSSIAN_ALPHAS:
        csv_path = os.path.join(outdir, "gaussian_a%g.csv" % alpha)
        _emit_density(cli, "gaussian", alpha, GAUSSIAN_BETA, GAUSSIAN_GRID, csv_path)
        panels.append(PanelSpec("gaussian", alpha, GAUSSIAN_BETA, csv_path))
    return FigureSpec(
        panels=tuple(panels),
        out_path=os.path.join(outdir, "gaussian_sweep.%s" % fmt),
        title="central-limit law, beta=1",
    )


def poisson_sweep_spec(outdir: str, fmt: str = "png", cli: str = "cfree") -> FigureSpec:
    panels = []
    for beta in POISSON_BETAS:
        csv_path = os.path.join(outdir, "poisson_b%g.csv" % beta)
        _emit_density(cli, "poisson", POISSON_ALPHA, beta, POISSON_GRID, csv_path)
        panels.append(PanelSpec("poisson", POISSON_ALPHA, beta, csv_path))
    return FigureSpec(
        panels=tuple(panels),
        out_path=os.path.join(outdir, "poisson_sweep.%s" % fmt),
        title="Poisson law, alpha=1",
    )


def build_figures(outdir: str, fmt: str = "png", cli: str = "cfree"):
    """Generate both sweeps; returns the two metadata dicts."""
    os.makedirs(outdir, exist_ok=True)
    meta1 = render_figures(gaussian_sweep_spec(outdir, fmt, cli))
    meta2 = render_figures(poisson_sweep_spec(outdir, fmt, cli))
    return meta1, meta2
