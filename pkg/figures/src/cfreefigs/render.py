"""Render multi-panel density figures from cfree CSV + atom-sidecar files.

This package never recomputes any mathematics: it plots whatever grid the
CLI emitted and marks atoms from the sidecar as vertical double lines whose
height is proportional to the atom weight.  A metadata JSON written next to
each image records exactly what was drawn, which is what the tests assert.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

DENSITY_FLOOR = 1e-12


@dataclass(frozen=True)
class PanelSpec:
    family: str
    alpha: float
    beta: float
    csv_path: str
    atoms_path: Optional[str] = None

    def resolved_atoms_path(self) -> str:
        if self.atoms_path is not None:
            return self.atoms_path
        return os.path.splitext(self.csv_path)[0] + ".atoms.json"


@dataclass(frozen=True)
class FigureSpec:
    panels: tuple[PanelSpec, ...]
    out_path: str
    title: str = ""
    ncols: int = 3

    @classmethod
    def from_json(cls, text: str) -> "FigureSpec":
        data = json.loads(text)
        panels = tuple(
            PanelSpec(
                family=p["family"],
                alpha=float(p["alpha"]),
                beta=float(p["beta"]),
                csv_path=p["csv"],
                atoms_path=p.get("atoms"),
            )
            for p in data["panels"]
        )
        return cls(
            panels=panels,
            out_path=data["out"],
            title=data.get("title", ""),
            ncols=int(data.get("ncols", 3)),
        )


@dataclass(frozen=True)
class PanelData:
    ts: tuple[float, ...]
    densities: tuple[float, ...]
    atoms: tuple[tuple[float, float], ...]


def load_panel(panel: PanelSpec) -> PanelData:
    with open(panel.csv_path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().split("\n") if line]
    if not lines or lines[0] != "t,density":
        raise ValueError("%s: expected a 't,density' CSV header" % panel.csv_path)
    ts, ds = [], []
    for line in lines[1:]:
        cells = line.split(",")
        if len(cells) != 2:
            raise ValueError("%s: malformed row %r" % (panel.csv_path, line))
        ts.append(float(cells[0]))
        ds.append(float(cells[1]))
    if not ts:
        raise ValueError("%s: empty grid" % panel.csv_path)
    with open(panel.resolved_atoms_path(), "r", encoding="utf-8") as fh:
        sidecar = json.load(fh)
    atoms = tuple((float(a["location"]), float(a["weight"])) for a in sidecar["atoms"])
    return PanelData(tuple(ts), tuple(ds), atoms)


def atom_side(data: PanelData, location: float) -> str:
    """Where an atom sits relative to the positive-density region of the grid."""
    support = [t for t, d in zip(data.ts, data.densities) if d > DENSITY_FLOOR]
    if not support:
        return "isolated"
    if location < support[0]:
        return "left"
    if location > support[-1]:
        return "right"
    return "inside"


def _draw_panel(ax, panel: PanelSpec, data: PanelData):
    ax.plot(data.ts, data.densities, lw=1.2, color="#1f4e79")
    ymax = max(data.densities) if data.densities else 0.0
    wmax = max((w for _, w in data.atoms), default=0.0)
    scale = (ymax if ymax > DENSITY_FLOOR else 1.0) / wmax if wmax else 0.0
    span = (data.ts[-1] - data.ts[0]) or 1.0
    dx = 0.004 * span
    drawn = []
    for loc, w in data.atoms:
        height = w * scale
        for x in (loc - dx, loc + dx):
            ax.plot([x, x], [0.0, height], lw=1.0, color="#a02c2c")
        drawn.append(
            {
                "location": loc,
                "weight": w,
                "marker_height": height,
                "side": atom_side(data, loc),
            }
        )
    ax.set_title("alpha=%g, beta=%g" % (panel.alpha, panel.beta), fontsize=9)
    ax.set_xlabel("t", fontsize=8)
    ax.set_ylabel("density", fontsize=8)
    ax.tick_params(labelsize=7)
    ax.set_ylim(bottom=0.0)
    return drawn


def render_figures(spec: FigureSpec) -> dict:
    """Render the panels into one image; return (and write) the draw metadata."""
    if not spec.panels:
        raise ValueError("figure needs at least one panel")
    loaded = [(panel, load_panel(panel)) for panel in spec.panels]
    ncols = min(spec.ncols, len(spec.panels))
    nrows = (len(spec.panels) + ncols - 1) // ncols
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(3.2 * ncols, 2.6 * nrows), squeeze=False
    )
    metadata_panels = []
    for i, (panel, data) in enumerate(loaded):
        ax = axes[i // ncols][i % ncols]
        drawn = _draw_panel(ax, panel, data)
        metadata_panels.append(
            {
                "family": panel.family,
                "alpha": panel.alpha,
                "beta": panel.beta,
                "csv": panel.csv_path,
                "atoms_drawn": drawn,
            }
        )
    for j in range(len(loaded), nrows * ncols):
        axes[j // ncols][j % ncols].axis("off")
    if spec.title:
        fig.suptitle(spec.title)
    fig.tight_layout()
    fig.savefig(spec.out_path, dpi=130)
    plt.close(fig)
    metadata = {"figure": spec.out_path, "panels": metadata_panels}
    meta_path = os.path.splitext(spec.out_path)[0] + ".meta.json"
    with open(meta_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(json.dumps(metadata, sort_keys=True) + "\n")
    return metadata
