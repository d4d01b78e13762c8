#!/usr/bin/env python3
"""Render a landscape.csv produced by `maxkcut landscape` as a heatmap.

Usage: python3 scripts/plot_landscape.py out/landscape.csv [plot.png]
"""
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def main() -> None:
    src = sys.argv[1] if len(sys.argv) > 1 else "landscape.csv"
    dst = sys.argv[2] if len(sys.argv) > 2 else src.replace(".csv", ".png")
    with open(src) as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#") and r[0] != "gamma"]
    gamma, beta, energy = (np.array([float(r[i]) for r in rows]) for i in range(3))
    gs, bs = np.unique(gamma), np.unique(beta)
    grid = energy.reshape(len(gs), len(bs))

    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.pcolormesh(bs, gs, grid, shading="nearest", cmap="viridis")
    fig.colorbar(im, ax=ax, label="energy")
    i, j = np.unravel_index(np.argmin(grid), grid.shape)
    ax.plot(bs[j], gs[i], "r*", markersize=12, label=f"min {grid[i, j]:.4f}")
    ax.set_xlabel(r"$\beta$")
    ax.set_ylabel(r"$\gamma$")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(dst, dpi=150)
    print(f"wrote {dst}")


if __name__ == "__main__":
    main()
