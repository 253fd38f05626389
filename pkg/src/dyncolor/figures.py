"""Figure rendering for benchmark output.

Every CSV the CLI writes can be rendered to a PNG sitting next to it. The
CSV stays the contract; figures are a convenience view of the same rows and
carry no extra data.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .metrics import read_csv


def _cols(columns, rows) -> dict[str, np.ndarray]:
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        arr = np.zeros((0, len(columns)), dtype=np.int64)
    return {name: arr[:, i] for i, name in enumerate(columns)}


def render(columns, rows, out_png: str, title: str = "") -> str:
    c = _cols(columns, rows)
    step = c["step"]
    if "max_bin" in c:
        fig, ax = plt.subplots(figsize=(7, 3.2), dpi=110)
        ax.plot(step, c["max_bin"], lw=0.8, color="tab:blue")
        ax.set_xlabel("turn")
        ax.set_ylabel("max bin after placing")
        ax.set_title(title or "balls and bins")
    elif "layer_moves" in c:
        fig, axes = plt.subplots(1, 3, figsize=(12, 3.4), dpi=110)
        axes[0].plot(step, np.cumsum(c["flips"]), label="flips", lw=1)
        axes[0].plot(step, np.cumsum(c["layer_moves"]), label="layer moves", lw=1)
        axes[0].plot(step, np.cumsum(c["recolorings"]), label="recolorings", lw=1)
        axes[0].legend(fontsize=8)
        axes[0].set_xlabel("update")
        axes[0].set_ylabel("cumulative")
        axes[1].plot(step, c["max_layer"], lw=1, color="tab:orange")
        axes[1].set_xlabel("update")
        axes[1].set_ylabel("max layer")
        axes[2].plot(step, c["colors_in_use"], lw=1, color="tab:green")
        axes[2].set_xlabel("update")
        axes[2].set_ylabel("colors in use")
        fig.suptitle(title or "layered engine")
    else:
        fig, axes = plt.subplots(1, 3, figsize=(12, 3.4), dpi=110)
        axes[0].plot(step, np.cumsum(c["recolorings"]), lw=1, color="tab:blue",
                     label="recolorings")
        if "flips" in c:
            axes[0].plot(step, np.cumsum(c["flips"]), lw=1, color="tab:red",
                         label="orientation flips")
            axes[0].legend(fontsize=8)
        axes[0].set_xlabel("update")
        axes[0].set_ylabel("cumulative recolorings")
        axes[1].plot(step, c["colors_in_use"], lw=1, color="tab:green")
        axes[1].set_xlabel("update")
        axes[1].set_ylabel("colors in use")
        axes[2].plot(step, c["gprime_maxdeg"], lw=1, color="tab:purple")
        axes[2].set_xlabel("update")
        axes[2].set_ylabel("residual graph max degree")
        fig.suptitle(title or "interval engine")
    fig.tight_layout()
    fig.savefig(out_png)
    plt.close(fig)
    return out_png


def render_csv(csv_path: str, out_png: str | None = None, title: str = "") -> str:
    columns, rows = read_csv(csv_path)
    if out_png is None:
        out_png = os.path.splitext(csv_path)[0] + ".png"
    return render(columns, rows, out_png, title=title or os.path.basename(csv_path))
