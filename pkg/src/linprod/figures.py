"""Matplotlib renderings of report payloads (Agg backend, files only)."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_META = {"Software": None}  # keep PNG metadata free of version strings


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path


def _ink(v, top) -> str:
    return "white" if v > 0.6 * top else "black"


def betti_heatmap(table: dict, path: str, title: str = "Betti table") -> str:
    """Betti table as a heat map: columns are homological degrees, rows are degree - k."""
    cells = {}
    for e in table["entries"]:
        key = (sum(e["degree"]) - e["k"], e["k"])
        cells[key] = cells.get(key, 0) + e["rank"]
    rows = sorted({i for i, _ in cells}) or [0]
    cols = sorted({k for _, k in cells}) or [0]
    grid = [[cells.get((i, k), 0) for k in cols] for i in rows]
    top = max(max(r) for r in grid) or 1
    fig, ax = plt.subplots(figsize=(max(3.6, 1.2 + 0.6 * len(cols)), 1.4 + 0.5 * len(rows)))
    ax.imshow(grid, cmap="Blues", aspect="auto", vmin=0)
    for a, i in enumerate(rows):
        for b, k in enumerate(cols):
            v = grid[a][b]
            if v:
                ax.text(b, a, str(v), ha="center", va="center", fontsize=9, color=_ink(v, top))
    ax.set_xticks(range(len(cols)), [str(k) for k in cols])
    ax.set_yticks(range(len(rows)), [str(i) for i in rows])
    ax.set_xlabel("k")
    ax.set_ylabel("degree - k")
    ax.set_title(title, fontsize=10)
    return _save(fig, path)


def tally_bars(tally: dict, path: str, title: str = "defining ideal generators") -> str:
    keys = sorted(tally)
    fig, ax = plt.subplots(figsize=(max(3.0, 0.7 * len(keys) + 1), 2.8))
    ax.bar(range(len(keys)), [tally[k] for k in keys], color="#4c72b0")
    ax.set_xticks(range(len(keys)), [f"({k})" for k in keys], rotation=30)
    ax.set_ylabel("count")
    ax.set_title(title, fontsize=10)
    return _save(fig, path)


def verdict_chart(verdicts: dict, path: str, title: str = "verdicts") -> str:
    names = sorted(verdicts)
    colors = {"pass": "#55a868", "fail": "#c44e52", "skipped": "#bbbbbb"}
    fig, ax = plt.subplots(figsize=(5.5, 0.35 * len(names) + 1.0))
    for i, name in enumerate(names):
        ax.barh(i, 1, color=colors[verdicts[name]["status"]])
        ax.text(0.02, i, f"{name}: {verdicts[name]['status']}", va="center", fontsize=8)
    ax.set_yticks([])
    ax.set_xticks([])
    ax.set_xlim(0, 1)
    ax.invert_yaxis()
    ax.set_title(title, fontsize=10)
    return _save(fig, path)


def exponent_grid(e: dict, n: int, path: str, title: str = "e_ub(S)") -> str:
    """Exponents ``e_ub`` on the (u, b) grid; cells with u + b > n + 1 stay blank."""
    grid = [[float("nan")] * n for _ in range(n)]
    for key, v in e.items():
        u, b = (int(x) for x in key.split(","))
        grid[u - 1][b - 1] = v
    top = max((v for v in e.values()), default=1) or 1
    fig, ax = plt.subplots(figsize=(max(3.2, 1.0 + 0.6 * n), max(3.2, 1.0 + 0.6 * n)))
    ax.imshow(grid, cmap="Oranges", vmin=0)
    for u in range(n):
        for b in range(n):
            v = grid[u][b]
            if v == v:
                ax.text(b, u, str(int(v)), ha="center", va="center", fontsize=9, color=_ink(v, top))
    ax.set_xticks(range(n), [str(b + 1) for b in range(n)])
    ax.set_yticks(range(n), [str(u + 1) for u in range(n)])
    ax.set_xlabel("b")
    ax.set_ylabel("u")
    ax.set_title(title, fontsize=10)
    return _save(fig, path)
