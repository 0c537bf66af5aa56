"""Optional matplotlib renderings of a verification run.

Figures are a convenience view only; JSON/CSV remain the canonical output.
matplotlib is imported lazily so the rest of the package works without it.
"""

from __future__ import annotations

import os
from typing import List, Sequence

from .congruences import CheckResult


def render_figures(results: Sequence[CheckResult], outdir: str) -> List[str]:
    """Write a verdict matrix and a timing chart as PNG files.

    Returns the list of paths written.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    os.makedirs(outdir, exist_ok=True)
    written: List[str] = []

    ids = sorted({r.check_id for r in results})
    primes = sorted({r.prime for r in results})
    if ids and primes:
        grid = np.full((len(ids), len(primes)), np.nan)
        for r in results:
            i, j = ids.index(r.check_id), primes.index(r.prime)
            if r.passed is not None:
                grid[i, j] = 1.0 if r.passed else 0.0
        fig, ax = plt.subplots(
            figsize=(max(6, 0.28 * len(primes)), max(4, 0.22 * len(ids)))
        )
        cmap = matplotlib.colors.ListedColormap(["#c0392b", "#27ae60"])
        ax.imshow(grid, aspect="auto", cmap=cmap, vmin=0, vmax=1)
        ax.set_xticks(range(len(primes)))
        ax.set_xticklabels(primes, rotation=90, fontsize=6)
        ax.set_yticks(range(len(ids)))
        ax.set_yticklabels(ids, fontsize=6)
        ax.set_xlabel("prime")
        ax.set_title("verdicts (green pass, red fail, blank skip)")
        path = os.path.join(outdir, "verdicts.png")
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    if ids:
        totals = {i: 0.0 for i in ids}
        for r in results:
            totals[r.check_id] += r.elapsed * 1000.0
        fig, ax = plt.subplots(figsize=(8, max(4, 0.22 * len(ids))))
        ax.barh(range(len(ids)), [totals[i] for i in ids], color="#2c3e50")
        ax.set_yticks(range(len(ids)))
        ax.set_yticklabels(ids, fontsize=6)
        ax.invert_yaxis()
        ax.set_xlabel("total ms")
        ax.set_title("time per check across the prime sweep")
        path = os.path.join(outdir, "timings.png")
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)

    return written
