"""Figures written next to the CLI's reports (PNG, headless backend)."""

from __future__ import annotations

import math
import os
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .cuts import GomoryHuTree  # noqa: E402
from .embedding import Provenance  # noqa: E402
from .graph import Multigraph  # noqa: E402
from .report import FAIL, PASS, VerificationReport  # noqa: E402

VERDICT_COLORS = {PASS: "#2b8a3e", FAIL: "#c92a2a"}
UNKNOWN_COLOR = "#868e96"


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def layout(G: Multigraph, provenance: Provenance | None = None) -> list[tuple[float, float]]:
    """Blocks on a large circle, each block's vertices on a small one.

    Without provenance every vertex goes on one circle.
    """
    pos = [(0.0, 0.0)] * G.n
    groups = [list(b.vertices) for b in provenance.blocks] if provenance and provenance.blocks else []
    placed = {v for grp in groups for v in grp}
    loose = [v for v in range(G.n) if v not in placed]
    if loose:
        groups.append(loose)
    if len(groups) == 1:
        grp = groups[0]
        return [(math.cos(2 * math.pi * grp.index(v) / len(grp)), math.sin(2 * math.pi * grp.index(v) / len(grp)))
                if v in grp else (0.0, 0.0) for v in range(G.n)]
    big = 3.0
    for gi, grp in enumerate(groups):
        cx = big * math.cos(2 * math.pi * gi / len(groups))
        cy = big * math.sin(2 * math.pi * gi / len(groups))
        r = 0.25 + 0.05 * len(grp) ** 0.5
        for i, v in enumerate(grp):
            a = 2 * math.pi * i / len(grp)
            pos[v] = (cx + r * math.cos(a), cy + r * math.sin(a))
    return pos


def plot_graph(G: Multigraph, path: str, provenance: Provenance | None = None, title: str = "") -> str:
    """Draw ``G``; line width grows with edge multiplicity."""
    pos = layout(G, provenance)
    fig, ax = plt.subplots(figsize=(7, 7))
    for (a, b), mu in sorted(G.multiplicity.items()):
        (x1, y1), (x2, y2) = pos[a], pos[b]
        ax.plot([x1, x2], [y1, y2], color="#495057", lw=0.6 + 0.8 * (mu - 1), alpha=0.7, zorder=1)
    xs, ys = zip(*pos) if pos else ((), ())
    ax.scatter(xs, ys, s=18, color="#1c7ed6", zorder=2)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title or f"n={G.n}, m={G.m}")
    return _save(fig, path)


def plot_checks(report: VerificationReport, path: str) -> str:
    """One row per check, coloured by verdict."""
    checks = report.checks
    fig, ax = plt.subplots(figsize=(8, 0.45 * max(len(checks), 1) + 1))
    for i, c in enumerate(checks):
        ax.barh(i, 1, color=VERDICT_COLORS.get(c.verdict, UNKNOWN_COLOR))
        ax.text(0.02, i, f"{c.verdict}: {c.claim}", va="center", color="white", fontsize=8)
    ax.set_yticks([])
    ax.set_xticks([])
    ax.invert_yaxis()
    ax.set_xlim(0, 1)
    ax.set_title(", ".join(f"{k}={v}" for k, v in report.graph.items() if v is not None))
    return _save(fig, path)


def plot_cut_profile(tree: GomoryHuTree, path: str, title: str = "") -> str:
    """Histogram of Gomory-Hu tree capacities, odd and even sides separately."""
    odd, even = Counter(), Counter()
    for v in range(1, tree.n):
        (odd if len(tree.subtree(v)) % 2 else even)[tree.capacity[v]] += 1
    values = sorted(set(odd) | set(even))
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar([x - 0.2 for x in values], [odd[x] for x in values], width=0.4, label="odd side")
    ax.bar([x + 0.2 for x in values], [even[x] for x in values], width=0.4, label="even side")
    ax.set_xlabel("cut value")
    ax.set_ylabel("tree edges")
    ax.set_xticks(values)
    ax.legend()
    ax.set_title(title or "Gomory-Hu cut values")
    return _save(fig, path)
