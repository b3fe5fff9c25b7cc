"""Optional figure rendering for sweep output.

Matplotlib is imported inside the render call (with the Agg backend) so the
rest of the package never pays for it and headless use just works.
"""
from __future__ import annotations

import math


def render_sweep_figure(records, path) -> None:
    """Render measured-vs-predicted limits as a function of alpha.

    ``records`` is an iterable of dicts with keys alpha, tau, N, p and
    predicted (predicted may be None when no single limit is claimed).  For
    each tau the measured series keeps only the largest N per alpha.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    best: dict = {}
    predicted: dict = {}
    for rec in records:
        key = (rec["tau"], rec["alpha"])
        if key not in best or rec["N"] > best[key][0]:
            best[key] = (rec["N"], rec["p"])
        predicted[key] = rec["predicted"]

    taus = sorted({tau for tau, _ in best})
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    colors = plt.rcParams["axes.prop_cycle"].by_key()["color"]
    for i, tau in enumerate(taus):
        color = colors[i % len(colors)]
        alphas = sorted(a for t, a in best if t == tau)
        measured = [best[(tau, a)][1] for a in alphas]
        ax.plot(alphas, measured, "o", color=color, markersize=4,
                label=f"measured, tau = {tau:g}")
        pred_pts = [(a, predicted[(tau, a)]) for a in alphas
                    if predicted[(tau, a)] is not None]
        if pred_pts:
            xs = [a for a, _ in pred_pts]
            ys = [p for _, p in pred_pts]
            ax.step(xs, ys, where="mid", color=color, alpha=0.6, linewidth=1.2,
                    label=f"predicted, tau = {tau:g}")
    ax.set_xlabel("scaling exponent alpha")
    ax.set_ylabel("survival product at largest N")
    ax.set_ylim(-0.05, 1.05)
    if not math.isnan(ax.get_xlim()[0]):
        ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
