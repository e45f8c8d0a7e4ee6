"""Figure rendering for scan reports.

One figure per report: value growth (bit length per exponent, colored by
primality) on top, the claim outcome grid underneath.  Written next to
the delimited report when the CLI is asked to plot.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D

_STATUS_COLORS = {"pass": "#2a9d4e", "fail": "#d62728", "na": "#b8b8b8"}
_PRIMALITY_COLORS = {"prime": "#1f77b4", "probable": "#9467bd",
                     "composite": "#b8b8b8"}


def render_report(report, path, dpi=150):
    """Render a report to an image file; returns the path."""
    records = list(report.records)
    fig, (ax_bits, ax_claims) = plt.subplots(
        2, 1, figsize=(10, 7), sharex=True,
        gridspec_kw={"height_ratios": [2, 1]},
    )
    family = report.params.get("family", "scan")
    fig.suptitle(f"{family} scan, d={report.params.get('d', '?')}, "
                 f"verdict: {report.verdict()}")

    if records:
        ps = [r.p for r in records]
        bits = [max(r.value.bit_length(), 1) for r in records]
        ax_bits.plot(ps, bits, color="#cccccc", lw=1, zorder=1)
        for r in records:
            ax_bits.scatter(
                [r.p], [max(r.value.bit_length(), 1)],
                color=_PRIMALITY_COLORS[r.primality.verdict.value],
                s=28, zorder=2,
            )
        claim_ids = sorted({c.id for r in records for c in r.claims})
        for row, cid in enumerate(claim_ids):
            for r in records:
                for c in r.claims:
                    if c.id == cid:
                        ax_claims.scatter(
                            [r.p], [row], marker="s", s=48,
                            color=_STATUS_COLORS[c.status],
                        )
        ax_claims.set_yticks(range(len(claim_ids)))
        ax_claims.set_yticklabels(claim_ids, fontsize=8)
        ax_claims.set_ylim(-0.7, len(claim_ids) - 0.3)
        ax_claims.set_xticks(ps)
        ax_claims.tick_params(axis="x", rotation=90, labelsize=7)

    ax_bits.set_ylabel("value bit length")
    ax_claims.set_xlabel("exponent p")
    ax_bits.legend(
        handles=[
            Line2D([], [], marker="o", ls="", color=c, label=k)
            for k, c in _PRIMALITY_COLORS.items()
        ],
        loc="upper left", fontsize=8,
    )
    ax_claims.legend(
        handles=[
            Line2D([], [], marker="s", ls="", color=c, label=k)
            for k, c in _STATUS_COLORS.items()
        ],
        loc="upper left", fontsize=8,
    )
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path
