"""Optional figure rendering for census reports (Agg backend, file output)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .census import CensusReport


def plot_richness_histogram(report: CensusReport, path: str) -> str:
    """Bar chart of the pencil-richness histogram, written to `path`."""
    keys = sorted(report.histogram)
    counts = [report.histogram[k] for k in keys]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar([str(k) for k in keys], counts, color="#3465a4")
    ax.set_xlabel("spheres per pencil (richness k)")
    ax.set_ylabel("number of pencils")
    ax.set_title(
        f"pencil richness, n = {report.n}, field {report.field_spec}, "
        f"{report.contact_pairs} contact pairs"
    )
    ax.set_yscale("log" if counts and max(counts) > 50 * max(1, min(counts)) else "linear")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path
