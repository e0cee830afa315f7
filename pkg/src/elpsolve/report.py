"""Generator-comparison experiment on the propagation family.

For each family size n and each generator tier the solver is run to
completion, and the candidate/tester counts land in a CSV next to two
rendered figures: candidates per instance (the exponential-versus-constant
separation) and wall-clock time.  This is the report path behind
``elpsolve --report DIR``.
"""

from __future__ import annotations

import csv
import time
from pathlib import Path

from .family import propagation_family
from .solver import SolverConfig, solve
from .transform import GeneratorKind

GENERATOR_ORDER = (GeneratorKind.TESTER, GeneratorKind.BASIC, GeneratorKind.PROPAGATING)

_FIELDS = (
    "n",
    "generator",
    "candidates",
    "tests_run",
    "tests_skipped",
    "worldviews",
    "tester_calls",
    "seconds",
)


def run_family_experiment(max_n: int, generators=GENERATOR_ORDER) -> list[dict]:
    """Solve every family instance up to max_n with each generator."""
    if max_n < 1:
        raise ValueError("--report-max-n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        program = propagation_family(n)
        for kind in generators:
            config = SolverConfig(generator=kind, max_worldviews=None)
            start = time.perf_counter()
            _, stats = solve(program, config)
            elapsed = time.perf_counter() - start
            rows.append(
                {
                    "n": n,
                    "generator": kind.value,
                    "candidates": stats.candidates,
                    "tests_run": stats.tests_run,
                    "tests_skipped": stats.tests_skipped,
                    "worldviews": stats.worldviews,
                    "tester_calls": stats.tester_calls,
                    "seconds": round(elapsed, 6),
                }
            )
    return rows


def write_family_report(out_dir: str, max_n: int = 10) -> list[Path]:
    """Write report.csv, candidates.png and runtime.png into out_dir."""
    rows = run_family_experiment(max_n)
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)

    csv_path = directory / "report.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=_FIELDS)
        writer.writeheader()
        writer.writerows(rows)

    figures = _render_figures(rows, directory)
    return [csv_path, *figures]


def _render_figures(rows: list[dict], directory: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_generator: dict[str, list[dict]] = {}
    for row in rows:
        by_generator.setdefault(row["generator"], []).append(row)

    paths = []
    for filename, field, ylabel, log in (
        ("candidates.png", "candidates", "candidates tested", True),
        ("runtime.png", "seconds", "wall-clock time (s)", False),
    ):
        fig, ax = plt.subplots(figsize=(6, 4))
        for name, entries in sorted(by_generator.items()):
            entries = sorted(entries, key=lambda r: r["n"])
            ax.plot(
                [r["n"] for r in entries],
                [r[field] for r in entries],
                marker="o",
                label=name,
            )
        if log:
            ax.set_yscale("log", base=2)
        ax.set_xlabel("family size n")
        ax.set_ylabel(ylabel)
        ax.legend(title="generator")
        ax.grid(True, linestyle=":", alpha=0.6)
        fig.tight_layout()
        path = directory / filename
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)
    return paths
