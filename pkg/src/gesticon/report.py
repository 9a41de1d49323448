"""Rendering of evaluation reports: text table, CSV, JSON and figures.

The figure pair mirrors what the evaluation measures: a manual-vs-auto
rating scatter with the tolerance band, and a bar chart of how many
targets matched in each retrieval round.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .assigner import Assigned, AssignmentResult
from .evaluation import EvalReport


def round_counts(assignments: list[tuple[str, AssignmentResult]]) -> dict[int, int]:
    """Number of assigned targets per retrieval round."""
    counts = Counter(
        result.round_index for _, result in assignments if isinstance(result, Assigned)
    )
    return dict(sorted(counts.items()))


def format_accuracy(report: EvalReport) -> str:
    if report.accuracy is None:
        return "undefined (no scored items)"
    return f"{report.accuracy * 100:.4f}% ({report.n_correct}/{report.n_scored})"


def render_text(report: EvalReport, rounds: dict[int, int] | None = None) -> str:
    """Human-readable per-item table plus summary lines."""
    lines = [f"{'gesture_id':<20} {'manual':>7} {'auto':>7}  status"]
    for item in report.per_item:
        if item.correct is None:
            auto, status = "-", "excluded"
        else:
            auto = f"{item.auto:.2f}"
            status = "correct" if item.correct else "incorrect"
        lines.append(f"{item.gesture_id:<20} {item.manual:>7.2f} {auto:>7}  {status}")
    lines.append("")
    lines.append(f"targets:    {report.n_targets}")
    lines.append(f"unassigned: {report.n_unassigned}")
    lines.append(f"scored:     {report.n_scored}")
    lines.append(f"correct:    {report.n_correct} (tolerance {report.tolerance:g})")
    if rounds:
        per_round = ", ".join(f"round {r}: {n}" for r, n in rounds.items())
        lines.append(f"matched by round: {per_round}")
    lines.append(f"accuracy:   {format_accuracy(report)}")
    return "\n".join(lines) + "\n"


def report_to_json(report: EvalReport, rounds: dict[int, int] | None = None) -> str:
    doc = {
        "n_targets": report.n_targets,
        "n_unassigned": report.n_unassigned,
        "n_scored": report.n_scored,
        "n_correct": report.n_correct,
        "tolerance": report.tolerance,
        "accuracy": report.accuracy,
        "round_counts": {str(r): n for r, n in (rounds or {}).items()},
        "per_item": [
            {
                "gesture_id": item.gesture_id,
                "manual": item.manual,
                "auto": item.auto,
                "correct": "excluded" if item.correct is None else item.correct,
            }
            for item in report.per_item
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def report_to_csv(report: EvalReport) -> str:
    """Delimited per-item table: gesture_id, manual, auto, status."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["gesture_id", "manual", "auto", "status"])
    for item in report.per_item:
        if item.correct is None:
            writer.writerow([item.gesture_id, item.manual, "", "excluded"])
        else:
            writer.writerow([
                item.gesture_id,
                item.manual,
                item.auto,
                "correct" if item.correct else "incorrect",
            ])
    return buf.getvalue()


def render_rating_scatter(report: EvalReport, path) -> None:
    """Manual vs auto ratings with the identity line and tolerance band."""
    fig, ax = plt.subplots(figsize=(6, 6))
    scored = [item for item in report.per_item if item.correct is not None]
    xs = [item.manual for item in scored]
    ys = [item.auto for item in scored]
    colors = ["tab:blue" if item.correct else "tab:red" for item in scored]
    grid = [1.0, 7.0]
    ax.plot(grid, grid, color="gray", linewidth=1)
    tol = report.tolerance
    ax.fill_between(grid, [g - tol for g in grid], [g + tol for g in grid],
                    color="gray", alpha=0.15, label=f"±{tol:g} band")
    ax.scatter(xs, ys, c=colors, s=36, zorder=3)
    ax.set_xlim(0.5, 7.5)
    ax.set_ylim(0.5, 7.5)
    ax.set_xlabel("manual rating")
    ax.set_ylabel("auto-assigned rating")
    ax.set_title("Manual vs auto-assigned iconicity ratings")
    ax.legend(loc="upper left")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_round_counts(rounds: dict[int, int], path) -> None:
    """Bar chart of assigned-target counts per retrieval round."""
    fig, ax = plt.subplots(figsize=(5, 4))
    if rounds:
        labels = [f"round {r}" for r in rounds]
        ax.bar(labels, list(rounds.values()), color="tab:blue", width=0.5)
        for i, n in enumerate(rounds.values()):
            ax.annotate(str(n), (i, n), ha="center", va="bottom")
    ax.set_ylabel("targets matched")
    ax.set_title("Qualifying matches per retrieval round")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
