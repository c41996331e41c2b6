"""Summary metrics over simulation runs or externally supplied medians.

Speedups are ratios of the bare-writing worst case to each condition's best
case; throughput turns per-record character and word counts into cpm/wpm; the
method breakdown tabulates, per field, how words were entered (recognition
stages over written words, typing/menu/fillin over all words).
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from statistics import median
from typing import Optional, Sequence

from .records import EntryMethod
from .simulator import RunResult

NULL_CONDITION = "Null"
WORST = "worst"
BEST = "best"


class ReportError(ValueError):
    pass


@dataclass(frozen=True)
class MedianTable:
    """Median minutes per (condition, pass label)."""

    minutes: dict[tuple[str, str], float]

    def __post_init__(self):
        for key, m in self.minutes.items():
            if m <= 0:
                raise ReportError(f"nonpositive median for {key}")

    def get(self, condition: str, pass_label: str) -> Optional[float]:
        return self.minutes.get((condition, pass_label))

    @property
    def conditions(self) -> list[str]:
        seen: list[str] = []
        for cond, _ in self.minutes:
            if cond not in seen:
                seen.append(cond)
        return seen


def median_table(results: Sequence[RunResult]) -> MedianTable:
    """Median per-record durations (in minutes) grouped by condition and pass.
    Even-sized groups use the midpoint convention."""
    groups: dict[tuple[str, str], list[float]] = {}
    for r in results:
        groups.setdefault((r.condition, r.pass_label), []).append(r.duration_seconds / 60.0)
    return MedianTable({key: median(vals) for key, vals in groups.items()})


def speedup_vs_null(table: MedianTable) -> dict[str, float]:
    """Percentage speedup of each condition's best case over the bare-writing
    worst case: null_worst / best - 1, as a percentage."""
    null_worst = table.get(NULL_CONDITION, WORST)
    if null_worst is None:
        raise ReportError(f"missing entry ({NULL_CONDITION}, {WORST})")
    speedups: dict[str, float] = {}
    missing: list[str] = []
    for condition in table.conditions:
        best = table.get(condition, BEST)
        if best is None:
            missing.append(condition)
            continue
        speedups[condition] = (null_worst / best - 1.0) * 100.0
    if missing:
        raise ReportError(f"missing best-case entries for: {', '.join(missing)}")
    return speedups


def throughput_metrics(
    chars_per_record: float, words_per_record: float, minutes: float
) -> dict[str, float]:
    if chars_per_record <= 0 or words_per_record <= 0 or minutes <= 0:
        raise ReportError("throughput inputs must be positive")
    return {
        "cpm": chars_per_record / minutes,
        "wpm": words_per_record / minutes,
    }


_WRITTEN_STAGES = (
    EntryMethod.RECOGNIZED,
    EntryMethod.RECOG_MENU_1,
    EntryMethod.LETTERS,
    EntryMethod.RECOG_MENU_2,
)


@dataclass(frozen=True)
class FieldBreakdown:
    field: str
    all_words: int
    written_attempts: int
    # Cumulative success rates over written words, one per cascade stage.
    cumulative_recognition: tuple[float, float, float, float]
    # Shares of all words by final entry route; together with written_share
    # these partition the field's words.
    typed: float
    menu_chosen: float
    fillin: float
    written_share: float


def method_breakdown(results: Sequence[RunResult]) -> list[FieldBreakdown]:
    """Per-field entry-method table over a batch of runs.

    The recognition columns use words that were written as their denominator;
    the typing/menu/fillin columns use all words. A word whose cascade fell
    all the way through counts as a written attempt and as typed.
    """
    if not results:
        raise ReportError("no results")
    order: list[str] = []
    stage_counts: dict[str, list[int]] = {}
    route_counts: dict[str, dict[str, int]] = {}
    for result in results:
        for fid, words in result.sheet.items():
            if fid not in stage_counts:
                order.append(fid)
                stage_counts[fid] = [0, 0, 0, 0]
                route_counts[fid] = {
                    "all": 0,
                    "written_attempts": 0,
                    "typed": 0,
                    "menu": 0,
                    "fillin": 0,
                    "written_final": 0,
                }
            routes = route_counts[fid]
            for w in words:
                routes["all"] += 1
                if w.written:
                    routes["written_attempts"] += 1
                if w.method in _WRITTEN_STAGES:
                    routes["written_final"] += 1
                    stage_counts[fid][_WRITTEN_STAGES.index(w.method)] += 1
                elif w.method is EntryMethod.TYPED:
                    routes["typed"] += 1
                elif w.method is EntryMethod.MENU_CHOSEN:
                    routes["menu"] += 1
                elif w.method is EntryMethod.FILLIN:
                    routes["fillin"] += 1

    breakdown: list[FieldBreakdown] = []
    for fid in order:
        routes = route_counts[fid]
        attempts = routes["written_attempts"]
        cumulative = []
        running = 0
        for stage_n in stage_counts[fid]:
            running += stage_n
            cumulative.append(running / attempts if attempts else 0.0)
        breakdown.append(
            FieldBreakdown(
                field=fid,
                all_words=routes["all"],
                written_attempts=attempts,
                cumulative_recognition=tuple(cumulative),
                typed=routes["typed"] / routes["all"],
                menu_chosen=routes["menu"] / routes["all"],
                fillin=routes["fillin"] / routes["all"],
                written_share=routes["written_final"] / routes["all"],
            )
        )
    return breakdown


# -- rendering ---------------------------------------------------------------


def median_table_text(table: MedianTable, conditions: Optional[Sequence[str]] = None) -> str:
    conds = list(conditions) if conditions else table.conditions
    rows = [("", *conds)]
    for label in (WORST, BEST):
        cells = [label.capitalize()]
        for cond in conds:
            m = table.get(cond, label)
            cells.append(f"{m:.2f}" if m is not None else "-")
        rows.append(tuple(cells))
    return _aligned(rows)


def speedup_text(speedups: dict[str, float]) -> str:
    rows = [("condition", "speedup vs Null worst")]
    for cond, pct in speedups.items():
        rows.append((cond, f"{pct:.0f}%"))
    return _aligned(rows)


def breakdown_text(breakdown: Sequence[FieldBreakdown]) -> str:
    rows = [
        (
            "field",
            "correct",
            "1st menu",
            "letters",
            "2nd menu",
            "typed",
            "menu",
            "fillin",
        )
    ]
    for fb in breakdown:
        cum = fb.cumulative_recognition
        rows.append(
            (
                fb.field,
                *(f"{c * 100:.0f}" if fb.written_attempts else "" for c in cum),
                f"{fb.typed * 100:.0f}",
                f"{fb.menu_chosen * 100:.0f}",
                f"{fb.fillin * 100:.0f}",
            )
        )
    return _aligned(rows)


def breakdown_dicts(breakdown: Sequence[FieldBreakdown]) -> list[dict]:
    return [
        {
            "field": fb.field,
            "all_words": fb.all_words,
            "written_attempts": fb.written_attempts,
            "cumulative_recognition": list(fb.cumulative_recognition),
            "typed": fb.typed,
            "menu_chosen": fb.menu_chosen,
            "fillin": fb.fillin,
            "written_share": fb.written_share,
        }
        for fb in breakdown
    ]


def median_table_csv(table: MedianTable) -> str:
    lines = ["condition,pass,minutes"]
    for (cond, label), m in table.minutes.items():
        lines.append(f"{cond},{label},{m:.6f}")
    return "\n".join(lines) + "\n"


def load_median_table(text: str) -> MedianTable:
    """Parse a medians JSON document: {condition: {"worst": m, "best": m}}."""
    doc = json.loads(text)
    minutes: dict[tuple[str, str], float] = {}
    for cond, passes in doc.items():
        for label, m in passes.items():
            minutes[(cond, label)] = float(m)
    return MedianTable(minutes)


def _aligned(rows: list[tuple[str, ...]]) -> str:
    out = io.StringIO()
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    return out.getvalue()
