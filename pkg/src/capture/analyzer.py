"""Corpus profiling for menu sizing and fillin configuration.

Two questions drive the analysis. How often do a field's values repeat?
(Answered by a top-k coverage curve: the share of entries a menu of size k
could have supplied.) And which field pairs behave like dense, approximately
functional dependencies? (Domain values that recur, and mostly map to a
single range value - those are the pairs worth wiring up as fillin rules.)

Phone and email fields are additionally examined component-wise (area code,
area code + prefix, domain part): a company rarely determines a full phone
number, but often determines everything except the extension.
"""

from __future__ import annotations

import io
import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

from .fillin import FillinRule, RuleSet, Transform
from .menus import MAX_MENU_ENTRIES
from .records import FieldKind, Record, split_email, split_phone, tokenize
from .store import RecordStore


class AnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class Histogram:
    field: str
    counts: dict[str, int]
    total: int


@dataclass(frozen=True)
class CoverageCurve:
    """coverage[k-1] = share of non-empty entries covered by the k most
    frequent values (ties broken lexicographically)."""

    field: str
    coverage: tuple[float, ...]
    histogram: Histogram

    def at(self, k: int) -> float:
        return self.coverage[k - 1]


@dataclass(frozen=True)
class DependencyStats:
    domain: str
    range: str
    support: int
    density: float
    functionality: float


@dataclass(frozen=True)
class Thresholds:
    min_density: float = 0.2
    min_functionality: float = 0.8
    min_support: int = 10


@dataclass
class MiningReport:
    rules: RuleSet
    rule_stats: list[DependencyStats]
    menu_sizes: dict[str, Optional[int]]
    thresholds: Thresholds


# Component suffixes recognized in field-or-component ids such as
# "phone1:area_prefix" or "email:domain".
_COMPONENT_TRANSFORMS = {
    "area": Transform.PHONE_AREA,
    "area_prefix": Transform.PHONE_AREA_PREFIX,
    "domain": Transform.EMAIL_DOMAIN,
}


def component_value(record: Record, ident: str) -> str:
    """Value of a field or of a declared component of it; empty if absent."""
    field_id, _, comp = ident.partition(":")
    raw = record.raw(field_id)
    if not raw:
        return ""
    if not comp:
        return raw
    if comp == "area":
        words = tokenize(raw)
        return words[0] if words else ""
    if comp == "area_prefix":
        return split_phone(raw)[0]
    if comp == "domain":
        return split_email(raw)[1]
    raise AnalysisError(f"unknown component {comp!r} in {ident!r}")


def histogram(store: RecordStore, field_id: str) -> Histogram:
    counts: Counter[str] = Counter()
    for record in store:
        raw = record.raw(field_id)
        if raw:
            counts[raw] += 1
    if not counts:
        raise AnalysisError(f"no data for field {field_id!r}")
    return Histogram(field=field_id, counts=dict(counts), total=sum(counts.values()))


def coverage_curve(store: RecordStore, field_id: str, k_max: Optional[int] = None) -> CoverageCurve:
    hist = histogram(store, field_id)
    ranked = sorted(hist.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if k_max is None:
        k_max = len(ranked)
    if k_max < 1:
        raise AnalysisError("k_max must be >= 1")
    coverage: list[float] = []
    running = 0
    for k in range(1, k_max + 1):
        if k <= len(ranked):
            running += ranked[k - 1][1]
        coverage.append(running / hist.total)
    return CoverageCurve(field=field_id, coverage=tuple(coverage), histogram=hist)


def recommend_menu_size(
    curve: CoverageCurve,
    target: float = 0.5,
    max_entries: int = MAX_MENU_ENTRIES,
) -> Optional[int]:
    """Smallest menu size whose coverage reaches ``target``; None when that
    size would not fit on screen (the field should not have a menu)."""
    if not 0 < target <= 1:
        raise AnalysisError("target must be in (0, 1]")
    for k, c in enumerate(curve.coverage, start=1):
        if c >= target:
            return k if k <= max_entries else None
    return None


def dependency_stats(store: RecordStore, domain: str, range_: str) -> DependencyStats:
    """Density and functionality of the ordered pair (domain, range) over
    records where both are non-empty.

    density: share of those records whose domain value occurs at least twice.
    functionality: share kept by the best single range value per domain value
    (1.0 means the pair is exactly functional on this corpus).
    """
    if domain == range_:
        raise AnalysisError("domain and range must differ")
    pairs: list[tuple[str, str]] = []
    for record in store:
        dv = component_value(record, domain)
        if not dv:
            continue
        rv = component_value(record, range_)
        if not rv:
            continue
        pairs.append((dv, rv))
    support = len(pairs)
    if support == 0:
        raise AnalysisError(f"no data for pair ({domain!r}, {range_!r})")

    domain_counts: Counter[str] = Counter(d for d, _ in pairs)
    dense = sum(1 for d, _ in pairs if domain_counts[d] >= 2)

    by_domain: dict[str, Counter[str]] = defaultdict(Counter)
    for d, r in pairs:
        by_domain[d][r] += 1
    kept = sum(max(counter.values()) for counter in by_domain.values())

    return DependencyStats(
        domain=domain,
        range=range_,
        support=support,
        density=dense / support,
        functionality=kept / support,
    )


def _range_candidates(kind: FieldKind, target: str) -> list[tuple[str, Transform]]:
    # Most specific copy first: a verbatim rule that passes beats any
    # component rule, a longer component beats a shorter one.
    candidates = [(target, Transform.VERBATIM)]
    if kind is FieldKind.PHONE:
        candidates.append((f"{target}:area_prefix", Transform.PHONE_AREA_PREFIX))
        candidates.append((f"{target}:area", Transform.PHONE_AREA))
    elif kind is FieldKind.EMAIL:
        candidates.append((f"{target}:domain", Transform.EMAIL_DOMAIN))
    return candidates


def mine(
    store: RecordStore,
    thresholds: Thresholds = Thresholds(),
    menu_target: float = 0.5,
    max_menu_entries: int = MAX_MENU_ENTRIES,
) -> MiningReport:
    """Evaluate every ordered field pair (plus phone/email components as
    ranges) against the thresholds and recommend fillin rules and menu sizes.

    Deterministic: fields are visited in schema order and for each
    (trigger, target) pair at most one rule is emitted, preferring the most
    complete copy that still passes.
    """
    if len(store) == 0:
        raise AnalysisError("empty corpus")
    schema = store.schema
    rules: list[FillinRule] = []
    rule_stats: list[DependencyStats] = []
    for trigger in schema:
        for target in schema:
            if target.id == trigger.id:
                continue
            for range_id, transform in _range_candidates(target.kind, target.id):
                try:
                    stats = dependency_stats(store, trigger.id, range_id)
                except AnalysisError:
                    continue
                if (
                    stats.support >= thresholds.min_support
                    and stats.density >= thresholds.min_density
                    and stats.functionality >= thresholds.min_functionality
                ):
                    rules.append(FillinRule(trigger.id, target.id, transform))
                    rule_stats.append(stats)
                    break

    menu_sizes: dict[str, Optional[int]] = {}
    for spec in schema:
        try:
            curve = coverage_curve(store, spec.id)
        except AnalysisError:
            menu_sizes[spec.id] = None
            continue
        menu_sizes[spec.id] = recommend_menu_size(curve, menu_target, max_menu_entries)

    return MiningReport(
        rules=RuleSet(tuple(rules)),
        rule_stats=rule_stats,
        menu_sizes=menu_sizes,
        thresholds=thresholds,
    )


# -- report rendering -------------------------------------------------------


def mining_report_dict(report: MiningReport) -> dict:
    return {
        "thresholds": {
            "min_density": report.thresholds.min_density,
            "min_functionality": report.thresholds.min_functionality,
            "min_support": report.thresholds.min_support,
        },
        "rules": [
            {
                "trigger": rule.trigger,
                "target": rule.target,
                "transform": rule.transform.value,
                "support": stats.support,
                "density": stats.density,
                "functionality": stats.functionality,
            }
            for rule, stats in zip(report.rules, report.rule_stats)
        ],
        "menu_sizes": report.menu_sizes,
    }


def mining_report_json(report: MiningReport) -> str:
    return json.dumps(mining_report_dict(report), indent=2)


def mining_report_text(report: MiningReport) -> str:
    out = io.StringIO()
    rows = [("trigger", "target", "transform", "support", "density", "functionality")]
    for rule, stats in zip(report.rules, report.rule_stats):
        rows.append(
            (
                rule.trigger,
                rule.target,
                rule.transform.value,
                str(stats.support),
                f"{stats.density:.3f}",
                f"{stats.functionality:.3f}",
            )
        )
    _write_aligned(out, rows)
    out.write("\n")
    rows = [("field", "recommended menu size")]
    for fid, size in report.menu_sizes.items():
        rows.append((fid, str(size) if size is not None else "none"))
    _write_aligned(out, rows)
    return out.getvalue()


def coverage_points_csv(store: RecordStore, field_id: str) -> str:
    curve = coverage_curve(store, field_id)
    lines = ["k,coverage"]
    for k, c in enumerate(curve.coverage, start=1):
        lines.append(f"{k},{c:.6f}")
    return "\n".join(lines) + "\n"


def _write_aligned(out: io.StringIO, rows: list[tuple[str, ...]]) -> None:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
