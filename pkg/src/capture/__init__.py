"""Adaptive form capture: split menus, predictive fillin, corpus analysis,
and a deterministic entry-cost simulator."""

from .records import (
    EntryMethod,
    FieldKind,
    FieldSpec,
    FieldValue,
    Provenance,
    Record,
    Schema,
    default_schema,
    split_email,
    split_phone,
    tokenize,
)
from .store import Dictionary, ImportFormatError, RecordStore, StoreError
from .menus import MenuError, MenuState, MruQueue, SplitMenu
from .fillin import (
    FillinEvent,
    FillinRule,
    RuleSet,
    Transform,
    apply_on_commit,
    default_rules,
)
from .analyzer import (
    CoverageCurve,
    DependencyStats,
    Histogram,
    Thresholds,
    coverage_curve,
    dependency_stats,
    mine,
    recommend_menu_size,
)
from .simulator import (
    Condition,
    CostModel,
    RecognitionModel,
    RunResult,
    SimState,
    condition_presets,
    fresh_state,
    run_experiment,
    simulate_entry,
)
from .reports import (
    MedianTable,
    median_table,
    method_breakdown,
    speedup_vs_null,
    throughput_metrics,
)
from .engine import CaptureEngine, DraftSession, EngineError

__all__ = [name for name in dir() if not name.startswith("_")]
