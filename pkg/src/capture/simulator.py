"""Deterministic replay of record entry under six assistive conditions.

The simulator walks a target record field by field, top to bottom, the way a
subject following a strict entry script would. For each non-empty field it
takes the cheapest path the active condition allows:

1. accept a predictive-fillin value that already matches the target,
2. pick the value from the field's split menu (linear scan cost), or
3. enter the value word by word: straight soft-keyboard typing, or
   handwriting through a remedial recognition cascade (first alternates
   menu, letter-by-letter retry, second menu, finally the keyboard).

Every action charges a constant from a keystroke-level cost model, so a run's
duration is the dot product of action counts and costs, and identical seeds
give identical runs. Recognition itself is modeled, not performed: the
deterministic mode recognizes exactly the words in the dictionary (numeric
fields always pass), the stochastic mode draws against per-field cumulative
stage rates.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from .fillin import RuleSet, apply_on_commit, default_rules
from .menus import MenuState
from .records import (
    COMPANY,
    EntryMethod,
    FieldKind,
    FieldSpec,
    FieldValue,
    FIRST_NAME,
    LAST_NAME,
    Provenance,
    Record,
    Schema,
    default_schema,
    tokenize,
)
from .store import Dictionary, RecordStore


class SimulationError(ValueError):
    pass


@dataclass(frozen=True)
class Condition:
    name: str
    typed_only: bool = False
    writing: bool = False
    add_to_dictionary: bool = False
    adaptive_menus: bool = False
    predictive_fillin: bool = False

    def __post_init__(self):
        if self.typed_only and (
            self.writing or self.add_to_dictionary or self.adaptive_menus or self.predictive_fillin
        ):
            raise SimulationError("typed_only excludes all other assists")
        if not self.typed_only and not self.writing:
            raise SimulationError("condition must either type or write")


def condition_presets() -> list[Condition]:
    """The six built-in conditions: a typing-only control, a bare writing
    baseline, and writing plus each assist alone and all together."""
    return [
        Condition("Typed", typed_only=True),
        Condition("Null", writing=True),
        Condition("D", writing=True, add_to_dictionary=True),
        Condition("AM", writing=True, adaptive_menus=True),
        Condition("PF", writing=True, predictive_fillin=True),
        Condition(
            "All",
            writing=True,
            add_to_dictionary=True,
            adaptive_menus=True,
            predictive_fillin=True,
        ),
    ]


def condition_by_name(name: str) -> Condition:
    for c in condition_presets():
        if c.name.lower() == name.lower():
            return c
    raise SimulationError(f"unknown condition {name!r}")


ACTIONS = (
    "tap_field",
    "open_menu",
    "scan_menu_item",
    "choose_item",
    "write_word",
    "open_recog_menu",
    "try_letters",
    "open_keyboard",
    "type_char",
    "close_keyboard",
    "add_to_dict_confirm",
    "fillin_overhead",
)


@dataclass(frozen=True)
class CostModel:
    """Seconds per primitive action.

    type_char and write_word are calibrated against observed pen-computer
    entry rates (about 1.54 s per soft-keyboard tap, about 9.5 s to write one
    word and see it recognized); the remaining constants are
    keystroke-level-model-scale estimates for taps, menu scans, and dialogs.
    """

    tap_field: float = 0.4
    open_menu: float = 1.0
    scan_menu_item: float = 0.3
    choose_item: float = 0.9
    write_word: float = 9.52
    open_recog_menu: float = 0.8
    try_letters: float = 0.9
    open_keyboard: float = 0.2
    type_char: float = 1.54
    close_keyboard: float = 0.2
    add_to_dict_confirm: float = 0.5
    fillin_overhead: float = 0.5

    def __post_init__(self):
        for action in ACTIONS:
            if getattr(self, action) < 0:
                raise SimulationError(f"negative cost for {action}")

    def cost_of(self, action: str) -> float:
        return getattr(self, action)

    def duration(self, action_counts: dict[str, int]) -> float:
        return sum(self.cost_of(a) * n for a, n in action_counts.items())


# Cumulative recognition rates by field for free handwriting on a small
# pressure-sensitive display: (correct, first menu, letter by letter, second
# menu). Whatever remains after the second menu has to be typed.
DEFAULT_STAGE_RATES: dict[str, tuple[float, float, float, float]] = {
    "first_name": (0.94, 0.95, 0.95, 0.95),
    "last_name": (0.59, 0.59, 0.74, 0.80),
    "title": (0.52, 0.62, 0.66, 0.68),
    "company": (0.42, 0.49, 0.59, 0.61),
    "address": (0.48, 0.60, 0.62, 0.67),
    "address2": (0.81, 0.85, 0.87, 0.87),
    "city": (0.62, 0.62, 0.67, 0.71),
    "state": (0.22, 0.22, 0.22, 0.22),
    "zip_code": (0.51, 0.52, 0.58, 0.59),
    "phone1": (0.86, 0.89, 0.89, 0.89),
    "phone2": (0.86, 0.89, 0.89, 0.89),
    "phone3": (0.86, 0.89, 0.89, 0.89),
    "phone4": (0.86, 0.89, 0.89, 0.89),
}

# Fields with too little data for a per-field profile.
FALLBACK_STAGE_RATES = (0.80, 0.85, 0.88, 0.90)

DETERMINISTIC = "deterministic_dictionary"
STOCHASTIC = "stochastic"

# Field kinds whose words are digit strings the recognizer handles without a
# word dictionary.
NUMERIC_KINDS = frozenset({FieldKind.NUMERIC, FieldKind.PHONE})

_STAGES = (
    EntryMethod.RECOGNIZED,
    EntryMethod.RECOG_MENU_1,
    EntryMethod.LETTERS,
    EntryMethod.RECOG_MENU_2,
)


@dataclass(frozen=True)
class RecognitionModel:
    mode: str = DETERMINISTIC
    stage_rates: dict[str, tuple[float, float, float, float]] = dc_field(
        default_factory=lambda: dict(DEFAULT_STAGE_RATES)
    )
    fallback_rates: tuple[float, float, float, float] = FALLBACK_STAGE_RATES
    # Deterministic proxy for letter-by-letter recognition: short
    # out-of-dictionary words succeed, long ones fall through to the keyboard.
    letters_max_len: int = 5

    def __post_init__(self):
        if self.mode not in (DETERMINISTIC, STOCHASTIC):
            raise SimulationError(f"unknown recognition mode {self.mode!r}")
        for fid, rates in list(self.stage_rates.items()) + [("fallback", self.fallback_rates)]:
            last = 0.0
            for r in rates:
                if not 0.0 <= r <= 1.0 or r < last:
                    raise SimulationError(f"stage rates for {fid!r} must be nondecreasing in [0,1]")
                last = r

    def resolve(
        self,
        word: str,
        spec: FieldSpec,
        dictionary: Dictionary,
        rng: random.Random,
    ) -> EntryMethod:
        """Outcome of the recognition cascade for one written word.

        Returns the stage that succeeded, or EntryMethod.TYPED when the whole
        cascade failed.
        """
        if self.mode == DETERMINISTIC:
            if spec.kind in NUMERIC_KINDS:
                return EntryMethod.RECOGNIZED
            if dictionary.contains(word):
                return EntryMethod.RECOGNIZED
            if len(word) <= self.letters_max_len:
                return EntryMethod.LETTERS
            return EntryMethod.TYPED
        rates = self.stage_rates.get(spec.id, self.fallback_rates)
        draw = rng.random()
        for stage, rate in zip(_STAGES, rates):
            if draw < rate:
                return stage
        return EntryMethod.TYPED


@dataclass
class SimState:
    """Mutable device state threaded through consecutive entries."""

    store: RecordStore
    menus: MenuState
    dictionary: Dictionary


@dataclass
class WordEntry:
    method: EntryMethod
    written: bool
    added_to_dictionary: bool = False


@dataclass
class RunResult:
    condition: str
    record_id: str
    pass_number: int
    pass_label: str
    duration_seconds: float
    action_counts: dict[str, int]
    sheet: dict[str, list[WordEntry]]

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "record_id": self.record_id,
            "pass_number": self.pass_number,
            "pass_label": self.pass_label,
            "duration_seconds": self.duration_seconds,
            "action_counts": dict(self.action_counts),
            "sheet": {
                fid: [
                    {
                        "method": w.method.value,
                        "written": w.written,
                        "added_to_dictionary": w.added_to_dictionary,
                    }
                    for w in words
                ]
                for fid, words in self.sheet.items()
            },
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "RunResult":
        return cls(
            condition=doc["condition"],
            record_id=doc["record_id"],
            pass_number=doc["pass_number"],
            pass_label=doc["pass_label"],
            duration_seconds=doc["duration_seconds"],
            action_counts=dict(doc["action_counts"]),
            sheet={
                fid: [
                    WordEntry(
                        EntryMethod(w["method"]),
                        w["written"],
                        w.get("added_to_dictionary", False),
                    )
                    for w in words
                ]
                for fid, words in doc["sheet"].items()
            },
        )


def simulate_entry(
    target: Record,
    condition: Condition,
    state: SimState,
    recog: Optional[RecognitionModel] = None,
    cost: Optional[CostModel] = None,
    seed: int = 0,
    rules: Optional[RuleSet] = None,
) -> RunResult:
    """Enter one record under a condition, mutating the device state.

    Finalizing appends the completed draft to the store and refreshes the
    adaptive menus, so re-entering the same record immediately afterwards
    exercises the best case for every assist.
    """
    recog = recog or RecognitionModel()
    cost = cost or CostModel()
    rules = rules if rules is not None else default_rules()
    rng = random.Random(seed)
    schema = state.store.schema
    counts: Counter[str] = Counter()
    sheet: dict[str, list[WordEntry]] = {}
    draft = Record(id=f"{target.id}.{state.store.next_seq}")

    for spec in schema:
        target_raw = target.raw(spec.id)
        if not target_raw:
            # Nothing to enter; a fillin value already sitting here stays.
            continue
        words = tokenize(target_raw)

        current = draft.value(spec.id)
        if (
            condition.predictive_fillin
            and current.provenance is Provenance.FILLIN
            and current.raw == target_raw
        ):
            # Accepting a fillin is not a commit, so its own trigger rules
            # stay idle; dependents were already filled by the trigger.
            counts["fillin_overhead"] += 1
            sheet[spec.id] = [WordEntry(EntryMethod.FILLIN, written=False) for _ in words]
            continue

        if condition.adaptive_menus and (spec.adaptive_menu or spec.static_choices):
            menu = state.menus.menu_for(spec.id)
            position = menu.index_of(target_raw)
            if position >= 0:
                counts["open_menu"] += 1
                counts["scan_menu_item"] += position + 1
                counts["choose_item"] += 1
                entries = [WordEntry(EntryMethod.MENU_CHOSEN, written=False) for _ in words]
                sheet[spec.id] = entries
                _commit(draft, spec, target_raw, Provenance.MENU_CHOSEN, entries, condition, state, rules)
                continue

        counts["tap_field"] += 1
        entries = []
        for word in words:
            if condition.writing:
                entries.append(_write_word(word, spec, condition, state, recog, rng, counts))
            else:
                counts["open_keyboard"] += 1
                counts["type_char"] += len(word)
                counts["close_keyboard"] += 1
                entries.append(WordEntry(EntryMethod.TYPED, written=False))
        sheet[spec.id] = entries
        provenance = Provenance.WRITTEN if condition.writing else Provenance.TYPED
        _commit(draft, spec, target_raw, provenance, entries, condition, state, rules)

    state.store.finalize_record(draft)
    for spec in schema:
        if spec.adaptive_menu and draft.raw(spec.id):
            state.menus.record_use(spec.id, draft.raw(spec.id))

    return RunResult(
        condition=condition.name,
        record_id=target.id,
        pass_number=0,
        pass_label="",
        duration_seconds=cost.duration(counts),
        action_counts=dict(counts),
        sheet=sheet,
    )


def _commit(
    draft: Record,
    spec: FieldSpec,
    raw: str,
    provenance: Provenance,
    entries: list[WordEntry],
    condition: Condition,
    state: SimState,
    rules: RuleSet,
) -> None:
    draft.set(spec.id, FieldValue(raw, provenance, [e.method for e in entries]))
    if condition.predictive_fillin:
        apply_on_commit(draft, spec.id, raw, state.store, rules)


def _write_word(
    word: str,
    spec: FieldSpec,
    condition: Condition,
    state: SimState,
    recog: RecognitionModel,
    rng: random.Random,
    counts: Counter,
) -> WordEntry:
    counts["write_word"] += 1
    outcome = recog.resolve(word, spec, state.dictionary, rng)
    if outcome is EntryMethod.RECOGNIZED:
        return WordEntry(EntryMethod.RECOGNIZED, written=True)
    counts["open_recog_menu"] += 1
    if outcome is EntryMethod.RECOG_MENU_1:
        return WordEntry(EntryMethod.RECOG_MENU_1, written=True)
    counts["try_letters"] += 1
    if outcome is EntryMethod.LETTERS:
        return WordEntry(EntryMethod.LETTERS, written=True)
    counts["open_recog_menu"] += 1
    if outcome is EntryMethod.RECOG_MENU_2:
        return WordEntry(EntryMethod.RECOG_MENU_2, written=True)
    counts["open_keyboard"] += 1
    counts["type_char"] += len(word)
    counts["close_keyboard"] += 1
    added = False
    if not state.dictionary.contains(word) and condition.add_to_dictionary:
        counts["add_to_dict_confirm"] += 1
        state.dictionary.add(word)
        added = True
    return WordEntry(EntryMethod.TYPED, written=True, added_to_dictionary=added)


def fresh_state(
    schema: Schema,
    preload: Sequence[Record] = (),
    base_vocabulary: Iterable[str] = (),
    condition: Optional[Condition] = None,
) -> SimState:
    """A pristine device image for one condition: preloaded case base, empty
    adaptive menus, and the base vocabulary (plus, for dictionary-adding
    conditions, the names and companies already in the case base)."""
    store = RecordStore(schema)
    for record in preload:
        store.finalize_record(record.copy())
    dictionary = Dictionary(base_vocabulary)
    if condition is not None and condition.add_to_dictionary:
        for record in preload:
            for fid in (FIRST_NAME, LAST_NAME, COMPANY):
                if fid in schema:
                    for word in tokenize(record.raw(fid)):
                        dictionary.add(word)
    return SimState(store=store, menus=MenuState(schema), dictionary=dictionary)


def run_experiment(
    records: Sequence[Record],
    conditions: Sequence[Condition],
    repeats: int = 2,
    seed: int = 0,
    *,
    schema: Optional[Schema] = None,
    preload: Sequence[Record] = (),
    base_vocabulary: Iterable[str] = (),
    recog: Optional[RecognitionModel] = None,
    cost: Optional[CostModel] = None,
    rules: Optional[RuleSet] = None,
) -> list[RunResult]:
    """Enter each record ``repeats`` times consecutively under each condition,
    resetting the device image between conditions.

    The first pass over a record is its worst case (nothing learned yet), the
    last its best. Fully deterministic for a given seed.
    """
    if not records:
        raise SimulationError("no records to enter")
    if repeats < 1:
        raise SimulationError("repeats must be >= 1")
    if schema is None:
        schema = default_schema()
    base_vocab = tuple(base_vocabulary)
    results: list[RunResult] = []
    for ci, condition in enumerate(conditions):
        state = fresh_state(schema, preload, base_vocab, condition)
        for ri, record in enumerate(records):
            for p in range(1, repeats + 1):
                entry_seed = seed + 1_000_003 * ci + 1_009 * ri + p
                result = simulate_entry(record, condition, state, recog, cost, entry_seed, rules)
                result.pass_number = p
                result.pass_label = _pass_label(p, repeats)
                results.append(result)
    return results


def _pass_label(pass_number: int, repeats: int) -> str:
    if pass_number == 1:
        return "worst"
    if pass_number == repeats:
        return "best"
    return f"pass{pass_number}"
