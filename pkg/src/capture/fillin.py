"""Case-based predictive fillin.

Committing a trigger field (company, city, or state in the default rules)
looks up the most recent stored record with the same value and copies its
dependent fields into the draft, optionally transformed (email domain only,
phone area code + prefix only). Values a user entered are never overwritten;
values from earlier fillin runs are fair game, so replacing a trigger value
recopies its dependents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .records import (
    ADDRESS,
    ADDRESS2,
    CITY,
    COMPANY,
    COUNTRY,
    EMAIL,
    EntryMethod,
    FieldValue,
    PHONE_FIELDS,
    Provenance,
    Record,
    STATE,
    USER_PROVENANCE,
    ZIP_CODE,
    split_email,
    split_phone,
    tokenize,
    word_count,
)
from .store import RecordStore


class Transform(str, Enum):
    VERBATIM = "verbatim"
    EMAIL_DOMAIN = "email_domain"
    PHONE_AREA_PREFIX = "phone_area_prefix"
    PHONE_AREA = "phone_area"


def apply_transform(transform: Transform, value: str) -> str:
    if transform is Transform.VERBATIM:
        return value
    if transform is Transform.EMAIL_DOMAIN:
        return split_email(value)[1]
    if transform is Transform.PHONE_AREA_PREFIX:
        return split_phone(value)[0] if value.strip() else ""
    if transform is Transform.PHONE_AREA:
        words = tokenize(value)
        return words[0] if words else ""
    raise ValueError(f"unknown transform {transform!r}")


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class FillinRule:
    trigger: str
    target: str
    transform: Transform = Transform.VERBATIM

    def __post_init__(self):
        if self.trigger == self.target:
            raise RuleError(f"rule may not target its own trigger {self.trigger!r}")


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[FillinRule, ...]

    def __post_init__(self):
        pairs = [(r.trigger, r.target) for r in self.rules]
        if len(set(pairs)) != len(pairs):
            raise RuleError("duplicate (trigger, target) pair in rule set")

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def for_trigger(self, field_id: str) -> list[FillinRule]:
        return [r for r in self.rules if r.trigger == field_id]

    @property
    def triggers(self) -> list[str]:
        seen: list[str] = []
        for r in self.rules:
            if r.trigger not in seen:
                seen.append(r.trigger)
        return seen

    def to_json(self) -> str:
        doc = [
            {"trigger": r.trigger, "target": r.target, "transform": r.transform.value}
            for r in self.rules
        ]
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RuleSet":
        doc = json.loads(text)
        return cls(
            rules=tuple(
                FillinRule(e["trigger"], e["target"], Transform(e.get("transform", "verbatim")))
                for e in doc
            )
        )


@dataclass(frozen=True)
class FillinEvent:
    target: str
    value: str
    source_seq: int
    trigger: str


def default_rules() -> RuleSet:
    """The built-in rule matrix: a matching company fills the whole address
    block (11 targets), a matching city fills the region fields plus phone
    area codes, and a matching state fills the country."""
    rules: list[FillinRule] = []
    for target in (ADDRESS, ADDRESS2, CITY, STATE, ZIP_CODE, COUNTRY):
        rules.append(FillinRule(COMPANY, target))
    rules.append(FillinRule(COMPANY, EMAIL, Transform.EMAIL_DOMAIN))
    for phone in PHONE_FIELDS:
        rules.append(FillinRule(COMPANY, phone, Transform.PHONE_AREA_PREFIX))
    for target in (STATE, ZIP_CODE, COUNTRY):
        rules.append(FillinRule(CITY, target))
    for phone in PHONE_FIELDS:
        rules.append(FillinRule(CITY, phone, Transform.PHONE_AREA))
    rules.append(FillinRule(STATE, COUNTRY))
    return RuleSet(tuple(rules))


def apply_on_commit(
    record: Record,
    field_id: str,
    value: str,
    store: RecordStore,
    rules: RuleSet,
) -> list[FillinEvent]:
    """Run the fillin rules for a just-committed trigger value against a draft.

    Only targets that are empty or were themselves filled in get written;
    typed, written, and menu-chosen values stay put. Returns the events
    applied, in rule order. The draft itself is never a fillin source.
    """
    if field_id not in store.schema:
        raise RuleError(f"unknown field {field_id!r}")
    if not value:
        raise RuleError("empty trigger value")

    trigger_rules = rules.for_trigger(field_id)
    if not trigger_rules:
        return []
    source = store.find_latest_match(field_id, value)
    if source is None:
        return []

    events: list[FillinEvent] = []
    for rule in trigger_rules:
        current = record.value(rule.target)
        if current.provenance in USER_PROVENANCE:
            continue
        source_raw = source.raw(rule.target)
        if not source_raw:
            continue
        filled = apply_transform(rule.transform, source_raw)
        if not filled:
            continue
        record.set(
            rule.target,
            FieldValue(
                filled,
                Provenance.FILLIN,
                [EntryMethod.FILLIN] * word_count(filled),
            ),
        )
        events.append(FillinEvent(rule.target, filled, source.seq or 0, field_id))
    return events
