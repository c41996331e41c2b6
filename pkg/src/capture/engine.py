"""Live capture engine: drafts, field commits with fillin, finalize.

One engine owns the record store, the adaptive menu state, the dictionary,
and the open drafts. All mutations run under a single lock (single writer,
snapshot readers), and adaptive menus update at finalize time so abandoned
drafts never pollute them.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .fillin import FillinEvent, RuleSet, apply_on_commit, default_rules
from .menus import MenuError, MenuState, SplitMenu
from .records import (
    EntryMethod,
    FieldValue,
    Provenance,
    Record,
    Schema,
    default_schema,
    word_count,
)
from .store import RecordStore


class EngineError(Exception):
    """Engine-level failure with an HTTP-ish status for the service layer."""

    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class DraftSession:
    draft_id: str
    record: Record
    finalized: bool = False


_SOURCE_PROVENANCE = {
    "typed": (Provenance.TYPED, EntryMethod.TYPED),
    "written": (Provenance.WRITTEN, EntryMethod.RECOGNIZED),
    "menu": (Provenance.MENU_CHOSEN, EntryMethod.MENU_CHOSEN),
}


class CaptureEngine:
    def __init__(
        self,
        schema: Optional[Schema] = None,
        rules: Optional[RuleSet] = None,
    ):
        self.schema = schema or default_schema()
        self.rules = rules if rules is not None else default_rules()
        self.store = RecordStore(self.schema)
        self.menus = MenuState(self.schema)
        self._drafts: dict[str, DraftSession] = {}
        self._draft_counter = 0
        self._lock = threading.RLock()

    # -- drafts ---------------------------------------------------------------

    def new_draft(self) -> DraftSession:
        with self._lock:
            self._draft_counter += 1
            draft_id = f"d{self._draft_counter}"
            session = DraftSession(draft_id, Record(id=draft_id))
            self._drafts[draft_id] = session
            return session

    def _session(self, draft_id: str) -> DraftSession:
        session = self._drafts.get(draft_id)
        if session is None:
            raise EngineError(404, f"unknown draft {draft_id!r}")
        return session

    def draft_record(self, draft_id: str) -> Record:
        with self._lock:
            return self._session(draft_id).record.copy()

    def commit_field(
        self, draft_id: str, field_id: str, value: str, source: str = "typed"
    ) -> tuple[list[FillinEvent], Optional[SplitMenu]]:
        """Set a field with user provenance, run fillin, and echo the field's
        menu for client refresh. An empty value is only legal as a typed
        clear."""
        with self._lock:
            session = self._session(draft_id)
            if session.finalized:
                raise EngineError(409, f"draft {draft_id!r} already finalized")
            if field_id not in self.schema:
                raise EngineError(404, f"unknown field {field_id!r}")
            if source not in _SOURCE_PROVENANCE:
                raise EngineError(422, f"unknown source {source!r}")
            if value == "" and source != "typed":
                raise EngineError(422, "empty value is only valid as a typed clear")

            record = session.record
            if value == "":
                record.set(field_id, FieldValue())
                events: list[FillinEvent] = []
            else:
                provenance, method = _SOURCE_PROVENANCE[source]
                record.set(
                    field_id,
                    FieldValue(value, provenance, [method] * word_count(value)),
                )
                events = apply_on_commit(record, field_id, value, self.store, self.rules)
            return events, self.menu_or_none(field_id)

    def finalize_draft(self, draft_id: str) -> int:
        """Append the draft to the store and refresh the adaptive menus with
        its non-empty values."""
        with self._lock:
            session = self._session(draft_id)
            if session.finalized:
                raise EngineError(409, f"draft {draft_id!r} already finalized")
            seq = self.store.finalize_record(session.record)
            session.finalized = True
            for spec in self.schema:
                if spec.adaptive_menu:
                    raw = session.record.raw(spec.id)
                    if raw:
                        self.menus.record_use(spec.id, raw)
            return seq

    # -- queries --------------------------------------------------------------

    def menu_for(self, field_id: str) -> SplitMenu:
        with self._lock:
            if field_id not in self.schema:
                raise EngineError(404, f"unknown field {field_id!r}")
            try:
                return self.menus.menu_for(field_id)
            except MenuError as exc:
                raise EngineError(404, str(exc)) from exc

    def menu_or_none(self, field_id: str) -> Optional[SplitMenu]:
        try:
            return self.menu_for(field_id)
        except EngineError:
            return None

    def records_page(self, limit: int = 50, offset: int = 0) -> tuple[list[Record], int]:
        with self._lock:
            records = self.store.records
            return [r.copy() for r in records[offset : offset + limit]], len(records)
