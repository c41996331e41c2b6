"""Case base of finalized records plus the recognition dictionary.

The store is an append-only list of records in entry order; fillin queries
walk it backwards so the most recent matching record wins. Records persist as
JSON lines of ``{"fields": {...}, "prov": {...}}``; a CSV import path accepts
a header row of field ids.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field as dc_field
from typing import IO, Iterable, Optional

from .records import FieldValue, Provenance, Record, Schema


class StoreError(ValueError):
    pass


class ImportFormatError(StoreError):
    """Malformed corpus input; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class RecordStore:
    schema: Schema
    records: list[Record] = dc_field(default_factory=list)
    case_insensitive_match: bool = False
    _next_seq: int = 1

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def next_seq(self) -> int:
        return self._next_seq

    def finalize_record(self, record: Record) -> int:
        for fid in record.values:
            if fid not in self.schema:
                raise StoreError(f"unknown field {fid!r}")
        if any(r.id == record.id for r in self.records):
            raise StoreError(f"duplicate record id {record.id!r}")
        record.seq = self._next_seq
        self._next_seq += 1
        self.records.append(record)
        return record.seq

    def find_latest_match(self, field_id: str, value: str) -> Optional[Record]:
        """The stored record with the greatest seq whose value for ``field_id``
        equals ``value`` exactly, or None."""
        if not value:
            raise StoreError("empty match value")
        if field_id not in self.schema:
            raise StoreError(f"unknown field {field_id!r}")
        needle = value.lower() if self.case_insensitive_match else value
        for record in reversed(self.records):
            raw = record.raw(field_id)
            if (raw.lower() if self.case_insensitive_match else raw) == needle:
                return record
        return None

    # -- persistence --------------------------------------------------------

    def import_corpus(self, source: IO[bytes] | IO[str], format: str = "jsonl") -> int:
        if format == "jsonl":
            return self._import_jsonl(source)
        if format == "csv":
            return self._import_csv(source)
        raise StoreError(f"unknown corpus format {format!r}")

    def _text_lines(self, source: IO[bytes] | IO[str]) -> Iterable[str]:
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        return data.splitlines()

    def _import_jsonl(self, source) -> int:
        count = 0
        for lineno, line in enumerate(self._text_lines(source), start=1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ImportFormatError(lineno, f"invalid JSON ({exc.msg})") from exc
            if not isinstance(doc, dict) or not isinstance(doc.get("fields"), dict):
                raise ImportFormatError(lineno, 'expected an object with a "fields" map')
            fields = doc["fields"]
            prov = doc.get("prov", {})
            record = Record(id=f"r{self._next_seq}")
            for fid, raw in fields.items():
                if fid not in self.schema:
                    raise ImportFormatError(lineno, f"unknown field {fid!r}")
                if not isinstance(raw, str):
                    raise ImportFormatError(lineno, f"field {fid!r}: value must be a string")
                record.set(fid, _imported_value(raw, prov.get(fid)))
            self.finalize_record(record)
            count += 1
        return count

    def _import_csv(self, source) -> int:
        lines = list(self._text_lines(source))
        if not lines:
            return 0
        reader = csv.reader(lines)
        header = next(reader)
        for fid in header:
            if fid not in self.schema:
                raise ImportFormatError(1, f"unknown field {fid!r}")
        count = 0
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) > len(header):
                raise ImportFormatError(lineno, f"{len(row)} cells for {len(header)} columns")
            record = Record(id=f"r{self._next_seq}")
            for fid, raw in zip(header, row):
                record.set(fid, _imported_value(raw, None))
            self.finalize_record(record)
            count += 1
        return count

    def export_jsonl(self, sink: IO[str]) -> int:
        """Write one JSON line per record (non-empty fields only)."""
        for record in self.records:
            sink.write(record_to_json_line(record) + "\n")
        return len(self.records)


def _imported_value(raw: str, prov: Optional[str]) -> FieldValue:
    if raw == "":
        return FieldValue()
    provenance = Provenance(prov) if prov else Provenance.TYPED
    if provenance is Provenance.EMPTY:
        provenance = Provenance.TYPED
    return FieldValue(raw, provenance)


def record_to_json_line(record: Record) -> str:
    fields = {fid: fv.raw for fid, fv in record.values.items() if not fv.is_empty}
    prov = {fid: fv.provenance.value for fid, fv in record.values.items() if not fv.is_empty}
    return json.dumps({"fields": fields, "prov": prov}, ensure_ascii=False)


class Dictionary:
    """Case-sensitive word set backing the recognition model."""

    def __init__(self, words: Iterable[str] = ()):
        self._words: set[str] = set()
        for w in words:
            self.add(w)

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: str) -> bool:
        return self.contains(word)

    def contains(self, word: str) -> bool:
        if not word:
            raise StoreError("empty word")
        return word in self._words

    def add(self, word: str) -> bool:
        """Insert a word; returns True only if it was newly added."""
        if not word:
            raise StoreError("empty word")
        if word in self._words:
            return False
        self._words.add(word)
        return True

    def copy(self) -> "Dictionary":
        d = Dictionary()
        d._words = set(self._words)
        return d
