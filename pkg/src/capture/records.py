"""Form schema, field values, and record types.

Everything here is a plain value type: schemas describe an ordered list of
fields, records map field ids to values, and each value remembers how it was
entered (its provenance) down to the individual word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Iterable, Optional


class FieldKind(str, Enum):
    TEXT = "text"
    NUMERIC = "numeric"
    PHONE = "phone"
    EMAIL = "email"
    DATE = "date"


class Provenance(str, Enum):
    EMPTY = "empty"
    TYPED = "typed"
    WRITTEN = "written"
    MENU_CHOSEN = "menu_chosen"
    FILLIN = "fillin"


USER_PROVENANCE = frozenset({Provenance.TYPED, Provenance.WRITTEN, Provenance.MENU_CHOSEN})


class EntryMethod(str, Enum):
    """How a single word of a field value ended up in the record."""

    RECOGNIZED = "recognized"
    RECOG_MENU_1 = "recog_menu_1"
    LETTERS = "letters"
    RECOG_MENU_2 = "recog_menu_2"
    TYPED = "typed"
    MENU_CHOSEN = "menu_chosen"
    FILLIN = "fillin"


class SchemaError(ValueError):
    """Raised for malformed schemas, field specs, or values."""


@dataclass(frozen=True)
class FieldSpec:
    id: str
    label: str
    kind: FieldKind = FieldKind.TEXT
    static_choices: tuple[str, ...] = ()
    adaptive_menu: bool = False
    menu_capacity: int = 4
    category_choices: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id:
            raise SchemaError("field id must be non-empty")
        if self.adaptive_menu and self.menu_capacity < 1:
            raise SchemaError(f"field {self.id!r}: menu_capacity must be >= 1")
        if len(set(self.static_choices)) != len(self.static_choices):
            raise SchemaError(f"field {self.id!r}: duplicate static choices")
        if len(set(self.category_choices)) != len(self.category_choices):
            raise SchemaError(f"field {self.id!r}: duplicate category choices")

    @property
    def has_menu(self) -> bool:
        """True if tapping the field label can open any menu at all."""
        return self.adaptive_menu or bool(self.static_choices) or bool(self.category_choices)


@dataclass(frozen=True)
class Schema:
    fields: tuple[FieldSpec, ...]

    def __post_init__(self):
        ids = [f.id for f in self.fields]
        if len(set(ids)) != len(ids):
            raise SchemaError("duplicate field ids in schema")

    def __iter__(self):
        return iter(self.fields)

    def __len__(self):
        return len(self.fields)

    def field(self, field_id: str) -> FieldSpec:
        for f in self.fields:
            if f.id == field_id:
                return f
        raise SchemaError(f"unknown field {field_id!r}")

    def __contains__(self, field_id: str) -> bool:
        return any(f.id == field_id for f in self.fields)

    @property
    def field_ids(self) -> list[str]:
        return [f.id for f in self.fields]

    def to_json(self) -> str:
        doc = [
            {
                "id": f.id,
                "label": f.label,
                "kind": f.kind.value,
                "static_choices": list(f.static_choices),
                "adaptive_menu": f.adaptive_menu,
                "menu_capacity": f.menu_capacity,
                "category_choices": list(f.category_choices),
            }
            for f in self.fields
        ]
        return json.dumps({"fields": doc}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Schema":
        doc = json.loads(text)
        specs = []
        for entry in doc["fields"]:
            specs.append(
                FieldSpec(
                    id=entry["id"],
                    label=entry.get("label", entry["id"]),
                    kind=FieldKind(entry.get("kind", "text")),
                    static_choices=tuple(entry.get("static_choices", ())),
                    adaptive_menu=bool(entry.get("adaptive_menu", False)),
                    menu_capacity=int(entry.get("menu_capacity", 4)),
                    category_choices=tuple(entry.get("category_choices", ())),
                )
            )
        return cls(fields=tuple(specs))


@dataclass
class FieldValue:
    raw: str = ""
    provenance: Provenance = Provenance.EMPTY
    word_methods: list[EntryMethod] = dc_field(default_factory=list)

    def __post_init__(self):
        if (self.raw == "") != (self.provenance is Provenance.EMPTY):
            raise SchemaError(
                f"provenance {self.provenance.value!r} inconsistent with raw {self.raw!r}"
            )

    @property
    def is_empty(self) -> bool:
        return self.provenance is Provenance.EMPTY

    def copy(self) -> "FieldValue":
        return FieldValue(self.raw, self.provenance, list(self.word_methods))


@dataclass
class Record:
    id: str
    values: dict[str, FieldValue] = dc_field(default_factory=dict)
    seq: Optional[int] = None

    def value(self, field_id: str) -> FieldValue:
        return self.values.get(field_id, FieldValue())

    def raw(self, field_id: str) -> str:
        return self.value(field_id).raw

    def set(self, field_id: str, value: FieldValue) -> None:
        self.values[field_id] = value

    def copy(self) -> "Record":
        return Record(self.id, {k: v.copy() for k, v in self.values.items()}, self.seq)


def tokenize(value: str) -> list[str]:
    """Split a value into words: maximal runs of non-whitespace, in order."""
    return value.split()


def word_count(value: str) -> int:
    return len(tokenize(value))


def join_words(words: Iterable[str]) -> str:
    return " ".join(words)


def split_phone(value: str) -> tuple[str, str]:
    """Split a phone value into (copyable_prefix, last).

    The prefix is every word but the last, space-joined; a one-word number has
    nothing safely copyable and yields an empty prefix.
    """
    words = tokenize(value)
    if not words:
        raise ValueError("empty phone")
    return join_words(words[:-1]), words[-1]


def split_email(value: str) -> tuple[str, str]:
    """Split an email into (user, domain_part) at the first "@".

    The domain part keeps its leading "@" so a copied value is visibly
    incomplete. Without an "@" the whole string is the user part.
    """
    at = value.find("@")
    if at < 0:
        return value, ""
    return value[:at], value[at:]


# Canonical field ids used by the default schema and the built-in fillin rules.
HONORIFIC = "honorific"
FIRST_NAME = "first_name"
LAST_NAME = "last_name"
TITLE = "title"
COMPANY = "company"
ADDRESS = "address"
ADDRESS2 = "address2"
CITY = "city"
STATE = "state"
ZIP_CODE = "zip_code"
COUNTRY = "country"
EMAIL = "email"
PHONE1 = "phone1"
PHONE2 = "phone2"
PHONE3 = "phone3"
PHONE4 = "phone4"
BIRTHDATE = "birthdate"

PHONE_FIELDS = (PHONE1, PHONE2, PHONE3, PHONE4)

HONORIFIC_CHOICES = ("Ms.", "Mrs.", "Mr.", "Dr.")

# Placeholder country menu; the original list was configuration data of the
# device, so any 13 entries serve. Replace via a custom Schema if needed.
COUNTRY_CHOICES = (
    "U.S.A.",
    "Canada",
    "Mexico",
    "U.K.",
    "France",
    "Germany",
    "Italy",
    "Spain",
    "Japan",
    "Australia",
    "Brazil",
    "India",
    "China",
)

PHONE_CATEGORY_CHOICES = (
    "Phone",
    "Home",
    "Work",
    "Fax",
    "Car",
    "Beeper",
    "Mobile",
    "Other",
)


def default_schema() -> Schema:
    """The 17-field contact form: 9 fields carry an adaptive menu (7 plain
    plus the two that prepend recent values to fixed choices), the four phone
    fields carry category menus, and the rest have no menu."""

    def phone(fid: str, label: str) -> FieldSpec:
        return FieldSpec(fid, label, FieldKind.PHONE, category_choices=PHONE_CATEGORY_CHOICES)

    return Schema(
        fields=(
            FieldSpec(HONORIFIC, "Honorific", static_choices=HONORIFIC_CHOICES, adaptive_menu=True),
            FieldSpec(FIRST_NAME, "First Name"),
            FieldSpec(LAST_NAME, "Last Name"),
            FieldSpec(TITLE, "Title", adaptive_menu=True),
            FieldSpec(COMPANY, "Company", adaptive_menu=True),
            FieldSpec(ADDRESS, "Address", adaptive_menu=True),
            FieldSpec(ADDRESS2, "Address 2"),
            FieldSpec(CITY, "City", adaptive_menu=True),
            FieldSpec(STATE, "State", adaptive_menu=True),
            FieldSpec(ZIP_CODE, "Zip Code", FieldKind.NUMERIC, adaptive_menu=True),
            FieldSpec(COUNTRY, "Country", static_choices=COUNTRY_CHOICES, adaptive_menu=True),
            FieldSpec(EMAIL, "E-Mail", FieldKind.EMAIL, adaptive_menu=True),
            phone(PHONE1, "Phone 1"),
            phone(PHONE2, "Phone 2"),
            phone(PHONE3, "Phone 3"),
            phone(PHONE4, "Phone 4"),
            FieldSpec(BIRTHDATE, "Birthdate", FieldKind.DATE),
        )
    )
