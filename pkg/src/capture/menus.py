"""Per-field most-recently-used queues composed into split menus.

Each adaptive field keeps a short MRU queue of previously entered values;
opening its menu shows those recent values first, followed verbatim by the
field's fixed choices. Total menu state is linear in fields x capacity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .records import Schema

# Screen real estate caps a menu; anything below this line is cut, fixed
# choices first from the tail.
MAX_MENU_ENTRIES = 23


class MenuError(ValueError):
    pass


@dataclass
class MruQueue:
    field: str
    capacity: int
    items: list[str] = dc_field(default_factory=list)

    def use(self, value: str) -> None:
        """Move ``value`` to the front, dropping an earlier occurrence and
        truncating to capacity. Empty values are ignored."""
        if value == "":
            return
        if value in self.items:
            self.items.remove(value)
        self.items.insert(0, value)
        del self.items[self.capacity:]


@dataclass(frozen=True)
class SplitMenu:
    recent: tuple[str, ...]
    fixed: tuple[str, ...]

    @property
    def entries(self) -> tuple[str, ...]:
        return self.recent + self.fixed

    def index_of(self, value: str) -> int:
        """Position of ``value`` in display order, or -1."""
        try:
            return self.entries.index(value)
        except ValueError:
            return -1


class MenuState:
    """All MRU queues for one schema, keyed by field id."""

    def __init__(self, schema: Schema):
        self.schema = schema
        self._queues: dict[str, MruQueue] = {}

    def queue(self, field_id: str) -> MruQueue:
        spec = self.schema.field(field_id)
        if not spec.adaptive_menu:
            raise MenuError(f"no menu for field {field_id!r}")
        q = self._queues.get(field_id)
        if q is None:
            q = MruQueue(field_id, spec.menu_capacity)
            self._queues[field_id] = q
        return q

    def record_use(self, field_id: str, value: str) -> None:
        self.queue(field_id).use(value)

    def menu_for(self, field_id: str) -> SplitMenu:
        """Compose recent + fixed choices for a field, truncated for display.

        Category menus (fixed labels that categorize rather than fill the
        field) come through as fixed-only menus.
        """
        spec = self.schema.field(field_id)
        if not spec.has_menu:
            raise MenuError(f"no menu for field {field_id!r}")
        recent = tuple(self._queues[field_id].items) if field_id in self._queues else ()
        if not spec.adaptive_menu:
            recent = ()
        fixed = spec.static_choices or spec.category_choices
        room = max(0, MAX_MENU_ENTRIES - len(recent))
        return SplitMenu(recent=recent, fixed=tuple(fixed[:room]))

    def choose(self, field_id: str, index: int) -> str:
        """Pick the menu entry at ``index``; choosing counts as a use for
        adaptive fields, so the value moves to the front of recent."""
        menu = self.menu_for(field_id)
        entries = menu.entries
        if not 0 <= index < len(entries):
            raise MenuError(f"menu index {index} out of range for field {field_id!r}")
        value = entries[index]
        if self.schema.field(field_id).adaptive_menu:
            self.record_use(field_id, value)
        return value

    # -- persistence --------------------------------------------------------

    def to_json(self) -> str:
        doc = {fid: list(q.items) for fid, q in self._queues.items() if q.items}
        return json.dumps(doc, ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, schema: Schema, text: str) -> "MenuState":
        state = cls(schema)
        doc = json.loads(text)
        for fid, items in doc.items():
            q = state.queue(fid)
            for value in reversed(items):
                q.use(value)
        return state

    def entry_count(self) -> int:
        return sum(len(q.items) for q in self._queues.values())
