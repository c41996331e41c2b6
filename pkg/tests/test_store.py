import io

import pytest

from capture.records import FieldValue, Provenance, Record, default_schema
from capture.sampledata import demo_records
from capture.store import Dictionary, ImportFormatError, RecordStore, StoreError


@pytest.fixture
def store():
    return RecordStore(default_schema())


def make_record(rid, **fields):
    r = Record(id=rid)
    for fid, raw in fields.items():
        r.set(fid, FieldValue(raw, Provenance.TYPED))
    return r


class TestFinalize:
    def test_first_seq_is_one(self, store):
        assert store.finalize_record(make_record("a", city="Seattle")) == 1

    def test_seq_strictly_increasing(self, store):
        s1 = store.finalize_record(make_record("a", city="Seattle"))
        s2 = store.finalize_record(make_record("b", city="Spokane"))
        assert s2 > s1

    def test_empty_record_accepted(self, store):
        assert store.finalize_record(Record(id="empty")) == 1

    def test_duplicate_id_rejected(self, store):
        store.finalize_record(make_record("a", city="Seattle"))
        with pytest.raises(StoreError, match="duplicate"):
            store.finalize_record(make_record("a", city="Tacoma"))

    def test_unknown_field_rejected(self, store):
        bad = Record(id="x", values={"bogus": FieldValue("v", Provenance.TYPED)})
        with pytest.raises(StoreError, match="unknown field"):
            store.finalize_record(bad)


class TestFindLatestMatch:
    def test_finds_matching_company(self, store):
        for r in demo_records():
            store.finalize_record(r)
        hit = store.find_latest_match("company", "IBM")
        assert hit is not None
        assert hit.raw("first_name") == "Robert"
        assert hit.raw("title") == "Account Marketing Rep"

    def test_no_match_returns_none(self, store):
        for r in demo_records():
            store.finalize_record(r)
        assert store.find_latest_match("company", "Acme") is None

    def test_latest_of_two_matches_wins(self, store):
        store.finalize_record(make_record("a", city="Seattle", state="WA"))
        store.finalize_record(make_record("b", city="Seattle", state="OR"))
        hit = store.find_latest_match("city", "Seattle")
        assert hit.id == "b"
        # reversed insertion order flips the winner
        other = RecordStore(default_schema())
        other.finalize_record(make_record("b", city="Seattle", state="OR"))
        other.finalize_record(make_record("a", city="Seattle", state="WA"))
        assert other.find_latest_match("city", "Seattle").id == "a"

    def test_match_is_case_sensitive_by_default(self, store):
        store.finalize_record(make_record("a", company="Acme"))
        assert store.find_latest_match("company", "acme") is None

    def test_case_insensitive_flag(self):
        store = RecordStore(default_schema(), case_insensitive_match=True)
        store.finalize_record(make_record("a", company="Acme"))
        assert store.find_latest_match("company", "ACME").id == "a"

    def test_empty_value_rejected(self, store):
        with pytest.raises(StoreError):
            store.find_latest_match("company", "")

    def test_brute_force_oracle(self, store):
        values = ["A", "B", "A", "C", "B", "A"]
        for n, v in enumerate(values):
            store.finalize_record(make_record(f"r{n}", company=v))
        for needle in ["A", "B", "C", "Z"]:
            expected = None
            for r in store.records:  # independent linear scan, max seq wins
                if r.raw("company") == needle and (expected is None or r.seq > expected.seq):
                    expected = r
            assert store.find_latest_match("company", needle) is expected


class TestImport:
    def test_jsonl_import_count(self, store):
        lines = b'{"fields": {"company": "IBM", "city": "Spokane"}}\n' * 3
        # ids are generated per line, so three identical lines are three records
        assert store.import_corpus(io.BytesIO(lines), "jsonl") == 3
        assert len(store) == 3

    def test_empty_file(self, store):
        assert store.import_corpus(io.BytesIO(b""), "jsonl") == 0

    def test_bad_line_reports_line_number(self, store):
        data = b'{"fields": {"city": "A"}}\n{"fields": {"city": "B"}}\nnot json\n'
        with pytest.raises(ImportFormatError) as err:
            store.import_corpus(io.BytesIO(data), "jsonl")
        assert err.value.line == 3

    def test_unknown_field_named_in_error(self, store):
        data = b'{"fields": {"shoe_size": "12"}}\n'
        with pytest.raises(ImportFormatError, match="shoe_size"):
            store.import_corpus(io.BytesIO(data), "jsonl")

    def test_blank_cells_become_empty_values(self, store):
        data = b'{"fields": {"company": "IBM", "city": ""}}\n'
        store.import_corpus(io.BytesIO(data), "jsonl")
        assert store.records[0].value("city").is_empty

    def test_provenance_preserved(self, store):
        data = b'{"fields": {"city": "Spokane"}, "prov": {"city": "fillin"}}\n'
        store.import_corpus(io.BytesIO(data), "jsonl")
        assert store.records[0].value("city").provenance is Provenance.FILLIN

    def test_csv_import(self, store):
        data = b"company,city\nIBM,Spokane\nAldus Corporation,Seattle\n"
        assert store.import_corpus(io.BytesIO(data), "csv") == 2
        assert store.records[1].raw("company") == "Aldus Corporation"
        assert store.records[0].value("city").provenance is Provenance.TYPED

    def test_csv_unknown_header(self, store):
        with pytest.raises(ImportFormatError, match="hat_size"):
            store.import_corpus(io.BytesIO(b"hat_size\n7\n"), "csv")

    def test_csv_blank_cell(self, store):
        store.import_corpus(io.BytesIO(b"company,city\nIBM,\n"), "csv")
        assert store.records[0].value("city").is_empty

    def test_round_trip_preserves_values(self, store):
        data = (
            b'{"fields": {"company": "IBM", "city": "Spokane"}, "prov": {"company": "typed", "city": "fillin"}}\n'
            b'{"fields": {"state": "WA"}, "prov": {"state": "written"}}\n'
        )
        store.import_corpus(io.BytesIO(data), "jsonl")
        out = io.StringIO()
        store.export_jsonl(out)
        again = RecordStore(default_schema())
        again.import_corpus(io.BytesIO(out.getvalue().encode()), "jsonl")
        for a, b in zip(store.records, again.records):
            for fid in store.schema.field_ids:
                assert a.raw(fid) == b.raw(fid)
                assert a.value(fid).provenance == b.value(fid).provenance


class TestDictionary:
    def test_add_then_contains(self):
        d = Dictionary()
        assert d.add("RAIMA") is True
        assert d.contains("RAIMA") is True

    def test_fresh_dictionary_is_empty(self):
        assert Dictionary().contains("RAIMA") is False

    def test_add_is_idempotent(self):
        d = Dictionary()
        assert d.add("RAIMA") is True
        assert d.add("RAIMA") is False
        assert len(d) == 1

    def test_case_sensitive(self):
        d = Dictionary(["Seattle"])
        assert d.contains("Seattle") and not d.contains("seattle")

    def test_empty_word_rejected(self):
        d = Dictionary()
        with pytest.raises(StoreError):
            d.add("")
        with pytest.raises(StoreError):
            d.contains("")
