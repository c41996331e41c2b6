#!/usr/bin/env python3
"""Generate a synthetic address-book corpus as JSONL for the analyzer.

Companies repeat with mostly consistent addresses (a few have two offices),
phone numbers share the company's area code and prefix but differ in
extension, and a long tail of one-off names keeps the head of each value
histogram honest. Feed the output to `capture mine` or `capture analyze`.
"""

import argparse
import random

from capture.records import FieldValue, Provenance, Record, default_schema
from capture.store import RecordStore

FIRST = ["Alice", "Benjamin", "Carla", "Devon", "Elena", "Frank", "Grace", "Hector", "Irene", "Jonas"]
LAST = ["Abrams", "Baker", "Castro", "Dunn", "Ellis", "Ferris", "Goto", "Hwang", "Ives", "Jensen"]
TITLES = ["Engineer", "Account Manager", "President", "Analyst", "Director of Sales"]
COMPANIES = [
    ("Cascadia Paper", "Tacoma", "WA", "98402", "253 555"),
    ("Puget Analytics", "Seattle", "WA", "98101", "206 555"),
    ("Inland Motors", "Spokane", "WA", "99201", "509 555"),
    ("Evergreen Foods", "Olympia", "WA", "98501", "360 555"),
    ("Rainier Optics", "Seattle", "WA", "98104", "206 555"),
    ("Columbia Freight", "Portland", "OR", "97201", "503 555"),
]
STREETS = ["Pine St", "Harbor Ave", "5th Ave", "Mill Rd", "Lake Blvd"]


def make_store(n: int, seed: int) -> RecordStore:
    rng = random.Random(seed)
    store = RecordStore(default_schema())
    for i in range(n):
        record = Record(id=f"s{i}")
        company, city, state, zip_code, prefix = rng.choice(COMPANIES)
        street = f"{rng.randrange(100, 9999)} {rng.choice(STREETS)}"
        if rng.random() < 0.8:
            # the common case: one office per company
            street = f"{hash(company) % 900 + 100} {STREETS[hash(company) % len(STREETS)]}"
        values = {
            "first_name": rng.choice(FIRST),
            "last_name": rng.choice(LAST),
            "title": rng.choice(TITLES) if rng.random() < 0.7 else "",
            "company": company if rng.random() < 0.9 else f"Solo Venture {i}",
            "address": street,
            "city": city,
            "state": state,
            "zip_code": zip_code,
            "phone1": f"{prefix} {rng.randrange(10000):04d}",
            "email": f"user{i}@{company.split()[0].lower()}.example" if rng.random() < 0.4 else "",
        }
        for fid, raw in values.items():
            if raw:
                record.set(fid, FieldValue(raw, Provenance.TYPED))
        store.finalize_record(record)
    return store


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="corpus.jsonl")
    args = parser.parse_args()

    store = make_store(args.n, args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        store.export_jsonl(fh)
    print(f"wrote {len(store)} records to {args.out}")


if __name__ == "__main__":
    main()
