#!/usr/bin/env python3
"""Replay the six-condition entry experiment over the demo corpus and print
the median table, speedups, and the per-field entry-method breakdown."""

import argparse

from capture.reports import (
    breakdown_text,
    median_table,
    median_table_text,
    method_breakdown,
    speedup_text,
    speedup_vs_null,
    throughput_metrics,
)
from capture.records import default_schema, tokenize
from capture.sampledata import BASE_VOCABULARY, demo_records
from capture.simulator import condition_presets, run_experiment


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=2)
    args = parser.parse_args()

    records = demo_records()
    results = run_experiment(
        records,
        condition_presets(),
        repeats=args.repeats,
        seed=args.seed,
        base_vocabulary=BASE_VOCABULARY,
    )
    table = median_table(results)

    print("Median minutes per record")
    print(median_table_text(table, [c.name for c in condition_presets()]))
    print("Speedup of each condition's best case over the bare-writing worst case")
    print(speedup_text(speedup_vs_null(table)))

    schema = default_schema()
    chars = sum(
        len(w) for r in records for fid in schema.field_ids for w in tokenize(r.raw(fid))
    ) / len(records)
    words = sum(
        len(tokenize(r.raw(fid))) for r in records for fid in schema.field_ids
    ) / len(records)
    for name in ("Typed", "D"):
        best = table.get(name, "best")
        rates = throughput_metrics(chars, words, best)
        print(f"{name} best-case throughput: {rates['cpm']:.1f} cpm, {rates['wpm']:.1f} wpm")

    print()
    print("Entry methods by field (recognition over written words; rest over all words)")
    print(breakdown_text(method_breakdown(results)))


if __name__ == "__main__":
    main()
