"""Command-line entry points: serve, import, analyze, mine, simulate, report."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analyzer, reports
from .engine import CaptureEngine
from .records import default_schema
from .sampledata import BASE_VOCABULARY, demo_records
from .simulator import condition_by_name, condition_presets, run_experiment, RunResult
from .store import RecordStore


def _load_store(path: str | None) -> RecordStore:
    store = RecordStore(default_schema())
    if path and Path(path).exists():
        with open(path, "rb") as fh:
            store.import_corpus(fh, "jsonl")
    return store


def _save_store(store: RecordStore, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        store.export_jsonl(fh)


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    engine = CaptureEngine()
    if args.store and Path(args.store).exists():
        with open(args.store, "rb") as fh:
            engine.store.import_corpus(fh, "jsonl")
        menus_path = Path(args.store + ".menus.json")
        if menus_path.exists():
            from .menus import MenuState

            engine.menus = MenuState.from_json(engine.schema, menus_path.read_text("utf-8"))
    app = create_app(engine, store_path=args.store)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def cmd_import(args) -> int:
    store = _load_store(args.store)
    with open(args.file, "rb") as fh:
        count = store.import_corpus(fh, args.format)
    if args.store:
        _save_store(store, args.store)
    print(f"imported {count} records" + (f" into {args.store}" if args.store else ""))
    return 0


def cmd_analyze(args) -> int:
    store = _load_store(args.store)
    curve = analyzer.coverage_curve(store, args.field)
    size = analyzer.recommend_menu_size(curve, args.target)
    print(f"field: {args.field}")
    print(f"distinct values: {len(curve.histogram.counts)}  entries: {curve.histogram.total}")
    verdict = str(size) if size is not None else "none (no menu)"
    print(f"recommended menu size at target {args.target:.2f}: {verdict}")
    if args.csv:
        Path(args.csv).write_text(analyzer.coverage_points_csv(store, args.field), "utf-8")
        print(f"coverage points written to {args.csv}")
    return 0


def cmd_mine(args) -> int:
    store = _load_store(args.store)
    thresholds = analyzer.Thresholds(args.min_density, args.min_functionality, args.min_support)
    report = analyzer.mine(store, thresholds)
    if args.json:
        print(analyzer.mining_report_json(report))
    else:
        print(analyzer.mining_report_text(report), end="")
    if args.rules_out:
        Path(args.rules_out).write_text(report.rules.to_json(), "utf-8")
        print(f"rule set written to {args.rules_out}")
    return 0


def _load_records_jsonl(path: str) -> list:
    store = RecordStore(default_schema())
    with open(path, "rb") as fh:
        store.import_corpus(fh, "jsonl")
    return store.records


def cmd_simulate(args) -> int:
    if args.conditions.lower() == "all":
        conditions = condition_presets()
    else:
        conditions = [condition_by_name(n.strip()) for n in args.conditions.split(",")]
    records = _load_records_jsonl(args.records) if args.records else demo_records()
    results = run_experiment(
        records,
        conditions,
        repeats=args.repeats,
        seed=args.seed,
        schema=default_schema(),
        base_vocabulary=BASE_VOCABULARY,
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for r in results:
                fh.write(json.dumps(r.to_dict(), ensure_ascii=False) + "\n")
        print(f"{len(results)} runs written to {args.out}")
    table = reports.median_table(results)
    print(reports.median_table_text(table, [c.name for c in conditions]), end="")
    try:
        print()
        print(reports.speedup_text(reports.speedup_vs_null(table)), end="")
    except reports.ReportError:
        pass
    return 0


def cmd_report(args) -> int:
    if args.medians:
        table = reports.load_median_table(Path(args.medians).read_text("utf-8"))
        print(reports.median_table_text(table), end="")
        print()
        print(reports.speedup_text(reports.speedup_vs_null(table)), end="")
        return 0
    results = []
    with open(args.results, "r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                results.append(RunResult.from_dict(json.loads(line)))
    table = reports.median_table(results)
    print(reports.median_table_text(table), end="")
    try:
        print()
        print(reports.speedup_text(reports.speedup_vs_null(table)), end="")
    except reports.ReportError:
        pass
    print()
    print(reports.breakdown_text(reports.method_breakdown(results)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="capture", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP capture service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--store", default=None, help="JSONL store file to load and persist")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("import", help="import a corpus file into a store")
    p.add_argument("file")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--store", default=None)
    p.set_defaults(fn=cmd_import)

    p = sub.add_parser("analyze", help="coverage curve and menu size for one field")
    p.add_argument("--field", required=True)
    p.add_argument("--target", type=float, default=0.5)
    p.add_argument("--store", default=None)
    p.add_argument("--csv", default=None, help="write (k, coverage) points to this file")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("mine", help="recommend fillin rules and menu sizes from a corpus")
    p.add_argument("--min-density", type=float, default=0.2)
    p.add_argument("--min-functionality", type=float, default=0.8)
    p.add_argument("--min-support", type=int, default=10)
    p.add_argument("--store", default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--rules-out", default=None, help="write the recommended rule set as JSON")
    p.set_defaults(fn=cmd_mine)

    p = sub.add_parser("simulate", help="replay the entry experiment")
    p.add_argument("--conditions", default="all", help='"all" or comma-separated names')
    p.add_argument("--repeats", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write per-run results as JSONL")
    p.add_argument("--records", default=None, help="JSONL of records to enter (default: demo)")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("report", help="summarize medians, speedups, and entry methods")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--medians", help='JSON file {condition: {"worst": m, "best": m}}')
    group.add_argument("--results", help="JSONL of simulation runs")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except Exception as exc:  # surface a clean message, nonzero exit
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
