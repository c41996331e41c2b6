import pytest
from hypothesis import given, strategies as st

from capture.records import EntryMethod
from capture.reports import (
    MedianTable,
    ReportError,
    breakdown_text,
    load_median_table,
    median_table,
    median_table_text,
    method_breakdown,
    speedup_vs_null,
    throughput_metrics,
)
from capture.simulator import RunResult, WordEntry

# Published study medians, minutes per record.
STUDY_MEDIANS = {
    ("Typed", "worst"): 2.72,
    ("Typed", "best"): 2.52,
    ("Null", "worst"): 4.25,
    ("Null", "best"): 3.65,
    ("D", "worst"): 4.50,
    ("D", "best"): 3.30,
    ("AM", "worst"): 4.32,
    ("AM", "best"): 1.37,
    ("PF", "worst"): 4.07,
    ("PF", "best"): 2.02,
    ("All", "worst"): 4.15,
    ("All", "best"): 1.08,
}


def run(condition, record_id, pass_label, sheet, duration=60.0):
    return RunResult(
        condition=condition,
        record_id=record_id,
        pass_number=1 if pass_label == "worst" else 2,
        pass_label=pass_label,
        duration_seconds=duration,
        action_counts={},
        sheet=sheet,
    )


class TestSpeedups:
    def test_study_medians_reproduce_published_percentages(self):
        speedups = speedup_vs_null(MedianTable(STUDY_MEDIANS))
        assert speedups["D"] == pytest.approx(29, abs=1)
        assert speedups["AM"] == pytest.approx(210, abs=1)
        assert speedups["PF"] == pytest.approx(110, abs=1)
        assert speedups["All"] == pytest.approx(294, abs=1)

    def test_null_against_equal_best_is_zero(self):
        table = MedianTable({("Null", "worst"): 4.25, ("Null", "best"): 4.25})
        assert speedup_vs_null(table)["Null"] == pytest.approx(0.0)

    def test_missing_null_worst_named(self):
        with pytest.raises(ReportError, match="Null"):
            speedup_vs_null(MedianTable({("D", "best"): 3.3}))

    def test_missing_best_entries_named(self):
        table = MedianTable({("Null", "worst"): 4.25, ("Null", "best"): 3.65, ("D", "worst"): 4.5})
        with pytest.raises(ReportError, match="D"):
            speedup_vs_null(table)

    @given(st.floats(min_value=0.01, max_value=1000))
    def test_invariant_under_uniform_rescaling(self, scale):
        base = speedup_vs_null(MedianTable(STUDY_MEDIANS))
        scaled = speedup_vs_null(
            MedianTable({k: v * scale for k, v in STUDY_MEDIANS.items()})
        )
        for cond in base:
            assert scaled[cond] == pytest.approx(base[cond])

    def test_nonpositive_median_rejected(self):
        with pytest.raises(ReportError):
            MedianTable({("Null", "worst"): 0.0})


class TestThroughput:
    def test_handwriting_rates(self):
        m = throughput_metrics(98.2, 20.8, 3.30)
        assert m["cpm"] == pytest.approx(29.8, abs=0.1)
        assert round(m["cpm"]) == 30
        assert m["wpm"] == pytest.approx(6.3, abs=0.1)

    def test_typing_rate(self):
        m = throughput_metrics(98.2, 20.8, 2.52)
        assert m["wpm"] == pytest.approx(8.3, abs=0.1)

    def test_simple_numbers(self):
        m = throughput_metrics(100, 10, 10)
        assert m["cpm"] == pytest.approx(10.0)
        assert m["wpm"] == pytest.approx(1.0)

    @pytest.mark.parametrize("bad", [(0, 10, 1), (10, -1, 1), (10, 10, 0)])
    def test_nonpositive_inputs_rejected(self, bad):
        with pytest.raises(ReportError):
            throughput_metrics(*bad)


class TestMedianTable:
    def test_median_of_runs_midpoint_convention(self):
        results = [
            run("Null", f"r{i}", "worst", {}, duration=d)
            for i, d in enumerate([60.0, 120.0, 240.0, 300.0])
        ]
        table = median_table(results)
        assert table.get("Null", "worst") == pytest.approx(3.0)  # (2+4)/2 minutes

    def test_load_from_json(self):
        text = '{"Null": {"worst": 4.25, "best": 3.65}, "D": {"best": 3.30}}'
        table = load_median_table(text)
        assert table.get("Null", "worst") == 4.25
        assert table.get("D", "best") == 3.30

    def test_render_smoke(self):
        text = median_table_text(MedianTable(STUDY_MEDIANS))
        assert "Typed" in text and "Worst" in text and "4.25" in text


class TestMethodBreakdown:
    def test_hand_built_ten_word_field(self):
        # one field, 10 words: 2 typed straight in, 3 menu-chosen, 5 recognized
        sheet = {
            "city": (
                [WordEntry(EntryMethod.TYPED, written=False)] * 2
                + [WordEntry(EntryMethod.MENU_CHOSEN, written=False)] * 3
                + [WordEntry(EntryMethod.RECOGNIZED, written=True)] * 5
            )
        }
        [fb] = method_breakdown([run("All", "r1", "worst", sheet)])
        assert fb.all_words == 10
        assert fb.typed == pytest.approx(0.20)
        assert fb.menu_chosen == pytest.approx(0.30)
        assert fb.written_share == pytest.approx(0.50)
        assert fb.written_attempts == 5
        assert fb.cumulative_recognition[0] == pytest.approx(1.0)

    def test_all_fillin_field(self):
        sheet = {"state": [WordEntry(EntryMethod.FILLIN, written=False)]}
        [fb] = method_breakdown([run("All", "r1", "best", sheet)])
        assert fb.fillin == pytest.approx(1.0)
        assert fb.written_attempts == 0
        assert fb.cumulative_recognition == (0.0, 0.0, 0.0, 0.0)

    def test_everything_recognized_first_try(self):
        sheet = {
            "first_name": [WordEntry(EntryMethod.RECOGNIZED, written=True)],
            "last_name": [WordEntry(EntryMethod.RECOGNIZED, written=True)],
        }
        for fb in method_breakdown([run("Null", "r1", "worst", sheet)]):
            assert fb.cumulative_recognition[0] == pytest.approx(1.0)
            assert fb.cumulative_recognition[3] == pytest.approx(1.0)

    def test_cascade_typed_word_counts_in_both_denominators(self):
        # written attempt that fell through: attempt for the left half,
        # typed for the right half
        sheet = {
            "company": [
                WordEntry(EntryMethod.TYPED, written=True),
                WordEntry(EntryMethod.RECOGNIZED, written=True),
            ]
        }
        [fb] = method_breakdown([run("Null", "r1", "worst", sheet)])
        assert fb.written_attempts == 2
        assert fb.cumulative_recognition[3] == pytest.approx(0.5)
        assert fb.typed == pytest.approx(0.5)
        assert fb.written_share == pytest.approx(0.5)

    def test_partition_sums_to_one_per_field(self):
        sheet = {
            "city": [
                WordEntry(EntryMethod.TYPED, written=True),
                WordEntry(EntryMethod.MENU_CHOSEN, written=False),
                WordEntry(EntryMethod.FILLIN, written=False),
                WordEntry(EntryMethod.LETTERS, written=True),
                WordEntry(EntryMethod.RECOG_MENU_2, written=True),
            ]
        }
        [fb] = method_breakdown([run("All", "r1", "best", sheet)])
        total = fb.typed + fb.menu_chosen + fb.fillin + fb.written_share
        assert total == pytest.approx(1.0)

    def test_aggregates_across_runs(self):
        r1 = run("Null", "r1", "worst", {"city": [WordEntry(EntryMethod.TYPED, written=False)]})
        r2 = run("Null", "r2", "worst", {"city": [WordEntry(EntryMethod.FILLIN, written=False)]})
        [fb] = method_breakdown([r1, r2])
        assert fb.all_words == 2
        assert fb.typed == pytest.approx(0.5)
        assert fb.fillin == pytest.approx(0.5)

    def test_empty_results_rejected(self):
        with pytest.raises(ReportError):
            method_breakdown([])

    def test_render_smoke(self):
        sheet = {"city": [WordEntry(EntryMethod.RECOGNIZED, written=True)]}
        text = breakdown_text(method_breakdown([run("Null", "r1", "worst", sheet)]))
        assert "city" in text and "100" in text
