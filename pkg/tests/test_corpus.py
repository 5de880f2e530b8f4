import json
from fractions import Fraction

import pytest

from idiff.corpus import (
    MAX_DISTANCE,
    case_from_entry,
    CorpusEntry,
    divergence_ratio,
    load_cases,
    load_entries,
    summarize_cases,
)

from conftest import CORPUS


def _write_case(root, name, old, new, ext="txt"):
    d = root / name
    d.mkdir()
    (d / f"old.{ext}").write_text(old)
    (d / f"new.{ext}").write_text(new)
    return d


def test_directory_layout_loads_sorted(tmp_path):
    _write_case(tmp_path, "zeta", "a\n", "b\n")
    _write_case(tmp_path, "alpha", "x\n", "y\n", ext="java")
    entries = load_entries(tmp_path)
    assert [e.case_id for e in entries] == ["alpha", "zeta"]
    assert entries[0].old_text == "x\n"


def test_extensionless_files_accepted(tmp_path):
    d = tmp_path / "bare"
    d.mkdir()
    (d / "old").write_text("a\n")
    (d / "new").write_text("b\n")
    assert len(load_entries(tmp_path)) == 1


def test_ambiguous_case_dirs_are_skipped(tmp_path, caplog):
    _write_case(tmp_path, "good", "a\n", "b\n")
    bad = _write_case(tmp_path, "bad", "a\n", "b\n")
    (bad / "old.py").write_text("a\n")
    with caplog.at_level("WARNING"):
        entries = load_entries(tmp_path)
    assert [e.case_id for e in entries] == ["good"]
    assert "bad" in caplog.text


def test_manifest_takes_precedence_over_dirs(tmp_path):
    _write_case(tmp_path, "dir_case", "a\n", "b\n")
    (tmp_path / "left.txt").write_text("old side\n")
    (tmp_path / "right.txt").write_text("new side\n")
    manifest = [{"id": "m1", "old": "left.txt", "new": "right.txt"}]
    (tmp_path / "manifest.jsonl").write_text(
        "\n".join(json.dumps(o) for o in manifest) + "\n"
    )
    entries = load_entries(tmp_path)
    assert [e.case_id for e in entries] == ["m1"]
    assert entries[0].new_text == "new side\n"


def test_bad_manifest_lines_logged_and_skipped(tmp_path, caplog):
    (tmp_path / "a.txt").write_text("a\n")
    (tmp_path / "b.txt").write_text("b\n")
    lines = [
        json.dumps({"id": "ok", "old": "a.txt", "new": "b.txt"}),
        "not json at all",
        json.dumps({"id": "missing", "old": "gone.txt", "new": "b.txt"}),
        json.dumps({"old": "a.txt", "new": "b.txt"}),
        "",
    ]
    (tmp_path / "manifest.jsonl").write_text("\n".join(lines) + "\n")
    with caplog.at_level("WARNING"):
        entries = load_entries(tmp_path)
    assert [e.case_id for e in entries] == ["ok"]
    assert "line 2" in caplog.text
    assert "line 3" in caplog.text
    assert "line 4" in caplog.text


def test_missing_root_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_entries(tmp_path / "nope")


def test_identical_pair_filtered_out():
    entry = CorpusEntry("same", "a\nb\n", "a\nb\n")
    assert case_from_entry(entry) is None


def test_convergent_pair_filtered_out():
    # both strategies produce the same diff, so there is nothing to optimize
    entry = CorpusEntry("conv", "a\n", "b\n")
    assert case_from_entry(entry) is None


def test_oversized_side_filtered_out():
    entry = CorpusEntry("big", "x\n" * 3001, "y\n")
    assert case_from_entry(entry) is None
    entry = CorpusEntry("edge", "x\n" * 3000, "x\n" * 2999 + "y\n")
    # within the cap; filtered only if the diffs agree
    case = case_from_entry(entry)
    assert case is None or case.pair.n == 3000


def test_distance_cap_filters(monkeypatch):
    import idiff.corpus as corpus_mod

    monkeypatch.setattr(corpus_mod, "MAX_DISTANCE", 1)
    entry = CorpusEntry("far", TWO_DIVERGENT[0], TWO_DIVERGENT[1])
    assert corpus_mod.case_from_entry(entry) is None
    assert MAX_DISTANCE == 30


# the smallest shape whose histogram diff disagrees with the shortest one:
# a rare line pairs with its copy while the frame shifts around it
TWO_DIVERGENT = (
    "r\nu\nr\n",
    "r\nr\nu\nr\n",
)


def test_divergent_pair_survives():
    entry = CorpusEntry("div", *TWO_DIVERGENT)
    case = case_from_entry(entry)
    assert case is not None
    assert case.initial != case.target
    assert case.initial_distance >= 1


def test_strip_blank_changes_the_pair():
    entry = CorpusEntry("blanky", "r\n\nu\nr\n", "r\nr\nu\nr\n")
    stripped = case_from_entry(entry, strip_blank=True)
    assert stripped is not None
    assert stripped.pair.n == 3
    kept = case_from_entry(entry, strip_blank=False)
    assert kept is None or kept.pair.n == 4


def test_load_cases_excludes_ids(tmp_path):
    _write_case(tmp_path, "keep", *TWO_DIVERGENT)
    _write_case(tmp_path, "drop", *TWO_DIVERGENT)
    cases = load_cases(tmp_path, exclude_ids=("drop",))
    assert [c.case_id for c in cases] == ["keep"]


def test_divergence_ratio_counts_disagreements():
    entries = [
        CorpusEntry("d1", *TWO_DIVERGENT),
        CorpusEntry("same", "a\nb\n", "a\nb\n"),
        CorpusEntry("conv", "a\n", "b\n"),
    ]
    assert divergence_ratio(entries) == Fraction(1, 3)
    assert divergence_ratio([]) == Fraction(0)


def test_summarize_cases_five_numbers():
    entries = [CorpusEntry(f"c{k}", *TWO_DIVERGENT) for k in range(3)]
    cases = [case_from_entry(e) for e in entries]
    stats = summarize_cases(cases)
    assert stats["count"] == 3
    assert stats["old_lines"] == {
        "min": 3, "q1": 3.0, "median": 3.0, "q3": 3.0, "max": 3, "mean": 3,
    }
    assert stats["new_lines"]["max"] == 4
    assert summarize_cases([]) == {"count": 0}


def test_single_case_summary_degenerates():
    case = case_from_entry(CorpusEntry("solo", *TWO_DIVERGENT))
    stats = summarize_cases([case])
    assert stats["old_lines"]["q1"] == stats["old_lines"]["q3"] == 3.0


def test_bundled_corpus_loads_whole():
    entries = load_entries(CORPUS)
    assert len(entries) == 20
    cases = load_cases(CORPUS)
    assert len(cases) == 20
    assert all(1 <= c.initial_distance <= 30 for c in cases)
    assert all(c.initial != c.target for c in cases)
