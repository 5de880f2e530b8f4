import random

from idiff import build_line_pair, histogram_diff, shortest_diff
from idiff.histogram import MAX_OCCURRENCES, _find_anchor
from idiff.model import diagonal

from helpers import random_pair


def test_identical_inputs_all_diagonals():
    pair = build_line_pair("a\nb\n", "a\nb\n")
    assert histogram_diff(pair).edges == (diagonal(1, 1), diagonal(2, 2))


def test_empty_sides():
    pair = build_line_pair("", "a\n")
    assert [e.kind.name for e in histogram_diff(pair).edges] == ["VERTICAL"]


def test_anchor_prefers_rarest_line():
    # "u" is unique on both sides; "r" repeats
    pair = build_line_pair("r\nu\nr\n", "r\nr\nu\nr\n")
    assert _find_anchor(pair, 1, pair.n, 1, pair.m) == (2, 3)


def test_anchor_tie_breaks_on_first_old_index():
    pair = build_line_pair("x\ny\n", "x\ny\n")
    assert _find_anchor(pair, 1, pair.n, 1, pair.m) == (1, 1)


def test_no_anchor_above_occurrence_cap():
    n = MAX_OCCURRENCES + 1
    text = "r\n" * n
    pair = build_line_pair(text, text)
    assert _find_anchor(pair, 1, pair.n, 1, pair.m) is None
    # the fallback still produces the plain shortest diff
    assert histogram_diff(pair) == shortest_diff(pair)


def test_matches_first_occurrences():
    pair = build_line_pair("u\nr\nr\n", "r\nu\nr\n")
    d = histogram_diff(pair)
    # anchor u at (1,2); left region adds new 1; right matches r/r in order
    assert (1, 2) in d.matches


def test_valid_path_on_random_pairs():
    rng = random.Random(12)
    for _ in range(300):
        pair = random_pair(rng, max_side=10)
        d = histogram_diff(pair)
        d.validate(pair)
        assert len(d.edges) >= len(shortest_diff(pair).edges)


def test_deterministic():
    rng = random.Random(13)
    for _ in range(50):
        pair = random_pair(rng)
        assert histogram_diff(pair) == histogram_diff(pair)


def test_running_example_target(running_pair):
    d = histogram_diff(running_pair)
    assert d.matches == ((1, 1), (2, 5), (3, 6), (5, 8), (11, 9), (12, 10))
    assert len(d.edges) == 16
    # diverges from the shortest diff: that gap is what feedback must close
    assert d != shortest_diff(running_pair)
    assert len(shortest_diff(running_pair).edges) == 15


def test_unique_anchors_beat_frame_cross_matching():
    # shortest cross-matches the comment frames; histogram pins the methods
    old = "    /**\n     * a\n     */\n    int alpha();\n    /**\n     * b\n     */\n    int beta();\n"
    new = "    /**\n     * b\n     */\n    int beta();\n"
    pair = build_line_pair(old, new)
    hist = histogram_diff(pair)
    assert (8, 4) in hist.matches  # beta() kept as itself
    assert (6, 2) in hist.matches  # its comment body kept
