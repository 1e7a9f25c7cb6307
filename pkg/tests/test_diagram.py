"""Diagram combinatorics: builds, moves, keys, and planar diagram codes."""

from __future__ import annotations

import json
import random

import pytest

from twistlab.diagram import (
    AXIAL,
    CROSS_SECTIONAL,
    HORIZONTAL,
    INFINITY,
    VERTICAL,
    ZERO,
    BadArityError,
    DanglingLabelError,
    DiagramError,
    EmptyDiagramError,
    LabelCountMismatchError,
    LinkDiagram,
    UnknownCrossingError,
    UntaggedCrossingError,
    build_standard,
    canonical_key,
    classify_smoothing,
    components,
    connected_sum,
    diagram_from_arcs,
    is_alternating,
    mirror,
    parse_pd,
    remove_curls,
    self_writhe,
    smooth,
    switch,
    to_pd,
    unlink,
)
from twistlab.notation import enumerate_standard, parse_conway, continued_fraction

from helpers import DATA, add_curl, all_splices, pretzel, relabel


def _build(text):
    return build_standard(parse_conway(text))


# ---------------------------------------------------------------------------
# construction

def test_build_counts():
    hopf = _build("2")
    assert hopf.crossings == 2 and components(hopf) == 2
    tre = _build("3")
    assert tre.crossings == 3 and components(tre) == 1
    f8 = _build("2 2")
    assert f8.crossings == 4 and components(f8) == 1


def test_builds_are_alternating_and_curl_free():
    for c in range(2, 9):
        for code in enumerate_standard(c):
            d = build_standard(code)
            assert d.crossings == code.crossings
            assert is_alternating(d)
            stripped, shift = remove_curls(d)
            assert shift == 0 and stripped == d


def test_component_count_follows_fraction_parity():
    # the closure is a two-bridge link: two components iff the fraction
    # numerator is even
    for c in range(2, 9):
        for code in enumerate_standard(c):
            want = 2 if continued_fraction(code).numerator % 2 == 0 else 1
            assert components(build_standard(code)) == want


def test_build_tags_record_sites_and_axes():
    d = _build("2 1 1 1 2")
    axes = [t.axis for t in d.tags]
    sites = [t.site for t in d.tags]
    assert axes == ["h", "h", "v", "h", "v", "h", "h"]
    assert sites == [0, 0, 1, 2, 3, 4, 4]


def test_unlink_and_validation():
    assert components(unlink(3)) == 3
    assert unlink(0).crossings == 0
    with pytest.raises(DiagramError):
        LinkDiagram((1, 0, 3), 0)  # not a multiple of four
    with pytest.raises(DiagramError):
        LinkDiagram((0, 1, 3, 2), 0)  # fixed point
    with pytest.raises(DiagramError):
        diagram_from_arcs(1, [((0, 0), (0, 1)), ((0, 1), (0, 2))])


# ---------------------------------------------------------------------------
# smoothings

def test_trefoil_axial_smoothing_is_hopf():
    tre = _build("3")
    hopf = _build("2")
    for x in range(3):
        assert classify_smoothing(tre, x, INFINITY) == AXIAL
        assert smooth(tre, x, INFINITY) == hopf


def test_trefoil_cross_sectional_smoothing_leaves_two_positive_curls():
    tre = _build("3")
    for x in range(3):
        assert classify_smoothing(tre, x, ZERO) == CROSS_SECTIONAL
        d, shift = remove_curls(smooth(tre, x, ZERO))
        assert shift == 2
        assert d.crossings == 0 and d.free_loops == 1


def test_smoothing_singleton_site_axially_merges_neighbours():
    d = _build("2 1 1 1 2")
    # crossing 4 is the singleton at site 3 (vertical)
    assert d.tags[4].site == 3 and d.tags[4].axis == VERTICAL
    assert classify_smoothing(d, 4, ZERO) == AXIAL
    assert smooth(d, 4, ZERO) == _build("2 1 3")


def test_smoothing_singleton_site_crosswise_gives_a_splice():
    d = _build("2 1 1 1 2")
    cut = smooth(d, 4, INFINITY)
    assert classify_smoothing(d, 4, INFINITY) == CROSS_SECTIONAL
    stripped, shift = remove_curls(cut)
    assert shift == 0
    assert any(s == stripped for s in all_splices(_build("2 2"), _build("2")))


def test_smoothing_a_kink_parallel_to_its_arc_frees_a_circle():
    d = smooth(_build("2"), 0, ZERO)  # one crossing with a +1 kink
    assert d.crossings == 1
    assert remove_curls(d) == (unlink(1), 1)
    dd = smooth(d, 0, ZERO)
    assert dd.crossings == 0 and dd.free_loops == 2
    assert components(dd) == 2


def test_smooth_changes_components_by_at_most_one():
    rng = random.Random(7)
    for c in range(2, 8):
        for code in enumerate_standard(c):
            d = build_standard(code)
            x = rng.randrange(d.crossings)
            for mode in (ZERO, INFINITY):
                assert abs(components(smooth(d, x, mode)) - components(d)) <= 1


def test_smooth_rejects_bad_input():
    d = _build("2")
    with pytest.raises(UnknownCrossingError):
        smooth(d, 2, ZERO)
    with pytest.raises(DiagramError):
        smooth(d, 0, "sideways")


def test_classify_requires_a_tag():
    d = parse_pd(to_pd(_build("3")))
    with pytest.raises(UntaggedCrossingError):
        classify_smoothing(d, 0, ZERO)


# ---------------------------------------------------------------------------
# switch and mirror

def test_switch_is_an_involution_and_keeps_counts():
    for text in ("2", "3", "2 1 2"):
        d = _build(text)
        for x in range(d.crossings):
            s = switch(d, x)
            assert s.crossings == d.crossings
            assert components(s) == components(d)
            assert switch(s, x) == d
            assert s != d


def test_switch_breaks_alternation():
    assert not is_alternating(switch(_build("3"), 1))
    assert not is_alternating(switch(_build("2"), 0))


def test_mirror_is_an_involution():
    for text in ("2", "2 2", "2 1 1 1 2"):
        d = _build(text)
        m = mirror(d)
        assert mirror(m) == d
        assert components(m) == components(d)
        assert is_alternating(m)


def test_mirror_of_chiral_build_is_a_different_diagram():
    tre = _build("3")
    assert mirror(tre) != tre


def test_mirrored_clasp_is_the_same_diagram():
    # the unoriented clasp is its own mirror image: relabel one crossing
    # by a half turn and the tables coincide
    hopf = _build("2")
    assert mirror(hopf) == hopf


# ---------------------------------------------------------------------------
# writhe

def test_self_writhe_values():
    assert self_writhe(_build("2")) == 0  # no self-crossings in a 2-link
    assert self_writhe(_build("3")) == -3
    assert self_writhe(mirror(_build("3"))) == 3
    assert self_writhe(switch(_build("3"), 0)) == -1


def test_self_writhe_flips_under_mirror():
    for text in ("3", "2 2", "2 1 2", "2 1 1 1 2"):
        d = _build(text)
        assert self_writhe(mirror(d)) == -self_writhe(d)


# ---------------------------------------------------------------------------
# curls

def test_remove_curls_finds_inserted_kinks():
    rng = random.Random(11)
    for text in ("2", "3", "2 2"):
        d = _build(text)
        total = 0
        kinked = d
        for _ in range(3):
            sign = rng.choice([1, -1])
            total += sign
            kinked = add_curl(kinked, rng.randrange(len(kinked.mate)), sign)
        stripped, shift = remove_curls(kinked)
        assert shift == total
        assert stripped == d


def test_remove_curls_on_clean_diagram():
    d = _build("2 2")
    assert remove_curls(d) == (d, 0)


def test_single_kink_on_unknot():
    # a one-crossing unknot: slots 0-1 and 2-3 joined
    ring = diagram_from_arcs(1, [((0, 0), (0, 1)), ((0, 2), (0, 3))])
    assert remove_curls(ring) == (unlink(1), 1)
    ringneg = diagram_from_arcs(1, [((0, 1), (0, 2)), ((0, 3), (0, 0))])
    assert remove_curls(ringneg) == (unlink(1), -1)


# ---------------------------------------------------------------------------
# connected sum

def test_connected_sum_counts():
    a, b = _build("2 2"), _build("2")
    s = connected_sum(a, b)
    assert s.crossings == a.crossings + b.crossings
    assert components(s) == components(a) + components(b) - 1


def test_connected_sum_unknot_is_identity():
    hopf = _build("2")
    assert connected_sum(unlink(1), hopf) == hopf
    assert connected_sum(hopf, unlink(1)) == hopf
    assert connected_sum(unlink(2), unlink(2)) == unlink(3)


def test_connected_sum_rejects_empty():
    with pytest.raises(EmptyDiagramError):
        connected_sum(unlink(0), _build("2"))


# ---------------------------------------------------------------------------
# canonical keys

def test_canonical_key_ignores_crossing_labels():
    rng = random.Random(3)
    for text in ("3", "2 2", "2 1 2", "2 1 1 1 2"):
        d = _build(text)
        key = canonical_key(d)
        for _ in range(5):
            perm = list(range(d.crossings))
            rng.shuffle(perm)
            rots = [rng.choice([0, 2]) for _ in range(d.crossings)]
            assert canonical_key(relabel(d, perm, rots)) == key


def test_canonical_key_separates_links():
    keys = {
        canonical_key(d)
        for d in (
            _build("2"),
            switch(_build("2"), 0),
            _build("3"),
            mirror(_build("3")),
            _build("2 2"),
        )
    }
    assert len(keys) == 5


def test_free_loops_enter_the_key():
    d = _build("2")
    plus = LinkDiagram(d.mate, 1, d.tags)
    assert plus != d


# ---------------------------------------------------------------------------
# planar diagram codes

def test_pd_round_trip():
    for text in ("2", "3", "2 2", "2 1 1 1 2"):
        d = _build(text)
        assert parse_pd(to_pd(d)) == d


def test_pd_labels_appear_twice():
    pd = to_pd(_build("2 2"))
    flat = [x for row in pd for x in row]
    assert sorted(set(flat)) == list(range(1, 9))
    assert all(flat.count(x) == 2 for x in set(flat))


def test_parse_pd_accepts_json_text():
    text = json.dumps(to_pd(_build("3")))
    assert parse_pd(text) == _build("3")


def test_parse_pd_errors():
    with pytest.raises(BadArityError):
        parse_pd([[1, 2, 3]])
    with pytest.raises(DanglingLabelError):
        parse_pd([[1, 2, 3, 4], [4, 3, 2, 5]])
    with pytest.raises(LabelCountMismatchError):
        parse_pd([[1, 1, 2, 2], [2, 3, 3, 1]])


def test_fixture_file_parses():
    expected = {
        "hopf": (2, 2),
        "trefoil": (3, 1),
        "l6a5": (6, 3),
        "pretzel_3_3_2": (8, 1),
    }
    seen = set()
    with open(DATA / "links.jsonl", encoding="utf-8") as fh:
        for line in fh:
            rec = json.loads(line)
            d = parse_pd(rec["pd"])
            c, comp = expected[rec["name"]]
            assert (d.crossings, components(d)) == (c, comp)
            assert is_alternating(d)
            seen.add(rec["name"])
    assert seen == set(expected)


def test_pretzel_helper_matches_fixture_shape():
    d = pretzel(2, 2, 2)
    assert d.crossings == 6 and components(d) == 3 and is_alternating(d)
