"""Diagram records: text format, structural validation, planarity."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lzero import fixtures
from lzero.construct import braid_closure
from lzero.diagram import (Crossing, check_valid, component_cycles,
                           crossing_graph_parts, disjoint_union, faces,
                           mirror, parse_diagram, render_diagram, sublink,
                           validate)
from lzero.errors import DiagramParseError, DiagramStructureError
from lzero.milnor import linking_number
from util import assert_sound, corpus, euler_ok


def test_parse_render_round_trip_on_fixtures():
    for name in fixtures.NAMES:
        d = fixtures.load(name)
        again = parse_diagram(render_diagram(d), name=name)
        assert again == d, name
        # rendering is deterministic
        assert render_diagram(again) == render_diagram(d)


def test_crossing_switch_is_an_involution():
    cr = Crossing(1, 1, 2, 3, 4)
    assert cr.switched() == Crossing(-1, 3, 4, 1, 2)
    assert cr.switched().switched() == cr


def test_parse_reports_line_and_column():
    bad = "components 1\nx + 1 2 3 oops\n"
    with pytest.raises(DiagramParseError) as exc:
        parse_diagram(bad)
    assert exc.value.line == 2
    assert "oops" in str(exc.value)


@pytest.mark.parametrize("text", [
    "a 1 1\n",                          # no components record
    "components 1\ncomponents 1\n",     # duplicate header
    "components 0\n",                   # not positive
    "components 1\nq 1\n",              # unknown record
    "components 1\na 1 1\na 1 1\n",     # arc assigned twice
    "components 1\nx + 1 2 3\n",        # wrong arity
    "components 1\nx ? 1 2 3 4\n",      # bad sign token
])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(DiagramParseError):
        parse_diagram(text)


def test_structure_check_catches_dangling_arc():
    # arc 2 is produced but never consumed, arc 5 consumed but never made
    text = "components 1\nx + 1 2 5 1\na 1 1\na 2 1\na 5 1\n"
    with pytest.raises(DiagramStructureError):
        parse_diagram(text)


def test_comments_and_blank_lines_are_ignored():
    text = "# header comment\n\ncomponents 1  # trailing\no 1\n"
    d = parse_diagram(text)
    assert d.m == 1 and d.free_loops == (1,)


def test_corpus_is_sound():
    for name, d in corpus():
        assert check_valid(d) is d
        assert euler_ok(d), name


def test_component_cycles_partition_the_arcs():
    d = fixtures.load("borromean")
    cycles = component_cycles(d)
    assert len(cycles) == 3
    seen = sorted(a for cyc in cycles for a in cyc)
    assert seen == sorted(d.arcs())


def test_free_loop_fixture():
    d = fixtures.load("unknot")
    assert d.m == 1
    assert not d.crossings
    assert d.free_loops == (1,)


def test_self_writhe():
    assert fixtures.load("trefoil").self_writhe(1) == 3
    assert mirror(fixtures.load("trefoil")).self_writhe(1) == -3
    # hopf crossings join different components: no self-writhe
    assert fixtures.load("hopf+").self_writhe(1) == 0


def test_mirror_is_an_involution_and_flips_signs():
    for name, d in corpus():
        assert mirror(mirror(d)) == d, name
    t = fixtures.load("trefoil")
    assert [c.sign for c in mirror(t).crossings] == [-c.sign for c in t.crossings]


def test_mirror_preserves_soundness():
    for name, d in corpus():
        assert_sound(mirror(d))


def test_sublink_of_borromean_pairs_unlinks():
    d = fixtures.load("borromean")
    for keep in ((1, 2), (1, 3), (2, 3)):
        s = sublink(d, keep)
        assert s.m == 2
        assert validate(s) == []
        assert linking_number(s, 1, 2) == 0


def test_sublink_renumbers_components():
    d = fixtures.load("borromean")
    s = sublink(d, (3,))
    assert s.m == 1
    assert set(s.arc_components.values()) <= {1} or s.free_loops == (1,)


def test_sublink_keep_all_changes_nothing_essential():
    d = fixtures.load("whitehead")
    s = sublink(d, (1, 2))
    assert s.m == d.m
    assert len(s.crossings) == len(d.crossings)


def test_disjoint_union_is_sound_and_additive():
    t = fixtures.load("trefoil")
    h = fixtures.load("hopf+")
    u = disjoint_union(t, h)
    assert u.m == t.m + h.m
    assert len(u.crossings) == len(t.crossings) + len(h.crossings)
    assert_sound(u)
    # components of the second summand are shifted up
    assert linking_number(u, 2, 3) == 1


def test_faces_satisfy_euler_count_on_corpus():
    for name, d in corpus():
        if not d.crossings:
            continue
        assert len(faces(d)) == len(d.crossings) + 2 * crossing_graph_parts(d), name


def _braid_permutation_cycles(word, strands):
    perm = list(range(strands))
    for letter in word:
        i = abs(letter) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, cycles = set(), 0
    for s in range(strands):
        if s in seen:
            continue
        cycles += 1
        while s not in seen:
            seen.add(s)
            s = perm[s]
    return cycles


@given(word=st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]),
                     min_size=1, max_size=10))
@settings(max_examples=60, deadline=None)
def test_braid_closures_are_sound(word):
    strands = max(abs(x) for x in word) + 1
    d = braid_closure(tuple(word), strands)
    assert_sound(d)
    assert d.m == _braid_permutation_cycles(word, strands)
    assert parse_diagram(render_diagram(d)) == d
