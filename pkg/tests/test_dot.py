"""Hasse-diagram DOT export."""

from __future__ import annotations

from coxbruhat import covers, hasse_dot, lower_interval


def test_dot_shape(a3):
    w = a3.element("s1 s2 s1")
    out = hasse_dot(w)
    assert out.startswith("graph bruhat_interval {")
    assert out.endswith("}\n")
    assert 'rankdir=BT' in out
    assert '"e" -- "s1";' in out
    assert '"s1 s2" -- "s1 s2 s1";' in out
    # one node line per member, one edge line per cover relation
    members = lower_interval(w).members
    edge_count = sum(len(covers(y)) for y in members)
    assert out.count(" -- ") == edge_count


def test_dot_coset_colors(a3):
    w = a3.element("s1 s2 s1")
    out = hasse_dot(w, frozenset((0,)))
    assert '"e" [fontcolor=black];' in out
    assert '"s1" [fontcolor=black];' in out
    assert '"s2" [fontcolor=red];' in out
    assert '"s2 s1" [fontcolor=red];' in out
    assert '"s1 s2" [fontcolor=blue];' in out
    assert '"s1 s2 s1" [fontcolor=blue];' in out


def test_dot_color_cycle(a3):
    # more cosets than palette entries wraps around
    w = a3.elements(6)[-1]
    out = hasse_dot(w, frozenset())
    assert "fontcolor=green" in out
    assert out.count("fontcolor=black") >= 2


def test_dot_deterministic(a3):
    w = a3.element("s1 s2 s3 s2 s1")
    assert hasse_dot(w, frozenset((0, 1))) == hasse_dot(w, frozenset((0, 1)))


def test_dot_identity(a3):
    out = hasse_dot(a3.identity)
    assert '"e"' in out
    assert " -- " not in out
