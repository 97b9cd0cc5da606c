import json

import pytest
from hypothesis import given, settings, strategies as st

from flopkit.errors import DomainError, NotShadedError, PeriodGuardError, UnknownVertexError
from flopkit.rootsys import all_diagrams, build_diagram, highest_root_labels
from flopkit.walk import (
    ChamberState,
    chamber_graph,
    cross,
    initial_state,
    label_sequence_1d,
    period_1d,
    walk_1d,
)

E6, E7, E8 = (build_diagram("E", n) for n in (6, 7, 8))
SWEEP = all_diagrams()
ALL_VERTICES = [(d, v) for d in SWEEP for v in d.vertices]

# Equator table: N and labels for a vertex of label ell.
TABLE = {
    1: (1, (1,)),
    2: (2, (1, 2)),
    3: (4, (1, 3, 2, 3)),
    4: (6, (1, 4, 3, 2, 3, 4)),
    5: (10, (1, 5, 4, 3, 5, 2, 5, 3, 4, 5)),
    6: (12, (1, 6, 5, 4, 3, 5, 2, 5, 3, 4, 5, 6)),
}


def test_initial_state_e6():
    s = initial_state(E6, [3])
    assert s.shaded == {3, 7}
    assert s.last_crossed is None


def test_initial_state_a1_shades_everything():
    s = initial_state(build_diagram("A", 1), [1])
    assert s.shaded == set(s.extended.vertices)


def test_initial_state_two_vertices():
    s = initial_state(E8, [2, 7])
    assert len(s.shaded) == 3


def test_initial_state_errors():
    with pytest.raises(DomainError):
        initial_state(E6, [])
    with pytest.raises(UnknownVertexError):
        initial_state(E6, [7])


def test_chamber_state_invariants():
    ext = initial_state(E6, [3]).extended
    with pytest.raises(DomainError):
        ChamberState(ext, frozenset())
    with pytest.raises(DomainError):
        ChamberState(ext, frozenset({3, 7}), last_crossed=1)


def test_cross_affine_does_nothing_in_e6():
    s = initial_state(E6, [3])
    new, wall = cross(s, 7)
    assert new.shaded == s.shaded
    assert wall.label == 1


def test_cross_middle_moves_affine_shading_to_branch():
    s = initial_state(E6, [3])
    new, wall = cross(s, 3)
    assert new.shaded == {3, 6}
    assert wall.label == 3
    assert new.label(6) == 2


def test_cross_unshaded():
    with pytest.raises(NotShadedError):
        cross(initial_state(E6, [3]), 1)


@settings(max_examples=200)
@given(st.sampled_from(ALL_VERTICES), st.integers(0, 30), st.data())
def test_crossing_twice_returns(dv, steps, data):
    d, v = dv
    state = walk_1d(d, v, steps)[-1][0] if steps else initial_state(d, [v])
    u = data.draw(st.sampled_from(sorted(state.shaded)))
    there, w1 = cross(state, u)
    back, w2 = cross(there, u)
    assert back.shaded == state.shaded
    assert w1.label == w2.label


def test_e6_label_sequence():
    assert [w.label for w in label_sequence_1d(E6, 3, 6)] == [3, 2, 3, 1, 3, 2]


def test_label_one_vertex_sequence():
    assert [w.label for w in label_sequence_1d(build_diagram("D", 5), 4, 3)] == [1, 1, 1]
    assert [w.label for w in label_sequence_1d(E6, 1, 3)] == [1, 1, 1]


def test_e7_label_three_matches_e6():
    seq = [w.label for w in label_sequence_1d(E7, 2, 4)]
    assert seq == [3, 2, 3, 1]


def test_label_sequence_positions():
    walls = label_sequence_1d(E6, 3, 5)
    assert [w.position for w in walls] == [1, 2, 3, 4, 5]
    assert [w.crossed for w in walls[:4]] == [3, 6, 3, 7]


@pytest.mark.parametrize(
    "d,v,expected",
    [
        (E6, 3, TABLE[3]),
        (E8, 3, TABLE[6]),
        (build_diagram("D", 5), 4, TABLE[1]),
    ],
)
def test_period_examples(d, v, expected):
    p = period_1d(d, v)
    assert (p.N, p.equator_labels) == expected


@pytest.mark.parametrize("dv", ALL_VERTICES, ids=lambda dv: f"{dv[0]}-{dv[1]}")
def test_period_depends_only_on_label(dv):
    d, v = dv
    p = period_1d(d, v)
    assert (p.N, p.equator_labels) == TABLE[highest_root_labels(d)[v]]
    tail = p.equator_labels[1:]
    assert tail == tail[::-1]
    assert p.state_period % p.N == 0


def test_state_period_can_exceed_translation_period():
    # E7 vertex 4 (label 3) bounces back through its four chambers.
    p = period_1d(E7, 4)
    assert p.N == 4
    assert p.state_period == 8


def test_period_guard():
    with pytest.raises(PeriodGuardError):
        period_1d(E8, 3, max_crossings=5)


@pytest.mark.parametrize("dv", ALL_VERTICES[::7], ids=lambda dv: f"{dv[0]}-{dv[1]}")
def test_wall_labels_in_range(dv):
    for w in label_sequence_1d(*dv, 40):
        assert 1 <= w.label <= 6


def test_e6_chamber_graph_matches_period():
    g = chamber_graph(E6, [3], 10)
    assert [sorted(s) for s in g.nodes] == [[3, 7], [3, 6]]
    assert [(e.source, e.target, e.label, e.crossed) for e in g.edges] == [
        (0, 0, 1, 7),
        (0, 1, 3, 3),
        (1, 1, 2, 6),
    ]
    # walking the graph, never recrossing the last wall, gives the period
    node, last, labels = 0, None, []
    for _ in range(4):
        edge = next(
            e for e in g.edges
            if node in (e.source, e.target) and e.crossed != last and e.crossed in g.nodes[node]
        )
        labels.append(edge.label)
        node = edge.target if edge.source == node else edge.source
        last = edge.crossed
    assert tuple(labels) == TABLE[3][1]


def test_a1_chamber_graph():
    g = chamber_graph(build_diagram("A", 1), [1], 5)
    assert len(g.nodes) == 1
    assert {e.label for e in g.edges} == {1}
    assert all(e.source == e.target == 0 for e in g.edges)


@pytest.mark.parametrize("dv", ALL_VERTICES[::5], ids=lambda dv: f"{dv[0]}-{dv[1]}")
def test_1d_chamber_graph_contains_the_walk(dv):
    d, v = dv
    g = chamber_graph(d, [v], 200)
    nodes = set(g.nodes)
    steps = walk_1d(d, v, 2 * period_1d(d, v).state_period)
    assert {s.shaded for s, _ in steps} <= nodes
    walls = {(e.crossed, e.label) for e in g.edges}
    assert {(w.crossed, w.label) for _, w in steps} <= walls


def test_e8_two_vertex_chamber_graph_golden():
    g = chamber_graph(E8, [2, 7], 8)
    assert (len(g.nodes), len(g.edges)) == (5, 10)
    assert all(len(s) == 3 for s in g.nodes)
    # closed under crossing already at this depth
    assert chamber_graph(E8, [2, 7], 100).nodes == g.nodes


def test_chamber_graph_preconditions():
    with pytest.raises(DomainError):
        chamber_graph(E8, [1, 2, 3], 3)
    with pytest.raises(DomainError):
        chamber_graph(E8, [1], 0)


def test_chamber_graph_json():
    data = json.loads(chamber_graph(E6, [3], 4).to_json())
    assert data["nodes"] == [[3, 7], [3, 6]]
    assert data["edges"][1] == {"from": 0, "to": 1, "label": 3, "crossedVertex": 3}
