import networkx as nx
import pytest
from hypothesis import given, strategies as st

from urskit.actions import explore
from urskit.balls import BallType, ball_graph, ball_to_dict, ball_type, restrict_type, to_dot
from urskit.errors import ExplorationError


def test_integer_ball_layout(integers):
    t = ball_type(integers, 0, 3)
    assert len(t) == 7
    assert t.degree == 2
    # layer order follows the first letter: +1 before -1
    assert t.neighbors[0] == (1, 2)
    assert t.representative(1) == (0,)
    assert t.representative(2) == (1,)
    assert t.depth == (0, 1, 1, 2, 2, 3, 3)


@given(n=st.integers(0, 8), v=st.integers(-50, 50))
def test_integer_balls_all_equal(integers, n, v):
    assert ball_type(integers, v, n) == ball_type(integers, 0, n)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_free_ball_sizes(free2, n):
    assert len(ball_type(free2, (), n)) == 2 * 3 ** n - 1


def test_restriction_is_a_prefix(free2):
    t = ball_type(free2, (0,), 3)
    for m in range(4):
        assert t.restrict_to(m) == ball_type(free2, (0,), m)
        assert t.size_at(m) == len(t.restrict_to(m))
    assert restrict_type(t) == t.restrict_to(2)


def test_sub_ball(integers):
    t = ball_type(integers, 0, 5)
    sub, order = t.sub_ball(1, 2)
    assert sub == ball_type(integers, 0, 2)
    assert order[0] == 1
    with pytest.raises(ExplorationError):
        t.sub_ball(4, 4)


def test_two_cycle_ball(two_cycle):
    t = ball_type(two_cycle, 0, 2)
    assert len(t) == 2
    assert t.neighbors[0] == (1, 1)
    assert t.partition_table(two_cycle.generators) == [0, 1, 1, 0, 0, 0, 0]
    assert ball_type(two_cycle, 1, 2) == t


def test_boundary_edges(integers, two_cycle):
    assert ball_type(integers, 0, 3).boundary_edges() == set()
    assert ball_type(two_cycle, 0, 1).boundary_edges() == set()


def test_serialization(grigorchuk):
    t = ball_type(grigorchuk, grigorchuk.base, 4)
    assert BallType.parse(t.serialize()) == t


def test_grigorchuk_root_has_loops(grigorchuk):
    t = ball_type(grigorchuk, grigorchuk.base, 1)
    assert t.neighbors[0][1:] == (0, 0, 0)
    assert len(t) == 2


def test_dot_and_json(integers):
    t = ball_type(integers, 0, 2)
    gs = integers.generators
    g = ball_graph(t, gs)
    assert g.number_of_nodes() == 5
    assert g.number_of_edges() == 8
    dot = to_dot(t, gs)
    assert dot.startswith("digraph ball {")
    assert "doublecircle" in dot
    assert dot.count("->") == 4
    doc = ball_to_dict(t, gs)
    assert [v["word"] for v in doc["vertices"]] == ["e", "a", "A", "a a", "A A"]


def _same_labels(a, b):
    return {d["label"] for d in a.values()} == {d["label"] for d in b.values()}


def test_types_agree_with_graph_isomorphism(grigorchuk):
    # equal types exactly when the balls are isomorphic as rooted labeled graphs
    gs = grigorchuk.generators
    region = explore(grigorchuk, 3)
    types = [ball_type(grigorchuk, v, 3) for v in region.vertices]
    graphs = [ball_graph(t, gs) for t in types]
    root = lambda a, b: a["root"] == b["root"]  # noqa: E731
    for i in range(len(types)):
        for j in range(i + 1, len(types)):
            iso = nx.is_isomorphic(graphs[i], graphs[j], node_match=root, edge_match=_same_labels)
            assert iso == (types[i] == types[j])
