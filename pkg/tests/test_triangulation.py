from fractions import Fraction

import pytest

from conftest import E2, E3, GHILB_16_TRIANGLES, P, Q, S, T
from lib.constants import CURVE_FLOP, CURVE_RIGID, CURVE_WIDE
from lib.exceptions import NotFloppable, TriangulationError
from lib.group import parse_group
from lib.nakamura import ghilb
from lib.triangulation import Triangulation, brute_force_triangulations, curve_type, flip, flip_graph, \
    flipped_diagonal, flop_edges
from lib.util import triangulation_from_json, triangulation_to_json

DOUBLE_FLOP_16 = ((0, 1, 2), (0, 2, 4), (1, 2, 4), (1, 3, 4), (3, 4, 5), (4, 5, 6))
FLOP_PS_16 = ((0, 1, 2), (0, 2, 5), (0, 4, 5), (1, 2, 3), (2, 3, 5), (4, 5, 6))


@pytest.fixture
def t6(g6):
    return ghilb(g6)


def test_edges_and_euler(t6):
    assert t6.interior_edges() == [(E3, P), (E2, P), (P, Q), (P, S), (P, T), (S, T)]
    assert t6.interior_vertices() == [P]
    assert t6.euler_characteristic() == 1
    assert t6.normalized_volume() == 6


@pytest.mark.parametrize('edge, tag, k', [
    ((P, T), CURVE_FLOP, None),
    ((P, S), CURVE_FLOP, None),
    ((S, T), CURVE_FLOP, None),
    ((P, Q), CURVE_RIGID, None),
    ((E2, P), CURVE_RIGID, None),
    ((E3, P), CURVE_WIDE, 3),
])
def test_curve_types_16(t6, edge, tag, k):
    ct = curve_type(t6, edge)
    assert ct.tag == tag
    assert ct.k == k


def test_boundary_edge_has_no_curve_type(t6):
    with pytest.raises(TriangulationError):
        curve_type(t6, (E3, E2))


def test_flop_edges(t6):
    assert flop_edges(t6) == [(P, S), (P, T), (S, T)]


def test_double_flop_16(t6):
    with pytest.raises(NotFloppable):
        flip(t6, (P, Q))
    assert flipped_diagonal(t6, (P, T)) == (Q, S)
    once = flip(t6, (P, T))
    assert curve_type(once, (P, Q)).tag == CURVE_FLOP
    twice = flip(once, (P, Q))
    assert twice.triangles == DOUBLE_FLOP_16
    assert twice.validate()


def test_single_flop_16(t6):
    U = flip(t6, (P, S))
    assert U.triangles == FLOP_PS_16


def test_flip_is_an_involution(t6):
    for e in flop_edges(t6):
        U = flip(t6, e)
        assert flip(U, flipped_diagonal(t6, e)) == t6


@pytest.mark.parametrize('text', ['6:1,2,3', '7:1,2,4', '3:1,2,0*3:0,1,2'])
def test_flip_replaces_exactly_one_edge(text):
    T0 = ghilb(parse_group(text))
    for e in flop_edges(T0):
        U = flip(T0, e)
        assert U.vertices == T0.vertices
        assert set(T0.edges) - set(U.edges) == {e}
        assert set(U.edges) - set(T0.edges) == {flipped_diagonal(T0, e)}
        assert len(U.triangles) == len(T0.triangles)


def test_validate_rejects_overlap(t6):
    broken = Triangulation(t6.vertices, t6.triangles[:-1] + ((0, 1, 2),), t6.lattice)
    with pytest.raises(TriangulationError):
        broken.validate()


def test_json_round_trip(t6, g6):
    doc = triangulation_to_json(t6, g6)
    assert doc['denominator'] == 6
    assert doc['vertices'][P] == [1, 2, 3]
    assert triangulation_from_json(doc) == t6


def test_json_vertices_are_exact(t6, g6):
    T = triangulation_from_json(triangulation_to_json(t6, g6))
    assert T.vertices[P] == (Fraction(1, 6), Fraction(1, 3), Fraction(1, 2))
    assert all(isinstance(x, Fraction) for v in T.vertices for x in v)


def test_flip_graph_records_flop_counts(t6):
    graph = flip_graph(t6)
    assert graph.nodes[0] == t6
    assert graph.flop_counts()[0] == 3
    assert not graph.truncated


def test_flip_graph_truncation(t6):
    graph = flip_graph(t6, max_nodes=2)
    assert len(graph.nodes) == 2
    assert graph.truncated


def test_brute_force_guard(g35):
    with pytest.raises(TriangulationError):
        brute_force_triangulations(g35)


@pytest.mark.parametrize('text', [
    '2:1,0,1', '3:1,1,1', '6:1,2,3', '5:1,1,3', '7:1,2,4', '3:1,2,0*3:0,1,2',
    pytest.param('11:1,2,8', marks=pytest.mark.slow),
    pytest.param('12:1,2,9', marks=pytest.mark.slow)
])
def test_flip_graph_matches_brute_force(text):
    group = parse_group(text)
    T0 = ghilb(group)
    found = brute_force_triangulations(group)
    assert T0 in found
    graph = flip_graph(T0, max_nodes=len(found) + 1)
    assert not graph.truncated
    assert len(graph.nodes) == len(found)
    for U in found:
        assert U.validate()


def test_single_triangulations():
    for text in ('2:1,0,1', '3:1,1,1'):
        assert len(brute_force_triangulations(parse_group(text))) == 1
