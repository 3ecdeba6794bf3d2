from fractions import Fraction

import pytest

from conftest import E1, E2, E3, GHILB_16_TRIANGLES, P, Q, S, T, pt
from lib.exceptions import FanError, TieError
from lib.lattice import Lattice, UNIT_VECTORS, add, scale
from lib.nakamura import GGraph, HilbContext, chart_cells, ggraph_cone, ghilb, hilb_cells, hilb_fan, minimal_ggraph_at, \
    set_seed_denominator

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def monomials(*names):
    table = {'1': (0, 0, 0), 'x': (1, 0, 0), 'x2': (2, 0, 0), 'x3': (3, 0, 0), 'x4': (4, 0, 0),
             'x5': (5, 0, 0), 'y': (0, 1, 0), 'y2': (0, 2, 0), 'z': (0, 0, 1), 'xy': (1, 1, 0),
             'xy2': (1, 2, 0), 'yz': (0, 1, 1), 'xz': (1, 0, 1), 'x2z': (2, 0, 1), 'y2z': (0, 2, 1)}
    return frozenset(table[n] for n in names)


def centroid(T, t):
    return scale(Fraction(1, 3), add(add(T.vertices[t[0]], T.vertices[t[1]]), T.vertices[t[2]]))


def test_ghilb_of_16(g6):
    T = ghilb(g6)
    assert T.vertices == (pt(0, 0, 1), pt(0, 1, 0), pt(1, 2, 3, d=6), pt(2, 4, 0, d=6), pt(3, 0, 3, d=6),
                          pt(4, 2, 0, d=6), pt(1, 0, 0))
    assert T.triangles == GHILB_16_TRIANGLES
    assert T.validate()


@pytest.mark.parametrize('triangle, expected', [
    ((E3, E2, P), monomials('1', 'x', 'x2', 'x3', 'x4', 'x5')),
    ((E3, P, S), monomials('1', 'x', 'y', 'xy', 'y2', 'xy2')),
    ((P, S, T), monomials('1', 'x', 'y', 'z', 'y2', 'yz')),
    ((S, T, E1), monomials('1', 'y', 'z', 'y2', 'yz', 'y2z')),
    ((P, Q, T), monomials('1', 'x', 'y', 'z', 'xz', 'yz')),
    ((E2, P, Q), monomials('1', 'x', 'x2', 'z', 'xz', 'x2z')),
])
def test_ggraphs_of_16(g6, triangle, expected):
    T = ghilb(g6)
    ctx = HilbContext.standard(g6)
    ggraph = minimal_ggraph_at(centroid(T, tuple(sorted(triangle))), ctx)
    assert ggraph.monomials == expected
    assert ggraph.is_valid(g6)


def test_ggraph_cone_is_the_triangle(g6):
    T = ghilb(g6)
    ctx = HilbContext.standard(g6)
    for t in T.triangles:
        cone = ggraph_cone(minimal_ggraph_at(centroid(T, t), ctx), ctx)
        assert set(cone.rays) == {T.vertices[i] for i in t}
        assert cone.is_unimodular()


def test_tie_at_barycenter(g6):
    third = Fraction(1, 3)
    with pytest.raises(TieError) as info:
        minimal_ggraph_at((third, third, third), HilbContext.standard(g6))
    assert info.value.character is not None


def test_point_outside_cone(g6):
    with pytest.raises(FanError):
        minimal_ggraph_at((1, 0, 0), HilbContext.standard(g6))


def test_invalid_ggraph_rejected(g6):
    bogus = GGraph.from_indexing({chi: (0, 0, 0) for chi in g6.characters})
    with pytest.raises(FanError):
        ggraph_cone(bogus, HilbContext.standard(g6))


def test_trivial_group(trivial):
    T = ghilb(trivial)
    assert len(T.vertices) == 3
    assert T.triangles == ((0, 1, 2),)


def test_ghilb_of_half_101(g2):
    T = ghilb(g2)
    assert T.vertices == (pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 1, d=2), pt(1, 0, 0))
    assert T.triangles == ((0, 1, 2), (1, 2, 3))


def test_ghilb_of_third_111(g3):
    T = ghilb(g3)
    assert T.triangles == ((0, 1, 2), (0, 2, 3), (1, 2, 3))


@pytest.mark.parametrize('text', ['6:1,2,3', '3:1,2,0*3:0,1,2', '7:1,2,4', '11:1,2,8', '35:1,3,31'])
def test_ghilb_is_crepant(text):
    from lib.group import parse_group

    group = parse_group(text)
    T = ghilb(group)
    assert len(T.triangles) == group.order
    assert T.validate()
    assert len(T.vertices) == 3 + len(group.junior_points())


def test_chart_context_matches_standard(g6):
    # The chart on the identity basis with Z^3 inside N' is G-Hilb itself
    ctx = HilbContext.chart(UNIT_VECTORS, Lattice(), g6.overlattice)
    assert ctx.action.order == 6
    cells = {frozenset(tri) for _, tri in hilb_cells(ctx)}
    T = ghilb(g6)
    assert cells == {frozenset(T.vertices[i] for i in t) for t in T.triangles}


def test_hilb_fan_of_standard_context(g6):
    assert hilb_fan(HilbContext.standard(g6)) == ghilb(g6)


@pytest.mark.parametrize('text', ['6:1,2,3', '7:1,2,4', '11:1,2,8'])
def test_chart_cells_do_not_depend_on_the_start(text):
    from lib.group import parse_group

    group = parse_group(text)
    reference = [(g.key, frozenset(tri)) for g, tri in chart_cells(group)]
    for start in (pt(1, 1, 8, d=10), pt(7, 2, 1, d=10), pt(1, 5, 1, d=7)):
        assert [(g.key, frozenset(tri)) for g, tri in chart_cells(group, start)] == reference


def test_ghilb_does_not_depend_on_the_seed_denominator(g6):
    reference = ghilb(g6)
    try:
        for q in (7, 1000):
            set_seed_denominator(q)
            assert ghilb(g6) == reference
    finally:
        set_seed_denominator(0)
