import itertools
from fractions import Fraction

import pytest

from conftest import pt
from lib.exceptions import LatticeError
from lib.lattice import Cone3, Lattice, UNIT_VECTORS, det3, is_unimodular, primitive, primitive_integer, scaled, \
    smith_normal_form, solve3


def test_standard_lattice():
    lattice = Lattice()
    assert lattice.index == 1
    assert lattice.denominator == 1
    assert lattice.contains((1, -2, 3))
    assert not lattice.contains(pt(1, 0, 0, d=2))


def test_overlattice_of_cyclic_group():
    lattice = Lattice([pt(1, 2, 3, d=6)])
    assert lattice.index == 6
    assert lattice.denominator == 6
    assert lattice.contains(pt(2, 4, 0, d=6))
    assert lattice.contains(pt(3, 0, 3, d=6))
    assert not lattice.contains(pt(1, 0, 0, d=6))


def test_lattice_equality_ignores_generators():
    assert Lattice([pt(1, 2, 3, d=6)]) == Lattice([pt(5, 4, 3, d=6)])
    assert Lattice([pt(1, 2, 3, d=6)]) != Lattice([pt(1, 1, 1, d=3)])


def test_primitive():
    lattice = Lattice([pt(1, 2, 3, d=6)])
    assert primitive((2, 4, 6), lattice) == pt(1, 2, 3, d=6)
    assert primitive((0, 0, 5)) == pt(0, 0, 1)
    with pytest.raises(LatticeError):
        primitive((0, 0, 0))


def test_primitive_integer():
    assert primitive_integer((Fraction(-1, 2), 1, 0)) == (-1, 2, 0)
    assert primitive_integer((6, 6, -6)) == (1, 1, -1)


def test_unimodular():
    lattice = Lattice([pt(1, 2, 3, d=6)])
    assert is_unimodular(pt(0, 0, 1), pt(0, 1, 0), pt(1, 2, 3, d=6), lattice)
    assert not is_unimodular(*UNIT_VECTORS, lattice)
    with pytest.raises(LatticeError):
        lattice.is_unimodular(pt(0, 0, 1), pt(0, 0, 1), pt(0, 1, 0))


@pytest.mark.parametrize('triple, expected', [
    ((pt(0, 0, 1), pt(0, 1, 0), pt(1, 2, 3, d=6)), True),
    ((pt(1, 2, 3, d=6), pt(2, 4, 0, d=6), pt(4, 2, 0, d=6)), True),
    ((pt(1, 2, 3, d=6), pt(3, 0, 3, d=6), pt(1, 0, 0)), True),
    (UNIT_VECTORS, False),
])
def test_unimodular_ignores_vertex_order(triple, expected):
    lattice = Lattice([pt(1, 2, 3, d=6)])
    assert {is_unimodular(*p, lattice) for p in itertools.permutations(triple)} == {expected}


def test_primitive_is_idempotent():
    lattice = Lattice([pt(1, 2, 3, d=6)])
    for v in ((2, 4, 6), (0, 0, 5), pt(3, 0, 3, d=2), (1, 1, 1), pt(5, 1, 7, d=3)):
        p = primitive(v, lattice)
        assert lattice.contains(p)
        assert primitive(p, lattice) == p


def test_normalized_volume_of_simplex():
    lattice = Lattice([pt(1, 1, 1, d=3)])
    assert lattice.normalized_volume(*UNIT_VECTORS) == 3


def test_solve_and_scale():
    columns = (pt(1, 0, 0), pt(1, 1, 0), pt(0, 0, 2))
    assert solve3(columns, (2, 1, 4)) == (1, 1, 2)
    assert det3(*columns) == 2
    assert scaled(pt(1, 2, 3, d=6), 6) == (1, 2, 3)
    with pytest.raises(LatticeError):
        scaled(pt(1, 2, 3, d=6), 3)


def test_smith_normal_form():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s, u, v = smith_normal_form(m)
    product = [[sum(u[i][k] * m[k][l] * v[l][j] for k in range(3) for l in range(3)) for j in range(3)]
               for i in range(3)]
    assert product == s
    assert [s[i][i] for i in range(3)] == [2, 6, 12]


def test_cone_contains():
    cone = Cone3(UNIT_VECTORS, Lattice())
    assert cone.contains((1, 1, 0))
    assert not cone.contains((1, 1, 0), strict=True)
    assert cone.is_unimodular()
