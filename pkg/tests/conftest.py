from fractions import Fraction

import pytest

from lib.group import parse_group


def pt(*xs, d=1):
    return tuple(Fraction(x, d) for x in xs)


# Vertex indices of the 1/6(1,2,3) junior simplex, vertices sorted by 6*v
E3, E2, P, Q, S, T, E1 = range(7)

GHILB_16_TRIANGLES = ((0, 1, 2), (0, 2, 4), (1, 2, 3), (2, 3, 5), (2, 4, 5), (4, 5, 6))


@pytest.fixture
def g6():
    return parse_group('6:1,2,3')


@pytest.fixture
def g2():
    return parse_group('2:1,0,1')


@pytest.fixture
def trivial():
    return parse_group('1:0,0,0')


@pytest.fixture
def g3():
    return parse_group('3:1,1,1')


@pytest.fixture
def g35():
    return parse_group('35:1,3,31')


@pytest.fixture
def z3z3():
    return parse_group('3:1,2,0*3:0,1,2')


@pytest.fixture
def g30():
    return parse_group('30:2,3,25')


@pytest.fixture
def g25():
    return parse_group('25:1,3,21')
