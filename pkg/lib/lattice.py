"""
Exact lattice arithmetic for N = Z^3 and its overlattices.

Points are tuples of three Fractions. A lattice is always an overlattice of
Z^3 given by rational generators; its basis comes from the Hermite normal form
of the scaled generator matrix, and all membership questions are answered by
solving against that basis exactly.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_decomp, hermite_normal_form

from lib.exceptions import LatticeError

UNIT_VECTORS = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1))
)


def as_point(v):
    return tuple(Fraction(x) for x in v)


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(t, v):
    return tuple(t * a for a in v)


def det3(c1, c2, c3):
    """Determinant of the matrix with columns c1, c2, c3."""
    return dot(c1, cross(c2, c3))


def solve3(columns, v):
    """Coordinates c with c[0]*columns[0] + c[1]*columns[1] + c[2]*columns[2] = v (Cramer)."""
    c1, c2, c3 = columns
    d = det3(c1, c2, c3)
    if d == 0:
        raise LatticeError('singular basis {}'.format(columns))
    return (Fraction(det3(v, c2, c3)) / d,
            Fraction(det3(c1, v, c3)) / d,
            Fraction(det3(c1, c2, v)) / d)


def combine(columns, coords):
    return tuple(sum(coords[j] * columns[j][i] for j in range(3)) for i in range(3))


def denominator_of(vectors):
    return reduce(lcm, (Fraction(x).denominator for v in vectors for x in v), 1)


def scaled(v, denominator):
    """Integer tuple denominator*v; raises if v is not in (1/denominator)Z^3."""
    out = []
    for x in v:
        y = Fraction(x) * denominator
        if y.denominator != 1:
            raise LatticeError('{} is not on the 1/{} grid'.format(v, denominator))
        out.append(y.numerator)
    return tuple(out)


def primitive_integer(v):
    """Primitive integer vector on the ray of a nonzero rational vector."""
    d = denominator_of([v])
    n = [int(x * d) for x in v]
    g = reduce(gcd, n, 0)
    if g == 0:
        raise LatticeError('zero vector has no primitive multiple')
    return tuple(x // g for x in n)


def smith_normal_form(m):
    """
    Smith normal form of an integer matrix (list of rows).

    Returns (S, U, V) as lists of rows with U*M*V = S, S diagonal with
    non-negative entries s1 | s2 | s3 and U, V unimodular.
    """
    smf, s, t = smith_normal_decomp(DM([[int(x) for x in row] for row in m], ZZ))
    S = [[int(x) for x in row] for row in smf.to_list()]
    U = [[int(x) for x in row] for row in s.to_list()]
    V = [[int(x) for x in row] for row in t.to_list()]
    for i in range(min(len(S), len(S[0]) if S else 0)):
        if S[i][i] < 0:
            S[i] = [-x for x in S[i]]
            U[i] = [-x for x in U[i]]
    return S, U, V


class Lattice:
    """
    Overlattice Z^3 + sum Z*g of rational generators g.

    `denominator` is the common denominator D of the lattice, so every
    lattice point has integer coordinates after scaling by D; `index` is the
    index of Z^3 in the lattice.
    """

    def __init__(self, generators=()):
        self.generators = tuple(as_point(g) for g in generators)
        self.denominator = denominator_of(self.generators)
        d = self.denominator
        columns = [scaled(g, d) for g in self.generators]
        columns += [tuple(d if i == j else 0 for i in range(3)) for j in range(3)]
        m = [[col[i] for col in columns] for i in range(3)]
        h = hermite_normal_form(DM(m, ZZ)).to_list()
        if len(h[0]) != 3:
            raise LatticeError('generators do not span a rank 3 lattice')
        self.basis = tuple(tuple(Fraction(int(h[i][j]), d) for i in range(3)) for j in range(3))
        self.denominator = denominator_of(self.basis)
        covolume = abs(det3(*self.basis))
        index = 1 / covolume
        if index.denominator != 1:
            raise LatticeError('non-integral index {}'.format(index))
        self.index = index.numerator

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.index == other.index and \
            all(other.contains(b) for b in self.basis)

    def __hash__(self):
        return hash((self.index, self.denominator))

    def __repr__(self):
        return 'Lattice(index={}, denominator={})'.format(self.index, self.denominator)

    def coordinates(self, v):
        return solve3(self.basis, as_point(v))

    def contains(self, v):
        v = as_point(v)
        if any((x * self.denominator).denominator != 1 for x in v):
            return False
        return all(c.denominator == 1 for c in self.coordinates(v))

    def key(self, v):
        """Hashable canonical form of a lattice point: scaled integer coordinates."""
        return scaled(v, self.denominator)

    def primitive(self, v):
        """Shortest positive multiple of v lying in the lattice."""
        v = as_point(v)
        if not any(v):
            raise LatticeError('zero vector has no primitive multiple')
        c = self.coordinates(v)
        d = denominator_of([c])
        g = reduce(gcd, (int(x * d) for x in c), 0)
        return scale(Fraction(d, g), v)

    def is_unimodular(self, v1, v2, v3):
        points = [as_point(v) for v in (v1, v2, v3)]
        if len(set(points)) < 3:
            raise LatticeError('repeated points {}'.format(points))
        if not all(self.contains(p) for p in points):
            return False
        return abs(det3(*points)) * self.index == 1

    def normalized_volume(self, v1, v2, v3):
        return abs(det3(as_point(v1), as_point(v2), as_point(v3))) * self.index


def is_unimodular(v1, v2, v3, lattice):
    return lattice.is_unimodular(v1, v2, v3)


def primitive(v, lattice=None):
    return (lattice or Lattice()).primitive(v)


@dataclass(frozen=True)
class Cone3:
    rays: tuple
    lattice: Lattice

    def __post_init__(self):
        if len(self.rays) != 3 or det3(*self.rays) == 0:
            raise LatticeError('cone rays must be three independent vectors')

    def contains(self, v, strict=False):
        c = solve3(self.rays, as_point(v))
        return all(x > 0 for x in c) if strict else all(x >= 0 for x in c)

    def is_unimodular(self):
        return self.lattice.is_unimodular(*self.rays)
