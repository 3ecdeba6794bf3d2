"""
Triangulations of the junior simplex, curve types of their interior edges,
flips and the flip graph, and an exhaustive enumeration used as an oracle.
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from lib.constants import CURVE_FLOP, CURVE_RIGID, CURVE_WIDE
from lib.exceptions import NotFloppable, TriangulationError
from lib.lattice import UNIT_VECTORS, add, as_point, cross, scaled
from lib.util import parallel_map
from mckay_app import config, logger


def is_boundary_point(p):
    return any(x == 0 for x in p)


def on_common_side(p, q):
    return any(a == 0 and b == 0 for a, b in zip(p, q))


class Triangulation:
    """
    Canonical triangulation: vertices sorted by scaled integer coordinates,
    triangles as sorted index triples in lexicographic order.
    """

    def __init__(self, vertices, triangles, lattice):
        self.vertices = tuple(vertices)
        self.triangles = tuple(sorted(tuple(sorted(t)) for t in triangles))
        self.lattice = lattice

    @classmethod
    def from_cells(cls, cells, lattice):
        d = lattice.denominator
        points = sorted({as_point(p) for cell in cells for p in cell}, key=lambda p: scaled(p, d))
        index = {p: i for i, p in enumerate(points)}
        return cls(points, [[index[as_point(p)] for p in cell] for cell in cells], lattice)

    @cached_property
    def key(self):
        d = self.lattice.denominator
        return tuple(scaled(v, d) for v in self.vertices), self.triangles

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return 'Triangulation({} vertices, {} triangles)'.format(len(self.vertices), len(self.triangles))

    @property
    def denominator(self):
        return self.lattice.denominator

    @cached_property
    def edges(self):
        """Map sorted vertex pair -> indices of the triangles containing it."""
        adjacency = {}
        for n, (i, j, k) in enumerate(self.triangles):
            for e in ((i, j), (i, k), (j, k)):
                adjacency.setdefault(e, []).append(n)
        return {e: tuple(ts) for e, ts in sorted(adjacency.items())}

    def is_interior_edge(self, e):
        return len(self.edges.get(tuple(sorted(e)), ())) == 2

    def interior_edges(self):
        return [e for e, ts in self.edges.items() if len(ts) == 2]

    def interior_vertices(self):
        return [i for i, v in enumerate(self.vertices) if not is_boundary_point(v)]

    def is_boundary_vertex(self, i):
        return is_boundary_point(self.vertices[i])

    def apexes(self, e):
        e = tuple(sorted(e))
        if e not in self.edges:
            raise TriangulationError('{} is not an edge'.format(e))
        return tuple(next(x for x in self.triangles[t] if x not in e) for t in self.edges[e])

    def incident_edges(self, v):
        return [e for e in self.edges if v in e]

    def triangles_at(self, v):
        return [t for t in self.triangles if v in t]

    def euler_characteristic(self):
        return len(self.vertices) - len(self.edges) + len(self.triangles)

    def normalized_volume(self):
        return sum(self.lattice.normalized_volume(*(self.vertices[i] for i in t)) for t in self.triangles)

    def validate(self):
        for t in self.triangles:
            if not self.lattice.is_unimodular(*(self.vertices[i] for i in t)):
                raise TriangulationError('triangle {} is not unimodular'.format(t))
        if self.normalized_volume() != self.lattice.index:
            raise TriangulationError('triangles do not tile the simplex: volume {} != {}'.format(
                self.normalized_volume(), self.lattice.index))
        for (i, j), ts in self.edges.items():
            expected = 1 if on_common_side(self.vertices[i], self.vertices[j]) else 2
            if len(ts) != expected:
                raise TriangulationError('edge {} lies in {} triangles'.format((i, j), len(ts)))
        if self.euler_characteristic() != 1:
            raise TriangulationError('Euler characteristic {} != 1'.format(self.euler_characteristic()))
        return True


@dataclass(frozen=True)
class CurveType:
    """Type of the curve of an interior edge, from w1 + w2 = alpha*v1 + beta*v2."""
    tag: str
    alpha: int
    beta: int

    @property
    def k(self):
        return max(self.alpha, self.beta) if self.tag == CURVE_WIDE else None

    @property
    def is_flop(self):
        return self.tag == CURVE_FLOP

    def __str__(self):
        if self.tag == CURVE_FLOP:
            return 'Flop(-1,-1)'
        if self.tag == CURVE_RIGID:
            return 'Rigid(0,-2)'
        return 'Wide({})'.format(self.k)


def curve_type(T, e):
    e = tuple(sorted(e))
    if not T.is_interior_edge(e):
        raise TriangulationError('{} is a boundary edge'.format(e))
    v1, v2 = (T.vertices[i] for i in e)
    w1, w2 = (T.vertices[i] for i in T.apexes(e))
    s = add(w1, w2)
    n = cross(v1, v2)
    c = next(i for i in range(3) if n[i] != 0)
    alpha = Fraction(cross(s, v2)[c]) / n[c]
    beta = Fraction(cross(v1, s)[c]) / n[c]
    if alpha.denominator != 1 or beta.denominator != 1:
        raise TriangulationError('apex relation of {} is not integral'.format(e))
    alpha, beta = int(alpha), int(beta)
    if (alpha, beta) == (1, 1):
        return CurveType(CURVE_FLOP, alpha, beta)
    if {alpha, beta} == {0, 2}:
        return CurveType(CURVE_RIGID, alpha, beta)
    return CurveType(CURVE_WIDE, alpha, beta)


def flip(T, e):
    e = tuple(sorted(e))
    ct = curve_type(T, e)
    if not ct.is_flop:
        raise NotFloppable('edge {} is {}, not a (-1,-1)-curve'.format(e, ct), edge=e, curve_type=ct)
    w1, w2 = T.apexes(e)
    triangles = [t for t in T.triangles if not set(e) <= set(t)]
    triangles += [(w1, w2, e[0]), (w1, w2, e[1])]
    return Triangulation(T.vertices, triangles, T.lattice)


def flop_edges(T):
    return [e for e in T.interior_edges() if curve_type(T, e).is_flop]


def flipped_diagonal(T, e):
    return tuple(sorted(T.apexes(e)))


@dataclass
class FlipGraph:
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    truncated: bool = False

    def index(self, T):
        return self.nodes.index(T)

    def flop_counts(self):
        return [len(flop_edges(T)) for T in self.nodes]


def _flip_neighbours(T):
    return [(e, flip(T, e)) for e in flop_edges(T)]


def flip_graph(T0, max_nodes=None):
    """Breadth-first closure of T0 under flips, node order = discovery order."""
    if max_nodes is None:
        max_nodes = config.getint('triangulation', 'flip_graph_max_nodes', fallback=5000)
    graph = FlipGraph(nodes=[T0])
    seen = {T0: 0}
    pairs = set()
    frontier = [0]
    while frontier:
        expansions = parallel_map(lambda i: _flip_neighbours(graph.nodes[i]), frontier)
        nxt = []
        for i, neighbours in zip(frontier, expansions):
            for e, U in neighbours:
                j = seen.get(U)
                if j is None:
                    if len(graph.nodes) >= max_nodes:
                        graph.truncated = True
                        continue
                    j = len(graph.nodes)
                    seen[U] = j
                    graph.nodes.append(U)
                    nxt.append(j)
                if (min(i, j), max(i, j)) not in pairs:
                    pairs.add((min(i, j), max(i, j)))
                    graph.edges.append((i, j, e))
        frontier = nxt
    if graph.truncated:
        logger.warning('Flip graph truncated at {} nodes'.format(max_nodes))
    logger.debug('Flip graph: {} nodes, {} edges'.format(len(graph.nodes), len(graph.edges)))
    return graph


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _sign(x):
    return (x > 0) - (x < 0)


def _crosses(p, q, a, b):
    if len({p, q, a, b}) < 4:
        return False
    return _orient(a, b, p) * _orient(a, b, q) < 0 and _orient(p, q, a) * _orient(p, q, b) < 0


def brute_force_triangulations(group, max_order=None):
    """
    Every unimodular triangulation of the junior simplex, by an advancing-front
    exact cover: the smallest open (edge, side) is always covered next, so each
    triangulation is produced exactly once.
    """
    if max_order is None:
        max_order = config.getint('triangulation', 'brute_force_max_order', fallback=12)
    if group.order > max_order:
        raise TriangulationError('brute force guard: |G| = {} > {}'.format(group.order, max_order))
    lattice = group.overlattice
    d = lattice.denominator
    points = sorted(set(UNIT_VECTORS) | set(group.junior_points()), key=lambda p: scaled(p, d))
    plane = [scaled(p, d)[:2] for p in points]
    n = len(points)

    third = {}
    for i, j, k in itertools.combinations(range(n), 3):
        if lattice.is_unimodular(points[i], points[j], points[k]):
            for a, b, c in ((i, j, k), (i, k, j), (j, k, i)):
                third.setdefault((a, b), []).append(c)

    segments = set()
    start = []
    for c in range(3):
        side = sorted((i for i in range(n) if points[i][c] == 0), key=lambda i: scaled(points[i], d))
        corner = points.index(UNIT_VECTORS[c])
        for a, b in zip(side, side[1:]):
            e = (min(a, b), max(a, b))
            segments.add(e)
            start.append((e, _sign(_orient(plane[e[0]], plane[e[1]], plane[corner]))))

    found = []

    def search(triangles, covered, open_sides, placed):
        if not open_sides:
            found.append(Triangulation.from_cells([[points[i] for i in t] for t in triangles], lattice))
            return
        e, side = min(open_sides)
        for k in third.get(e, []):
            if _sign(_orient(plane[e[0]], plane[e[1]], plane[k])) != side:
                continue
            t = tuple(sorted((e[0], e[1], k)))
            sides = []
            ok = True
            for u, v, w in ((t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])):
                s = _sign(_orient(plane[u], plane[v], plane[w]))
                if s in covered.get((u, v), ()):
                    ok = False
                    break
                if any(_crosses(plane[u], plane[v], plane[a], plane[b]) for a, b in placed):
                    ok = False
                    break
                sides.append(((u, v), s))
            if not ok:
                continue
            new_covered = dict(covered)
            new_open = set(open_sides)
            new_placed = set(placed)
            for uv, s in sides:
                new_covered[uv] = new_covered.get(uv, frozenset()) | {s}
                new_placed.add(uv)
                if (uv, s) in new_open:
                    new_open.discard((uv, s))
                elif uv not in segments and -s not in new_covered[uv]:
                    new_open.add((uv, -s))
            search(triangles + [t], new_covered, new_open, new_placed)

    search([], {}, set(start), set())
    found.sort(key=lambda T: T.key)
    logger.debug('Brute force for {}: {} triangulations'.format(group, len(found)))
    return found
