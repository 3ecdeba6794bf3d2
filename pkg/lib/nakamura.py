"""
The Hilb fan of an abelian quotient: the triangulation of a unimodular cone
cut out by the cones of torus-invariant clusters (G-graphs).

Every computation runs in chart coordinates, where the cone is the positive
octant, the sublattice is Z^3 and the quotient acts diagonally. The standard
context (G-Hilb C^3) is the chart with the identity basis.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from lib.exceptions import EmptyInterior, FanError, TieError
from lib.group import action_from_vectors
from lib.lattice import Cone3, Lattice, UNIT_VECTORS, add, as_point, combine, cross, dot, primitive_integer, scale, \
    solve3, sub
from lib.triangulation import Triangulation, on_common_side
from lib.util import parallel_map
from mckay_app import config, logger

BOX = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class GGraph:
    """Division-closed monomial set with one monomial per character."""
    monomials: frozenset
    indexing: tuple

    @classmethod
    def from_indexing(cls, indexing):
        items = tuple(sorted(indexing.items()))
        return cls(frozenset(e for _, e in items), items)

    @cached_property
    def by_character(self):
        return dict(self.indexing)

    def monomial(self, chi):
        return self.by_character[chi]

    @property
    def key(self):
        return tuple(sorted(self.monomials))

    def is_division_closed(self):
        return all(tuple(m[i] - (i == j) for i in range(3)) in self.monomials
                   for m in self.monomials for j in range(3) if m[j] > 0)

    def is_valid(self, action):
        return (0, 0, 0) in self.monomials and len(self.monomials) == action.order and \
            all(action.monomial_character(e) == chi for chi, e in self.indexing) and \
            {chi for chi, _ in self.indexing} == set(action.characters) and self.is_division_closed()

    def __len__(self):
        return len(self.monomials)


@dataclass(frozen=True)
class HilbContext:
    """
    A unimodular cone with rays `basis` (a Z-basis of `sublattice`) and the
    quotient overlattice/sublattice acting in the chart coordinates of the cone.
    """
    basis: tuple
    sublattice: Lattice
    overlattice: Lattice
    action: object

    @classmethod
    def standard(cls, group):
        return cls(UNIT_VECTORS, Lattice(), group.overlattice, group)

    @classmethod
    def chart(cls, basis, sublattice, overlattice):
        basis = tuple(as_point(b) for b in basis)
        action = action_from_vectors([solve3(basis, g) for g in overlattice.basis])
        ctx = cls(basis, sublattice, overlattice, action)
        if action.order * sublattice.index != overlattice.index:
            raise FanError('chart quotient has order {} but the index ratio is {}/{}'.format(
                action.order, overlattice.index, sublattice.index))
        return ctx

    @property
    def cone(self):
        return Cone3(self.basis, self.overlattice)

    def to_chart(self, v):
        return solve3(self.basis, as_point(v))

    def from_chart(self, c):
        return combine(self.basis, c)


class _ChartSolver:
    """G-graph minimisation and cone clipping for one diagonal action."""

    def __init__(self, action):
        self.action = action
        orders = [action.character_order(c) for c in action.coordinate_characters]
        competitors = {}
        allowed = set()
        for a in range(orders[0]):
            for b in range(orders[1]):
                for c in range(orders[2]):
                    e = (a, b, c)
                    chi = action.monomial_character(e)
                    if e != (0, 0, 0) and chi.is_trivial:
                        continue
                    if all(tuple(x - y for x, y in zip(e, u)) in allowed for u, x in zip(BOX, e) if x > 0):
                        allowed.add(e)
                        competitors.setdefault(chi, []).append(e)
        self.competitors = competitors
        logger.debug('Competitor set for {}: {} monomials in box {}'.format(action, len(allowed), orders))

    def minimal_ggraph(self, v):
        indexing = {}
        for chi, exps in self.competitors.items():
            weights = sorted((dot(v, e), e) for e in exps)
            if len(weights) > 1 and weights[0][0] == weights[1][0]:
                raise TieError('character {} is not generic at {}'.format(chi, v), character=chi, point=v)
            indexing[chi] = weights[0][1]
        return GGraph.from_indexing(indexing)

    def polygon(self, ggraph):
        """Level-1 slice of the G-graph cone as a convex polygon (chart coordinates)."""
        normals = set()
        for chi, exps in self.competitors.items():
            best = ggraph.by_character.get(chi)
            if best is None:
                raise FanError('G-graph has no monomial of character {}'.format(chi))
            for e in exps:
                if e != best:
                    normals.add(primitive_integer(sub(e, best)))
        poly = list(UNIT_VECTORS)
        for n in sorted(normals):
            poly = _clip(poly, n)
            if not poly:
                break
        poly = _simplify(poly)
        if len(poly) < 3:
            raise EmptyInterior('G-graph cone has empty interior')
        return poly


def _clip(poly, n):
    out = []
    for k, p in enumerate(poly):
        q = poly[(k + 1) % len(poly)]
        fp, fq = dot(n, p), dot(n, q)
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fq) or (fp < 0 < fq):
            t = Fraction(fp) / (fp - fq)
            out.append(add(p, scale(t, sub(q, p))))
    return out


def _simplify(poly):
    pts = []
    for p in poly:
        if not pts or pts[-1] != p:
            pts.append(p)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for k in range(len(pts)):
            a, b, c = pts[k - 1], pts[k], pts[(k + 1) % len(pts)]
            if not any(cross(sub(b, a), sub(c, b))):
                pts.pop(k)
                changed = True
                break
    return pts if len(pts) >= 3 else []


@lru_cache(maxsize=64)
def _solver(action):
    return _ChartSolver(action)


def _seed_step(action):
    return Fraction(1, 8 * action.order * action.denominator)


def _resolve(solver, point, step):
    """G-graph at point, nudging along (1,2,-3) until no character ties."""
    q = config.getint('nakamura', 'seed_denominator', fallback=0) or \
        64 * solver.action.order * solver.action.denominator ** 2
    retries = config.getint('nakamura', 'max_retries', fallback=12)
    try:
        return solver.minimal_ggraph(point)
    except TieError:
        pass
    for k in range(retries):
        delta = step / (q * 2 ** k)
        nudged = add(point, (delta, 2 * delta, -3 * delta))
        try:
            logger.debug('Seed {} is not generic; retry {} with delta {}'.format(point, k + 1, delta))
            return solver.minimal_ggraph(nudged)
        except TieError:
            continue
    raise FanError('no generic seed near {} after {} retries'.format(point, retries))


def set_seed_denominator(value):
    if not config.has_section('nakamura'):
        config.add_section('nakamura')
    config.set('nakamura', 'seed_denominator', str(int(value)))


def chart_cells(action, start=None):
    """Flood fill over G-graph cones of the standard octant; returns [(ggraph, triangle)]."""
    solver = _solver(action)
    step = _seed_step(action)
    third = Fraction(1, 3)
    cells = {}
    crossed = set()
    seeds = [start or (third, third, third)]

    def explore(seed):
        ggraph = _resolve(solver, seed, step)
        return ggraph, solver.polygon(ggraph)

    while seeds:
        found = parallel_map(explore, seeds)
        seeds = []
        for ggraph, poly in found:
            if ggraph.key in cells:
                continue
            if len(poly) != 3:
                raise FanError('G-graph cone with {} rays for {}'.format(len(poly), action))
            cells[ggraph.key] = (ggraph, tuple(poly))
            centroid = scale(third, add(add(poly[0], poly[1]), poly[2]))
            for k in range(3):
                p, q = poly[k], poly[(k + 1) % 3]
                facet = frozenset((p, q))
                if facet in crossed or on_common_side(p, q):
                    continue
                crossed.add(facet)
                mid = scale(Fraction(1, 2), add(p, q))
                seeds.append(add(mid, scale(step, sub(mid, centroid))))

    result = [cells[k] for k in sorted(cells)]
    lattice = action.overlattice
    if len(result) != action.order:
        raise FanError('found {} G-graph cones for |G| = {}'.format(len(result), action.order))
    for _, tri in result:
        if not lattice.is_unimodular(*tri):
            raise FanError('G-graph cone {} is not unimodular'.format(tri))
    logger.debug('Hilb fan of {}: {} cells'.format(action, len(result)))
    return result


def hilb_cells(ctx):
    """[(ggraph, triangle)] with triangles in the coordinates of ctx's ambient space."""
    return [(g, tuple(ctx.from_chart(p) for p in tri)) for g, tri in chart_cells(ctx.action)]


def hilb_fan(ctx):
    cells = hilb_cells(ctx)
    return Triangulation.from_cells([tri for _, tri in cells], ctx.overlattice)


def ghilb(group):
    """The G-Hilb triangulation of the junior simplex."""
    logger.info('Computing G-Hilb for {}'.format(group))
    return hilb_fan(HilbContext.standard(group))


def minimal_ggraph_at(v, ctx):
    c = ctx.to_chart(v)
    if not all(x > 0 for x in c):
        raise FanError('{} is not inside the cone'.format(v))
    return _solver(ctx.action).minimal_ggraph(c)


def ggraph_cone(ggraph, ctx):
    if not ggraph.is_valid(ctx.action):
        raise FanError('not a G-graph for {}'.format(ctx.action))
    poly = _solver(ctx.action).polygon(ggraph)
    if len(poly) != 3:
        raise FanError('G-graph cone with {} rays'.format(len(poly)))
    return Cone3(tuple(ctx.overlattice.primitive(ctx.from_chart(p)) for p in poly), ctx.overlattice)


def cell_ggraphs(T, ctx):
    """G-graph of every triangle of T, keyed by triangle, read off at its centroid."""
    third = Fraction(1, 3)
    out = {}
    for t in T.triangles:
        centroid = scale(third, add(add(T.vertices[t[0]], T.vertices[t[1]]), T.vertices[t[2]]))
        out[t] = minimal_ggraph_at(centroid, ctx)
    return out
