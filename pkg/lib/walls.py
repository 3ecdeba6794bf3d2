"""
Walls of the chamber of G-Hilb: one per exceptional divisor, one per
(-1,-1)-curve and one per generalised long side, each marked with characters.
"""
from dataclasses import dataclass, field

from lib.constants import WALL_DIVISOR, WALL_FLOP, WALL_LONG_SIDE, WALL_ROMAN
from lib.lattice import UNIT_VECTORS, cross, sub
from lib.reid import reid_recipe
from lib.triangulation import curve_type
from mckay_app import logger


@dataclass(frozen=True)
class GeneralisedLongSide:
    vertices: tuple
    edges: tuple
    label: object
    segments: tuple
    final_edges: frozenset = field(default_factory=frozenset)


@dataclass(frozen=True)
class Wall:
    kind: str
    locus: object
    labels: frozenset
    reducibility: str = None

    @property
    def roman(self):
        return WALL_ROMAN[self.kind]


def _chain_order(edges):
    """Vertices of a simple path in order, or None if the edges do not form one."""
    degree = {}
    for e in edges:
        for v in e:
            degree.setdefault(v, []).append(e)
    if any(len(es) > 2 for es in degree.values()):
        return None
    ends = sorted(v for v, es in degree.items() if len(es) == 1)
    if len(ends) != 2:
        return None
    path = [ends[0]]
    used = set()
    while True:
        nxt = [e for e in degree[path[-1]] if e not in used]
        if not nxt:
            break
        used.add(nxt[0])
        path.append(nxt[0][0] if nxt[0][1] == path[-1] else nxt[0][1])
    if len(used) != len(edges):
        return None
    return path


def _components(edges):
    remaining = set(edges)
    out = []
    while remaining:
        component = {remaining.pop()}
        grew = True
        while grew:
            touching = {e for e in remaining if any(set(e) & set(c) for c in component)}
            grew = bool(touching)
            component |= touching
            remaining -= touching
        out.append(sorted(component))
    return sorted(out)


def _segments(T, path):
    """Split a vertex path into maximal straight runs, each as a vertex tuple."""
    segments = []
    current = [path[0], path[1]]
    for v in path[2:]:
        a, b = T.vertices[current[-2]], T.vertices[current[-1]]
        if any(cross(sub(b, a), sub(T.vertices[v], b))):
            segments.append(tuple(current))
            current = [current[-1]]
        current.append(v)
    segments.append(tuple(current))
    return segments


def _segment_final(T, segment):
    def edge_at(i, j):
        return tuple(sorted((segment[i], segment[j])))

    first, last = T.vertices[segment[0]], T.vertices[segment[-1]]
    corners = [first in UNIT_VECTORS, last in UNIT_VECTORS]
    if corners[0] != corners[1]:
        return {edge_at(-2, -1)} if corners[0] else {edge_at(0, 1)}
    boundary = [T.is_boundary_vertex(segment[0]), T.is_boundary_vertex(segment[-1])]
    if boundary[0] != boundary[1]:
        return {edge_at(-2, -1)} if boundary[0] else {edge_at(0, 1)}
    return {edge_at(0, 1), edge_at(-2, -1)}


def final_curves(T, long_side):
    out = set()
    for segment in long_side.segments:
        out |= _segment_final(T, segment)
    return frozenset(out)


def generalised_long_sides(T, labels):
    by_character = {}
    for e, chi in labels.edge_labels.items():
        by_character.setdefault(chi, []).append(e)
    found = []
    for chi in sorted(by_character):
        for component in _components(by_character[chi]):
            path = _chain_order(component)
            if path is None:
                continue
            if not (T.is_boundary_vertex(path[0]) and T.is_boundary_vertex(path[-1])):
                continue
            if any(T.is_boundary_vertex(v) for v in path[1:-1]):
                continue
            if any(curve_type(T, e).is_flop for e in component):
                continue
            if T.vertices[path[0]] > T.vertices[path[-1]]:
                path.reverse()
            ls = GeneralisedLongSide(tuple(path), tuple(component), chi, tuple(_segments(T, path)))
            found.append(GeneralisedLongSide(ls.vertices, ls.edges, chi, ls.segments, final_curves(T, ls)))
    logger.debug('Found {} generalised long sides'.format(len(found)))
    return found


def walls_of(T, labels, long_sides=None):
    if long_sides is None:
        long_sides = generalised_long_sides(T, labels)
    walls = []
    for v in T.interior_vertices():
        walls.append(Wall(WALL_DIVISOR, v, labels.vertex_labels.get(v, frozenset()), reducibility='unknown'))
    for e in T.interior_edges():
        if curve_type(T, e).is_flop:
            walls.append(Wall(WALL_FLOP, e, frozenset([labels.edge_labels[e]])))
    for n, ls in enumerate(long_sides):
        walls.append(Wall(WALL_LONG_SIDE, n, frozenset([ls.label])))
    return walls


def group_walls(group):
    """Wall census of the G-Hilb chamber with its triangulation, labels and long sides."""
    T, labels = reid_recipe(group)
    long_sides = generalised_long_sides(T, labels)
    walls = walls_of(T, labels, long_sides)
    logger.info('Wall census for {}: {} walls'.format(group, len(walls)))
    return T, labels, long_sides, walls


def wall_census(group):
    return group_walls(group)[3]
