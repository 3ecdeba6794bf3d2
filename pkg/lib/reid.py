"""
Reid's recipe: characters on the curves (interior edges) and divisors
(interior vertices) of the G-Hilb triangulation.
"""
from dataclasses import dataclass, field

from lib.constants import RULE_CHAMPIONS, RULE_GGRAPH, RULE_LINES, RULE_THREE_LINES, RULE_UNRESOLVED
from lib.exceptions import NoPairFound, VertexLabelError
from lib.lattice import cross, dot, primitive_integer, scaled, sub
from lib.nakamura import HilbContext, cell_ggraphs, ghilb
from lib.util import parallel_map
from mckay_app import config, logger


@dataclass(frozen=True)
class StraightLine:
    """Maximal path of interior edges on one affine line, vertices in order along it."""
    vertices: tuple
    edges: tuple

    def __len__(self):
        return len(self.edges)

    def passes_through(self, v):
        return v in self.vertices[1:-1]


@dataclass
class ReidLabels:
    edge_labels: dict = field(default_factory=dict)
    vertex_labels: dict = field(default_factory=dict)
    vertex_rules: dict = field(default_factory=dict)
    unresolved: list = field(default_factory=list)

    def characters(self):
        out = set(self.edge_labels.values())
        for chis in self.vertex_labels.values():
            out |= set(chis)
        return out


def _line_key(T, e):
    n = primitive_integer(cross(T.vertices[e[0]], T.vertices[e[1]]))
    return max(n, tuple(-x for x in n))


def straight_lines(T):
    groups = {}
    for e in T.interior_edges():
        groups.setdefault(_line_key(T, e), []).append(e)
    lines = []
    for key in sorted(groups):
        remaining = set(groups[key])
        while remaining:
            component = {remaining.pop()}
            grew = True
            while grew:
                touching = {e for e in remaining if any(set(e) & set(c) for c in component)}
                grew = bool(touching)
                component |= touching
                remaining -= touching
            first = min(component)
            direction = sub(T.vertices[first[1]], T.vertices[first[0]])
            vertices = sorted({v for e in component for v in e})
            vertices.sort(key=lambda v: dot(direction, T.vertices[v]))
            edges = tuple(tuple(sorted(p)) for p in zip(vertices, vertices[1:]))
            lines.append(StraightLine(tuple(vertices), edges))
    lines.sort(key=lambda line: line.edges)
    return lines


def label_edge(T, e, group):
    """
    Character of the coprime monomial pair m1, m2 with equal weight on both
    ends of e: m1/m2 is the smallest invariant multiple of the edge normal.
    """
    e = tuple(sorted(e))
    m0 = primitive_integer(cross(T.vertices[e[0]], T.vertices[e[1]]))
    for k in range(1, group.exponent + 1):
        m = tuple(k * x for x in m0)
        if group.monomial_character(m).is_trivial:
            positive = tuple(max(x, 0) for x in m)
            return group.monomial_character(positive)
    raise NoPairFound('no invariant monomial pair along edge {} for {}'.format(e, group))


def _through_characters(T, v, edge_labels):
    counts = {}
    for e in T.incident_edges(v):
        if e in edge_labels:
            counts.setdefault(edge_labels[e], []).append(e)
    return {chi: es for chi, es in counts.items() if len(es) >= 2}


def _generator_rule(T, v, edge_labels, ggraphs):
    """
    Characters whose G-graph monomials on the triangles at v have no common
    factor and which label no edge at v.
    """
    incident = {edge_labels[e] for e in T.incident_edges(v) if e in edge_labels}
    around = [ggraphs[t] for t in T.triangles_at(v)]
    out = set()
    for chi in around[0].by_character:
        if chi.is_trivial or chi in incident:
            continue
        monomials = [g.monomial(chi) for g in around]
        if not any(min(m[i] for m in monomials) for i in range(3)):
            out.add(chi)
    return out


def label_vertex(T, v, edge_labels, ggraphs=None):
    """
    Returns (labels, rule). Three lines through v are resolved from the
    G-graphs; otherwise products of through-characters, then the square of a
    champion character meeting itself, then the G-graph generators.
    """
    through = _through_characters(T, v, edge_labels)
    if len(through) >= 3 and ggraphs is not None:
        labels = _generator_rule(T, v, edge_labels, ggraphs)
        logger.debug('Three lines {} meet at vertex {}'.format(sorted(through), v))
        if 1 <= len(labels) <= 2:
            return frozenset(labels), RULE_THREE_LINES
    labels = set()
    rule = RULE_LINES
    if len(through) == 2:
        a, b = through
        labels = {a * b}
    elif len(through) == 1:
        chi, es = next(iter(through.items()))
        if len(es) >= 3:
            logger.debug('Meeting of champions at vertex {} with character {}'.format(v, chi))
            labels = {chi * chi}
            rule = RULE_CHAMPIONS
    labels = {chi for chi in labels if not chi.is_trivial}
    if 1 <= len(labels) <= 2:
        return frozenset(labels), rule
    if ggraphs is not None:
        labels = _generator_rule(T, v, edge_labels, ggraphs)
        if 1 <= len(labels) <= 2:
            return frozenset(labels), RULE_GGRAPH
    return frozenset(), RULE_UNRESOLVED


def reid_labels(T, group):
    edges = T.interior_edges()
    labels = ReidLabels()
    for e, chi in zip(edges, parallel_map(lambda e: label_edge(T, e, group), edges)):
        labels.edge_labels[e] = chi
    interior = T.interior_vertices()
    ggraphs = cell_ggraphs(T, HilbContext.standard(group)) if interior else {}
    strict = config.getboolean('reid', 'strict', fallback=False)
    for v in interior:
        chis, rule = label_vertex(T, v, labels.edge_labels, ggraphs)
        labels.vertex_rules[v] = rule
        if rule == RULE_UNRESOLVED:
            message = 'No divisor label for vertex {} ({}) of {}'.format(v, scaled(T.vertices[v], T.denominator),
                                                                        group)
            if strict:
                raise VertexLabelError(message, vertex=v)
            logger.warning(message)
            labels.unresolved.append(v)
        else:
            labels.vertex_labels[v] = chis
    return labels


def reid_recipe(group):
    T = ghilb(group)
    labels = reid_labels(T, group)
    logger.info('Reid recipe for {}: {} edge labels, {} vertex labels'.format(
        group, len(labels.edge_labels), len(labels.vertex_labels)))
    return T, labels

