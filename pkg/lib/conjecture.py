"""
Flip paths from G-Hilb to T-Hilb A-Hilb whose flopped curves carry every
nontrivial character lifted from T = G/A.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd

from lib.constants import METHOD_DEGENERATE, METHOD_FAILED, METHOD_FAST_PATH, METHOD_SEARCH, MODEL_ASSUMPTIONS
from lib.exceptions import TriangulationError
from lib.group import lifted_characters, subgroups
from lib.ithilb import IteratedChain, iterated_hilb
from lib.reid import reid_recipe
from lib.triangulation import flip, flipped_diagonal, flop_edges
from lib.walls import generalised_long_sides
from mckay_app import config, logger


@dataclass(frozen=True)
class FlipStep:
    before: object
    edge: tuple
    label: object


@dataclass
class FlipPath:
    steps: list = field(default_factory=list)

    @property
    def chi_gamma(self):
        return frozenset(step.label for step in self.steps)

    def __len__(self):
        return len(self.steps)


@dataclass
class NotFound:
    explored: int
    max_depth: int
    max_nodes: int
    truncated: bool
    target_reached: bool
    best_cover: frozenset = frozenset()


@dataclass
class ConjectureReport:
    group: object
    subgroup: object
    method: str
    verified: object
    target_reached: bool
    lifted: frozenset
    chi_gamma: frozenset
    path: object = None
    search: object = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def lifted_star(self):
        return frozenset(chi for chi in self.lifted if not chi.is_trivial)


def lifted_star(group, subgroup):
    return frozenset(chi for chi in lifted_characters(group, subgroup) if not chi.is_trivial)


def edge_diff_labels(T, labels, target):
    if T.key[0] != target.key[0]:
        raise TriangulationError('triangulations have different vertex sets')
    return frozenset(labels.edge_labels[e] for e in T.interior_edges() if e not in target.edges)


def target_triangulation(group, subgroup):
    return iterated_hilb(IteratedChain.of(group, subgroup))


def corollary_check(group, subgroup, T=None, labels=None, target=None):
    if T is None or labels is None:
        T, labels = reid_recipe(group)
    if target is None:
        target = target_triangulation(group, subgroup)
    return lifted_star(group, subgroup) <= edge_diff_labels(T, labels, target)


def _bounds(max_depth, max_nodes):
    if max_depth is None:
        max_depth = config.getint('conjecture', 'max_depth', fallback=12)
    if max_nodes is None:
        max_nodes = config.getint('conjecture', 'max_nodes', fallback=20000)
    return max_depth, max_nodes


def _expand(T, edge_labels, e):
    U = flip(T, e)
    new_labels = dict(edge_labels)
    label = new_labels.pop(e)
    new_labels[flipped_diagonal(T, e)] = label
    return U, new_labels, label


def search_path(group, subgroup, max_depth=None, max_nodes=None, T=None, labels=None, target=None,
                require_cover=True):
    """
    Shortest labelled flip sequence from G-Hilb to the iterated Hilb whose
    labels cover the nontrivial lifted characters. Returns FlipPath or NotFound.
    """
    max_depth, max_nodes = _bounds(max_depth, max_nodes)
    if T is None or labels is None:
        T, labels = reid_recipe(group)
    if target is None:
        target = target_triangulation(group, subgroup)
    needed = lifted_star(group, subgroup) if require_cover else frozenset()

    def goal(U, chi):
        return U == target and needed <= chi

    start = (T, dict(labels.edge_labels), frozenset(), ())
    if goal(T, frozenset()):
        return FlipPath()
    seen = {(T, frozenset(labels.edge_labels.items()), frozenset())}
    queue = deque([start])
    reached = False
    truncated = False
    best = frozenset()
    while queue:
        U, edge_labels, chi, steps = queue.popleft()
        if len(steps) >= max_depth:
            truncated = True
            continue
        for e in sorted(flop_edges(U)):
            V, new_labels, label = _expand(U, edge_labels, e)
            new_chi = chi | {label}
            new_steps = steps + (FlipStep(U, e, label),)
            if V == target:
                reached = True
                if len(needed & new_chi) > len(needed & best):
                    best = needed & new_chi
            if goal(V, new_chi):
                logger.debug('Flip path of length {} found after {} states'.format(len(new_steps), len(seen)))
                return FlipPath(list(new_steps))
            key = (V, frozenset(new_labels.items()), new_chi)
            if key in seen:
                continue
            if len(seen) >= max_nodes:
                truncated = True
                continue
            seen.add(key)
            queue.append((V, new_labels, new_chi, new_steps))
    if config.getboolean('conjecture', 'dfs_fallback', fallback=False):
        path = _depth_first(T, labels, target, needed, max_depth)
        if path is not None:
            return path
    logger.warning('No flip path for {} / {} within depth {} and {} states'.format(
        group, subgroup.describe(), max_depth, max_nodes))
    return NotFound(len(seen), max_depth, max_nodes, truncated, reached, best)


def _depth_first(T, labels, target, needed, max_depth):
    """Depth-limited search that only remembers the current branch."""
    def walk(U, edge_labels, chi, steps, visited):
        if U == target and needed <= chi:
            return list(steps)
        if len(steps) >= max_depth:
            return None
        for e in sorted(flop_edges(U)):
            V, new_labels, label = _expand(U, edge_labels, e)
            if V in visited:
                continue
            found = walk(V, new_labels, chi | {label}, steps + [FlipStep(U, e, label)], visited | {V})
            if found is not None:
                return found
        return None

    steps = walk(T, dict(labels.edge_labels), frozenset(), [], {T})
    return FlipPath(steps) if steps is not None else None


def _diagnostics(T, labels, needed, guaranteed, path):
    divisor_labels = set()
    for chis in labels.vertex_labels.values():
        divisor_labels |= set(chis)
    long_side_labels = {ls.label for ls in generalised_long_sides(T, labels)}
    diagnostics = {
        'lifted_on_divisors': sorted(needed & divisor_labels),
        'lifted_on_long_sides': sorted(needed & long_side_labels),
        'lifted_on_edges': sorted(needed & set(labels.edge_labels.values())),
        'guaranteed_labels': sorted(guaranteed),
        'model_assumptions': list(MODEL_ASSUMPTIONS)
    }
    if path is not None and len(path):
        diagnostics['lifted_fraction'] = Fraction(sum(step.label in needed for step in path.steps), len(path))
    else:
        diagnostics['lifted_fraction'] = None
    return diagnostics


def conjecture_report(group, subgroup, max_depth=None, max_nodes=None):
    lifted = lifted_characters(group, subgroup)
    needed = frozenset(chi for chi in lifted if not chi.is_trivial)
    if subgroup.is_trivial:
        logger.info('Trivial subgroup of {}: nothing to verify'.format(group))
        return ConjectureReport(group, subgroup, METHOD_DEGENERATE, None, False, lifted, frozenset(),
                                diagnostics={'model_assumptions': list(MODEL_ASSUMPTIONS)})
    T, labels = reid_recipe(group)
    target = T if subgroup.is_whole else target_triangulation(group, subgroup)
    guaranteed = edge_diff_labels(T, labels, target)
    if needed <= guaranteed:
        path = search_path(group, subgroup, max_depth, max_nodes, T, labels, target, require_cover=False)
        if isinstance(path, NotFound):
            logger.warning('Fast path holds for {} / {} but no flip certificate within bounds'.format(
                group, subgroup.describe()))
            report_path, chi_gamma = None, guaranteed
        else:
            report_path, chi_gamma = path, path.chi_gamma
        report = ConjectureReport(group, subgroup, METHOD_FAST_PATH, True, True, lifted, chi_gamma, report_path)
    else:
        path = search_path(group, subgroup, max_depth, max_nodes, T, labels, target)
        if isinstance(path, NotFound):
            report = ConjectureReport(group, subgroup, METHOD_FAILED, False, path.target_reached, lifted,
                                      path.best_cover, search=path)
        else:
            report = ConjectureReport(group, subgroup, METHOD_SEARCH, True, True, lifted, path.chi_gamma, path)
    report.diagnostics = _diagnostics(T, labels, needed, guaranteed, report.path)
    logger.info('Conjecture for {} / {}: {} ({})'.format(group, subgroup.describe(), report.verified, report.method))
    return report


def conjecture_sweep(group, max_depth=None, max_nodes=None):
    rows = []
    for subgroup in subgroups(group):
        if subgroup.is_trivial or subgroup.is_whole:
            continue
        report = conjecture_report(group, subgroup, max_depth, max_nodes)
        rows.append({
            'group': str(group),
            'subgroup': subgroup.describe(),
            'subgroup_order': subgroup.order,
            'method': report.method,
            'verified': bool(report.verified),
            'lifted': ' '.join(str(chi) for chi in sorted(report.lifted_star)),
            'chi_gamma': ' '.join(str(chi) for chi in sorted(report.chi_gamma)),
            'path_length': len(report.path) if report.path is not None else None
        })
    return pd.DataFrame(rows, columns=['group', 'subgroup', 'subgroup_order', 'method', 'verified', 'lifted',
                                       'chi_gamma', 'path_length'])

