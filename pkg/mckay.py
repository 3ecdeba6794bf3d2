"""
Command line entry point: `python mckay.py <command> <group> [options]`.

Groups are written r:a,b,c or as products r1:a1,b1,c1*r2:a2,b2,c2.
"""
import argparse
import sys
from fractions import Fraction

from lib.conjecture import NotFound, conjecture_report, conjecture_sweep
from lib.constants import EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, SCHEMA_VERSION, WALL_LONG_SIDE, \
    WALL_ROMAN
from lib.exceptions import GroupParseError, McKayException
from lib.group import mckay_quiver, parse_chain, parse_group, parse_subgroup_gens, \
    subgroup_by_order, subgroups
from lib.ithilb import IteratedChain, build_theta, check_lemma_sign, iterated_hilb, lemma_sweep
from lib.lattice import scaled
from lib.nakamura import ghilb, set_seed_denominator
from lib.reid import reid_labels, reid_recipe
from lib.render import render_svg, write_svg
from lib.triangulation import brute_force_triangulations, curve_type, flip_graph
from lib.util import labels_to_json, read_json, triangulation_to_json, write_json
from lib.walls import group_walls
from mckay_app import logger


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError('{}: {}'.format(self.prog, message))


def _characters(chis):
    return [chi.to_json() for chi in sorted(chis)]


def _fraction(x):
    return None if x is None else str(Fraction(x))


##############################
# Documents
##############################
def group_doc(group):
    d = group.denominator
    quiver = mckay_quiver(group)
    return {
        'schema': SCHEMA_VERSION,
        'group': str(group),
        'order': group.order,
        'moduli': list(group.moduli),
        'cyclic': group.is_cyclic,
        'denominator': d,
        'characters': _characters(group.characters),
        'coordinate_characters': [chi.to_json() for chi in group.coordinate_characters],
        'junior_points': [list(scaled(w, d)) for w in group.junior_points()],
        'subgroups': [{'order': a.order, 'action': a.describe(), 'generators': [list(g) for g in a.generators]}
                      for a in subgroups(group)],
        'quiver_arrows': len(quiver.arrows)
    }


def triangulation_doc(T, group, labels=None):
    doc = triangulation_to_json(T, group)
    if labels is not None:
        doc.update(labels_to_json(T, labels))
    return doc


def flops_doc(T, group, graph):
    doc = triangulation_to_json(T, group)
    doc['curves'] = []
    for e in T.interior_edges():
        ct = curve_type(T, e)
        doc['curves'].append({'edge': list(e), 'type': ct.tag, 'alpha': ct.alpha, 'beta': ct.beta,
                              'k': ct.k, 'name': str(ct)})
    doc['flip_graph'] = {
        'nodes': len(graph.nodes),
        'edges': len(graph.edges),
        'truncated': graph.truncated,
        'flop_counts': graph.flop_counts()
    }
    return doc


def walls_doc(T, group, labels, long_sides, walls):
    doc = triangulation_doc(T, group, labels)
    doc['long_sides'] = [{'vertices': list(ls.vertices), 'label': ls.label.to_json(),
                          'edges': [list(e) for e in ls.edges],
                          'final_edges': [list(e) for e in sorted(ls.final_edges)]} for ls in long_sides]
    doc['walls'] = []
    for w in walls:
        item = {'type': w.kind, 'roman': WALL_ROMAN[w.kind], 'labels': _characters(w.labels)}
        if isinstance(w.locus, tuple):
            item['edge'] = list(w.locus)
        elif w.kind == WALL_LONG_SIDE:
            item['long_side'] = w.locus
        else:
            item['vertex'] = w.locus
        if w.reducibility is not None:
            item['reducibility'] = w.reducibility
        doc['walls'].append(item)
    doc['highlight'] = {
        'dashed': sorted(list(e) for ls in long_sides for e in ls.edges),
        'bold': sorted(list(e) for ls in long_sides for e in ls.final_edges)
    }
    return doc


def report_doc(report):
    doc = {
        'schema': SCHEMA_VERSION,
        'group': str(report.group),
        'subgroup': report.subgroup.describe(),
        'subgroup_order': report.subgroup.order,
        'method': report.method,
        'verified': report.verified,
        'target_reached': report.target_reached,
        'lifted': _characters(report.lifted_star),
        'chi_gamma': _characters(report.chi_gamma),
        'path': None
    }
    if report.path is not None:
        d = report.group.denominator
        doc['path'] = [{'edge': list(step.edge),
                        'edge_vertices': [list(scaled(step.before.vertices[i], d)) for i in step.edge],
                        'label': step.label.to_json()} for step in report.path.steps]
    if isinstance(report.search, NotFound):
        doc['search'] = {'explored': report.search.explored, 'max_depth': report.search.max_depth,
                         'max_nodes': report.search.max_nodes, 'truncated': report.search.truncated}
    diagnostics = {}
    for key, value in report.diagnostics.items():
        if key == 'lifted_fraction':
            diagnostics[key] = _fraction(value)
        elif key == 'model_assumptions':
            diagnostics[key] = value
        else:
            diagnostics[key] = [chi.to_json() for chi in value]
    doc['diagnostics'] = diagnostics
    return doc


##############################
# Commands
##############################
def _subgroup(args, group):
    if args.subgroup_gens:
        return parse_subgroup_gens(group, args.subgroup_gens)
    if args.subgroup_order:
        return subgroup_by_order(group, args.subgroup_order)
    raise UsageError('a subgroup is required: --subgroup-order M or --subgroup-gens LIST')


def _emit(args, doc):
    text = write_json(doc, args.json)
    if not args.json or args.json == '-':
        sys.stdout.write(text)
    if getattr(args, 'svg', None) and 'triangles' in doc:
        write_svg(doc, args.svg)
        logger.info('Wrote {}'.format(args.svg))


def cmd_group(args):
    group = parse_group(args.group)
    _emit(args, group_doc(group))
    return EXIT_OK


def cmd_ghilb(args):
    group = parse_group(args.group)
    T = ghilb(group)
    _emit(args, triangulation_doc(T, group, reid_labels(T, group) if args.labels else None))
    return EXIT_OK


def cmd_reid(args):
    group = parse_group(args.group)
    T, labels = reid_recipe(group)
    _emit(args, triangulation_doc(T, group, labels))
    return EXIT_OK


def cmd_flops(args):
    group = parse_group(args.group)
    T = ghilb(group)
    _emit(args, flops_doc(T, group, flip_graph(T, args.max_nodes)))
    return EXIT_OK


def cmd_ithilb(args):
    group = parse_group(args.group)
    if args.chain:
        chain = IteratedChain(group, tuple(parse_chain(group, args.chain)))
    else:
        chain = IteratedChain.of(group, _subgroup(args, group))
    T = iterated_hilb(chain)
    doc = triangulation_doc(T, group)
    doc['chain'] = [a.describe() for a in chain.subgroups]
    theta = build_theta(group, chain)
    doc['theta'] = theta.to_json()
    doc['lemma_sign'] = check_lemma_sign(group, chain, theta)
    _emit(args, doc)
    return EXIT_OK


def cmd_walls(args):
    group = parse_group(args.group)
    T, labels, long_sides, walls = group_walls(group)
    _emit(args, walls_doc(T, group, labels, long_sides, walls))
    return EXIT_OK


def cmd_conjecture(args):
    group = parse_group(args.group)
    if args.all_subgroups:
        df = conjecture_sweep(group, args.max_depth, args.max_nodes)
        if args.store:
            from lib.sqlalchemy_declarative import db_insert
            db_insert(df, 'conjecture_report')
        doc = {'schema': SCHEMA_VERSION, 'group': str(group), 'reports': df.to_dict(orient='records')}
        _emit(args, doc)
        return EXIT_OK if bool(df['verified'].all()) else EXIT_INCONCLUSIVE
    report = conjecture_report(group, _subgroup(args, group), args.max_depth, args.max_nodes)
    _emit(args, report_doc(report))
    return EXIT_OK if report.verified else EXIT_INCONCLUSIVE


def cmd_enumerate(args):
    group = parse_group(args.group)
    found = brute_force_triangulations(group, args.max_order)
    T0 = ghilb(group)
    doc = {'schema': SCHEMA_VERSION, 'group': str(group), 'count': len(found),
           'ghilb_index': found.index(T0) if T0 in found else None,
           'triangulations': [triangulation_to_json(T) for T in found]}
    _emit(args, doc)
    return EXIT_OK


def cmd_svg(args):
    doc = read_json(args.input)
    if args.svg:
        write_svg(doc, args.svg)
    else:
        sys.stdout.write(render_svg(doc))
    return EXIT_OK


def cmd_sweep(args):
    df = lemma_sweep(args.max_order)
    if args.store:
        from lib.sqlalchemy_declarative import db_insert
        db_insert(df, 'lemma_sweep')
    doc = {'schema': SCHEMA_VERSION, 'max_order': args.max_order, 'cases': len(df),
           'failures': df[~df['lemma_holds']].to_dict(orient='records')}
    _emit(args, doc)
    return EXIT_OK if bool(df['lemma_holds'].all()) else EXIT_ERROR


def build_parser():
    common = Parser(add_help=False)
    common.add_argument('--json', metavar='PATH', help="write JSON to PATH ('-' for stdout)")
    common.add_argument('--seed-denominator', type=int, help='perturbation denominator for G-graph seeds')

    svg = Parser(add_help=False)
    svg.add_argument('--svg', metavar='PATH', help='also render the triangulation as SVG')

    subgroup = Parser(add_help=False)
    subgroup.add_argument('--subgroup-order', type=int, metavar='M')
    subgroup.add_argument('--subgroup-gens', metavar='LIST', help="generators, e.g. '3' or '1.0,0.1'")

    search = Parser(add_help=False)
    search.add_argument('--max-depth', type=int)
    search.add_argument('--max-nodes', type=int)

    parser = Parser(prog='mckay', description='McKay correspondence toric computations')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('group', parents=[common])
    p.add_argument('group')
    p.set_defaults(func=cmd_group)

    p = commands.add_parser('ghilb', parents=[common, svg])
    p.add_argument('group')
    p.add_argument('--labels', action='store_true', help="include Reid's recipe labels")
    p.set_defaults(func=cmd_ghilb)

    p = commands.add_parser('reid', parents=[common, svg])
    p.add_argument('group')
    p.set_defaults(func=cmd_reid)

    p = commands.add_parser('flops', parents=[common, svg])
    p.add_argument('group')
    p.add_argument('--max-nodes', type=int)
    p.set_defaults(func=cmd_flops)

    p = commands.add_parser('ithilb', parents=[common, svg, subgroup])
    p.add_argument('group')
    p.add_argument('--chain', metavar='SPEC', help="subgroup orders innermost first, e.g. '2,6'")
    p.set_defaults(func=cmd_ithilb)

    p = commands.add_parser('walls', parents=[common, svg])
    p.add_argument('group')
    p.set_defaults(func=cmd_walls)

    p = commands.add_parser('conjecture', parents=[common, subgroup, search])
    p.add_argument('group')
    p.add_argument('--all-subgroups', action='store_true')
    p.add_argument('--store', action='store_true', help='append results to the configured database')
    p.set_defaults(func=cmd_conjecture)

    p = commands.add_parser('enumerate', parents=[common])
    p.add_argument('group')
    p.add_argument('--max-order', type=int)
    p.set_defaults(func=cmd_enumerate)

    p = commands.add_parser('svg', parents=[common, svg])
    p.add_argument('input', help='triangulation JSON')
    p.set_defaults(func=cmd_svg)

    p = commands.add_parser('sweep', parents=[common])
    p.add_argument('--max-order', type=int, default=30)
    p.add_argument('--store', action='store_true', help='append results to the configured database')
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.seed_denominator is not None:
            set_seed_denominator(args.seed_denominator)
        return args.func(args)
    except (UsageError, GroupParseError) as e:
        message = e.message if isinstance(e, McKayException) else str(e)
        logger.error(message)
        sys.stderr.write('error: {}\n'.format(message))
        return EXIT_USAGE
    except McKayException as e:
        logger.error('{}: {}'.format(type(e).__name__, e.message))
        sys.stderr.write('error: {}\n'.format(e.message))
        return EXIT_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
