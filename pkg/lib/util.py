import json
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from lib.constants import SCHEMA_VERSION
from lib.group import character_from_json, parse_group
from lib.lattice import Lattice, as_point, scaled
from mckay_app import logger


def thread_count():
    try:
        return max(1, int(os.environ.get('MCKAY_THREADS', '1')))
    except ValueError:
        logger.warning('Ignoring non-integer MCKAY_THREADS={}'.format(os.environ.get('MCKAY_THREADS')))
        return 1


def parallel_map(fn, items):
    """Ordered map, threaded when MCKAY_THREADS > 1."""
    items = list(items)
    threads = thread_count()
    if threads == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))


##############################
# JSON
##############################
def dumps(doc):
    return json.dumps(doc, indent=2) + '\n'


def write_json(doc, path):
    """Write to a file path, or stdout for '-'. Returns the text."""
    text = dumps(doc)
    if path and path != '-':
        with open(path, 'w') as f:
            f.write(text)
        logger.info('Wrote {}'.format(path))
    return text


def read_json(path):
    with open(path) as f:
        return json.load(f)


def triangulation_to_json(T, group=None):
    d = T.lattice.denominator
    doc = {'schema': SCHEMA_VERSION}
    if group is not None:
        doc['group'] = str(group)
    doc['denominator'] = d
    doc['vertices'] = [list(scaled(v, d)) for v in T.vertices]
    doc['triangles'] = [list(t) for t in T.triangles]
    return doc


def triangulation_from_json(doc):
    # Local import: triangulation imports this module for its codec
    from lib.triangulation import Triangulation

    d = int(doc['denominator'])
    vertices = [as_point(Fraction(x, d) for x in v) for v in doc['vertices']]
    if 'group' in doc:
        lattice = parse_group(doc['group']).overlattice
    else:
        lattice = Lattice(vertices)
    return Triangulation.from_cells([[vertices[i] for i in t] for t in doc['triangles']], lattice)


def labels_to_json(T, labels):
    return {
        'edge_labels': [{'edge': list(e), 'label': chi.to_json()} for e, chi in sorted(labels.edge_labels.items())],
        'vertex_labels': [{'vertex': v, 'labels': [chi.to_json() for chi in sorted(chis)],
                           'rule': labels.vertex_rules.get(v)}
                          for v, chis in sorted(labels.vertex_labels.items())],
        'unresolved_vertices': sorted(labels.unresolved)
    }


def edge_labels_from_json(doc, moduli):
    return {tuple(item['edge']): character_from_json(item['label'], moduli) for item in doc.get('edge_labels', [])}
