"""
SVG drawing of a triangulation JSON document in the style of the usual
junior simplex figures: e1 at the top, e2 bottom right, e3 bottom left.
"""
import drawsvg as draw
import numpy as np

from mckay_app import config


def render_settings():
    return {
        'width': config.getint('render', 'width', fallback=640),
        'height': config.getint('render', 'height', fallback=580),
        'padding': config.getint('render', 'padding', fallback=40),
        'font_size': config.getint('render', 'font_size', fallback=13)
    }


def projection(width, height, padding):
    """Rows are the plane images of e1, e2, e3."""
    return np.array([
        [width / 2, padding],
        [width - padding, height - padding],
        [padding, height - padding]
    ], dtype=float)


def project(doc, width, height, padding):
    d = doc['denominator']
    barycentric = np.array(doc['vertices'], dtype=float) / d
    return np.round(barycentric @ projection(width, height, padding), 2)


def _label_text(value):
    if isinstance(value, list):
        return '({})'.format(','.join(str(x) for x in value))
    return str(value)


def _edge_set(items):
    return {tuple(sorted(e)) for e in items or []}


def render_svg(doc, settings=None):
    """SVG text for a triangulation document; highlight.dashed / highlight.bold mark edges."""
    settings = settings or render_settings()
    width, height, padding = settings['width'], settings['height'], settings['padding']
    font_size = settings['font_size']
    points = project(doc, width, height, padding)
    highlight = doc.get('highlight', {})
    dashed = _edge_set(highlight.get('dashed'))
    bold = _edge_set(highlight.get('bold'))

    edges = set()
    for t in doc['triangles']:
        i, j, k = sorted(t)
        edges |= {(i, j), (i, k), (j, k)}

    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill='white'))
    for i, j in sorted(edges):
        (x1, y1), (x2, y2) = points[i], points[j]
        style = {'stroke': 'black', 'stroke_width': 3.5 if (i, j) in bold else 1}
        if (i, j) in dashed:
            style['stroke_dasharray'] = '6,4'
        d.append(draw.Line(float(x1), float(y1), float(x2), float(y2), **style))

    for (x, y) in points:
        d.append(draw.Circle(float(x), float(y), 2.5, fill='black'))

    for item in doc.get('edge_labels', []):
        i, j = item['edge']
        x, y = (points[i] + points[j]) / 2
        d.append(draw.Text(_label_text(item['label']), font_size, float(x), float(y), fill='black',
                           text_anchor='middle', dominant_baseline='central',
                           stroke='white', stroke_width=3, paint_order='stroke'))

    for item in doc.get('vertex_labels', []):
        x, y = points[item['vertex']]
        text = ','.join(_label_text(v) for v in item['labels'])
        w = font_size * (0.7 * len(text) + 0.8)
        h = font_size * 1.5
        d.append(draw.Rectangle(float(x) - w / 2, float(y) - h / 2, w, h, fill='white', stroke='black'))
        d.append(draw.Text(text, font_size, float(x), float(y), fill='black',
                           text_anchor='middle', dominant_baseline='central'))
    return d.as_svg()


def write_svg(doc, path, settings=None):
    text = render_svg(doc, settings)
    with open(path, 'w') as f:
        f.write(text)
    return text
