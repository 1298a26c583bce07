# -*- mode: python; indent-tabs-mode: nil -*-

# Part of excat - exceptional collections of type A and affine type A.
# Copyright 2026, the excat developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
SVG and TikZ figures for documents.

Drawing code works in millimetres with y pointing up; each canvas does
its own flip. Output depends only on the document, so equal documents
give byte-identical figures.
"""

import math

from excat.quiver import PLUS
from excat.frontend.jsonio import DocumentError

__all__ = ('SVG', 'TikZ', 'render', 'draw_arc_diagram', 'draw_strand_diagram', 'draw_tree', 'draw_path',
           'draw_label')

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<svg width="{width:.3f}mm" height="{height:.3f}mm" viewBox="0 0 {width:.3f} {height:.3f}" version="1.1"
    xmlns="http://www.w3.org/2000/svg">
<g transform="translate({trans_x:.3f},{trans_y:.3f})">
<rect x="{neg_trans_x:.3f}" y="{neg_trans_y:.3f}" width="{width:.3f}" height="{height:.3f}" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</g></svg>
"""

TIKZ_PREAMBLE = """\
\\begin{tikzpicture}[x=1mm,y=1mm]
"""

TIKZ_POSTAMBLE = """\
\\end{tikzpicture}
"""

OUTER_RADIUS = 40.0
INNER_RADIUS = 12.0
POINT_SIZE = 1.6
STEP = 10.0


class _Canvas:
    def __init__(self):
        self.min_x = None
        self.max_x = None
        self.min_y = None
        self.max_y = None
        self.commands = []

    def require(self, x, y):
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)


class SVG(_Canvas):
    def circle(self, x, y, diameter, stroke='#000000', fill='none'):
        radius = diameter * 0.5
        self.require(x - radius, y - radius)
        self.require(x + radius, y + radius)
        self.commands.append(
            '<circle cx="{0:.3f}" cy="{1:.3f}" r="{2:.3f}" style="fill:{3};stroke:{4};stroke-width:0.25"/>'.format(
                x, -y, radius, fill, stroke))

    def line(self, points, color='#000000', width=0.25):
        for x, y in points:
            self.require(x, y)
        self.commands.append('<polyline points="{0}" style="fill:none;stroke:{1};stroke-width:{2:.2f}"/>'.format(
            ' '.join('{0:.3f},{1:.3f}'.format(x, -y) for x, y in points), color, width))

    def curve(self, pieces, color='#000000', width=0.35):
        """pieces: (p0, c1, c2, p1) cubic segments joined end to end."""
        parts = []
        for k, (p0, c1, c2, p1) in enumerate(pieces):
            for x, y in (p0, c1, c2, p1):
                self.require(x, y)
            if k == 0:
                parts.append('M {0:.3f},{1:.3f}'.format(p0[0], -p0[1]))
            parts.append('C {0:.3f},{1:.3f} {2:.3f},{3:.3f} {4:.3f},{5:.3f}'.format(
                c1[0], -c1[1], c2[0], -c2[1], p1[0], -p1[1]))
        self.commands.append('<path d="{0}" style="fill:none;stroke:{1};stroke-width:{2:.2f}"/>'.format(
            ' '.join(parts), color, width))

    def text(self, x, y, text, color='#444444'):
        font_height = 3.5
        self.require(x, y - font_height)
        self.require(x + len(text) * font_height * 0.6, y + font_height)
        self.commands.append(
            '<text x="{0:.3f}" y="{1:.3f}" fill="{2}" font-size="{3}" font-family="monospace">{4}</text>'.format(
                x, -y + font_height * 0.5, color, font_height, text))

    def render(self):
        if self.min_x is None:
            self.require(0.0, 0.0)
        pad = max(self.max_x - self.min_x, self.max_y - self.min_y, 1.0) * 0.1
        width = self.max_x - self.min_x + pad * 2
        height = self.max_y - self.min_y + pad * 2
        trans_x = -self.min_x + pad
        trans_y = self.max_y + pad
        return (PREAMBLE.format(width=width, height=height, trans_x=trans_x, trans_y=trans_y,
                                neg_trans_x=-trans_x, neg_trans_y=-trans_y)
                + ''.join(item + '\n' for item in self.commands)
                + POSTAMBLE)


def _tikz_color(color):
    return 'black' if color == '#000000' else 'gray'


class TikZ(_Canvas):
    def circle(self, x, y, diameter, stroke='#000000', fill='none'):
        self.require(x, y)
        style = 'fill={0}'.format(_tikz_color(fill)) if fill != 'none' else 'draw={0}'.format(_tikz_color(stroke))
        self.commands.append('\\path[{0}] ({1:.3f},{2:.3f}) circle ({3:.3f});'.format(style, x, y, diameter * 0.5))

    def line(self, points, color='#000000', width=0.25):
        for x, y in points:
            self.require(x, y)
        self.commands.append('\\draw[{0}] {1};'.format(
            _tikz_color(color), ' -- '.join('({0:.3f},{1:.3f})'.format(x, y) for x, y in points)))

    def curve(self, pieces, color='#000000', width=0.35):
        parts = []
        for k, (p0, c1, c2, p1) in enumerate(pieces):
            if k == 0:
                parts.append('({0:.3f},{1:.3f})'.format(*p0))
            parts.append('.. controls ({0:.3f},{1:.3f}) and ({2:.3f},{3:.3f}) .. ({4:.3f},{5:.3f})'.format(
                c1[0], c1[1], c2[0], c2[1], p1[0], p1[1]))
        self.commands.append('\\draw[{0}] {1};'.format(_tikz_color(color), ' '.join(parts)))

    def text(self, x, y, text, color='#444444'):
        self.require(x, y)
        self.commands.append('\\node[anchor=west,font=\\tiny] at ({0:.3f},{1:.3f}) {{{2}}};'.format(x, y, text))

    def render(self):
        return TIKZ_PREAMBLE + ''.join('  ' + item + '\n' for item in self.commands) + TIKZ_POSTAMBLE


def _polar(radius, angle):
    return radius * math.cos(angle), radius * math.sin(angle)


def _spiral(r0, r1, a0, a1, bulge=0.0, pieces=None):
    """Cubic pieces along a curve whose angle moves linearly from a0 to a1
    and whose radius moves from r0 to r1, pulled in by bulge at the middle."""

    if pieces is None:
        pieces = max(1, int(math.ceil(abs(a1 - a0) / (math.pi / 2))))

    def point(t):
        r = r0 + (r1 - r0) * t - bulge * math.sin(math.pi * t)
        return _polar(r, a0 + (a1 - a0) * t)

    def tangent(t):
        r = r0 + (r1 - r0) * t - bulge * math.sin(math.pi * t)
        dr = (r1 - r0) - bulge * math.pi * math.cos(math.pi * t)
        a = a0 + (a1 - a0) * t
        da = a1 - a0
        return (dr * math.cos(a) - r * da * math.sin(a), dr * math.sin(a) + r * da * math.cos(a))

    out = []
    for k in range(pieces):
        t0, t1 = k / pieces, (k + 1) / pieces
        h = (t1 - t0) / 3.0
        p0, p1 = point(t0), point(t1)
        d0, d1 = tangent(t0), tangent(t1)
        out.append((p0, (p0[0] + d0[0] * h, p0[1] + d0[1] * h), (p1[0] - d1[0] * h, p1[1] - d1[1] * h), p1))
    return out


def _outer_angle(p, n):
    """Outer points run clockwise from the top."""
    return math.pi / 2 - 2 * math.pi * (p - 1) / n


INNER_ANGLE = math.pi / 2


def draw_arc_diagram(canvas, d):
    """Concentric boundary circles, the marked points and one curve per arc.
    Each inner twist adds a full clockwise turn to the bridging arcs."""

    n = d.annulus.n
    canvas.circle(0.0, 0.0, 2 * OUTER_RADIUS)
    canvas.circle(0.0, 0.0, 2 * INNER_RADIUS)

    x, y = _polar(INNER_RADIUS, INNER_ANGLE)
    canvas.circle(x, y, POINT_SIZE, fill='#000000')
    canvas.text(x + 1.5, y - 3.0, '0')
    for p in range(1, n + 1):
        x, y = _polar(OUTER_RADIUS, _outer_angle(p, n))
        canvas.circle(x, y, POINT_SIZE, fill='#000000')
        lx, ly = _polar(OUTER_RADIUS + 4.0, _outer_angle(p, n))
        canvas.text(lx - 1.0, ly, str(p))

    middle = (OUTER_RADIUS + INNER_RADIUS) / 2
    for arc in d.arcs:
        if arc.bridging:
            p = arc.outer_point
            base = (INNER_ANGLE - _outer_angle(p, n)) % (2 * math.pi)
            sweep = base + 2 * math.pi * (arc.twist_index - 1)
            canvas.curve(_spiral(INNER_RADIUS, OUTER_RADIUS, INNER_ANGLE, INNER_ANGLE - sweep))
        elif arc.start == 0:
            sweep = 2 * math.pi * (arc.lam + 1)
            canvas.curve(_spiral(INNER_RADIUS, INNER_RADIUS, INNER_ANGLE, INNER_ANGLE - sweep,
                                 bulge=INNER_RADIUS - middle))
        else:
            span = (arc.end - arc.start) % n or n
            a0 = _outer_angle(arc.start, n)
            sweep = 2 * math.pi * (span + arc.lam * n) / n
            canvas.curve(_spiral(OUTER_RADIUS, OUTER_RADIUS, a0, a0 - sweep, bulge=OUTER_RADIUS - middle))
    return canvas


def draw_strand_diagram(canvas, d):
    """Marked points on a horizontal line. A strand leaves a '+' point
    below the line and a '-' point above it."""

    points = [p for s in d.strands for p in s.ends()] or [0]
    lo, hi = min(points), max(points)
    if d.line.period is None:
        lo, hi = 0, len(d.line.orientation) - 1

    canvas.line([(lo * STEP, 0.0), (hi * STEP, 0.0)], color='#888888')
    for k in range(lo, hi + 1):
        canvas.circle(k * STEP, 0.0, POINT_SIZE, fill='#000000')
        canvas.text(k * STEP - 1.0, -5.0, str(k))
        canvas.text(k * STEP - 1.0, 5.0, d.line.sign(k))

    for s in d.strands:
        height = 3.0 + 2.5 * (s.j - s.i)
        y0 = -height if d.line.sign(s.i) == PLUS else height
        y1 = -height if d.line.sign(s.j) == PLUS else height
        canvas.curve([((s.i * STEP, 0.0), (s.i * STEP, y0), (s.j * STEP, y1), (s.j * STEP, 0.0))])
    return canvas


def _layout_tree(tree):
    """x by leaf order, y by depth."""

    positions = {}
    leaves = [0]

    def place(node, depth):
        if node.leaf:
            positions[node.label] = (leaves[0] * STEP * 0.6, -depth * STEP)
            leaves[0] += 1
            return positions[node.label]
        xs = [place(child, depth + 1)[0] for child in node.children()]
        positions[node.label] = (sum(xs) / len(xs), -depth * STEP)
        return positions[node.label]

    place(tree, 0)
    return positions


def draw_tree(canvas, tree):
    positions = _layout_tree(tree)

    def draw(node):
        x, y = positions[node.label]
        if node.leaf:
            canvas.circle(x, y, POINT_SIZE * 0.6)
            return
        for child in node.children():
            canvas.line([(x, y), positions[child.label]])
            draw(child)
        canvas.circle(x, y, POINT_SIZE * 2, fill='#ffffff')
        canvas.text(x + 2.0, y + 1.5, '{0} {1}'.format(node.label, node.strand))

    draw(tree)
    return canvas


def draw_path(canvas, path):
    pts = [(x * STEP, y * STEP) for x, y in path.points()]
    canvas.line(pts, width=0.5)
    for x, y in pts:
        canvas.circle(x, y, POINT_SIZE * 0.6, fill='#000000')
    return canvas


def draw_label(canvas, label):
    """Words under A on the left and under B on the right, circled words
    drawn with a ring."""

    row = [0]

    def draw(word, depth, x0):
        y = -row[0] * STEP * 0.6
        row[0] += 1
        x = x0 + depth * STEP
        canvas.text(x, y, word.word)
        if word.circled:
            canvas.circle(x + 1.5, y, 5.0)
            for child in word.children:
                draw(child, depth + 1, x0)

    canvas.text(0.0, STEP * 0.6, 'A')
    for word in label.under_a:
        draw(word, 0, 0.0)
    width = 4 * STEP
    row[0] = 0
    canvas.text(width, STEP * 0.6, 'B')
    for word in label.under_b:
        draw(word, 0, width)
    return canvas


_drawers = {
    'arcDiagram': draw_arc_diagram,
    'triangulation': draw_arc_diagram,
    'strandDiagram': draw_strand_diagram,
    'tree': draw_tree,
    'path': draw_path,
    'label': draw_label,
}

_canvases = {'svg': SVG, 'tikz': TikZ}


def render(doc, fmt='svg'):
    try:
        drawer = _drawers[doc.kind]
    except KeyError:
        raise DocumentError('cannot render a {0} document'.format(doc.kind))
    try:
        canvas = _canvases[fmt]()
    except KeyError:
        raise DocumentError('unknown figure format {0!r}'.format(fmt))
    return drawer(canvas, doc.payload).render()
