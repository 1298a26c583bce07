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
Triangulations of the annulus for straight affine A_n and the clusters
they define.

Arcs are drawn in the universal cover, a strip whose upper edge carries
the outer points and whose lower edge carries the lifts of the inner
point. Positions are doubled so that everything stays integral: the lift
of outer point p on sheet k sits at 2(p + kn) - 1 on the upper edge and
the lift of the inner point on sheet k sits at 2kn on the lower edge.

The vertical strands X_v (v = 1..n+1) on sheet m join upper position
2(v - 1 + (m - 1)n) - 1 to lower position 2mn. The bridging arc a(i,0)[0]
is the vertical strand X_{i+1} and a(n,0)[1] is X_1.

Exterior arcs are read off by crossing their lift with the vertical
strands. Bridging arcs use the crossing counts in closed form, so their
summands follow from the twist index alone.
"""

import itertools
import dataclasses
import collections

import networkx as nx

from excat.quiver import PLUS, MINUS, winding_from_length
from excat.strands import (DiagramError, Annulus, Arc, ArcDiagram, arc_of_module, inner_twist,
                           outer_twist, is_small)
from excat.profile import trackcpu

__all__ = ('Segment', 'ShiftedProjective', 'Cluster', 'polygon_triangulations', 'glue_polygon',
           'small_triangulations', 'arcs_cross', 'arc_self_crosses', 'is_boundary_arc', 'is_triangulation',
           'has_heart', 'unique_small_member', 'outer_classes', 'vertical_strands', 'phi', 'cluster_of',
           'projective_module', 'cluster_modules', 'conventions_coincide')

UPPER = 'upper'
LOWER = 'lower'
BRIDGE = 'bridge'


@dataclasses.dataclass(frozen=True)
class Segment:
    """One lift of an arc. Bridging segments run from upper position a to
    lower position b; boundary-side segments run along one edge from a to b."""

    kind: str
    a: int
    b: int

    def shifted(self, by):
        return Segment(self.kind, self.a + by, self.b + by)

    def extent(self):
        return min(self.a, self.b), max(self.a, self.b)


@dataclasses.dataclass(frozen=True, order=True)
class ShiftedProjective:
    vertex: int

    def __str__(self):
        return 'P{0}[1]'.format(self.vertex)


def _summand_key(x):
    if isinstance(x, ShiftedProjective):
        return (1, x.vertex, 0, 0)
    return (0, x.i, x.j, x.l)


@dataclasses.dataclass(frozen=True)
class Cluster:
    n: int
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, 'summands', tuple(sorted(self.summands, key=_summand_key)))

    def shifted(self):
        return [x for x in self.summands if isinstance(x, ShiftedProjective)]

    def modules(self):
        return [x for x in self.summands if not isinstance(x, ShiftedProjective)]

    def __str__(self):
        return ' + '.join(str(x) for x in self.summands)


def polygon_triangulations(m):
    """Every triangulation of a convex m-gon with vertices 0..m-1, as a
    frozenset of diagonals (i, j) with i < j."""

    if m < 3:
        raise ValueError('a polygon needs at least three vertices')

    def triangulate(lo, hi):
        # polygon lo..hi with base edge (lo, hi)
        if hi - lo < 2:
            yield frozenset()
            return
        for apex in range(lo + 1, hi):
            here = set()
            if apex - lo > 1:
                here.add((lo, apex))
            if hi - apex > 1:
                here.add((apex, hi))
            for left in triangulate(lo, apex):
                for right in triangulate(apex, hi):
                    yield frozenset(here) | left | right

    yield from triangulate(0, m - 1)


def glue_polygon(diagonals, n):
    """Place an (n+2)-gon triangulation in the annulus.

    Polygon vertex 0 is the inner point and vertices 1..n+1 are the outer
    points 1..n followed by point 1 again one turn later. The polygon edges
    from vertex 0 become a(1,0)[0] and a(0,1)[0]."""

    arcs = [Arc(1, 0, 0), Arc(0, 1, 0)]
    for a, b in sorted(diagonals):
        if a == 0:
            arcs.append(Arc(b, 0, 0))
        else:
            arcs.append(Arc(a, (b - 1) % n + 1, 0))
    return ArcDiagram(Annulus(n), tuple(arcs))


def unique_small_member(d):
    """The one small diagram among the inner twists of d."""

    indices = [arc.twist_index for arc in d.bridging()]
    if not indices:
        if is_small(d):
            return d
        raise DiagramError('{0} has no small member'.format(d))
    members = {inner_twist(d, t) for t in (-min(indices), 1 - max(indices))}
    members = [e for e in members if is_small(e)]
    if len(members) != 1:
        raise DiagramError('{0} has {1} small members'.format(d, len(members)))
    return members[0]


@trackcpu
def small_triangulations(n):
    """All n * C_n small triangulations of the annulus with n outer points,
    in gluing order followed by rotation order."""

    seen = set()
    out = []
    for diagonals in polygon_triangulations(n + 2):
        d = glue_polygon(diagonals, n)
        for shift in range(n):
            t = unique_small_member(d)
            if t not in seen:
                seen.add(t)
                out.append(t)
            d = outer_twist(d)
    return out


def segment_of(arc, n):
    """The lift of an arc that starts on sheet 0."""

    if arc.bridging:
        index = arc.twist_index
        return Segment(BRIDGE, 2 * arc.outer_point - 1, 2 * index * n)
    if arc.start == 0:
        return Segment(LOWER, 0, 2 * (arc.lam + 1) * n)
    span = (arc.end - arc.start) % n or n
    start = 2 * arc.start - 1
    return Segment(UPPER, start, start + 2 * (span + arc.lam * n))


def _segments_cross(s, t):
    if s.kind == BRIDGE and t.kind == BRIDGE:
        return (s.a - t.a) * (s.b - t.b) < 0
    if s.kind == BRIDGE:
        s, t = t, s
    if t.kind == BRIDGE:
        edge_point = t.a if s.kind == UPPER else t.b
        return s.a < edge_point < s.b
    if s.kind != t.kind:
        return False
    return s.a < t.a < s.b < t.b or t.a < s.a < t.b < s.b


def _translates(s, t, n):
    """Translates of t whose extent can meet the extent of s."""

    period = 2 * n
    lo, hi = s.extent()
    tlo, thi = t.extent()
    first = (lo - thi) // period - 1
    last = (hi - tlo) // period + 1
    for z in range(first, last + 1):
        yield t.shifted(z * period)


def arcs_cross(x, y, n):
    s, t = segment_of(x, n), segment_of(y, n)
    return any(_segments_cross(s, u) for u in _translates(s, t, n))


def arc_self_crosses(arc, n):
    s = segment_of(arc, n)
    return any(u != s and _segments_cross(s, u) for u in _translates(s, s, n))


def is_boundary_arc(arc, n):
    """Arcs isotopic to a boundary segment: a(i,i+1)[0] on the outer circle
    and the inner loop a(0,0)[0]."""

    if arc.bridging:
        return False
    if arc.start == 0:
        return arc.lam == 0
    return arc.lam == 0 and ((arc.end - arc.start) % n or n) == 1


def is_triangulation(d):
    n = d.annulus.n
    if len(d.arcs) != n + 1:
        return False
    for arc in d.arcs:
        if is_boundary_arc(arc, n) or arc_self_crosses(arc, n):
            return False
    return not any(arcs_cross(x, y, n) for x, y in itertools.combinations(d.arcs, 2))


def has_heart(d):
    """True if some outer point carries both a(0,i)[0] and a(i,0)[0]."""

    arcs = set(d.arcs)
    return any(Arc(0, i, 0) in arcs and Arc(i, 0, 0) in arcs for i in range(1, d.annulus.n + 1))


def outer_classes(triangulations):
    """Partition small triangulations into orbits of the outer twist."""

    triangulations = list(triangulations)
    g = nx.Graph()
    g.add_nodes_from(triangulations)
    for t in triangulations:
        u = unique_small_member(outer_twist(t))
        if u not in g:
            raise DiagramError('outer twist of {0} leaves the given set'.format(t))
        g.add_edge(t, u)
    order = {t: x for x, t in enumerate(triangulations)}
    classes = [sorted(c, key=order.get) for c in nx.connected_components(g)]
    return sorted(classes, key=lambda c: order[c[0]])


def vertical_strands(n, sheets):
    """(sheet, v, segment) for the vertical strands on the given sheets."""

    for m in sheets:
        for v in range(1, n + 2):
            yield m, v, Segment(BRIDGE, 2 * (v - 1 + (m - 1) * n) - 1, 2 * m * n)


def _bridging_summand(arc, n):
    """a(i,0)[j] crosses X_{i+1..n+1} j+1 times and X_1..X_i j times;
    a(0,i)[-j] crosses X_1..X_i j+1 times and X_{i+1..n+1} j times. A run
    that is a projective P_v belongs to the vertical strand X_v."""

    count = n + 1
    index = arc.twist_index
    if index >= 1:
        m = winding_from_length(arc.outer_point, count - arc.outer_point + (index - 1) * count, count)
    else:
        m = winding_from_length(0, arc.outer_point - index * count, count)

    q = Annulus(n).quiver
    for v in range(1, count + 1):
        if projective_module(q, v) == m:
            return ShiftedProjective(v)
    return m


def phi(arc, n):
    """The cluster summand of an arc: a shifted projective for a vertical
    strand, otherwise the string module over the run of vertical strands
    the arc crosses."""

    if arc_self_crosses(arc, n):
        raise DiagramError('{0} crosses itself'.format(arc))
    if is_boundary_arc(arc, n):
        raise DiagramError('{0} is a boundary arc'.format(arc))
    if arc.bridging:
        return _bridging_summand(arc, n)

    s = segment_of(arc, n)
    lo, hi = s.extent()
    sheets = range(lo // (2 * n) - 1, hi // (2 * n) + 3)

    crossed = sorted((m, v) for m, v, x in vertical_strands(n, sheets) if _segments_cross(s, x))
    if not crossed:
        raise DiagramError('{0} crosses no vertical strand'.format(arc))
    positions = [m * (n + 1) + v for m, v in crossed]
    if positions != list(range(positions[0], positions[0] + len(positions))):
        raise DiagramError('{0} crosses the vertical strands out of order'.format(arc))
    first = crossed[0][1]
    return winding_from_length(first - 1, len(crossed), n + 1)


def cluster_of(t):
    if not is_triangulation(t):
        raise DiagramError('{0} is not a triangulation'.format(t))
    n = t.annulus.n
    return Cluster(n, tuple(phi(arc, n) for arc in t.arcs))


def projective_module(q, v):
    """P_v: the maximal paths leaving v in both directions."""

    count = q.vertex_count
    eps = q.orientation

    right = 0
    u = v
    while right < count and eps[u % count] == PLUS:
        right += 1
        u += 1
    left = 0
    u = v
    while left < count and eps[(u - 1) % count] == MINUS:
        left += 1
        u -= 1
    return winding_from_length(v - left - 1, left + right + 1, count)


def cluster_modules(cluster):
    """The modules of a cluster with each P_v[1] replaced by P_v."""

    q = Annulus(cluster.n).quiver
    return [projective_module(q, x.vertex) if isinstance(x, ShiftedProjective) else x for x in cluster.summands]


def conventions_coincide(t):
    """Whether reading the cluster of t through the exceptional convention
    gives back the arcs of t."""

    annulus = t.annulus
    arcs = collections.Counter(arc_of_module(m, annulus) for m in cluster_modules(cluster_of(t)))
    return arcs == collections.Counter(t.arcs)
