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
Strands on a signed marked line and arcs on the annulus.

A strand c(i,j) is an x-monotone curve between two marked points that
passes below every '+' point and above every '-' point strictly between
its ends. Crossing and the local clockwise order at a shared endpoint
follow from those rules alone, so no curve is ever drawn here.

For affine quivers the line is the universal cover of the annulus and
has period N = number of vertices; strands are compared against all of
their translates.
"""

import enum
import dataclasses

import networkx as nx

from excat.quiver import (QuiverError, BandError, PLUS, QuiverKind, OrientationVector, ComponentClass, IntervalModule,
                          WindingModule, Band, build_quiver, classify_component, winding_from_span)

__all__ = ('DiagramError', 'Rotation', 'MarkedLine', 'Strand', 'Arc', 'Annulus', 'TwistWord',
           'StrandDiagram', 'ArcDiagram', 'FundamentalCheck',
           'lift_module', 'module_of_strand', 'arc_of_module', 'module_of_arc', 'strand_of_arc',
           'strands_cross', 'self_crosses', 'local_order', 'relation_graph', 'diagram_is_fundamental',
           'inner_twist', 'outer_twist', 'crosses_dateline', 'is_small')


class DiagramError(QuiverError):
    pass


class Rotation(enum.Enum):
    CLOCKWISE = 'clockwise'
    COUNTERCLOCKWISE = 'counterclockwise'

    def reversed(self):
        return Rotation.COUNTERCLOCKWISE if self is Rotation.CLOCKWISE else Rotation.CLOCKWISE


@dataclasses.dataclass(frozen=True)
class MarkedLine:
    """Signs on the marked points; periodic for affine orientations."""

    orientation: OrientationVector

    @property
    def quiver(self):
        return build_quiver(self.orientation)

    @property
    def period(self):
        if self.orientation.kind is QuiverKind.TYPE_A:
            return None
        return len(self.orientation)

    @property
    def vertex_count(self):
        if self.period is None:
            return len(self.orientation) - 1
        return self.period

    def sign(self, k):
        if self.period is not None:
            return self.orientation[k % self.period]
        if not 0 <= k < len(self.orientation):
            raise DiagramError('point {0} is off the marked line'.format(k))
        return self.orientation[k]

    def translates(self, s, other):
        """Translates of other whose span overlaps or touches s."""
        if self.period is None:
            return [other]
        lo = (s.i - other.j) // self.period
        hi = -((other.i - s.j) // self.period)
        return [other.shifted(z * self.period) for z in range(lo, hi + 1)]


@dataclasses.dataclass(frozen=True, order=True)
class Strand:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise DiagramError('a strand needs two distinct endpoints')
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, 'i', i)
            object.__setattr__(self, 'j', j)

    @property
    def length(self):
        return self.j - self.i

    def shifted(self, by):
        return Strand(self.i + by, self.j + by)

    def ends(self):
        return (self.i, self.j)

    def other_end(self, p):
        return self.j if p == self.i else self.i

    def __str__(self):
        return 'c({0},{1})'.format(self.i, self.j)


def lift_module(m, line):
    """The fundamental lift of a string module."""

    q = line.quiver
    if isinstance(m, Band):
        raise BandError('band modules have no fundamental lift')
    if isinstance(m, IntervalModule):
        if q.affine:
            raise DiagramError('interval modules lift over type A lines only')
        return Strand(m.x, m.y)

    count = q.vertex_count
    m = m.normalized(count)
    k = m.length(count)
    cls = classify_component(q, m)
    if cls in (ComponentClass.PREPROJECTIVE, ComponentClass.LEFT_REGULAR):
        start = m.i % count
        return Strand(start, start + k)
    return Strand(m.j - k, m.j)


def module_of_strand(s, line):
    if line.period is None:
        return IntervalModule(s.i, s.j)
    return winding_from_span(s.i, s.j, line.period)


def in_image(s, line):
    if line.period is None:
        return 0 <= s.i and s.j < len(line.orientation)
    return lift_module(module_of_strand(s, line), line) == s


def _pair_crosses(s, t, line):
    a, b = s.ends()
    c, d = t.ends()
    if {a, b} & {c, d} or b <= c or d <= a:
        return False
    if a < c < b < d:
        return line.sign(c) == line.sign(b)
    if c < a < d < b:
        return line.sign(a) == line.sign(d)
    if a < c and d < b:
        return line.sign(c) != line.sign(d)
    return line.sign(a) != line.sign(b)


def strands_cross(s1, s2, line):
    """True if some translate of s2 is forced to cross s1."""
    return any(_pair_crosses(s1, t, line) for t in line.translates(s1, s2))


def self_crosses(s, line):
    return any(t != s and _pair_crosses(s, t, line) for t in line.translates(s, s))


def _heights(s, t, p, line):
    """True if s lies below t near their shared endpoint p. Both leave p
    on the same side."""

    es, et = s.other_end(p), t.other_end(p)
    shorter_end = es if abs(es - p) < abs(et - p) else et
    longer_is_lower = line.sign(shorter_end) == PLUS
    s_is_longer = shorter_end == et
    return s_is_longer == longer_is_lower


def local_order(s1, s2, p, line):
    """Whether s2 is clockwise or counterclockwise from s1 around p.

    Around a '+' point the strands hang below it; reading clockwise they
    meet the rightward strands from highest to lowest and then the
    leftward ones from lowest to highest. Around a '-' point the leftward
    strands come first. A strand earlier in that reading is clockwise
    from the later ones."""

    if p not in s1.ends() or p not in s2.ends():
        raise DiagramError('{0} and {1} do not both end at {2}'.format(s1, s2, p))
    if s1 == s2:
        raise DiagramError('a strand has no local order with itself')
    if _pair_crosses(s1, s2, line):
        raise DiagramError('{0} and {1} cross'.format(s1, s2))

    right1 = s1.other_end(p) > p
    right2 = s2.other_end(p) > p
    plus = line.sign(p) == PLUS

    if right1 != right2:
        s2_first = right2 if plus else not right2
    else:
        s2_lower = _heights(s2, s1, p, line)
        s2_first = not s2_lower if right2 else s2_lower

    return Rotation.CLOCKWISE if s2_first else Rotation.COUNTERCLOCKWISE


def relation_graph(strands, line):
    """Locally-clockwise relation on strand classes: an edge s -> t says
    some translate of t is clockwise from s at a shared endpoint."""

    strands = list(strands)
    g = nx.DiGraph()
    g.add_nodes_from(strands)

    for x, s in enumerate(strands):
        for t in strands[x:]:
            for u in line.translates(s, t):
                if u == s:
                    continue
                shared = set(s.ends()) & set(u.ends())
                if len(shared) != 1 or _pair_crosses(s, u, line):
                    continue
                p = shared.pop()
                if local_order(s, u, p, line) is Rotation.CLOCKWISE:
                    g.add_edge(s, t)
                else:
                    g.add_edge(t, s)
    return g


@dataclasses.dataclass(frozen=True)
class StrandDiagram:
    line: MarkedLine
    strands: tuple

    def __post_init__(self):
        object.__setattr__(self, 'strands', tuple(sorted(self.strands)))

    def modules(self):
        return [module_of_strand(s, self.line) for s in self.strands]

    def __len__(self):
        return len(self.strands)


@dataclasses.dataclass(frozen=True)
class FundamentalCheck:
    ok: bool
    reason: str = None
    detail: str = None

    def __bool__(self):
        return self.ok


def diagram_is_fundamental(d):
    line = d.line
    strands = list(d.strands)

    if len(strands) != line.vertex_count:
        return FundamentalCheck(False, 'size', '{0} strands for {1} vertices'.format(len(strands), line.vertex_count))
    if len(set(strands)) != len(strands):
        return FundamentalCheck(False, 'duplicate')
    for s in strands:
        if not in_image(s, line):
            return FundamentalCheck(False, 'not-lift', str(s))
    for x, s in enumerate(strands):
        for t in strands[x + 1:]:
            if strands_cross(s, t, line):
                return FundamentalCheck(False, 'crossing', '{0} {1}'.format(s, t))
    for s in strands:
        if self_crosses(s, line):
            return FundamentalCheck(False, 'self-crossing', str(s))

    g = relation_graph(strands, line)
    loops = list(nx.nodes_with_selfloops(g))
    if loops:
        return FundamentalCheck(False, 'loop', str(loops[0]))
    if not nx.is_directed_acyclic_graph(g):
        cycle = nx.find_cycle(g)
        return FundamentalCheck(False, 'cycle', ' '.join(str(u) for u, v in cycle))
    return FundamentalCheck(True)


@dataclasses.dataclass(frozen=True, order=True)
class Arc:
    """a(start,end)[lam] on the annulus; point 0 is the inner marked point.

    Bridging arcs are kept in one canonical form: a(0,i)[lam] for lam <= 0
    and a(i,0)[lam] for lam >= 0, with a(0,i)[lam] = a(i,0)[lam-1] when
    lam >= 1."""

    start: int
    end: int
    lam: int = 0

    def __post_init__(self):
        if self.start < 0 or self.end < 0:
            raise DiagramError('marked points are numbered from 0')
        if self.bridging:
            index = self.twist_index
            if index <= 0:
                start, end, lam = 0, self.outer_point, index
            else:
                start, end, lam = self.outer_point, 0, index - 1
            object.__setattr__(self, 'start', start)
            object.__setattr__(self, 'end', end)
            object.__setattr__(self, 'lam', lam)
        elif self.lam < 0:
            raise DiagramError('exterior arcs wind clockwise only')

    @classmethod
    def from_index(cls, point, index):
        """The bridging arc at an outer point with a given twist index."""
        return cls(0, point, index) if index <= 0 else cls(point, 0, index - 1)

    @property
    def bridging(self):
        return (self.start == 0) != (self.end == 0)

    @property
    def outer_point(self):
        return self.end if self.start == 0 else self.start

    @property
    def twist_index(self):
        """Bridging arcs in twist order: a(0,i)[lam] -> lam, a(i,0)[lam] -> lam+1."""
        if not self.bridging:
            raise DiagramError('{0} is not a bridging arc'.format(self))
        return self.lam if self.start == 0 else self.lam + 1

    def side(self, point):
        return 'inner' if point == 0 else 'outer'

    def __str__(self):
        return 'a({0},{1})[{2}]'.format(self.start, self.end, self.lam)


@dataclasses.dataclass(frozen=True)
class Annulus:
    """Straight affine A_n seen as an annulus with n outer points."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DiagramError('the annulus needs at least one outer marked point')

    @property
    def vertex_count(self):
        return self.n + 1

    @property
    def orientation(self):
        return OrientationVector.straight_atilde(self.n)

    @property
    def line(self):
        return MarkedLine(self.orientation)

    @property
    def quiver(self):
        return build_quiver(self.orientation)


def arc_of_module(m, annulus):
    count = annulus.vertex_count
    m = m.normalized(count)
    cls = classify_component(annulus.quiver, m)
    i, j = m.i % count, m.j % count
    if cls is ComponentClass.PREINJECTIVE:
        return Arc(0, j, -m.l)
    if cls is ComponentClass.PREPROJECTIVE:
        return Arc(i, 0, m.l)
    if cls is ComponentClass.LEFT_REGULAR:
        return Arc(i, j, m.l)
    return Arc(0, 0, m.l)


def module_of_arc(arc, annulus):
    count = annulus.vertex_count
    if arc.bridging:
        index = arc.twist_index
        if index <= 0:
            return WindingModule(count, arc.outer_point, -index)
        return WindingModule(arc.outer_point, count, index - 1)
    if arc.start == 0:
        return WindingModule(count, count, arc.lam)
    return WindingModule(arc.start, arc.end, arc.lam)


def strand_of_arc(arc, annulus):
    return lift_module(module_of_arc(arc, annulus), annulus.line)


@dataclasses.dataclass(frozen=True)
class ArcDiagram:
    annulus: Annulus
    arcs: tuple

    def __post_init__(self):
        object.__setattr__(self, 'arcs', tuple(sorted(set(self.arcs))))

    def strand_diagram(self):
        return StrandDiagram(self.annulus.line, tuple(strand_of_arc(a, self.annulus) for a in self.arcs))

    def modules(self):
        return [module_of_arc(a, self.annulus) for a in self.arcs]

    def bridging(self):
        return [a for a in self.arcs if a.bridging]

    def __len__(self):
        return len(self.arcs)

    def __str__(self):
        return '{' + ', '.join(str(a) for a in self.arcs) + '}'


@dataclasses.dataclass(frozen=True)
class TwistWord:
    """inner: signed count of clockwise 2pi inner twists;
    outer: count of clockwise 2pi/n outer twists, reduced mod n."""

    inner: int = 0
    outer: int = 0

    def compose(self, other, n):
        return TwistWord(self.inner + other.inner, (self.outer + other.outer) % n)

    @property
    def trivial(self):
        return self.inner == 0 and self.outer == 0


def inner_twist(d, k):
    arcs = []
    for arc in d.arcs:
        if arc.bridging:
            arcs.append(Arc.from_index(arc.outer_point, arc.twist_index + k))
        else:
            arcs.append(arc)
    return ArcDiagram(d.annulus, tuple(arcs))


def outer_twist(d):
    """Rotate the outer boundary one step clockwise. Bridging arcs leaving
    point n come back at point 1 one turn earlier."""

    n = d.annulus.n
    arcs = []
    for arc in d.arcs:
        if arc.bridging:
            p, index = arc.outer_point, arc.twist_index
            if p < n:
                arcs.append(Arc.from_index(p + 1, index))
            else:
                arcs.append(Arc.from_index(1, index - 1))
        elif arc.start == 0:
            arcs.append(arc)
        else:
            arcs.append(Arc(arc.start % n + 1, arc.end % n + 1, arc.lam))
    return ArcDiagram(d.annulus, tuple(arcs))


def crosses_dateline(arc, annulus):
    if arc.bridging:
        return arc.lam != 0
    s = strand_of_arc(arc, annulus)
    return s.i < 0 or s.j > annulus.vertex_count


def is_small(d):
    return all(arc.lam == 0 for arc in d.arcs)
