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
Quivers of type A_n and affine A_n given by orientation vectors, their
string modules and the matrix representations those strings define.

Vertices are numbered from 1. For A_n the orientation vector has n+1
entries (e_0..e_n) and the arrow between v and v+1 points v -> v+1 iff
e_v is '+'. For affine A_n there are N = n+1 vertices and N entries; the
arrow between N and 1 is governed by e_0 with the same rule read cyclically.
"""

import enum
import dataclasses

import sympy

__all__ = ('PLUS', 'MINUS', 'QuiverKind', 'ComponentClass',
           'QuiverError', 'OrientationError', 'WalkError', 'BandError',
           'OrientationVector', 'Arrow', 'Quiver', 'Step', 'Walk',
           'IntervalModule', 'WindingModule', 'StringName', 'Band', 'Representation',
           'build_quiver', 'walk_of', 'dimension_vector', 'realize', 'euler_form',
           'classify_component', 'convert_notation', 'winding_from_span', 'winding_from_length', 'dual_interval',
           'all_intervals')

PLUS = '+'
MINUS = '-'

_sign_aliases = {'+': PLUS, '-': MINUS, '−': MINUS, 'p': PLUS, 'm': MINUS}


class QuiverError(ValueError):
    """Base class for errors raised by the quiver layer."""


class OrientationError(QuiverError):
    pass


class WalkError(QuiverError):
    pass


class BandError(QuiverError):
    pass


class QuiverKind(enum.Enum):
    TYPE_A = 'A'
    TYPE_ATILDE = 'ATilde'


class ComponentClass(enum.Enum):
    PREPROJECTIVE = 'Preprojective'
    PREINJECTIVE = 'Preinjective'
    LEFT_REGULAR = 'LeftRegular'
    RIGHT_REGULAR = 'RightRegular'
    HOMOGENEOUS = 'Homogeneous'

    @property
    def regular(self):
        return self in (ComponentClass.LEFT_REGULAR, ComponentClass.RIGHT_REGULAR, ComponentClass.HOMOGENEOUS)


@dataclasses.dataclass(frozen=True)
class OrientationVector:
    kind: QuiverKind
    entries: tuple

    def __post_init__(self):
        entries = []
        for e in self.entries:
            try:
                entries.append(_sign_aliases[e])
            except (KeyError, TypeError):
                raise OrientationError("orientation entries must be '+' or '-', not {0!r}".format(e))
        object.__setattr__(self, 'entries', tuple(entries))

        if len(entries) < 2:
            raise OrientationError('an orientation vector needs at least two entries')
        if self.kind is QuiverKind.TYPE_ATILDE and len(set(entries)) == 1:
            raise OrientationError('all-equal signs give an oriented cycle, which is not tame')

    @classmethod
    def straight_a(cls, n):
        """Straight A_n: 1 -> 2 -> ... -> n."""
        return cls(QuiverKind.TYPE_A, (PLUS,) * (n + 1))

    @classmethod
    def straight_atilde(cls, n):
        """Straight affine A_n on n+1 vertices: e_0 = '-', everything else '+'."""
        return cls(QuiverKind.TYPE_ATILDE, (MINUS,) + (PLUS,) * n)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    @property
    def straight(self):
        if self.kind is QuiverKind.TYPE_A:
            return all(e == PLUS for e in self.entries[1:-1])
        return self.entries[0] == MINUS and all(e == PLUS for e in self.entries[1:])

    def __str__(self):
        return ''.join(self.entries)


@dataclasses.dataclass(frozen=True)
class Arrow:
    label: int
    source: int
    target: int

    def __str__(self):
        return 'a{0}:{1}->{2}'.format(self.label, self.source, self.target)


@dataclasses.dataclass(frozen=True)
class Quiver:
    orientation: OrientationVector
    vertex_count: int
    arrows: tuple

    @property
    def kind(self):
        return self.orientation.kind

    @property
    def affine(self):
        return self.kind is QuiverKind.TYPE_ATILDE

    @property
    def vertices(self):
        return range(1, self.vertex_count + 1)

    def arrow_between(self, v):
        """The arrow joining v and v+1 (cyclically for affine quivers)."""
        if self.affine:
            v = (v - 1) % self.vertex_count + 1
        elif not 1 <= v < self.vertex_count:
            raise WalkError('no arrow between {0} and {1} in {2}'.format(v, v + 1, self))
        return self.arrows[v - 1]

    def opposite(self):
        flipped = tuple(MINUS if e == PLUS else PLUS for e in self.orientation.entries)
        return build_quiver(OrientationVector(self.kind, flipped))

    def __str__(self):
        name = 'A' if self.kind is QuiverKind.TYPE_A else 'ATilde'
        return '{0}[{1}]'.format(name, self.orientation)


def build_quiver(eps):
    """Build the quiver of an orientation vector.

    Arrows are stored in order of their lower endpoint, so arrows[v-1] joins
    v and v+1; for affine quivers the last arrow joins N and 1 and carries
    the label N (also written alpha_0)."""

    if eps.kind is QuiverKind.TYPE_A:
        count = len(eps) - 1
        joins = range(1, count)
    else:
        count = len(eps)
        joins = range(1, count + 1)

    arrows = []
    for v in joins:
        w = v % count + 1
        if eps[v % len(eps)] == PLUS:
            arrows.append(Arrow(v, v, w))
        else:
            arrows.append(Arrow(v, w, v))

    return Quiver(orientation=eps, vertex_count=count, arrows=tuple(arrows))


@dataclasses.dataclass(frozen=True)
class Step:
    arrow: Arrow
    inverse: bool = False

    @property
    def start(self):
        return self.arrow.target if self.inverse else self.arrow.source

    @property
    def end(self):
        return self.arrow.source if self.inverse else self.arrow.target

    def __str__(self):
        return 'a{0}{1}'.format(self.arrow.label, '^-1' if self.inverse else '')


@dataclasses.dataclass(frozen=True)
class Walk:
    start: int
    steps: tuple = ()

    def __post_init__(self):
        here = self.start
        previous = None
        for step in self.steps:
            if step.start != here:
                raise WalkError('step {0} does not start at vertex {1}'.format(step, here))
            if previous is not None and previous.arrow == step.arrow and previous.inverse != step.inverse:
                raise WalkError('walk backtracks along {0}'.format(step.arrow))
            here = step.end
            previous = step

    def vertices(self):
        out = [self.start]
        for step in self.steps:
            out.append(step.end)
        return out

    @property
    def end(self):
        return self.steps[-1].end if self.steps else self.start

    def __len__(self):
        return len(self.steps) + 1

    def __str__(self):
        if not self.steps:
            return 'e{0}'.format(self.start)
        return ''.join(str(s) for s in self.steps)


@dataclasses.dataclass(frozen=True, order=True)
class IntervalModule:
    """M_{x,y} over A_n: support x+1..y, top at x+1, socle at y."""

    x: int
    y: int

    def __post_init__(self):
        if not 0 <= self.x < self.y:
            raise QuiverError('interval module needs 0 <= x < y, got ({0},{1})'.format(self.x, self.y))

    @property
    def length(self):
        return self.y - self.x

    def __str__(self):
        return 'M{0},{1}'.format(self.x, self.y)


@dataclasses.dataclass(frozen=True, order=True)
class WindingModule:
    """(i,j;l) over affine A with N vertices: the walk starting at i+1 that
    winds l full times before ending at j. i and j are kept in 1..N."""

    i: int
    j: int
    l: int = 0

    def __post_init__(self):
        if self.l < 0:
            raise QuiverError('winding must be nonnegative, got {0}'.format(self.l))

    def normalized(self, count):
        return WindingModule((self.i - 1) % count + 1, (self.j - 1) % count + 1, self.l)

    def length(self, count):
        return self.l * count + (self.j - self.i - 1) % count + 1

    def __str__(self):
        return '({0},{1};{2})'.format(self.i, self.j, self.l)


@dataclasses.dataclass(frozen=True, order=True)
class StringName:
    """The display name ij_k: k vertices starting at i+1 and ending at j."""

    i: int
    j: int
    k: int

    def __str__(self):
        return '{0}{1}_{2}'.format(self.i, self.j, self.k)


@dataclasses.dataclass(frozen=True)
class Band:
    """The band walking once (or power times) around the affine cycle."""

    power: int = 1

    def __str__(self):
        return 'band^{0}'.format(self.power)


def winding_from_span(start, stop, count):
    """The winding module whose fundamental lift runs from marked point start
    to marked point stop on a cover of period count."""

    if stop <= start:
        raise QuiverError('empty span {0}..{1}'.format(start, stop))
    return winding_from_length(start, stop - start, count)


def winding_from_length(i, k, count):
    i = (i - 1) % count + 1
    j = (i + k - 1) % count + 1
    return WindingModule(i, j, (k - 1) // count)


def _string_span(q, m):
    """(start vertex, vertex count) of a string module over q."""

    if isinstance(m, Band):
        raise BandError('band modules have no string walk')
    if isinstance(m, IntervalModule):
        if q.affine:
            raise QuiverError('interval modules live over type A quivers')
        if m.y > q.vertex_count:
            raise QuiverError('{0} does not fit in {1}'.format(m, q))
        return m.x + 1, m.length
    if isinstance(m, WindingModule):
        if not q.affine:
            raise QuiverError('winding modules live over affine quivers')
        m = m.normalized(q.vertex_count)
        return m.i % q.vertex_count + 1, m.length(q.vertex_count)
    if isinstance(m, StringName):
        return _string_span(q, convert_notation(m, q))
    raise QuiverError('not a string module: {0!r}'.format(m))


def walk_of(q, m):
    """The counterclockwise walk naming m."""

    if isinstance(m, Band):
        steps = []
        for _ in range(m.power):
            for v in q.vertices:
                arrow = q.arrow_between(v)
                steps.append(Step(arrow, inverse=(arrow.source != v)))
        return Walk(1, tuple(steps))

    start, count = _string_span(q, m)
    steps = []
    v = start
    for _ in range(count - 1):
        arrow = q.arrow_between(v)
        steps.append(Step(arrow, inverse=(arrow.source != v)))
        v = steps[-1].end
    return Walk(start, tuple(steps))


def dimension_vector(q, m):
    dims = [0] * q.vertex_count
    for v in walk_of(q, m).vertices():
        dims[v - 1] += 1
    return tuple(dims)


@dataclasses.dataclass(frozen=True)
class Representation:
    dims: tuple
    matrices: tuple

    def __post_init__(self):
        for arrow, matrix in self.matrices:
            if matrix.shape != (self.dims[arrow.target - 1], self.dims[arrow.source - 1]):
                raise QuiverError('matrix for {0} has shape {1}'.format(arrow, matrix.shape))

    def matrix(self, arrow):
        for a, matrix in self.matrices:
            if a == arrow:
                return matrix
        raise KeyError(arrow)

    @property
    def total_dimension(self):
        return sum(self.dims)


def realize(q, m):
    """The 0/1 representation of a string module.

    Basis vectors at each vertex are ordered by reading the walk from its
    end, which puts the head of every arrow at the bottom."""

    if isinstance(m, Band):
        raise BandError('band modules form one-parameter families and are not realized')

    walk = walk_of(q, m)
    visits = walk.vertices()
    dims = [0] * q.vertex_count
    for v in visits:
        dims[v - 1] += 1

    # position of each visit within its vertex, counted from the end of the walk
    index = [0] * len(visits)
    seen = [0] * q.vertex_count
    for pos in range(len(visits) - 1, -1, -1):
        v = visits[pos]
        index[pos] = seen[v - 1]
        seen[v - 1] += 1

    entries = {arrow: sympy.zeros(dims[arrow.target - 1], dims[arrow.source - 1]) for arrow in q.arrows}
    for pos, step in enumerate(walk.steps):
        if step.inverse:
            src, dst = pos + 1, pos
        else:
            src, dst = pos, pos + 1
        entries[step.arrow][index[dst], index[src]] = 1

    return Representation(dims=tuple(dims),
                          matrices=tuple((arrow, sympy.ImmutableMatrix(entries[arrow])) for arrow in q.arrows))


def euler_form(q, x, y):
    """<x,y> = sum x_v y_v - sum over arrows x_s(a) y_t(a)."""

    if len(x) != q.vertex_count or len(y) != q.vertex_count:
        raise QuiverError('dimension vectors must have {0} entries'.format(q.vertex_count))
    value = sum(a * b for a, b in zip(x, y))
    for arrow in q.arrows:
        value -= x[arrow.source - 1] * y[arrow.target - 1]
    return value


def classify_component(q, m):
    """Component of the AR quiver containing a string module over affine A,
    read off the arrows that would extend the walk at either end."""

    if not q.affine:
        raise QuiverError('component classes are defined for affine quivers only')
    if isinstance(m, Band):
        return ComponentClass.HOMOGENEOUS

    walk = walk_of(q, m)
    before = q.arrow_between(walk.start - 1)
    after = q.arrow_between(walk.end)
    into_start = before.target == walk.start
    out_of_end = after.source == walk.end

    if into_start and not out_of_end:
        return ComponentClass.PREPROJECTIVE
    if not into_start and out_of_end:
        return ComponentClass.PREINJECTIVE
    if into_start:
        return ComponentClass.LEFT_REGULAR
    return ComponentClass.RIGHT_REGULAR


def convert_notation(m, q):
    """Swap between the ij_k display name and the (i,j;l) winding name."""

    count = q.vertex_count
    if isinstance(m, WindingModule):
        m = m.normalized(count)
        return StringName(m.i, m.j, m.length(count))
    if isinstance(m, StringName):
        if m.k < 1:
            raise WalkError('a string needs at least one vertex')
        winding = winding_from_length(m.i, m.k, count)
        if winding.j != (m.j - 1) % count + 1:
            raise WalkError('{0} ends at vertex {1}, not {2}'.format(m, winding.j, m.j))
        return winding
    raise QuiverError('cannot convert {0!r}'.format(m))


def dual_interval(m, n):
    """D(M_{x,y}) over the opposite of straight A_n, relabelled v -> n+1-v."""
    return IntervalModule(n - m.y, n - m.x)


def all_intervals(n):
    return [IntervalModule(x, y) for x in range(n) for y in range(x + 1, n + 1)]
