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
Families of complete exceptional collections for straight affine A with
n outer marked points (n+1 vertices).

Each outer equivalence class has one representative: a small arc diagram
that never crosses the dateline and has a single preprojective arc. Its
strands live on the points 0..n+1, with a longest preinjective strand
A = c(0,i) and the preprojective strand B = c(j,n+1); everything else
splits into four type A sets.

Throughout, n is the number of outer marked points.
"""

import dataclasses

from excat import typea
from excat.profile import trackcpu
from excat.quiver import QuiverError, MINUS, PLUS, QuiverKind, OrientationVector
from excat.strands import (DiagramError, Annulus, ArcDiagram, MarkedLine, Strand, StrandDiagram,
                           TwistWord, arc_of_module, module_of_strand, diagram_is_fundamental,
                           inner_twist, outer_twist, crosses_dateline, is_small)

__all__ = ('LabelError', 'FamilyRepresentative', 'OrbitMember', 'LabelWord', 'Label',
           'enumerate_representatives', 'representative_from_diagram', 'is_representative',
           'representative_of', 'family_key', 'small_members', 'expand_orbit', 'enumerate_families',
           'label_diagram', 'label_to_path', 'in_rothe_paths', 'all_rothe_paths')


class LabelError(QuiverError):
    pass


@dataclasses.dataclass(frozen=True)
class FamilyRepresentative:
    n: int
    strands: tuple

    def __post_init__(self):
        object.__setattr__(self, 'strands', tuple(sorted(self.strands)))

    @property
    def annulus(self):
        return Annulus(self.n)

    @property
    def preinjective(self):
        """A = c(0,i), the longest strand at 0."""
        starts = [s for s in self.strands if s.i == 0]
        if not starts:
            raise LabelError('a representative has a strand at 0')
        return max(starts, key=lambda s: s.j)

    @property
    def preprojective(self):
        """B = c(j,n+1)."""
        ends = [s for s in self.strands if s.j == self.n + 1]
        if len(ends) != 1:
            raise LabelError('a representative has exactly one strand at {0}'.format(self.n + 1))
        return ends[0]

    def modules(self):
        line = self.annulus.line
        return [module_of_strand(s, line) for s in self.strands]

    @property
    def diagram(self):
        annulus = self.annulus
        return ArcDiagram(annulus, tuple(arc_of_module(m, annulus) for m in self.modules()))

    def strand_diagram(self):
        return StrandDiagram(self.annulus.line, self.strands)

    def type_a_diagram(self):
        """The same strands on the line 0..n+1 with signs -,+,...,+,-."""
        eps = OrientationVector(QuiverKind.TYPE_A, (MINUS,) + (PLUS,) * self.n + (MINUS,))
        return StrandDiagram(MarkedLine(eps), self.strands)

    def key(self):
        return tuple((s.i, s.j) for s in self.strands)


def enumerate_representatives(n):
    """One representative per outer class, ordered by the longest
    preinjective c(0,k+1), the gap, the preprojective c(n-j,n+1) and then
    the four type A sets."""

    if n < 1:
        raise ValueError('at least one outer marked point is needed')

    for k in range(n):
        a_strand = Strand(0, k + 1)
        for gap in range(1, k + 2):
            for j in range(n - k):
                b_strand = Strand(n - j, n + 1)
                for first in typea.strand_sets(0, gap - 1):
                    for second in typea.strand_sets(gap, k + 1, mirrored=True):
                        for third in typea.strand_sets(k + 1, n - j):
                            for fourth in typea.strand_sets(n - j, n):
                                yield FamilyRepresentative(n, (a_strand, b_strand) + tuple(first + second
                                                                                           + third + fourth))


def representative_from_diagram(d):
    annulus = d.annulus
    strands = d.strand_diagram().strands
    if any(s.i < 0 or s.j > annulus.vertex_count for s in strands):
        raise DiagramError('{0} crosses the dateline'.format(d))
    return FamilyRepresentative(annulus.n, strands)


def is_representative(d):
    if not is_small(d):
        return False
    if any(crosses_dateline(arc, d.annulus) for arc in d.arcs):
        return False
    return sum(1 for arc in d.arcs if arc.bridging and arc.start != 0) == 1


def small_members(d):
    """Inner twist amounts that make d small."""

    indices = [arc.twist_index for arc in d.bridging()]
    if not indices:
        return [0] if is_small(d) else []
    candidates = sorted({-min(indices), 1 - max(indices)})
    return [t for t in candidates if is_small(inner_twist(d, t))]


def family_key(d):
    """The member of d's inner-twist family whose lowest bridging index is 0."""

    indices = [arc.twist_index for arc in d.bridging()]
    if not indices:
        return d
    return inner_twist(d, -min(indices))


@trackcpu
def representative_of(d):
    """The representative of d's outer class and the twist word taking d
    onto it: rep = inner_twist(outer_twist^outer(d), inner)."""

    check = diagram_is_fundamental(d.strand_diagram())
    if not check:
        raise DiagramError('{0} is not fundamental ({1})'.format(d, check.reason))

    n = d.annulus.n
    e = d
    for shift in range(n):
        for t in small_members(e):
            candidate = inner_twist(e, t)
            if is_representative(candidate):
                return representative_from_diagram(candidate), TwistWord(inner=t, outer=shift)
        e = outer_twist(e)
    raise DiagramError('no representative found for {0}'.format(d))


@dataclasses.dataclass(frozen=True)
class OrbitMember:
    shift: int
    diagram: ArcDiagram


def expand_orbit(rep):
    """The n families of the outer class, each as its small member keyed by
    lowest bridging index 0, tagged with the number of outer twists."""

    members = []
    e = rep.diagram
    for shift in range(rep.n):
        key = family_key(e)
        if not is_small(key):
            raise DiagramError('family of {0} has no small member'.format(e))
        members.append(OrbitMember(shift, key))
        e = outer_twist(e)
    return members


def enumerate_families(n):
    for rep in enumerate_representatives(n):
        for member in expand_orbit(rep):
            yield member.diagram


@dataclasses.dataclass(frozen=True)
class LabelWord:
    word: str
    strand: Strand = None
    children: tuple = ()

    @property
    def circled(self):
        return self.strand is not None

    def preorder(self):
        out = [self]
        for child in self.children:
            out.extend(child.preorder())
        return out

    def to_dict(self):
        out = {'word': self.word, 'circled': self.circled}
        if self.circled:
            out['strand'] = [self.strand.i, self.strand.j]
            out['children'] = [child.to_dict() for child in self.children]
        return out


@dataclasses.dataclass(frozen=True)
class Label:
    """Words under A (a, b, c) and under B (a), read depth-first."""

    n: int
    under_a: tuple
    under_b: tuple

    def words(self):
        out = []
        for root in self.under_a + self.under_b:
            out.extend(root.preorder())
        return out

    def circled_count(self):
        return sum(1 for w in self.words() if w.circled)

    def to_dict(self):
        return {'n': self.n,
                'A': [w.to_dict() for w in self.under_a],
                'B': [w.to_dict() for w in self.under_b]}


def label_diagram(rep):
    """Label a representative.

    Each circled word X has three words under it. With X = c(i,j) reached
    from its end e, they name the strand continuing from the far end, the
    strand sharing e inside X, and the strand sharing the far end inside X,
    each the one immediately counterclockwise of X."""

    a_strand = rep.preinjective
    b_strand = rep.preprojective
    i_a, j_b = a_strand.j, b_strand.i
    if j_b < i_a:
        raise LabelError('preprojective c({0},{1}) starts inside c(0,{2})'.format(j_b, rep.n + 1, i_a))

    pool = set(rep.strands) - {a_strand, b_strand}
    under_b_pool = {s for s in pool if s.i >= j_b}
    under_a_pool = pool - under_b_pool

    def take(candidates, key, available):
        candidates = [s for s in candidates if s in available]
        if not candidates:
            return None
        s = min(candidates, key=key)
        available.discard(s)
        return s

    def grow(word, strand, from_left, available):
        if strand is None:
            return LabelWord(word)
        i, j = strand.i, strand.j
        if from_left:
            slots = (
                (take([s for s in available if s.i == j], lambda s: -s.j, available), True),
                (take([s for s in available if s.i == i and s.j < j], lambda s: -s.j, available), True),
                (take([s for s in available if s.j == j and s.i > i], lambda s: s.i, available), False),
            )
        else:
            slots = (
                (take([s for s in available if s.j == i], lambda s: s.i, available), False),
                (take([s for s in available if s.i == i and s.j < j], lambda s: -s.j, available), True),
                (take([s for s in available if s.j == j and s.i > i], lambda s: s.i, available), False),
            )
        children = tuple(grow(word + letter, child, left, available)
                         for letter, (child, left) in zip('abc', slots))
        return LabelWord(word, strand, children)

    a_root = grow('', a_strand, True, under_a_pool)
    if under_a_pool:
        raise LabelError('strands {0} are not reached from A'.format(', '.join(map(str, sorted(under_a_pool)))))

    first = take([s for s in under_b_pool if s.i == j_b], lambda s: -s.j, under_b_pool)
    b_word = grow('a', first, True, under_b_pool)
    if under_b_pool:
        raise LabelError('strands {0} are not reached from B'.format(', '.join(map(str, sorted(under_b_pool)))))

    label = Label(rep.n, a_root.children, (b_word,))
    if label.circled_count() != rep.n - 1:
        raise LabelError('label has {0} circled words, expected {1}'.format(label.circled_count(), rep.n - 1))
    return label


def label_to_path(label):
    """Circled words step up, uncircled words step right."""
    return typea.LatticePath(''.join('U' if w.circled else 'R' for w in label.words()))


def in_rothe_paths(path, m):
    """Membership in P_m(4,2): from (0,0) to (4+2m, m), staying strictly
    on the upper side of y = (x-4)/2 until the end."""

    pts = path.points()
    if pts[-1] != (4 + 2 * m, m):
        return False
    return all(x < 2 * y + 4 for x, y in pts[:-1])


def all_rothe_paths(m):
    """Every path of P_m(4,2), by brute force over step orders."""

    out = []

    def extend(steps, x, y):
        if y == m and x == 4 + 2 * m:
            out.append(typea.LatticePath(steps))
            return
        if y < m:
            extend(steps + 'U', x, y + 1)
        if x + 1 < 2 * y + 4 or (x + 1 == 4 + 2 * m and y == m):
            extend(steps + 'R', x + 1, y)

    extend('', 0, 0)
    return out
