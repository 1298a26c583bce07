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
Complete exceptional sets of straight A_n.

A set on the points lo..hi is its longest strand at lo, c(lo,k), plus
three independent smaller sets: one on lo..p-1, one on p..k hanging from
k (stored mirrored), and one on k..hi. That decomposition drives the
enumerator, the ternary tree bijection and the lattice path bijection.
"""

import dataclasses
import itertools

import networkx as nx

from excat import oracle
from excat.profile import trackcpu
from excat.quiver import IntervalModule, OrientationVector, build_quiver
from excat.strands import DiagramError, Strand

__all__ = ('TernaryTree', 'LatticePath', 'SupportForest', 'CombinatorialStatus', 'strand_sets',
           'enumerate_sets', 'enumerate_trees', 'ternary_tree', 'tree_to_set', 'tree_from_labels',
           'tree_to_lattice_path', 'path_to_tree', 'even_b_nodes', 'strand_orientation',
           'combinatorial_relatives', 'support_forest', 'N_table', 'injective_census')


def _reflect(strands, lo, hi):
    return [Strand(lo + hi - s.j, lo + hi - s.i) for s in strands]


def _sets_on(lo, hi):
    """Strand lists of every complete set on points lo..hi, in (k, p) order."""

    size = hi - lo
    if size == 0:
        yield []
        return

    for k in range(1, size + 1):
        for p in range(1, k + 1):
            root = Strand(lo, lo + k)
            for left in _sets_on(lo, lo + p - 1):
                for middle in _sets_on(lo + p, lo + k):
                    middle = _reflect(middle, lo + p, lo + k)
                    for right in _sets_on(lo + k, hi):
                        yield [root] + left + middle + right


def strand_sets(lo, hi, mirrored=False):
    """Strand lists of every complete set on points lo..hi; mirrored sets
    hang from hi instead of lo."""

    for strands in _sets_on(lo, hi):
        yield _reflect(strands, lo, hi) if mirrored else strands


def enumerate_sets(n):
    """Every complete exceptional set of straight A_n, each exactly once."""

    if n < 0:
        raise ValueError('n must be nonnegative')
    for strands in _sets_on(0, n):
        yield frozenset(IntervalModule(s.i, s.j) for s in strands)


@dataclasses.dataclass(frozen=True)
class TernaryTree:
    """A node (strand set) or a leaf (strand None, no children)."""

    label: str = 'R'
    strand: Strand = None
    a: 'TernaryTree' = None
    b: 'TernaryTree' = None
    c: 'TernaryTree' = None

    @property
    def leaf(self):
        return self.strand is None

    def children(self):
        return (self.a, self.b, self.c)

    def nodes(self):
        """Internal nodes in preorder, which is lexicographic label order."""
        if self.leaf:
            return []
        out = [self]
        for child in self.children():
            out.extend(child.nodes())
        return out

    def leaves(self):
        if self.leaf:
            return [self]
        return [x for child in self.children() for x in child.leaves()]

    def size(self):
        return len(self.nodes())

    def shape(self):
        """Nested tuples with the strands stripped."""
        if self.leaf:
            return None
        return tuple(child.shape() for child in self.children())

    def to_dict(self):
        if self.leaf:
            return None
        return {'label': self.label, 'strand': [self.strand.i, self.strand.j],
                'a': self.a.to_dict(), 'b': self.b.to_dict(), 'c': self.c.to_dict()}


def _child_label(parent, slot):
    if parent == 'R':
        return slot.upper()
    return parent + slot


def _leaf(label):
    return TernaryTree(label=label)


def strand_orientation(strands):
    """For each strand, the endpoint nearer point 0 in the strand graph."""

    g = nx.Graph()
    for s in strands:
        g.add_edge(s.i, s.j)
    distance = nx.single_source_shortest_path_length(g, 0)
    return {s: (s.i if distance[s.i] < distance[s.j] else s.j) for s in strands}


def ternary_tree(modules):
    """The labelled ternary tree of a complete exceptional set."""

    strands = sorted(Strand(m.x, m.y) for m in modules)
    n = len(strands)
    if n == 0:
        return _leaf('R')

    points = set(itertools.chain.from_iterable(s.ends() for s in strands))
    if points != set(range(n + 1)):
        raise DiagramError('strands do not span the points 0..{0}'.format(n))
    near = strand_orientation(strands)
    by_end = {}
    for s in strands:
        by_end.setdefault(s.i, []).append(s)
        by_end.setdefault(s.j, []).append(s)

    used = set()

    def pick(candidates, key):
        candidates = [s for s in candidates if s not in used]
        return min(candidates, key=key) if candidates else None

    def build(s, label):
        used.add(s)
        i, j = s.i, s.j
        if near[s] == i:
            xa = pick([t for t in by_end[i] if t.i == i and t.j < j], key=lambda t: -t.j)
            xb = pick([t for t in by_end[j] if t.j == j and i < t.i], key=lambda t: t.i)
            xc = pick([t for t in by_end[j] if t.i == j], key=lambda t: -t.j)
        else:
            xa = pick([t for t in by_end[j] if t.j == j and i < t.i], key=lambda t: t.i)
            xb = pick([t for t in by_end[i] if t.i == i and t.j < j], key=lambda t: -t.j)
            xc = pick([t for t in by_end[i] if t.j == i], key=lambda t: t.i)

        kids = {}
        for slot, child in (('a', xa), ('b', xb), ('c', xc)):
            child_label = _child_label(label, slot)
            kids[slot] = build(child, child_label) if child is not None else _leaf(child_label)
        return TernaryTree(label=label, strand=s, **kids)

    root = max(by_end[0], key=lambda t: t.j)
    tree = build(root, 'R')
    if len(used) != n:
        missing = sorted(set(strands) - used)
        raise DiagramError('strands {0} have no parent'.format(', '.join(map(str, missing))))
    return tree


def _place(tree, lo, hi):
    if tree.leaf:
        return []
    a, b = tree.a.size(), tree.b.size()
    k = lo + a + b + 1
    return ([Strand(lo, k)]
            + _place(tree.a, lo, lo + a)
            + _reflect(_place(tree.b, lo + a + 1, k), lo + a + 1, k)
            + _place(tree.c, k, hi))


def tree_to_set(tree, n=None):
    size = tree.size()
    if n is not None and n != size:
        raise ValueError('tree has {0} nodes, not {1}'.format(size, n))
    return frozenset(IntervalModule(s.i, s.j) for s in _place(tree, 0, size))


def _with_strands(tree, n):
    return ternary_tree(tree_to_set(tree, n))


def tree_from_labels(labels):
    """The tree whose internal nodes carry exactly the given labels."""

    labels = set(labels)

    def grow(label):
        if label not in labels:
            return _leaf(label)
        return TernaryTree(label=label, strand=Strand(0, 1),
                           a=grow(_child_label(label, 'a')),
                           b=grow(_child_label(label, 'b')),
                           c=grow(_child_label(label, 'c')))

    shape = grow('R')
    if shape.size() != len(labels):
        raise ValueError('labels do not form a tree rooted at R')
    return _with_strands(shape, len(labels))


def enumerate_trees(n):
    """Every ternary tree with n internal nodes, strands attached."""

    def shapes(size, label):
        if size == 0:
            yield _leaf(label)
            return
        for a in range(size):
            for b in range(size - a):
                c = size - 1 - a - b
                for ta in shapes(a, _child_label(label, 'a')):
                    for tb in shapes(b, _child_label(label, 'b')):
                        for tc in shapes(c, _child_label(label, 'c')):
                            yield TernaryTree(label=label, strand=Strand(0, 1), a=ta, b=tb, c=tc)

    for shape in shapes(n, 'R'):
        yield _with_strands(shape, n) if n else shape


@dataclasses.dataclass(frozen=True)
class LatticePath:
    """Up/Right steps from (0,0), written 'U' and 'R'."""

    steps: str

    def __post_init__(self):
        if set(self.steps) - set('UR'):
            raise ValueError('lattice paths use only U and R steps')

    def points(self):
        x = y = 0
        out = [(0, 0)]
        for step in self.steps:
            if step == 'U':
                y += 1
            else:
                x += 1
            out.append((x, y))
        return out

    @property
    def end(self):
        return self.points()[-1]

    def vertical_x(self):
        """x coordinate of each vertical edge, in order."""
        return [x for (x, y), step in zip(self.points(), self.steps) if step == 'U']

    def valid_height(self, n):
        """From (0,0) to (2n+1,n) with x <= 2y until the final point."""
        pts = self.points()
        if pts[-1] != (2 * n + 1, n):
            return False
        return all(x <= 2 * y for x, y in pts[:-1])

    def __str__(self):
        return self.steps


def tree_to_lattice_path(tree):
    """Preorder walk: a node is an Up step, a leaf is a Right step."""

    if tree.leaf:
        return LatticePath('R')
    return LatticePath('U' + ''.join(str(tree_to_lattice_path(child)) for child in tree.children()))


def path_to_tree(path):
    steps = iter(path.steps)

    def grow(label):
        step = next(steps)
        if step == 'R':
            return _leaf(label)
        return TernaryTree(label=label, strand=Strand(0, 1),
                           a=grow(_child_label(label, 'a')),
                           b=grow(_child_label(label, 'b')),
                           c=grow(_child_label(label, 'c')))

    shape = grow('R')
    if next(steps, None) is not None:
        raise ValueError('{0} has steps left over'.format(path))
    n = shape.size()
    return _with_strands(shape, n) if n else shape


def even_b_nodes(tree):
    return [node for node in tree.nodes() if node.label.lower().count('b') % 2 == 0]


@dataclasses.dataclass(frozen=True)
class CombinatorialStatus:
    status: oracle.RelativeStatus
    even_b: frozenset
    even_x: frozenset


@trackcpu
def combinatorial_relatives(modules):
    """Relative status read off the strand diagram and its tree.

    Injectives: strands pointing away from 0 to the right. Projectives:
    c(i,j) such that the path from i to n passes through j. Also returns
    the even-b and even-x colourings of the tree and path."""

    modules = list(modules)
    strands = [Strand(m.x, m.y) for m in modules]
    n = len(strands)

    near = strand_orientation(strands)
    injective = frozenset(m for m, s in zip(modules, strands) if near[s] == s.i)

    g = nx.Graph()
    g.add_edges_from(s.ends() for s in strands)
    projective = frozenset(m for m, s in zip(modules, strands) if s.j in nx.shortest_path(g, s.i, n))

    tree = ternary_tree(modules)
    to_module = {Strand(m.x, m.y): m for m in modules}
    even_b = frozenset(to_module[node.strand] for node in even_b_nodes(tree))
    xs = tree_to_lattice_path(tree).vertical_x()
    even_x = frozenset(to_module[node.strand] for node, x in zip(tree.nodes(), xs) if x % 2 == 0)

    return CombinatorialStatus(status=oracle.RelativeStatus(projective=projective, injective=injective),
                               even_b=even_b, even_x=even_x)


@dataclasses.dataclass(frozen=True)
class SupportForest:
    graph: nx.DiGraph
    status: oracle.RelativeStatus

    def roots(self):
        return [m for m in self.graph if self.graph.in_degree(m) == 0]

    def parent(self, m):
        preds = list(self.graph.predecessors(m))
        return preds[0] if preds else None


def support_forest(modules, ordering, n):
    """Hasse diagram of support inclusion; a non-root is relatively
    projective if it comes before its parent and injective if after."""

    modules = set(modules)
    ordering = list(ordering)
    if set(ordering) != modules or len(ordering) != len(modules):
        raise ValueError('ordering is not an ordering of the set')
    q = build_quiver(OrientationVector.straight_a(n))
    if not oracle.is_exceptional_sequence(q, ordering):
        raise oracle.OracleError('ordering is not an exceptional sequence')

    def contains(big, small):
        return big != small and big.x <= small.x and small.y <= big.y

    g = nx.DiGraph()
    g.add_nodes_from(ordering)
    for m in ordering:
        above = [p for p in ordering if contains(p, m)]
        if above:
            g.add_edge(min(above, key=lambda p: p.length), m)

    position = {m: k for k, m in enumerate(ordering)}
    projective = set()
    injective = set()
    for m in ordering:
        parents = list(g.predecessors(m))
        if not parents or position[m] < position[parents[0]]:
            projective.add(m)
        if not parents or position[m] > position[parents[0]]:
            injective.add(m)
    return SupportForest(graph=g, status=oracle.RelativeStatus(frozenset(projective), frozenset(injective)))


def N_table(max_total):
    """N[(n,m)]: complete sets of A_{n+m} with n relatively injective
    members. The middle subtree contributes with its counts swapped."""

    table = {(0, 0): 1}
    for total in range(1, max_total + 1):
        table[(0, total)] = 0
        for n in range(1, total + 1):
            m = total - n
            value = 0
            for a1, b1, c1 in _compositions(n - 1, 3):
                for a2, b2, c2 in _compositions(m, 3):
                    value += table[(a1, a2)] * table[(b2, b1)] * table[(c1, c2)]
            table[(n, m)] = value
    return table


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def injective_census(n):
    """Counts of complete sets of A_n by number of relative injectives,
    using the combinatorial orientation rule."""

    counts = {}
    for modules in enumerate_sets(n):
        k = len(combinatorial_relatives(modules).status.injective)
        counts[k] = counts.get(k, 0) + 1
    return counts
