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
Hom and Ext dimensions between string modules, and everything built on
them: exceptional sequences and sets, perpendicular categories and the
relatively projective / injective members of an exceptional set.

Hom is the nullity of the intertwiner system over the rationals; Ext is
Hom minus the Euler form, which is exact for hereditary path algebras.
"""

import dataclasses
import functools
import itertools

import networkx as nx
import sympy

from excat.quiver import (QuiverError, IntervalModule, OrientationVector, build_quiver, realize,
                          dimension_vector, euler_form, dual_interval, all_intervals)

__all__ = ('OracleError', 'HomExtPair', 'RelativeStatus',
           'hom_dim', 'ext_dim', 'interval_hom_ext', 'is_exceptional', 'is_exceptional_sequence',
           'order_graph', 'sort_exceptional_set', 'perpendicular', 'left_perpendicular',
           'relative_status', 'sequence_status', 'exceptional_orderings', 'ar_translate_A',
           'ar_inverse_translate_A', 'brute_force_sets')


class OracleError(QuiverError):
    pass


@dataclasses.dataclass(frozen=True)
class HomExtPair:
    hom: int
    ext: int


@dataclasses.dataclass(frozen=True)
class RelativeStatus:
    projective: frozenset
    injective: frozenset

    def of(self, m):
        return (m in self.projective, m in self.injective)


@functools.lru_cache(maxsize=None)
def hom_dim(q, M, N):
    """dim Hom(M,N): maps f_v with f_t(a) M_a = N_a f_s(a) for every arrow."""

    rm = realize(q, M)
    rn = realize(q, N)

    # one unknown per entry of each f_v, which is dims_N(v) x dims_M(v)
    offsets = {}
    count = 0
    for v in q.vertices:
        offsets[v] = count
        count += rn.dims[v - 1] * rm.dims[v - 1]

    def var(v, r, c):
        return offsets[v] + r * rm.dims[v - 1] + c

    rows = []
    for arrow, m_a in rm.matrices:
        n_a = rn.matrix(arrow)
        s, t = arrow.source, arrow.target
        for r in range(rn.dims[t - 1]):
            for c in range(rm.dims[s - 1]):
                row = [0] * count
                for k in range(rm.dims[t - 1]):
                    row[var(t, r, k)] += m_a[k, c]
                for k in range(rn.dims[s - 1]):
                    row[var(s, k, c)] -= n_a[r, k]
                if any(row):
                    rows.append(row)

    if not rows:
        return count
    return count - sympy.Matrix(rows).rank()


def ext_dim(q, M, N):
    value = hom_dim(q, M, N) - euler_form(q, dimension_vector(q, M), dimension_vector(q, N))
    if value < 0:
        raise OracleError('negative Ext({0},{1}) = {2}'.format(M, N, value))
    return value


def interval_hom_ext(a, b, c, d, n):
    """Closed form for Hom/Ext(M_{a,b}, M_{c,d}) over straight A_n."""

    if not (0 <= a < b <= n and 0 <= c < d <= n):
        raise QuiverError('intervals ({0},{1}) and ({2},{3}) must lie in 0..{4}'.format(a, b, c, d, n))
    hom = 1 if c <= a < d <= b else 0
    ext = 1 if a < c <= b < d else 0
    return HomExtPair(hom, ext)


def is_exceptional(q, M):
    return hom_dim(q, M, M) == 1 and ext_dim(q, M, M) == 0


def is_exceptional_sequence(q, seq):
    seq = list(seq)
    if not all(is_exceptional(q, m) for m in seq):
        return False
    for i, later in enumerate(seq):
        for earlier in seq[:i]:
            if hom_dim(q, later, earlier) or ext_dim(q, later, earlier):
                return False
    return True


def order_graph(q, modules):
    """Edge M -> N whenever Hom(M,N) or Ext(M,N) is nonzero."""

    g = nx.DiGraph()
    g.add_nodes_from(modules)
    for m, n in itertools.permutations(modules, 2):
        if hom_dim(q, m, n) or ext_dim(q, m, n):
            g.add_edge(m, n)
    return g


def sort_exceptional_set(q, modules):
    """Order a set into an exceptional sequence, or return None if no
    order works. Nonzero Hom and Ext only ever point forwards."""

    modules = list(modules)
    if len(set(modules)) != len(modules):
        return None
    if not all(is_exceptional(q, m) for m in modules):
        return None

    g = order_graph(q, modules)
    if not nx.is_directed_acyclic_graph(g):
        return None
    return tuple(nx.lexicographical_topological_sort(g, key=str))


def exceptional_orderings(q, modules):
    """Every ordering of the set that is an exceptional sequence."""

    g = order_graph(q, list(modules))
    if not nx.is_directed_acyclic_graph(g):
        return []
    return [tuple(order) for order in nx.all_topological_sorts(g)]


def perpendicular(q, modules):
    """Intervals W with Hom(E,W) = 0 = Ext(E,W) for every E."""

    if q.affine:
        raise QuiverError('perpendicular categories are materialized for type A only')
    return [w for w in all_intervals(q.vertex_count)
            if not any(hom_dim(q, e, w) or ext_dim(q, e, w) for e in modules)]


def left_perpendicular(q, modules):
    """Intervals W with Hom(W,E) = 0 = Ext(W,E) for every E."""

    if q.affine:
        raise QuiverError('perpendicular categories are materialized for type A only')
    return [w for w in all_intervals(q.vertex_count)
            if not any(hom_dim(q, w, e) or ext_dim(q, w, e) for e in modules)]


def _projective_in(q, y, category):
    return all(ext_dim(q, y, z) == 0 for z in category)


def _injective_in(q, y, category):
    return all(ext_dim(q, z, y) == 0 for z in category)


def _relative_projectives(q, modules):
    g = order_graph(q, modules)
    if not nx.is_directed_acyclic_graph(g):
        raise OracleError('{0} is not an exceptional set'.format(', '.join(map(str, modules))))
    return frozenset(y for y in modules if _projective_in(q, y, perpendicular(q, nx.descendants(g, y))))


def relative_status(q, modules):
    """Relatively projective and injective members of an exceptional set
    over straight A_n.

    Y is relatively projective when it is projective in the right
    perpendicular category of everything strictly above it in the
    exceptional order. Injectivity is read off the dual set over the
    opposite quiver, where it becomes projectivity."""

    modules = list(modules)
    if sort_exceptional_set(q, modules) is None:
        raise OracleError('{0} is not an exceptional set'.format(', '.join(map(str, modules))))

    n = q.vertex_count
    projective = _relative_projectives(q, modules)

    q_op = build_quiver(OrientationVector.straight_a(n))
    duals = {dual_interval(m, n): m for m in modules}
    injective = frozenset(duals[d] for d in _relative_projectives(q_op, list(duals)))

    return RelativeStatus(projective=projective, injective=injective)


def sequence_status(q, seq):
    """Relative status computed along one exceptional sequence: E_i against
    the right perpendicular of its suffix and the left perpendicular of its
    prefix."""

    seq = list(seq)
    if not is_exceptional_sequence(q, seq):
        raise OracleError('not an exceptional sequence')

    projective = set()
    injective = set()
    for i, y in enumerate(seq):
        if _projective_in(q, y, perpendicular(q, seq[i + 1:])):
            projective.add(y)
        if _injective_in(q, y, left_perpendicular(q, seq[:i])):
            injective.add(y)
    return RelativeStatus(projective=frozenset(projective), injective=frozenset(injective))


def ar_translate_A(m, n):
    """tau M_{a,b} = M_{a+1,b+1}; projectives M_{a,n} have none."""
    if m.y >= n:
        return None
    return IntervalModule(m.x + 1, m.y + 1)


def ar_inverse_translate_A(m, n):
    if m.x == 0:
        return None
    return IntervalModule(m.x - 1, m.y - 1)


def brute_force_sets(q):
    """Every complete exceptional set over straight A_n, by subset search."""

    n = q.vertex_count
    candidates = [m for m in all_intervals(n) if is_exceptional(q, m)]
    found = []
    for subset in itertools.combinations(candidates, n):
        if sort_exceptional_set(q, subset) is not None:
            found.append(frozenset(subset))
    return found
