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
Cross-checks run by the verify command. Each check returns (ok, detail).
"""

from excat import affine, clusters, constants, counting, oracle, strands, typea
from excat.quiver import OrientationVector, build_quiver, realize
from excat.frontend.stats import Report

__all__ = ('AREAS', 'verify')


def _mismatch(rows):
    bad = [row for row in rows if not row.ok]
    return not bad, ', '.join('n={0}: {1} != {2}'.format(r.n, r.recursion, r.closed_form) for r in bad)


def check_recursions(n):
    max_n = max(n, 8)
    results = [_mismatch(counting.rothe_recursion_check(kind, max_n)) for kind in ('catalan', 'ternary', 'rothe43')]
    return all(ok for ok, _ in results), '; '.join(d for _, d in results if d)


def check_generating_functions(n):
    max_n = max(n, 8)
    series = counting.ternary_gf_coefficients(max_n)
    expected = [counting.exceptional_count(k) for k in range(max_n + 1)]
    if series != expected:
        return False, 'g = 1 + z g^3 gives {0}'.format(series)
    coefficients = counting.two_variable_coefficients(n)
    table = typea.N_table(n)
    bad = [key for key, value in table.items() if coefficients.get(key, 0) != value]
    return not bad, 'N differs at {0}'.format(bad) if bad else ''


def check_typea_count(n):
    found = sum(1 for _ in typea.enumerate_sets(n))
    return found == counting.exceptional_count(n), '{0} sets'.format(found)


def check_typea_oracle(n):
    q = build_quiver(OrientationVector.straight_a(n))
    for modules in typea.enumerate_sets(n):
        if oracle.sort_exceptional_set(q, modules) is None:
            return False, '{0} is not exceptional'.format(sorted(modules))
    return True, ''


def check_typea_bijections(n):
    paths = set()
    for modules in typea.enumerate_sets(n):
        tree = typea.ternary_tree(modules)
        if typea.tree_to_set(tree, n) != modules:
            return False, 'tree of {0} does not invert'.format(sorted(modules))
        path = typea.tree_to_lattice_path(tree)
        if not path.valid_height(n):
            return False, '{0} is not a path of height {1}'.format(path, n)
        paths.add(path)
    return len(paths) == counting.exceptional_count(n), '{0} distinct paths'.format(len(paths))


def check_typea_relatives(n):
    q = build_quiver(OrientationVector.straight_a(n))
    for modules in typea.enumerate_sets(n):
        combinatorial = typea.combinatorial_relatives(modules)
        if combinatorial.status != oracle.relative_status(q, modules):
            return False, 'relative status differs for {0}'.format(sorted(modules))
        if combinatorial.even_b != combinatorial.status.injective:
            return False, 'even-b rule fails for {0}'.format(sorted(modules))
        if combinatorial.even_x != combinatorial.status.injective:
            return False, 'even-x rule fails for {0}'.format(sorted(modules))
        for seq in oracle.exceptional_orderings(q, modules):
            if oracle.sequence_status(q, seq) != combinatorial.status:
                return False, 'relative status depends on the order of {0}'.format(seq)
    return True, ''


def check_injective_census(n):
    table = typea.N_table(n)
    census = typea.injective_census(n)
    bad = [k for k in range(n + 1) if census.get(k, 0) != table[(k, n - k)]]
    return not bad, 'census {0}'.format(census) if bad else ''


def check_affine_count(n):
    reps = list(affine.enumerate_representatives(n))
    return len(reps) == counting.rothe(4, 3, n - 1), '{0} representatives'.format(len(reps))


def check_affine_fundamental(n):
    for rep in affine.enumerate_representatives(n):
        check = strands.diagram_is_fundamental(rep.diagram.strand_diagram())
        if not check:
            return False, '{0}: {1} {2}'.format(rep.diagram, check.reason, check.detail)
        if not strands.diagram_is_fundamental(rep.type_a_diagram()):
            return False, '{0} is not fundamental on the line'.format(rep.diagram)
    return True, ''


def check_affine_oracle(n):
    q = strands.Annulus(n).quiver
    for rep in affine.enumerate_representatives(n):
        if oracle.sort_exceptional_set(q, rep.modules()) is None:
            return False, '{0} is not exceptional'.format(rep.diagram)
    return True, ''


def check_affine_labels(n):
    paths = set()
    for rep in affine.enumerate_representatives(n):
        path = affine.label_to_path(affine.label_diagram(rep))
        if not affine.in_rothe_paths(path, n - 1):
            return False, '{0} is outside the path family'.format(path)
        paths.add(path)
    return len(paths) == counting.rothe(4, 3, n - 1), '{0} distinct paths'.format(len(paths))


def check_affine_orbits(n):
    families = set()
    for rep in affine.enumerate_representatives(n):
        members = affine.expand_orbit(rep)
        for member in members:
            found, word = affine.representative_of(member.diagram)
            if found != rep:
                return False, '{0} normalizes to {1}'.format(member.diagram, found.diagram)
            families.add(member.diagram)
    return len(families) == counting.family_count(n), '{0} families'.format(len(families))


def check_cluster_count(n):
    found = clusters.small_triangulations(n)
    return len(found) == n * counting.catalan(n), '{0} small triangulations'.format(len(found))


def check_cluster_shape(n):
    triangulations = clusters.small_triangulations(n)
    for t in triangulations:
        if not clusters.is_triangulation(t):
            return False, '{0} is not a triangulation'.format(t)
        if not clusters.has_heart(t):
            return False, '{0} has no heart'.format(t)
        if clusters.unique_small_member(t) != t:
            return False, '{0} is not its own small member'.format(t)
    sizes = {len(c) for c in clusters.outer_classes(triangulations)}
    return sizes == {n}, 'orbit sizes {0}'.format(sorted(sizes))


def check_cluster_conventions(n):
    seen = set()
    for t in clusters.small_triangulations(n):
        fundamental = bool(strands.diagram_is_fundamental(t.strand_diagram()))
        if clusters.conventions_coincide(t) != fundamental:
            return False, '{0}: conventions and fundamentality disagree'.format(t)
        seen.add(clusters.cluster_of(t))
    return len(seen) == n * counting.catalan(n), '{0} distinct clusters'.format(len(seen))


def check_golden():
    q = build_quiver(OrientationVector.straight_atilde(3))
    rep = realize(q, constants.STRING_24_6)
    if rep.dims != constants.STRING_24_6_DIMS:
        return False, 'dimension vector {0}'.format(rep.dims)
    for arrow in q.arrows:
        if rep.matrix(arrow).tolist() != constants.STRING_24_6_MATRICES[arrow.label]:
            return False, 'matrix of {0}'.format(arrow)

    orbit = [strands.ArcDiagram(strands.Annulus(3), arcs) for arcs in constants.TRIANGULATION_3_ORBIT]
    cluster = clusters.cluster_of(orbit[0])
    if cluster != clusters.Cluster(3, constants.TRIANGULATION_3_CLUSTER):
        return False, 'cluster {0}'.format(cluster)
    for t, u in zip(orbit, orbit[1:]):
        if strands.outer_twist(t) != u:
            return False, 'outer twist of {0}'.format(t)

    tree = typea.tree_from_labels(constants.TREE_LABELS_15)
    if {node.label for node in typea.even_b_nodes(tree)} != constants.TREE_15_RELATIVE_INJECTIVES:
        return False, 'even-b nodes'
    return True, ''


_checks = {
    'counting': (('rothe recursions', check_recursions),
                 ('generating functions', check_generating_functions)),
    'typea': (('exceptional set count', check_typea_count),
              ('oracle accepts every set', check_typea_oracle),
              ('tree and path bijections', check_typea_bijections),
              ('relative status rules', check_typea_relatives),
              ('injective census', check_injective_census)),
    'affine': (('representative count', check_affine_count),
               ('representatives are fundamental', check_affine_fundamental),
               ('oracle accepts every representative', check_affine_oracle),
               ('labels give distinct paths', check_affine_labels),
               ('orbits and families', check_affine_orbits)),
    'clusters': (('small triangulation count', check_cluster_count),
                 ('triangulation shape', check_cluster_shape),
                 ('conventions coincide iff fundamental', check_cluster_conventions)),
}

AREAS = ('all', 'golden') + tuple(_checks)


def verify(area, n, report=None):
    if report is None:
        report = Report()
    if area in ('all', 'golden'):
        report.run('golden tables', check_golden)
    for name, checks in _checks.items():
        if area not in ('all', name):
            continue
        for title, check in checks:
            report.run('{0}: {1} (n={2})'.format(name, title, n), check, n)
    return report
