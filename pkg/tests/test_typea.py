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

import pytest

from excat import constants, oracle, typea
from excat.quiver import OrientationVector, IntervalModule, build_quiver
from excat.strands import DiagramError, Strand


def M(x, y):
    return IntervalModule(x, y)


@pytest.mark.parametrize('n', range(0, 6))
def test_set_count(n):
    sets = list(typea.enumerate_sets(n))
    assert len(sets) == constants.EXCEPTIONAL_SETS[n]
    assert len(set(sets)) == len(sets)
    assert all(len(s) == n for s in sets)


def test_a2_sets():
    assert set(typea.enumerate_sets(2)) == {frozenset((M(0, 1), M(0, 2))),
                                            frozenset((M(0, 1), M(1, 2))),
                                            frozenset((M(0, 2), M(1, 2)))}


def test_enumerate_sets_rejects_negative_size():
    with pytest.raises(ValueError):
        list(typea.enumerate_sets(-1))


def test_mirrored_strand_sets():
    plain = [sorted(s) for s in typea.strand_sets(0, 2)]
    mirrored = [sorted(s) for s in typea.strand_sets(0, 2, mirrored=True)]
    assert sorted(plain) == [[Strand(0, 1), Strand(0, 2)], [Strand(0, 1), Strand(1, 2)],
                             [Strand(0, 2), Strand(1, 2)]]
    assert sorted(mirrored) == sorted(plain)
    assert next(typea.strand_sets(0, 2, mirrored=True)) == [Strand(1, 2), Strand(0, 1)]


@pytest.mark.parametrize('n', range(1, 6))
def test_tree_bijection(n):
    trees = set()
    for modules in typea.enumerate_sets(n):
        tree = typea.ternary_tree(modules)
        assert tree.size() == n
        assert typea.tree_to_set(tree, n) == modules
        trees.add(tree.shape())
    assert len(trees) == constants.EXCEPTIONAL_SETS[n]


@pytest.mark.parametrize('n', range(1, 6))
def test_path_bijection(n):
    paths = set()
    for modules in typea.enumerate_sets(n):
        path = typea.tree_to_lattice_path(typea.ternary_tree(modules))
        assert path.valid_height(n)
        assert typea.tree_to_set(typea.path_to_tree(path)) == modules
        paths.add(path)
    assert len(paths) == constants.EXCEPTIONAL_SETS[n]


def test_enumerate_trees():
    trees = list(typea.enumerate_trees(3))
    assert len(trees) == 12
    assert {typea.tree_to_set(t) for t in trees} == set(typea.enumerate_sets(3))


def test_empty_tree():
    tree = typea.ternary_tree(frozenset())
    assert tree.leaf
    assert str(typea.tree_to_lattice_path(tree)) == 'R'
    assert typea.tree_to_lattice_path(tree).valid_height(0)


def test_ternary_tree_rejects_gaps():
    with pytest.raises(DiagramError):
        typea.ternary_tree([M(0, 1), M(2, 3)])


def test_lattice_path():
    path = typea.LatticePath('URRURR')
    assert path.points()[-1] == path.end == (4, 2)
    assert path.vertical_x() == [0, 2]
    assert not path.valid_height(2)
    with pytest.raises(ValueError):
        typea.LatticePath('UDR')
    with pytest.raises(ValueError):
        typea.path_to_tree(typea.LatticePath('URRRR'))


def _labelled_tree():
    return typea.tree_from_labels(constants.TREE_LABELS_15)


def test_tree_from_labels():
    tree = _labelled_tree()
    assert tree.size() == 15
    assert tree.strand == Strand(0, 11)
    assert [node.label for node in tree.nodes()] == sorted(constants.TREE_LABELS_15, key=lambda l: (l != 'R', l))
    with pytest.raises(ValueError):
        typea.tree_from_labels(('R', 'Ab'))


def test_relative_status_of_labelled_tree():
    tree = _labelled_tree()
    by_module = {IntervalModule(node.strand.i, node.strand.j): node.label for node in tree.nodes()}
    combinatorial = typea.combinatorial_relatives(typea.tree_to_set(tree))

    assert {by_module[m] for m in combinatorial.status.injective} == constants.TREE_15_RELATIVE_INJECTIVES
    assert {by_module[m] for m in combinatorial.status.projective} == constants.TREE_15_RELATIVE_PROJECTIVES
    assert {node.label for node in typea.even_b_nodes(tree)} == constants.TREE_15_RELATIVE_INJECTIVES
    assert combinatorial.even_b == combinatorial.status.injective


@pytest.mark.parametrize('n', range(1, 5))
def test_combinatorial_relatives_match_oracle(n):
    q = build_quiver(OrientationVector.straight_a(n))
    for modules in typea.enumerate_sets(n):
        combinatorial = typea.combinatorial_relatives(modules)
        assert combinatorial.status == oracle.relative_status(q, modules), sorted(modules)


@pytest.mark.parametrize('n', range(1, 6))
def test_even_colourings_are_the_relative_injectives(n):
    for modules in typea.enumerate_sets(n):
        combinatorial = typea.combinatorial_relatives(modules)
        assert combinatorial.even_b == combinatorial.status.injective, sorted(modules)
        assert combinatorial.even_x == combinatorial.status.injective, sorted(modules)


def test_support_forest():
    forest = typea.support_forest([M(0, 2), M(1, 2)], [M(1, 2), M(0, 2)], 2)
    assert forest.roots() == [M(0, 2)]
    assert forest.parent(M(1, 2)) == M(0, 2)
    assert forest.status.projective == frozenset((M(0, 2), M(1, 2)))
    assert forest.status.injective == frozenset((M(0, 2),))

    with pytest.raises(ValueError):
        typea.support_forest([M(0, 2), M(1, 2)], [M(1, 2)], 2)
    with pytest.raises(oracle.OracleError):
        typea.support_forest([M(0, 2), M(1, 2)], [M(0, 2), M(1, 2)], 2)


@pytest.mark.parametrize('n', (1, 2, 3, pytest.param(4, marks=pytest.mark.slow)))
def test_support_forest_matches_oracle(n):
    q = build_quiver(OrientationVector.straight_a(n))
    for modules in typea.enumerate_sets(n):
        status = oracle.relative_status(q, modules)
        for ordering in oracle.exceptional_orderings(q, modules):
            forest = typea.support_forest(modules, ordering, n)
            assert forest.status == status, ordering
            assert set(forest.roots()) == status.projective & status.injective


def test_support_forest_of_labelled_tree():
    tree = _labelled_tree()
    label = {IntervalModule(node.strand.i, node.strand.j): node.label for node in tree.nodes()}
    modules = list(label)
    n = tree.size()
    ordering = oracle.sort_exceptional_set(build_quiver(OrientationVector.straight_a(n)), modules)
    forest = typea.support_forest(modules, ordering, n)

    assert {label[m] for m in forest.roots()} == {'R', 'C', 'Cc'}
    parents = {label[m]: label[forest.parent(m)] for m in modules if forest.parent(m) is not None}
    assert parents == {'A': 'R', 'Ac': 'R', 'B': 'R', 'Bc': 'R', 'Aa': 'A', 'Ab': 'A', 'Abb': 'Ab',
                       'Ba': 'B', 'Bb': 'B', 'Bbb': 'Bb', 'Cb': 'C', 'Cbc': 'C'}
    assert {label[m] for m in forest.status.injective} == constants.TREE_15_RELATIVE_INJECTIVES
    assert {label[m] for m in forest.status.projective} == constants.TREE_15_RELATIVE_PROJECTIVES


def test_n_table():
    table = typea.N_table(5)
    for key, value in constants.N_VALUES.items():
        assert table[key] == value
    for total in range(6):
        assert sum(table[(k, total - k)] for k in range(total + 1)) == constants.EXCEPTIONAL_SETS[total]


@pytest.mark.parametrize('n', range(1, 5))
def test_injective_census(n):
    table = typea.N_table(n)
    census = typea.injective_census(n)
    assert census == {k: table[(k, n - k)] for k in range(n + 1) if table[(k, n - k)]}
