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

from excat import affine, constants, counting
from excat.strands import (DiagramError, Strand, Arc, Annulus, ArcDiagram, diagram_is_fundamental, inner_twist,
                           outer_twist, is_small)
from excat.typea import LatticePath


def _rep(n, *ends):
    return affine.FamilyRepresentative(n, tuple(Strand(i, j) for i, j in ends))


@pytest.mark.parametrize('n', range(1, 5))
def test_representative_count(n):
    reps = list(affine.enumerate_representatives(n))
    assert len(reps) == constants.OUTER_CLASSES[n]
    assert len({rep.key() for rep in reps}) == len(reps)
    assert all(len(rep.strands) == n + 1 for rep in reps)


@pytest.mark.slow
def test_representative_count_five():
    assert sum(1 for _ in affine.enumerate_representatives(5)) == constants.OUTER_CLASSES[5]


def test_enumerate_needs_a_marked_point():
    with pytest.raises(ValueError):
        list(affine.enumerate_representatives(0))


def test_single_marked_point():
    reps = list(affine.enumerate_representatives(1))
    assert reps == [_rep(1, (0, 1), (1, 2))]
    assert reps[0].diagram == ArcDiagram(Annulus(1), (Arc(0, 1, 0), Arc(1, 0, 0)))


def test_two_marked_points():
    reps = set(affine.enumerate_representatives(2))
    assert reps == {_rep(2, (0, 1), (1, 2), (2, 3)),
                    _rep(2, (0, 1), (1, 2), (1, 3)),
                    _rep(2, (0, 2), (1, 2), (2, 3)),
                    _rep(2, (0, 2), (0, 1), (2, 3))}


def test_representative_parts():
    rep = _rep(2, (0, 1), (1, 2), (2, 3))
    assert rep.preinjective == Strand(0, 1)
    assert rep.preprojective == Strand(2, 3)
    assert rep.diagram == ArcDiagram(Annulus(2), (Arc(0, 1, 0), Arc(1, 2, 0), Arc(2, 0, 0)))
    assert affine.is_representative(rep.diagram)
    assert affine.representative_from_diagram(rep.diagram) == rep


@pytest.mark.parametrize('n', range(1, 5))
def test_representatives_are_fundamental(n):
    for rep in affine.enumerate_representatives(n):
        assert diagram_is_fundamental(rep.strand_diagram()), rep.key()
        assert diagram_is_fundamental(rep.type_a_diagram()), rep.key()


def test_is_representative_needs_one_preprojective():
    d = ArcDiagram(Annulus(2), (Arc(0, 1, 0), Arc(1, 0, 0), Arc(2, 0, 0)))
    assert not affine.is_representative(d)
    assert not affine.is_representative(inner_twist(d, 1))


def test_small_members_and_family_key():
    d = ArcDiagram(Annulus(2), (Arc(0, 1, 0), Arc(1, 2, 0), Arc(2, 0, 0)))
    assert affine.small_members(d) == [0]
    twisted = inner_twist(d, 3)
    assert not is_small(twisted)
    assert affine.small_members(twisted) == [-3]
    assert affine.family_key(twisted) == d


@pytest.mark.parametrize('n', range(1, 4))
def test_orbits(n):
    families = set()
    for rep in affine.enumerate_representatives(n):
        members = affine.expand_orbit(rep)
        assert [m.shift for m in members] == list(range(n))
        for member in members:
            found, word = affine.representative_of(member.diagram)
            assert found == rep

            e = member.diagram
            for _ in range(word.outer):
                e = outer_twist(e)
            assert inner_twist(e, word.inner) == rep.diagram
            families.add(member.diagram)
    assert len(families) == constants.FAMILIES[n]


def test_enumerate_families():
    families = list(affine.enumerate_families(2))
    assert len(families) == len(set(families)) == counting.family_count(2)
    assert all(is_small(d) for d in families)


def test_representative_of_twisted_diagram():
    rep = _rep(2, (0, 1), (1, 2), (2, 3))
    d = inner_twist(outer_twist(rep.diagram), 5)
    found, word = affine.representative_of(d)
    assert found == rep
    assert word.outer == 1


def test_representative_of_rejects_non_fundamental():
    with pytest.raises(DiagramError):
        affine.representative_of(ArcDiagram(Annulus(2), (Arc(0, 1, 0),)))


def test_label_with_circled_word_under_a():
    label = affine.label_diagram(_rep(2, (0, 1), (1, 2), (2, 3)))
    assert [w.word for w in label.words()] == ['a', 'aa', 'ab', 'ac', 'b', 'c', 'a']
    assert [w.word for w in label.words() if w.circled] == ['a']
    assert label.circled_count() == 1
    assert str(affine.label_to_path(label)) == 'URRRRRR'
    assert label.to_dict() == {
        'n': 2,
        'A': [{'word': 'a', 'circled': True, 'strand': [1, 2],
               'children': [{'word': 'aa', 'circled': False},
                            {'word': 'ab', 'circled': False},
                            {'word': 'ac', 'circled': False}]},
              {'word': 'b', 'circled': False},
              {'word': 'c', 'circled': False}],
        'B': [{'word': 'a', 'circled': False}],
    }


def test_label_with_circled_word_under_b():
    label = affine.label_diagram(_rep(2, (0, 1), (1, 2), (1, 3)))
    assert [w.circled for w in label.under_a] == [False, False, False]
    assert label.under_b[0].strand == Strand(1, 2)
    assert str(affine.label_to_path(label)) == 'RRRURRR'


def test_label_errors():
    with pytest.raises(affine.LabelError):
        affine.label_diagram(_rep(2, (0, 1), (0, 2), (1, 2)))
    with pytest.raises(affine.LabelError):
        affine.label_diagram(_rep(2, (0, 2), (1, 3), (1, 2)))


def test_representative_without_a_strand_at_zero():
    rep = _rep(2, (1, 2), (1, 3), (2, 3))
    with pytest.raises(affine.LabelError):
        rep.preinjective
    with pytest.raises(affine.LabelError):
        affine.label_diagram(rep)


@pytest.mark.parametrize('n', range(1, 5))
def test_labels_give_distinct_rothe_paths(n):
    paths = set()
    for rep in affine.enumerate_representatives(n):
        path = affine.label_to_path(affine.label_diagram(rep))
        assert affine.in_rothe_paths(path, n - 1), rep.key()
        paths.add(path)
    assert paths == set(affine.all_rothe_paths(n - 1))


@pytest.mark.parametrize('m', range(0, 5))
def test_rothe_path_count(m):
    paths = affine.all_rothe_paths(m)
    assert len(paths) == counting.rothe(4, 3, m)
    assert all(affine.in_rothe_paths(p, m) for p in paths)


def test_in_rothe_paths():
    assert affine.in_rothe_paths(LatticePath('RRRR'), 0)
    assert affine.in_rothe_paths(LatticePath('URRRRRR'), 1)
    assert not affine.in_rothe_paths(LatticePath('RRRRURR'), 1)
    assert not affine.in_rothe_paths(LatticePath('RRRURR'), 1)
