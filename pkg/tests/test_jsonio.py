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

import json

import pytest

from excat import affine, clusters, constants, typea
from excat.quiver import OrientationVector, IntervalModule, WindingModule
from excat.strands import Strand, Arc, Annulus, ArcDiagram, MarkedLine, StrandDiagram
from excat.frontend import jsonio


def _roundtrip(kind, payload):
    doc = jsonio.Document(kind, payload, {'command': 'test'})
    text = jsonio.serialize(doc)
    assert text.endswith('\n')
    back = jsonio.parse(text)
    assert back == doc
    return json.loads(text)


def test_arc_diagram_document():
    d = ArcDiagram(Annulus(3), constants.TRIANGULATION_3)
    o = _roundtrip('triangulation', d)
    assert o['schemaVersion'] == jsonio.SCHEMA_VERSION
    assert o['payload']['n'] == 3
    assert {'from': 0, 'to': 1, 'lambda': 0, 'fromSide': 'inner', 'toSide': 'outer'} in o['payload']['arcs']
    assert 'version' in o['provenance']


def test_strand_diagram_document():
    d = StrandDiagram(MarkedLine(OrientationVector.straight_a(2)), (Strand(0, 1), Strand(0, 2)))
    o = _roundtrip('strandDiagram', d)
    assert o['payload']['quiver'] == {'kind': 'A', 'epsilon': ['+', '+', '+']}


def test_tree_document():
    tree = typea.tree_from_labels(constants.TREE_LABELS_15)
    o = _roundtrip('tree', tree)
    assert o['payload']['label'] == 'R'
    assert o['payload']['strand'] == [0, 11]


def test_path_and_label_documents():
    rep = affine.FamilyRepresentative(2, (Strand(0, 1), Strand(1, 2), Strand(2, 3)))
    label = affine.label_diagram(rep)
    _roundtrip('label', label)
    o = _roundtrip('path', affine.label_to_path(label))
    assert o['payload'] == 'URRRRRR'


def test_cluster_document():
    cluster = clusters.Cluster(3, constants.TRIANGULATION_3_CLUSTER)
    o = _roundtrip('cluster', cluster)
    assert {'shifted': True, 'vertex': 2} in o['payload']['summands']
    assert {'shifted': False, 'form': 'winding', 'i': 2, 'j': 3, 'l': 0} in o['payload']['summands']


def test_modules():
    assert jsonio.decode_module(jsonio.encode_module(IntervalModule(1, 3))) == IntervalModule(1, 3)
    assert jsonio.decode_module(jsonio.encode_module(WindingModule(2, 4, 1))) == WindingModule(2, 4, 1)
    with pytest.raises(jsonio.DocumentError):
        jsonio.decode_module({'form': 'band'})


def test_arc_sides_are_checked():
    assert jsonio.decode_arc({'from': 2, 'to': 0, 'lambda': 0}) == Arc(2, 0, 0)
    with pytest.raises(jsonio.DocumentError):
        jsonio.decode_arc({'from': 2, 'to': 0, 'lambda': 0, 'fromSide': 'inner'})


def test_serialize_many():
    docs = [jsonio.Document('path', typea.LatticePath(p)) for p in ('R', 'URRR')]
    o = json.loads(jsonio.serialize_many(docs))
    assert [d['payload'] for d in o] == ['R', 'URRR']


@pytest.mark.parametrize('text', (
    'not json',
    '[1, 2]',
    '{"schemaVersion": 2, "kind": "path", "payload": "R"}',
    '{"schemaVersion": 1, "kind": "polygon", "payload": "R"}',
    '{"schemaVersion": 1, "kind": "arcDiagram", "payload": {"arcs": []}}',
    '{"schemaVersion": 1, "kind": "path", "payload": "UXR"}',
))
def test_bad_documents(text):
    with pytest.raises(jsonio.DocumentError):
        jsonio.parse(text)


def test_unknown_kind():
    with pytest.raises(jsonio.DocumentError):
        jsonio.Document('polygon', None)


def test_provenance_is_normalized():
    doc = jsonio.Document('path', typea.LatticePath('R'), {'b': '2', 'a': '1'})
    assert doc.provenance == (('a', '1'), ('b', '2'))


@pytest.mark.parametrize('n', (1, 2, 3, pytest.param(4, marks=pytest.mark.slow)))
def test_enumerations_survive_a_round_trip(n):
    line = MarkedLine(OrientationVector.straight_a(n))
    for modules in typea.enumerate_sets(n):
        _roundtrip('strandDiagram', StrandDiagram(line, tuple(Strand(m.x, m.y) for m in modules)))
        tree = typea.ternary_tree(modules)
        _roundtrip('tree', tree)
        _roundtrip('path', typea.tree_to_lattice_path(tree))
    for rep in affine.enumerate_representatives(n):
        _roundtrip('arcDiagram', rep.diagram)
        label = affine.label_diagram(rep)
        _roundtrip('label', label)
        _roundtrip('path', affine.label_to_path(label))
    for t in clusters.small_triangulations(n):
        _roundtrip('triangulation', t)
        _roundtrip('cluster', clusters.cluster_of(t))
