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

from excat import affine, constants, typea
from excat.strands import Strand, Annulus, ArcDiagram, inner_twist, outer_twist
from excat.frontend import jsonio
from excat.frontend.cli import run_cli


def _run(capsys, *argv):
    status = run_cli(['--no-log-timestamps'] + list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def _write(tmp_path, kind, payload, name='doc.json'):
    path = tmp_path / name
    path.write_text(jsonio.serialize(jsonio.Document(kind, payload)), encoding='utf-8')
    return str(path)


def _rep():
    return affine.FamilyRepresentative(2, (Strand(0, 1), Strand(1, 2), Strand(2, 3)))


@pytest.mark.parametrize('family, n, expected', (
    ('typea', 3, 12),
    ('typea', 5, 273),
    ('affine', 3, 18),
    ('clusters', 3, 15),
))
def test_enumerate_count_only(capsys, family, n, expected):
    status, out, err = _run(capsys, 'enumerate', family, '-n', str(n), '--count-only')
    assert status == 0
    assert out == '{0}\n'.format(expected)
    assert 'starting up' in err


def test_enumerate_families(capsys):
    status, out, _ = _run(capsys, 'enumerate', 'affine', '-n', '3', '--families', '--count-only')
    assert status == 0
    assert int(out) == constants.FAMILIES[3]

    status, out, _ = _run(capsys, 'enumerate', 'clusters', '-n', '3', '--families')
    assert status == 0
    assert len(out.splitlines()) == 5


def test_enumerate_json(capsys):
    status, out, _ = _run(capsys, 'enumerate', 'typea', '-n', '2', '--format', 'json')
    assert status == 0
    docs = json.loads(out)
    assert len(docs) == 3
    assert {d['kind'] for d in docs} == {'strandDiagram'}
    assert docs[0]['provenance']['command'] == 'enumerate'


def test_enumerate_table(capsys):
    status, out, _ = _run(capsys, 'enumerate', 'typea', '-n', '1')
    assert status == 0
    assert out == 'M0,1\n'


def test_enumerate_size_limit(capsys):
    status, _, err = _run(capsys, 'enumerate', 'affine', '-n', '40', '--count-only')
    assert status == 2
    assert 'too large' in err


@pytest.mark.parametrize('argv, expected', (
    (('--formula', 'rothe', '-a', '4', '-b', '3', '-n', '5'), '2448'),
    (('--formula', 'catalan', '-n', '6'), '132'),
    (('--formula', 'kcatalan', '-k', '3', '-n', '4'), '55'),
    (('--formula', 'families', '-n', '4'), '352'),
    (('--formula', 'triangulations', '-n', '4'), '56'),
    (('--formula', 'exceptional', '-n', '4', '--table'), '1 1 3 12 55'),
))
def test_count(capsys, argv, expected):
    status, out, _ = _run(capsys, 'count', *argv)
    assert status == 0
    assert out.strip() == expected


def test_count_recursion(capsys):
    status, out, _ = _run(capsys, 'count', '--recursion', 'rothe43', '-n', '5')
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert all(line.endswith('ok') for line in lines)
    assert lines[-1].split()[1] == '2448'


def test_count_bad_value(capsys):
    status, _, err = _run(capsys, 'count', '--formula', 'families', '-n', '0')
    assert status == 1
    assert 'validation failure' in err


def test_map_typea(capsys):
    status, out, _ = _run(capsys, 'map', 'typea', '-n', '1', '--to', 'path')
    assert status == 0
    assert out == 'M0,1 -> URRR\n'

    status, out, _ = _run(capsys, 'map', 'typea', '-n', '1')
    assert out == 'M0,1 -> R\n'


def test_map_typea_from_tree(capsys, tmp_path):
    tree = typea.tree_from_labels(constants.TREE_LABELS_15)
    source = _write(tmp_path, 'tree', tree)
    status, out, _ = _run(capsys, 'map', 'typea', '--from', source, '--to', 'path', '--format', 'json')
    assert status == 0
    (doc,) = json.loads(out)
    assert doc['payload'] == str(typea.tree_to_lattice_path(tree))


def test_map_affine(capsys, tmp_path):
    source = _write(tmp_path, 'arcDiagram', _rep().diagram)
    status, out, _ = _run(capsys, 'map', 'affine', '--from', source, '--to', 'path')
    assert status == 0
    assert out.strip().endswith('-> URRRRRR')

    status, out, _ = _run(capsys, 'map', 'affine', '-n', '3', '--to', 'label', '--count-only')
    assert status == 0
    assert out == '18\n'


def test_map_cluster(capsys, tmp_path):
    source = _write(tmp_path, 'triangulation', ArcDiagram(Annulus(3), constants.TRIANGULATION_3))
    status, out, _ = _run(capsys, 'map', 'cluster', '--from', source)
    assert status == 0
    assert out.strip().endswith('-> (2,3;0) + (4,1;0) + P2[1] + P4[1]')


@pytest.mark.parametrize('argv', (
    ('map', 'typea', '-n', '2', '--to', 'label'),
    ('map', 'affine'),
))
def test_map_usage_errors(capsys, argv):
    status, _, _ = _run(capsys, *argv)
    assert status == 2


def test_twist(capsys, tmp_path):
    d = _rep().diagram
    source = _write(tmp_path, 'arcDiagram', d)
    status, out, _ = _run(capsys, 'twist', '--from', source, '--outer', '1', '--inner', '-2')
    assert status == 0
    assert jsonio.parse(out).payload == inner_twist(outer_twist(d), -2)


def test_orbit(capsys, tmp_path):
    rep = _rep()
    source = _write(tmp_path, 'arcDiagram', inner_twist(outer_twist(rep.diagram), 5))
    status, out, err = _run(capsys, 'orbit', '--from', source)
    assert status == 0
    assert jsonio.parse(out).payload == rep.diagram
    assert 'Representative reached with 1 outer' in err

    status, out, _ = _run(capsys, 'orbit', '--from', source, '--expand', '--format', 'table')
    assert status == 0
    assert len(out.splitlines()) == 2


def test_orbit_rejects_non_fundamental(capsys, tmp_path):
    source = _write(tmp_path, 'arcDiagram', ArcDiagram(Annulus(2), ()))
    status, _, err = _run(capsys, 'orbit', '--from', source)
    assert status == 1
    assert 'not fundamental' in err


def test_render(capsys, tmp_path):
    source = _write(tmp_path, 'arcDiagram', _rep().diagram)
    status, out, _ = _run(capsys, 'render', '--from', source, '--format', 'tikz')
    assert status == 0
    assert out.startswith('\\begin{tikzpicture}')


def test_missing_input(capsys, tmp_path):
    status, _, err = _run(capsys, 'render', '--from', str(tmp_path / 'absent.json'))
    assert status == 1


def test_bad_document(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"schemaVersion": 9}', encoding='utf-8')
    status, _, err = _run(capsys, 'render', '--from', str(path))
    assert status == 1
    assert 'schema version' in err


def test_verify_golden(capsys):
    status, out, err = _run(capsys, 'verify', 'golden')
    assert status == 0
    assert out.startswith('ok')
    assert 'Verify:' in err


def test_verify_counting_json(capsys):
    status, out, _ = _run(capsys, 'verify', 'counting', '-n', '4', '--format', 'json')
    assert status == 0
    report = json.loads(out)
    assert report['ok']
    assert len(report['checks']) == 2


@pytest.mark.slow
def test_verify_all(capsys):
    status, out, _ = _run(capsys, 'verify', 'all', '-n', '4')
    assert status == 0
    assert 'FAIL' not in out


def test_help(capsys):
    status, out, _ = _run(capsys, '--help')
    assert status == 0
    assert 'enumerate' in out
