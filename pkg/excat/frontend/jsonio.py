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
JSON documents: a versioned envelope around one diagram, tree, path,
label or cluster.
"""

import json
import dataclasses

import excat.frontend.version

from excat.quiver import QuiverError, QuiverKind, OrientationVector, IntervalModule, WindingModule
from excat.strands import Strand, Arc, Annulus, ArcDiagram, MarkedLine, StrandDiagram
from excat.typea import TernaryTree, LatticePath
from excat.affine import Label, LabelWord
from excat.clusters import Cluster, ShiftedProjective

__all__ = ('SCHEMA_VERSION', 'KINDS', 'DocumentError', 'Document', 'serialize', 'serialize_many', 'parse',
           'encode_module', 'decode_module', 'encode_arc', 'decode_arc')

SCHEMA_VERSION = 1
KINDS = ('strandDiagram', 'arcDiagram', 'triangulation', 'tree', 'path', 'label', 'cluster')


class DocumentError(QuiverError):
    pass


@dataclasses.dataclass(frozen=True)
class Document:
    kind: str
    payload: object
    provenance: tuple = ()
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DocumentError('unknown document kind {0!r}'.format(self.kind))
        if isinstance(self.provenance, dict):
            object.__setattr__(self, 'provenance', tuple(sorted(self.provenance.items())))


def encode_module(m):
    if isinstance(m, IntervalModule):
        return {'form': 'interval', 'x': m.x, 'y': m.y}
    if isinstance(m, WindingModule):
        return {'form': 'winding', 'i': m.i, 'j': m.j, 'l': m.l}
    raise DocumentError('cannot encode {0!r}'.format(m))


def decode_module(o):
    if o.get('form') == 'interval':
        return IntervalModule(o['x'], o['y'])
    if o.get('form') == 'winding':
        return WindingModule(o['i'], o['j'], o['l'])
    raise DocumentError('unknown module form {0!r}'.format(o.get('form')))


def _side(point):
    return 'inner' if point == 0 else 'outer'


def encode_arc(arc):
    return {'from': arc.start, 'to': arc.end, 'lambda': arc.lam,
            'fromSide': _side(arc.start), 'toSide': _side(arc.end)}


def decode_arc(o):
    arc = Arc(o['from'], o['to'], o['lambda'])
    if 'fromSide' in o and o['fromSide'] != _side(o['from']):
        raise DocumentError('point {0} is not on the {1} circle'.format(o['from'], o['fromSide']))
    if 'toSide' in o and o['toSide'] != _side(o['to']):
        raise DocumentError('point {0} is not on the {1} circle'.format(o['to'], o['toSide']))
    return arc


def _encode_quiver(eps):
    return {'kind': eps.kind.value, 'epsilon': list(eps.entries)}


def _decode_quiver(o):
    return OrientationVector(QuiverKind(o['kind']), tuple(o['epsilon']))


def _decode_tree(o, label='R'):
    if o is None:
        return TernaryTree(label=label)
    label = o['label']
    kids = {slot: _decode_tree(o[slot], slot.upper() if label == 'R' else label + slot) for slot in 'abc'}
    return TernaryTree(label=label, strand=Strand(*o['strand']), **kids)


def _decode_word(o):
    if not o['circled']:
        return LabelWord(o['word'])
    return LabelWord(o['word'], Strand(*o['strand']), tuple(_decode_word(c) for c in o['children']))


def _encode_summand(x):
    if isinstance(x, ShiftedProjective):
        return {'shifted': True, 'vertex': x.vertex}
    return dict(encode_module(x), shifted=False)


def _decode_summand(o):
    if o.get('shifted'):
        return ShiftedProjective(o['vertex'])
    return decode_module(o)


def _encode_payload(kind, x):
    if kind == 'strandDiagram':
        return {'quiver': _encode_quiver(x.line.orientation), 'strands': [{'i': s.i, 'j': s.j} for s in x.strands]}
    if kind in ('arcDiagram', 'triangulation'):
        return {'n': x.annulus.n, 'arcs': [encode_arc(a) for a in x.arcs]}
    if kind == 'tree':
        return x.to_dict()
    if kind == 'path':
        return x.steps
    if kind == 'label':
        return x.to_dict()
    return {'n': x.n, 'summands': [_encode_summand(s) for s in x.summands]}


def _decode_payload(kind, o):
    if kind == 'strandDiagram':
        line = MarkedLine(_decode_quiver(o['quiver']))
        return StrandDiagram(line, tuple(Strand(s['i'], s['j']) for s in o['strands']))
    if kind in ('arcDiagram', 'triangulation'):
        return ArcDiagram(Annulus(o['n']), tuple(decode_arc(a) for a in o['arcs']))
    if kind == 'tree':
        return _decode_tree(o)
    if kind == 'path':
        return LatticePath(o)
    if kind == 'label':
        return Label(o['n'], tuple(_decode_word(w) for w in o['A']), tuple(_decode_word(w) for w in o['B']))
    return Cluster(o['n'], tuple(_decode_summand(s) for s in o['summands']))


def _envelope(doc):
    return {'schemaVersion': doc.schema_version,
            'kind': doc.kind,
            'payload': _encode_payload(doc.kind, doc.payload),
            'provenance': dict(doc.provenance, version=excat.frontend.version.CLIENT_VERSION)}


def serialize(doc):
    """UTF-8 JSON text with sorted keys and a trailing newline."""
    return json.dumps(_envelope(doc), sort_keys=True, indent=1, ensure_ascii=False) + '\n'


def serialize_many(docs):
    return json.dumps([_envelope(doc) for doc in docs], sort_keys=True, indent=1, ensure_ascii=False) + '\n'


def parse(text):
    try:
        o = json.loads(text)
    except ValueError as e:
        raise DocumentError('not a JSON document: {0}'.format(e))
    if not isinstance(o, dict):
        raise DocumentError('a document is a JSON object')

    version = o.get('schemaVersion')
    if version != SCHEMA_VERSION:
        raise DocumentError('unsupported schema version {0!r}'.format(version))
    kind = o.get('kind')
    if kind not in KINDS:
        raise DocumentError('unknown document kind {0!r}'.format(kind))

    provenance = dict(o.get('provenance', {}))
    provenance.pop('version', None)
    try:
        payload = _decode_payload(kind, o['payload'])
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError('malformed {0} payload: {1!r}'.format(kind, e))
    return Document(kind=kind, payload=payload, provenance=provenance, schema_version=version)
