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

import sys
import json
import argparse

import excat.frontend.version

from excat import affine, clusters, counting, strands, typea
from excat.quiver import OrientationVector
from excat.profile import dump_cpu_profiles
from excat.frontend import jsonio, options, render, util, verify
from excat.frontend.util import log, log_exc, emit


def _provenance(args):
    return {'command': args.command, 'arguments': ' '.join(args.argv)}


def _emit_documents(args, docs, table_lines):
    if args.count_only:
        emit(str(len(docs)))
    elif args.format == 'json':
        emit(jsonio.serialize_many(docs))
    else:
        emit('\n'.join(table_lines) if table_lines else '')


def _set_line(modules):
    return ' '.join(str(m) for m in sorted(modules))


def _strand_doc(args, strand_list, eps):
    return jsonio.Document('strandDiagram', strands.StrandDiagram(strands.MarkedLine(eps), tuple(strand_list)),
                           _provenance(args))


def cmd_enumerate(args):
    options.check_size(args.parser, args.family, args.n)
    n = args.n

    if args.family == 'typea':
        eps = OrientationVector.straight_a(n)
        sets = list(typea.enumerate_sets(n))
        docs = [_strand_doc(args, [strands.Strand(m.x, m.y) for m in modules], eps) for modules in sets]
        lines = [_set_line(modules) for modules in sets]
    elif args.family == 'affine':
        if args.families:
            diagrams = list(affine.enumerate_families(n))
        else:
            diagrams = [rep.diagram for rep in affine.enumerate_representatives(n)]
        docs = [jsonio.Document('arcDiagram', d, _provenance(args)) for d in diagrams]
        lines = [str(d) for d in diagrams]
    else:
        triangulations = clusters.small_triangulations(n)
        if args.families:
            classes = clusters.outer_classes(triangulations)
            triangulations = [c[0] for c in classes]
            lines = [' | '.join(str(t) for t in c) for c in classes]
        else:
            lines = [str(t) for t in triangulations]
        docs = [jsonio.Document('triangulation', t, _provenance(args)) for t in triangulations]

    log("Enumerated {0} {1} results for n={2}", len(docs), args.family, n)
    _emit_documents(args, docs, lines)
    return 0


_formulas = {
    'rothe': lambda args, n: counting.rothe(args.a, args.b, n),
    'catalan': lambda args, n: counting.catalan(n),
    'kcatalan': lambda args, n: counting.k_catalan(args.k, n),
    'exceptional': lambda args, n: counting.exceptional_count(n),
    'families': lambda args, n: counting.family_count(n),
    'triangulations': lambda args, n: n * counting.catalan(n),
}


def cmd_count(args):
    if args.recursion:
        rows = counting.rothe_recursion_check(args.recursion, args.n)
        for row in rows:
            emit('{0:3d} {1:>20d} {2:>20d} {3}'.format(row.n, row.recursion, row.closed_form,
                                                     'ok' if row.ok else 'FAIL'))
        return 0 if all(row.ok for row in rows) else 1

    formula = _formulas[args.formula]
    if args.table:
        emit(' '.join(str(formula(args, k)) for k in range(args.n + 1)))
    else:
        emit(str(formula(args, args.n)))
    return 0


def _map_typea(args):
    if args.source:
        doc = options.read_document(args.source, ('strandDiagram', 'tree', 'path'))
        if doc.kind == 'strandDiagram':
            inputs = [frozenset(strands.module_of_strand(s, doc.payload.line) for s in doc.payload.strands)]
        elif doc.kind == 'tree':
            inputs = [typea.tree_to_set(doc.payload)]
        else:
            inputs = [typea.tree_to_set(typea.path_to_tree(doc.payload))]
    else:
        options.check_size(args.parser, 'typea', args.n)
        inputs = list(typea.enumerate_sets(args.n))

    docs = []
    lines = []
    for modules in inputs:
        tree = typea.ternary_tree(modules)
        if args.to == 'tree':
            docs.append(jsonio.Document('tree', tree, _provenance(args)))
            lines.append('{0} -> {1}'.format(_set_line(modules), ' '.join(node.label for node in tree.nodes())))
        else:
            path = typea.tree_to_lattice_path(tree)
            docs.append(jsonio.Document('path', path, _provenance(args)))
            lines.append('{0} -> {1}'.format(_set_line(modules), path))
    return docs, lines


def _map_affine(args):
    if args.source:
        doc = options.read_document(args.source, ('arcDiagram', 'triangulation'))
        reps = [affine.representative_of(doc.payload)[0]]
    else:
        options.check_size(args.parser, 'affine', args.n)
        reps = list(affine.enumerate_representatives(args.n))

    docs = []
    lines = []
    for rep in reps:
        label = affine.label_diagram(rep)
        if args.to == 'label':
            docs.append(jsonio.Document('label', label, _provenance(args)))
            lines.append('{0} -> {1}'.format(rep.diagram, ' '.join(w.word for w in label.words() if w.circled)))
        else:
            path = affine.label_to_path(label)
            docs.append(jsonio.Document('path', path, _provenance(args)))
            lines.append('{0} -> {1}'.format(rep.diagram, path))
    return docs, lines


def _map_cluster(args):
    if args.source:
        doc = options.read_document(args.source, ('triangulation', 'arcDiagram'))
        triangulations = [doc.payload]
    else:
        options.check_size(args.parser, 'clusters', args.n)
        triangulations = clusters.small_triangulations(args.n)

    docs = []
    lines = []
    for t in triangulations:
        cluster = clusters.cluster_of(t)
        docs.append(jsonio.Document('cluster', cluster, _provenance(args)))
        lines.append('{0} -> {1}'.format(t, cluster))
    return docs, lines


_mappers = {'typea': _map_typea, 'affine': _map_affine, 'cluster': _map_cluster}
_targets = {'typea': ('tree', 'path'), 'affine': ('label', 'path'), 'cluster': ('cluster',)}


def cmd_map(args):
    to = args.to or _targets[args.family][0]
    if to not in _targets[args.family]:
        args.parser.error('{0} maps to {1}, not {2}'.format(args.family, ' or '.join(_targets[args.family]), to))
    if not args.source and args.n is None:
        args.parser.error('give either --from or -n')
    args.to = to
    docs, lines = _mappers[args.family](args)
    _emit_documents(args, docs, lines)
    return 0


def _write_document(args, doc):
    if args.format == 'json':
        emit(jsonio.serialize(doc))
    else:
        emit(str(doc.payload))


def cmd_twist(args):
    doc = options.read_document(args.source, ('arcDiagram', 'triangulation'))
    d = doc.payload
    for _ in range(args.outer % d.annulus.n):
        d = strands.outer_twist(d)
    d = strands.inner_twist(d, args.inner)
    _write_document(args, jsonio.Document(doc.kind, d, _provenance(args)))
    return 0


def cmd_orbit(args):
    doc = options.read_document(args.source, ('arcDiagram', 'triangulation'))
    rep, word = affine.representative_of(doc.payload)
    log("Representative reached with {0} outer and {1} inner twists", word.outer, word.inner)
    if not args.expand:
        _write_document(args, jsonio.Document('arcDiagram', rep.diagram, _provenance(args)))
        return 0

    members = affine.expand_orbit(rep)
    docs = [jsonio.Document('arcDiagram', m.diagram, _provenance(args)) for m in members]
    lines = ['{0} {1}'.format(m.shift, m.diagram) for m in members]
    args.count_only = False
    _emit_documents(args, docs, lines)
    return 0


def cmd_verify(args):
    options.check_size(args.parser, 'verify', args.n)
    report = verify.verify(args.area, args.n)
    if args.format == 'json':
        emit(json.dumps(report.to_dict(), sort_keys=True, indent=1))
    else:
        emit('\n'.join(report.lines()))
    ok = report.ok
    report.log_and_reset()
    return 0 if ok else 1


def cmd_render(args):
    doc = options.read_document(args.source)
    emit(render.render(doc, args.format))
    return 0


def make_parser():
    parser = argparse.ArgumentParser(prog='excat',
                                     description="Exceptional collections, clusters and triangulations "
                                                 "for straight A_n and affine A_n.")
    parser.add_argument('--no-log-timestamps',
                        help="Do not prefix log lines with the time.",
                        action='store_true',
                        default=False)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('enumerate', help="Enumerate exceptional sets, family representatives or triangulations.")
    p.add_argument('family', choices=('typea', 'affine', 'clusters'))
    p.add_argument('--families',
                   help="affine: every family, not just one per outer class; clusters: group into outer classes.",
                   action='store_true',
                   default=False)
    options.make_size_group(p)
    options.make_output_group(p)
    p.set_defaults(handler=cmd_enumerate, parser=p)

    p = commands.add_parser('count', help="Evaluate a closed-form count or check a recursion.")
    p.add_argument('--formula', choices=sorted(_formulas), default='rothe')
    p.add_argument('--recursion', choices=('catalan', 'ternary', 'rothe43'), default=None,
                   help="Check a recursion against its closed form for 0..n.")
    p.add_argument('--table', help="Print values for 0..n.", action='store_true', default=False)
    p.add_argument('-a', type=options.positive_int, default=1)
    p.add_argument('-b', type=options.positive_int, default=2)
    p.add_argument('-k', type=options.positive_int, default=3)
    p.add_argument('-n', type=options.nonnegative_int, required=True)
    p.set_defaults(handler=cmd_count, parser=p)

    p = commands.add_parser('map', help="Apply a bijection.")
    p.add_argument('family', choices=sorted(_mappers))
    p.add_argument('--to', choices=('tree', 'path', 'label', 'cluster'), default=None)
    options.make_size_group(p, required=False)
    options.make_input_group(p)
    options.make_output_group(p)
    p.set_defaults(handler=cmd_map, parser=p)

    p = commands.add_parser('twist', help="Apply inner and outer Dehn twists to an arc diagram.")
    p.add_argument('--inner', type=options.signed_int, default=0,
                   help="Clockwise inner twists (negative for counterclockwise).")
    p.add_argument('--outer', type=options.nonnegative_int, default=0,
                   help="Clockwise outer twists by one marked point.")
    options.make_input_group(p, required=True)
    p.add_argument('--format', choices=('json', 'table'), default='json')
    p.set_defaults(handler=cmd_twist, parser=p)

    p = commands.add_parser('orbit', help="Find the representative of an arc diagram's outer class.")
    p.add_argument('--expand', help="List all n families of the class.", action='store_true', default=False)
    options.make_input_group(p, required=True)
    p.add_argument('--format', choices=('json', 'table'), default='json')
    p.set_defaults(handler=cmd_orbit, parser=p)

    p = commands.add_parser('verify', help="Run the cross-checks.")
    p.add_argument('area', choices=verify.AREAS)
    options.make_size_group(p, required=False, default=3)
    p.add_argument('--format', choices=('table', 'json'), default='table')
    p.set_defaults(handler=cmd_verify, parser=p)

    p = commands.add_parser('render', help="Draw a document as SVG or TikZ.")
    options.make_input_group(p, required=True)
    p.add_argument('--format', choices=('svg', 'tikz'), default='svg')
    p.set_defaults(handler=cmd_render, parser=p)

    return parser


def run_cli(argv=None):
    """Run one command; returns the exit status."""

    if argv is None:
        argv = sys.argv[1:]
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        args.argv = list(argv)

        util.suppress_log_timestamps = args.no_log_timestamps
        log("excat {version} starting up", version=excat.frontend.version.CLIENT_VERSION)
        return args.handler(args)
    except SystemExit as e:
        return 0 if e.code is None else e.code
    except KeyboardInterrupt:
        log("Exiting on SIGINT")
        return 1
    except (ValueError, OSError) as e:
        log("Exiting on validation failure: {0}", e)
        return 1
    except Exception:
        log_exc("Exiting on exception")
        return 1
    finally:
        dump_cpu_profiles()


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
