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
import argparse

from excat.frontend import jsonio

# sizes above these take too long to enumerate on a desk
_size_limits = {
    'typea': 9,
    'affine': 7,
    'clusters': 8,
    'verify': 6,
}


def positive_int(s):
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError('{0} is not an integer'.format(s))
    if n < 1:
        raise argparse.ArgumentTypeError('{0} must be at least 1'.format(s))
    return n


def nonnegative_int(s):
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError('{0} is not an integer'.format(s))
    if n < 0:
        raise argparse.ArgumentTypeError('{0} must not be negative'.format(s))
    return n


def signed_int(s):
    try:
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError('{0} is not an integer'.format(s))


def check_size(parser, family, n):
    """Reject sizes past the enumeration limit for a family, as a usage error."""

    limit = _size_limits.get(family)
    if limit is not None and n is not None and n > limit:
        parser.error('-n {0} is too large for {1} (at most {2})'.format(n, family, limit))


def make_size_group(parser, required=True, default=None):
    size = parser.add_argument_group('Size')
    size.add_argument('-n',
                      help="Size: vertices of A_n, or outer marked points of the annulus.",
                      type=positive_int,
                      required=required,
                      default=default)
    return size


def make_output_group(parser, formats=('table', 'json')):
    output = parser.add_argument_group('Output')
    output.add_argument('--format',
                        help="Output format.",
                        choices=formats,
                        default=formats[0])
    output.add_argument('--count-only',
                        help="Print only the number of results.",
                        action='store_true',
                        default=False)
    output.add_argument('--seed-order',
                        help="Enumeration order. Only the canonical order is implemented.",
                        choices=('canonical',),
                        default='canonical')
    return output


def make_input_group(parser, required=False):
    inputs = parser.add_argument_group('Input')
    inputs.add_argument('--from',
                        dest='source',
                        help="JSON document to read; '-' reads standard input.",
                        required=required,
                        metavar='FILE')
    return inputs


def read_document(source, kinds=None):
    """Load a document. Problems with the content raise DocumentError."""

    if source == '-':
        text = sys.stdin.read()
    else:
        with open(source, encoding='utf-8') as f:
            text = f.read()
    doc = jsonio.parse(text)
    if kinds is not None and doc.kind not in kinds:
        raise jsonio.DocumentError('expected a {0} document, got {1}'.format(' or '.join(kinds), doc.kind))
    return doc
