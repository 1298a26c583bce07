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
Exact Catalan, k-Catalan and Rothe numbers, together with the convolution
recursions they satisfy. These are the independent counts every enumerator
in the package is checked against.
"""

import collections

import sympy

__all__ = ('catalan', 'k_catalan', 'rothe', 'exceptional_count', 'family_count',
           'convolution_power', 'fuss_recursion', 'rothe43_recursion',
           'rothe_recursion_check', 'rothe_table', 'ternary_gf_coefficients',
           'two_variable_coefficients', 'RecursionRow')


def _exact(q):
    q = sympy.Rational(q)
    if q.q != 1:
        raise ArithmeticError('{0} is not an integer'.format(q))
    return int(q.p)


def rothe(a, b, n):
    """A_n(a,b) = a/(a+bn) * binom(a+bn, n)"""

    if n < 0:
        raise ValueError('n must be nonnegative, not {0}'.format(n))
    if a < 1 or b < 1:
        raise ValueError('a and b must be positive')
    return _exact(sympy.Rational(a, a + b * n) * sympy.binomial(a + b * n, n))


def catalan(n):
    return rothe(1, 2, n)


def k_catalan(k, n):
    """C_n^k = 1/(kn+1) * binom(kn+1, n)"""

    if k < 1:
        raise ValueError('k must be positive, not {0}'.format(k))
    if n < 0:
        raise ValueError('n must be nonnegative, not {0}'.format(n))
    return _exact(sympy.Rational(1, k * n + 1) * sympy.binomial(k * n + 1, n))


def exceptional_count(n):
    """Number of complete exceptional sets of straight A_n."""
    return rothe(1, 3, n)


def family_count(n):
    """Number of families of complete exceptional collections for straight
    affine A with n outer marked points."""
    if n < 1:
        raise ValueError('at least one outer marked point is needed')
    return n * rothe(4, 3, n - 1)


def _convolve(xs, ys, limit):
    out = [0] * (limit + 1)
    for i, x in enumerate(xs[:limit + 1]):
        if not x:
            continue
        for j, y in enumerate(ys[:limit + 1 - i]):
            out[i + j] += x * y
    return out


def convolution_power(seq, k, limit):
    """Coefficients 0..limit of the k-th convolution power of seq."""
    out = [1] + [0] * limit
    for _ in range(k):
        out = _convolve(out, seq, limit)
    return out


def fuss_recursion(k, max_n):
    """a_0 = 1, a_n = sum over i_1+...+i_k = n-1 of a_{i_1}...a_{i_k}.

    The unique solution is A_n(1,k)."""

    seq = [1]
    for n in range(1, max_n + 1):
        seq.append(convolution_power(seq, k, n - 1)[n - 1])
    return seq


def rothe43_recursion(max_n):
    """A_n(4,3) built from the double sum over two pairs of A(1,3) terms,
    with A_0(4,3) = 1."""

    e = fuss_recursion(3, max_n)
    pairs = convolution_power(e, 2, max_n)
    seq = [1]
    for m in range(1, max_n + 1):
        seq.append(sum(pairs[k] * pairs[m - k] for k in range(m + 1)))
    return seq


RecursionRow = collections.namedtuple('RecursionRow', ('n', 'recursion', 'closed_form', 'ok'))

_recursion_kinds = {
    # kind -> (recursion, closed form)
    'catalan': (lambda m: fuss_recursion(2, m), catalan),
    'ternary': (lambda m: fuss_recursion(3, m), exceptional_count),
    'rothe43': (rothe43_recursion, lambda n: rothe(4, 3, n)),
}


def rothe_recursion_check(kind, max_n):
    """Evaluate a recursion and its closed form side by side for 0..max_n."""

    if max_n < 1:
        raise ValueError('max_n must be at least 1')
    try:
        recursion, closed = _recursion_kinds[kind]
    except KeyError:
        raise ValueError("unknown recursion '{0}'; options are: '{1}'".format(
            kind, "','".join(_recursion_kinds.keys())))

    rows = []
    for n, value in enumerate(recursion(max_n)):
        expected = closed(n)
        rows.append(RecursionRow(n, value, expected, value == expected))
    return rows


def rothe_table(a, b, max_n):
    return [rothe(a, b, n) for n in range(max_n + 1)]


def ternary_gf_coefficients(max_n):
    """Coefficients of g with g = 1 + z g^3, by fixed-point iteration on
    polynomials truncated above degree max_n."""

    z = sympy.Symbol('z')
    modulus = sympy.Poly(z ** (max_n + 1), z)
    g = sympy.Poly(1, z)
    for _ in range(max_n + 1):
        g = (sympy.Poly(1, z) + sympy.Poly(z, z) * g ** 3).rem(modulus)

    coeffs = dict(g.terms())
    return [int(coeffs.get((d,), 0)) for d in range(max_n + 1)]


def two_variable_coefficients(max_total):
    """Coefficients of f(x,y) = 1 + x f(x,y)^2 f(y,x) up to total degree
    max_total, as a dict (n, m) -> coefficient of x^n y^m."""

    x, y = sympy.symbols('x y')

    def truncate(p):
        return sympy.Poly.from_dict({mon: c for mon, c in p.terms() if sum(mon) <= max_total}, x, y)

    f = sympy.Poly(1, x, y)
    for _ in range(max_total + 1):
        swapped = sympy.Poly(f.as_expr().subs({x: y, y: x}, simultaneous=True), x, y)
        f = truncate(sympy.Poly(1, x, y) + sympy.Poly(x, x, y) * truncate(f * f) * swapped)

    table = {}
    for (n, m), c in f.terms():
        table[(n, m)] = int(c)
    return table
