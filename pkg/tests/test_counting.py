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

from excat import counting, constants, typea


@pytest.mark.parametrize('n, expected', enumerate((1, 1, 2, 5, 14, 42, 132)))
def test_catalan(n, expected):
    assert counting.catalan(n) == expected
    assert counting.k_catalan(2, n) == expected


@pytest.mark.parametrize('n, expected', enumerate(constants.EXCEPTIONAL_SETS))
def test_exceptional_count(n, expected):
    assert counting.exceptional_count(n) == expected
    assert counting.k_catalan(3, n) == expected


@pytest.mark.parametrize('n', sorted(constants.FAMILIES))
def test_family_count(n):
    assert counting.family_count(n) == constants.FAMILIES[n]
    assert counting.rothe(4, 3, n - 1) == constants.OUTER_CLASSES[n]


def test_rothe_small_values():
    assert counting.rothe_table(4, 3, 4) == [1, 4, 18, 88, 455]
    assert counting.rothe(2, 3, 1) == 2


@pytest.mark.parametrize('kind', ('catalan', 'ternary', 'rothe43'))
def test_recursions_match_closed_forms(kind):
    rows = counting.rothe_recursion_check(kind, 8)
    assert [row.n for row in rows] == list(range(9))
    assert all(row.ok for row in rows)


def test_rothe43_recursion_values():
    assert counting.rothe43_recursion(5) == [1, 4, 18, 88, 455, 2448]


def test_convolution_power():
    assert counting.convolution_power([1, 1, 2, 5], 2, 3) == [1, 2, 5, 14]


def test_ternary_generating_function():
    assert counting.ternary_gf_coefficients(7) == list(constants.EXCEPTIONAL_SETS)


def test_two_variable_generating_function():
    coefficients = counting.two_variable_coefficients(5)
    table = typea.N_table(5)
    for key, value in table.items():
        assert coefficients.get(key, 0) == value


@pytest.mark.parametrize('call', (
    lambda: counting.rothe(0, 3, 2),
    lambda: counting.rothe(1, 3, -1),
    lambda: counting.k_catalan(0, 2),
    lambda: counting.family_count(0),
    lambda: counting.rothe_recursion_check('pentagonal', 4),
    lambda: counting.rothe_recursion_check('catalan', 0),
))
def test_bad_arguments(call):
    with pytest.raises(ValueError):
        call()
