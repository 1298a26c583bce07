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
Known values the enumerations are checked against.
"""

from excat.quiver import WindingModule
from excat.strands import Arc
from excat.clusters import ShiftedProjective

# complete exceptional sets of straight A_n, n = 0..7
EXCEPTIONAL_SETS = (1, 1, 3, 12, 55, 273, 1428, 7752)

# outer classes of families for n outer points, n = 1..6
OUTER_CLASSES = {1: 1, 2: 4, 3: 18, 4: 88, 5: 455, 6: 2448}

# families of complete exceptional collections, n times the above
FAMILIES = {n: n * count for n, count in OUTER_CLASSES.items()}

# small triangulations of the annulus, n * C_n
SMALL_TRIANGULATIONS = {1: 1, 2: 4, 3: 15, 4: 56, 5: 210, 6: 792}

# triangulations of a convex m-gon
POLYGON_TRIANGULATIONS = {3: 1, 4: 2, 5: 5, 6: 14, 7: 42}

# the 24_6 string over 1->2->3->4, 1->4: dimension vector and matrices keyed by arrow label
STRING_24_6 = WindingModule(2, 4, 1)
STRING_24_6_DIMS = (1, 1, 2, 2)
STRING_24_6_MATRICES = {
    1: [[1]],
    2: [[1], [0]],
    3: [[1, 0], [0, 1]],
    4: [[0], [1]],
}

# a triangulation with three outer points and its cluster
TRIANGULATION_3 = (Arc(0, 1, 0), Arc(1, 0, 0), Arc(3, 0, 0), Arc(1, 3, 0))
TRIANGULATION_3_CLUSTER = (WindingModule(4, 1, 0), WindingModule(2, 3, 0),
                           ShiftedProjective(2), ShiftedProjective(4))

# its outer orbit, in twist order
TRIANGULATION_3_ORBIT = (
    TRIANGULATION_3,
    (Arc(0, 2, 0), Arc(2, 0, 0), Arc(0, 1, 0), Arc(2, 1, 0)),
    (Arc(0, 3, 0), Arc(3, 0, 0), Arc(0, 2, 0), Arc(3, 2, 0)),
)

# a complete exceptional set of straight A_15 given by its tree labels; the root is c(0,11)
TREE_LABELS_15 = ('R', 'A', 'Aa', 'Ab', 'Abb', 'Ac', 'B', 'Ba', 'Bb', 'Bbb', 'Bc', 'C', 'Cb', 'Cbc', 'Cc')
TREE_15_RELATIVE_INJECTIVES = frozenset(('R', 'A', 'Aa', 'Ac', 'Bb', 'C', 'Cc', 'Abb'))
TREE_15_RELATIVE_PROJECTIVES = frozenset(('Ab', 'B', 'Ba', 'Bbb', 'Bc', 'Cb', 'Cbc', 'R', 'C', 'Cc'))

# complete sets of straight A_{n+m} with n relative injectives, keyed (n, m)
N_VALUES = {(1, 0): 1, (2, 0): 2, (1, 1): 1}
