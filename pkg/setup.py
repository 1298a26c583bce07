#!/usr/bin/env python3

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

from setuptools import setup

CLIENT_VERSION = "unknown"
exec(open('excat/frontend/version.py').read())

setup(name='excat',
      description='Exceptional collections, clusters and triangulations for type A and affine type A quivers',
      version=CLIENT_VERSION,
      author='the excat developers',
      packages=['excat', 'excat.frontend'],
      install_requires=['sympy', 'networkx'],
      extras_require={'test': ['pytest']},
      entry_points={
          'console_scripts': [
              'excat = excat.frontend.cli:main'
          ]}
      )
