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

import os
"""
Optional CPU accounting for the enumerators.

Set EXCAT_CPU_PROFILE=1 to wrap every @trackcpu function and print a table
of calls and process time to stderr when the command line tool exits.
"""

import os
import sys
import time
import functools
import dataclasses

__all__ = ('CpuProfile', 'trackcpu', 'dump_cpu_profiles')


@dataclasses.dataclass
class _Entry:
    name: str
    calls: int = 0
    seconds: float = 0.0


class CpuProfile:
    def __init__(self, enabled):
        self.enabled = enabled
        self.entries = []

    def track(self, f, name=None):
        if not self.enabled:
            return f

        entry = _Entry(name or '{0}.{1}'.format(f.__module__, f.__qualname__))
        self.entries.append(entry)

        @functools.wraps(f)
        def tracked(*args, **kwargs):
            start = time.process_time()
            try:
                return f(*args, **kwargs)
            finally:
                entry.calls += 1
                entry.seconds += time.process_time() - start

        return tracked

    def report(self):
        """Rows for the functions that ran, slowest first."""

        rows = ['{0:4s} {1:40s} {2:>8s} {3:>9s} {4:>9s}'.format('#', 'Enumerator', 'Calls', 'Total(s)', 'Each(ms)')]
        ran = sorted((e for e in self.entries if e.calls), key=lambda e: e.seconds, reverse=True)
        for rank, e in enumerate(ran, 1):
            rows.append('{0:4d} {1:40s} {2:8d} {3:9.3f} {4:9.2f}'.format(
                rank, e.name, e.calls, e.seconds, e.seconds * 1e3 / e.calls))
        return rows


_profile = CpuProfile(bool(int(os.environ.get('EXCAT_CPU_PROFILE', '0'))))


def trackcpu(f):
    return _profile.track(f)


def dump_cpu_profiles():
    if not _profile.enabled:
        return
    for row in _profile.report():
        print(row, file=sys.stderr)
    sys.stderr.flush()
