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
Verification report gathering.
"""

import time
import collections

from excat.frontend.util import log

Check = collections.namedtuple('Check', ('name', 'ok', 'detail', 'elapsed'))


class Report:
    def __init__(self):
        self.reset()

    def reset(self, now=None):
        if now is None:
            now = time.monotonic()
        self.start = now
        self.checks = []

    def run(self, name, fn, *args, **kwargs):
        """Run one check. fn returns a bool or (bool, detail); an exception
        counts as a failure with its message as the detail."""

        started = time.monotonic()
        try:
            result = fn(*args, **kwargs)
        except Exception as e:
            result = (False, '{0}: {1}'.format(type(e).__name__, e))
        if isinstance(result, tuple):
            ok, detail = result
        else:
            ok, detail = result, ''
        check = Check(name, bool(ok), detail, time.monotonic() - started)
        self.checks.append(check)
        return check

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def lines(self):
        return ['{0:4s} {1:50s} {2:7.2f}s {3}'.format('ok' if c.ok else 'FAIL', c.name, c.elapsed, c.detail)
                for c in self.checks]

    def to_dict(self):
        return {'ok': self.ok,
                'checks': [{'name': c.name, 'ok': c.ok, 'detail': c.detail} for c in self.checks]}

    def log_and_reset(self):
        now = time.monotonic()
        elapsed = now - self.start

        passed = len(self.checks) - len(self.failures())
        log('Verify:   {0} of {1} checks passed in {2:.1f}s', passed, len(self.checks), elapsed)
        for c in self.failures():
            log('Failed:   {0} {1}', c.name, c.detail)
        self.reset(now)
