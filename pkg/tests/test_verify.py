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

from excat.frontend import verify
from excat.frontend.stats import Report


@pytest.mark.parametrize('area', ('golden', 'counting', 'typea', 'affine', 'clusters'))
def test_areas_pass(area):
    report = verify.verify(area, 3)
    assert report.checks
    assert report.ok, report.lines()


def test_all_runs_every_area():
    report = verify.verify('all', 2)
    names = [c.name for c in report.checks]
    assert names[0] == 'golden tables'
    assert len(names) == 1 + sum(len(checks) for checks in verify._checks.values())
    assert report.ok, report.lines()


@pytest.mark.slow
@pytest.mark.parametrize('n', (4, 5))
def test_all_larger(n):
    report = verify.verify('all', n)
    assert report.ok, report.lines()


def test_report_records_failures():
    report = Report()
    report.run('passes', lambda: True)
    report.run('fails with detail', lambda: (False, 'wrong'))
    report.run('raises', lambda: 1 // 0)

    assert not report.ok
    assert [c.name for c in report.failures()] == ['fails with detail', 'raises']
    assert report.failures()[1].detail.startswith('ZeroDivisionError')
    assert report.to_dict()['checks'][1] == {'name': 'fails with detail', 'ok': False, 'detail': 'wrong'}
    assert report.lines()[0].startswith('ok ')

    report.log_and_reset()
    assert report.checks == []
