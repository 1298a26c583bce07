# -*- python -*-

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
import time
import traceback


__all__ = ('log', 'log_exc', 'emit')


suppress_log_timestamps = False


def _stamp(msg, *args, **kwargs):
    text = msg.format(*args, **kwargs)
    if suppress_log_timestamps:
        return (text,)
    return (time.ctime(), text)


def log(msg, *args, **kwargs):
    print(*_stamp(msg, *args, **kwargs), file=sys.stderr)
    sys.stderr.flush()


def log_exc(msg, *args, **kwargs):
    print(*_stamp(msg, *args, **kwargs), file=sys.stderr)
    traceback.print_exc(file=sys.stderr)
    sys.stderr.flush()


def emit(text):
    """Command output goes to stdout, always newline-terminated."""
    sys.stdout.write(text if text.endswith('\n') else text + '\n')
    sys.stdout.flush()
