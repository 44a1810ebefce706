# -*- coding: utf-8 -*-
from __future__ import division, print_function, absolute_import
import os
import json
import errno
import os.path as osp

from dotenv import load_dotenv


__all__ = [
    'mkdir_if_missing',
    'read_json',
    'write_json',
    'dump_json',
    'rational_to_json',
    'default_out_dir',
    'OUT_DIR_ENV',
]

OUT_DIR_ENV = 'TORIC_NASH_OUT_DIR'


def mkdir_if_missing(dirname):
    """Creates dirname if it is missing."""
    if dirname and not osp.exists(dirname):
        try:
            os.makedirs(dirname)
        except OSError as e:
            if e.errno != errno.EEXIST:
                raise


def read_json(fpath):
    """Reads json file from a path."""
    with open(fpath, 'r') as f:
        obj = json.load(f)
    return obj


def dump_json(obj):
    """Canonical text form: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, indent=4, sort_keys=True, separators=(',', ': ')) + '\n'


def write_json(obj, fpath):
    """Writes to a json file."""
    mkdir_if_missing(osp.dirname(fpath))
    with open(fpath, 'w') as f:
        f.write(dump_json(obj))


def default_out_dir():
    """Output directory from the environment (``.env`` files included), or None."""
    load_dotenv()
    return os.environ.get(OUT_DIR_ENV) or None


def rational_to_json(q):
    """Integers stay JSON ints, other rationals become "p/q" strings."""
    return q.numerator if q.denominator == 1 else '{}/{}'.format(q.numerator, q.denominator)
