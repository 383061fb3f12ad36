# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Binary field snapshots, CSV series and JSON documents.

A field snapshot is the magic ``TDNL``, a format version and a fixed
little-endian header, followed by the values as interleaved real and
imaginary float64 numbers in C order::

    magic   4s   b'TDNL'
    version H    format version
    dims    I    spatial dimension
    points  I    grid points per axis
    L       d    reference box half width
    scale   d    grid dilation
    frame   B    0 original, 1 lens
    y1      d    lens metadata, NaN for the original frame
    dy1     d
    t       d    time of the field
"""

import csv
import json
import logging
import math
import os
import struct

import numpy as np

from .constants import FIELD_MAGIC, FIELD_VERSION, ORIGINAL, LENS
from .spectral import Grid, WaveState

log = logging.getLogger(__name__)

__all__ = ['encode_field', 'decode_field', 'dump_field', 'load_field',
           'write_csv', 'write_field_csv', 'write_oscillator_csv',
           'write_run_csv', 'write_profile_csv',
           'write_cross_validation_csv', 'to_jsonable', 'dump_json']

HEADER = struct.Struct('<4sHIIddBddd')

FRAME_TAGS = {ORIGINAL: 0, LENS: 1}


def encode_field(state):
    """Encodes a field snapshot.

    :param state: Field to encode.
    :type state: :class:`~tdnls.spectral.WaveState`

    :rtype: bytes
    """
    grid = state.grid
    nan = float('nan')
    head = HEADER.pack(FIELD_MAGIC, FIELD_VERSION, grid.n, grid.points,
                       grid.L, grid.scale, FRAME_TAGS[state.frame],
                       nan if state.y1 is None else state.y1,
                       nan if state.dy1 is None else state.dy1, state.t)
    values = np.empty(state.values.shape + (2,), dtype='<f8')
    values[..., 0] = state.values.real
    values[..., 1] = state.values.imag
    return head + values.tobytes(order='C')


def decode_field(data):
    """Decodes a field snapshot.

    :param data: Encoded snapshot.
    :type data: bytes

    :rtype: :class:`~tdnls.spectral.WaveState`

    :raises: :exc:`ValueError` on a malformed header or payload.
    """
    if not isinstance(data, bytes):
        raise TypeError('bytes expected, got %r' % type(data))
    if len(data) < HEADER.size:
        raise ValueError('Snapshot is %d bytes, header needs %d'
                         % (len(data), HEADER.size))
    (magic, version, dims, points, L, scale, frame,
     y1, dy1, t) = HEADER.unpack_from(data)
    if magic != FIELD_MAGIC:
        raise ValueError('Bad snapshot magic %r' % magic)
    if version != FIELD_VERSION:
        raise ValueError('Unsupported snapshot version %d' % version)
    tags = dict((tag, name) for name, tag in FRAME_TAGS.items())
    if frame not in tags:
        raise ValueError('Unknown frame tag %d' % frame)
    grid = Grid(dims, points, L, scale)
    expected = 16 * points ** dims
    if len(data) - HEADER.size != expected:
        raise ValueError('Snapshot payload is %d bytes, expected %d'
                         % (len(data) - HEADER.size, expected))
    raw = np.frombuffer(data, dtype='<f8', offset=HEADER.size)
    raw = raw.reshape(grid.shape + (2,))
    values = raw[..., 0] + 1j * raw[..., 1]
    frame = tags[frame]
    if frame == ORIGINAL:
        y1 = dy1 = None
    return WaveState(grid, values, t, frame, y1, dy1)


def dump_field(state, path):
    """Writes a field snapshot to `path`."""
    with open(path, 'wb') as f:
        f.write(encode_field(state))
    log.debug('Field at t=%g written to %s', state.t, path)


def load_field(path):
    """Reads a field snapshot from `path`."""
    with open(path, 'rb') as f:
        return decode_field(f.read())


def write_csv(path, header, rows):
    """Writes rows under a header line."""
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(value) for value in row])
    log.debug('%s written', path)


def _cell(value):
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return value


def write_field_csv(path, state):
    """Writes a field as rows of coordinates, real and imaginary parts."""
    grid = state.grid
    axes = [grid.axis()] * grid.n
    mesh = np.meshgrid(*axes, indexing='ij')
    names = ['x%d' % k for k in range(grid.n)] if grid.n > 1 else ['x']
    columns = [m.ravel() for m in mesh]
    columns += [state.values.real.ravel(), state.values.imag.ravel()]
    write_csv(path, names + ['re', 'im'], zip(*columns))


def write_oscillator_csv(path, pair, t):
    """Writes fundamental pair samples with their Wronskian."""
    write_csv(path, ('t', 'y1', 'y2', 'dy1', 'dy2', 'wronskian'),
              pair.samples(t))


def write_run_csv(path, record):
    """Writes the diagnostics series of a run."""
    write_csv(path, record.COLUMNS, record.rows())


def write_profile_csv(path, rows):
    write_csv(path, ('t', 'xi', 'amp_pde', 'amp_ode', 'remainder_linf'), rows)


def write_cross_validation_csv(path, result):
    write_csv(path, ('t', 'l2_discrepancy', 'linf_discrepancy'),
              zip(result.times, result.l2_discrepancy,
                  result.linf_discrepancy))


def to_jsonable(obj):
    """Converts records, numpy values and non-finite floats for JSON."""
    if hasattr(obj, 'to_dict'):
        obj = obj.to_dict()
    if isinstance(obj, dict):
        return dict((str(key), to_jsonable(value))
                    for key, value in obj.items())
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(value) for value in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        return obj if math.isfinite(obj) else None
    return obj


def dump_json(obj, path=None):
    """Serializes `obj` deterministically; writes it when `path` is given.

    :return: The JSON text.
    """
    text = json.dumps(to_jsonable(obj), sort_keys=True, indent=2,
                      allow_nan=False)
    if path is not None:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as f:
            f.write(text + '\n')
    return text
