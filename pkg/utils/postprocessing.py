"""
Writers for scan tables and JSON reports.
"""
import csv
import io
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from utils import info

FLOAT_FORMAT = '%.17g'


def format_value(value):
    """
    17 significant digits for floats, lower-case booleans, 'inf'/'nan' as is.
    """
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return FLOAT_FORMAT % (float(value) + 0.0)
    if value is None:
        return ''
    return str(value)


def to_csv(columns, rows):
    """
    The table as text: header row, fixed column order, LF line endings.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(column)) for column in columns])
    return buffer.getvalue()


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        if value.imag == 0:
            return _jsonable(value.real)
        return {'re': _jsonable(value.real), 'im': _jsonable(value.imag)}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        if math.isnan(value):
            return 'nan'
        return value
    return value


def envelope(command, inputs, results):
    return {'version': info.VERSION, 'command': command,
            'inputs': _jsonable(inputs), 'results': _jsonable(results)}


def to_json(command, inputs, results):
    return json.dumps(envelope(command, inputs, results), indent=2, sort_keys=False) + '\n'


def emit(text, out=None):
    """
    Writes ``text`` to ``out`` (a path) or to standard output.
    """
    if out is None:
        sys.stdout.write(text)
        return None
    path = Path(out)
    with path.open('w', newline='\n') as f:
        f.write(text)
    logging.info("Wrote %s" % path)
    return path
