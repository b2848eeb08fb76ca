"""
Parameter sweeps: closed-form rows per grid point, evaluated in a worker
pool and returned in grid order.
"""
import logging
from functools import partial
from multiprocessing import Pool

import numpy as np

from mps import core, families, observables
from utils.preprocessing import FIXED_PARAMETERS

# GLOBAL VARIABLES

LAMBDA_COLUMNS = tuple('lambda_%d' % i for i in range(1, 5))
OUTPUT_COLUMNS = {'S': 'S_bits'}
ONE_SIDED = ('0+', '0-')

# END GLOBAL VARIABLES


def spin_flip_point(x, mu_t, epsilon=1):
    """
    The spin-flip model with a^2 + b^2 = 1, 2ab = mu_t and g = x.
    """
    assert 0 <= mu_t <= 1, "mu_t must lie in [0, 1]"
    root = np.sqrt(1 - mu_t * mu_t)
    a = np.sqrt((1 + root) / 2.0)
    b = mu_t / (2 * a)
    return families.build_spin_flip(a, b, x, epsilon)


def _model(family, parameter, value, fixed):
    if family == 'class_a':
        a = fixed.get('a', 1.0)
        g = 2 * a * a * value if parameter == 'x' else value
        return families.build_class_a(a, g, fixed.get('epsilon', 1), fixed.get('sigma', 1))
    elif family == 'class_b':
        return families.build_class_b(value)
    elif family == 'spin_flip':
        epsilon = fixed.get('epsilon', 1)
        if 'a' in fixed and 'b' in fixed:
            a, b = fixed['a'], fixed['b']
            g = (a * a + b * b) * value if parameter == 'x' else value
            return families.build_spin_flip(a, b, g, epsilon)
        return spin_flip_point(value, fixed.get('mu_t', 1.0), epsilon)
    else:
        raise NotImplementedError("Can't scan family %r: unknown family" % (family,))


def _closed_forms(family, mps, x):
    p = mps.params
    if family == 'class_a':
        return observables.class_report('A', x=x, epsilon=p['epsilon'], sigma=p['sigma']).as_dict()
    elif family == 'class_b':
        return observables.class_report('B', u=p['u']).as_dict()
    forms = observables.correlation_report(mps).as_dict()
    forms.update(observables.entanglement_report(mps).as_dict())
    forms['degenerate_top'] = p['g'] == 0
    return forms


def columns(spec):
    """
    family, the family's fixed parameters, the swept g if any, x, u, the
    transition flags, then the requested outputs.
    """
    names = ['family'] + list(FIXED_PARAMETERS[spec.family])
    if spec.parameter == 'g':
        names.append('g')
    names.extend(['x', 'u', 'degenerate_top', 'limit'])
    for output in spec.outputs:
        names.extend(LAMBDA_COLUMNS if output == 'lambda' else [OUTPUT_COLUMNS.get(output, output)])
    return names


def scan_rows(family, parameter, fixed, outputs, value):
    """
    Evaluates one grid point.

    A regular point gives one row. At the transition point the g -> 0+ and
    g -> 0- one-sided limits give one row each, both flagged degenerate_top.
    """
    mps = _model(family, parameter, value, fixed)
    p = mps.params
    s = p['a'] ** 2 + p['b'] ** 2
    x = value if parameter == 'x' else p['g'] / s
    forms = _closed_forms(family, mps, x)
    row = {'family': family, 'g': p['g'], 'x': x, 'u': p.get('u'),
           'degenerate_top': bool(forms['degenerate_top']), 'limit': ''}
    row.update((name, p.get(name, fixed.get(name))) for name in FIXED_PARAMETERS[family])
    if family == 'spin_flip':
        row['mu_t'] = 2 * abs(p['a'] * p['b']) / s
    for output in outputs:
        if output == 'lambda':
            row.update(zip(LAMBDA_COLUMNS, np.real(core.transfer_matrix(mps).eigenvalues)))
        elif output == 'S':
            row['S_bits'] = forms['S_bits']
        else:
            row[output] = forms[output]
    if not row['degenerate_top']:
        return [row]
    return [dict(row, limit=side) for side in ONE_SIDED]


def run_scan(spec, workers=1):
    """
    :param spec: a ScanSpec
    :param workers: pool size; 1 evaluates in process
    :return: (columns, rows) with rows in grid order
    """
    grid = spec.grid()
    logging.info("Scanning %d points of %s with %d worker(s)" % (len(grid), spec, workers))
    evaluate = partial(scan_rows, spec.family, spec.parameter, spec.fixed, spec.outputs)
    if workers > 1:
        with Pool(workers) as pool:
            blocks = pool.map(evaluate, grid)
    else:
        blocks = [evaluate(value) for value in grid]
    rows = [row for block in blocks for row in block]
    logging.info("Scan finished: %d rows" % len(rows))
    return columns(spec), rows
