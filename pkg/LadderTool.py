import argparse
import json
import logging
import sys

import numpy as np

from data import models
from eval import oracle, scan, suite
from hamiltonian import couplings, parent
from mps import core
from mps.core import families
from mps.errors import LadderError, SpecificationError
from utils import info, postprocessing, preprocessing

# GLOBAL VARIABLES

LOG_FORMAT = '%(asctime)s\t%(levelname)s\t%(message)s'
DEFAULT_N = 4
DEFAULT_WORKERS = 1
FRUSTRATION_N = 4
ROTATIONAL_POINT = {'a': 0.5, 'g': -1.0, 'epsilon': -1, 'sigma': -1}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2

# END GLOBAL VARIABLES


def configure_logging(verbose):

    # LOGGING CONFIGURATION

    logging.basicConfig(
        format=LOG_FORMAT,
        level=logging.DEBUG if verbose else logging.INFO,
        stream=sys.stderr)

    info.log_versions()

    # END LOGGING CONFIGURATION


def _fixed_parameters(args):
    """
    Fixed scan parameters from a --params JSON object, fields the family does
    not use ignored, then from --fixed NAME=VALUE overrides.
    """
    fixed = {}
    if args.params:
        try:
            with open(args.params) as f:
                document = json.load(f)
        except ValueError as e:
            raise SpecificationError("%s is not valid JSON: %s" % (args.params, e))
        if not isinstance(document, dict):
            raise SpecificationError("scan parameters must be a JSON object")
        fixed = {k: v for k, v in document.items() if k in preprocessing.FIXED_PARAMETERS.get(args.family, ())}
    for item in args.fixed or []:
        name, _, value = item.partition('=')
        try:
            fixed[name] = float(value)
        except ValueError:
            raise SpecificationError("--fixed %r is not NAME=NUMBER" % (item,))
    return fixed


def cmd_scan(args):
    if not args.family or not args.param_grid:
        raise SpecificationError("scan needs --family and --param-grid")
    outputs = args.outputs.split(',') if args.outputs else None
    spec = preprocessing.ScanSpec(args.family, args.param_grid, _fixed_parameters(args),
                                  outputs, args.out, args.format, args.parameter)
    names, rows = scan.run_scan(spec, args.workers)
    if spec.fmt == 'csv':
        text = postprocessing.to_csv(names, rows)
    else:
        text = postprocessing.to_json('scan', spec.as_dict(), {'columns': names, 'rows': rows})
    postprocessing.emit(text, spec.out)
    return EXIT_OK


def _load_model(args):
    if not args.params:
        raise SpecificationError("%s needs --params" % args.command)
    return models.load(args.params)


def cmd_verify(args):
    spec = _load_model(args)
    report = suite.verify(spec.build(), n=args.N or DEFAULT_N, weights=spec.weights, seed=args.seed)
    postprocessing.emit(postprocessing.to_json('verify', spec.as_dict(), report.as_dict()), args.out)
    if not report.passed:
        for check in report.failed:
            sys.stderr.write("FAILED %s: residual %.3e > %.1e\n" % (check.name, check.residual, check.tol))
        return EXIT_FAILED
    return EXIT_OK


def _rotational_parameters(spec):
    if spec.weights is None or any(spec.params.get(k) != v for k, v in ROTATIONAL_POINT.items()):
        return None
    w = spec.weights
    if not (w['mu22'] == w['mu21'] == w['mu20'] and w['mu11'] == w['mu10'] and w['mu1p1'] == w['mu1p0']):
        return None
    return w['mu22'] / 6.0, w['mu11'] / 2.0, w['mu1p1'] / 2.0, w['mu00'] / 2.0


def hamiltonian_report(spec):
    """
    Both coupling tables of a class A model with their deltas, the basis and
    the frustration residual.
    """
    if spec.family != families.class_a:
        raise SpecificationError("hamiltonian needs a class_a model, got %s" % spec.family.name)
    if spec.weights is None:
        raise SpecificationError("hamiltonian needs a weights object")
    mps = spec.build()
    p = spec.params
    basis = parent.multiplet_basis(p['a'], p['g'], p['epsilon'], p['sigma'])
    local = parent.local_h(basis, spec.weights)
    expanded = couplings.pauli_expand(local)
    formulas = couplings.coupling_formulas(p['a'], p['g'], p['epsilon'], p['sigma'], spec.weights)
    couplings.coupling_deltas(formulas, expanded)

    results = {
        'pauli_expand': expanded.as_dict(),
        'formulas': formulas.as_dict(),
        'basis': {label: basis.norms[label] for label in basis.labels},
        'residuals': {
            'structure': expanded.residuals,
            'null_space_span': parent.nullspace_match(mps, basis),
            'min_eigenvalue': local.min_eigenvalue(),
            'frustration_N%d' % FRUSTRATION_N:
                oracle.frustration_residual(local, oracle.build_state(mps, FRUSTRATION_N)),
        },
    }
    rotational = _rotational_parameters(spec)
    if rotational is not None:
        results['rotational'] = {
            'mu_nu_xi_eta': list(rotational),
            'printed': couplings.rotational_formulas(*rotational),
            'deltas': couplings.rotational_deltas(expanded, *rotational),
            'anisotropic': expanded.anisotropic(),
        }
    return results


def cmd_hamiltonian(args):
    spec = _load_model(args)
    results = hamiltonian_report(spec)
    postprocessing.emit(postprocessing.to_json('hamiltonian', spec.as_dict(), results), args.out)
    return EXIT_OK


def spectrum_report(mps):
    transfer = core.transfer_matrix(mps)
    results = {'eigenvalues': list(transfer.eigenvalues), 'degenerate_top': transfer.degenerate_top}
    if not transfer.degenerate_top:
        results['xi_z'] = core.correlation_length(mps, core.rung_operator('Sz'), transfer)
        results['xi_n'] = core.correlation_length(mps, core.rung_operator('Sx'), transfer)
    return results


def cmd_spectrum(args):
    spec = _load_model(args)
    results = spectrum_report(spec.build())
    if args.format == 'csv':
        rows = [{'index': i, 're': np.real(l), 'im': np.imag(l)}
                for i, l in enumerate(results['eigenvalues'], 1)]
        text = postprocessing.to_csv(['index', 're', 'im'], rows)
    else:
        text = postprocessing.to_json('spectrum', spec.as_dict(), results)
    postprocessing.emit(text, args.out)
    return EXIT_OK


def cmd_state(args):
    spec = _load_model(args)
    if not args.out:
        raise SpecificationError("state needs --out")
    state = oracle.build_state(spec.build(), args.N or DEFAULT_N)
    oracle.write_state(state, args.out)
    return EXIT_OK


COMMANDS = {'scan': cmd_scan, 'verify': cmd_verify, 'hamiltonian': cmd_hamiltonian,
            'spectrum': cmd_spectrum, 'state': cmd_state}


def build_parser():
    parser = argparse.ArgumentParser(description="Symmetric spin-ladder matrix product states.")
    parser.add_argument('command', choices=sorted(COMMANDS))
    parser.add_argument('--family', choices=sorted(preprocessing.SWEPT_PARAMETERS),
                        help="family to scan")
    parser.add_argument('--param-grid', help="min:max:step of the swept parameter")
    parser.add_argument('--parameter', help="swept parameter: x or g (class_a, spin_flip), u (class_b)")
    parser.add_argument('--fixed', action='append', help="NAME=VALUE held constant in a scan")
    parser.add_argument('--outputs', help="comma-separated scan columns, e.g. S,C,xi_z")
    parser.add_argument('--params', help="JSON parameter document")
    parser.add_argument('--out', help="output path (standard output when omitted)")
    parser.add_argument('--format', choices=('csv', 'json'), default='csv')
    parser.add_argument('--N', type=int, help="rung count for dense checks and state dumps")
    parser.add_argument('--seed', type=int, help="seed of the randomized verify sweep")
    parser.add_argument('--workers', type=int, default=DEFAULT_WORKERS)
    parser.add_argument('--verbose', action='store_true')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (SpecificationError, NotImplementedError, OSError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_BAD_INPUT
    except LadderError as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
