import logging
import sys
from pathlib import Path

from eval import scan
from utils import info, postprocessing, preprocessing

# LOGGING CONFIGURATION

logging.basicConfig(
    format='%(asctime)s\t%(levelname)s\t%(message)s',
    level=logging.INFO)

info.log_versions()

# END LOGGING CONFIGURATION

# GLOBAL VARIABLES

OUTPUT_FOLDER = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
FIGURES = ['correlation_lengths', 'class_a', 'class_b']
MU_T_VALUES = [0.25, 0.5, 0.75, 1.0]
WORKERS = 1

# END GLOBAL VARIABLES


def figure_specs(figure):
    """
    The scans behind one figure as (file name, ScanSpec) pairs.
    """
    if figure == 'correlation_lengths':
        return [('correlation_lengths_mu%g.csv' % mu_t,
                 preprocessing.ScanSpec('spin_flip', '-3:3:0.01', {'mu_t': mu_t}, ('xi_z', 'xi_n')))
                for mu_t in MU_T_VALUES]
    elif figure == 'class_a':
        return [('class_a.csv', preprocessing.ScanSpec('class_a', '-3:3:0.01', {'epsilon': 1, 'sigma': 1},
                                                       ('S', 'C')))]
    elif figure == 'class_b':
        return [('class_b.csv', preprocessing.ScanSpec('class_b', '-4:4:0.01', {}, ('S', 'C')))]
    else:
        raise NotImplementedError("Can't reproduce figure %s: unknown figure" % figure)


if __name__ == '__main__':
    OUTPUT_FOLDER.mkdir(parents=True, exist_ok=True)
    for figure in FIGURES:
        for name, spec in figure_specs(figure):
            columns, rows = scan.run_scan(spec, WORKERS)
            path = postprocessing.emit(postprocessing.to_csv(columns, rows), OUTPUT_FOLDER / name)
            print("### %-30s : %d rows in %s" % (figure, len(rows), path))
