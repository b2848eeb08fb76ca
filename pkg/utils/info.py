import logging

VERSION = '1.0.0'


def log_versions():
    logging.info("ladder version %s" % VERSION)
    import numpy as np
    logging.info("Numpy version %s" % np.__version__)
    import scipy
    logging.info("Scipy version %s" % scipy.__version__)
