import numpy as np

FIT_FLOOR = 1e-300


def max_residual(obtained, reference):
    """
    Largest entrywise |obtained - reference|.
    """
    return float(np.max(np.abs(np.asarray(obtained) - np.asarray(reference))))


def log_slope_length(distances, correlations):
    """
    Correlation length from a straight-line fit of log|C(r)| against r.

    :param distances: the distances r
    :param correlations: the correlator values at those distances
    :return: xi = -1 / slope, or inf for a flat fit
    """
    distances = np.asarray(distances, dtype=float)
    values = np.log(np.maximum(np.abs(np.asarray(correlations)), FIT_FLOOR))
    slope = np.polyfit(distances, values, 1)[0]
    return np.inf if slope >= 0 else -1.0 / slope
