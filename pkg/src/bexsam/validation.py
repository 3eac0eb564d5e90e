"""Input validation helpers shared by the estimator and the functional API."""

import numpy as np

from .exceptions import DataError, ResourceLimitError

DEFAULT_MAX_WIDTH = 24


def check_binary_matrix(X, *, name="X"):
    """Validate a 2-D array of 0/1 values and return it as ``uint8``.

    Raises
    ------
    DataError
        If ``X`` is not two-dimensional, is empty, or holds a value other than
        0 or 1. The message names the first offending row and column.
    """
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise DataError("%s must be 2-dimensional, got shape %s" % (name, arr.shape))
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DataError("%s is empty (shape %s)" % (name, arr.shape))
    if arr.dtype == bool:
        return arr.astype(np.uint8)
    if not np.issubdtype(arr.dtype, np.number):
        raise DataError("%s must be numeric, got dtype %s" % (name, arr.dtype))
    bad = (arr != 0) & (arr != 1)
    if bad.any():
        r, c = np.argwhere(bad)[0]
        raise DataError(
            "%s contains non-binary value %r at row %d, column %d" % (name, arr[r, c], r, c)
        )
    return arr.astype(np.uint8)


def check_labels(labels, width):
    labels = tuple(int(v) for v in labels)
    if len(labels) != width:
        raise DataError("expected %d labels, got %d" % (width, len(labels)))
    if len(set(labels)) != len(labels):
        raise DataError("labels must be unique, got %s" % (labels,))
    if any(v < 0 for v in labels):
        raise DataError("labels must be non-negative, got %s" % (labels,))
    return labels


def check_width(m, max_width=DEFAULT_MAX_WIDTH):
    """Refuse a table over ``m`` variables when 2**m exceeds ``2**max_width``.

    Memory of the frequency table grows as O(2^d); the cap keeps a typo in
    the variable count from exhausting the machine.
    """
    if m > max_width:
        raise ResourceLimitError(
            "a frequency table over %d variables needs 2^%d = %d entries, "
            "above the cap of 2^%d (raise max_width to override)"
            % (m, m, 1 << m, max_width)
        )


def check_probability(p, name="p"):
    p = float(p)
    if not 0.0 < p < 0.5:
        raise ValueError("%s must lie in (0, 0.5), got %r" % (name, p))
    return p
