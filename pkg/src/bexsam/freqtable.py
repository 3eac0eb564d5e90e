"""Contingency tables over binary variables.

Index encoding: for a table over ``labels = (l0, ..., l_{m-1})`` the entry of
assignment ``(v0, ..., v_{m-1})`` sits at ``sum v_t << (m - 1 - t)``, so the
first label is the most significant bit. ``counts.reshape((2,) * m)`` is
therefore the same table with one axis per label.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .exceptions import DataError
from .validation import DEFAULT_MAX_WIDTH, check_labels, check_width


@dataclass(frozen=True, eq=False)
class FrequencyTable:
    """Counts (or probability weights) of every assignment.

    ``exact`` marks a table whose weights are probabilities rather than
    integer counts; every query treats the two identically.
    """

    labels: tuple
    counts: np.ndarray
    exact: bool = False

    def __post_init__(self):
        counts = np.asarray(self.counts)
        m = int(np.log2(counts.size)) if counts.size else -1
        if counts.ndim != 1 or (1 << max(m, 0)) != counts.size:
            raise DataError("counts must be a flat array of length 2^m, got shape %s" % (counts.shape,))
        object.__setattr__(self, "labels", check_labels(self.labels, m))
        if np.any(counts < 0):
            raise DataError("counts must be non-negative")
        counts = counts.astype(np.float64 if self.exact else np.int64)
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def m(self):
        return len(self.labels)

    @property
    def total(self):
        t = self.counts.sum()
        return float(t) if self.exact else int(t)

    def axis(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError("label %r is not in the table (labels %s)" % (label, self.labels)) from None

    def weights(self):
        return np.ascontiguousarray(self.counts, dtype=np.float64)

    def canonical(self):
        """Same table with labels sorted ascending."""
        if list(self.labels) == sorted(self.labels):
            return self
        perm = np.argsort(self.labels)
        cube = self.counts.reshape((2,) * self.m).transpose(perm)
        return FrequencyTable(
            tuple(self.labels[p] for p in perm), cube.reshape(-1).copy(), exact=self.exact
        )

    def to_csv_rows(self):
        """Debug dump: one ``(bits..., count)`` row per assignment."""
        m = self.m
        for idx, c in enumerate(self.counts.tolist()):
            bits = [(idx >> (m - 1 - t)) & 1 for t in range(m)]
            yield bits + [c]


def encode_rows(rows):
    m = rows.shape[1]
    weights = np.left_shift(1, np.arange(m - 1, -1, -1, dtype=np.int64))
    return rows.astype(np.int64) @ weights


def build_frequency_table(data, max_width=DEFAULT_MAX_WIDTH):
    """Count every observed assignment of a :class:`~bexsam.generator.Dataset`."""
    rows = data.rows
    if rows.shape[0] == 0:
        raise DataError("dataset has no rows")
    check_width(rows.shape[1], max_width)
    counts = np.bincount(encode_rows(rows), minlength=1 << rows.shape[1])
    return FrequencyTable(data.labels, counts)


def exact_table(model, labels=None, max_width=DEFAULT_MAX_WIDTH):
    """Probability-weighted table of a model's exact joint distribution."""
    from .generator import exact_distribution

    check_width(model.d, max_width)
    ft = FrequencyTable(tuple(range(model.d)), exact_distribution(model), exact=True)
    if labels is not None:
        labels = tuple(labels)
        cube = ft.counts.reshape((2,) * model.d).transpose(labels)
        ft = FrequencyTable(labels, cube.reshape(-1).copy(), exact=True)
    return ft


def marginalize(ft, label):
    a = ft.axis(label)
    out = _kernels.marginalize(ft.weights(), ft.m, a)
    labels = ft.labels[:a] + ft.labels[a + 1:]
    return FrequencyTable(labels, out if ft.exact else np.rint(out).astype(np.int64), exact=ft.exact)


@dataclass(frozen=True, eq=False)
class SelectionStats:
    """Per-selection statistics of one target against the other labels.

    Arrays are indexed by the selection of ``others`` in table encoding.
    ``conditional[:, v]`` is ``p(target = v | selection)``; rows of empty
    selections are NaN.
    """

    target: int
    others: tuple
    count: np.ndarray
    conditional: np.ndarray
    p_selection: np.ndarray

    @property
    def n_selections(self):
        return int(np.count_nonzero(self.count > 0))

    @property
    def void(self):
        return self.count <= 0


def pair_view(ft, label):
    """``(2**(m-1), 2)`` array of (x=0, x=1) weights per selection."""
    a = ft.axis(label)
    cube = ft.counts.reshape((2,) * ft.m)
    return np.moveaxis(cube, a, -1).reshape(-1, 2)


def selection_stats(ft, label):
    pairs = pair_view(ft, label).astype(np.float64)
    count = pairs.sum(axis=1)
    with np.errstate(invalid="ignore", divide="ignore"):
        cond = pairs / count[:, None]
    cond[count <= 0] = np.nan
    a = ft.axis(label)
    return SelectionStats(
        target=label,
        others=ft.labels[:a] + ft.labels[a + 1:],
        count=count,
        conditional=cond,
        p_selection=count / count.sum(),
    )
