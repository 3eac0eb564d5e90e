"""Causal order and truth-table estimation by repeated sink elimination.

Each step scores every remaining variable with the sorted mutual
information, takes the lowest-scoring one as the current sink, reads its
truth table off the table by majority vote per selection, and marginalises
it out. The causal order is the elimination order reversed.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .exceptions import DataError
from .freqtable import FrequencyTable, build_frequency_table
from .validation import DEFAULT_MAX_WIDTH

VOID = -1
TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TruthTableEstimate:
    """Estimated ``f_target`` over every selection of ``conditioning``.

    ``entries`` holds 0, 1 or ``VOID`` (-1) per selection, indexed with the
    first conditioning label as the most significant bit.
    """

    target: int
    conditioning: tuple
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.int8)
        if entries.size != 1 << len(self.conditioning):
            raise ValueError(
                "expected %d entries for %d conditioning labels, got %d"
                % (1 << len(self.conditioning), len(self.conditioning), entries.size)
            )
        entries.setflags(write=False)
        object.__setattr__(self, "conditioning", tuple(int(v) for v in self.conditioning))
        object.__setattr__(self, "entries", entries)

    def depends_on(self, label):
        """True if flipping ``label`` changes a pair of non-void entries."""
        t = self.conditioning.index(label)
        bit = 1 << (len(self.conditioning) - 1 - t)
        idx = np.arange(self.entries.size)
        lo = idx[(idx & bit) == 0]
        a, b = self.entries[lo], self.entries[lo | bit]
        return bool(np.any((a != VOID) & (b != VOID) & (a != b)))

    def lookup(self, X_cond):
        """Entries for rows of ``X_cond`` (columns in conditioning order)."""
        idx = np.zeros(X_cond.shape[0], dtype=np.int64)
        for c in range(X_cond.shape[1]):
            idx = (idx << 1) | X_cond[:, c]
        return self.entries[idx]


@dataclass(frozen=True)
class DiscoveryStep:
    target: int
    mi_score: float
    tt: TruthTableEstimate
    scores: tuple  # (label, MI_s) for every candidate at this step


@dataclass(frozen=True)
class DiscoveryResult:
    steps: tuple  # elimination order: last variable in the causal order first

    @property
    def elimination_order(self):
        return tuple(s.target for s in self.steps)

    @property
    def order(self):
        return self.elimination_order[::-1]

    @property
    def labels(self):
        return tuple(sorted(self.elimination_order))

    def step_for(self, label):
        for s in self.steps:
            if s.target == label:
                return s
        raise KeyError("label %r not in result" % (label,))

    def truth_table(self, label):
        return self.step_for(label).tt


def _as_table(data, max_width):
    if isinstance(data, FrequencyTable):
        if data.total <= 0:
            raise DataError("frequency table is empty")
        return data
    return build_frequency_table(data, max_width=max_width)


def sorted_mutual_information(ft, label):
    """Mutual information between the per-selection sorted target and the rest.

    Within each non-empty selection the two conditional probabilities of the
    target are sorted ascending, so a variable whose conditionals take only
    the values ``q`` and ``1 - q`` scores zero. The sum runs over the ``N``
    non-empty selections and is rescaled by ``2**(m-1) / N``; natural log.
    """
    if ft.total <= 0:
        raise DataError("frequency table is empty")
    return float(_kernels.sorted_mi(ft.weights(), ft.m, ft.axis(label)))


def _pick(scores, labels, tie_tol):
    best = scores.min()
    tied = [labels[a] for a in range(len(labels)) if scores[a] <= best + tie_tol]
    lab = min(tied)
    return labels.index(lab)


def find_sink(ft, tie_tol=TIE_TOL):
    """Label with the smallest sorted MI and the score of every label.

    Scores within ``tie_tol`` of the minimum count as tied; the lowest label
    wins.
    """
    if ft.m == 0 or ft.total <= 0:
        raise DataError("frequency table is empty")
    scores = _kernels.all_scores(ft.weights(), ft.m)
    a = _pick(scores, list(ft.labels), tie_tol)
    return ft.labels[a], dict(zip(ft.labels, scores.tolist()))


def find_truth_table(ft, label):
    a = ft.axis(label)
    entries = _kernels.truth_table(ft.weights(), ft.m, a)
    return TruthTableEstimate(label, ft.labels[:a] + ft.labels[a + 1:], entries)


def discover(data, max_width=DEFAULT_MAX_WIDTH, tie_tol=TIE_TOL):
    """Run the full elimination on a Dataset or FrequencyTable.

    The table is first rearranged into ascending label order, so the result
    depends only on which label owns which column, not on column order.
    """
    ft = _as_table(data, max_width).canonical()
    w = ft.weights()
    labels = list(ft.labels)
    steps = []
    while labels:
        m = len(labels)
        scores = _kernels.all_scores(w, m)
        a = _pick(scores, labels, tie_tol)
        target = labels[a]
        cond = tuple(labels[:a] + labels[a + 1:])
        tt = TruthTableEstimate(target, cond, _kernels.truth_table(w, m, a))
        steps.append(
            DiscoveryStep(
                target=target,
                mi_score=float(scores[a]),
                tt=tt,
                scores=tuple(zip(labels, scores.tolist())),
            )
        )
        if m > 1:
            w = _kernels.marginalize(w, m, a)
        del labels[a]
    return DiscoveryResult(tuple(steps))
