"""Scoring estimated models against ground truth and benchmark drivers."""

import time
from dataclasses import asdict, dataclass
from typing import NamedTuple, Optional

import numpy as np

from ._rng import DATA_STREAM, MODEL_STREAM, make_rng
from .discovery import VOID, discover
from .freqtable import build_frequency_table, exact_table
from .generator import GenConfig, random_model, random_noise, sample_dataset, y_structure_model
from .model import adjacency_of_model
from .validation import DEFAULT_MAX_WIDTH, check_width


class FMeasure(NamedTuple):
    precision: float
    recall: float
    f: float


def _f_from_counts(hit, n_est, n_true):
    # Both empty: perfect agreement. Exactly one empty: no overlap possible.
    if n_est == 0 and n_true == 0:
        return FMeasure(1.0, 1.0, 1.0)
    p = hit / n_est if n_est else 0.0
    r = hit / n_true if n_true else 0.0
    f = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return FMeasure(p, r, f)


@dataclass(frozen=True)
class EvalReport:
    precision_A: float
    recall_A: float
    f_A: float
    precision_TT: float
    recall_TT: float
    f_TT: float
    empty_A: bool = False
    empty_TT: bool = False
    ct_ms: Optional[float] = None

    def to_dict(self):
        out = asdict(self)
        if out["ct_ms"] is None:
            del out["ct_ms"]
        return out


def adjacency_from_estimate(result, d):
    """``A[h, j] = 1`` iff the estimated table of ``j`` changes with ``h``."""
    A = np.zeros((d, d), dtype=np.uint8)
    for step in result.steps:
        for h in step.tt.conditioning:
            if step.tt.depends_on(h):
                A[h, step.target] = 1
    return A


def f_measure_adjacency(A_true, A_est):
    A_true = np.asarray(A_true) != 0
    A_est = np.asarray(A_est) != 0
    if A_true.shape != A_est.shape:
        raise ValueError("shape mismatch: %s vs %s" % (A_true.shape, A_est.shape))
    return _f_from_counts(int((A_true & A_est).sum()), int(A_est.sum()), int(A_true.sum()))


def true_table_over(model, j, conditioning):
    """True ``f_j`` expanded over every selection of ``conditioning``.

    Returns an int8 array with -1 where a parent of ``j`` outside
    ``conditioning`` can change the value (the entry is then undefined).
    """
    conditioning = tuple(conditioning)
    m = len(conditioning)
    pa = model.parents[j]
    tab = np.asarray(model.functions[j], dtype=np.int8)
    sel = np.arange(1 << m, dtype=np.int64)
    pos = {lab: t for t, lab in enumerate(conditioning)}
    outside = [h for h in pa if h not in pos]
    base = np.zeros(1 << m, dtype=np.int64)
    for t, h in enumerate(pa):
        if h in pos:
            bit = (sel >> (m - 1 - pos[h])) & 1
            base |= bit << (len(pa) - 1 - t)
    if not outside:
        return tab[base]
    vals = []
    out_bits = [len(pa) - 1 - pa.index(h) for h in outside]
    for combo in range(1 << len(outside)):
        idx = base.copy()
        for k, b in enumerate(out_bits):
            idx |= ((combo >> k) & 1) << b
        vals.append(tab[idx])
    vals = np.stack(vals)
    same = np.all(vals == vals[0], axis=0)
    return np.where(same, vals[0], -1).astype(np.int8)


def truth_table_counts(model, result):
    """(hits, estimated ones, true ones) over all non-void estimated entries.

    An undefined true entry counts as a true one that no estimate matches.
    """
    if sorted(result.elimination_order) != list(range(model.d)):
        raise ValueError("result labels %s do not match model with d=%d" % (result.labels, model.d))
    hit = n_est = n_true = 0
    for step in result.steps:
        est = step.tt.entries
        true = true_table_over(model, step.target, step.tt.conditioning)
        keep = est != VOID
        est, true = est[keep], true[keep]
        n_est += int((est == 1).sum())
        n_true += int((true != 0).sum())
        hit += int(((est == 1) & (true == 1)).sum())
    return hit, n_est, n_true


def f_measure_truth_tables(model, result):
    return _f_from_counts(*truth_table_counts(model, result))


def evaluate(model, result, ct_ms=None):
    A_t = adjacency_of_model(model)
    A_e = adjacency_from_estimate(result, model.d)
    fa = f_measure_adjacency(A_t, A_e)
    hit, n_est, n_true = truth_table_counts(model, result)
    ftt = _f_from_counts(hit, n_est, n_true)
    return EvalReport(
        precision_A=fa.precision,
        recall_A=fa.recall,
        f_A=fa.f,
        precision_TT=ftt.precision,
        recall_TT=ftt.recall,
        f_TT=ftt.f,
        empty_A=bool(A_t.sum() == 0 and A_e.sum() == 0),
        empty_TT=bool(n_est == 0 and n_true == 0),
        ct_ms=ct_ms,
    )


@dataclass(frozen=True)
class BenchGrid:
    d: tuple
    n: tuple
    p_a: float = 0.5
    noise_mode: str = "uniform"
    p_e: Optional[float] = None
    trials: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1, got %r" % self.trials)
        object.__setattr__(self, "d", tuple(int(v) for v in self.d))
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        for d in self.d:
            GenConfig(d=d, n=1, p_a=self.p_a, noise_mode=self.noise_mode, p_e=self.p_e)
        if any(v < 1 for v in self.n):
            raise ValueError("every n must be >= 1, got %s" % (self.n,))

    def cells(self):
        return [(d, n) for d in self.d for n in self.n]


@dataclass(frozen=True)
class BenchRow:
    d: int
    n: int
    trials: int
    mean_FA: float
    mean_FTT: float
    mean_CT_ms: float


def run_trial(grid, cell, trial, d, n, max_width=DEFAULT_MAX_WIDTH):
    """One (model, data, discover, evaluate) run; CT covers ``discover`` only."""
    config = GenConfig(d=d, n=n, p_a=grid.p_a, noise_mode=grid.noise_mode, p_e=grid.p_e, seed=grid.seed)
    model = random_model(config, make_rng(grid.seed, cell, trial, MODEL_STREAM))
    data = sample_dataset(model, n, make_rng(grid.seed, cell, trial, DATA_STREAM))
    t0 = time.perf_counter()
    result = discover(data, max_width=max_width)
    ct = (time.perf_counter() - t0) * 1e3
    return evaluate(model, result, ct_ms=ct)


def run_benchmark(grid, jobs=1, max_width=DEFAULT_MAX_WIDTH):
    """Mean F(A), F(TT) and CT for every (d, n) cell of ``grid``."""
    for d in grid.d:
        check_width(d, max_width)
    tasks = [
        (cell, t, d, n) for cell, (d, n) in enumerate(grid.cells()) for t in range(grid.trials)
    ]
    if jobs == 1:
        reports = [run_trial(grid, c, t, d, n, max_width) for c, t, d, n in tasks]
    else:
        from joblib import Parallel, delayed

        reports = Parallel(n_jobs=jobs)(
            delayed(run_trial)(grid, c, t, d, n, max_width) for c, t, d, n in tasks
        )
    rows = []
    for cell, (d, n) in enumerate(grid.cells()):
        rep = [r for (c, *_), r in zip(tasks, reports) if c == cell]
        rows.append(
            BenchRow(
                d=d,
                n=n,
                trials=grid.trials,
                mean_FA=float(np.mean([r.f_A for r in rep])),
                mean_FTT=float(np.mean([r.f_TT for r in rep])),
                mean_CT_ms=float(np.mean([r.ct_ms for r in rep])),
            )
        )
    return rows


def classify_pairs(A_true, A_est):
    """2x3 counts: rows (true directed, true non-edge), cols (directed, none, undirected).

    Every ordered pair is classified on its own, so a reversed edge costs
    one missed directed edge and one spurious one.
    """
    A_true = np.asarray(A_true) != 0
    A_est = np.asarray(A_est) != 0
    off = ~np.eye(A_true.shape[0], dtype=bool)
    conf = np.zeros((2, 3), dtype=np.int64)
    for row, truth in enumerate((A_true, ~A_true)):
        mask = truth & off
        conf[row, 0] = int((mask & A_est).sum())
        conf[row, 1] = int((mask & ~A_est).sum())
    return conf


def y_structure_confusion(trials, n, variant="AND", seed=0, exact=False):
    """Confusion counts of the estimator over repeated Y-structure trials.

    Noise probabilities are redrawn from (0, 0.5) every trial. Undirected
    estimates never occur, so the last column stays zero. With ``exact`` the
    discovery runs on the exact joint distribution instead of a sample.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1, got %r" % trials)
    conf = np.zeros((2, 3), dtype=np.int64)
    for t in range(trials):
        model = y_structure_model(random_noise(make_rng(seed, t, MODEL_STREAM), 4), variant)
        if exact:
            perm = make_rng(seed, t, DATA_STREAM).permutation(4)
            ft = exact_table(model, labels=perm.tolist())
        else:
            ft = build_frequency_table(sample_dataset(model, n, make_rng(seed, t, DATA_STREAM)))
        result = discover(ft)
        conf += classify_pairs(adjacency_of_model(model), adjacency_from_estimate(result, 4))
    return conf


def orientation_f_measure(A_true, order):
    """F-measure of the true skeleton oriented by an estimated causal order.

    Scores the ordering alone: every true edge counts as recovered when its
    endpoints appear in the right relative order. Not a substitute for
    :func:`f_measure_adjacency`, which also scores the estimated tables.
    """
    A_true = np.asarray(A_true) != 0
    pos = np.empty(len(order), dtype=np.int64)
    pos[list(order)] = np.arange(len(order))
    skel = A_true | A_true.T
    A_o = skel & (pos[:, None] < pos[None, :])
    return f_measure_adjacency(A_true, A_o)
