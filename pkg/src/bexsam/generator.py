"""Random models, sampled datasets and exact joint distributions."""

from dataclasses import dataclass

import numpy as np

from ._rng import as_rng
from .model import BexsamModel, eval_function_batch, validate_model
from .validation import check_binary_matrix, check_labels, check_probability

MAX_EXACT_WIDTH = 20


@dataclass(frozen=True)
class GenConfig:
    """Parameters of the random model generator.

    ``noise_mode`` is ``"uniform"`` (each ``p_j`` drawn from (0, 0.5)) or
    ``"fixed"`` (every ``p_j`` equals ``p_e``).
    """

    d: int
    n: int = 1000
    p_a: float = 0.5
    noise_mode: str = "uniform"
    p_e: float = None
    seed: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1, got %r" % self.d)
        if self.n < 1:
            raise ValueError("n must be >= 1, got %r" % self.n)
        if not 0.0 <= self.p_a <= 1.0:
            raise ValueError("p_a must lie in [0, 1], got %r" % self.p_a)
        if self.noise_mode not in ("uniform", "fixed"):
            raise ValueError("noise_mode must be 'uniform' or 'fixed', got %r" % self.noise_mode)
        if self.noise_mode == "fixed":
            check_probability(self.p_e, "p_e")


@dataclass(frozen=True, eq=False)
class Dataset:
    """Binary observations; column ``c`` holds the variable labelled ``labels[c]``."""

    labels: tuple
    rows: np.ndarray

    def __post_init__(self):
        rows = check_binary_matrix(self.rows, name="rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "labels", check_labels(self.labels, rows.shape[1]))

    @property
    def n(self):
        return self.rows.shape[0]

    @property
    def d(self):
        return self.rows.shape[1]

    def column(self, label):
        return self.rows[:, self.labels.index(label)]

    def in_label_order(self):
        """Rows with columns rearranged so that column ``j`` is label ``j``."""
        inv = np.argsort(self.labels)
        return self.rows[:, inv]


def _uniform_open(rng, low, high, size):
    # Generator.uniform is half-open; redraw the (measure-zero) exact lower bound.
    out = rng.uniform(low, high, size)
    while np.any(out <= low):
        mask = out <= low
        out[mask] = rng.uniform(low, high, int(mask.sum()))
    return out


def random_noise(rng, d):
    return tuple(_uniform_open(rng, 0.0, 0.5, d).tolist())


def random_model(config, rng=None):
    """Draw a random model.

    The causal order is a random permutation of the labels. Every earlier
    variable joins the parent set of a later one with probability ``p_a``;
    every table entry is a fair coin. With ``rng=None`` the stream is seeded by
    ``config.seed``.
    """
    rng = as_rng(config.seed if rng is None else rng)
    d = config.d
    order = tuple(rng.permutation(d).tolist())
    parents = [()] * d
    functions = [()] * d
    for k, j in enumerate(order):
        chosen = rng.random(k) < config.p_a
        pa = tuple(order[t] for t in range(k) if chosen[t])
        parents[j] = pa
        functions[j] = tuple(rng.integers(0, 2, 1 << len(pa)).tolist())
    if config.noise_mode == "fixed":
        noise = (float(config.p_e),) * d
    else:
        noise = random_noise(rng, d)
    model = BexsamModel(order=order, parents=tuple(parents), functions=tuple(functions), noise=noise)
    assert not validate_model(model)
    return model


def simulate(model, n, rng):
    """Draw ``n`` rows in label column order (no permutation)."""
    rng = as_rng(rng)
    p = np.asarray(model.noise)
    E = (rng.random((n, model.d)) < p).astype(np.uint8)
    X = np.zeros((n, model.d), dtype=np.uint8)
    for j in model.order:
        X[:, j] = eval_function_batch(model, j, X) ^ E[:, j]
    return X


def sample_dataset(model, n, seed):
    """Sample ``n`` rows and shuffle the columns.

    The column permutation is drawn from the same stream after the noise, and
    recorded in ``Dataset.labels``.
    """
    if n < 1:
        raise ValueError("n must be >= 1, got %r" % n)
    rng = as_rng(seed)
    X = simulate(model, n, rng)
    perm = rng.permutation(model.d)
    return Dataset(labels=tuple(perm.tolist()), rows=X[:, perm])


def all_assignments(d):
    codes = np.arange(1 << d, dtype=np.int64)
    shifts = np.arange(d - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts) & 1).astype(np.uint8)


def exact_distribution(model):
    """Joint probability of every assignment, indexed by label bits (label 0 MSB).

    Enumerates all ``2**d`` noise vectors, pushes each through the structural
    equations and accumulates its probability.
    """
    d = model.d
    if d > MAX_EXACT_WIDTH:
        raise ValueError("exact enumeration supports d <= %d, got %d" % (MAX_EXACT_WIDTH, d))
    E = all_assignments(d)
    p = np.asarray(model.noise)
    weight = np.prod(np.where(E == 1, p, 1.0 - p), axis=1)
    X = np.zeros_like(E)
    for j in model.order:
        X[:, j] = eval_function_batch(model, j, X) ^ E[:, j]
    code = X.astype(np.int64) @ (1 << np.arange(d - 1, -1, -1, dtype=np.int64))
    return np.bincount(code, weights=weight, minlength=1 << d)


def y_structure_model(p, variant="AND"):
    """Two roots feeding a collider with one child.

    ``x2 = f(x0, x1) XOR e2`` with ``f`` AND or OR, and ``x3 = x2 XOR e3``
    (0-based labels).
    """
    if len(p) != 4:
        raise ValueError("expected four noise probabilities, got %d" % len(p))
    p = tuple(check_probability(v, "p[%d]" % k) for k, v in enumerate(p))
    variant = variant.upper()
    if variant == "AND":
        f2 = (0, 0, 0, 1)
    elif variant == "OR":
        f2 = (0, 1, 1, 1)
    else:
        raise ValueError("variant must be 'AND' or 'OR', got %r" % variant)
    return BexsamModel(
        order=(0, 1, 2, 3),
        parents=((), (), (0, 1), (2,)),
        functions=((0,), (0,), f2, (0, 1)),
        noise=p,
    )
