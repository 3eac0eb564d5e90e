"""Binary exclusive-or skew acyclic models.

A model over ``d`` labelled binary variables assigns every label a Boolean
function of its parents and an independent Bernoulli noise bit,

    x_j = f_j(parents of j) XOR e_j,   P(e_j = 1) = p_j in (0, 0.5).

Function tables are stored over the parents only. The parent tuple of a
label is listed in causal order and the first parent is the most
significant bit of the table index.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BexsamModel:
    """Ground-truth generative model.

    Parameters
    ----------
    order : tuple of int
        ``order[k]`` is the label at causal position ``k`` (0-based).
    parents : tuple of tuple of int
        ``parents[j]`` lists the parents of label ``j`` in causal order.
    functions : tuple of tuple of int
        ``functions[j]`` is the 0/1 table of ``f_j`` with ``2**len(parents[j])``
        entries.
    noise : tuple of float
        ``noise[j]`` is ``P(e_j = 1)``.
    """

    order: tuple
    parents: tuple
    functions: tuple
    noise: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))
        object.__setattr__(
            self, "parents", tuple(tuple(int(h) for h in pa) for pa in self.parents)
        )
        object.__setattr__(
            self, "functions", tuple(tuple(int(b) for b in tab) for tab in self.functions)
        )
        object.__setattr__(self, "noise", tuple(float(p) for p in self.noise))

    @property
    def d(self):
        return len(self.order)

    def position(self, label):
        return self.order.index(label)

    def check_label(self, label):
        if not (isinstance(label, (int, np.integer)) and 0 <= label < self.d):
            raise KeyError("unknown label %r for a model with d=%d" % (label, self.d))
        return int(label)


def validate_model(model):
    """Return a list of human-readable invariant violations (empty if valid)."""
    out = []
    d = len(model.order)
    if d < 1:
        return ["model has no variables"]
    if sorted(model.order) != list(range(d)):
        out.append("order %s is not a permutation of 0..%d" % (model.order, d - 1))
        return out
    for field in ("parents", "functions", "noise"):
        if len(getattr(model, field)) != d:
            out.append("%s has %d entries, expected %d" % (field, len(getattr(model, field)), d))
    if out:
        return out

    pos = {lab: k for k, lab in enumerate(model.order)}
    for j in range(d):
        pa = model.parents[j]
        if len(set(pa)) != len(pa):
            out.append("label %d: duplicate parents %s" % (j, pa))
        for h in pa:
            if h not in pos:
                out.append("label %d: unknown parent %d" % (j, h))
            elif pos[h] >= pos[j]:
                out.append(
                    "label %d: parent %d is not earlier in the causal order (acyclicity)" % (j, h)
                )
        if all(h in pos for h in pa) and [pos[h] for h in pa] != sorted(pos[h] for h in pa):
            out.append("label %d: parents %s are not listed in causal order" % (j, pa))
        tab = model.functions[j]
        if len(tab) != 1 << len(pa):
            out.append(
                "label %d: function table has %d entries, expected 2^%d = %d"
                % (j, len(tab), len(pa), 1 << len(pa))
            )
        if any(b not in (0, 1) for b in tab):
            out.append("label %d: function table holds a value other than 0/1" % j)
        p = model.noise[j]
        if not 0.0 < p < 0.5:
            out.append("label %d: noise probability %r not in (0,0.5)" % (j, p))
    first = model.order[0]
    if model.parents[first]:
        out.append("label %d: first variable in the order must have no parents" % first)
    return out


def _table_index(bits):
    idx = 0
    for b in bits:
        idx = (idx << 1) | int(b)
    return idx


def eval_function(model, j, assignment):
    """Evaluate ``f_j`` on a full assignment indexed by label.

    Bits of non-parents are ignored.
    """
    j = model.check_label(j)
    if len(assignment) != model.d:
        raise ValueError("assignment has %d bits, expected %d" % (len(assignment), model.d))
    return model.functions[j][_table_index(assignment[h] for h in model.parents[j])]


def structural_equation(model, j, assignment, noise_bit):
    return eval_function(model, j, assignment) ^ (int(noise_bit) & 1)


def eval_function_batch(model, j, X):
    """Vectorised ``f_j`` over the rows of ``X`` (columns indexed by label)."""
    pa = model.parents[j]
    idx = np.zeros(X.shape[0], dtype=np.int64)
    for h in pa:
        idx = (idx << 1) | X[:, h]
    return np.asarray(model.functions[j], dtype=np.uint8)[idx]


def active_parents(model, j):
    """Parents of ``j`` whose flip changes ``f_j`` for at least one assignment."""
    pa = model.parents[j]
    tab = np.asarray(model.functions[j])
    idx = np.arange(len(tab))
    out = []
    for t, h in enumerate(pa):
        bit = 1 << (len(pa) - 1 - t)
        if np.any(tab != tab[idx ^ bit]):
            out.append(h)
    return tuple(out)


def adjacency_of_model(model):
    """Binary matrix with ``A[h, j] = 1`` iff ``f_j`` depends on ``x_h``.

    Listed parents that never change ``f_j`` are dropped.
    """
    A = np.zeros((model.d, model.d), dtype=np.uint8)
    for j in range(model.d):
        for h in active_parents(model, j):
            A[h, j] = 1
    return A


def is_topological(order, A):
    pos = {lab: k for k, lab in enumerate(order)}
    hs, js = np.nonzero(A)
    return all(pos[h] < pos[j] for h, j in zip(hs, js))


def example_model(noise=(0.1, 0.2, 0.3, 0.4)):
    """Four-variable model with x2 = x1, x3 = x1 AND x2, x4 = x1 OR x3."""
    return BexsamModel(
        order=(0, 1, 2, 3),
        parents=((), (0,), (0, 1), (0, 2)),
        functions=((0,), (0, 1), (0, 0, 0, 1), (0, 1, 1, 1)),
        noise=tuple(noise),
    )
