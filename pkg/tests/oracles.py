"""Brute-force reference computations, deliberately written without numpy
vectorisation or any code path shared with the package under test."""

import itertools
import math


def bits_of(idx, m):
    return tuple((idx >> (m - 1 - t)) & 1 for t in range(m))


def f_value(model, j, assignment):
    pa = model.parents[j]
    idx = 0
    for h in pa:
        idx = idx * 2 + assignment[h]
    return model.functions[j][idx]


def joint_probability(model, assignment):
    """P(x = assignment): the noise vector is fixed by the assignment."""
    p = 1.0
    for j in range(model.d):
        e = assignment[j] ^ f_value(model, j, assignment)
        p *= model.noise[j] if e else 1.0 - model.noise[j]
    return p


def joint_table(model):
    """Dict assignment -> probability over labels 0..d-1."""
    return {a: joint_probability(model, a) for a in itertools.product((0, 1), repeat=model.d)}


def conditional(model, j, given):
    """P(x_j = 1 | all other labels), ``given`` maps label -> bit."""
    num = den = 0.0
    for v in (0, 1):
        a = tuple(v if k == j else given[k] for k in range(model.d))
        p = joint_probability(model, a)
        den += p
        if v == 1:
            num += p
    return num / den


def sorted_mi(weights, labels, target):
    """Sorted mutual information from a dict {assignment tuple: weight}."""
    a = labels.index(target)
    m = len(labels)
    total = sum(weights.values())
    sel = {}
    for bits, w in weights.items():
        key = bits[:a] + bits[a + 1:]
        pair = sel.setdefault(key, [0.0, 0.0])
        pair[bits[a]] += w
    live = {k: v for k, v in sel.items() if v[0] + v[1] > 0}
    n_sel = len(live)
    sorted_joint = {}
    p_sel = {}
    for k, (c0, c1) in live.items():
        c = c0 + c1
        p_sel[k] = c / total
        lo, hi = sorted((c0 / c, c1 / c))
        sorted_joint[(0, k)] = lo * p_sel[k]
        sorted_joint[(1, k)] = hi * p_sel[k]
    support = sum(p_sel.values())
    marg = {v: sum(sorted_joint[(v, k)] for k in live) / support for v in (0, 1)}
    acc = 0.0
    for (v, k), pj in sorted_joint.items():
        if pj > 0:
            acc += pj * math.log(pj / (marg[v] * p_sel[k]))
    return (2 ** (m - 1) / n_sel) * acc


def weights_from_counts(counts, m):
    return {bits_of(i, m): float(c) for i, c in enumerate(counts)}


def depends_on(model, j, h):
    """Brute force: some full assignment pair differing in h changes f_j."""
    for a in itertools.product((0, 1), repeat=model.d):
        b = list(a)
        b[h] ^= 1
        if f_value(model, j, a) != f_value(model, j, tuple(b)):
            return True
    return False


def descendants_free(A, remaining):
    """Labels of ``remaining`` with no child inside ``remaining``."""
    return {j for j in remaining if not any(A[j][k] for k in remaining if k != j)}
