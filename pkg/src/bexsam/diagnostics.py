"""Pre-flight check that observed marginals are consistent with skewed noise.

Under the model, ``P(x=0) - P(x=1) = (1 - 2p) * (2 P(f=1) - 1)``, so a
marginal away from one half implies skewed noise *and* a non-balanced
function. The converse does not hold: a marginal near one half proves
nothing.
"""

from dataclasses import asdict, dataclass

import numpy as np

from .exceptions import DataError
from .generator import all_assignments, exact_distribution
from .model import eval_function_batch


@dataclass(frozen=True)
class VariableSkew:
    label: int
    p_one: float
    deviation: float
    confirmed: bool

    @property
    def inconclusive(self):
        return not self.confirmed


@dataclass(frozen=True)
class SkewReport:
    n: int
    threshold: float
    variables: tuple

    def to_dict(self):
        return {
            "n": self.n,
            "threshold": self.threshold,
            "variables": [dict(asdict(v), inconclusive=v.inconclusive) for v in self.variables],
        }

    def format(self, names=None):
        lines = ["%-10s %8s %10s  %s" % ("variable", "P(x=1)", "|P-0.5|", "status")]
        for v in self.variables:
            name = names[v.label] if names else "v%d" % v.label
            status = "skew confirmed" if v.confirmed else "inconclusive"
            lines.append("%-10s %8.4f %10.4f  %s" % (name, v.p_one, v.deviation, status))
        lines.append("threshold = %.4g (n = %d)" % (self.threshold, self.n))
        return "\n".join(lines)


def default_threshold(n):
    """Two standard errors of a fair coin at sample size ``n``."""
    return 2.0 * np.sqrt(0.25 / n)


def skewness_report(data, threshold=None):
    if data.n == 0:
        raise DataError("dataset has no rows")
    if threshold is None:
        threshold = default_threshold(data.n)
    if threshold < 0:
        raise ValueError("threshold must be non-negative, got %r" % threshold)
    freq = data.rows.mean(axis=0)
    out = []
    for c in np.argsort(data.labels):
        p = float(freq[c])
        dev = abs(p - 0.5)
        out.append(VariableSkew(int(data.labels[c]), p, dev, bool(dev > threshold)))
    return SkewReport(data.n, float(threshold), tuple(out))


def exact_marginals(model):
    """Exact ``P(x_j = 1)`` and ``P(f_j = 1)`` for every label."""
    probs = exact_distribution(model)
    X = all_assignments(model.d)
    p_x = probs @ X
    p_f = np.array([probs @ eval_function_batch(model, j, X) for j in range(model.d)])
    return p_x, p_f
