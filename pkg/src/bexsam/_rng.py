"""Seed handling.

Every random stream is a PCG64 generator built from
``SeedSequence(entropy=seed, spawn_key=key)``. The spawn key names the
stream, so a benchmark cell/trial pair always receives the same generator
regardless of execution order or worker count:

========================  ===========================
stream                    spawn key
========================  ===========================
model for trial *t*       ``(cell, t, 0)``
data for trial *t*        ``(cell, t, 1)``
CLI generate: model       ``(0,)``
CLI generate: data        ``(1,)``
========================  ===========================
"""

import numpy as np

MODEL_STREAM = 0
DATA_STREAM = 1


def make_rng(seed, *key):
    seed = int(seed)
    if seed < 0:
        raise ValueError("seed must be non-negative, got %d" % seed)
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(ss))


def as_rng(rng):
    """Return a Generator from None, an int seed or an existing Generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    if rng is None:
        return np.random.default_rng()
    return make_rng(rng)
