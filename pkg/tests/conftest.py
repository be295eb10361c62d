"""Shared randomized-spec generators for the test suite."""

import numpy as np

from sparseldp import Kernel, MechanismSpec

SYMBOLS = np.arange(-10, 11)


def random_kernel(rng):
    if rng.random() < 0.5:
        return Kernel.laplace(float(rng.uniform(0.1, 2.0)))
    return Kernel.gaussian(float(rng.uniform(0.5, 3.0)))


def random_spec(rng, max_outputs=12, allow_matrix=True):
    """A small random channel: random alphabets, supports, kernel, distance."""
    n_out = int(rng.integers(2, max_outputs + 1))
    outputs = sorted(int(v) for v in rng.choice(SYMBOLS, size=n_out, replace=False))
    n_in = int(rng.integers(2, 5))
    inputs = sorted(int(v) for v in rng.choice(SYMBOLS, size=n_in, replace=False))
    supports = {}
    for x in inputs:
        k = int(rng.integers(1, n_out + 1))
        supports[x] = sorted(int(v) for v in rng.choice(outputs, size=k, replace=False))
    distance = None
    if allow_matrix and rng.random() < 0.3:
        m = rng.uniform(0.0, 4.0, size=(n_in, n_out))
        for i, x in enumerate(inputs):
            if x in outputs:
                m[i][outputs.index(x)] = 0.0
        distance = tuple(tuple(float(v) for v in row) for row in m)
    return MechanismSpec(random_kernel(rng), tuple(inputs), tuple(outputs), supports, distance)


def random_common_support_spec(rng, max_outputs=10):
    """A random channel whose inputs all share one support set."""
    n_out = int(rng.integers(2, max_outputs + 1))
    outputs = sorted(int(v) for v in rng.choice(SYMBOLS, size=n_out, replace=False))
    n_in = int(rng.integers(2, 5))
    inputs = sorted(int(v) for v in rng.choice(SYMBOLS, size=n_in, replace=False))
    k = int(rng.integers(1, n_out + 1))
    common = sorted(int(v) for v in rng.choice(outputs, size=k, replace=False))
    supports = {x: common for x in inputs}
    return MechanismSpec(random_kernel(rng), tuple(inputs), tuple(outputs), supports)
