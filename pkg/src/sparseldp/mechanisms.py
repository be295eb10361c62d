"""Sparse locally private channels on integer alphabets.

A channel assigns each input x a probability mass function supported on a
small admissible output set S(x), with mass proportional to a distance
kernel (discrete-Laplace or Gaussian).  Restricting every S(x) to the window
of radius t around x gives the translation-invariant truncated families,
which admit closed forms for normalizers and distortion moments.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

LAPLACE = "laplace"
GAUSSIAN = "gaussian"


class SpecError(ValueError):
    """A channel description or parameter violates a structural constraint."""


class UnknownInputError(SpecError):
    """Lookup of an input symbol the channel does not declare."""


@dataclass(frozen=True)
class Kernel:
    """Distance kernel: weight(d) = exp(-lam * d) or exp(-d^2 / (2 sigma^2)).

    `param` is the inverse temperature lam for the discrete-Laplace family
    and the scale sigma for the Gaussian family; it must be positive.
    """

    family: str
    param: float

    def __post_init__(self):
        if self.family not in (LAPLACE, GAUSSIAN):
            raise SpecError(f"kernel family must be {LAPLACE!r} or {GAUSSIAN!r}, got {self.family!r}")
        if not (isinstance(self.param, (int, float)) and math.isfinite(self.param) and self.param > 0):
            raise SpecError(f"kernel parameter must be a positive finite number, got {self.param!r}")

    @classmethod
    def laplace(cls, lam: float) -> "Kernel":
        return cls(LAPLACE, float(lam))

    @classmethod
    def gaussian(cls, sigma: float) -> "Kernel":
        return cls(GAUSSIAN, float(sigma))

    def log_weight(self, distance):
        """Log kernel weight at nonnegative distance(s); accepts scalars or arrays."""
        d = np.asarray(distance, dtype=float)
        if self.family == LAPLACE:
            out = -self.param * d
        else:
            out = -(d * d) / (2.0 * self.param * self.param)
        return out if out.ndim else float(out)

    def weight(self, distance):
        w = np.exp(self.log_weight(distance))
        return w if isinstance(w, np.ndarray) else float(w)


def _check_int(name: str, value, minimum: int | None = None):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise SpecError(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SpecError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def _check_epsilon(epsilon) -> float:
    if not (isinstance(epsilon, (int, float)) and math.isfinite(epsilon) and epsilon >= 0):
        raise SpecError(f"epsilon must be a nonnegative finite number, got {epsilon!r}")
    return float(epsilon)


@dataclass(frozen=True, eq=False)
class MechanismSpec:
    """A sparse channel: kernel, finite alphabets, and per-input supports.

    `distance` is None for |x - y| on the integers, or a matrix of
    nonnegative reals indexed by (input position, output position) with
    zero diagonal wherever an input also appears as an output.  Instances
    are immutable after validation and safe to share across threads.
    """

    kernel: Kernel
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    supports: Mapping[int, tuple[int, ...]]
    distance: tuple[tuple[float, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(_check_int("input symbol", x) for x in self.inputs))
        object.__setattr__(self, "outputs", tuple(_check_int("output symbol", y) for y in self.outputs))
        if not self.inputs:
            raise SpecError("inputs must be nonempty")
        if not self.outputs:
            raise SpecError("outputs must be nonempty")
        if len(set(self.inputs)) != len(self.inputs):
            raise SpecError("inputs contain duplicates")
        if len(set(self.outputs)) != len(self.outputs):
            raise SpecError("outputs contain duplicates")
        out_set = set(self.outputs)
        supports = {}
        for x, sup in dict(self.supports).items():
            x = _check_int("support key", x)
            if x not in self.inputs:
                raise SpecError(f"supports declare unknown input {x}")
            sup = tuple(sorted({_check_int("support element", y) for y in sup}))
            if not sup:
                raise SpecError(f"support of input {x} is empty")
            bad = [y for y in sup if y not in out_set]
            if bad:
                raise SpecError(f"support of input {x} contains {bad[0]} which is not an output")
            supports[x] = sup
        missing = [x for x in self.inputs if x not in supports]
        if missing:
            raise SpecError(f"input {missing[0]} has no support set")
        object.__setattr__(self, "supports", supports)
        if self.distance is not None:
            rows = tuple(tuple(float(v) for v in row) for row in self.distance)
            if len(rows) != len(self.inputs) or any(len(r) != len(self.outputs) for r in rows):
                raise SpecError(
                    f"distance matrix must be {len(self.inputs)} x {len(self.outputs)} (inputs x outputs)"
                )
            for i, row in enumerate(rows):
                for j, v in enumerate(row):
                    if not (math.isfinite(v) and v >= 0):
                        raise SpecError(f"distance[{i}][{j}] must be finite and >= 0, got {v}")
            for i, x in enumerate(self.inputs):
                if x in out_set and rows[i][self.outputs.index(x)] != 0.0:
                    raise SpecError(f"distance from input {x} to itself must be 0")
            object.__setattr__(self, "distance", rows)

    def support(self, x: int) -> tuple[int, ...]:
        """Admissible outputs for input x, ascending."""
        try:
            return self.supports[x]
        except KeyError:
            raise UnknownInputError(f"input {x} is not declared by this channel") from None

    def dist(self, x: int, y: int) -> float:
        if self.distance is None:
            return float(abs(x - y))
        try:
            i = self.inputs.index(x)
        except ValueError:
            raise UnknownInputError(f"input {x} is not declared by this channel") from None
        try:
            j = self.outputs.index(y)
        except ValueError:
            raise SpecError(f"output {y} is not declared by this channel") from None
        return self.distance[i][j]

    def _support_weights(self, x: int) -> np.ndarray:
        sup = self.support(x)
        d = np.array([self.dist(x, y) for y in sup], dtype=float)
        return np.exp(self.kernel.log_weight(d))

    def normalizer(self, x: int) -> float:
        """Sum of kernel weights over S(x); at least 1 when x is in its own support."""
        return float(self._support_weights(x).sum())

    def pmf(self, x: int) -> dict[int, float]:
        """Output distribution for input x; keys are exactly S(x)."""
        sup = self.support(x)
        w = self._support_weights(x)
        z = float(w.sum())
        if z == 0.0:
            raise SpecError(f"kernel weights underflow to zero on the support of input {x}")
        return {y: float(wi / z) for y, wi in zip(sup, w)}

    def pmf_vector(self, x: int) -> np.ndarray:
        """Masses aligned with `outputs`, zero off the support."""
        p = np.zeros(len(self.outputs))
        masses = self.pmf(x)
        for j, y in enumerate(self.outputs):
            if y in masses:
                p[j] = masses[y]
        return p


@dataclass(frozen=True)
class TruncatedParams:
    """Translation-invariant window family with support {x - t, ..., x + t}.

    `s` is the odd support size, t = (s - 1) / 2 the window radius.
    `epsilon` and `privacy_range` ride along for callers that pass the whole
    bundle around; the mechanism-level operations read only `kernel` and `s`.
    """

    kernel: Kernel
    s: int
    epsilon: float = 0.0
    privacy_range: int = 0

    def __post_init__(self):
        s = _check_int("support size", self.s, 1)
        if s % 2 == 0:
            raise SpecError(f"support size must be odd so the window radius is an integer, got {s}")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "privacy_range", _check_int("privacy range", self.privacy_range, 0))
        object.__setattr__(self, "epsilon", _check_epsilon(self.epsilon))

    @property
    def t(self) -> int:
        """Window radius (s - 1) / 2."""
        return (self.s - 1) // 2


@dataclass(frozen=True)
class DistortionMoments:
    """Expected absolute and squared deviation of the output from the input."""

    r1: float
    r2: float


def window_weights(kernel: Kernel, radius: int) -> np.ndarray:
    """Kernel weights at offsets -radius..radius, ascending."""
    radius = _check_int("radius", radius, 0)
    k = np.abs(np.arange(-radius, radius + 1)).astype(float)
    return np.exp(kernel.log_weight(k))


def window_normalizer(kernel: Kernel, radius: int) -> float:
    return float(window_weights(kernel, radius).sum())


def truncated_pmf(params: TruncatedParams, x: int) -> dict[int, float]:
    """Output distribution of the window family at input x.

    Mass at offset k is weight(|k|) divided by the window normalizer, so the
    result at any x is the result at 0 shifted by x, with identical floats.
    """
    x = _check_int("input", x)
    t = params.t
    w = window_weights(params.kernel, t)
    c = float(w.sum())
    return {x + k: float(w[k + t] / c) for k in range(-t, t + 1)}


def truncated_spec(params: TruncatedParams, inputs: Sequence[int]) -> MechanismSpec:
    """Materialize the window family as an explicit finite spec on `inputs`."""
    t = params.t
    supports = {int(x): tuple(range(int(x) - t, int(x) + t + 1)) for x in inputs}
    outputs = tuple(sorted({y for sup in supports.values() for y in sup}))
    return MechanismSpec(params.kernel, tuple(int(x) for x in inputs), outputs, supports)


def distortion_moments(params: TruncatedParams) -> DistortionMoments:
    """Closed-form first and second distortion moments of the window family."""
    t = params.t
    c = window_normalizer(params.kernel, t)
    j = np.arange(1, t + 1, dtype=float)
    w = np.exp(params.kernel.log_weight(j))
    r1 = float(2.0 * np.sum(j * w) / c)
    r2 = float(2.0 * np.sum(j * j * w) / c)
    return DistortionMoments(r1, r2)


def sample(mechanism: Union[MechanismSpec, TruncatedParams], x: int, seed: int, n: int) -> np.ndarray:
    """Draw n outputs for input x, deterministic for a fixed seed.

    Inverse-CDF over the support in ascending output order; the cumulative
    boundary is inclusive on the left, so u == F(y_{i-1}) selects y_i.
    """
    n = _check_int("sample count", n, 0)
    if isinstance(mechanism, TruncatedParams):
        masses = truncated_pmf(mechanism, x)
    else:
        masses = mechanism.pmf(x)
    ys = np.array(sorted(masses), dtype=np.int64)
    p = np.array([masses[int(y)] for y in ys])
    cum = np.cumsum(p)
    u = np.random.default_rng(seed).random(n)
    idx = np.searchsorted(cum, u, side="right")
    idx = np.minimum(idx, len(ys) - 1)  # rounding in cum[-1] must not index past the top atom
    return ys[idx]


def spec_from_dict(doc: Mapping) -> MechanismSpec:
    """Build a MechanismSpec from its JSON document form.

    Schema::

        {
          "kernel":   {"family": "laplace" | "gaussian", "param": number},
          "inputs":   [int, ...],
          "outputs":  [int, ...],
          "supports": {"<input>": [int, ...], ...},
          "distance": {"type": "abs"} | {"type": "matrix", "values": [[number]]}
        }

    `distance` is optional and defaults to absolute difference.
    """
    if not isinstance(doc, Mapping):
        raise SpecError("spec document must be a JSON object")
    kernel_doc = doc.get("kernel")
    if not isinstance(kernel_doc, Mapping) or "family" not in kernel_doc or "param" not in kernel_doc:
        raise SpecError('spec needs "kernel": {"family": ..., "param": ...}')
    if not isinstance(kernel_doc["param"], (int, float)) or isinstance(kernel_doc["param"], bool):
        raise SpecError("kernel.param must be a number")
    kernel = Kernel(kernel_doc["family"], float(kernel_doc["param"]))

    for key in ("inputs", "outputs"):
        if not isinstance(doc.get(key), list):
            raise SpecError(f'spec needs "{key}": [int, ...]')
        for v in doc[key]:
            if isinstance(v, bool) or not isinstance(v, int):
                raise SpecError(f"{key} must contain integers, got {v!r}")
    supports_doc = doc.get("supports")
    if not isinstance(supports_doc, Mapping):
        raise SpecError('spec needs "supports": {"<input>": [int, ...]}')
    supports = {}
    for key, sup in supports_doc.items():
        try:
            x = int(key)
        except (TypeError, ValueError):
            raise SpecError(f"supports key {key!r} is not an integer") from None
        if not isinstance(sup, list):
            raise SpecError(f"support of input {x} must be a list of integers")
        for v in sup:
            if isinstance(v, bool) or not isinstance(v, int):
                raise SpecError(f"support of input {x} must contain integers, got {v!r}")
        supports[x] = tuple(sup)

    distance = None
    dist_doc = doc.get("distance")
    if dist_doc is not None:
        if not isinstance(dist_doc, Mapping) or "type" not in dist_doc:
            raise SpecError('distance must be {"type": "abs"} or {"type": "matrix", "values": [[number]]}')
        if dist_doc["type"] == "abs":
            distance = None
        elif dist_doc["type"] == "matrix":
            values = dist_doc.get("values")
            if not isinstance(values, list) or not all(isinstance(r, list) for r in values):
                raise SpecError("distance matrix needs numeric values as a list of rows")
            distance = tuple(tuple(float(v) for v in row) for row in values)
        else:
            raise SpecError(f"distance type must be \"abs\" or \"matrix\", got {dist_doc['type']!r}")

    return MechanismSpec(kernel, tuple(doc["inputs"]), tuple(doc["outputs"]), supports, distance)


def load_spec(path) -> MechanismSpec:
    """Read and validate a MechanismSpec JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as err:
        raise SpecError(f"invalid JSON in {path}: {err}") from None
    return spec_from_dict(doc)
