"""Benchmark functions with known jumps, a jump detector, and experiment drivers.

The three piecewise test functions follow the left-closed convention: a point
sitting exactly on a branch boundary takes the left branch's value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad as _adaptive_quad

from .core import DiscontinuitySet, EvalGrid, Interval, SampleSet, rmae
from .interp1d import mapped_interp_build
from .maps import build_graspa, build_identity, build_s_gibbs
from .quad import clenshaw_curtis, newton_cotes, s_gibbs_quadrature
from .rational import mapped_rational_build

_SQRT2 = np.sqrt(2.0)


def eval_f1(x):
    """Piecewise on [-1, 1]: a quintic-pole bump for x <= 0, exp(-x) after."""
    x = np.asarray(x, dtype=float)
    if np.any(x < -1.0) or np.any(x > 1.0):
        raise ValueError("f1 is defined on [-1, 1]")
    left = -((1.0 / (10.0 * ((x + 0.5) ** 2 + 0.1))) ** 5)
    return np.where(x <= 0.0, left, np.exp(-x))


def eval_f2(x):
    """Piecewise on [-5, 5]: log(-sin(x/2)), tan(x/2), arctan(e^{-1/(x-5.1)})."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -5.0) or np.any(arr > 5.0):
        raise ValueError("f2 is defined on [-5, 5]")
    x = np.atleast_1d(arr)
    out = np.empty_like(x)
    m1 = x <= -2.5
    m2 = (x > -2.5) & (x <= 2.0)
    m3 = x > 2.0
    out[m1] = np.log(-np.sin(x[m1] / 2.0))
    out[m2] = np.tan(x[m2] / 2.0)
    out[m3] = np.arctan(np.exp(-1.0 / (x[m3] - 5.1)))
    return out.reshape(arr.shape)


def eval_f3(x):
    """Piecewise on [-2, 2]: sin^2(x) - 2, then log(x^2 + 2) + cos(x)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < -2.0) or np.any(x > 2.0):
        raise ValueError("f3 is defined on [-2, 2]")
    return np.where(x <= 0.2,
                    np.sin(x) ** 2 - 2.0,
                    np.log(x ** 2 + 2.0) + np.cos(x))


def eval_runge(x):
    """The classic Runge bump 1/(1 + 25 x^2) on [-1, 1]."""
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + 25.0 * x ** 2)


def _f3_reference_integral() -> float:
    # branch antiderivatives: -3x/2 - sin(2x)/4, and
    # x log(x^2+2) - 2x + 2 sqrt(2) atan(x/sqrt(2)) + sin(x)
    def anti1(x):
        return -1.5 * x - np.sin(2.0 * x) / 4.0

    def anti2(x):
        return x * np.log(x * x + 2.0) - 2.0 * x + 2.0 * _SQRT2 * np.arctan(x / _SQRT2) + np.sin(x)

    return float((anti1(0.2) - anti1(-2.0)) + (anti2(2.0) - anti2(0.2)))


def _adaptive_branch_integral(fn: Callable, edges) -> float:
    """Adaptive quadrature per smooth branch; raises if self-reported error

    exceeds 1e-12.
    """
    total, err = 0.0, 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, est = _adaptive_quad(fn, lo, hi, epsabs=1e-14, epsrel=1e-14, limit=200)
        total += val
        err += est
    if err > 1e-12:
        raise RuntimeError(f"reference integral error estimate {err:.2e} too large")
    return total


@dataclass(frozen=True)
class TestFunction:
    """Branch-evaluable benchmark function with its true jump metadata."""

    name: str
    interval: Interval
    fn: Callable
    discontinuities: DiscontinuitySet
    reference_integral: float

    def __call__(self, x):
        return self.fn(x)


def _one_sided_jumps(fn, locations, eps=1e-10) -> np.ndarray:
    locations = np.asarray(locations, dtype=float)
    return np.abs(fn(locations + eps) - fn(locations - eps))


def _build_registry() -> dict:
    k1 = Interval(-1.0, 1.0)
    k2 = Interval(-5.0, 5.0)
    k3 = Interval(-2.0, 2.0)

    # f1: right limit exp(0) = 1, left value -(1/3.5)^5
    d1 = abs(1.0 - (-((1.0 / 3.5) ** 5)))
    f1 = TestFunction(
        "f1", k1, eval_f1,
        DiscontinuitySet(k1, np.array([0.0]), np.array([d1])),
        _adaptive_branch_integral(eval_f1, [-1.0, 0.0, 1.0]))

    # f2: branch limits taken one-sided at xi +- 1e-10
    locs2 = np.array([-2.5, 2.0])
    f2 = TestFunction(
        "f2", k2, eval_f2,
        DiscontinuitySet(k2, locs2, _one_sided_jumps(eval_f2, locs2)),
        _adaptive_branch_integral(eval_f2, [-5.0, -2.5, 2.0, 5.0]))

    # f3: both branch expressions are continuous at 0.2, evaluate exactly
    d3 = abs((np.log(0.2 ** 2 + 2.0) + np.cos(0.2)) - (np.sin(0.2) ** 2 - 2.0))
    f3 = TestFunction(
        "f3", k3, eval_f3,
        DiscontinuitySet(k3, np.array([0.2]), np.array([d3])),
        _f3_reference_integral())

    runge = TestFunction(
        "runge", k1, eval_runge, DiscontinuitySet.empty(k1),
        float(2.0 / 5.0 * np.arctan(5.0)))

    const1 = TestFunction(
        "const1", Interval(0.0, 1.0),
        lambda x: np.ones_like(np.asarray(x, dtype=float)),
        DiscontinuitySet.empty(Interval(0.0, 1.0)), 1.0)

    return {f.name: f for f in (f1, f2, f3, runge, const1)}


TEST_FUNCTIONS = _build_registry()


def detect_jumps(samples: SampleSet, threshold: float) -> DiscontinuitySet:
    """Flag consecutive-sample gaps exceeding threshold times the median gap.

    Jump locations are estimated at the midpoints of the flagged intervals,
    magnitudes as the raw value differences. Median-relative thresholding
    keeps the detector insensitive to the function's overall scale.
    """
    if len(samples.nodes) < 3:
        raise ValueError("need at least 3 samples to detect jumps")
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    x = samples.nodes.nodes
    df = np.abs(np.diff(samples.values))
    cut = threshold * np.median(df)
    idx = np.nonzero(df > cut)[0]
    mids = (x[idx] + x[idx + 1]) / 2.0
    return DiscontinuitySet(samples.nodes.interval, mids, df[idx])


_EXAMPLE_METHODS = {
    1: ("classical", "s_gibbs", "graspa"),
    2: ("fh", "s_gibbs_fh"),
    3: ("newton_cotes", "clenshaw_curtis", "s_gibbs_quad"),
}


def run_example(example_id: int, n: int, methods=None, blend_degree: int = 8,
                resolution: int = 2001, k: float | None = None) -> list:
    """Reproduce one benchmark point: per-method RMAE (1, 2) or integral

    error (3) on an equispaced grid, as rows {method, n, metric, value}.

    For examples 1 and 3, n is the polynomial degree (n+1 nodes); for
    example 2 it is the node count, matching the rational interpolant's
    natural size parameter.
    """
    if example_id not in _EXAMPLE_METHODS:
        raise ValueError("example id must be 1, 2 or 3")
    if methods is None:
        methods = _EXAMPLE_METHODS[example_id]
    unknown = set(methods) - set(_EXAMPLE_METHODS[example_id])
    if unknown:
        raise ValueError(f"unknown methods for example {example_id}: {sorted(unknown)}")

    fn = TEST_FUNCTIONS[{1: "f1", 2: "f2", 3: "f3"}[example_id]]
    rows = []

    if example_id in (1, 2):
        from .core import NodeSet
        degree = n if example_id == 1 else n - 1
        nodes = NodeSet.equispaced(fn.interval, degree)
        samples = SampleSet.from_function(fn, nodes)
        grid = EvalGrid(fn.interval, resolution).points
        truth = fn(grid)
        for method in methods:
            if method == "classical":
                interp = mapped_interp_build(build_identity(fn.interval), samples)
            elif method == "s_gibbs":
                interp = mapped_interp_build(
                    build_s_gibbs(fn.interval, fn.discontinuities, k), samples)
            elif method == "graspa":
                interp = mapped_interp_build(
                    build_graspa(fn.interval, fn.discontinuities, k), samples)
            elif method == "fh":
                interp = mapped_rational_build(
                    build_identity(fn.interval), samples, blend_degree)
            else:  # s_gibbs_fh
                interp = mapped_rational_build(
                    build_s_gibbs(fn.interval, fn.discontinuities, k),
                    samples, blend_degree)
            rows.append({"method": method, "n": n, "metric": "rmae",
                         "value": rmae(truth, interp(grid))})
    else:
        for method in methods:
            if method == "newton_cotes":
                rule = newton_cotes(fn.interval, n)
            elif method == "clenshaw_curtis":
                rule = clenshaw_curtis(fn.interval, n)
            else:  # s_gibbs_quad
                rule = s_gibbs_quadrature(fn.interval, fn.discontinuities, n, k)
            value = rule.apply(fn(rule.nodes.nodes))
            rows.append({"method": method, "n": n, "metric": "abs_err",
                         "value": abs(value - fn.reference_integral)})
    return rows
