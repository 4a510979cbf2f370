"""Floater-Hormann barycentric rational interpolation and its mapped variant.

The FH family blends local degree-d polynomial interpolants into a rational
interpolant with no real poles; with weights computed at the fake nodes it
inherits the Gibbs suppression of the jump-shift map while staying pole-free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NodeSet, SampleSet
from .interp1d import MappedInterpolant, bary_eval, mapped_interp_build
from .maps import MapSpec


@dataclass(frozen=True)
class FHWeights:
    """Floater-Hormann weights for a node set and blend parameter d."""

    nodes: NodeSet
    d: int
    w: np.ndarray


def fh_weights(nodes: NodeSet, d: int) -> FHWeights:
    """w_i = sum_{k in J_i} (-1)^k prod_{j=k..k+d, j!=i} 1/(x_i - x_j),

    with J_i = {k : i-d <= k <= i, 0 <= k <= N-1-d} (0-based). d = 0 gives
    alternating signs; d = N-1 collapses to the polynomial weights. The
    induced interpolant reproduces polynomials of degree up to d.
    """
    x = nodes.nodes
    n = len(x)
    if not 0 <= d <= n - 1:
        raise ValueError(f"blend degree d must satisfy 0 <= d <= {n - 1}, got {d}")
    w = np.zeros(n)
    for i in range(n):
        total = 0.0
        for k in range(max(i - d, 0), min(i, n - 1 - d) + 1):
            prod = 1.0
            for j in range(k, k + d + 1):
                if j != i:
                    prod /= x[i] - x[j]
            total += (-1.0) ** k * prod
        w[i] = total
    if np.any(w == 0.0) or not np.all(np.isfinite(w)):
        raise ValueError("degenerate Floater-Hormann weights")
    return FHWeights(nodes, d, w)


def rational_eval(weights: FHWeights, values, x):
    """Barycentric rational quotient; node hits return the stored value."""
    values = np.asarray(values, dtype=float)
    if len(values) != len(weights.nodes):
        raise ValueError("values length must match node count")
    out = bary_eval(weights.nodes.nodes, weights.w, values, x)
    if not np.all(np.isfinite(out)):
        raise ZeroDivisionError("rational denominator vanished off-node")
    return out


def mapped_rational_build(map_spec: MapSpec, samples: SampleSet, d: int) -> MappedInterpolant:
    """FH interpolant at the fake nodes: r_f(x) = sum f_j b_j(S(x))."""
    return mapped_interp_build(map_spec, samples, basis="rational", blend_degree=d)
