"""Quadrature rules from (possibly mapped) cardinal bases.

All weights come from one engine: integrate the barycentric cardinal
functions of the rule's nodes, composed with the node map, over each smooth
piece of the map. For the jump-shift map the pieces have unit slope, so the
gaps between mapped pieces simply drop out of the integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .core import DiscontinuitySet, Interval, NodeSet
from .interp1d import NODE_HIT_RTOL, bary_weights
from .maps import MapSpec, build_identity, build_s_gibbs, build_s_runge, map_apply

#: Gauss-Legendre points per panel when integrating cardinal functions.
_GL_POINTS = 64


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes, weights, and where they came from.

    The weight sum is validated against b - a with a tolerance that grows
    with sum|w_i|: high-degree equispaced rules carry enormous alternating
    weights whose cancellation noise is the instability under study, not a
    construction bug.
    """

    nodes: NodeSet
    weights: np.ndarray
    provenance: str
    source_interval: Interval

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if len(w) != len(self.nodes):
            raise ValueError("weights length must match node count")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        length = self.source_interval.length
        tol = max(1e-12 * length, 64 * np.finfo(float).eps * np.sum(np.abs(w)))
        if abs(math.fsum(w) - length) > tol:
            raise ValueError(
                f"weights sum to {math.fsum(w)!r}, expected {length!r}")

    def apply(self, values) -> float:
        values = np.asarray(values, dtype=float)
        if len(values) != len(self.weights):
            raise ValueError("values length must match weight count")
        return math.fsum(self.weights * values)

    def to_csv_rows(self) -> list:
        return [(float(x), float(w)) for x, w in zip(self.nodes.nodes, self.weights)]


def apply_rule(rule: QuadratureRule, values) -> float:
    return rule.apply(values)


def _cardinal_integrals(fake_nodes: np.ndarray, map_spec: MapSpec, degree: int) -> np.ndarray:
    """w_i = sum over smooth pieces of int l_i(S(x)) dx.

    Composite Gauss-Legendre panels per piece: the integrand is a cosine
    polynomial of trig degree up to n under the CL warp, so the panel count
    scales with n.
    """
    lam = bary_weights(fake_nodes)
    gx, gw = leggauss(_GL_POINTS)
    panels = max(2, math.ceil(degree / 4))
    w = np.zeros(len(fake_nodes))
    for piece, _ in map_spec.smooth_pieces():
        edges = np.linspace(piece.a, piece.b, panels + 1)
        for lo, hi in zip(edges[:-1], edges[1:]):
            t = (lo + hi) / 2.0 + (hi - lo) / 2.0 * gx
            y = np.asarray(map_spec(t), dtype=float)
            with np.errstate(divide="ignore", invalid="ignore"):
                c = lam[None, :] / (y[:, None] - fake_nodes[None, :])
                card = c / np.sum(c, axis=1)[:, None]
            hit = np.isclose(y[:, None], fake_nodes[None, :],
                             rtol=NODE_HIT_RTOL, atol=0.0)
            if hit.any():
                rows, cols = np.nonzero(hit)
                card[rows, :] = 0.0
                card[rows, cols] = 1.0
            w += (hi - lo) / 2.0 * (gw @ card)
    return w


def newton_cotes(interval: Interval, n: int) -> QuadratureRule:
    """Closed global Newton-Cotes rule on the n+1 equispaced points.

    Exact for polynomials of degree <= n. Large-n rules are valid objects;
    their exploding alternating weights are the phenomenon under study.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    nodes = NodeSet.equispaced(interval, n)
    w = _cardinal_integrals(nodes.nodes, build_identity(interval), n)
    return QuadratureRule(nodes, w, "newton_cotes", interval)


def clenshaw_curtis(interval: Interval, n: int) -> QuadratureRule:
    """Interpolatory rule at the CL points; positive weights, degree-n exact."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nodes = NodeSet.chebyshev_lobatto(interval, n)
    w = _cardinal_integrals(nodes.nodes, build_identity(interval), n)
    return QuadratureRule(nodes, w, "clenshaw_curtis", interval)


def fake_cl_weights(interval: Interval, n: int) -> QuadratureRule:
    """Weights of the CL-warped equispaced points: int l_i(S(x)) dx.

    These come out equal to the composite trapezoid weights
    h*[1/2, 1, ..., 1, 1/2]; the rule checks its own weights against that
    closed form and refuses to return anything that drifts past 1e-10.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    equi = NodeSet.equispaced(interval, n)
    spec = build_s_runge(interval)
    fake = map_apply(spec, equi)
    w = _cardinal_integrals(fake.nodes, spec, n)
    h = interval.length / n
    trap = np.full(n + 1, h)
    trap[0] = trap[-1] = h / 2.0
    drift = float(np.max(np.abs(w - trap)))
    if drift > 1e-10:
        raise RuntimeError(
            f"mapped-CL weights deviate from trapezoid by {drift:.3e}; "
            "map or integration bug")
    return QuadratureRule(equi, w, "fake_cl", interval)


def s_gibbs_quadrature(interval: Interval, disc: DiscontinuitySet,
                       n: int, k: float | None = None) -> QuadratureRule:
    """Rule for discontinuous integrands: cardinals of the jump-shifted nodes.

    The map translates each piece rigidly, so int l_i(S(x)) dx is a plain
    polynomial integral over the mapped pieces with the gaps excluded. With
    no discontinuities this is exactly the global Newton-Cotes rule.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    equi = NodeSet.equispaced(interval, n)
    spec = build_s_gibbs(interval, disc, k)
    fake = map_apply(spec, equi)
    w = _cardinal_integrals(fake.nodes, spec, n)
    return QuadratureRule(equi, w, "s_gibbs_mapped", interval)
