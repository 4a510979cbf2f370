"""Polynomial interpolation in second barycentric form, on plain or fake nodes.

The mapped interpolant R_f(x) = P_g(S(x)) is a classical interpolant built at
the fake nodes S(X) against the original samples: no value of f is ever
recomputed. Everything here evaluates through the barycentric quotient, which
stays stable on the strongly clustered node sets the maps produce.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import EvalGrid, Interval, NodeSet, SampleSet, vdm_check
from .maps import MapSpec, map_apply

#: Relative distance under which an evaluation point counts as a node hit.
NODE_HIT_RTOL = 1e-15


def bary_weights(nodes: np.ndarray) -> np.ndarray:
    """Weights lambda_i = prod_{j != i} 1/(x_i - x_j), rescaled for range.

    Computed in log-magnitude/sign form and recentred on the median log
    magnitude before exponentiating; the common factor is invisible to the
    barycentric quotient but keeps equispaced weights finite well past the
    float64 overflow degree.
    """
    x = np.asarray(nodes, dtype=float)
    if len(x) == 1:
        return np.ones(1)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    logs = -np.sum(np.log(np.abs(diff)), axis=1)
    signs = np.prod(np.sign(diff), axis=1)
    lam = signs * np.exp(logs - np.median(logs))
    if not np.all(np.isfinite(lam)) or np.any(lam == 0.0):
        raise ValueError("ill-scaled nodes: barycentric weights over/underflow")
    return lam


def bary_eval(nodes: np.ndarray, weights: np.ndarray, values: np.ndarray, x):
    """Second barycentric form at x; exact or near (1e-15 relative) node hits

    return the stored value directly, removing the quotient's singularity.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    t = np.atleast_1d(arr)
    nodes = np.asarray(nodes, dtype=float)
    values = np.asarray(values, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = weights[None, :] / (t[:, None] - nodes[None, :])
        out = (c @ values) / np.sum(c, axis=1)
    hit = np.isclose(t[:, None], nodes[None, :], rtol=NODE_HIT_RTOL, atol=0.0)
    if hit.any():
        rows, cols = np.nonzero(hit)
        out[rows] = values[cols]
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class BarycentricPolyWeights:
    """Node set plus its (rescaled) polynomial barycentric weights."""

    nodes: NodeSet
    lam: np.ndarray


def poly_bary_weights(nodes: NodeSet) -> BarycentricPolyWeights:
    if not vdm_check(nodes):
        raise ValueError("nodes fail the distinctness check")
    return BarycentricPolyWeights(nodes, bary_weights(nodes.nodes))


def poly_eval(weights: BarycentricPolyWeights, values, x):
    values = np.asarray(values, dtype=float)
    if len(values) != len(weights.nodes):
        raise ValueError("values length must match node count")
    return bary_eval(weights.nodes.nodes, weights.lam, values, x)


@dataclass(frozen=True)
class MappedInterpolant:
    """R_f = P_g o S: weights at the fake nodes, values from the raw samples.

    basis is "polynomial" or "rational"; blend_degree is the Floater-Hormann
    parameter d for the rational case and None otherwise.
    """

    map_spec: MapSpec
    samples: SampleSet
    fake_nodes: NodeSet
    basis: str
    weights: np.ndarray
    blend_degree: int | None = None

    def __call__(self, x):
        return bary_eval(self.fake_nodes.nodes, self.weights,
                         self.samples.values, self.map_spec(x))

    def to_dict(self) -> dict:
        return {
            "map": self.map_spec.to_dict(),
            "basis": self.basis,
            "blend_degree": self.blend_degree,
            "nodes": self.samples.nodes.nodes.tolist(),
            "fake_nodes": self.fake_nodes.nodes.tolist(),
            "weights": self.weights.tolist(),
            "values": self.samples.values.tolist(),
        }


def mapped_interp_build(map_spec: MapSpec, samples: SampleSet,
                        basis: str = "polynomial",
                        blend_degree: int | None = None) -> MappedInterpolant:
    """Build R_f for the given map and samples.

    The weights (polynomial lambda or FH w) are computed at the fake nodes;
    the stored sample values are reused unchanged, so R_f interpolates the
    raw data exactly at the original nodes.
    """
    fake = map_apply(map_spec, samples.nodes)
    if basis == "polynomial":
        w = bary_weights(fake.nodes)
        blend_degree = None
    elif basis == "rational":
        from .rational import fh_weights
        if blend_degree is None:
            raise ValueError("rational basis requires a blend degree d")
        w = fh_weights(fake, blend_degree).w
    else:
        raise ValueError(f"unknown basis kind {basis!r}")
    return MappedInterpolant(map_spec, samples, fake, basis, w, blend_degree)


def mapped_interp_eval(interp: MappedInterpolant, x):
    return interp(x)


@dataclass(frozen=True)
class LebesgueReport:
    nodes: NodeSet
    grid: EvalGrid
    lebesgue_constant: float
    argmax: float


def lebesgue_function(nodes: np.ndarray, points: np.ndarray) -> np.ndarray:
    """sum_i |l_i(x)| over the points, via the barycentric cardinal form."""
    lam = bary_weights(nodes)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = lam[None, :] / (points[:, None] - nodes[None, :])
        out = np.sum(np.abs(c), axis=1) / np.abs(np.sum(c, axis=1))
    hit = np.any(np.isclose(points[:, None], nodes[None, :],
                            rtol=NODE_HIT_RTOL, atol=0.0), axis=1)
    out[hit] = 1.0
    return out


def lebesgue_constant(nodes: NodeSet, grid: EvalGrid | None = None) -> LebesgueReport:
    """Max of the Lebesgue function over the grid (plus the nodes themselves).

    A grid maximum is a lower bound on the true constant; the default
    10001-point grid makes the bias negligible at the degrees used here.
    """
    if grid is None:
        grid = EvalGrid(nodes.interval, 10001)
    if grid.resolution < 10 * len(nodes):
        raise ValueError("grid resolution must be at least 10x the node count")
    pts = np.unique(np.concatenate([grid.points, nodes.nodes]))
    values = lebesgue_function(nodes.nodes, pts)
    i = int(np.argmax(values))
    return LebesgueReport(nodes, grid, float(values[i]), float(pts[i]))


def stability_gap(interp_f: MappedInterpolant, interp_g: MappedInterpolant,
                  grid: EvalGrid) -> float:
    """Max grid difference of two interpolants sharing nodes, map and basis.

    Bounded by the Lebesgue constant of the fake nodes times the max data
    perturbation.
    """
    same = (interp_f.map_spec == interp_g.map_spec
            and interp_f.basis == interp_g.basis
            and interp_f.blend_degree == interp_g.blend_degree
            and np.array_equal(interp_f.samples.nodes.nodes, interp_g.samples.nodes.nodes))
    if not same:
        raise ValueError("interpolants do not share map, nodes and basis")
    pts = grid.points
    return float(np.max(np.abs(interp_f(pts) - interp_g(pts))))
