"""Injective node maps: Kosloff-Tal-Ezer, CL warp, jump-shift, and their blend.

Every map S here is strictly increasing on its host interval, so mapping a
node set produces a valid (distinct, ordered) set of fake nodes. Building an
interpolant at S(X) against the original samples is what removes the Runge
and Gibbs artifacts without ever resampling the function.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import (
    DISTINCTNESS_REL_TOL,
    DiscontinuitySet,
    Interval,
    MappedCollisionError,
    NodeSet,
    Partition,
)

KINDS_1D = ("identity", "kte", "s_runge", "s_gibbs", "graspa")


def kte_eval(alpha: float, x):
    """Kosloff-Tal-Ezer map sin(c*x)/sin(c), c = alpha*pi/2, on [-1, 1].

    Tends to the identity as alpha -> 0 and to the full trigonometric warp
    at alpha = 1. Odd and strictly increasing in x.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + 1e-14):
        raise ValueError("kte_eval is defined on [-1, 1]")
    c = alpha * np.pi / 2.0
    out = np.sin(c * np.clip(x, -1.0, 1.0)) / np.sin(c)
    return out if out.ndim else float(out)


def cl_warp(x, a: float, b: float):
    """The cosine warp of [a, b] onto itself sending equispaced to CL points."""
    x = np.asarray(x, dtype=float)
    out = (a + b) / 2.0 - (b - a) / 2.0 * np.cos(np.pi * (x - a) / (b - a))
    return out if out.ndim else float(out)


def default_shift(interval: Interval, disc: DiscontinuitySet) -> float:
    """Shift parameter making every inserted gap one interval-length wide.

    Large enough that the pulled-back function has no steep gradient across
    the gaps, small enough that the two node clusters stay numerically
    coupled at high degree.
    """
    if len(disc) == 0 or disc.max_jump == 0.0:
        raise ValueError("default shift needs at least one nonzero jump")
    return interval.length / disc.max_jump


@dataclass(frozen=True)
class MapSpec:
    """A concrete injective map S with its piecewise structure.

    kind is one of KINDS_1D. alpha applies to "kte"; disc and k to "s_gibbs"
    and "graspa". Callable on scalars or arrays of points in the host
    interval.
    """

    kind: str
    interval: Interval
    alpha: float | None = None
    disc: DiscontinuitySet | None = None
    k: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS_1D:
            raise ValueError(f"unknown map kind {self.kind!r}")

    # -- piecewise structure ------------------------------------------------

    @property
    def breakpoints(self) -> np.ndarray:
        """Interior abscissae where S may be non-smooth (the jump locations)."""
        if self.kind in ("s_gibbs", "graspa") and self.disc is not None:
            return self.disc.locations
        return np.empty(0)

    def partition(self) -> Partition:
        disc = self.disc if self.disc is not None else DiscontinuitySet.empty(self.interval)
        return Partition.split(self.interval, disc)

    def _shifts(self) -> np.ndarray:
        """Cumulative offset added to each partition piece (first piece: 0)."""
        if self.disc is None or len(self.disc) == 0:
            return np.zeros(1)
        return self.k * np.concatenate([[0.0], np.cumsum(self.disc.jumps)])

    def smooth_pieces(self) -> list:
        """(source piece, mapped piece) pairs on which S is smooth and onto."""
        shifts = self._shifts()
        out = []
        for piece, s in zip(self.partition().pieces, shifts):
            out.append((piece, Interval(piece.a + s, piece.b + s)))
        return out

    def mapped_interval(self) -> Interval:
        """The hull [S(a), S(b)] of the image."""
        return Interval(float(self(self.interval.a)), float(self(self.interval.b)))

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        x = np.atleast_1d(arr)
        a, b = self.interval.a, self.interval.b
        if np.any(x < a - 1e-12 * (b - a)) or np.any(x > b + 1e-12 * (b - a)):
            raise ValueError("point outside the map's host interval")
        x = np.clip(x, a, b)
        if self.kind == "identity":
            out = x + 0.0
        elif self.kind == "kte":
            # affine conjugation keeps the [-1,1] definition intact
            u = 2.0 * (x - a) / (b - a) - 1.0
            out = (a + b) / 2.0 + (b - a) / 2.0 * kte_eval(self.alpha, u)
        elif self.kind == "s_runge":
            out = cl_warp(x, a, b)
        elif self.kind == "s_gibbs":
            out = x + self._cumulative_shift(x)
        else:  # graspa
            edges = np.concatenate([[a], self.disc.locations, [b]])
            idx = np.searchsorted(self.disc.locations, x, side="left")
            lo, hi = edges[idx], edges[idx + 1]
            out = self._shifts()[idx] + cl_warp(x, lo, hi)
        return float(out[0]) if scalar else out

    def _cumulative_shift(self, x: np.ndarray) -> np.ndarray:
        # side="left" leaves x == xi_i unshifted by its own jump: the point on
        # the cut belongs to the left piece, matching the samples' convention.
        idx = np.searchsorted(self.disc.locations, x, side="left")
        return self._shifts()[idx]

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "interval": self.interval.to_dict()}
        if self.alpha is not None:
            d["alpha"] = self.alpha
        if self.k is not None:
            d["k"] = self.k
        if self.disc is not None:
            d["discontinuities"] = self.disc.to_list()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MapSpec":
        interval = Interval.from_dict(d["interval"])
        disc = None
        if "discontinuities" in d:
            disc = DiscontinuitySet.from_list(interval, d["discontinuities"])
        return cls(kind=d["kind"], interval=interval, alpha=d.get("alpha"),
                   disc=disc, k=d.get("k"))


def build_identity(interval: Interval) -> MapSpec:
    return MapSpec("identity", interval)


def build_kte(interval: Interval, alpha: float) -> MapSpec:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    return MapSpec("kte", interval, alpha=alpha)


def build_s_runge(interval: Interval) -> MapSpec:
    """The warp sending the equispaced points of [a, b] onto the CL points."""
    return MapSpec("s_runge", interval)


def _check_shift(disc: DiscontinuitySet, k: float | None) -> float:
    if k is None:
        k = default_shift(disc.interval, disc) if len(disc) else 1.0
    if k <= 0:
        raise ValueError(f"shift parameter k must be positive, got {k}")
    if np.any(disc.jumps == 0.0):
        warnings.warn("zero-magnitude jump induces no node separation")
    return float(k)


def build_s_gibbs(interval: Interval, disc: DiscontinuitySet, k: float | None = None) -> MapSpec:
    """Translate everything right of each jump by k times the jump size.

    S(x) = x + k * sum of jumps left of x: the identity on the first piece,
    a pure (slope-one) translation on every piece, with a gap of k*d_i
    opened after each discontinuity xi_i.
    """
    return MapSpec("s_gibbs", interval, disc=disc, k=_check_shift(disc, k))


def build_graspa(interval: Interval, disc: DiscontinuitySet, k: float | None = None) -> MapSpec:
    """Per-piece CL warp combined with the cumulative jump shifts.

    Within each partition piece equispaced points go to local CL points
    (curing Runge), and the pieces are separated by gaps of k*d_i (curing
    Gibbs). Reduces to the plain CL warp when there are no discontinuities.
    """
    return MapSpec("graspa", interval, disc=disc, k=_check_shift(disc, k))


def map_apply(spec: MapSpec, nodes: NodeSet) -> NodeSet:
    """The fake nodes S(X): images of the sample nodes, order preserved."""
    mapped = np.asarray(spec(nodes.nodes), dtype=float)
    hull = spec.mapped_interval()
    tol = DISTINCTNESS_REL_TOL * hull.length
    if len(mapped) > 1 and np.min(np.diff(mapped)) <= tol:
        raise MappedCollisionError(
            f"mapped nodes collide under {spec.kind}: min gap "
            f"{np.min(np.diff(mapped)):.3e} <= {tol:.3e}")
    return NodeSet(hull, mapped)
