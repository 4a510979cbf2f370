"""Shared domain types: intervals, node sets, samples, discontinuities, partitions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: Relative tolerance (times interval length) under which two nodes count as one.
DISTINCTNESS_REL_TOL = 1e-12


class MappedCollisionError(ValueError):
    """Two nodes landed closer than the distinctness tolerance after mapping."""


class NonUnisolventError(ValueError):
    """Point configuration does not determine a unique interpolant."""


def _as_float_array(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


@dataclass(frozen=True)
class Interval:
    """Closed interval [a, b] with a < b."""

    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("interval endpoints must be finite")
        if not self.a < self.b:
            raise ValueError(f"interval requires a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    def contains(self, x, tol: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.a - tol) and np.all(x <= self.b + tol))

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b}

    @classmethod
    def from_dict(cls, d: dict) -> "Interval":
        return cls(float(d["a"]), float(d["b"]))


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing sample abscissae inside a host interval."""

    interval: Interval
    nodes: np.ndarray

    def __post_init__(self):
        arr = _as_float_array(self.nodes, "nodes")
        if len(arr) < 1:
            raise ValueError("need at least one node")
        if not self.interval.contains(arr, tol=1e-14 * self.interval.length):
            raise ValueError("nodes must lie inside the host interval")
        if len(arr) > 1 and not np.all(np.diff(arr) > 0):
            raise ValueError("nodes must be strictly increasing and distinct")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "nodes", arr)

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def min_spacing(self) -> float:
        if len(self.nodes) < 2:
            return np.inf
        return float(np.min(np.diff(self.nodes)))

    @classmethod
    def equispaced(cls, interval: Interval, degree: int) -> "NodeSet":
        """The degree+1 equally spaced points of [a, b], endpoints included."""
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls(interval, np.linspace(interval.a, interval.b, degree + 1))

    @classmethod
    def chebyshev_lobatto(cls, interval: Interval, degree: int) -> "NodeSet":
        """Chebyshev-Lobatto points: -cos(i*pi/n) transplanted onto [a, b]."""
        if degree < 1:
            raise ValueError("degree must be >= 1")
        a, b = interval.a, interval.b
        ref = -np.cos(np.pi * np.arange(degree + 1) / degree)
        return cls(interval, (a + b) / 2.0 + (b - a) / 2.0 * ref)

    @classmethod
    def random_uniform(cls, interval: Interval, degree: int, seed: int = 0) -> "NodeSet":
        """degree+1 sorted uniform draws; endpoints pinned so the hull is [a, b]."""
        if degree < 1:
            raise ValueError("degree must be >= 1")
        rng = np.random.default_rng(seed)
        tol = DISTINCTNESS_REL_TOL * interval.length
        for _ in range(64):
            inner = np.sort(rng.uniform(interval.a, interval.b, degree - 1))
            pts = np.concatenate([[interval.a], inner, [interval.b]])
            if np.all(np.diff(pts) > tol):
                return cls(interval, pts)
        raise ValueError("could not draw distinct random nodes")


@dataclass(frozen=True)
class SampleSet:
    """Node set together with the sampled function values."""

    nodes: NodeSet
    values: np.ndarray

    def __post_init__(self):
        arr = _as_float_array(self.values, "values")
        if len(arr) != len(self.nodes):
            raise ValueError("values length must match node count")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_function(cls, fn, nodes: NodeSet) -> "SampleSet":
        return cls(nodes, np.asarray(fn(nodes.nodes), dtype=float))


@dataclass(frozen=True)
class DiscontinuitySet:
    """Jump locations xi_i (interior, increasing) with magnitudes |f(xi+) - f(xi-)|."""

    interval: Interval
    locations: np.ndarray = field(default_factory=lambda: np.empty(0))
    jumps: np.ndarray = field(default_factory=lambda: np.empty(0))

    def __post_init__(self):
        loc = _as_float_array(self.locations, "locations")
        jmp = _as_float_array(self.jumps, "jumps")
        if len(loc) != len(jmp):
            raise ValueError("locations and jumps must have equal length")
        if len(loc) > 1 and not np.all(np.diff(loc) > 0):
            raise ValueError("discontinuity locations must be strictly increasing")
        if len(loc) and not (np.all(loc > self.interval.a) and np.all(loc < self.interval.b)):
            raise ValueError("discontinuities must be interior to the interval")
        if np.any(jmp < 0):
            raise ValueError("jump magnitudes must be non-negative")
        loc, jmp = loc.copy(), jmp.copy()
        loc.setflags(write=False)
        jmp.setflags(write=False)
        object.__setattr__(self, "locations", loc)
        object.__setattr__(self, "jumps", jmp)

    def __len__(self) -> int:
        return len(self.locations)

    @property
    def max_jump(self) -> float:
        return float(np.max(self.jumps)) if len(self) else 0.0

    @classmethod
    def empty(cls, interval: Interval) -> "DiscontinuitySet":
        return cls(interval, np.empty(0), np.empty(0))

    def to_list(self) -> list:
        return [{"xi": float(x), "jump": float(d)}
                for x, d in zip(self.locations, self.jumps)]

    @classmethod
    def from_list(cls, interval: Interval, items) -> "DiscontinuitySet":
        items = sorted(items, key=lambda it: it["xi"])
        return cls(interval,
                   np.array([it["xi"] for it in items], dtype=float),
                   np.array([it["jump"] for it in items], dtype=float))


@dataclass(frozen=True)
class Partition:
    """The m+1 subintervals of [a, b] cut at the m discontinuity locations.

    Points sitting exactly on a cut belong to the left subinterval.
    """

    pieces: tuple

    @classmethod
    def split(cls, interval: Interval, disc: DiscontinuitySet) -> "Partition":
        edges = np.concatenate([[interval.a], disc.locations, [interval.b]])
        return cls(tuple(Interval(edges[i], edges[i + 1]) for i in range(len(edges) - 1)))

    def __len__(self) -> int:
        return len(self.pieces)

    def piece_index(self, x) -> np.ndarray:
        """Index of the piece containing each x (left-closed at the cuts)."""
        cuts = np.array([p.b for p in self.pieces[:-1]])
        return np.searchsorted(cuts, np.asarray(x, dtype=float), side="left")


@dataclass(frozen=True)
class EvalGrid:
    """Equispaced evaluation grid over an interval, endpoints included."""

    interval: Interval
    resolution: int

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("resolution must be at least 2")

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.interval.a, self.interval.b, self.resolution)


def vdm_check(nodes: NodeSet, tol: float | None = None) -> bool:
    """True iff all node gaps exceed tol, i.e. the Vandermonde determinant is

    safely nonzero. Nodes are sorted, so the minimal pairwise gap is the
    minimal adjacent gap. Defaults to DISTINCTNESS_REL_TOL times the length.
    """
    if tol is None:
        tol = DISTINCTNESS_REL_TOL * nodes.interval.length
    if tol <= 0:
        raise ValueError("tol must be positive")
    return nodes.min_spacing > tol


def rmae(reference, approx) -> float:
    """Relative maximum absolute error: max|ref - approx| / max|ref|."""
    ref = np.asarray(reference, dtype=float)
    app = np.asarray(approx, dtype=float)
    if ref.shape != app.shape or ref.size == 0:
        raise ValueError("reference and approx must be equal-length and non-empty")
    scale = np.max(np.abs(ref))
    if scale == 0.0:
        raise ValueError("degenerate reference: all values are zero")
    return float(np.max(np.abs(ref - app)) / scale)
