"""Bivariate fake nodes on the square: Padua points and mapped interpolation.

The componentwise CL warp sends a parity-constrained equispaced grid onto the
Padua points, the unisolvent set with near-optimal Lebesgue growth for total
degree interpolation on [-1, 1]^2. Interpolating at the warped grid against
the raw grid samples removes the bivariate Runge effect with no resampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import NonUnisolventError
from .maps import cl_warp


class Point2(NamedTuple):
    x1: float
    x2: float


def _as_points(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("points must have shape (N, 2)")
    return arr


@dataclass(frozen=True)
class PaduaSet:
    """Padua points of a given degree; always (n+1)(n+2)/2 of them."""

    degree: int
    points: np.ndarray

    def __post_init__(self):
        pts = _as_points(self.points)
        expected = (self.degree + 1) * (self.degree + 2) // 2
        if len(pts) != expected:
            raise ValueError(f"expected {expected} points, got {len(pts)}")
        if np.any(np.abs(pts) > 1.0 + 1e-14):
            raise ValueError("Padua points must lie in [-1, 1]^2")
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)


def padua_points(n: int) -> PaduaSet:
    """The CL-subgrid union {(cos(j pi/n), cos(i pi/(n+1))) : i + j odd}.

    This is the reflection of the Padua family that the square warp maps the
    equispaced grid onto (the four families differ by reflections only).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pts = [(np.cos(j * np.pi / n), np.cos(i * np.pi / (n + 1)))
           for j in range(n + 1)
           for i in range(n + 2)
           if (i + j) % 2 == 1]
    return PaduaSet(n, np.array(pts))


def grid_nodes(n: int) -> np.ndarray:
    """Equispaced grid with the parity constraint:

    (2(i-1)/n - 1, 2(j-1)/(n+1) - 1) for i = 1..n+1, j = 1..n+2, i+j even.
    Exactly (n+1)(n+2)/2 points in [-1, 1]^2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pts = [(2.0 * (i - 1) / n - 1.0, 2.0 * (j - 1) / (n + 1) - 1.0)
           for i in range(1, n + 2)
           for j in range(1, n + 3)
           if (i + j) % 2 == 0]
    return np.array(pts)


def padua_map(points):
    """Componentwise warp -cos(pi (x+1)/2) of the square onto itself.

    Fixes the corners, maps grid_nodes(n) onto padua_points(n). Accepts a
    Point2 (returning Point2) or an (N, 2) array.
    """
    if isinstance(points, Point2) or (isinstance(points, tuple) and len(points) == 2):
        arr = _as_points([points])
        warped = cl_warp(arr, -1.0, 1.0)
        return Point2(float(warped[0, 0]), float(warped[0, 1]))
    return cl_warp(_as_points(points), -1.0, 1.0)


def _cheb_basis(points: np.ndarray, n: int) -> np.ndarray:
    """Columns T_p(x1) T_q(x2) over total degree p + q <= n."""
    pts = _as_points(points)
    t1 = np.arccos(np.clip(pts[:, 0], -1.0, 1.0))
    t2 = np.arccos(np.clip(pts[:, 1], -1.0, 1.0))
    cols = [np.cos(p * t1) * np.cos(q * t2)
            for p in range(n + 1) for q in range(n + 1 - p)]
    return np.column_stack(cols)


@dataclass(frozen=True)
class ChebInterp2D:
    """Total-degree-n interpolant in the tensor Chebyshev basis.

    Evaluates P at given points; compose with padua_map (eval_mapped) to get
    the fake-nodes interpolant R_f = P o S.
    """

    degree: int
    coeffs: np.ndarray
    condition: float

    def __call__(self, points):
        return _cheb_basis(points, self.degree) @ self.coeffs

    def eval_mapped(self, points):
        return self(padua_map(_as_points(points)))


def interp2_build(fake_points, values, n: int) -> ChebInterp2D:
    """Solve the collocation system at the (already mapped) points.

    Requires exactly (n+1)(n+2)/2 points forming a unisolvent configuration;
    the collocation matrix's condition number is recorded on the result.
    """
    pts = _as_points(fake_points)
    values = np.asarray(values, dtype=float)
    expected = (n + 1) * (n + 2) // 2
    if len(pts) != expected or len(values) != expected:
        raise ValueError(f"need {expected} points and values for degree {n}")
    rounded = np.round(pts, 13)
    if len(np.unique(rounded, axis=0)) != len(pts):
        raise NonUnisolventError("duplicate collocation points")
    v = _cheb_basis(pts, n)
    try:
        coeffs = np.linalg.solve(v, values)
    except np.linalg.LinAlgError as exc:
        raise NonUnisolventError(f"singular collocation matrix: {exc}") from exc
    return ChebInterp2D(n, coeffs, float(np.linalg.cond(v)))
