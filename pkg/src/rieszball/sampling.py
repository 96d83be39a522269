"""Deterministic sphere grids and vectorized polynomial evaluation.

The sup-norm layer of the package is the one approximate layer: maxima over
spheres and balls are estimated on a fixed product grid in the two angles
(poles included) followed by one local refinement pass around the best node.
Every estimate reports its sampling metadata.

Grids and reductions are deterministic: the grid depends only on the node
budget, and the reduction is a max, which is order-independent, so results
do not depend on any parallel split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .polynomials import APoly

DEFAULT_GRID_NODES = 10_000
_REFINE_POINTS = 15


@dataclass(frozen=True)
class SphereGrid:
    theta1: np.ndarray
    theta2: np.ndarray
    points: np.ndarray  # (3, N) unit vectors
    n_theta1: int
    n_theta2: int

    @property
    def n_nodes(self) -> int:
        return self.points.shape[1]

    def metadata(self) -> dict:
        return {"grid_nodes": int(self.n_nodes),
                "grid_shape": [self.n_theta1, self.n_theta2],
                "refine_points": _REFINE_POINTS}


@lru_cache(maxsize=8)
def sphere_grid(n_nodes: int = DEFAULT_GRID_NODES) -> SphereGrid:
    """Product grid over (polar, azimuthal) angles with >= n_nodes nodes."""
    if n_nodes < 1:
        raise ValueError("node budget must be positive")
    n_t1 = max(3, math.ceil(math.sqrt(n_nodes / 2)))
    n_t2 = 2 * n_t1
    while n_t1 * n_t2 < n_nodes:
        n_t1 += 1
        n_t2 = 2 * n_t1
    t1 = np.linspace(0.0, math.pi, n_t1)
    t2 = (np.arange(n_t2) + 0.5) * (2 * math.pi / n_t2)
    T1, T2 = np.meshgrid(t1, t2, indexing="ij")
    t1f = T1.ravel()
    t2f = T2.ravel()
    pts = np.vstack([np.cos(t1f),
                     np.sin(t1f) * np.cos(t2f),
                     np.sin(t1f) * np.sin(t2f)])
    return SphereGrid(t1f, t2f, pts, n_t1, n_t2)


def poly_values(poly: APoly, pts: np.ndarray) -> np.ndarray:
    """Evaluate all four components at the given (3, N) points -> (4, N)."""
    n = pts.shape[1]
    maxdeg = [0, 0, 0]
    for comp in poly.components:
        for mono in comp.terms:
            for i in range(3):
                if mono[i] > maxdeg[i]:
                    maxdeg[i] = mono[i]
    powers = []
    for i in range(3):
        table = np.ones((maxdeg[i] + 1, n))
        for d in range(1, maxdeg[i] + 1):
            table[d] = table[d - 1] * pts[i]
        powers.append(table)
    out = np.zeros((4, n))
    for k, comp in enumerate(poly.components):
        if comp.is_zero():
            continue
        monos = list(comp.terms.items())
        e = np.array([m for m, _ in monos], dtype=np.intp)
        c = np.array([float(v) for _, v in monos])
        basis = powers[0][e[:, 0]] * powers[1][e[:, 1]] * powers[2][e[:, 2]]
        out[k] = c @ basis
    return out


def _reduce_values(values: np.ndarray, mode) -> np.ndarray:
    if mode == "modulus":
        return np.sqrt(np.einsum("ij,ij->j", values, values))
    return np.abs(values[mode])


def _angles_to_points(t1: np.ndarray, t2: np.ndarray, r: float) -> np.ndarray:
    return r * np.vstack([np.cos(t1),
                          np.sin(t1) * np.cos(t2),
                          np.sin(t1) * np.sin(t2)])


def sphere_max(poly: APoly, r: float, grid: SphereGrid, mode="modulus",
               refine: bool = True) -> tuple[float, dict]:
    """Estimated max over the sphere of radius r of |poly| or one |component|.

    mode is "modulus" for the full quaternion modulus or a component index.
    Returns the estimate and the sampling metadata.
    """
    meta = grid.metadata() | {"r": float(r), "refined": bool(refine)}
    if r == 0:
        vals = _reduce_values(poly_values(poly, np.zeros((3, 1))), mode)
        return float(vals[0]), meta
    values = _reduce_values(poly_values(poly, grid.points * r), mode)
    best = int(np.argmax(values))
    best_val = float(values[best])
    if refine:
        d1 = math.pi / (grid.n_theta1 - 1)
        d2 = 2 * math.pi / grid.n_theta2
        t1c, t2c = grid.theta1[best], grid.theta2[best]
        t1s = np.clip(np.linspace(t1c - d1, t1c + d1, _REFINE_POINTS), 0.0, math.pi)
        t2s = np.linspace(t2c - d2, t2c + d2, _REFINE_POINTS)
        T1, T2 = np.meshgrid(t1s, t2s, indexing="ij")
        pts = _angles_to_points(T1.ravel(), T2.ravel(), r)
        ref = _reduce_values(poly_values(poly, pts), mode)
        best_val = max(best_val, float(np.max(ref)))
    return best_val, meta


BALL_SUP_RADII = (0.5, 0.9, 0.99, 1.0)


def ball_sup(poly: APoly, radius: float, grid: SphereGrid, mode="modulus",
             refine: bool = True) -> tuple[float, dict]:
    """Estimated sup over the ball via maxima on a nest of spheres.

    Harmonic components push their extrema toward the boundary, so the nest
    is boundary-biased; inner spheres are sampled anyway.
    """
    best = 0.0
    for frac in BALL_SUP_RADII:
        val, _ = sphere_max(poly, frac * radius, grid, mode, refine)
        if val > best:
            best = val
    meta = grid.metadata() | {"radius": float(radius),
                              "sup_radii_fractions": list(BALL_SUP_RADII),
                              "refined": bool(refine)}
    return best, meta
