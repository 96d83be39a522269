"""Fourier expansion of monogenic functions in the orthonormal ball basis.

Coefficients are stored relative to the *unnormalized* basis polynomials:
for exact (rational) input those coefficients are exact rationals, which is
what makes the projection/synthesis round trip and the Parseval identity
decidable.  The conventional normalized coefficients (the real numbers
multiplying the orthonormal elements) are derived views: normalized = raw *
norm, where norm^2 is a rational multiple of pi.

The decomposition splits a function into its value at the origin, a main
part (orders m <= n) and the part spanned by the nontrivial elements with
vanishing hypercomplex derivative (order m = n+1, degree n >= 1); the three
pieces are mutually orthogonal.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .basis import (
    BasisIndex,
    all_indices,
    basis_polynomial,
    degree_indices,
    norm_squared,
)
from .polynomials import APoly, PiMultiple, apply_D, grad, inner_product_L2
from .quaternions import ReducedQuaternion
from .sampling import DEFAULT_GRID_NODES, ball_sup, sphere_grid, sphere_max

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class FourierCoefficients:
    """Coefficient table of an expansion on the ball of radius ``radius``.

    ``raw`` maps indices to coefficients of the unnormalized basis
    polynomials (exact rationals when produced by ``project``).  Each degree
    n block has 2n+3 slots; zeros are not stored.
    """

    radius: Fraction
    max_degree: int
    raw: dict[BasisIndex, Number] = field(default_factory=dict)

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.max_degree < 0:
            raise ValueError("max degree must be nonnegative")
        for idx in self.raw:
            if idx.n > self.max_degree:
                raise ValueError(f"coefficient degree {idx.n} exceeds "
                                 f"max degree {self.max_degree}")

    def coefficient(self, idx: BasisIndex) -> Number:
        return self.raw.get(idx, Fraction(0))

    def normalized(self, idx: BasisIndex) -> float:
        """The real coefficient of the orthonormal element at idx."""
        c = self.raw.get(idx)
        if not c:
            return 0.0
        return float(c) * math.sqrt(float(norm_squared(idx, self.radius)))

    def is_zero(self) -> bool:
        return not any(self.raw.values())

    def restrict(self, keep) -> "FourierCoefficients":
        kept = {idx: c for idx, c in self.raw.items() if keep(idx) and c}
        return FourierCoefficients(self.radius, self.max_degree, kept)

    def __add__(self, other: "FourierCoefficients") -> "FourierCoefficients":
        if self.radius != other.radius:
            raise ValueError("cannot combine expansions on different balls")
        out = dict(self.raw)
        for idx, c in other.raw.items():
            s = out.get(idx, Fraction(0)) + c
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return FourierCoefficients(self.radius,
                                   max(self.max_degree, other.max_degree), out)

    def norm_sq_pi(self) -> Fraction:
        """Squared L2 norm divided by pi (Parseval sum), exact for exact raws."""
        total = Fraction(0)
        for idx, c in self.raw.items():
            total += c * c * norm_squared(idx, self.radius).coeff
        return total

    # -- wire format -------------------------------------------------------

    def to_json_dict(self) -> dict:
        blocks = []
        for n in range(self.max_degree + 1):
            blocks.append({
                "n": n,
                "a0": self.normalized(BasisIndex(n, "X", 0)),
                "a": [self.normalized(BasisIndex(n, "X", m))
                      for m in range(1, n + 2)],
                "b": [self.normalized(BasisIndex(n, "Y", m))
                      for m in range(1, n + 2)],
            })
        return {"R": float(self.radius), "N": self.max_degree, "blocks": blocks}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FourierCoefficients":
        radius = Fraction(data["R"]).limit_denominator(10**12)
        max_degree = int(data["N"])
        raw: dict[BasisIndex, Number] = {}

        def put(idx: BasisIndex, normalized_value: float):
            if normalized_value:
                norm = math.sqrt(float(norm_squared(idx, radius)))
                raw[idx] = float(normalized_value) / norm

        for block in data["blocks"]:
            n = int(block["n"])
            put(BasisIndex(n, "X", 0), block.get("a0", 0.0))
            for m, v in enumerate(block.get("a", []), start=1):
                put(BasisIndex(n, "X", m), v)
            for m, v in enumerate(block.get("b", []), start=1):
                put(BasisIndex(n, "Y", m), v)
        return cls(radius, max_degree, raw)

    @classmethod
    def from_normalized(cls, coeffs: dict[BasisIndex, float], radius=1,
                        max_degree: Optional[int] = None) -> "FourierCoefficients":
        radius = Fraction(radius)
        if max_degree is None:
            max_degree = max((idx.n for idx in coeffs), default=0)
        raw = {}
        for idx, v in coeffs.items():
            if v:
                raw[idx] = float(v) / math.sqrt(float(norm_squared(idx, radius)))
        return cls(radius, max_degree, raw)

    @classmethod
    def from_raw(cls, raw: dict[BasisIndex, Number], radius=1,
                 max_degree: Optional[int] = None) -> "FourierCoefficients":
        radius = Fraction(radius)
        if max_degree is None:
            max_degree = max((idx.n for idx in raw), default=0)
        return cls(radius, max_degree,
                   {idx: c for idx, c in raw.items() if c})


def project(f: APoly, max_degree: int, radius=1) -> FourierCoefficients:
    """Exact expansion coefficients of a monogenic polynomial.

    Rejects non-monogenic input.  Homogeneity confines each degree block of
    f to the same-degree basis elements, so only those inner products are
    taken.
    """
    if not isinstance(f, APoly):
        raise TypeError("project expects a polynomial")
    if max_degree < 0:
        raise ValueError("max degree must be nonnegative")
    if not apply_D(f).is_zero():
        raise ValueError("projection requires a monogenic input "
                         "(first-order system residual is nonzero)")
    R = Fraction(radius)
    raw: dict[BasisIndex, Number] = {}
    parts = f.homogeneous_parts()
    for n, block in parts.items():
        if block.is_zero():
            continue
        if n > max_degree:
            continue
        for idx in degree_indices(n):
            ip = inner_product_L2(basis_polynomial(idx), block, R)
            if ip.is_zero:
                continue
            raw[idx] = ip / norm_squared(idx, R)
    return FourierCoefficients(R, max_degree, raw)


def synthesize_poly(c: FourierCoefficients) -> APoly:
    """Finite sum of basis polynomials with the stored coefficients.

    Float coefficients are embedded exactly as rationals, so the result is
    always an exact polynomial object.
    """
    total = APoly.zero()
    for idx, coeff in sorted(c.raw.items()):
        if coeff:
            total = total + basis_polynomial(idx) * Fraction(coeff)
    return total


def synthesize(c: FourierCoefficients, x) -> ReducedQuaternion:
    """Evaluate the truncated expansion at a point inside the ball."""
    r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2]
    if float(r2) > float(c.radius) ** 2 * (1 + 1e-12):
        warnings.warn("evaluation point lies outside the ball of expansion",
                      RuntimeWarning, stacklevel=2)
    total = ReducedQuaternion(x[0] * 0, 0, 0)
    for idx, coeff in sorted(c.raw.items()):
        if not coeff:
            continue
        q = basis_polynomial(idx).evaluate(x)
        total = total + ReducedQuaternion(q.a0, q.a1, q.a2) * coeff
    return total


def decompose(c: FourierCoefficients) -> tuple[ReducedQuaternion,
                                               FourierCoefficients,
                                               FourierCoefficients]:
    """Split into (value at origin, main part, derivative-free part).

    The degree-0 block consists of constants and becomes the evaluated
    origin value; orders m <= n of degree n >= 1 form the main part; orders
    m = n+1 of degree n >= 1 form the part with identically vanishing
    hypercomplex derivative (it depends only on (x1, x2)).
    """
    zero_block = c.restrict(lambda idx: idx.n == 0)
    f0_q = synthesize_poly(zero_block).evaluate((Fraction(0),) * 3)
    f0 = ReducedQuaternion(f0_q.a0, f0_q.a1, f0_q.a2)
    g = c.restrict(lambda idx: idx.n >= 1 and idx.m <= idx.n)
    h = c.restrict(lambda idx: idx.n >= 1 and idx.m == idx.n + 1)
    return f0, g, h


@dataclass(frozen=True)
class MonogenicFunction:
    """A monogenic function given exactly or by truncated expansion."""

    radius: Fraction
    poly: Optional[APoly] = None
    coeffs: Optional[FourierCoefficients] = None

    def __post_init__(self):
        if (self.poly is None) == (self.coeffs is None):
            raise ValueError("provide exactly one of poly or coeffs")
        if self.poly is not None and not apply_D(self.poly).is_zero():
            raise ValueError("polynomial form must be monogenic")

    @classmethod
    def from_poly(cls, poly: APoly, radius=1) -> "MonogenicFunction":
        return cls(Fraction(radius), poly=poly)

    @classmethod
    def from_coefficients(cls, coeffs: FourierCoefficients) -> "MonogenicFunction":
        return cls(coeffs.radius, coeffs=coeffs)

    def as_poly(self) -> APoly:
        if self.poly is not None:
            return self.poly
        return synthesize_poly(self.coeffs)

    def evaluate(self, x) -> ReducedQuaternion:
        q = self.as_poly().evaluate(x)
        return ReducedQuaternion(q.a0, q.a1, q.a2)


def _as_poly(f) -> APoly:
    if isinstance(f, APoly):
        return f
    if isinstance(f, MonogenicFunction):
        return f.as_poly()
    if isinstance(f, FourierCoefficients):
        return synthesize_poly(f)
    raise TypeError(f"cannot interpret {type(f).__name__} as a function")


# ---------------------------------------------------------------------------
# sampled extrema


def max_modulus(f, r: float, grid_nodes: int = DEFAULT_GRID_NODES,
                refine: bool = True) -> float:
    """Estimated max of |f| over the sphere of radius r (deterministic grid)."""
    value, _ = max_modulus_meta(f, r, grid_nodes, refine)
    return value


def max_modulus_meta(f, r: float, grid_nodes: int = DEFAULT_GRID_NODES,
                     refine: bool = True) -> tuple[float, dict]:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return sphere_max(_as_poly(f), r, sphere_grid(grid_nodes), "modulus", refine)


def scalar_sup(f, radius: float, grid_nodes: int = DEFAULT_GRID_NODES) -> float:
    """Estimated sup of |scalar part| over the ball of the given radius."""
    value, _ = ball_sup(_as_poly(f), radius, sphere_grid(grid_nodes), mode=0)
    return value


def grad_scalar_sup(f, radius: float, grid_nodes: int = DEFAULT_GRID_NODES) -> float:
    """Estimated sup of |gradient of the scalar part| over the ball."""
    g = grad(_as_poly(f).scalar_component)
    value, _ = ball_sup(g, radius, sphere_grid(grid_nodes), mode="modulus")
    return value


def sc_h_e1_sup(h, radius: float, grid_nodes: int = DEFAULT_GRID_NODES) -> float:
    """Estimated sup of |Sc(h * e1)| = |-[h]_1| over the ball."""
    value, _ = ball_sup(_as_poly(h), radius, sphere_grid(grid_nodes), mode=1)
    return value
