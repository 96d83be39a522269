"""Legendre and Chebyshev machinery and the spherical harmonics built on it.

Conventions:

* Associated Legendre functions are in Ferrers form WITHOUT the
  Condon-Shortley phase: P^m_n(t) = (1 - t^2)^(m/2) d^m/dt^m P_n(t).
* Order m = -1 means -P^1_n / (n (n + 1)); any order >= n + 1 gives zero.
* Chebyshev indices extend downward as T_{-l} = T_l, U_{-1} = 0, U_{-2} = -1
  (the values of cos(l phi) and sin((k+1) phi)/sin(phi) at negative index).

These are pinned by cross-checks against the exact polynomial construction
of the monogenic basis; flipping any of them breaks those checks.

All evaluators are recurrence-based and generic over the numeric type: fed
floats they return floats, fed ``Fraction`` values they are exact.  That
matters because sphere points with rational cosines/sines make the identity
checks decidable instead of approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


def _require_unit_interval(t) -> None:
    if not (-1 <= t <= 1):
        raise ValueError(f"argument {t} outside [-1, 1]")


def double_factorial(k: int) -> int:
    """Product k (k-2) ... 3 * 1 for odd k >= 1."""
    if k < 1 or k % 2 == 0:
        raise ValueError(f"double factorial defined here for odd k >= 1, got {k}")
    return math.prod(range(1, k + 1, 2))


def legendre_P(n: int, t):
    """Legendre polynomial of degree n via the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _require_unit_interval(t)
    if isinstance(t, int):
        t = Fraction(t)
    prev = t * 0 + 1
    if n == 0:
        return prev
    cur = t
    for k in range(1, n):
        cur, prev = ((2 * k + 1) * t * cur - k * prev) / (k + 1), cur
    return cur


def _assoc_legendre_cs(n: int, m: int, c, s):
    """Associated Legendre at cos = c, sin = s (s >= 0, c^2 + s^2 = 1)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if m < -1:
        raise ValueError("order must be >= -1")
    if m == -1:
        if n == 0:
            return c * 0
        return -_assoc_legendre_cs(n, 1, c, s) / (n * (n + 1))
    if m == 0:
        return legendre_P(n, c)
    if m > n:
        return c * 0
    # seed P^m_m, then raise the degree
    pmm = double_factorial(2 * m - 1) * s**m
    if n == m:
        return pmm
    pm1 = (2 * m + 1) * c * pmm
    if n == m + 1:
        return pm1
    for k in range(m + 2, n + 1):
        pm1, pmm = ((2 * k - 1) * c * pm1 - (k + m - 1) * pmm) / (k - m), pm1
    return pm1


def assoc_legendre(n: int, m: int, t):
    """Ferrers associated Legendre function P^m_n(t), no phase factor.

    Supports the extended orders described in the module docstring.  Orders
    m >= 1 involve sqrt(1 - t^2) and therefore evaluate in floating point;
    exact evaluation at known (cos, sin) pairs goes through the internal
    trig-pair form used by the basis evaluators.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if m < -1:
        raise ValueError("order must be >= -1")
    _require_unit_interval(t)
    if isinstance(t, int):
        t = Fraction(t)
    if m == 0:
        return legendre_P(n, t)
    if m == -1:
        if n == 0:
            return t * 0
        return -assoc_legendre(n, 1, t) / (n * (n + 1))
    if m > n:
        return t * 0
    tf = float(t)
    s = math.sqrt(max(0.0, 1.0 - tf * tf))
    return _assoc_legendre_cs(n, m, tf, s)


def chebyshev_T(l: int, t):
    """Chebyshev polynomial of the first kind; T_{-l} = T_l."""
    l = abs(l)
    if isinstance(t, int):
        t = Fraction(t)
    prev = t * 0 + 1
    if l == 0:
        return prev
    cur = t
    for _ in range(l - 1):
        cur, prev = 2 * t * cur - prev, cur
    return cur


def chebyshev_U(k: int, t):
    """Chebyshev polynomial of the second kind, with U_{-1} = 0, U_{-2} = -1."""
    if k < -2:
        raise ValueError("index must be >= -2")
    if isinstance(t, int):
        t = Fraction(t)
    if k == -2:
        return t * 0 - 1
    if k == -1:
        return t * 0
    prev = t * 0 + 1
    if k == 0:
        return prev
    cur = 2 * t
    for _ in range(k - 1):
        cur, prev = 2 * t * cur - prev, cur
    return cur


def legendre_bound(n: int, m: int) -> float:
    """Uniform bound sqrt((n+m)!/(n-m)!) / sqrt(2) for |P^m_n| on [-1, 1]."""
    if not (1 <= m <= n):
        raise ValueError(f"bound requires 1 <= m <= n, got n={n}, m={m}")
    ratio = Fraction(math.factorial(n + m), math.factorial(n - m))
    return math.sqrt(ratio / 2)


def _spherical_U_cs(n: int, l: int, c1, s1, c2, s2):
    if l >= n + 1:
        return c1 * 0
    return _assoc_legendre_cs(n, l, c1, s1) * chebyshev_T(l, c2)


def _spherical_V_cs(n: int, m: int, c1, s1, c2, s2):
    if m == 0 or m >= n + 1:
        return c1 * 0
    return _assoc_legendre_cs(n, m, c1, s1) * s2 * chebyshev_U(m - 1, c2)


def spherical_U(n: int, l: int, theta1: float, theta2: float) -> float:
    """Spherical harmonic P^l_n(cos theta1) T_l(cos theta2); zero for l > n."""
    if l < 0:
        raise ValueError("order must be nonnegative")
    return _spherical_U_cs(n, l, math.cos(theta1), math.sin(theta1),
                           math.cos(theta2), math.sin(theta2))


def spherical_V(n: int, m: int, theta1: float, theta2: float) -> float:
    """Spherical harmonic P^m_n(cos theta1) sin(theta2) U_{m-1}(cos theta2)."""
    if m < 1:
        raise ValueError("order must be >= 1")
    return _spherical_V_cs(n, m, math.cos(theta1), math.sin(theta1),
                           math.cos(theta2), math.sin(theta2))


@dataclass(frozen=True)
class SphericalPoint:
    """Point r*(cos t1, sin t1 cos t2, sin t1 sin t2) with cached trig values.

    ``from_trig`` builds a point directly from (cos, sin) pairs; with exact
    rational pairs on the unit circle every downstream evaluation stays
    exact.
    """

    r: object
    theta1: float
    theta2: float

    @cached_property
    def cos_theta1(self):
        return math.cos(self.theta1)

    @cached_property
    def sin_theta1(self):
        return math.sin(self.theta1)

    @cached_property
    def cos_theta2(self):
        return math.cos(self.theta2)

    @cached_property
    def sin_theta2(self):
        return math.sin(self.theta2)

    @classmethod
    def from_trig(cls, r, cos1, sin1, cos2, sin2) -> "SphericalPoint":
        for c, s in ((cos1, sin1), (cos2, sin2)):
            err = abs(float(c * c + s * s) - 1.0)
            if err > 1e-9:
                raise ValueError("cos/sin pair does not lie on the unit circle")
        if float(sin1) < 0:
            raise ValueError("sin of the polar angle must be nonnegative")
        theta1 = math.atan2(float(sin1), float(cos1))
        theta2 = math.atan2(float(sin2), float(cos2))
        if theta2 <= 0:
            theta2 += 2 * math.pi
        p = cls(r, theta1, theta2)
        p.__dict__["cos_theta1"] = cos1
        p.__dict__["sin_theta1"] = sin1
        p.__dict__["cos_theta2"] = cos2
        p.__dict__["sin_theta2"] = sin2
        return p

    @classmethod
    def from_cartesian(cls, x0: float, x1: float, x2: float) -> "SphericalPoint":
        r = math.sqrt(x0 * x0 + x1 * x1 + x2 * x2)
        if r == 0:
            return cls(0.0, math.pi / 2, 2 * math.pi)
        theta1 = math.acos(max(-1.0, min(1.0, x0 / r)))
        theta2 = math.atan2(x2, x1)
        if theta2 <= 0:
            theta2 += 2 * math.pi
        return cls(r, theta1, theta2)

    def to_cartesian(self):
        return (self.r * self.cos_theta1,
                self.r * self.sin_theta1 * self.cos_theta2,
                self.r * self.sin_theta1 * self.sin_theta2)
