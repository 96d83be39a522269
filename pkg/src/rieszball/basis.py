"""Homogeneous monogenic polynomial basis on balls of R^3.

Each degree n carries 2n+3 basis polynomials, indexed by a family tag
('X' drives the cosine-type harmonics, 'Y' the sine-type ones) and an order
m.  The polynomials are produced exactly by applying half the conjugate
Cauchy-Riemann operator to solid spherical harmonics of degree n+1; two
independent closed-form evaluators (one in Legendre/Chebyshev products, one
in spherical harmonics) exist purely as cross-checks.

Everything exact lives in rational arithmetic; norms on the ball of radius R
are rational multiples of pi and are kept factored (never folded into the
polynomial coefficients, which would leave the rationals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .polynomials import (
    APoly,
    PiMultiple,
    ScalarPoly,
    apply_Dbar,
    hypercomplex_derivative,
    inner_product_L2,
)
from .quaternions import Quaternion, ReducedQuaternion
from .special import (
    SphericalPoint,
    _assoc_legendre_cs,
    _spherical_U_cs,
    _spherical_V_cs,
    chebyshev_T,
    chebyshev_U,
    double_factorial,
)

FAMILIES = ("X", "Y")


@dataclass(frozen=True, order=True)
class BasisIndex:
    """Address (degree n, family, order m) of one basis polynomial."""

    n: int
    family: str
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"degree must be nonnegative, got {self.n}")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be 'X' or 'Y', got {self.family!r}")
        lo = 0 if self.family == "X" else 1
        if not (lo <= self.m <= self.n + 1):
            raise ValueError(
                f"order {self.m} out of range [{lo}, {self.n + 1}] "
                f"for family {self.family} at degree {self.n}")

    @property
    def is_hyperholomorphic(self) -> bool:
        """True for the orders whose hypercomplex derivative vanishes."""
        return self.m == self.n + 1


def degree_indices(n: int) -> list[BasisIndex]:
    """The 2n+3 indices of degree n, in canonical order."""
    out = [BasisIndex(n, "X", m) for m in range(0, n + 2)]
    out += [BasisIndex(n, "Y", m) for m in range(1, n + 2)]
    return out


def all_indices(max_degree: int) -> list[BasisIndex]:
    out: list[BasisIndex] = []
    for n in range(max_degree + 1):
        out.extend(degree_indices(n))
    return out


# ---------------------------------------------------------------------------
# solid harmonics


@cache
def _legendre_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of the degree-n Legendre polynomial, exact."""
    if n == 0:
        return (Fraction(1),)
    prev = [Fraction(1)]
    cur = [Fraction(0), Fraction(1)]
    for k in range(1, n):
        nxt = [Fraction(0)] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += Fraction(2 * k + 1, k + 1) * c
        for i, c in enumerate(prev):
            nxt[i] -= Fraction(k, k + 1) * c
        prev, cur = cur, nxt
    return tuple(cur)


def _poly_coeff_derivative(coeffs: tuple[Fraction, ...], times: int) -> tuple[Fraction, ...]:
    for _ in range(times):
        coeffs = tuple(coeffs[i] * i for i in range(1, len(coeffs)))
    return coeffs


@cache
def _circular_pair(order: int) -> tuple[ScalarPoly, ScalarPoly]:
    """Real and imaginary part of (x1 + i x2)^order as exact polynomials."""
    re: dict[tuple[int, int, int], Fraction] = {}
    im: dict[tuple[int, int, int], Fraction] = {}
    for j in range(order + 1):
        c = Fraction(math.comb(order, j))
        mono = (0, order - j, j)
        if j % 2 == 0:
            re[mono] = c if j % 4 == 0 else -c
        else:
            im[mono] = c if j % 4 == 1 else -c
    return ScalarPoly(re), ScalarPoly(im)


@cache
def solid_harmonic(degree: int, order: int, kind: str) -> ScalarPoly:
    """Cartesian polynomial equal to r^degree times the spherical harmonic.

    kind 'U' pairs the associated Legendre factor with the cosine-type
    azimuthal factor, 'V' with the sine-type one.  The result is an exactly
    harmonic, homogeneous polynomial of the given degree.
    """
    if kind not in ("U", "V"):
        raise ValueError(f"kind must be 'U' or 'V', got {kind!r}")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    lo = 0 if kind == "U" else 1
    if not (lo <= order <= degree):
        raise ValueError(f"order {order} out of range [{lo}, {degree}]")
    # r^degree P^order_degree(x0/r) * (azimuthal factor) expands to
    # sum_k g_k x0^k (x0^2+x1^2+x2^2)^((degree-order-k)/2) * Re/Im((x1+i x2)^order)
    # where g are the coefficients of the order-th derivative of the
    # Legendre polynomial; parity makes every radical power even.
    g = _poly_coeff_derivative(_legendre_coeffs(degree), order)
    circ = _circular_pair(order)[0 if kind == "U" else 1]
    r2 = ScalarPoly({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    total = ScalarPoly.zero()
    for k, gk in enumerate(g):
        if not gk:
            continue
        rest = degree - order - k
        assert rest % 2 == 0, "parity violation in Legendre derivative"
        term = ScalarPoly.monomial((k, 0, 0), gk) * r2 ** (rest // 2)
        total = total + term
    return total * circ


@cache
def basis_polynomial(idx: BasisIndex) -> APoly:
    """The degree-n basis polynomial, constructed exactly.

    Applies half the conjugate Cauchy-Riemann operator to the degree-(n+1)
    solid harmonic selected by the index.  The result is A-valued,
    homogeneous of degree n and monogenic.

    Cached; safe under concurrent readers (pure construction, idempotent
    insert).
    """
    kind = "U" if idx.family == "X" else "V"
    h = solid_harmonic(idx.n + 1, idx.m, kind)
    return hypercomplex_derivative(APoly(h))


def basis_polynomial_or_zero(n: int, family: str, m: int) -> APoly:
    """Basis polynomial with the zero extension for out-of-range orders."""
    lo = 0 if family == "X" else 1
    if m < lo or m > n + 1:
        return APoly.zero()
    return basis_polynomial(BasisIndex(n, family, m))


# ---------------------------------------------------------------------------
# closed-form evaluators (independent implementations, used as cross-checks)


def basis_closed_form_eval(idx: BasisIndex, p: SphericalPoint) -> ReducedQuaternion:
    """Evaluate the explicit Legendre/Chebyshev product form of the basis.

    Independent of the polynomial construction; must agree with it.  Exact
    when the point carries exact trig values.
    """
    n, m = idx.n, idx.m
    c1, s1 = p.cos_theta1, p.sin_theta1
    c2, s2 = p.cos_theta2, p.sin_theta2
    rn = p.r**n
    p_m = _assoc_legendre_cs(n, m, c1, s1)
    p_up = _assoc_legendre_cs(n, m + 1, c1, s1)
    p_dn = _assoc_legendre_cs(n, m - 1, c1, s1)
    k = (n + m + 1) * (n + m)
    quarter = Fraction(1, 4)
    if idx.family == "X":
        sc = Fraction(n + m + 1, 2) * p_m * chebyshev_T(m, c2)
        a1 = quarter * (p_up * chebyshev_T(m + 1, c2)
                        - k * p_dn * chebyshev_T(m - 1, c2))
        a2 = quarter * (p_up * s2 * chebyshev_U(m, c2)
                        + k * p_dn * s2 * chebyshev_U(m - 2, c2))
    else:
        sc = Fraction(n + m + 1, 2) * p_m * s2 * chebyshev_U(m - 1, c2)
        a1 = quarter * (p_up * s2 * chebyshev_U(m, c2)
                        - k * p_dn * s2 * chebyshev_U(m - 2, c2))
        a2 = -quarter * (p_up * chebyshev_T(m + 1, c2)
                         + k * p_dn * chebyshev_T(m - 1, c2))
    return ReducedQuaternion(rn * sc, rn * a1, rn * a2)


def basis_via_spherical_harmonics(idx: BasisIndex, p: SphericalPoint) -> ReducedQuaternion:
    """Evaluate the spherical-harmonic combination form of the basis.

    The e1/e2 components mix the harmonics one order up and one order down
    (with zero extension above the degree); another independent cross-check.
    """
    n, m = idx.n, idx.m
    c1, s1 = p.cos_theta1, p.sin_theta1
    c2, s2 = p.cos_theta2, p.sin_theta2
    rn = p.r**n

    def U(order):
        return _spherical_U_cs(n, order, c1, s1, c2, s2)

    def V(order):
        return _spherical_V_cs(n, order, c1, s1, c2, s2)

    if idx.family == "X" and m == 0:
        sc = Fraction(n + 1, 2) * U(0)
        a1 = Fraction(1, 2) * U(1)
        a2 = Fraction(1, 2) * V(1)
        return ReducedQuaternion(rn * sc, rn * a1, rn * a2)
    k = (n + m + 1) * (n + m)
    quarter = Fraction(1, 4)
    r_minus = U(m + 1) - k * U(m - 1)
    r_plus = U(m + 1) + k * U(m - 1)
    s_minus = V(m + 1) - k * V(m - 1)
    s_plus = V(m + 1) + k * V(m - 1)
    if idx.family == "X":
        sc = Fraction(n + m + 1, 2) * U(m)
        a1 = quarter * r_minus
        a2 = quarter * s_plus
    else:
        sc = Fraction(n + m + 1, 2) * V(m)
        a1 = quarter * s_minus
        a2 = -quarter * r_plus
    return ReducedQuaternion(rn * sc, rn * a1, rn * a2)


def hyperholomorphic_constant_poly(n: int, family: str) -> APoly:
    """Exact polynomial form of the order-(n+1) basis element of degree n.

    These elements have vanishing hypercomplex derivative; they factor as a
    left unit times a power of x1 + x2 e3.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be 'X' or 'Y', got {family!r}")
    unit = Quaternion.unit(1 if family == "X" else 2)
    w = APoly(ScalarPoly.variable(1), None, None, ScalarPoly.variable(2))
    scale = -Fraction(n + 1, 2) * double_factorial(2 * n + 1)
    return (unit * (w**n)) * scale


def hyperholomorphic_constant_closed_form(n: int, family: str,
                                          p: SphericalPoint) -> ReducedQuaternion:
    """Evaluate the closed form of the order-(n+1) element of degree n.

    The product is taken in the full quaternion algebra and then checked to
    land in the reduced subspace.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be 'X' or 'Y', got {family!r}")
    unit = Quaternion.unit(1 if family == "X" else 2)
    z = Quaternion(p.cos_theta2, 0, 0, p.sin_theta2) ** n
    scale = -Fraction(n + 1, 2) * double_factorial(2 * n + 1) \
        * p.r**n * p.sin_theta1**n
    q = (unit * z) * scale
    if float(abs(q.a3)) > 1e-9 * (1.0 + q.norm()):
        raise AssertionError("closed form left the reduced subspace")
    return ReducedQuaternion(q.a0, q.a1, q.a2)


# ---------------------------------------------------------------------------
# recurrences


def recurrence_check(n: int, basis_fn=None) -> list[tuple[str, bool]]:
    """Verify the order-coupling recurrences at degree n, exactly.

    Returns one (label, passed) pair per identity: the order-0 seed plus the
    X and Y steps for m = 1 .. n+1 (with zero extension above n+1).
    ``basis_fn`` may replace the basis constructor, e.g. to inject a
    corrupted element when testing the harness itself.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if basis_fn is None:
        basis_fn = basis_polynomial

    def bp(family: str, m: int) -> APoly:
        lo = 0 if family == "X" else 1
        if m < lo or m > n + 1:
            return APoly.zero()
        return basis_fn(BasisIndex(n, family, m))

    e1 = Quaternion.unit(1)
    e2 = Quaternion.unit(2)
    results: list[tuple[str, bool]] = []

    lhs = bp("X", 0)
    rhs = (bp("X", 1) * e1 + bp("Y", 1) * e2) * Fraction(1, n + 2)
    results.append((f"n={n} order-0 seed", lhs == rhs))

    for m in range(1, n + 2):
        lo_c = Fraction(n + m + 1, 2)
        hi_c = Fraction(1, 2 * (n + m + 2))
        xm = bp("X", m)
        ym = bp("Y", m)
        x_dn, y_dn = bp("X", m - 1), bp("Y", m - 1)
        x_up, y_up = bp("X", m + 1), bp("Y", m + 1)
        rhs_x = (x_dn * e1 - y_dn * e2) * -lo_c + (x_up * e1 + y_up * e2) * hi_c
        rhs_y = (y_dn * e1 + x_dn * e2) * -lo_c + (y_up * e1 - x_up * e2) * hi_c
        results.append((f"n={n} X-step m={m}", xm == rhs_x))
        results.append((f"n={n} Y-step m={m}", ym == rhs_y))
    return results


# ---------------------------------------------------------------------------
# norms and bounds


@cache
def norm_squared_unit(idx: BasisIndex) -> Fraction:
    """Squared L2 norm on the unit ball, divided by pi."""
    b = basis_polynomial(idx)
    return inner_product_L2(b, b, 1).coeff


def norm_squared(idx: BasisIndex, radius=1) -> PiMultiple:
    """Squared L2 norm on the ball of the given radius, as a pi-multiple.

    Homogeneity of degree n gives the exact scaling R^(2n+3) relative to the
    unit ball.
    """
    R = Fraction(radius)
    if R <= 0:
        raise ValueError("radius must be positive")
    return PiMultiple(norm_squared_unit(idx) * R ** (2 * idx.n + 3))


@dataclass(frozen=True)
class NormalizedBasisElement:
    """An index with its unnormalized polynomial and exact squared norm.

    The normalized element is poly / norm; dividing the coefficients through
    would leave rational arithmetic, so the norm stays factored.  The norm
    itself is sqrt(norm_sq.coeff) * sqrt(pi).
    """

    index: BasisIndex
    radius: Fraction
    poly: APoly
    norm_sq: PiMultiple

    @property
    def norm(self) -> float:
        return math.sqrt(float(self.norm_sq))

    def value(self, x) -> ReducedQuaternion:
        """Evaluate the normalized element at a point (floating point)."""
        q = self.poly.evaluate(tuple(float(v) for v in x))
        return ReducedQuaternion(q.a0, q.a1, q.a2) * (1.0 / self.norm)


def normalize(idx: BasisIndex, radius=1) -> NormalizedBasisElement:
    """Attach the exact L2(B_R) norm to the basis polynomial."""
    R = Fraction(radius)
    return NormalizedBasisElement(idx, R, basis_polynomial(idx),
                                  norm_squared(idx, R))


def pointwise_bound(idx: BasisIndex, r) -> float:
    """Uniform bound for the basis modulus on the sphere of radius r."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    n, m = idx.n, idx.m
    ratio = Fraction(math.factorial(n + 1 + m), math.factorial(n + 1 - m))
    return 0.5 * (n + 1) * math.sqrt(ratio) * float(r) ** n


# ---------------------------------------------------------------------------
# table dump (CLI-facing)

BASIS_TABLE_SCHEMA_VERSION = 1


def basis_table(max_degree: int, radius=1) -> list[dict]:
    """Serializable rows (index, terms, norm) for all degrees up to max_degree."""
    R = Fraction(radius)
    rows = []
    for idx in all_indices(max_degree):
        el = normalize(idx, R)
        q = el.norm_sq.coeff
        rows.append({
            "n": idx.n,
            "family": idx.family,
            "m": idx.m,
            "terms": el.poly.to_json_terms(),
            "norm_sq_pi": f"{q.numerator}/{q.denominator}",
            "norm": el.norm,
        })
    return rows
