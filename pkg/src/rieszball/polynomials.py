"""Exact multivariate polynomial arithmetic in (x0, x1, x2).

``ScalarPoly`` keeps rational coefficients in a monomial map; ``APoly``
bundles four of them into a quaternion-valued polynomial.  On top of that
live the first-order operators (the generalized Cauchy-Riemann operator and
its conjugate, gradient, Laplacian, hypercomplex derivative), closed-form
integration of monomials over balls, and the real L2 inner product.

Integrals over balls of rational radius are exact rational multiples of pi;
``PiMultiple`` carries the pi factor symbolically so orthogonality checks
can compare against an exact zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Union

from .quaternions import Quaternion, ReducedQuaternion, Scalar

Mono = tuple[int, int, int]
Rational = Union[int, Fraction]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class PiMultiple:
    """An exact real of the form coeff * pi."""

    coeff: Fraction

    def __float__(self) -> float:
        return float(self.coeff) * math.pi

    def __add__(self, other: "PiMultiple") -> "PiMultiple":
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coeff + other.coeff)
        if other == 0:
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: "PiMultiple") -> "PiMultiple":
        if isinstance(other, PiMultiple):
            return PiMultiple(self.coeff - other.coeff)
        return NotImplemented

    def __neg__(self) -> "PiMultiple":
        return PiMultiple(-self.coeff)

    def __mul__(self, other) -> "PiMultiple":
        if isinstance(other, (int, Fraction)):
            return PiMultiple(self.coeff * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiMultiple):
            # ratio of two pi-multiples is an exact rational
            return self.coeff / other.coeff
        if isinstance(other, (int, Fraction)):
            return PiMultiple(self.coeff / other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, PiMultiple):
            return self.coeff == other.coeff
        if other == 0:
            return self.coeff == 0
        return NotImplemented

    def __hash__(self):
        return hash(("PiMultiple", self.coeff))

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __repr__(self) -> str:
        return f"({self.coeff})*pi"


class ScalarPoly:
    """Polynomial in x0, x1, x2 with exact rational coefficients.

    The representation is a map from exponent triples to nonzero
    coefficients; instances are treated as immutable.
    """

    __slots__ = ("terms", "_intform")

    def __init__(self, terms: Union[Mapping[Mono, object], Scalar, None] = None):
        data: dict[Mono, Fraction] = {}
        if terms is None:
            pass
        elif isinstance(terms, (int, float, Fraction)):
            c = _frac(terms)
            if c:
                data[(0, 0, 0)] = c
        else:
            for mono, coeff in terms.items():
                mono = (int(mono[0]), int(mono[1]), int(mono[2]))
                if min(mono) < 0:
                    raise ValueError(f"negative exponent in monomial {mono}")
                c = _frac(coeff)
                if c:
                    data[mono] = data.get(mono, Fraction(0)) + c
                    if not data[mono]:
                        del data[mono]
        self.terms = data
        self._intform = None

    @classmethod
    def zero(cls) -> "ScalarPoly":
        return cls()

    @classmethod
    def one(cls) -> "ScalarPoly":
        return cls(1)

    @classmethod
    def variable(cls, i: int) -> "ScalarPoly":
        mono = [0, 0, 0]
        mono[i] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def monomial(cls, mono: Mono, coeff=1) -> "ScalarPoly":
        return cls({mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, n: int) -> bool:
        return all(sum(m) == n for m in self.terms)

    def homogeneous_parts(self) -> dict[int, "ScalarPoly"]:
        parts: dict[int, dict[Mono, Fraction]] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: ScalarPoly(t) for d, t in sorted(parts.items())}

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        """Terms in graded lexicographic order (degree, a, b, c)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __eq__(self, other) -> bool:
        if isinstance(other, ScalarPoly):
            return self.terms == other.terms
        if isinstance(other, (int, float, Fraction)):
            return self == ScalarPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "ScalarPoly":
        other = _as_scalar_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw_scalar_poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "ScalarPoly":
        other = _as_scalar_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ScalarPoly":
        return _as_scalar_poly(other) - self

    def __neg__(self) -> "ScalarPoly":
        return _raw_scalar_poly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "ScalarPoly":
        if isinstance(other, (int, float, Fraction)):
            c = _frac(other)
            if not c:
                return ScalarPoly.zero()
            return _raw_scalar_poly({m: cc * c for m, cc in self.terms.items()})
        if isinstance(other, ScalarPoly):
            out: dict[Mono, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                    s = out.get(m, Fraction(0)) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return _raw_scalar_poly(out)
        return NotImplemented

    __rmul__ = __mul__

    def diff(self, var: int) -> "ScalarPoly":
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            mm = list(m)
            mm[var] = e - 1
            out[tuple(mm)] = c * e
        return _raw_scalar_poly(out)

    def evaluate(self, x0, x1, x2):
        """Evaluate via per-variable power tables; exact for exact inputs."""
        if not self.terms:
            return x0 * 0
        maxdeg = [0, 0, 0]
        for m in self.terms:
            for i in range(3):
                if m[i] > maxdeg[i]:
                    maxdeg[i] = m[i]
        pows = []
        for v, d in zip((x0, x1, x2), maxdeg):
            table = [v * 0 + 1]
            for _ in range(d):
                table.append(table[-1] * v)
            pows.append(table)
        total = x0 * 0
        for m, c in self.terms.items():
            total = total + c * pows[0][m[0]] * pows[1][m[1]] * pows[2][m[2]]
        return total

    def _int_form(self) -> tuple[int, dict[Mono, int]]:
        """Common denominator and integer numerators, cached."""
        cached = self._intform
        if cached is None:
            den = 1
            for c in self.terms.values():
                den = den * c.denominator // math.gcd(den, c.denominator)
            ints = {m: int(c * den) for m, c in self.terms.items()}
            cached = (den, ints)
            self._intform = cached
        return cached

    def __repr__(self) -> str:
        if not self.terms:
            return "ScalarPoly(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(m) if e)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "ScalarPoly(" + " + ".join(bits) + ")"


def _raw_scalar_poly(terms: dict[Mono, Fraction]) -> ScalarPoly:
    p = ScalarPoly.__new__(ScalarPoly)
    p.terms = terms
    p._intform = None
    return p


def _as_scalar_poly(value) -> ScalarPoly:
    if isinstance(value, ScalarPoly):
        return value
    if isinstance(value, (int, float, Fraction)):
        return ScalarPoly(value)
    return NotImplemented


# e_i * e_j -> (index, sign), mirroring the quaternion unit table
_UNIT_MUL = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, -1), (3, 1), (2, -1)),
    ((2, 1), (3, -1), (0, -1), (1, 1)),
    ((3, 1), (2, 1), (1, -1), (0, -1)),
)


class APoly:
    """Quaternion-valued polynomial c0 + c1*e1 + c2*e2 + c3*e3.

    "A-valued" means the e3 component is identically zero; such values lie
    in the reduced-quaternion subspace.
    """

    __slots__ = ("components",)

    def __init__(self, c0=None, c1=None, c2=None, c3=None):
        self.components = tuple(
            c if isinstance(c, ScalarPoly) else ScalarPoly(c)
            for c in (c0, c1, c2, c3)
        )

    @classmethod
    def from_components(cls, comps: Iterable[ScalarPoly]) -> "APoly":
        comps = tuple(comps)
        if len(comps) != 4:
            raise ValueError("expected 4 components")
        return cls(*comps)

    @classmethod
    def zero(cls) -> "APoly":
        return cls()

    @classmethod
    def constant(cls, q) -> "APoly":
        if isinstance(q, ReducedQuaternion):
            q = q.to_quaternion()
        if isinstance(q, Quaternion):
            return cls(*(ScalarPoly(c) for c in q.components()))
        return cls(ScalarPoly(q))

    @property
    def scalar_component(self) -> ScalarPoly:
        return self.components[0]

    def component(self, i: int) -> ScalarPoly:
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_a_valued(self) -> bool:
        return self.components[3].is_zero()

    def degree(self) -> int:
        return max(c.degree() for c in self.components)

    def is_homogeneous(self, n: int) -> bool:
        return all(c.is_homogeneous(n) for c in self.components)

    def homogeneous_parts(self) -> dict[int, "APoly"]:
        degrees: set[int] = set()
        comp_parts = []
        for c in self.components:
            parts = c.homogeneous_parts()
            comp_parts.append(parts)
            degrees.update(parts)
        return {
            d: APoly(*(parts.get(d, ScalarPoly.zero()) for parts in comp_parts))
            for d in sorted(degrees)
        }

    def __eq__(self, other) -> bool:
        if isinstance(other, APoly):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other) -> "APoly":
        other = _as_apoly(other)
        if other is NotImplemented:
            return NotImplemented
        return APoly(*(a + b for a, b in zip(self.components, other.components)))

    __radd__ = __add__

    def __sub__(self, other) -> "APoly":
        other = _as_apoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "APoly":
        return _as_apoly(other) - self

    def __neg__(self) -> "APoly":
        return APoly(*(-c for c in self.components))

    def __mul__(self, other) -> "APoly":
        if isinstance(other, (int, float, Fraction)):
            return APoly(*(c * other for c in self.components))
        if isinstance(other, (Quaternion, ReducedQuaternion)):
            other = APoly.constant(other)
        if isinstance(other, APoly):
            out = [ScalarPoly.zero()] * 4
            for i, a in enumerate(self.components):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.components):
                    if b.is_zero():
                        continue
                    k, s = _UNIT_MUL[i][j]
                    prod = a * b
                    out[k] = out[k] + prod if s > 0 else out[k] - prod
            return APoly(*out)
        return NotImplemented

    def __rmul__(self, other) -> "APoly":
        if isinstance(other, (int, float, Fraction)):
            return self * other
        if isinstance(other, (Quaternion, ReducedQuaternion)):
            return APoly.constant(other) * self
        return NotImplemented

    def __pow__(self, n: int) -> "APoly":
        if n < 0:
            raise ValueError("negative powers not supported")
        result = APoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def conj(self) -> "APoly":
        c0, c1, c2, c3 = self.components
        return APoly(c0, -c1, -c2, -c3)

    def diff(self, var: int) -> "APoly":
        return APoly(*(c.diff(var) for c in self.components))

    def evaluate(self, x) -> Quaternion:
        x0, x1, x2 = x
        return Quaternion(*(c.evaluate(x0, x1, x2) for c in self.components))

    def evaluate_reduced(self, x) -> ReducedQuaternion:
        return self.evaluate(x).as_reduced()

    def to_json_terms(self) -> list[dict]:
        """Serialize as a graded-lex sorted term list.

        Each entry is {"exponents": [a, b, c], "coeff": 4 "num/den" strings}.
        """
        monos = sorted({m for c in self.components for m in c.terms},
                       key=lambda m: (sum(m), m))
        out = []
        for m in monos:
            coeffs = []
            for c in self.components:
                v = c.terms.get(m, Fraction(0))
                coeffs.append(f"{v.numerator}/{v.denominator}")
            out.append({"exponents": list(m), "coeff": coeffs})
        return out

    @classmethod
    def from_json_terms(cls, data: list[dict]) -> "APoly":
        comps = [dict() for _ in range(4)]
        for entry in data:
            mono = tuple(int(e) for e in entry["exponents"])
            for i, s in enumerate(entry["coeff"]):
                c = Fraction(s)
                if c:
                    comps[i][mono] = c
        return cls(*(ScalarPoly(t) for t in comps))

    def __repr__(self) -> str:
        names = ("", "e1", "e2", "e3")
        bits = [f"({c!r}){n}" for c, n in zip(self.components, names)
                if not c.is_zero()]
        return "APoly[" + " + ".join(bits) + "]" if bits else "APoly[0]"


def _as_apoly(value) -> APoly:
    if isinstance(value, APoly):
        return value
    if isinstance(value, (int, float, Fraction, Quaternion, ReducedQuaternion)):
        return APoly.constant(value)
    if isinstance(value, ScalarPoly):
        return APoly(value)
    return NotImplemented


# ---------------------------------------------------------------------------
# first-order operators


def apply_D(f: APoly) -> APoly:
    """Apply d/dx0 + e1 d/dx1 + e2 d/dx2 (from the left).

    An A-valued f with apply_D(f) == 0 is monogenic, i.e. a solution of the
    div/curl first-order system on R^3.
    """
    f = _as_apoly(f)
    out = [ScalarPoly.zero()] * 4
    for d in (0, 1, 2):
        for i in range(4):
            g = f.components[i].diff(d)
            if g.is_zero():
                continue
            k, s = _UNIT_MUL[d][i]
            out[k] = out[k] + g if s > 0 else out[k] - g
    return APoly(*out)


def apply_Dbar(f: APoly) -> APoly:
    """Apply the conjugate operator d/dx0 - e1 d/dx1 - e2 d/dx2."""
    f = _as_apoly(f)
    out = [ScalarPoly.zero()] * 4
    for d, sign in ((0, 1), (1, -1), (2, -1)):
        for i in range(4):
            g = f.components[i].diff(d)
            if g.is_zero():
                continue
            k, s = _UNIT_MUL[d][i]
            out[k] = out[k] + g if s * sign > 0 else out[k] - g
    return APoly(*out)


def hypercomplex_derivative(f: APoly) -> APoly:
    """(1/2) of the conjugate operator; the derivative of a monogenic f.

    The caller is expected to pass a monogenic f; the expression is computed
    regardless.
    """
    return apply_Dbar(f) * Fraction(1, 2)


def laplacian(f: APoly) -> APoly:
    """Componentwise 3-D Laplacian (equals both operator compositions)."""
    f = _as_apoly(f)
    return APoly(*(
        c.diff(0).diff(0) + c.diff(1).diff(1) + c.diff(2).diff(2)
        for c in f.components
    ))


def grad(u: ScalarPoly) -> APoly:
    """Gradient of a scalar polynomial, packed as du/dx0 + du/dx1 e1 + du/dx2 e2."""
    if not isinstance(u, ScalarPoly):
        u = ScalarPoly(u)
    return APoly(u.diff(0), u.diff(1), u.diff(2))


def riesz_residual(f: APoly) -> tuple[ScalarPoly, ScalarPoly, ScalarPoly, ScalarPoly]:
    """Divergence and curl residuals of the field ([f]0, -[f]1, -[f]2).

    All four vanish exactly if and only if apply_D(f) == 0.  Rejects input
    with a nonzero e3 component.
    """
    f = _as_apoly(f)
    if not f.is_a_valued():
        raise ValueError("riesz_residual requires an A-valued polynomial")
    u0 = f.components[0]
    u1 = -f.components[1]
    u2 = -f.components[2]
    div = u0.diff(0) + u1.diff(1) + u2.diff(2)
    rot12 = u2.diff(1) - u1.diff(2)
    rot20 = u0.diff(2) - u2.diff(0)
    rot01 = u1.diff(0) - u0.diff(1)
    return (div, rot12, rot20, rot01)


# ---------------------------------------------------------------------------
# exact integration over balls


@cache
def _half_gamma_ratio(j: int) -> Fraction:
    """Gamma(j + 1/2) / sqrt(pi) as an exact rational."""
    return Fraction(math.factorial(2 * j), 4**j * math.factorial(j))


@cache
def _unit_ball_pi_coeff(a: int, b: int, c: int) -> Fraction:
    """Integral of x0^a x1^b x2^c over the unit ball, divided by pi."""
    if (a | b | c) & 1:
        return Fraction(0)
    p, q, s = a // 2, b // 2, c // 2
    surface = 2 * _half_gamma_ratio(p) * _half_gamma_ratio(q) \
        * _half_gamma_ratio(s) / _half_gamma_ratio(p + q + s + 1)
    return surface / (a + b + c + 3)


def ball_integral_monomial(a: int, b: int, c: int, radius=1) -> PiMultiple:
    """Exact integral of x0^a x1^b x2^c over the ball of the given radius.

    Zero whenever any exponent is odd; otherwise a rational multiple of pi.
    The radius must be exactly representable as a rational.
    """
    if min(a, b, c) < 0:
        raise ValueError("exponents must be nonnegative")
    R = _frac(radius)
    if R <= 0:
        raise ValueError("radius must be positive")
    return PiMultiple(_unit_ball_pi_coeff(a, b, c) * R ** (a + b + c + 3))


def _scalar_ball_dot(p: ScalarPoly, q: ScalarPoly, radius) -> Fraction:
    """Integral of p*q over the ball, divided by pi.

    Multiplies out term pairs bucketed by exponent parity (only matching
    parities survive integration) and accumulates integer products per
    exponent sum before touching rationals.
    """
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    dp, ip = p._int_form()
    dq, iq = q._int_form()
    buckets: dict[tuple[int, int, int], list[tuple[Mono, int]]] = {}
    for m, n in iq.items():
        buckets.setdefault((m[0] & 1, m[1] & 1, m[2] & 1), []).append((m, n))
    acc: dict[Mono, int] = {}
    for m1, n1 in ip.items():
        group = buckets.get((m1[0] & 1, m1[1] & 1, m1[2] & 1))
        if not group:
            continue
        a, b, c = m1
        for m2, n2 in group:
            key = (a + m2[0], b + m2[1], c + m2[2])
            acc[key] = acc.get(key, 0) + n1 * n2
    R = _frac(radius)
    rpow: dict[int, Fraction] = {}
    total = Fraction(0)
    for s, n in acc.items():
        if not n:
            continue
        d = s[0] + s[1] + s[2]
        rp = rpow.get(d)
        if rp is None:
            rp = R ** (d + 3)
            rpow[d] = rp
        total += n * _unit_ball_pi_coeff(*s) * rp
    return total / (dp * dq)


def inner_product_L2(f: APoly, g: APoly, radius=1) -> PiMultiple:
    """Real L2 inner product over the ball: integral of Sc(conj(f) g).

    For quaternion components this is the integral of the componentwise dot
    product, so it is symmetric, bilinear and positive on f == g != 0.
    """
    f = _as_apoly(f)
    g = _as_apoly(g)
    R = _frac(radius)
    if R <= 0:
        raise ValueError("radius must be positive")
    total = Fraction(0)
    for a, b in zip(f.components, g.components):
        total += _scalar_ball_dot(a, b, R)
    return PiMultiple(total)
