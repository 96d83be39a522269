"""Real quaternion arithmetic and the reduced (three-component) subspace.

Values are plain immutable records; the component type is whatever numeric
type is put in (``fractions.Fraction`` for exact work, ``float`` for
numerics), so the same class serves both backings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, float, Fraction]

# e_i * e_j -> (index, sign), with e_0 = 1.
_UNIT_MUL = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, -1), (3, 1), (2, -1)),
    ((2, 1), (3, -1), (0, -1), (1, 1)),
    ((3, 1), (2, 1), (1, -1), (0, -1)),
)


@dataclass(frozen=True)
class Quaternion:
    """Element a0 + a1*e1 + a2*e2 + a3*e3 of the real quaternion algebra."""

    a0: Scalar = 0
    a1: Scalar = 0
    a2: Scalar = 0
    a3: Scalar = 0

    @classmethod
    def unit(cls, i: int) -> "Quaternion":
        """The basis unit e_i (e_0 = 1)."""
        parts = [0, 0, 0, 0]
        parts[i] = 1
        return cls(*parts)

    @classmethod
    def from_scalar(cls, s: Scalar) -> "Quaternion":
        return cls(s, 0, 0, 0)

    def components(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a0, self.a1, self.a2, self.a3)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(self.a0 + other.a0, self.a1 + other.a1,
                          self.a2 + other.a2, self.a3 + other.a3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return Quaternion(self.a0 * other, self.a1 * other,
                              self.a2 * other, self.a3 * other)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a = self.components()
        b = other.components()
        out = [0, 0, 0, 0]
        for i in range(4):
            ai = a[i]
            if not ai:
                continue
            for j in range(4):
                bj = b[j]
                if not bj:
                    continue
                k, s = _UNIT_MUL[i][j]
                out[k] = out[k] + ai * bj if s > 0 else out[k] - ai * bj
        return Quaternion(*out)

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self * other
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, n: int) -> "Quaternion":
        if n < 0:
            raise ValueError("negative powers not supported")
        result = Quaternion(1)
        for _ in range(n):
            result = result * self
        return result

    def conj(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def scalar_part(self) -> Scalar:
        return self.a0

    def vector_part(self) -> "Quaternion":
        return Quaternion(0, self.a1, self.a2, self.a3)

    def norm_sq(self) -> Scalar:
        """|q|^2, exact for exact components; equals Sc(conj(q) * q)."""
        return (self.a0 * self.a0 + self.a1 * self.a1
                + self.a2 * self.a2 + self.a3 * self.a3)

    def norm(self) -> float:
        return math.sqrt(float(self.norm_sq()))

    def __abs__(self) -> float:
        return self.norm()

    def as_float(self) -> "Quaternion":
        return Quaternion(*(float(c) for c in self.components()))

    def is_reduced(self) -> bool:
        return not self.a3

    def as_reduced(self) -> "ReducedQuaternion":
        """Narrow to the reduced subspace; requires a3 == 0 exactly."""
        if self.a3:
            raise ValueError(f"quaternion has nonzero e3 component: {self.a3}")
        return ReducedQuaternion(self.a0, self.a1, self.a2)


@dataclass(frozen=True)
class ReducedQuaternion:
    """Element a0 + a1*e1 + a2*e2 of the subspace spanned by 1, e1, e2.

    The subspace is closed under addition and real scaling but not under
    multiplication (e1*e2 = e3), so products widen to ``Quaternion``.
    """

    a0: Scalar = 0
    a1: Scalar = 0
    a2: Scalar = 0

    @classmethod
    def from_point(cls, x0: Scalar, x1: Scalar, x2: Scalar) -> "ReducedQuaternion":
        return cls(x0, x1, x2)

    def components(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.a0, self.a1, self.a2)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(self.a0, self.a1, self.a2, 0)

    def __add__(self, other):
        if isinstance(other, ReducedQuaternion):
            return ReducedQuaternion(self.a0 + other.a0, self.a1 + other.a1,
                                     self.a2 + other.a2)
        if isinstance(other, (int, float, Fraction)):
            return ReducedQuaternion(self.a0 + other, self.a1, self.a2)
        if isinstance(other, Quaternion):
            return self.to_quaternion() + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, (ReducedQuaternion, Quaternion))
                       else -1 * other)

    def __neg__(self):
        return ReducedQuaternion(-self.a0, -self.a1, -self.a2)

    def __mul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return ReducedQuaternion(self.a0 * other, self.a1 * other,
                                     self.a2 * other)
        return self.to_quaternion() * other

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self * other
        return _coerce(other) * self.to_quaternion()

    def conj(self) -> "ReducedQuaternion":
        return ReducedQuaternion(self.a0, -self.a1, -self.a2)

    def scalar_part(self) -> Scalar:
        return self.a0

    def vector_part(self) -> "ReducedQuaternion":
        return ReducedQuaternion(0, self.a1, self.a2)

    def norm_sq(self) -> Scalar:
        return self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2

    def norm(self) -> float:
        return math.sqrt(float(self.norm_sq()))

    def __abs__(self) -> float:
        return self.norm()

    def as_float(self) -> "ReducedQuaternion":
        return ReducedQuaternion(*(float(c) for c in self.components()))


def _coerce(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, ReducedQuaternion):
        return value.to_quaternion()
    if isinstance(value, (int, float, Fraction)):
        return Quaternion(value)
    return NotImplemented


ONE = Quaternion.unit(0)
E1 = Quaternion.unit(1)
E2 = Quaternion.unit(2)
E3 = Quaternion.unit(3)
