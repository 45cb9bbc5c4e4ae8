"""Exact Gaussian rationals p + q i with p, q in Q."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from urskit.utils import fraction_str

Scalar = Union[int, Fraction, "Gaussian"]


def _frac(x: int | Fraction | str) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Gaussian:
    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    @classmethod
    def coerce(cls, x: Scalar | complex) -> "Gaussian":
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real).limit_denominator(), Fraction(x.imag).limit_denominator())
        return cls(x)

    # ── arithmetic ───────────────────────────────────────────────────────────

    def __add__(self, other: Scalar) -> "Gaussian":
        o = Gaussian.coerce(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "Gaussian":
        o = Gaussian.coerce(other)
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> "Gaussian":
        return Gaussian.coerce(other) - self

    def __mul__(self, other: Scalar) -> "Gaussian":
        o = Gaussian.coerce(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Gaussian":
        o = Gaussian.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian")
        return self * o.conjugate() * Gaussian(1 / d)

    def __neg__(self) -> "Gaussian":
        return Gaussian(-self.re, -self.im)

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(self.abs2())

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # ── comparison ───────────────────────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # ── text ─────────────────────────────────────────────────────────────────

    def to_dict(self) -> dict[str, str]:
        return {"re": fraction_str(self.re), "im": fraction_str(self.im)}

    @classmethod
    def parse(cls, re: str | int = 0, im: str | int = 0) -> "Gaussian":
        return cls(Fraction(str(re)), Fraction(str(im)))

    def __repr__(self) -> str:
        if self.im == 0:
            return fraction_str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{fraction_str(self.re)}{sign}{fraction_str(abs(self.im))}i"


ZERO = Gaussian(0)
ONE = Gaussian(1)
I = Gaussian(0, 1)  # noqa: E741
