"""Exact and floating complex scalar arithmetic.

Two scalar modes coexist and are never mixed implicitly:

* ``exact`` -- complex numbers whose real and imaginary parts are
  arbitrary-precision rationals (`fractions.Fraction`).  Ring operations
  and division by nonzero scalars are closed and error-free.
* ``float`` -- complex numbers backed by a pair of binary64 reals.

Magnitudes of exact scalars are irrational in general, so they are reported
through certified rational enclosures: :func:`sqrt_upper` never
under-estimates and :func:`sqrt_lower` never over-estimates, both within
relative slack ``2**-60``.  Comparisons that certify strict inequalities
must go through squared magnitudes or these enclosures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import ModeMismatchError

EXACT = "exact"
FLOAT = "float"

_SQRT_BITS = 60
_SQRT_SCALE = 1 << _SQRT_BITS

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an int, a 'p/q' string, or a decimal string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot parse {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as 'p' or 'p/q'."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sqrt_upper(x: Fraction) -> Fraction:
    """Smallest convenient rational u with u >= sqrt(x), slack < 2**-60 rel."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    n = x.numerator * x.denominator * _SQRT_SCALE * _SQRT_SCALE
    s = isqrt(n)
    if s * s < n:
        s += 1
    return Fraction(s, x.denominator * _SQRT_SCALE)


def sqrt_lower(x: Fraction) -> Fraction:
    """Largest convenient rational l with l <= sqrt(x), slack < 2**-60 rel."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    n = x.numerator * x.denominator * _SQRT_SCALE * _SQRT_SCALE
    return Fraction(isqrt(n), x.denominator * _SQRT_SCALE)


def exact_sqrt(x: Fraction) -> Fraction | None:
    """Return sqrt(x) when x is a perfect rational square, else None."""
    if x < 0:
        return None
    pn = isqrt(x.numerator)
    pd = isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def nth_root_exact(x: Fraction, n: int) -> Fraction | None:
    """Return the exact positive n-th root of x >= 0 when it is rational."""
    if x < 0 or n < 1:
        return None
    if x == 0:
        return Fraction(0)

    def iroot(m: int) -> int | None:
        if m == 0:
            return 0
        r = round(m ** (1.0 / n))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**n == m:
                return cand
        return None

    rn = iroot(x.numerator)
    rd = iroot(x.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


@dataclass(frozen=True)
class Scalar:
    """A complex scalar in one fixed arithmetic mode.

    ``re`` and ``im`` are both Fractions (exact mode) or both floats
    (float mode).  All binary operations require matching modes.
    """

    re: Union[Fraction, float]
    im: Union[Fraction, float]

    @property
    def mode(self) -> str:
        return EXACT if isinstance(self.re, Fraction) else FLOAT

    # -- constructors ------------------------------------------------------

    @staticmethod
    def exact(re: RationalLike = 0, im: RationalLike = 0) -> "Scalar":
        return Scalar(parse_rational(re), parse_rational(im))

    @staticmethod
    def from_float(re: float = 0.0, im: float = 0.0) -> "Scalar":
        return Scalar(float(re), float(im))

    @staticmethod
    def from_complex(z: complex) -> "Scalar":
        return Scalar(float(z.real), float(z.imag))

    @staticmethod
    def zero(mode: str = EXACT) -> "Scalar":
        return _ZERO[mode]

    @staticmethod
    def one(mode: str = EXACT) -> "Scalar":
        return _ONE[mode]

    # -- mode plumbing -----------------------------------------------------

    def _require_same_mode(self, other: "Scalar") -> None:
        if self.mode != other.mode:
            raise ModeMismatchError(
                f"cannot combine {self.mode} and {other.mode} scalars"
            )

    def to_float(self) -> "Scalar":
        if self.mode == FLOAT:
            return self
        return Scalar(float(self.re), float(self.im))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        self._require_same_mode(other)
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._require_same_mode(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._require_same_mode(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._require_same_mode(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        denom = c * c + d * d
        if denom == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar((a * c + b * d) / denom, (b * c - a * d) / denom)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("scalar powers must be integers")
        if n < 0:
            return Scalar.one(self.mode) / self.__pow__(-n)
        result = Scalar.one(self.mode)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- magnitude ---------------------------------------------------------

    def abs2(self) -> Union[Fraction, float]:
        """|z|^2, exact in exact mode."""
        return self.re * self.re + self.im * self.im

    def abs_upper(self) -> Fraction:
        """Certified rational upper bound on |z| (exact for float mode)."""
        if self.mode == FLOAT:
            return Fraction(abs(self.to_complex()))
        return sqrt_upper(self.abs2())

    def abs_exact(self) -> Fraction | None:
        """|z| when exactly rational (exact mode only), else None."""
        if self.mode == FLOAT:
            return None
        return exact_sqrt(self.abs2())

    # -- predicates and misc -----------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.mode == other.mode and self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.mode, self.re, self.im))

    def __repr__(self) -> str:
        if self.mode == EXACT:
            if self.im == 0:
                return format_rational(self.re)
            if self.re == 0:
                return f"{format_rational(self.im)}i"
            sign = "+" if self.im > 0 else "-"
            return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"
        return repr(self.to_complex())


_ZERO = {EXACT: Scalar(Fraction(0), Fraction(0)), FLOAT: Scalar(0.0, 0.0)}
_ONE = {EXACT: Scalar(Fraction(1), Fraction(0)), FLOAT: Scalar(1.0, 0.0)}


def scalar_abs2_as_fraction(s: Scalar) -> Fraction:
    """|s|^2 as a Fraction (float mode converts the binary64 value exactly)."""
    a2 = s.abs2()
    return a2 if isinstance(a2, Fraction) else Fraction(a2)
