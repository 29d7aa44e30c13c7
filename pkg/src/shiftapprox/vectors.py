"""Finitely supported coordinate vectors and functionals.

Vectors live in the coordinate models of l^p (p in {1, 2, inf}) over the
standard basis e_n indexed by signed integers (negative coordinates appear
in bilateral models).  Only nonzero entries are stored.  Functionals are
finitely supported too and pair with vectors through the bilinear form
f(v) = sum_i f_i v_i; their dual norm is the l^q norm of the coefficients,
1/p + 1/q = 1.

Exact-mode p=2 norms are irrational in general.  :class:`NormValue` carries
the exact squared norm together with a certified rational upper enclosure,
which is what certified comparisons must use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .errors import ModeMismatchError
from .scalars import (
    EXACT,
    FLOAT,
    Scalar,
    exact_sqrt,
    scalar_abs2_as_fraction,
    sqrt_upper,
)

INF = math.inf

NormMode = Union[int, float]

_VALID_P = (1, 2, INF)


def _check_p(p: NormMode) -> None:
    if p not in _VALID_P:
        raise ValueError(f"norm mode must be 1, 2 or inf, got {p!r}")


def dual_exponent(p: NormMode) -> NormMode:
    """q with 1/p + 1/q = 1."""
    _check_p(p)
    if p == 1:
        return INF
    if p == INF:
        return 1
    return 2


def _clean_entries(entries: Mapping[int, Scalar], mode: str) -> Dict[int, Scalar]:
    out: Dict[int, Scalar] = {}
    for coord, value in entries.items():
        if not isinstance(coord, int):
            raise TypeError(f"coordinate {coord!r} is not an integer")
        if value.mode != mode:
            raise ModeMismatchError(
                f"entry at {coord} has mode {value.mode}, expected {mode}"
            )
        if not value.is_zero():
            out[coord] = value
    return out


@dataclass(frozen=True)
class NormValue:
    """A norm with a certified upper enclosure.

    ``upper`` is a rational >= the true norm (equal when ``exact``).  In
    exact mode with p=2 the exact squared norm is carried alongside.
    """

    upper: Fraction
    exact: bool
    mode: str
    exact_sq: Optional[Fraction] = None

    @property
    def value(self) -> float:
        return float(self.upper)

    def __float__(self) -> float:
        return float(self.upper)


@dataclass(frozen=True)
class SparseVector:
    entries: Dict[int, Scalar] = field(default_factory=dict)
    mode: str = EXACT

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean_entries(self.entries, self.mode))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(mode: str = EXACT) -> "SparseVector":
        return SparseVector({}, mode)

    @staticmethod
    def unit(coord: int, mode: str = EXACT) -> "SparseVector":
        return SparseVector({coord: Scalar.one(mode)}, mode)

    @staticmethod
    def from_items(items: Iterable[Tuple[int, Scalar]], mode: str = EXACT) -> "SparseVector":
        acc: Dict[int, Scalar] = {}
        for coord, value in items:
            if coord in acc:
                acc[coord] = acc[coord] + value
            else:
                acc[coord] = value
        return SparseVector(acc, mode)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "SparseVector") -> "SparseVector":
        if self.mode != other.mode:
            raise ModeMismatchError("cannot add vectors of different modes")
        acc = dict(self.entries)
        for coord, value in other.entries.items():
            if coord in acc:
                acc[coord] = acc[coord] + value
            else:
                acc[coord] = value
        return SparseVector(acc, self.mode)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def __neg__(self) -> "SparseVector":
        return SparseVector({c: -v for c, v in self.entries.items()}, self.mode)

    def scale(self, s: Scalar) -> "SparseVector":
        if s.mode != self.mode:
            raise ModeMismatchError("scaling scalar mode mismatch")
        if s.is_zero():
            return SparseVector.zero(self.mode)
        return SparseVector({c: v * s for c, v in self.entries.items()}, self.mode)

    def get(self, coord: int) -> Scalar:
        return self.entries.get(coord, Scalar.zero(self.mode))

    # -- structure ---------------------------------------------------------

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.entries))

    def is_zero(self) -> bool:
        return not self.entries

    def conjugate(self) -> "SparseVector":
        return SparseVector({c: v.conjugate() for c, v in self.entries.items()}, self.mode)

    def to_float(self) -> "SparseVector":
        return SparseVector({c: v.to_float() for c, v in self.entries.items()}, FLOAT)

    def norm(self, p: NormMode = 2) -> NormValue:
        return vector_norm(self, p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.mode == other.mode and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.mode, tuple(sorted((c, v) for c, v in self.entries.items()))))

    def __repr__(self) -> str:
        if not self.entries:
            return "0"
        parts = [f"{v!r}*e{c}" for c, v in sorted(self.entries.items())]
        return " + ".join(parts)


@dataclass(frozen=True)
class Functional:
    """A finitely supported functional with the bilinear pairing."""

    entries: Dict[int, Scalar] = field(default_factory=dict)
    mode: str = EXACT
    norm_mode: Optional[NormMode] = None  # the p of the ambient space, if declared

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean_entries(self.entries, self.mode))
        if self.norm_mode is not None:
            _check_p(self.norm_mode)

    @staticmethod
    def coordinate(coord: int, mode: str = EXACT, norm_mode: Optional[NormMode] = None) -> "Functional":
        return Functional({coord: Scalar.one(mode)}, mode, norm_mode)

    def evaluate(self, v: SparseVector) -> Scalar:
        if self.mode != v.mode:
            raise ModeMismatchError("functional/vector mode mismatch")
        acc = Scalar.zero(self.mode)
        small, large = (self.entries, v.entries)
        if len(large) < len(small):
            small, large = large, small
        for coord, value in small.items():
            other = large.get(coord)
            if other is not None:
                acc = acc + value * other
        return acc

    def __call__(self, v: SparseVector) -> Scalar:
        return self.evaluate(v)

    def scale(self, s: Scalar) -> "Functional":
        if s.is_zero():
            return Functional({}, self.mode, self.norm_mode)
        return Functional({c: v * s for c, v in self.entries.items()}, self.mode, self.norm_mode)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.entries))

    def as_vector(self) -> SparseVector:
        return SparseVector(dict(self.entries), self.mode)

    def dual_norm(self, p: NormMode = 2) -> NormValue:
        """The l^q norm of the coefficients, 1/p + 1/q = 1."""
        return vector_norm(self.as_vector(), dual_exponent(p))

    def __repr__(self) -> str:
        return f"Functional({self.as_vector()!r})"


def _float_norm(values, p: NormMode) -> float:
    mags = [abs(v.to_complex()) for v in values]
    if not mags:
        return 0.0
    if p == 1:
        return float(sum(mags))
    if p == INF:
        return float(max(mags))
    return float(math.sqrt(sum(m * m for m in mags)))


def vector_norm(v: SparseVector, p: NormMode = 2) -> NormValue:
    """l^p norm over the finite support, with a certified upper enclosure."""
    _check_p(p)
    if v.mode == FLOAT:
        value = _float_norm(v.entries.values(), p)
        return NormValue(upper=Fraction(value), exact=True, mode=FLOAT)

    if not v.entries:
        return NormValue(upper=Fraction(0), exact=True, mode=EXACT,
                         exact_sq=Fraction(0) if p == 2 else None)

    if p == 2:
        sq = Fraction(0)
        for value in v.entries.values():
            sq += scalar_abs2_as_fraction(value)
        root = exact_sqrt(sq)
        if root is not None:
            return NormValue(upper=root, exact=True, mode=EXACT, exact_sq=sq)
        return NormValue(upper=sqrt_upper(sq), exact=False, mode=EXACT, exact_sq=sq)

    # p = 1 or inf: combine per-entry magnitudes, exact when all are rational
    uppers = []
    all_exact = True
    for value in v.entries.values():
        mag = value.abs_exact()
        if mag is None:
            all_exact = False
            mag = value.abs_upper()
        uppers.append(mag)
    total = sum(uppers, Fraction(0)) if p == 1 else max(uppers)
    return NormValue(upper=total, exact=all_exact, mode=EXACT)


def dual_norm(f: Functional, p: NormMode = 2) -> NormValue:
    """Norm of f as a functional on the l^p coordinate model."""
    return f.dual_norm(p)
