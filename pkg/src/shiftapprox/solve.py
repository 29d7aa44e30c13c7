"""Finite linear-system solving over sparse vectors.

The central structure is :class:`IncrementalSpan`, a growing reduced
echelon basis with recorded change of basis.  It answers, exactly in exact
mode, the three questions the rest of the package keeps asking:

* is this vector in the span of the family so far?
* if so, with which coefficients over the original family?
* is the family linearly independent?

On top of it sit :func:`expand_in_set` and :func:`biorthogonal`; dense
Gaussian elimination over exact complex rationals backs Gram systems and
the brute-force oracles used in tests.

Float mode uses a relative pivot tolerance; certified results should use
exact mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DependentBasisError
from .scalars import EXACT, FLOAT, Scalar
from .vectors import Functional, NormMode, SparseVector

_FLOAT_TOL = 1e-10


def _is_negligible(value: Scalar, scale: float, tol: float) -> bool:
    if value.mode == EXACT:
        return value.is_zero()
    return abs(value.to_complex()) <= tol * max(1.0, scale)


def _vec_scale(entries: Dict[int, Scalar]) -> float:
    if not entries:
        return 0.0
    return max(abs(v.to_complex()) for v in entries.values())


class IncrementalSpan:
    """A reduced echelon basis for a growing family of sparse vectors.

    Rows are kept mutually reduced: each row owns a pivot coordinate with
    coefficient one, and no other row touches that coordinate.  Every row
    records its expression over the original added vectors, so expansions
    come out in terms of the family the caller supplied.
    """

    def __init__(self, mode: str = EXACT, tol: float = _FLOAT_TOL):
        self.mode = mode
        self.tol = tol
        # (pivot coord, row entries, combination over original vectors)
        self._rows: List[Tuple[int, Dict[int, Scalar], Dict[int, Scalar]]] = []
        self._n_added = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def n_added(self) -> int:
        return self._n_added

    def clone(self) -> "IncrementalSpan":
        other = IncrementalSpan(self.mode, self.tol)
        other._rows = [(p, dict(r), dict(c)) for p, r, c in self._rows]
        other._n_added = self._n_added
        return other

    # -- internals ----------------------------------------------------------

    def _reduce(
        self, v: SparseVector
    ) -> Tuple[Dict[int, Scalar], Dict[int, Scalar]]:
        """Reduce v against the rows; return (residual, row coefficients)."""
        residual: Dict[int, Scalar] = dict(v.entries)
        scale = _vec_scale(residual)
        coeffs: Dict[int, Scalar] = {}
        for i, (pivot, row, _) in enumerate(self._rows):
            c = residual.get(pivot)
            if c is None or _is_negligible(c, scale, self.tol):
                residual.pop(pivot, None)
                continue
            coeffs[i] = c
            for coord, value in row.items():
                cur = residual.get(coord, Scalar.zero(self.mode))
                nxt = cur - c * value
                if _is_negligible(nxt, scale, self.tol):
                    residual.pop(coord, None)
                else:
                    residual[coord] = nxt
        residual = {
            c: v2 for c, v2 in residual.items() if not _is_negligible(v2, scale, self.tol)
        }
        return residual, coeffs

    # -- public API ----------------------------------------------------------

    def try_add(self, v: SparseVector) -> bool:
        """Add v to the family; False if it was dependent (not added)."""
        if v.mode != self.mode:
            raise DependentBasisError(
                f"vector mode {v.mode} does not match span mode {self.mode}"
            )
        residual, coeffs = self._reduce(v)
        if not residual:
            return False
        original_index = self._n_added
        self._n_added += 1
        # combination of the residual over original vectors
        combo: Dict[int, Scalar] = {original_index: Scalar.one(self.mode)}
        for i, c in coeffs.items():
            for j, value in self._rows[i][2].items():
                cur = combo.get(j, Scalar.zero(self.mode))
                cur = cur - c * value
                if cur.is_zero():
                    combo.pop(j, None)
                else:
                    combo[j] = cur
        pivot = min(residual)
        lead = residual[pivot]
        row = {c: v2 / lead for c, v2 in residual.items()}
        combo = {j: v2 / lead for j, v2 in combo.items()}
        # eliminate the new pivot from the existing rows
        for i, (p, r, comb) in enumerate(self._rows):
            c = r.get(pivot)
            if c is None:
                continue
            for coord, value in row.items():
                cur = r.get(coord, Scalar.zero(self.mode))
                nxt = cur - c * value
                if _is_negligible(nxt, _vec_scale(r), self.tol):
                    r.pop(coord, None)
                else:
                    r[coord] = nxt
            for j, value in combo.items():
                cur = comb.get(j, Scalar.zero(self.mode))
                nxt = cur - c * value
                if nxt.is_zero():
                    comb.pop(j, None)
                else:
                    comb[j] = nxt
        self._rows.append((pivot, row, combo))
        return True

    def add(self, v: SparseVector) -> None:
        """Add v, raising DependentBasisError if it is dependent."""
        if not self.try_add(v):
            raise DependentBasisError(
                f"vector {v!r} is linearly dependent on the family so far"
            )

    def expand(self, v: SparseVector) -> Optional[Dict[int, Scalar]]:
        """Coefficients of v over the original added vectors, or None."""
        if v.mode != self.mode:
            raise DependentBasisError("vector mode does not match span mode")
        residual, coeffs = self._reduce(v)
        if residual:
            return None
        out: Dict[int, Scalar] = {}
        for i, c in coeffs.items():
            for j, value in self._rows[i][2].items():
                cur = out.get(j, Scalar.zero(self.mode))
                cur = cur + c * value
                if cur.is_zero():
                    out.pop(j, None)
                else:
                    out[j] = cur
        return out

    def contains(self, v: SparseVector) -> bool:
        residual, _ = self._reduce(v)
        return not residual

    def coordinate_exhaustion(self, coords: Sequence[int]) -> int:
        """Length of the longest prefix of coords whose units are all in span."""
        count = 0
        for coord in coords:
            if self.contains(SparseVector.unit(coord, self.mode)):
                count += 1
            else:
                break
        return count


def expand_in_set(
    v: SparseVector, basis: Sequence[SparseVector]
) -> Optional[List[Scalar]]:
    """Coefficients c with v = sum c_i basis_i, or None if outside the span.

    Raises DependentBasisError when the basis is linearly dependent.
    """
    if not basis:
        return [] if v.is_zero() else None
    span = IncrementalSpan(basis[0].mode)
    for b in basis:
        span.add(b)
    coeffs = span.expand(v)
    if coeffs is None:
        return None
    mode = basis[0].mode
    return [coeffs.get(i, Scalar.zero(mode)) for i in range(len(basis))]


def gram_matrix(family: Sequence[SparseVector]) -> List[List[Scalar]]:
    """G[i][j] = <family_i, family_j> with the standard sesquilinear product."""
    n = len(family)
    mode = family[0].mode if family else EXACT
    g = [[Scalar.zero(mode) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = Scalar.zero(mode)
            vi, vj = family[i].entries, family[j].entries
            if len(vi) <= len(vj):
                for coord, value in vi.items():
                    other = vj.get(coord)
                    if other is not None:
                        acc = acc + value * other.conjugate()
            else:
                for coord, other in vj.items():
                    value = vi.get(coord)
                    if value is not None:
                        acc = acc + value * other.conjugate()
            g[i][j] = acc
    return g


def gauss_solve(
    matrix: Sequence[Sequence[Scalar]],
    rhs: Sequence[Sequence[Scalar]],
    mode: str = EXACT,
    tol: float = _FLOAT_TOL,
) -> Optional[List[List[Scalar]]]:
    """Solve A X = B for square A with multiple right-hand sides.

    Returns None when A is singular (exact mode: exactly; float mode: by
    pivot tolerance).
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    b = [list(row) for row in rhs]
    m = len(b[0]) if b else 0
    scale = max((abs(v.to_complex()) for row in a for v in row), default=1.0)
    for col in range(n):
        pivot_row = None
        if mode == EXACT:
            for r in range(col, n):
                if not a[r][col].is_zero():
                    pivot_row = r
                    break
        else:
            best = tol * max(1.0, scale)
            for r in range(col, n):
                mag = abs(a[r][col].to_complex())
                if mag > best:
                    best = mag
                    pivot_row = r
        if pivot_row is None:
            return None
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        inv = Scalar.one(mode) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] = [v * inv for v in b[col]]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if factor.is_zero():
                continue
            a[r] = [vr - factor * vc for vr, vc in zip(a[r], a[col])]
            b[r] = [vr - factor * vc for vr, vc in zip(b[r], b[col])]
    return b


def invert_matrix(
    matrix: Sequence[Sequence[Scalar]], mode: str = EXACT
) -> Optional[List[List[Scalar]]]:
    """Exact (or tolerance-pivoted) inverse of a square Scalar matrix."""
    n = len(matrix)
    identity = [
        [Scalar.one(mode) if i == j else Scalar.zero(mode) for j in range(n)]
        for i in range(n)
    ]
    return gauss_solve(matrix, identity, mode)


def biorthogonal(
    family: Sequence[SparseVector], target: int, p: NormMode = 2
) -> Functional:
    """The minimal-l2 functional with f(family_i) = delta_{i, target}.

    ``target`` is the 1-based position within the family.  The functional is
    supported on the coordinates touched by the family and kills every other
    family member exactly.  Raises DependentBasisError when the family is
    dependent (the Gram system is singular exactly when it is).
    """
    n = len(family)
    if not 1 <= target <= n:
        raise ValueError(f"target position {target} outside 1..{n}")
    mode = family[0].mode
    g = gram_matrix(family)
    rhs = [[Scalar.one(mode) if i == target - 1 else Scalar.zero(mode)] for i in range(n)]
    solved = gauss_solve(g, rhs, mode)
    if solved is None:
        raise DependentBasisError("family is linearly dependent (singular Gram system)")
    mu = [row[0] for row in solved]
    entries: Dict[int, Scalar] = {}
    for j, m in enumerate(mu):
        if m.is_zero():
            continue
        for coord, value in family[j].entries.items():
            cur = entries.get(coord, Scalar.zero(mode))
            cur = cur + m * value.conjugate()
            if cur.is_zero():
                entries.pop(coord, None)
            else:
                entries[coord] = cur
    return Functional(entries, mode, norm_mode=p)


def biorthogonal_system(
    family: Sequence[SparseVector], p: NormMode = 2
) -> List[Functional]:
    """All biorthogonal functionals of the family at once (shared Gram solve)."""
    n = len(family)
    if n == 0:
        return []
    mode = family[0].mode
    g = gram_matrix(family)
    inverse = invert_matrix(g, mode)
    if inverse is None:
        raise DependentBasisError("family is linearly dependent (singular Gram system)")
    out: List[Functional] = []
    for t in range(n):
        entries: Dict[int, Scalar] = {}
        for j in range(n):
            m = inverse[j][t]
            if m.is_zero():
                continue
            for coord, value in family[j].entries.items():
                cur = entries.get(coord, Scalar.zero(mode))
                cur = cur + m * value.conjugate()
                if cur.is_zero():
                    entries.pop(coord, None)
                else:
                    entries[coord] = cur
        out.append(Functional(entries, mode, norm_mode=p))
    return out
