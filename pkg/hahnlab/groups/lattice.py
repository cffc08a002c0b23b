"""Integer lattice reductions: Hermite and Smith normal forms with transforms.

All matrices are plain lists of integer rows.  A lattice is the ℤ-span of the
rows of a matrix.  The reductions return the unimodular transforms alongside
the normal form so callers can read off relations, coordinates and
purity witnesses without re-solving.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _axpy(target: List[int], source: Sequence[int], factor: int) -> None:
    """target -= factor * source, in place."""
    if factor:
        for k, value in enumerate(source):
            target[k] -= factor * value


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HermiteForm:
    """Row-style Hermite form: ``transform · matrix == rows``.

    The first ``rank`` rows are the echelon basis (positive pivots, entries
    above each pivot reduced into ``[0, pivot)``); the remaining rows of
    ``transform`` are a basis of the integer relations among the input rows.
    """

    rows: Tuple[Tuple[int, ...], ...]
    transform: Tuple[Tuple[int, ...], ...]
    rank: int
    pivots: Tuple[int, ...]

    @property
    def basis(self) -> List[List[int]]:
        return [list(r) for r in self.rows[: self.rank]]

    @property
    def relations(self) -> List[List[int]]:
        return [list(r) for r in self.transform[self.rank :]]


def hermite_form(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> HermiteForm:
    """Compute the row Hermite normal form of an integer matrix."""
    m = len(matrix)
    n = ncols if ncols is not None else (len(matrix[0]) if m else 0)
    h = [[int(v) for v in row] for row in matrix]
    u = identity(m)
    pivots: List[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        while True:
            candidates = [i for i in range(row, m) if h[i][col] != 0]
            if not candidates:
                break
            best = min(candidates, key=lambda i: (abs(h[i][col]), i))
            h[row], h[best] = h[best], h[row]
            u[row], u[best] = u[best], u[row]
            clean = True
            for i in range(row + 1, m):
                if h[i][col]:
                    q = h[i][col] // h[row][col]
                    _axpy(h[i], h[row], q)
                    _axpy(u[i], u[row], q)
                    if h[i][col]:
                        clean = False
            if clean:
                break
        if h[row][col] == 0:
            continue
        if h[row][col] < 0:
            h[row] = [-v for v in h[row]]
            u[row] = [-v for v in u[row]]
        for i in range(row):
            q = h[i][col] // h[row][col]
            _axpy(h[i], h[row], q)
            _axpy(u[i], u[row], q)
        pivots.append(col)
        row += 1
    return HermiteForm(
        rows=tuple(tuple(r) for r in h),
        transform=tuple(tuple(r) for r in u),
        rank=row,
        pivots=tuple(pivots),
    )


def integer_relations(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[List[int]]:
    """Basis of {n ∈ ℤ^m : Σ n_i · row_i = 0}."""
    if not matrix:
        return []
    return hermite_form(matrix, ncols).relations


def rational_relations(matrix: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Integer relations among rows of a rational matrix (scaled to integers first)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    if ncols == 0:
        return identity(len(matrix))
    scale = 1
    for row in matrix:
        for value in row:
            scale = lcm(scale, Fraction(value).denominator)
    scaled = [[int(Fraction(v) * scale) for v in row] for row in matrix]
    return integer_relations(scaled, ncols)


def lattice_basis(generators: Sequence[Sequence[int]], ncols: int) -> List[List[int]]:
    """Canonical (Hermite) basis of the lattice spanned by ``generators``."""
    if not generators:
        return []
    return hermite_form(generators, ncols).basis


def lattice_coordinates(basis: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[int]]:
    """Integer coordinates of ``target`` in an echelon basis, or None if not in the lattice."""
    rest = list(target)
    coords: List[int] = []
    for row in basis:
        pivot = next(k for k, v in enumerate(row) if v)
        if any(rest[k] for k in range(pivot)):
            return None
        q, r = divmod(rest[pivot], row[pivot])
        if r:
            return None
        _axpy(rest, row, q)
        coords.append(q)
    return coords if not any(rest) else None


def rational_coordinates(basis: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[Fraction]]:
    """Rational coordinates of ``target`` in an echelon basis, or None outside the ℚ-span."""
    rest = [Fraction(v) for v in target]
    coords: List[Fraction] = []
    for row in basis:
        pivot = next(k for k, v in enumerate(row) if v)
        if any(rest[k] for k in range(pivot)):
            return None
        q = rest[pivot] / row[pivot]
        for k, v in enumerate(row):
            rest[k] -= q * v
        coords.append(q)
    return coords if not any(rest) else None


def reduce_modulo(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> List[int]:
    """Canonical representative of ``vector`` modulo the lattice of an echelon basis."""
    rest = list(vector)
    for row in basis:
        pivot = next(k for k, v in enumerate(row) if v)
        _axpy(rest, row, rest[pivot] // row[pivot])
    return rest


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithForm:
    """``left · matrix · right == diagonal`` with ``right_inverse = right⁻¹``.

    ``divisors`` lists the diagonal entries (nonnegative, each dividing the
    next among the nonzero ones).
    """

    divisors: Tuple[int, ...]
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]
    right_inverse: Tuple[Tuple[int, ...], ...]


def smith_form(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SmithForm:
    m = len(matrix)
    n = ncols if ncols is not None else (len(matrix[0]) if m else 0)
    s = [[int(v) for v in row] for row in matrix]
    left = identity(m)
    right = identity(n)
    right_inv = identity(n)

    def swap_cols(a: int, b: int) -> None:
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in right:
            row[a], row[b] = row[b], row[a]
        right_inv[a], right_inv[b] = right_inv[b], right_inv[a]

    def col_axpy(target: int, source: int, q: int) -> None:
        # column target -= q * column source
        if not q:
            return
        for row in s:
            row[target] -= q * row[source]
        for row in right:
            row[target] -= q * row[source]
        for k in range(n):
            right_inv[source][k] += q * right_inv[target][k]

    t = 0
    while t < min(m, n):
        entries = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        s[t], s[i0] = s[i0], s[t]
        left[t], left[i0] = left[i0], left[t]
        swap_cols(t, j0)
        while True:
            dirty = False
            for i in range(t + 1, m):
                q = s[i][t] // s[t][t]
                _axpy(s[i], s[t], q)
                _axpy(left[i], left[t], q)
                dirty = dirty or bool(s[i][t])
            for j in range(t + 1, n):
                col_axpy(j, t, s[t][j] // s[t][t])
                dirty = dirty or bool(s[t][j])
            if dirty:
                entries = [(abs(s[i][t]), i, t) for i in range(t, m) if s[i][t]]
                entries += [(abs(s[t][j]), t, j) for j in range(t, n) if s[t][j]]
                _, i0, j0 = min(entries)
                if i0 != t:
                    s[t], s[i0] = s[i0], s[t]
                    left[t], left[i0] = left[i0], left[t]
                if j0 != t:
                    swap_cols(t, j0)
                continue
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % s[t][t]),
                None,
            )
            if offender is None:
                break
            # pull the non-divisible row into the pivot row and reduce again
            for k in range(n):
                s[t][k] += s[offender][k]
            for k in range(m):
                left[t][k] += left[offender][k]
        if s[t][t] < 0:
            s[t] = [-v for v in s[t]]
            left[t] = [-v for v in left[t]]
        t += 1
    divisors = tuple(s[i][i] for i in range(min(m, n)))
    logger.debug("Smith divisors %s for %dx%d matrix", divisors, m, n)
    return SmithForm(
        divisors=divisors,
        left=tuple(tuple(r) for r in left),
        right=tuple(tuple(r) for r in right),
        right_inverse=tuple(tuple(r) for r in right_inv),
    )
