"""Exact rational linear algebra and the columns-condition search.

A matrix satisfies the columns condition when its columns admit an ordered
partition D_1, ..., D_r such that the columns of D_1 sum to zero and every
later block's sum lies in the rational span of all earlier columns.  This is
the classical criterion governing partition regularity of linear systems, and
the search here is exhaustive and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import CapExceededError

Vector = tuple[Fraction, ...]

DEFAULT_COLUMN_CAP = 22


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]  # row-major

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must have at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the declared shape")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "QMatrix":
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        entries = tuple(_frac(x) for r in rows for x in r)
        return QMatrix(len(rows), ncols, entries)

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def scaled(self, q) -> "QMatrix":
        q = _frac(q)
        return QMatrix(self.rows, self.cols, tuple(q * x for x in self.entries))


@dataclass(frozen=True)
class ColumnsCertificate:
    """Ordered blocks of column indices (0-based, each block sorted)."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("certificate blocks must be nonempty")
            if seen & set(block):
                raise ValueError("certificate blocks must be disjoint")
            seen.update(block)


def parse_matrix_text(text: str) -> QMatrix:
    """One row per line, entries as integers or p/q, whitespace-separated."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad matrix entry on line {lineno}: {exc}") from exc
    if not rows:
        raise ValueError("empty matrix")
    return QMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# elimination


def rref(matrix: QMatrix) -> tuple[QMatrix, int, tuple[int, ...]]:
    """Exact reduced row-echelon form; returns (reduced, rank, pivot columns)."""
    m = [list(matrix.row(i)) for i in range(matrix.rows)]
    pivots = []
    r = 0
    for c in range(matrix.cols):
        pivot_row = next((i for i in range(r, matrix.rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(matrix.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == matrix.rows:
            break
    flat = tuple(x for row in m for x in row)
    return QMatrix(matrix.rows, matrix.cols, flat), r, tuple(pivots)


class _Basis:
    """Incremental row-reduced basis of rational vectors.

    Vectors are rescaled to integer entries, so the elimination is
    fraction-free (v*pivot - row*v[pivot], then content reduction); zeroness
    of residuals, which is all span membership needs, is scale-invariant.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def copy(self) -> "_Basis":
        b = _Basis(self.dim)
        b.rows = [row[:] for row in self.rows]
        b.pivots = self.pivots[:]
        return b

    @staticmethod
    def _to_int_vector(vec) -> list[int]:
        scale = 1
        for x in vec:
            if isinstance(x, Fraction) and x.denominator != 1:
                scale = scale * x.denominator // gcd(scale, x.denominator)
        return [int(x * scale) for x in vec]

    def _residual(self, v: list[int]) -> list[int]:
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                a, b = row[p], v[p]
                v = [a * x - b * y for x, y in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self._residual(self._to_int_vector(vec)))

    def add(self, vec: Sequence) -> bool:
        """Insert vec if independent; returns True when the rank grew."""
        v = self._residual(self._to_int_vector(vec))
        pivot = next((i for i, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        g = 0
        for x in v:
            g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        if v[pivot] < 0:
            v = [-x for x in v]
        self.rows.append(v)
        self.pivots.append(pivot)
        return True


def in_span(generators: Sequence[Sequence], vector: Sequence) -> bool:
    """True iff vector is a rational combination of the generators.

    The empty generator set spans only the zero vector.
    """
    vec = tuple(_frac(x) for x in vector)
    basis = _Basis(len(vec))
    for g in generators:
        g = tuple(_frac(x) for x in g)
        if len(g) != len(vec):
            raise ValueError(
                f"dimension mismatch: generator has {len(g)} entries, vector {len(vec)}"
            )
        basis.add(g)
    return basis.contains(vec)


# ---------------------------------------------------------------------------
# subset enumeration


def _iter_subsets_ascending(indices: Sequence[int], values: Sequence,
                            zero) -> Iterator[tuple[int, object]]:
    """Yields (mask, sum) for every nonempty subset of indices, ordered by
    ascending mask value (bit i of the mask = indices appear as given)."""
    n = len(indices)

    def vadd(a, b):
        if isinstance(a, tuple):
            return tuple(x + y for x, y in zip(a, b))
        return a + b

    def rec(bit: int, mask: int, total):
        if bit < 0:
            if mask:
                yield mask, total
            return
        yield from rec(bit - 1, mask, total)
        yield from rec(bit - 1, mask | (1 << bit), vadd(total, values[bit]))

    yield from rec(n - 1, 0, zero)


def zero_sum_subsets(coeffs: Sequence, cap: int = DEFAULT_COLUMN_CAP) -> list[tuple[int, ...]]:
    """All nonempty index subsets whose coefficients sum to zero, in
    ascending bitmask order.  Subsets are 0-based index tuples."""
    if not coeffs:
        raise ValueError("coefficient list must be nonempty")
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    n = len(coeffs)
    if n > cap:
        raise CapExceededError(cap)
    vals = [_frac(c) for c in coeffs]
    if n <= 18:
        # table of subset sums, filled in ascending mask order
        sums = [Fraction(0)] * (1 << n)
        out = []
        for mask in range(1, 1 << n):
            low = (mask & -mask).bit_length() - 1
            sums[mask] = sums[mask & (mask - 1)] + vals[low]
            if sums[mask] == 0:
                out.append(tuple(i for i in range(n) if mask >> i & 1))
        return out
    out = []
    for mask, total in _iter_subsets_ascending(list(range(n)), vals, Fraction(0)):
        if total == 0:
            out.append(tuple(i for i in range(n) if mask >> i & 1))
    return out


def first_zero_sum_subset(coeffs: Sequence,
                          cap: int = DEFAULT_COLUMN_CAP) -> Optional[tuple[int, ...]]:
    """Smallest (ascending bitmask order) nonempty zero-sum index subset."""
    if not coeffs:
        raise ValueError("coefficient list must be nonempty")
    n = len(coeffs)
    if n > cap:
        raise CapExceededError(cap)
    vals = [_frac(c) for c in coeffs]
    for mask, total in _iter_subsets_ascending(list(range(n)), vals, Fraction(0)):
        if total == 0:
            return tuple(i for i in range(n) if mask >> i & 1)
    return None


# ---------------------------------------------------------------------------
# columns condition


def columns_condition(matrix: QMatrix,
                      cap: int = DEFAULT_COLUMN_CAP) -> Optional[ColumnsCertificate]:
    """Search for a columns-condition certificate by exhaustive enumeration
    of ordered column partitions.

    Candidate first blocks are nonempty zero-sum column subsets (ascending
    bitmask order); the search then recurses on the remaining columns, each
    next block's sum having to lie in the span of everything consumed so
    far.  Dead ends are memoized by consumed-column bitmask, which is sound
    because that span depends only on the consumed set.  Returns the first
    certificate found, or None.
    """
    n = matrix.cols
    if n > cap:
        raise CapExceededError(cap)
    cols = matrix.columns()
    zero = tuple(Fraction(0) for _ in range(matrix.rows))
    full = (1 << n) - 1
    failed: set[int] = set()
    blocks: list[int] = []

    def extend(consumed: int, basis: _Basis) -> bool:
        if consumed == full:
            return True
        if consumed in failed:
            return False
        rem = [i for i in range(n) if not consumed >> i & 1]
        rem_cols = [cols[i] for i in rem]
        for cmask, total in _iter_subsets_ascending(rem, rem_cols, zero):
            # an empty basis contains only the zero vector, which is exactly
            # the first-block condition
            if not basis.contains(total):
                continue
            mask = 0
            for j, i in enumerate(rem):
                if cmask >> j & 1:
                    mask |= 1 << i
            nxt = basis.copy()
            for i in rem:
                if mask >> i & 1:
                    nxt.add(cols[i])
            blocks.append(mask)
            if extend(consumed | mask, nxt):
                return True
            blocks.pop()
        failed.add(consumed)
        return False

    if extend(0, _Basis(matrix.rows)):
        return ColumnsCertificate(
            tuple(tuple(i for i in range(n) if b >> i & 1) for b in blocks)
        )
    return None


def verify_certificate(matrix: QMatrix, cert: ColumnsCertificate) -> bool:
    """Independent exact re-check of a certificate against its matrix."""
    n = matrix.cols
    covered = [i for block in cert.blocks for i in block]
    if sorted(covered) != list(range(n)):
        return False
    cols = matrix.columns()
    seen: list[Vector] = []
    for t, block in enumerate(cert.blocks):
        total = tuple(
            sum((cols[i][r] for i in block), Fraction(0)) for r in range(matrix.rows)
        )
        if t == 0:
            if any(x != 0 for x in total):
                return False
        elif not in_span(seen, total):
            return False
        seen.extend(cols[i] for i in block)
    return True
