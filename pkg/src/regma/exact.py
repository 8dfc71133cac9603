"""Exact arithmetic kernel: arbitrary-precision integer and rational linear
algebra, F2 linear algebra on packed bitmasks, Smith/Hermite normal forms,
integer kernel lattices, and the odd-determinant regularity test.

Rationals are fractions.Fraction values (always stored reduced with a
positive denominator, so equality is bit-exact). Integer matrices are
immutable row-major tuples. F2 matrices pack one Python int per row,
bit j = column j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, RankDeficientError

Rat = Fraction


def parse_rat(text: str) -> Rat:
    """Parse "p/q" or "p" into a rational."""
    return Fraction(text.strip())


def format_rat(value: Rat) -> str:
    """Serialize a rational as "p/q", omitting "/q" when q = 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"IntMatrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
            flat.extend(int(x) for x in r)
        return IntMatrix(nrows, ncols, tuple(flat))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(self.col(j)) for j in range(self.cols)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError("matrix product shape mismatch")
        ot = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append([sum(a * b for a, b in zip(ri, c)) for c in ot])
        return IntMatrix.from_rows(out) if out else IntMatrix(0, other.cols, ())

    def select_cols(self, indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows([[self.at(i, j) for j in indices] for i in range(self.rows)])

    def mod2(self) -> "BitMatrix":
        bits = []
        for i in range(self.rows):
            word = 0
            for j, v in enumerate(self.row(i)):
                if v & 1:
                    word |= 1 << j
            bits.append(word)
        return BitMatrix(self.rows, self.cols, tuple(bits))

    def format(self) -> str:
        """Whitespace rows preceded by a "rows cols" header line."""
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return "\n".join(lines)

    @staticmethod
    def parse(text: str) -> "IntMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        nrows, ncols = map(int, lines[0].split())
        rows = [[int(x) for x in ln.split()] for ln in lines[1 : 1 + nrows]]
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise DimensionError("matrix body does not match header")
        return IntMatrix.from_rows(rows) if nrows else IntMatrix(0, ncols, ())


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over F2; row i is the int self.bits[i], bit j = column j."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise DimensionError("BitMatrix needs one word per row")
        mask = (1 << self.cols) - 1
        if any(b & ~mask for b in self.bits):
            raise DimensionError("row word has bits beyond the column count")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "BitMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        words = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
            word = 0
            for j, v in enumerate(r):
                if int(v) & 1:
                    word |= 1 << j
            words.append(word)
        return BitMatrix(nrows, ncols, tuple(words))

    def at(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.bits]

    def col_masks(self) -> list[int]:
        """Columns packed as ints, bit i = row i."""
        cols = [0] * self.cols
        for i, w in enumerate(self.bits):
            while w:
                j = (w & -w).bit_length() - 1
                cols[j] |= 1 << i
                w &= w - 1
        return cols

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, tuple(self.col_masks()))

    def rref(self) -> "BitMatrix":
        """Reduced row echelon form (zero rows dropped)."""
        work = list(self.bits)
        pivots = []
        r = 0
        for j in range(self.cols):
            pos = next((k for k in range(r, len(work)) if (work[k] >> j) & 1), None)
            if pos is None:
                continue
            work[r], work[pos] = work[pos], work[r]
            for k in range(len(work)):
                if k != r and (work[k] >> j) & 1:
                    work[k] ^= work[r]
            pivots.append(j)
            r += 1
        return BitMatrix(r, self.cols, tuple(work[:r]))


def rank_f2(m: BitMatrix) -> int:
    """Rank over F2 via Gaussian elimination on row words."""
    return f2_rank_words(list(m.bits))


def f2_rank_words(words: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
            rank += 1
    return rank


def f2_solve_left(a: BitMatrix, target: int) -> int | None:
    """Solve x·A = target over F2 for a row functional x (as a bitmask over
    A's rows); target is a bitmask over A's columns. Returns None when
    inconsistent."""
    # Row-reduce A while tracking the combination of original rows.
    work = list(a.bits)
    combo = [1 << i for i in range(a.rows)]
    pivots: list[tuple[int, int]] = []  # (column, row-slot)
    r = 0
    for j in range(a.cols):
        pos = next((k for k in range(r, len(work)) if (work[k] >> j) & 1), None)
        if pos is None:
            continue
        work[r], work[pos] = work[pos], work[r]
        combo[r], combo[pos] = combo[pos], combo[r]
        for k in range(len(work)):
            if k != r and (work[k] >> j) & 1:
                work[k] ^= work[r]
                combo[k] ^= combo[r]
        pivots.append((j, r))
        r += 1
    x = 0
    t = target
    for j, slot in pivots:
        if (t >> j) & 1:
            t ^= work[slot]
            x ^= combo[slot]
    return x if t == 0 else None


def det(m: IntMatrix):
    """Exact determinant by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def rank_q(m: IntMatrix) -> int:
    """Rank over the rationals (integer fraction-free elimination)."""
    a = [list(m.row(i)) for i in range(m.rows)]
    rank = 0
    col = 0
    while rank < m.rows and col < m.cols:
        pivot = next((i for i in range(rank, m.rows) if a[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pr = a[rank]
        for i in range(rank + 1, m.rows):
            if a[i][col]:
                f1, f2 = pr[col], a[i][col]
                a[i] = [f1 * x - f2 * y for x, y in zip(a[i], pr)]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class OddDetVerdict:
    """Outcome of the odd-determinant scan over all maximal column subsets."""

    ok: bool
    violation: tuple[int, ...] | None = None
    determinant: int | None = None


def odd_determinant_check(h: IntMatrix) -> OddDetVerdict:
    """Check that every d x d column submatrix of the d x n matrix h has
    determinant in {0} or odd. The first offending column subset in
    lexicographic order is reported.

    The scan keeps an incremental F2 echelon of the chosen columns: a full
    F2 rank certifies an odd determinant for free, and the exact Bareiss
    determinant is only computed for subsets that are F2-singular (those are
    the only ones that can be even and nonzero).
    """
    d, n = h.rows, h.cols
    if rank_q(h) != d:
        raise RankDeficientError(f"matrix has rank < {d}; columns do not span")
    if d == 0:
        return OddDetVerdict(True)
    cols2 = h.mod2().col_masks()

    chosen: list[int] = []

    def scan(start: int, basis: tuple[int, ...]) -> OddDetVerdict | None:
        depth = len(chosen)
        if depth == d:
            if len(basis) == d:
                return None  # F2-nonsingular: determinant is odd
            dd = det(h.select_cols(chosen))
            if dd != 0:
                return OddDetVerdict(False, tuple(chosen), dd)
            return None
        # Upper range bound keeps enough columns to finish the subset.
        for j in range(start, n - (d - depth) + 1):
            w = cols2[j]
            for b in basis:
                w = min(w, w ^ b)
            nb = basis
            if w:
                nb = tuple(sorted(basis + (w,), reverse=True))
            chosen.append(j)
            bad = scan(j + 1, nb)
            chosen.pop()
            if bad is not None:
                return bad
        return None

    bad = scan(0, ())
    return bad if bad is not None else OddDetVerdict(True)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns unimodular (U, V) and diagonal D with
    U·m·V = D and d_i | d_{i+1}."""
    rows, cols = m.rows, m.cols
    a = [list(m.row(i)) for i in range(rows)]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(rows, cols):
        # Find a nonzero pivot of minimal absolute value in the trailing block.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                    dirty = True
            if not dirty:
                break
        # Enforce divisibility of the rest of the block by the pivot.
        entry = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    entry = (i, j)
                    break
            if entry:
                break
        if entry:
            row_op(t, entry[0], -1)  # add the offending row to the pivot row
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return (IntMatrix.from_rows(u) if rows else IntMatrix(0, 0, ()),
            IntMatrix.from_rows(a) if rows else IntMatrix(0, cols, ()),
            IntMatrix.from_rows(v))


def hermite_row_form(m: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form (zero rows dropped): row echelon over Z,
    positive pivots, entries above each pivot reduced modulo the pivot."""
    cols = m.cols
    remaining = [list(m.row(i)) for i in range(m.rows) if any(m.row(i))]
    out: list[list[int]] = []
    for col in range(cols):
        live = [r for r in remaining if r[col] != 0]
        rest = [r for r in remaining if r[col] == 0]
        if not live:
            remaining = rest
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv, others = live[0], live[1:]
            live = [piv]
            for r in others:
                q = r[col] // piv[col]
                r2 = [x - q * y for x, y in zip(r, piv)]
                if r2[col] != 0:
                    live.append(r2)
                elif any(r2):
                    rest.append(r2)
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        remaining = rest
    pivcols = [next(j for j, x in enumerate(r) if x) for r in out]
    for i in range(len(out)):
        for k in range(i + 1, len(out)):
            pc = pivcols[k]
            q = out[i][pc] // out[k][pc]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[k])]
    return IntMatrix.from_rows(out) if out else IntMatrix(0, cols, ())


def kernel_lattice_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a lattice basis of {x in Z^cols : m·x = 0}, canonicalized
    by Hermite normal form."""
    _, d, v = smith_normal_form(m)
    r = sum(1 for i in range(min(m.rows, m.cols)) if d.at(i, i) != 0)
    kernel_cols = [v.col(j) for j in range(r, m.cols)]
    if not kernel_cols:
        return IntMatrix(m.cols, 0, ())
    hnf = hermite_row_form(IntMatrix.from_rows(kernel_cols))
    return hnf.transpose()
