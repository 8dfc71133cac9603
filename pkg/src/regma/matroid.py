"""Binary-represented matroids with optional integer lifts: graphic,
cographic, and R10 constructions, duality, circuits/cocircuits/hyperplanes,
1-/2-/3-sums over F2 and over integer weight lattices, odd transforms,
simplification, and small-instance isomorphism.

A BinaryMatroid stores its F2 representation as constructed (the canonical
reduced row echelon form is cached for comparisons); when an integer lift is
present it reduces to the same row space mod 2, so independence can be read
off either side. Construction provenance is carried along so downstream
consumers (the six-involutions search) can use the structured builds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Sequence

from .errors import (DisconnectedGraphError, PreconditionError,
                     RankDeficientError, check_guard)
from .exact import (BitMatrix, IntMatrix, Rat, det, f2_rank_words,
                    kernel_lattice_basis, odd_determinant_check, rank_f2,
                    rank_q)
from .graph import MultiGraph

ODD_CHECK_BUDGET = 300_000  # subsets; above this the lift check is deferred


@dataclass(frozen=True)
class BinaryMatroid:
    """F2-represented matroid with ground-set labels and an optional integer
    lift whose mod-2 reduction spans the same row space as rep."""

    labels: tuple[str, ...]
    rep: BitMatrix
    lift: IntMatrix | None = None
    provenance: tuple = ("unknown",)

    def __post_init__(self):
        d, n = self.rep.rows, self.rep.cols
        if len(self.labels) != n:
            raise PreconditionError("label count must match columns")
        if rank_f2(self.rep) != d:
            raise RankDeficientError("representation must have full row rank")
        if self.lift is not None:
            if (self.lift.rows, self.lift.cols) != (d, n):
                raise PreconditionError("lift shape mismatch")
            if self.lift.mod2().rref().bits != self.rep.rref().bits:
                raise PreconditionError("lift mod 2 must span the same row space")

    @property
    def rank(self) -> int:
        return self.rep.rows

    @property
    def size(self) -> int:
        return self.rep.cols

    @cached_property
    def columns(self) -> list[int]:
        """Columns as F2 bitmasks (bit i = row i)."""
        return self.rep.col_masks()

    def validate_lift_regularity(self) -> None:
        """Run the odd-determinant test on the lift (cost grows as C(n, d))."""
        if self.lift is None:
            raise PreconditionError("matroid carries no lift")
        verdict = odd_determinant_check(self.lift)
        if not verdict.ok:
            raise PreconditionError(
                f"lift violates the odd-determinant condition at columns "
                f"{verdict.violation} (det {verdict.determinant})")

    def is_independent(self, subset: Sequence[int]) -> bool:
        cols = self.columns
        return f2_rank_words([cols[i] for i in subset]) == len(subset)

    def subset_rank(self, subset: Sequence[int]) -> int:
        cols = self.columns
        return f2_rank_words([cols[i] for i in subset])

    def is_basis(self, subset: Sequence[int]) -> bool:
        return len(subset) == self.rank and self.is_independent(subset)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise PreconditionError(f"no ground element labeled {label!r}") from None


def _edge_labels(g: MultiGraph) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(g.m))


def graphic(g: MultiGraph, root: int = 0) -> BinaryMatroid:
    """Graphic matroid with its signed-incidence lift (root row deleted);
    columns are indexed by edges, loops becoming zero columns."""
    if not g.is_connected():
        raise DisconnectedGraphError("graphic() requires a connected graph")
    if not 0 <= root < g.n:
        raise PreconditionError("root out of range")
    rows = []
    for v in range(g.n):
        if v == root:
            continue
        row = []
        for u, w in g.edges:
            if u == w:
                row.append(0)
            elif u == v:
                row.append(-1)
            elif w == v:
                row.append(1)
            else:
                row.append(0)
        rows.append(row)
    lift = IntMatrix.from_rows(rows) if rows else IntMatrix(0, g.m, ())
    return BinaryMatroid(_edge_labels(g), lift.mod2(), lift, ("graphic", g, root))


def cographic(g: MultiGraph) -> BinaryMatroid:
    """Cographic matroid: rank betti(g); column e is the class of e* in the
    first cohomology, written in the basis dual to the fundamental cycles of
    a spanning tree. Circuits are the minimal edge cuts of g."""
    if not g.is_connected():
        raise DisconnectedGraphError("cographic() requires a connected graph")
    tree: set[int] = set()
    parent: dict[int, tuple[int, int]] = {}
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    for x in queue:
        for e in g.incidence[x]:
            y = g.other_end(e, x)
            if not seen[y]:
                seen[y] = True
                tree.add(e)
                parent[y] = (x, e)
                queue.append(y)
    non_tree = [e for e in range(g.m) if e not in tree]
    rows = []
    for f in non_tree:
        u, v = g.edges[f]
        coeff = [0] * g.m
        coeff[f] = 1
        if u != v:
            # Tree path v -> u, oriented so the cycle is f followed by it.
            pu, pv = _tree_path(g, parent, u), _tree_path(g, parent, v)
            for e, s in _path_difference(pu, pv):
                coeff[e] = s
        rows.append(coeff)
    lift = IntMatrix.from_rows(rows) if rows else IntMatrix(0, g.m, ())
    mat = BinaryMatroid(_edge_labels(g), lift.mod2(), lift, ("cographic", g))
    return mat


def _tree_path(g: MultiGraph, parent: dict[int, tuple[int, int]], v: int):
    """Edges (with orientation signs) from the tree root down to v."""
    path = []
    while v in parent:
        x, e = parent[v]
        u, w = g.edges[e]
        path.append((e, 1 if w == v else -1))
        v = x
    path.reverse()
    return path


def _path_difference(pu, pv):
    """Signed edges of the tree path u -> v given root paths to u and v."""
    i = 0
    while i < len(pu) and i < len(pv) and pu[i] == pv[i]:
        i += 1
    steps = [(e, -s) for e, s in reversed(pu[i:])]
    steps += [(e, s) for e, s in pv[i:]]
    return steps


R10_ROWS = (
    (1, 0, 0, 0, 0, -1, 1, 0, 0, 1),
    (0, 1, 0, 0, 0, 1, -1, 1, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, -1, 1, 0),
    (0, 0, 0, 1, 0, 0, 0, 1, -1, 1),
    (0, 0, 0, 0, 1, 1, 0, 0, 1, -1),
)


def r10() -> BinaryMatroid:
    """The sporadic ten-element matroid, via its standard 5x10 matrix."""
    lift = IntMatrix.from_rows([list(r) for r in R10_ROWS])
    labels = tuple(f"e{i}" for i in range(1, 6)) + tuple(f"f{i}" for i in range(1, 6))
    return BinaryMatroid(labels, lift.mod2(), lift, ("r10",))


def dual(m: BinaryMatroid) -> BinaryMatroid:
    """Dual matroid: bases are complements of bases. The representation is a
    basis of the orthogonal complement; the lift is the transpose of the
    integer kernel lattice basis, which inherits the odd-determinant
    property from the primal lift."""
    n, d = m.size, m.rank
    if m.lift is not None:
        klb = kernel_lattice_basis(m.lift)
        lift = klb.transpose()
        rep = lift.mod2()
        if rank_f2(rep) != n - d:
            raise RankDeficientError("kernel lattice reduced rank mod 2")
        return BinaryMatroid(m.labels, rep, lift, ("dual", m.provenance))
    # F2-only: kernel of rep via RREF bookkeeping.
    rref = m.rep.rref()
    pivots = []
    for w in rref.bits:
        pivots.append((w & -w).bit_length() - 1)
    free = [j for j in range(n) if j not in pivots]
    rows = []
    for j in free:
        row = [0] * n
        row[j] = 1
        for r, p in enumerate(pivots):
            if (rref.bits[r] >> j) & 1:
                row[p] = 1
        rows.append(row)
    rep = BitMatrix.from_rows(rows) if rows else BitMatrix(0, n, ())
    return BinaryMatroid(m.labels, rep, None, ("dual", m.provenance))


def circuits(m: BinaryMatroid) -> list[tuple[int, ...]]:
    """Minimal dependent subsets = minimal supports of nonzero F2 kernel
    vectors of the representation."""
    check_guard(m.size, 24, "circuits enumeration")
    n, d = m.size, m.rank
    check_guard(1 << (n - d), 1 << 22, "circuits kernel enumeration")
    kernel = _kernel_basis_masks(m.rep)
    members: list[int] = []
    vecs = [0]
    for b in kernel:
        vecs += [v ^ b for v in vecs]
    vecs = [v for v in vecs if v]
    vecs.sort(key=_popcount)
    minimal: list[int] = []
    for v in vecs:
        if not any(u & v == u for u in minimal):
            minimal.append(v)
    out = [tuple(_mask_bits(v)) for v in minimal]
    return sorted(out)


def _kernel_basis_masks(rep: BitMatrix) -> list[int]:
    rref = rep.rref()
    n = rep.cols
    pivots = [(w & -w).bit_length() - 1 for w in rref.bits]
    free = [j for j in range(n) if j not in pivots]
    out = []
    for j in free:
        mask = 1 << j
        for r, p in enumerate(pivots):
            if (rref.bits[r] >> j) & 1:
                mask |= 1 << p
        out.append(mask)
    return out


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _mask_bits(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def cocircuits(m: BinaryMatroid) -> list[tuple[int, ...]]:
    return circuits(dual(m))


def hyperplanes(m: BinaryMatroid) -> list[tuple[int, ...]]:
    """Complements of the dual circuits."""
    full = set(range(m.size))
    out = [tuple(sorted(full - set(c))) for c in cocircuits(m)]
    return sorted(out)


def _quotient_rows(killed: list[int], dim: int) -> BitMatrix:
    """Rows spanning the annihilator of span(killed) in (F2^dim)*: a matrix Q
    with Q·x = Q·y iff x - y in span(killed)."""
    rows = [k for k in killed]
    # Kernel of the matrix whose rows are the killed vectors.
    mat = BitMatrix(len(rows), dim, tuple(rows))
    masks = _kernel_basis_masks(mat)
    return BitMatrix(len(masks), dim, tuple(masks))


def _apply_f2(q: BitMatrix, col: int) -> int:
    out = 0
    for i, row in enumerate(q.bits):
        if _popcount(row & col) & 1:
            out |= 1 << i
    return out


def _prefixed_labels(m1: BinaryMatroid, m2: BinaryMatroid,
                     drop1: set[int], drop2: set[int]) -> tuple[str, ...]:
    lab = [f"a.{m1.labels[i]}" for i in range(m1.size) if i not in drop1]
    lab += [f"b.{m2.labels[i]}" for i in range(m2.size) if i not in drop2]
    return tuple(lab)


def sum1(m1: BinaryMatroid, m2: BinaryMatroid) -> BinaryMatroid:
    """Direct sum: block-diagonal representation."""
    d1, d2 = m1.rank, m2.rank
    rows = [m1.rep.bits[i] for i in range(d1)]
    rows += [m2.rep.bits[i] << m1.size for i in range(d2)]
    rep = BitMatrix(d1 + d2, m1.size + m2.size, tuple(rows))
    lift = None
    if m1.lift is not None and m2.lift is not None:
        lrows = []
        for i in range(d1):
            lrows.append(list(m1.lift.row(i)) + [0] * m2.size)
        for i in range(d2):
            lrows.append([0] * m1.size + list(m2.lift.row(i)))
        lift = IntMatrix.from_rows(lrows)
        rep = lift.mod2()
    labels = _prefixed_labels(m1, m2, set(), set())
    return BinaryMatroid(labels, rep, lift, ("sum1", m1, m2))


def sum2(m1: BinaryMatroid, e1: str, m2: BinaryMatroid, e2: str) -> BinaryMatroid:
    """2-sum at elements e1, e2: quotient of the direct sum by the span of
    v1 + v2, with both glued columns removed."""
    i1, i2 = m1.label_index(e1), m2.label_index(e2)
    if m1.size < 2 or m2.size < 2:
        raise PreconditionError("2-sum needs at least two elements per side")
    d1, d2 = m1.rank, m2.rank
    v1, v2 = m1.columns[i1], m2.columns[i2]
    if v1 == 0 or v2 == 0:
        raise PreconditionError("2-sum requires nonzero glued columns")
    lift = None
    rep = None
    if m1.lift is not None and m2.lift is not None:
        w1 = m1.lift.col(i1)
        w2 = m2.lift.col(i2)
        glue = IntMatrix.from_rows([list(w1) + [-x for x in w2]])
        basis = kernel_lattice_basis(glue)  # (d1+d2) x (d1+d2-1)
        bt = basis.transpose()
        cols = []
        for j in range(m1.size):
            if j != i1:
                cols.append(list(m1.lift.col(j)) + [0] * d2)
        for j in range(m2.size):
            if j != i2:
                cols.append([0] * d1 + list(m2.lift.col(j)))
        big = IntMatrix.from_rows(cols).transpose()
        lift = bt.mul(big)
        rep = lift.mod2()
    else:
        q = _quotient_rows([v1 | (v2 << d1)], d1 + d2)
        cols = []
        for j in range(m1.size):
            if j != i1:
                cols.append(_apply_f2(q, m1.columns[j]))
        for j in range(m2.size):
            if j != i2:
                cols.append(_apply_f2(q, m2.columns[j] << d1))
        rep = BitMatrix(len(cols), q.rows, tuple(cols)).transpose()
    labels = _prefixed_labels(m1, m2, {i1}, {i2})
    return BinaryMatroid(labels, rep, lift, ("sum2", m1, i1, m2, i2))


def _triple_indices(m: BinaryMatroid, triple: Sequence[str]) -> list[int]:
    idx = [m.label_index(t) for t in triple]
    if len(set(idx)) != 3:
        raise PreconditionError("3-sum needs three distinct elements")
    cols = [m.columns[i] for i in idx]
    if any(c == 0 for c in cols):
        raise PreconditionError("3-sum triple must be nonzero")
    if cols[0] ^ cols[1] ^ cols[2]:
        raise PreconditionError("3-sum triple must sum to zero over F2")
    if f2_rank_words(cols) != 2:
        raise PreconditionError("3-sum triple must span a 2-dimensional space")
    return idx


def sum3(m1: BinaryMatroid, triple1: Sequence[str],
         m2: BinaryMatroid, triple2: Sequence[str]) -> BinaryMatroid:
    """3-sum along two element triples each spanning a 2-space and summing to
    zero; the identification pairs triple1[j] with triple2[j]. All six glued
    elements are removed."""
    if m1.size < 7 or m2.size < 7:
        raise PreconditionError("3-sum needs at least seven elements per side")
    idx1 = _triple_indices(m1, triple1)
    idx2 = _triple_indices(m2, triple2)
    d1, d2 = m1.rank, m2.rank
    lift = None
    rep = None
    if m1.lift is not None and m2.lift is not None:
        s1 = _signed_zero_sum([m1.lift.col(i) for i in idx1])
        s2 = _signed_zero_sum([m2.lift.col(i) for i in idx2])
        if s1 is not None and s2 is not None:
            rows = []
            for j in range(3):
                w1 = [s1[j] * x for x in m1.lift.col(idx1[j])]
                w2 = [s2[j] * x for x in m2.lift.col(idx2[j])]
                rows.append(w1 + [-x for x in w2])
            glue = IntMatrix.from_rows(rows)
            basis = kernel_lattice_basis(glue)
            if basis.cols == d1 + d2 - 2:
                bt = basis.transpose()
                cols = []
                for j in range(m1.size):
                    if j not in idx1:
                        cols.append(list(m1.lift.col(j)) + [0] * d2)
                for j in range(m2.size):
                    if j not in idx2:
                        cols.append([0] * d1 + list(m2.lift.col(j)))
                big = IntMatrix.from_rows(cols).transpose()
                lift = bt.mul(big)
                rep = lift.mod2()
    if rep is None:
        lift = None
        killed = [m1.columns[idx1[j]] | (m2.columns[idx2[j]] << d1) for j in range(2)]
        q = _quotient_rows(killed, d1 + d2)
        cols = []
        for j in range(m1.size):
            if j not in idx1:
                cols.append(_apply_f2(q, m1.columns[j]))
        for j in range(m2.size):
            if j not in idx2:
                cols.append(_apply_f2(q, m2.columns[j] << d1))
        rep = BitMatrix(len(cols), q.rows, tuple(cols)).transpose()
    labels = _prefixed_labels(m1, m2, set(idx1), set(idx2))
    return BinaryMatroid(labels, rep, lift, ("sum3", m1, tuple(idx1), m2, tuple(idx2)))


def _signed_zero_sum(cols: list[tuple[int, ...]]) -> tuple[int, int, int] | None:
    """Signs (s1,s2,s3) in {+-1} with s1*c1 + s2*c2 + s3*c3 = 0, if any;
    flipping a column's sign is a legal odd rescaling."""
    for s in ((1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)):
        if all(s[0] * a + s[1] * b + s[2] * c == 0
               for a, b, c in zip(*cols)):
            return s
    return None


@dataclass(frozen=True)
class WeightedRep:
    """Integer weight matrix with normalized rational multiplicities; the
    torus-representation surrogate."""

    h: IntMatrix
    mult: tuple[Rat, ...]

    def __post_init__(self):
        if len(self.mult) != self.h.cols:
            raise PreconditionError("one multiplicity per weight column")
        mult = tuple(Fraction(x) for x in self.mult)
        if any(x < 0 for x in mult):
            raise PreconditionError("multiplicities must be nonnegative")
        total = sum(mult, Fraction(0))
        if total == 0:
            raise PreconditionError("total multiplicity must be positive")
        object.__setattr__(self, "mult", tuple(x / total for x in mult))
        if rank_q(self.h) != self.h.rows:
            raise RankDeficientError("weight columns must span (rank d)")
        if comb(self.h.cols, self.h.rows) <= ODD_CHECK_BUDGET:
            verdict = odd_determinant_check(self.h)
            if not verdict.ok:
                raise PreconditionError(
                    f"weight matrix violates the odd-determinant condition at "
                    f"{verdict.violation} (det {verdict.determinant})")

    @staticmethod
    def uniform(h: IntMatrix) -> "WeightedRep":
        return WeightedRep(h, tuple(Fraction(1, h.cols) for _ in range(h.cols)))


def ksum_rep(r1: WeightedRep, r2: WeightedRep, k: int,
             selections: tuple = (), keep_glued: bool = False) -> WeightedRep:
    """k-sum of weighted representations over the integer lattice
    Gamma = intersection of ker(w_1j - w_2j); surviving weights restrict to a
    Hermite-canonical basis of Gamma.

    selections: () for k=1; (i1, i2) column indices for k=2; two index
    triples ((a,b,c),(a',b',c')) for k=3, paired in order, each triple
    summing to zero. keep_glued retains the glued weights (restricted, equal
    in pairs) with summed multiplicities instead of removing them.
    """
    d1, d2 = r1.h.rows, r2.h.rows
    if k == 1:
        drop1: list[int] = []
        drop2: list[int] = []
        glue = IntMatrix(0, d1 + d2, ())
    elif k == 2:
        i1, i2 = selections
        drop1, drop2 = [i1], [i2]
        w1, w2 = r1.h.col(i1), r2.h.col(i2)
        if all(x == 0 for x in w1) or all(x == 0 for x in w2):
            raise PreconditionError("2-sum weights must be nonzero")
        glue = IntMatrix.from_rows([list(w1) + [-x for x in w2]])
    elif k == 3:
        t1, t2 = selections
        drop1, drop2 = list(t1), list(t2)
        for rep, tri in ((r1, t1), (r2, t2)):
            cols = [rep.h.col(i) for i in tri]
            if any(all(x == 0 for x in c) for c in cols):
                raise PreconditionError("3-sum weights must be nonzero")
            if any(sum(v) != 0 for v in zip(*cols)):
                raise PreconditionError("3-sum triples must sum to zero")
        rows = []
        for j in range(3):
            w1, w2 = r1.h.col(t1[j]), r2.h.col(t2[j])
            rows.append(list(w1) + [-x for x in w2])
        glue = IntMatrix.from_rows(rows)
    else:
        raise PreconditionError("k must be 1, 2, or 3")

    basis = kernel_lattice_basis(glue)
    bt = basis.transpose()
    cols = []
    mults: list[Rat] = []
    for j in range(r1.h.cols):
        if j not in drop1:
            cols.append(list(r1.h.col(j)) + [0] * d2)
            mults.append(r1.mult[j])
    for j in range(r2.h.cols):
        if j not in drop2:
            cols.append([0] * d1 + list(r2.h.col(j)))
            mults.append(r2.mult[j])
    if keep_glued and k > 1:
        pairs = [(drop1[j], drop2[j]) for j in range(len(drop1))]
        for j1, j2 in pairs:
            cols.append(list(r1.h.col(j1)) + [0] * d2)
            mults.append(r1.mult[j1] + r2.mult[j2])
    big = IntMatrix.from_rows(cols).transpose()
    h = bt.mul(big)
    return WeightedRep(h, tuple(mults))


@dataclass(frozen=True)
class Pullback:
    a: IntMatrix


@dataclass(frozen=True)
class Scale:
    factors: tuple[int, ...]


@dataclass(frozen=True)
class Pushforward:
    a: IntMatrix


@dataclass(frozen=True)
class Divide:
    divisors: tuple[int, ...]


def odd_transform(r: WeightedRep, step) -> WeightedRep:
    """Apply one step of the odd-equivalence moves: pull weights back along
    an odd-determinant lattice map, rescale columns by odd integers, push
    forward along an odd-determinant map (must stay integral), or divide
    columns by odd integers exactly."""
    h = r.h
    if isinstance(step, Pullback):
        a = step.a
        if a.rows != a.cols or a.rows != h.rows or det(a) % 2 == 0:
            raise PreconditionError("pullback needs a square odd-determinant map")
        new = a.transpose().mul(h)
    elif isinstance(step, Scale):
        if len(step.factors) != h.cols or any(f % 2 == 0 for f in step.factors):
            raise PreconditionError("scale factors must be odd, one per column")
        new = IntMatrix.from_rows(
            [[h.at(i, j) * step.factors[j] for j in range(h.cols)]
             for i in range(h.rows)])
    elif isinstance(step, Pushforward):
        a = step.a
        dta = det(a) if a.rows == a.cols == h.rows else 0
        if dta == 0 or dta % 2 == 0:
            raise PreconditionError("pushforward needs a square odd-determinant map")
        at = a.transpose()
        adj_rows = _inverse_times_det(at)
        raw = adj_rows.mul(h)
        if any(x % dta for x in raw.entries):
            raise PreconditionError("pushforward does not preserve integrality")
        new = IntMatrix(raw.rows, raw.cols,
                        tuple(x // dta for x in raw.entries))
    elif isinstance(step, Divide):
        if len(step.divisors) != h.cols or any(f % 2 == 0 for f in step.divisors):
            raise PreconditionError("divisors must be odd, one per column")
        entries = []
        for i in range(h.rows):
            for j in range(h.cols):
                x = h.at(i, j)
                f = step.divisors[j]
                if x % f:
                    raise PreconditionError("inexact division of a weight column")
                entries.append(x // f)
        new = IntMatrix(h.rows, h.cols, tuple(entries))
    else:
        raise PreconditionError(f"unknown transform step {step!r}")
    return WeightedRep(new, r.mult)


def _inverse_times_det(a: IntMatrix) -> IntMatrix:
    """Adjugate of a (integer matrix with adj(a)·a = det(a)·I)."""
    n = a.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            sub = [[a.at(r, c) for c in range(n) if c != i]
                   for r in range(n) if r != j]
            sign = -1 if (i + j) % 2 else 1
            row.append(sign * (det(IntMatrix.from_rows(sub)) if n > 1 else 1))
        out.append(row)
    return IntMatrix.from_rows(out)


def simplify(m: BinaryMatroid) -> tuple[BinaryMatroid, list[int | None]]:
    """Drop zero columns and merge duplicate columns (equal over F2; when a
    lift is present the merged columns must be projectively equal over Q).
    Returns the simplification and the old-index -> new-index mapping."""
    cols = m.columns
    mapping: list[int | None] = [None] * m.size
    keep: list[int] = []
    first_with: dict[int, int] = {}
    for j, c in enumerate(cols):
        if c == 0:
            continue
        if c in first_with:
            k = first_with[c]
            mapping[j] = mapping[k]
            if m.lift is not None and not _parallel_over_q(m.lift, k, j):
                raise PreconditionError(
                    f"columns {k} and {j} equal over F2 but not parallel over Q")
            continue
        first_with[c] = j
        mapping[j] = len(keep)
        keep.append(j)
    labels = tuple(m.labels[j] for j in keep)
    if m.lift is not None:
        lift = m.lift.select_cols(keep)
        rep = lift.mod2()
    else:
        lift = None
        rep = m.rep.transpose()
        rep = BitMatrix(len(keep), m.rank,
                        tuple(rep.bits[j] for j in keep)).transpose()
    return BinaryMatroid(labels, rep, lift, ("simplify", m.provenance)), mapping


def _parallel_over_q(lift: IntMatrix, j1: int, j2: int) -> bool:
    c1, c2 = lift.col(j1), lift.col(j2)
    # Cross-ratio test: c1 and c2 parallel iff all 2x2 minors vanish.
    for i in range(len(c1)):
        for k in range(i + 1, len(c1)):
            if c1[i] * c2[k] - c1[k] * c2[i]:
                return False
    return True


def isomorphic(m1: BinaryMatroid, m2: BinaryMatroid) -> dict[int, int] | None:
    """Ground-set bijection carrying independent sets onto independent sets,
    or None. Both matroids must be simple; guarded at 12 elements."""
    for m in (m1, m2):
        if any(c == 0 for c in m.columns) or len(set(m.columns)) != m.size:
            raise PreconditionError("isomorphic() requires simple matroids")
    check_guard(max(m1.size, m2.size), 12, "matroid isomorphism")
    if m1.size != m2.size or m1.rank != m2.rank:
        return None
    c1 = [frozenset(c) for c in circuits(m1)]
    c2 = [frozenset(c) for c in circuits(m2)]
    if sorted(len(c) for c in c1) != sorted(len(c) for c in c2):
        return None
    by_elem1 = _circuit_profile(c1, m1.size)
    by_elem2 = _circuit_profile(c2, m2.size)
    if sorted(by_elem1) != sorted(by_elem2):
        return None
    set2 = set(c2)
    n = m1.size
    image: list[int] = [-1] * n
    used = [False] * n

    def ok_so_far(v: int) -> bool:
        assigned = set(range(v + 1))
        for c in c1:
            if all(x <= v for x in c):
                if frozenset(image[x] for x in c) not in set2:
                    return False
        return True

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or by_elem1[v] != by_elem2[w]:
                continue
            image[v] = w
            used[w] = True
            if ok_so_far(v) and extend(v + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    if extend(0):
        return {v: image[v] for v in range(n)}
    return None


def _circuit_profile(cs: list[frozenset[int]], n: int) -> list[tuple]:
    prof: list[list[int]] = [[] for _ in range(n)]
    for c in cs:
        for x in c:
            prof[x].append(len(c))
    return [tuple(sorted(p)) for p in prof]
