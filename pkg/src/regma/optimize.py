"""Exact rational linear programming and the central computations: graph
systoles, matroid cogirths, weighted-representation minima, and the
recursive bound calculators.

The LP solver is a dense two-phase tableau simplex over Fraction with
Bland's rule; systole and cogirth are solved by cutting planes, with the
minimum-weight-cycle search (resp. enumeration of the nonzero F2 dual
vectors) as separation oracle. All optima come with independently checkable
primal and dual certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AcyclicGraphError, PreconditionError, check_guard
from .exact import Rat
from .graph import (Cycle, EdgeWeights, MultiGraph, check_weights, girth,
                    min_cycles_per_edge, min_weight_cycle)
from .matroid import BinaryMatroid, WeightedRep

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LPSolution:
    """status is 'optimal', 'infeasible', or 'unbounded'; at optimal the
    primal/dual objective values agree exactly (strong duality)."""

    status: str
    primal: tuple[Rat, ...] = ()
    dual_eq: tuple[Rat, ...] = ()
    dual_ub: tuple[Rat, ...] = ()
    value: Rat = ZERO


def lp_max(objective: Sequence[Rat],
           eq: Sequence[tuple[Sequence[Rat], Rat]] = (),
           ub: Sequence[tuple[Sequence[Rat], Rat]] = ()) -> LPSolution:
    """Maximize objective·x subject to eq rows (a·x = b), ub rows (a·x <= b),
    and x >= 0, by two-phase simplex with Bland's anti-cycling rule."""
    n = len(objective)
    c = [Fraction(x) for x in objective]
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for a, b in eq:
        if len(a) != n:
            raise PreconditionError("equality row length mismatch")
        rows.append([Fraction(x) for x in a])
        rhs.append(Fraction(b))
        kinds.append("eq")
    for a, b in ub:
        if len(a) != n:
            raise PreconditionError("inequality row length mismatch")
        rows.append([Fraction(x) for x in a])
        rhs.append(Fraction(b))
        kinds.append("ub")
    m = len(rows)

    # Columns: n structural, one slack per ub row, then one artificial per
    # row that needs one (eq rows, and ub rows whose rhs was negated; a
    # nonnegative ub row starts with its slack basic). The identity column
    # of each row (slack or artificial) also yields its dual value.
    nslack = sum(1 for k in kinds if k == "ub")
    art_rows = [i for i in range(m)
                if kinds[i] == "eq" or rhs[i] < 0]
    art0 = n + nslack
    width = art0 + len(art_rows)
    tab = [[ZERO] * (width + 1) for _ in range(m)]
    basis = [-1] * m
    identity_col = [-1] * m
    si = 0
    ai = 0
    for i in range(m):
        sign = -1 if rhs[i] < 0 else 1
        for j in range(n):
            tab[i][j] = sign * rows[i][j]
        if kinds[i] == "ub":
            tab[i][n + si] = Fraction(sign)
            if sign > 0:
                basis[i] = n + si
                identity_col[i] = n + si
            si += 1
        if i in art_rows:
            col = art0 + ai
            tab[i][col] = ONE
            basis[i] = col
            identity_col[i] = col
            ai += 1
        tab[i][width] = sign * rhs[i]
    in_basis = set(basis)

    def pivot(row: int, col: int) -> None:
        pr = tab[row]
        inv = ONE / pr[col]
        for j in range(width + 1):
            if pr[j]:
                pr[j] *= inv
        for i in range(m):
            if i != row and tab[i][col]:
                f = tab[i][col]
                ri = tab[i]
                for j in range(width + 1):
                    if pr[j]:
                        ri[j] -= f * pr[j]
        in_basis.discard(basis[row])
        basis[row] = col
        in_basis.add(col)

    class _Unbounded(Exception):
        pass

    def reduced_cost(costs: list[Fraction], j: int) -> Fraction:
        z = ZERO
        for i in range(m):
            tij = tab[i][j]
            if tij:
                cb = costs[basis[i]]
                if cb:
                    z += cb * tij
        return costs[j] - z

    def run_phase(costs: list[Fraction], limit: int) -> None:
        while True:
            # Bland's rule: first improving column, smallest-index leaving
            # basis variable on ratio ties.
            enter = None
            for j in range(limit):
                if j in in_basis:
                    continue
                if reduced_cost(costs, j) > 0:
                    enter = j
                    break
            if enter is None:
                return
            leave = None
            best: Fraction | None = None
            for i in range(m):
                if tab[i][enter] > 0:
                    ratio = tab[i][width] / tab[i][enter]
                    if best is None or ratio < best or (
                            ratio == best and basis[i] < basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                raise _Unbounded()
            pivot(leave, enter)

    if art_rows:
        phase1 = [ZERO] * width
        for j in range(art0, width):
            phase1[j] = Fraction(-1)
        run_phase(phase1, art0)
        if any(tab[i][width] != 0 and basis[i] >= art0 for i in range(m)):
            return LPSolution("infeasible")
        for i in range(m):
            if basis[i] >= art0:
                col = next((j for j in range(art0) if tab[i][j] != 0), None)
                if col is not None:
                    pivot(i, col)

    costs2 = [ZERO] * width
    for j in range(n):
        costs2[j] = c[j]
    try:
        run_phase(costs2, art0)
    except _Unbounded:
        return LPSolution("unbounded")

    x = [ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][width]
    value = sum((c[j] * x[j] for j in range(n)), ZERO)
    # Duals: z-value over each row's original identity column, corrected for
    # the sign flip applied at setup (for slack columns z = -reduced cost).
    duals = [ZERO] * m
    for r in range(m):
        col = identity_col[r]
        z = ZERO
        for i in range(m):
            tic = tab[i][col]
            if tic:
                cb = costs2[basis[i]]
                if cb:
                    z += cb * tic
        sign = -1 if rhs[r] < 0 else 1
        duals[r] = sign * z
    dual_eq = tuple(duals[i] for i in range(m) if kinds[i] == "eq")
    dual_ub = tuple(duals[i] for i in range(m) if kinds[i] == "ub")
    return LPSolution("optimal", tuple(x), dual_eq, dual_ub, value)


@dataclass(frozen=True)
class SystoleResult:
    """Exact systole with optimal weights and both certificates: the weights
    realize value as their minimum cycle weight, and the dual distribution
    over cycles has maximum edge load equal to value."""

    value: Rat
    weights: EdgeWeights
    tight_cycles: tuple[Cycle, ...]
    dual_dist: tuple[tuple[Cycle, Rat], ...]


def _seed_cycles(g: MultiGraph) -> list[Cycle]:
    uniform = [ONE] * g.m
    seeds = {}
    c, _ = min_weight_cycle(g, uniform)
    seeds[c.edge_ids] = c
    for e in range(g.m):
        w = [ONE] * g.m
        w[e] = ZERO
        try:
            c, v = min_weight_cycle(g, w)
        except AcyclicGraphError:  # pragma: no cover - guarded by caller
            continue
        if e in c.edge_ids:
            seeds.setdefault(c.edge_ids, c)
    return list(seeds.values())


def systole(g: MultiGraph) -> SystoleResult:
    """Exact sys(G) = max over probability edge weights of the minimum cycle
    weight, via cutting planes with min_weight_cycle as separation oracle
    (all violated per-edge minimum cycles join the active set each round)."""
    if girth(g) == float("inf"):
        raise AcyclicGraphError("systole of a forest")
    m = g.m
    active: list[Cycle] = sorted(_seed_cycles(g), key=lambda c: c.sorted_ids())
    while True:
        sol = _systole_lp(m, active)
        lam = sol.primal[:m]
        t = sol.value
        per_edge = min_cycles_per_edge(g, lam)
        got = min(v for v, _ in per_edge.values())
        if got == t:
            break
        known = {c.edge_ids for c in active}
        for value, ids in sorted(set(per_edge.values())):
            if value < t and frozenset(ids) not in known:
                active.append(Cycle(frozenset(ids)))
                known.add(frozenset(ids))
    tight = tuple(c for c in active if c.weight(lam) == t)
    dual = [(c, y) for c, y in zip(active, sol.dual_ub) if y]
    res = SystoleResult(t, tuple(lam), tight, _normalize_dual(dual))
    assert verify_systole(g, res)
    return res


def _systole_lp(m: int, cycles: Sequence[Cycle]) -> LPSolution:
    # Variables: lambda_0..lambda_{m-1}, t. Maximize t.
    obj = [ZERO] * m + [ONE]
    eq = [([ONE] * m + [ZERO], ONE)]
    ub = []
    for c in cycles:
        row = [ZERO] * (m + 1)
        for e in c.edge_ids:
            row[e] = Fraction(-1)
        row[m] = ONE
        ub.append((row, ZERO))  # t - lambda(C) <= 0
    sol = lp_max(obj, eq, ub)
    assert sol.status == "optimal"
    return sol


def _normalize_dual(pairs: list[tuple[Cycle, Rat]]) -> tuple[tuple[Cycle, Rat], ...]:
    total = sum((y for _, y in pairs), ZERO)
    assert total > 0
    return tuple((c, y / total) for c, y in sorted(pairs, key=lambda p: p[0].sorted_ids()))


def verify_systole(g: MultiGraph, res: SystoleResult) -> bool:
    """Check both optimality directions from the certificates alone."""
    w = check_weights(g, res.weights)
    if sum(w, ZERO) != 1:
        return False
    _, got = min_weight_cycle(g, w)
    if got != res.value:
        return False
    total = ZERO
    load = [ZERO] * g.m
    for c, y in res.dual_dist:
        if y < 0:
            return False
        Cycle.from_edges(g, c.edge_ids)
        total += y
        for e in c.edge_ids:
            load[e] += y
    if total != 1 or max(load) != res.value:
        return False
    return all(c.weight(w) == res.value for c in res.tight_cycles)


def systole_weighted(g: MultiGraph, w: Sequence[Rat]) -> tuple[Rat, Cycle]:
    """sys(G, w) = min cycle weight / total weight, with witness cycle."""
    w = check_weights(g, w)
    total = sum(w, ZERO)
    if total == 0:
        raise PreconditionError("total weight must be positive")
    if girth(g) == float("inf"):
        raise AcyclicGraphError("weighted systole of a forest")
    c, v = min_weight_cycle(g, w)
    return v / total, c


@dataclass(frozen=True)
class CogirthResult:
    """max over probability weights of the minimum of f_lambda over nonzero
    F2 dual vectors; witness attains the minimum at the optimal weights."""

    value: Rat
    weights: tuple[Rat, ...]
    witness: int


def _f_value(v: int, cols: Sequence[int], lam: Sequence[Rat]) -> Rat:
    out = ZERO
    for i, c in enumerate(cols):
        if bin(v & c).count("1") & 1:
            out += lam[i]
    return out


def _min_dual_vector(cols: Sequence[int], lam: Sequence[Rat], d: int) -> tuple[Rat, int]:
    best = None
    best_v = None
    for v in range(1, 1 << d):
        val = _f_value(v, cols, lam)
        if best is None or val < best:
            best, best_v = val, v
    return best, best_v


def cogirth(m: BinaryMatroid) -> CogirthResult:
    """c(M) = max_lambda min over nonzero dual vectors v of
    f_lambda(v) = sum of lambda_i over columns not in ker v; the minimum over
    dual vectors equals the minimum over matroid hyperplane complements."""
    d = m.rank
    check_guard((1 << d) - 1, (1 << 12) - 1, "cogirth dual-vector enumeration")
    if d == 0:
        raise PreconditionError("cogirth of a rank-0 matroid")
    cols = m.columns
    n = m.size
    active: list[int] = [1 << i for i in range(d)]
    while True:
        sol = _cogirth_lp(cols, active)
        lam = sol.primal[:n]
        t = sol.value
        got, v = _min_dual_vector(cols, lam, d)
        if got == t:
            break
        active.append(v)
    lam = tuple(lam)
    value, witness = _min_dual_vector(cols, lam, d)
    return CogirthResult(value, lam, witness)


def verify_cogirth(m: BinaryMatroid, res: CogirthResult) -> bool:
    cols = m.columns
    d = m.rank
    if sum(res.weights, ZERO) != 1 or any(x < 0 for x in res.weights):
        return False
    if not 0 < res.witness < (1 << d):
        return False
    if _f_value(res.witness, cols, res.weights) != res.value:
        return False
    got, _ = _min_dual_vector(cols, res.weights, d)
    return got == res.value


def _cogirth_lp(cols: Sequence[int], active: Sequence[int]) -> LPSolution:
    n = len(cols)
    obj = [ZERO] * n + [ONE]
    eq = [([ONE] * n + [ZERO], ONE)]
    ub = []
    for v in active:
        row = [ZERO] * (n + 1)
        for i, c in enumerate(cols):
            if bin(v & c).count("1") & 1:
                row[i] = Fraction(-1)
        row[n] = ONE
        ub.append((row, ZERO))
    sol = lp_max(obj, eq, ub)
    assert sol.status == "optimal"
    return sol


def c_of_rep(r: WeightedRep) -> tuple[Rat, int]:
    """min over nonzero F2 dual vectors of f_mult; by the hyperplane
    translation this equals the rational minimization with the same weight
    matrix."""
    d = r.h.rows
    check_guard((1 << d) - 1, (1 << 12) - 1, "c_of_rep dual-vector enumeration")
    cols = r.h.mod2().col_masks()
    return _min_dual_vector(cols, r.mult, d)


STable = dict[int, Rat]


def bound_small_cycle(b: int, g: int, h: int, s_table: STable) -> Rat:
    """Reciprocal systole bound h/g + s(b-h)^{-1} from removing the h
    heaviest edges of a g-cycle in a 3-edge-connected graph."""
    if not 1 <= h <= min(g, b - 1):
        raise PreconditionError("need 1 <= h <= min(g, b-1)")
    if b - h not in s_table:
        raise PreconditionError(f"s({b - h}) not available in the table")
    return Fraction(h, g) + 1 / s_table[b - h]


def bound_large_girth(b: int, g: int, s_table: STable) -> Rat:
    """Best applicable reciprocal bound among the three ball-removal
    estimates for cubic graphs with all cycles of length >= g; cases whose
    table entry is missing are skipped."""
    cands = []
    if g >= 2 and b >= 3 and b - 2 in s_table:
        cands.append(Fraction(b - 1, b - 2) / s_table[b - 2])
    if g >= 3 and b >= 4 and b - 3 in s_table:
        cands.append(Fraction(3 * b - 3, 3 * b - 8) / s_table[b - 3])
    if g >= 4 and b >= 6 and b - 5 in s_table:
        cands.append(Fraction(b - 1, b - 4) / s_table[b - 5])
    if not cands:
        raise PreconditionError("no large-girth case applies")
    return max(cands)


def bound_decomposable(d: int, c_table: STable) -> Rat:
    """Reciprocal cogirth bound for decomposable regular matroids of rank d:
    min over d1 + d2 = d - 2 of c(d1)^{-1} + c(d2)^{-1}."""
    if d < 4:
        raise PreconditionError("decomposable bound needs rank >= 4")
    best = None
    for d1 in range(1, d - 2):
        d2 = d - 2 - d1
        if d2 < 1:
            continue
        if d1 not in c_table or d2 not in c_table:
            raise PreconditionError(f"c({d1}) or c({d2}) missing from the table")
        val = 1 / c_table[d1] + 1 / c_table[d2]
        if best is None or val < best:
            best = val
    return best


S_TABLE: STable = {
    1: Fraction(1), 2: Fraction(2, 3), 3: Fraction(1, 2), 4: Fraction(4, 9),
    5: Fraction(3, 8), 6: Fraction(1, 3), 7: Fraction(3, 10), 8: Fraction(2, 7),
    9: Fraction(1, 4),
}

C_TABLE: STable = {
    1: Fraction(1), 2: Fraction(2, 3), 3: Fraction(1, 2), 4: Fraction(4, 9),
    5: Fraction(2, 5), 6: Fraction(1, 3), 7: Fraction(3, 10), 8: Fraction(2, 7),
    9: Fraction(1, 4),
}
