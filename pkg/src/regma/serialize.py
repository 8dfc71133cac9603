"""File formats and the construction mini-language shared by the CLI.

Graph files: line 1 "n m", then m lines "u v" (0-indexed). Weight files:
m lines of rationals "p/q". Matroid files: line 1 "d n", then d bit rows,
then optionally a LIFT sentinel followed by d integer rows. Catalog names
are accepted wherever a graph file is, prefixed "builtin:".

Matroid expressions: graphic(<graph>[, root]), cographic(<graph>), r10,
dual(X), simplify(X), sum1(X, Y), sum2(X@label, Y@label),
sum3(X@{a,b,c}, Y@{a2,b2,c2}) with the triples paired in order, and
file:<path> for a matroid file.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .catalog import catalog
from .errors import PreconditionError
from .exact import BitMatrix, IntMatrix, format_rat, parse_rat
from .graph import MultiGraph
from .matroid import BinaryMatroid, cographic, dual, graphic, r10, simplify, sum1, sum2, sum3


def load_graph(spec: str) -> MultiGraph:
    """A catalog name prefixed builtin:, or a path to a graph file."""
    if spec.startswith("builtin:"):
        return catalog(spec[len("builtin:"):])
    with open(spec, encoding="utf-8") as fh:
        return MultiGraph.parse(fh.read())


def load_weights(path: str, m: int) -> tuple[Fraction, ...]:
    with open(path, encoding="utf-8") as fh:
        vals = [parse_rat(ln) for ln in fh.read().split()]
    if len(vals) != m:
        raise PreconditionError(f"expected {m} weights, got {len(vals)}")
    return tuple(vals)


def format_weights(w) -> str:
    return "\n".join(format_rat(x) for x in w)


def format_matroid(m: BinaryMatroid) -> str:
    lines = [f"{m.rank} {m.size}"]
    lines.extend("".join(str(m.rep.at(i, j)) for j in range(m.size))
                 for i in range(m.rank))
    if m.lift is not None:
        lines.append("LIFT")
        lines.extend(" ".join(str(x) for x in m.lift.row(i))
                     for i in range(m.rank))
    return "\n".join(lines)


def parse_matroid(text: str) -> BinaryMatroid:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    d, n = map(int, lines[0].split())
    rows = []
    for ln in lines[1 : 1 + d]:
        bits = ln.replace(" ", "")
        if len(bits) != n or set(bits) - {"0", "1"}:
            raise PreconditionError("bad bit row in matroid file")
        rows.append([int(b) for b in bits])
    rep = BitMatrix.from_rows(rows) if d else BitMatrix(0, n, ())
    lift = None
    rest = lines[1 + d :]
    if rest and rest[0] == "LIFT":
        lrows = [[int(x) for x in ln.split()] for ln in rest[1 : 1 + d]]
        lift = IntMatrix.from_rows(lrows) if d else IntMatrix(0, n, ())
    labels = tuple(f"e{i}" for i in range(n))
    return BinaryMatroid(labels, rep, lift, ("file",))


_CALL = re.compile(r"^(\w+)\((.*)\)$")


def parse_matroid_expr(expr: str) -> BinaryMatroid:
    """Recursive-descent parser for the construction DSL."""
    expr = expr.strip()
    if expr == "r10":
        return r10()
    if expr.startswith("file:"):
        with open(expr[len("file:"):], encoding="utf-8") as fh:
            return parse_matroid(fh.read())
    m = _CALL.match(expr)
    if not m:
        raise PreconditionError(f"cannot parse matroid expression {expr!r}")
    head, body = m.group(1), m.group(2)
    args = _split_args(body)
    if head == "graphic":
        g = load_graph(args[0])
        root = int(args[1]) if len(args) > 1 else 0
        return graphic(g, root)
    if head == "cographic":
        return cographic(load_graph(args[0]))
    if head == "dual":
        return dual(parse_matroid_expr(args[0]))
    if head == "simplify":
        return simplify(parse_matroid_expr(args[0]))[0]
    if head == "sum1":
        return sum1(parse_matroid_expr(args[0]), parse_matroid_expr(args[1]))
    if head == "sum2":
        x, e1 = _split_at(args[0])
        y, e2 = _split_at(args[1])
        return sum2(parse_matroid_expr(x), e1, parse_matroid_expr(y), e2)
    if head == "sum3":
        x, t1 = _split_at(args[0])
        y, t2 = _split_at(args[1])
        return sum3(parse_matroid_expr(x), _parse_triple(t1),
                    parse_matroid_expr(y), _parse_triple(t2))
    raise PreconditionError(f"unknown construction {head!r}")


def _split_args(body: str) -> list[str]:
    out = []
    depth = 0
    cur = []
    for ch in body:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur).strip())
    return [a for a in out if a]


def _split_at(arg: str) -> tuple[str, str]:
    depth = 0
    for i in range(len(arg) - 1, -1, -1):
        ch = arg[i]
        if ch in ")}":
            depth += 1
        elif ch in "({":
            depth -= 1
        elif ch == "@" and depth == 0:
            return arg[:i].strip(), arg[i + 1 :].strip()
    raise PreconditionError(f"expected expr@selector in {arg!r}")


def _parse_triple(text: str) -> tuple[str, str, str]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise PreconditionError("3-sum selector must be {a,b,c}")
    parts = [p.strip() for p in text[1:-1].split(",")]
    if len(parts) != 3:
        raise PreconditionError("3-sum selector needs three labels")
    return tuple(parts)  # type: ignore[return-value]
