import pytest

from regma.catalog import catalog
from regma.errors import PreconditionError
from regma.matroid import circuits, graphic, r10
from regma.serialize import (format_matroid, load_graph, parse_matroid,
                             parse_matroid_expr)


class TestMatroidFiles:
    def test_roundtrip_with_lift(self):
        m = graphic(catalog("k4"))
        back = parse_matroid(format_matroid(m))
        assert back.rank == m.rank and back.size == m.size
        assert back.lift is not None
        assert sorted(circuits(back)) == sorted(circuits(m))

    def test_parse_without_lift(self):
        text = "2 3\n101\n011\n"
        m = parse_matroid(text)
        assert m.rank == 2 and m.lift is None

    def test_bad_bits(self):
        with pytest.raises(PreconditionError):
            parse_matroid("1 3\n10\n")


class TestExpressions:
    def test_nested(self):
        m = parse_matroid_expr(
            "sum2(graphic(builtin:k4)@e0, dual(cographic(builtin:k4))@e1)")
        assert m.rank == 5 and m.size == 10

    def test_sum3_expression(self):
        m = parse_matroid_expr(
            "sum3(graphic(builtin:k5)@{e0,e4,e1}, graphic(builtin:k5)@{e0,e4,e1})")
        assert m.rank == 6 and m.size == 14

    def test_r10_and_simplify(self):
        assert parse_matroid_expr("simplify(r10)").size == 10
        assert parse_matroid_expr("r10").labels[0] == "e1"

    def test_graphic_with_root(self):
        m = parse_matroid_expr("graphic(builtin:k4, 2)")
        assert m.rank == 3

    def test_unknown(self):
        with pytest.raises(PreconditionError):
            parse_matroid_expr("spanner(builtin:k4)")

    def test_builtin_graph_loading(self):
        g = load_graph("builtin:theta")
        assert g.m == 3
        with pytest.raises(PreconditionError):
            load_graph("builtin:nonesuch")
