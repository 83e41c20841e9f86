import pytest

from helpers import fn
from latticepoly.errors import BoundsError, NotDistributiveError, ParseError
from latticepoly.formats import (
    format_expression,
    format_function,
    format_lattice,
    format_measure,
    load_lattice,
    parse_function,
    parse_lattice,
    parse_measure,
    parse_subset,
    resolve_lattice,
)
from latticepoly.expr import parse_expr
from latticepoly.table import CoefficientMap

DIAMOND = """\
lattice diamond   # M2
elements 0 a b 1
bottom 0
top 1
cover 0 a
cover 0 b
cover a 1
cover b 1
"""


def test_parse_diamond_from_covers(diamond):
    L = parse_lattice(DIAMOND)
    assert L.names == ("0", "a", "b", "1")
    assert (L.meet_table == diamond.meet_table).all()
    assert (L.join_table == diamond.join_table).all()


def test_lattice_round_trip(pairs):
    for L, _ in pairs.values():
        again = parse_lattice(format_lattice(L))
        assert again.name == L.name and sorted(again.names) == sorted(L.names)
        order = [again.element(s) for s in L.names]
        for x in L.elements:
            for y in L.elements:
                assert again.names[again.meet(order[x], order[y])] == L.names[L.meet(x, y)]
                assert again.names[again.join(order[x], order[y])] == L.names[L.join(x, y)]


def test_shorthand_lattice_files(tmp_path):
    assert parse_lattice("lattice c5\nchain 5\n").size == 5
    assert parse_lattice("lattice b2\nboolean 2\n").size == 4
    (tmp_path / "c3.lat").write_text("lattice c3\nchain 3\n")
    (tmp_path / "c2.lat").write_text("lattice c2\nchain 2\n")
    (tmp_path / "p.lat").write_text("lattice p\nproduct c3.lat c2.lat\n")
    assert load_lattice(tmp_path / "p.lat").size == 6


def test_resolve_lattice(tmp_path):
    assert resolve_lattice("chain4").size == 4
    assert resolve_lattice("diamond").names == ("0", "a", "b", "1")
    L = resolve_lattice("chain3xchain2")
    assert L.size == 6 and L.name == "chain3xchain2"
    (tmp_path / "d.lat").write_text(DIAMOND)
    assert resolve_lattice("d", base_dir=tmp_path).name == "diamond"
    with pytest.raises(ParseError):
        resolve_lattice("pentagon")


def test_missing_top_is_bounds_error():
    with pytest.raises(BoundsError):
        parse_lattice("elements 0 1\nbottom 0\ncover 0 1\n")


def test_lattice_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_lattice("lattice x\nelements 0 1\nfrobnicate 0\n")
    assert info.value.line == 3
    with pytest.raises(ParseError) as info:
        parse_lattice("lattice x\ncover 0\n")
    assert info.value.line == 2


def test_nondistributive_file_rejected():
    m3 = ("lattice m3\nelements 0 a b c 1\nbottom 0\ntop 1\n"
          + "".join(f"cover 0 {v}\ncover {v} 1\n" for v in "abc"))
    with pytest.raises(NotDistributiveError) as info:
        parse_lattice(m3)
    assert set(info.value.names) == {"a", "b", "c"}


def test_function_round_trip(chain3):
    f = fn(chain3, "(med x1 x2 c:a)", 2, name="m")
    text = format_function(f)
    assert text.splitlines()[0] == "function m arity 2 over chain3"
    assert parse_function(text, chain3) == f


def test_expression_file(chain3):
    e = parse_expr("(join x1 (meet c:a x2))", 2, chain3)
    text = format_expression(e, chain3, 2, name="g")
    assert parse_function(text, chain3) == fn(chain3, "(join x1 (meet c:a x2))", 2)


def test_incomplete_table(chain2):
    text = "function f arity 2 over chain2\n0 0 -> 0\n1 0 -> 1\n0 1 -> 1\n"
    with pytest.raises(ParseError, match="incomplete"):
        parse_function(text, chain2)


@pytest.mark.parametrize("body,line", [
    ("0 0 -> 0\n0 0 -> 1\n", 3),      # duplicate
    ("0 -> 0\n", 2),                  # wrong arity
    ("0 0 -> 7\n", 2),                # unknown element
    ("0 0 0\n", 2),                   # missing arrow
])
def test_function_parse_errors(chain2, body, line):
    with pytest.raises(ParseError) as info:
        parse_function("function f arity 2 over chain2\n" + body, chain2)
    assert info.value.line == line


def test_header_errors(chain2, chain3):
    with pytest.raises(ParseError):
        parse_function("func f 2\n", chain2)
    with pytest.raises(ParseError, match="lattice"):
        parse_function("function f arity 1 over chain3\n0 -> 0\n1 -> 1\n", chain2)
    with pytest.raises(ParseError):
        parse_function("", chain2)


def test_measure_round_trip(chain3):
    mu = CoefficientMap(2, [0, 1, 1, 2])
    text = format_measure(mu, chain3)
    assert "empty -> 0" in text and "full -> 1" in text
    assert parse_measure(text, chain3) == mu
    with pytest.raises(ParseError):
        parse_measure("measure mu arity 2 over chain3\nempty -> 0\n", chain3)


def test_parse_subset():
    assert parse_subset("empty", 3) == 0
    assert parse_subset("full", 3) == 7
    assert parse_subset("1,3", 3) == 0b101
    for bad in ("4", "x", "0"):
        with pytest.raises(ParseError):
            parse_subset(bad, 3)
