"""Parsing, name resolution and canonical printing of catalogue programs."""
import pytest
from hypothesis import given, strategies as st

from puretop.catalog import catalog_entries
from puretop.dsl import (
    CheckDecl, MapDecl, ModuleDecl, ProductDecl, RingDecl, format_program, parse,
)
from puretop.errors import DSLError
from puretop.expr import format_expr, parse_expression_text


def test_single_ring():
    prog = parse("ring R = F3[u,v,w]/(w^2-v^2-u^2);")
    assert len(prog) == 1
    (d,) = prog
    assert isinstance(d, RingDecl)
    assert (d.name, d.coeff, d.variables) == ("R", "F3", ("u", "v", "w"))
    assert len(d.relations) == 1


def test_map_declaration_round_trips():
    text = ("ring R = F3[u,v,w]/(u*w - v^2); ring S = F3[x,y];"
            "map a: R -> S { u -> x^2, v -> x*y, w -> y^2 };")
    prog = parse(text)
    assert isinstance(prog[-1], MapDecl)
    assert dict(prog[-1].images).keys() == {"u", "v", "w"}
    assert parse(format_program(prog)) == prog


def test_empty_program():
    assert parse("") == ()
    assert parse("# only a comment\n\n") == ()


def test_all_declaration_kinds():
    text = """
    ring R = Q[x,y]/(x*y);   # the node
    ring A = Q[x]; ring B = Q[y];
    ring P = PRODUCT(A, B);
    module M = R/(x);
    module F = R^2/((x, 0), (0, y)) degrees=(0, 1);
    map n: R -> P { x -> (x, 0), y -> (0, y) } gens=((1, 0), (0, 1)) one=(1, 1);
    bilinear q on M = ((y));
    check split n expect=NoSplit cite="[TRIVIAL] example";
    check contract n ideal=(x) elem=y expect=false;
    check frobalg q expect=Split obstruction="I = (x)";
    """
    prog = parse(text)
    kinds = [type(d).__name__ for d in prog]
    assert kinds.count("RingDecl") == 3 and "ProductDecl" in kinds and "BilinearDecl" in kinds
    assert prog[5].degrees == (0, 1)
    check = prog[-2]
    assert isinstance(check, CheckDecl) and check.option("elem") == parse_expression_text("y")
    assert parse(format_program(prog)) == prog


@pytest.mark.parametrize("text,line,col,fragment", [
    ("ring R = Q[x;", 1, 13, "expected"),
    ("ring R = Q[x];\nmodule M = T/(x);", 2, 1, "unknown identifier"),
    ("ring R = Q[x];\nring S = Q[y];\nmap f: R -> S { x -> z };", 3, 1, "unknown identifier"),
    ("ring R = Q[x,y];\nring S = Q[t];\nmap f: R -> S { x -> t };", 3, 1, "exactly one image"),
    ("ring R = Q[x];\nmodule M = R^2/((x));", 2, 1, "length"),
    ("ring R = Q[x];\ncheck contract f ideal=(x) elem=x;", 2, 1, "unknown identifier"),
    ("ring R = Q[x];\ncheck fsplit R bogus=1;", 2, 16, ""),
    ("frob R;", 1, 1, "expected a declaration"),
])
def test_errors_carry_position(text, line, col, fragment):
    with pytest.raises(DSLError) as info:
        parse(text)
    e = info.value
    assert (e.line, e.column) == (line, col)
    assert fragment in str(e)


def test_unknown_coefficients():
    with pytest.raises(DSLError):
        parse("ring R = F4[x];")


@pytest.mark.parametrize("entry", catalog_entries(), ids=lambda e: e.id)
def test_catalog_entries_round_trip(entry):
    assert entry.round_trips()
    prog = parse(entry.source)
    assert parse(format_program(prog)) == prog
    for d in prog:
        if isinstance(d, CheckDecl):
            assert d.option("cite", "")[:1] == "["
            assert d.option("cite").split("]")[0] in ("[PAPER", "[DERIVED", "[TRIVIAL")


# ---------------------------------------------------------------- properties

names = st.sampled_from(["x", "y", "z"])
leaf = st.one_of(names, st.integers(0, 12).map(str))


def exprs():
    return st.recursive(
        leaf,
        lambda sub: st.one_of(
            st.tuples(sub, st.sampled_from(["+", "-", "*"]), sub).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
            st.tuples(sub, st.integers(1, 4)).map(lambda t: f"({t[0]})^{t[1]}"),
            sub.map(lambda s: f"-({s})"),
            st.tuples(sub, st.integers(1, 5)).map(lambda t: f"{t[0]}/{t[1]}"),
        ),
        max_leaves=6,
    )


@given(exprs())
def test_expression_print_parse(text):
    e = parse_expression_text(text)
    assert parse_expression_text(format_expr(e)) == e


@st.composite
def programs(draw):
    coeff = draw(st.sampled_from(["Q", "F2", "F3", "F5"]))
    rels = draw(st.lists(exprs(), max_size=2))
    lines = [f"ring R = {coeff}[x,y,z]" + (f"/({', '.join(rels)})" if rels else "") + ";",
             f"ring S = {coeff}[x,y,z];"]
    if draw(st.booleans()):
        lines.append("ring P = PRODUCT(R, S);")
    imgs = draw(st.lists(exprs(), min_size=3, max_size=3))
    opts = ""
    if draw(st.booleans()):
        gens = draw(st.lists(exprs(), min_size=1, max_size=3))
        opts = f" gens=({', '.join(gens)})"
    lines.append("map f: R -> S { " + ", ".join(f"{v} -> {e}" for v, e in zip("xyz", imgs)) + " }" + opts + ";")
    k = draw(st.integers(1, 2))
    cols = draw(st.lists(st.lists(exprs(), min_size=k, max_size=k), max_size=2))
    body = f"R^{k}" + (("/(" + ", ".join("(" + ", ".join(c) + ")" for c in cols) + ")") if cols else "")
    lines.append(f"module M = {body};")
    checks = ["check split f expect=Split;",
              f"check contract f ideal=({draw(exprs())}) elem={draw(exprs())} expect=true;",
              'check tensorinj f module=M cite="[TRIVIAL] x";', "check fsplit R;", "check kunz S;"]
    lines += draw(st.lists(st.sampled_from(checks), max_size=3))
    return "\n".join(lines)


@given(programs())
def test_program_print_parse(text):
    prog = parse(text)
    again = parse(format_program(prog))
    assert again == prog
    assert format_program(again) == format_program(prog)
