import pytest
from hypothesis import given, strategies as st

from skewpbw import catalog
from skewpbw.dsl import ParseError, emit, parse_definition, parse_expr

DQH = """algebra dqh
ring QQ(q,h)[y]
vars x
rel x*y = q*y*x + h
"""


def test_dqh_relation_becomes_twist_and_derivation():
    p = parse_definition(DQH)
    y = p.base.gen("y")
    q, h = p.base.coerce(p.base.base.gen("q")), p.base.coerce(p.base.base.gen("h"))
    assert p.sigma_apply(0, y) == q * y
    assert p.delta_apply(0, y) == h
    assert parse_expr("x*y - q*y*x", p) == p.coerce(h)


def test_reversed_relation_is_solved():
    p = parse_definition("algebra r\nring QQ\nvars x, y\nrel x*y = 2*y*x + x\n")
    assert "rel y*x = 1/2*x*y - 1/2*x" in emit(p)
    assert parse_expr("x*y - 2*y*x", p) == p.var("x")


def test_missing_sigma_and_delta_default():
    p = parse_definition("algebra plain\nring QQ[t]\nvars x\n")
    assert p.sigma[0].is_identity() and p.delta[0].is_zero()


@pytest.mark.parametrize(
    "text",
    [
        "algebra empty\nring QQ\nvars\n",
        "algebra nov\nring QQ\n",
        "algebra bad\nring QQ[\nvars x\n",
        "algebra bad\nring QQ\nvars x, x\n",
        "algebra bad\nring QQ[t]\nvars x\nsigma y { t -> t }\n",
        "algebra bad\nring QQ\nvars x, y\nrel x*y = x*y + 1\n",  # no y*x term to solve for
        "algebra bad\nring QQ\nvars x, y\nrel y*x = x*y + x*y*x\n",  # tail not affine
        "algebra bad\nring QQ\nvars x\nfrobnicate x\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_definition(text)


def test_errors_carry_positions():
    with pytest.raises(ParseError) as exc:
        parse_definition("algebra bad\nring QQ[t]\nvars x\ndelta x { t -> 1 + }\n")
    assert exc.value.line == 4 and exc.value.col > 0
    assert str(exc.value).startswith("line 4, col ")


def test_expression_examples():
    weyl = catalog.instantiate("weyl")
    assert str(parse_expr("d*t", weyl)) == "t*d + 1"
    assert str(parse_expr("d^0", weyl)) == "1"
    dispin = catalog.instantiate("dispin")
    x, y = dispin.var("x"), dispin.var("y")
    s = x + y
    assert parse_expr("(x+y)^2", dispin) == s * s
    assert str(parse_expr("(x+y)^2", dispin)) == "x^2 + 2*x*y + y^2 - x"


@pytest.mark.parametrize("text", ["t d", "q*d", "d^-1", "d^(1/2)", "", "(d", "d*", "1/t"])
def test_expression_errors(text):
    with pytest.raises(ParseError):
        parse_expr(text, catalog.instantiate("weyl"))


def test_rational_coefficients():
    p = catalog.instantiate("q-dilation")
    assert str(parse_expr("1/2*H + 3/q", p)) == "1/2*H + 3/q"


@pytest.mark.parametrize("key", sorted(catalog.CATALOG))
def test_emit_parse_roundtrip(key):
    a = catalog.instantiate(key)
    text = emit(a)
    b = parse_definition(text)
    assert b == a
    assert emit(b) == text


def test_comments_and_blank_lines():
    p = parse_definition("# a comment\n\nalgebra c  # trailing\nring QQ\n\nvars x\n")
    assert p.var_names == ("x",)


def test_nested_base():
    p = parse_definition(
        "algebra outer\nbase {\n  algebra inner\n  ring QQ(q)\n  vars a\n}\nvars b\nsigma b { a -> q*a } inverse { a -> 1/q*a }\n"
    )
    assert p.nested_base.name == "inner"
    assert str(parse_expr("b*a", p)) == "q*a*b"


ALPHABET = "abcdtxyzq0123456789 +-*/^(){},=\n#_.>"


@given(st.text(alphabet=ALPHABET, max_size=60))
def test_definition_parser_is_total(text):
    try:
        parse_definition(text)
    except ParseError:
        pass


@given(st.text(alphabet=ALPHABET, max_size=30))
def test_expression_parser_is_total(text):
    try:
        parse_expr(text, catalog.instantiate("dispin"))
    except ParseError:
        pass


@given(st.text(max_size=40))
def test_parser_total_on_arbitrary_unicode(text):
    for prefix in ("", "algebra a\nring QQ\nvars x\nrel "):
        try:
            parse_definition(prefix + text)
        except ParseError:
            pass
