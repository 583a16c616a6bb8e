import pytest
from hypothesis import given, strategies as st

from skewpbw import catalog
from skewpbw.dsl import parse_expr
from skewpbw.poly import AlgebraMismatchError, NoLeadingTermError, cmp_mon

A2 = catalog.instantiate("weyl", {"n": 2})
DISPIN = catalog.instantiate("dispin")


@pytest.mark.parametrize(
    "a,b,want",
    [
        ((1, 0), (0, 1), 1),  # same degree, lexicographic tie-break
        ((0, 2), (1, 0), 1),  # degree first
        ((1, 1), (1, 1), 0),
        ((0, 0, 1), (1, 0, 0), -1),
    ],
)
def test_cmp_mon(a, b, want):
    assert cmp_mon(a, b) == want
    assert cmp_mon(b, a) == -want


def test_cmp_mon_length_mismatch():
    with pytest.raises(ValueError):
        cmp_mon((1,), (1, 0))


def test_leading_and_degree():
    f = parse_expr("3*t1*d1 + d2^2 - 1", A2)
    lm, lc = f.leading()
    assert lm == (0, 2) and str(lc) == "1"
    assert f.degree() == 2
    assert str(parse_expr("t1*d1", A2).lc()) == "t1"


def test_zero_polynomial():
    z = A2.zero
    assert z.degree() == float("-inf")
    with pytest.raises(NoLeadingTermError):
        z.leading()


def test_add_cancels():
    f = parse_expr("d1 + t2", A2)
    g = parse_expr("-d1 + 2", A2)
    assert str(f + g) == "t2 + 2"


def test_mismatched_algebras():
    with pytest.raises(AlgebraMismatchError):
        A2.var("d1") + DISPIN.var("x")


def test_homogeneous_part():
    f = parse_expr("x^2 + y + 1", DISPIN)
    assert str(f.homogeneous_part(2)) == "x^2"
    assert not f.is_homogeneous()


exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@given(a=exps, b=exps, c=exps)
def test_order_is_total_and_transitive(a, b, c):
    assert (cmp_mon(a, b) == 0) == (a == b)
    if cmp_mon(a, b) >= 0 and cmp_mon(b, c) >= 0:
        assert cmp_mon(a, c) >= 0


@given(a=exps, b=exps, c=exps)
def test_order_is_compatible_with_multiplication(a, b, c):
    shift = lambda u: tuple(x + y for x, y in zip(u, c))
    assert cmp_mon(shift(a), shift(b)) == cmp_mon(a, b)


@given(a=exps, b=exps)
def test_leading_monomial_of_product(a, b):
    # lm(x^a x^b) = x^(a+b) in any skew PBW extension
    f = DISPIN.monomial(a) * DISPIN.monomial(b)
    assert f.lm() == tuple(x + y for x, y in zip(a, b))
