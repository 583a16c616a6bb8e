from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewpbw.coeff import (
    QQ,
    NotAUnitError,
    RingMismatchError,
    arith,
    frac_field,
    is_zero,
    laurent_ring,
    parse_ring,
    poly_ring,
    try_invert,
)

K = frac_field("q")
Qt = poly_ring(QQ, "t")
L = laurent_ring(K, "y")
Kt = poly_ring(frac_field("q", "h"), "t1", "t2")


def test_rational_sum():
    assert arith(QQ(Fraction(1, 2)), QQ(Fraction(1, 3)), "add") == QQ(Fraction(5, 6))


def test_field_inverse_cancels():
    q = K.gen("q")
    assert q * q.invert() == K.one
    assert str(q * try_invert(q)) == "1"


def test_polynomial_product():
    t = Qt.gen("t")
    assert str((t + 1) * (t - 1)) == "t^2 - 1"


def test_try_invert_examples():
    q = K.gen("q")
    assert try_invert(q - 1) * (q - 1) == K.one
    assert try_invert(Qt.gen("t")) is None
    y = L.gen("y")
    inv = try_invert(3 * y**2)
    assert inv == K.coerce(Fraction(1, 3)) * y**-2
    assert try_invert(L.zero) is None


def test_is_zero_examples():
    t = Qt.gen("t")
    assert is_zero(Qt.zero)
    assert is_zero((t**2 - 1) - (t - 1) * (t + 1))
    assert not is_zero(K.gen("q"))


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        arith(Qt.gen("t"), L.gen("y"), "add")


def test_not_a_unit_raises():
    with pytest.raises(NotAUnitError):
        Qt.gen("t").invert()


def test_laurent_units_are_monomials():
    y = L.gen("y")
    assert try_invert(y + 1) is None
    assert try_invert(K.gen("q") * y**-3) is not None


@pytest.mark.parametrize("desc", ["QQ", "QQ(q)", "QQ(q)[t1,t2]", "QQ(q)[z^+-]", "QQ[t]", "QQ(a,b)[x][y^+-]"])
def test_descriptor_roundtrip(desc):
    assert parse_ring(desc).descriptor() == desc


def test_canonical_denominator_is_normalized():
    q = K.gen("q")
    a = (2 * q) / (4 * q**2 - 2)
    b = q / (2 * q**2 - 1)
    assert a == b and hash(a) == hash(b)
    assert str(a) == str(b)


def test_generator_names_must_be_unique():
    with pytest.raises(ValueError):
        parse_ring("QQ(q)[q]")


# ----------------------------------------------------------------------
# ring axioms on random elements

small = st.integers(-3, 3)


def _elem(ring, gens, coeffs):
    out = ring.zero
    for c, e in coeffs:
        term = ring.coerce(c)
        for g, k in zip(gens, e):
            term = term * ring.gen(g) ** k
        out = out + term
    return out


def ring_elems(ring, gens, lo=0, hi=2):
    exps = st.tuples(*[st.integers(lo, hi) for _ in gens])
    return st.lists(st.tuples(small, exps), min_size=0, max_size=3).map(lambda cs: _elem(ring, gens, cs))


RINGS = [
    (Qt, ("t",), 0),
    (L, ("y",), -2),
    (Kt, ("t1", "t2"), 0),
]


@pytest.mark.parametrize("ring,gens,lo", RINGS, ids=["poly", "laurent", "ratfunc-poly"])
@given(data=st.data())
def test_ring_axioms(ring, gens, lo, data):
    a, b, c = (data.draw(ring_elems(ring, gens, lo)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == ring.zero
    inv = try_invert(a)
    if inv is not None:
        assert a * inv == ring.one


@given(n1=st.integers(-20, 20), d1=st.integers(1, 9), n2=st.integers(-20, 20), d2=st.integers(1, 9))
def test_rational_function_field_axioms(n1, d1, n2, d2):
    q = K.gen("q")
    a = (n1 * q + d1) / (q**2 + d2)
    b = (q - n2) / (d1 * q + 1)
    assert (a + b) - b == a
    if not b.is_zero():
        assert (a * b) / b == a
    # canonical form is idempotent: rebuilding from the payload gives the same value
    assert K._norm(*a.v) == a.v
