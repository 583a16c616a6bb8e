import random

import pytest
from hypothesis import given, settings, strategies as st

from skewpbw import catalog
from skewpbw.coeff import NotAUnitError
from skewpbw.dsl import parse_expr
from skewpbw.poly import SkewPoly
from skewpbw.quantum import QuantumDomainError, QuantumPresentation, invert_term, ore_left_witness, ore_right_witness, qmul

from randgen import rand_exp, rand_poly, rand_scalar

T2 = catalog.instantiate("quantum-torus")
T3 = catalog.instantiate("quantum-torus", {"n": 3})
SKEW = catalog.instantiate("skew-quantum-torus")


def mono(qp, *exps, c=None):
    return qp.monomial(tuple(exps), c)


def test_inverse_cancels():
    assert qmul(mono(T2, -1, 0), mono(T2, 1, 0)) == T2.one
    assert qmul(mono(T2, 1, 0), mono(T2, -1, 0)) == T2.one


def test_commute_past_inverse():
    q12 = T2.base.gen("q12")
    got = mono(T2, 0, 1) * mono(T2, -1, 0)
    assert got == mono(T2, -1, 1, c=q12.invert())
    assert got * mono(T2, 1, 0) == mono(T2, 0, 1)
    assert mono(T2, 1, 0) * got == mono(T2, 0, 1, c=q12.invert())


def test_inverse_passes_coefficient_by_inverse_twist():
    t = SKEW.base.gen("t")
    q = SKEW.base.base.gen("q")
    got = mono(SKEW, -1, 0) * SKEW.coerce(t)
    assert got == mono(SKEW, -1, 0, c=SKEW.base.coerce(q).invert() * t)


def test_negative_exponent_on_non_inverted_variable():
    with pytest.raises(QuantumDomainError):
        SKEW.monomial((0, -1))


def test_invert_term_examples():
    assert invert_term(T2, 1, (0, 0)) == T2.one
    q = SKEW.base.base.gen("q")
    qr = SKEW.base.coerce(q)
    assert invert_term(SKEW, qr, (1, 0)) == mono(SKEW, -1, 0, c=qr.invert())
    inv = invert_term(T2, 1, (1, 1))
    q12 = T2.base.gen("q12")
    # (x1 x2)^-1 = x2^-1 x1^-1 = q12 x1^-1 x2^-1
    assert inv == mono(T2, -1, -1, c=q12)
    assert qmul(inv, mono(T2, 1, 1)) == T2.one


def test_invert_term_errors():
    t = SKEW.base.gen("t")
    with pytest.raises(NotAUnitError):
        invert_term(SKEW, t + 1, (1, 0))
    with pytest.raises(QuantumDomainError):
        invert_term(SKEW, 1, (0, 1))


def test_left_ore_witness_example():
    q12 = T2.base.gen("q12")
    g = ore_left_witness(T2, T2.var("x2"), 1, (1, 0))
    assert g == mono(T2, 0, 1, c=q12.invert())
    assert g * T2.var("x1") == T2.var("x1") * T2.var("x2")


def test_left_ore_witness_constant():
    t = SKEW.base.gen("t")
    g = ore_left_witness(SKEW, SKEW.coerce(3), t, (0, 0))
    assert g * SKEW.coerce(t) == SKEW.coerce(3)


def test_ore_rejects_outside_s():
    with pytest.raises(QuantumDomainError):
        ore_left_witness(SKEW, SKEW.one, 1, (0, 1))


def test_core_must_be_quasi_commutative():
    with pytest.raises(ValueError):
        QuantumPresentation(catalog.instantiate("weyl"), 1)
    with pytest.raises(ValueError):
        QuantumPresentation(T2.core, 3)


def test_q_matrix():
    q12 = T3.base.gen("q12")
    assert T3.q(0, 1) == q12 and T3.q(1, 0) == q12.invert()
    assert T3.q(2, 2) == T3.base.one


def _s_element(rng, qp, allow_negative):
    e = list(rand_exp(rng, qp.r, 2, signed=qp.r if allow_negative else 0)) + [0] * (qp.nvars - qp.r)
    r = rand_scalar(rng, qp.base, terms=1, depth=1, nonzero=True)
    while qp.base.try_invert(r) is None:
        r = rand_scalar(rng, qp.base, terms=1, depth=1, nonzero=True)
    return r, tuple(e)


@pytest.mark.parametrize("qp", [T2, T3, SKEW], ids=["torus2", "torus3", "skew"])
@settings(max_examples=25)
@given(seed=st.integers(0, 10**6))
def test_qmul_associative_and_unital(qp, seed):
    rng = random.Random(seed)
    f, g, h = (rand_poly(rng, qp, max_deg=3, terms=2) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * qp.one == f == qp.one * f


@pytest.mark.parametrize("qp", [T2, T3, SKEW], ids=["torus2", "torus3", "skew"])
@settings(max_examples=25)
@given(seed=st.integers(0, 10**6))
def test_invert_term_two_sided(qp, seed):
    rng = random.Random(seed)
    r, a = _s_element(rng, qp, True)
    inv = invert_term(qp, r, a)
    s = SkewPoly(qp, {a: r})
    assert inv * s == qp.one == s * inv


@pytest.mark.parametrize("qp", [T2, T3, SKEW], ids=["torus2", "torus3", "skew"])
@settings(max_examples=25)
@given(seed=st.integers(0, 10**6))
def test_ore_witnesses(qp, seed):
    rng = random.Random(seed)
    f = rand_poly(rng, qp, max_deg=3, terms=4)
    r, a = _s_element(rng, qp, False)
    s = SkewPoly(qp, {a: r})
    xa = qp.monomial(a)
    # recomputed here with the generic product rather than trusting the built-in check
    assert ore_left_witness(qp, f, r, a) * s == xa * f
    assert s * ore_right_witness(qp, f, r, a) == f * xa


@pytest.mark.parametrize("qp", [T3, SKEW], ids=["torus3", "skew"])
@settings(max_examples=25)
@given(seed=st.integers(0, 10**6))
def test_s_elements_are_regular(qp, seed):
    rng = random.Random(seed)
    f = rand_poly(rng, qp, max_deg=3, terms=3, nonzero=True)
    r, a = _s_element(rng, qp, False)
    s = SkewPoly(qp, {a: r})
    assert not (f * s).is_zero() and not (s * f).is_zero()


def test_parsed_expression_in_torus():
    f = parse_expr("x2*x1^-1*x1", T2)
    assert f == T2.var("x2")
