import pytest

from skewpbw import catalog
from skewpbw.coeff import frac_field, poly_ring
from skewpbw.dsl import emit, parse_definition
from skewpbw.presentation import (
    DerivSpec,
    EndoSpec,
    InvalidSpecError,
    Presentation,
    UnsupportedNestingError,
    apply_deriv,
    apply_endo,
    check_confluence,
    flatten,
    validate,
)

R = poly_ring(frac_field("q", "h"), "t")
t, q, h = R.gen("t"), R.coerce(R.base.gen("q")), R.coerce(R.base.gen("h"))


def test_apply_endo():
    s = EndoSpec({"t": q * t})
    assert apply_endo(s, t**2 + 1, R) == q**2 * t**2 + 1


def test_apply_deriv_leibniz():
    s = EndoSpec({"t": q * t})
    d = DerivSpec({"t": h})
    assert apply_deriv(d, s, t**2, R) == (q + 1) * h * t


def test_apply_endo_identity_and_zero_deriv():
    assert apply_endo(EndoSpec(), t + 3, R) == t + 3
    assert apply_deriv(DerivSpec(), EndoSpec({"t": q * t}), t, R) == R.zero


def test_validate_catches_zero_constant():
    K = frac_field("q")
    p = Presentation("bad", K, ["x", "y"], c={(0, 1): 0})
    rep = validate(p)
    assert not rep.ok
    assert any("nonzero" in msg for _, _, msg in rep.errors())


def test_validate_unknown_generator():
    p = Presentation("bad", R, ["x"], delta={"x": DerivSpec({"s": 1})})
    assert not validate(p).ok


def test_validate_wrong_inverse():
    p = Presentation("bad", R, ["x"], sigma={"x": EndoSpec({"t": t + 1}, {"t": t + 1})})
    assert not validate(p).ok


def test_repeated_variable_names_rejected():
    with pytest.raises(ValueError):
        Presentation("bad", R, ["x", "x"])
    with pytest.raises(ValueError):
        Presentation("bad", R, ["t"])


CORRUPT_A2 = """algebra corrupt
ring QQ[t1, t2]
vars d1, d2
delta d1 { t1 -> 1 }
delta d2 { t2 -> 1 }
rel d2*d1 = d1*d2 + d1
"""


def test_confluence_catches_corrupted_weyl():
    rep = check_confluence(parse_definition(CORRUPT_A2))
    assert not rep.ok
    assert any("reductions disagree" in msg for _, _, msg in rep.errors())


def test_confluence_catches_inconsistent_relations():
    p = parse_definition(
        "algebra broken\nring QQ(q1, q2)\nvars x, y, z\n"
        "rel y*x = q2*x*y + x\nrel z*x = q1*x*z + z\nrel z*y = y*z\n"
    )
    assert validate(p).ok
    assert not check_confluence(p, 3).ok


@pytest.mark.parametrize("key", ["weyl", "dispin", "q-heisenberg", "uq-sl2", "dq-sq", "quantum-weyl-hecke"])
def test_catalog_members_are_confluent(key):
    rep = check_confluence(catalog.instantiate(key), 4)
    assert rep.ok, rep.render()
    assert rep.checks > 0


def test_confluence_bound():
    with pytest.raises(ValueError):
        check_confluence(catalog.instantiate("weyl"), 2)


def test_flatten_dq_sq():
    nested = catalog.instantiate("dq-sq")
    flat = flatten(nested)
    assert flat.nested_base is None
    assert flat.var_names == ("x1", "x2", "d1", "d2")
    assert check_confluence(flat, 3).ok
    # x1 and d1 still satisfy d1 x1 = x1 d1 + 1
    x1, d1 = flat.var("x1"), flat.var("d1")
    assert d1 * x1 - x1 * d1 == flat.one


def test_flatten_rejects_non_quasi_commutative_inner():
    with pytest.raises(UnsupportedNestingError):
        flatten(catalog.instantiate("maltsiniotis"))


def test_flatten_is_identity_on_flat():
    p = catalog.instantiate("dispin")
    assert flatten(p) is p


def test_structure_flags():
    assert catalog.instantiate("quantum-space").is_quasi_commutative()
    assert not catalog.instantiate("weyl").is_quasi_commutative()
    assert catalog.instantiate("shift").is_bijective()
    frob = parse_definition("algebra frob\nring QQ[t]\nvars x\nsigma x { t -> t^2 }\n")
    assert not frob.is_bijective()
    assert any(sev == "warning" for sev, _, _ in validate(frob).findings)


def test_emit_parse_roundtrip_preserves_identity():
    p = catalog.instantiate("q-heisenberg")
    assert parse_definition(emit(p)) == p


def test_non_unit_image_of_unit_is_error():
    K = frac_field("q")
    L = poly_ring(K, "t")
    p = Presentation("bad", frac_field("q"), ["x"], sigma={"x": EndoSpec({"q": K.zero})})
    assert not validate(p).ok
    _ = L, InvalidSpecError
