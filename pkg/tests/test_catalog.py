import pytest

from skewpbw import catalog
from skewpbw.catalog import ParamError
from skewpbw.dsl import parse_expr
from skewpbw.presentation import check_confluence, validate
from skewpbw.quantum import QuantumPresentation


def _core(a):
    return a.core if isinstance(a, QuantumPresentation) else a


def test_listing_is_sorted_and_has_known_entries():
    rows = catalog.list_catalog()
    keys = [k for k, _, _ in rows]
    assert keys == sorted(keys)
    fam = {k: f for k, f, _ in rows}
    assert fam["weyl"] == "PBW extension"
    assert {"q-heisenberg", "quantum-torus", "uq-sl2", "dispin"} <= set(keys)


def test_unknown_key():
    with pytest.raises(KeyError):
        catalog.instantiate("no-such-algebra")


def test_weyl_two_variables():
    a = catalog.instantiate("weyl", {"n": 2})
    for i in (1, 2):
        for j in (1, 2):
            comm = parse_expr(f"d{j}*t{i} - t{i}*d{j}", a)
            assert comm == (a.one if i == j else a.zero)
    assert parse_expr("d2*d1 - d1*d2", a).is_zero()


def test_dispin_relations():
    a = catalog.instantiate("dispin")
    assert parse_expr("y*z - z*y", a) == a.var("z")
    assert parse_expr("z*x + x*z", a) == a.var("y")
    assert parse_expr("x*y - y*x", a) == a.var("x")


def test_uq_sl2_relations():
    a = catalog.instantiate("uq-sl2")
    q = a.base.base.gen("q")
    z = a.coerce(a.base.gen("z"))
    qq = a.coerce(q)
    assert parse_expr("x*z", a) == qq ** -2 * z * a.var("x")
    assert parse_expr("y*z", a) == qq**2 * z * a.var("y")
    want = (z - z.try_invert()) * a.coerce((q - q.invert()).invert())
    assert parse_expr("x*y - y*x", a) == want


def test_original_relations_hold_for_every_entry():
    for key in sorted(catalog.CATALOG):
        a = catalog.instantiate(key)
        for rel in catalog.relations(key):
            lhs, rhs = rel.split(" = ")
            assert parse_expr(lhs, a) == parse_expr(rhs, a), (key, rel)


@pytest.mark.parametrize("key", sorted(catalog.CATALOG))
def test_entry_is_sound(key):
    a = catalog.instantiate(key)
    core = _core(a)
    assert validate(core).ok
    assert check_confluence(core, 4).ok
    entry = catalog.get_entry(key)
    if entry.quasi_commutative:
        assert core.is_quasi_commutative()
        assert all(d.is_zero() for d in core.delta) and not core.tails
    if entry.bijective:
        assert core.is_bijective()


@pytest.mark.parametrize(
    "key,params",
    [
        ("weyl", {"n": 0}),
        ("quantum-space", {"q12": "0"}),
        ("uq-sl2", {"q": "1"}),
        ("multiplicative-weyl", {"l21": "0"}),
        ("weyl", {"bogus": "1"}),
        ("quantum-torus", {"r": "7"}),
    ],
)
def test_parameter_errors(key, params):
    with pytest.raises(ParamError):
        catalog.instantiate(key, params)


def test_enveloping_presets_and_custom():
    sl2 = catalog.instantiate("enveloping")
    assert sl2.nvars == 3
    heis = catalog.instantiate("enveloping", {"lie": "heisenberg"})
    assert heis.nvars == 3
    custom = catalog.instantiate("enveloping", {"basis": "a,b", "brackets": "[a,b]=a"})
    assert parse_expr("a*b - b*a", custom) == custom.var("a")


def test_enveloping_rejects_jacobi_failure():
    with pytest.raises(ParamError, match="Jacobi"):
        catalog.instantiate("enveloping", {"basis": "a,b,c", "brackets": "[a,b]=c;[b,c]=a;[a,c]=a"})


def test_numeric_parameters():
    a = catalog.instantiate("quantum-space", {"q12": "2"})
    assert a.base.descriptor() == "QQ"
    assert parse_expr("x2*x1", a) == 2 * a.var("x1") * a.var("x2")


def test_render_is_deterministic():
    assert catalog.render("vq-sl3") == catalog.render("vq-sl3")
