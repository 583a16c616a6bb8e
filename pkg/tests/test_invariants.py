import math

import pytest
from hypothesis import given, strategies as st

from skewpbw import catalog
from skewpbw.dsl import parse_definition
from skewpbw.invariants import INF, HypothesisError, KExpr, RingFacts, dim_report, k_groups, k_laurent_step

FIELD = RingFacts(is_field=True, is_noetherian=True, is_domain=True)
REG = RingFacts(is_noetherian=True, is_regular=True, k_trivial_action=True)


def test_quasi_commutative_over_field():
    rep = dim_report(catalog.instantiate("quantum-space", {"n": 3}), FIELD)
    assert rep.lkdim_lo == rep.lkdim_hi == 3
    assert rep.lgld_lo == rep.lgld_hi == 3
    assert rep.exact == {"lgld", "lkdim"}
    assert rep.udim == 1


def test_semisimple_quasi_commutative():
    rep = dim_report(catalog.instantiate("quantum-space", {"n": 2}), RingFacts(is_semisimple=True))
    assert rep.lgld_lo == rep.lgld_hi == 2
    assert rep.lkdim_lo is None and rep.udim is None


def test_noetherian_domain_gives_uniform_dimension_one():
    rep = dim_report(catalog.instantiate("weyl", {"n": 2}), RingFacts(lgld=0, is_noetherian=True, is_domain=True))
    assert rep.udim == 1
    assert (rep.lgld_lo, rep.lgld_hi) == (0, 2)
    assert rep.render().splitlines()[1] == "lkdim(R) <= lkdim(A) <= lkdim(R)+2"


def test_laurent_line_over_field():
    p = parse_definition("algebra line\nring QQ(q)\nvars x invertible\n")
    rep = dim_report(p, FIELD)
    assert rep.lgld_lo == rep.lgld_hi == 1
    assert rep.lkdim_lo == rep.lkdim_hi == 1


def test_infinite_global_dimension():
    rep = dim_report(catalog.instantiate("weyl"), RingFacts(lgld=INF))
    assert rep.lgld_hi == INF and "lgld" in rep.exact


def test_non_bijective_rejected():
    p = parse_definition("algebra frob\nring QQ[t]\nvars x\nsigma x { t -> t^2 }\n")
    with pytest.raises(HypothesisError):
        dim_report(p, FIELD)


def test_inconsistent_facts_rejected():
    with pytest.raises(ValueError):
        RingFacts(is_field=True, lkdim=2).normalized()
    with pytest.raises(ValueError):
        RingFacts(is_semisimple=True, lgld=1).normalized()


def test_records_render():
    rep = dim_report(catalog.instantiate("quantum-space", {"n": 3}), FIELD)
    assert rep.render("records").splitlines()[0] == "dimension=lgld lo=3 hi=3 exact=true"


def test_k_groups_examples():
    assert k_groups(REG, 0, 5).as_dict() == {0: 1}
    assert k_groups(REG, 1, 4).as_dict() == {0: 4, 1: 1}
    assert k_groups(REG, 2, 3).as_dict() == {0: 3, 1: 3, 2: 1}
    assert str(k_groups(REG, 2, 3)) == "K0^3 ⊕ K1^3 ⊕ K2"


def test_k_groups_without_inverted_variables():
    # r = 0 reduces to K_m(R) and needs no trivial-action declaration
    assert k_groups(RingFacts(is_noetherian=True, is_regular=True), 3, 0).as_dict() == {3: 1}


def test_k_groups_hypotheses():
    with pytest.raises(HypothesisError):
        k_groups(RingFacts(is_noetherian=True, is_regular=True), 1, 1)
    with pytest.raises(HypothesisError):
        k_groups(RingFacts(is_regular=True, k_trivial_action=True), 1, 1)
    with pytest.raises(ValueError):
        k_groups(REG, -1, 1)


def test_laurent_step_examples():
    base = {m: KExpr.single(m) for m in range(3)}
    out = k_laurent_step(base, trivial_action=True)
    assert out[0].as_dict() == {0: 1}
    assert out[1].as_dict() == {0: 1, 1: 1}
    with pytest.raises(HypothesisError):
        k_laurent_step(base)


def test_kexpr_rejects_negative():
    with pytest.raises(ValueError):
        KExpr.of({0: -1})
    assert str(KExpr()) == "0"


@given(m=st.integers(0, 8), r=st.integers(1, 8))
def test_pascal_recursion(m, r):
    got = k_groups(REG, m, r).as_dict()
    prev = k_groups(REG, m, r - 1).as_dict()
    lower = k_groups(REG, m - 1, r - 1).as_dict() if m else {}
    for j in range(m + 1):
        assert got.get(j, 0) == prev.get(j, 0) + lower.get(j, 0)


@given(m=st.integers(0, 8), r=st.integers(0, 8))
def test_iterated_laurent_step_matches_binomials(m, r):
    vec = {k: KExpr.single(k) for k in range(m + 1)}
    for _ in range(r):
        vec = k_laurent_step(vec, trivial_action=True)
    assert vec[m] == k_groups(REG, m, r)
    assert sum(vec[m].as_dict().values()) == sum(math.comb(r, m - j) for j in range(m + 1))


@given(n=st.integers(1, 4), lgld=st.integers(0, 5), lkdim=st.integers(0, 5))
def test_bounds_are_ordered(n, lgld, lkdim):
    p = catalog.instantiate("weyl", {"n": n})
    rep = dim_report(p, RingFacts(lgld=lgld, lkdim=lkdim, is_noetherian=True))
    assert rep.lgld_lo <= rep.lgld_hi == lgld + n
    assert rep.lkdim_lo <= rep.lkdim_hi == lkdim + n
