"""The quasi-commutative companion A^sigma, top homogeneous components, and the skew tower.

``assoc_algebra(p)`` keeps the twists and constants of ``p`` and drops every
derivation and tail.  Its variables keep the names of ``p``, so an element of
``p`` and its top component print alike.  Gr(A) is handled through its image
in A^sigma: a product whose degree drops maps to zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import NoLeadingTermError, SkewPoly
from .presentation import EndoSpec, Presentation, UnsupportedError, _inverse_problems

__all__ = [
    "assoc_algebra",
    "top_component",
    "check_gr_mult",
    "TowerStep",
    "tower",
    "tower_constraints",
    "tower_roundtrip",
]


def assoc_algebra(p: Presentation) -> Presentation:
    """A^sigma: same coefficient ring, twists and constants; no derivations or tails."""
    if p.is_quasi_commutative():
        return p
    key = "assoc"
    hit = p._memo.get(key)
    if hit is None:
        sigma = {i: EndoSpec(s.images, s.inverse_images) for i, s in enumerate(p.sigma)}
        hit = Presentation(p.name, p.base, p.var_names, sigma=sigma, c=dict(p.c), notes=p.notes)
        p._memo[key] = hit
    return hit


def _lift(f: SkewPoly, target: Presentation) -> SkewPoly:
    return SkewPoly(target, dict(f.terms), _clean=True)


def top_component(f: SkewPoly):
    """``(m, a_m)``: the degree and the top homogeneous part of ``f`` as an element of A^sigma."""
    if f.is_zero():
        raise NoLeadingTermError("the zero element has no top component")
    m = f.degree()
    return m, _lift(f.homogeneous_part(m), assoc_algebra(f.alg))


def check_gr_mult(p: Presentation, a: SkewPoly, b: SkewPoly) -> bool:
    """Multiplicativity of the top-component map on homogeneous ``a`` and ``b``.

    When the product keeps degree ``l + m`` its top part must equal the
    A^sigma product; when it drops, the A^sigma product must vanish.
    """
    a, b = p.coerce(a), p.coerce(b)
    if not (a.is_homogeneous() and b.is_homogeneous()):
        raise ValueError("check_gr_mult needs homogeneous arguments")
    A = assoc_algebra(p)
    graded = _lift(a, A) * _lift(b, A)
    if a.is_zero() or b.is_zero():
        return graded.is_zero()
    prod = a * b
    want = a.degree() + b.degree()
    if prod.degree() == want:
        return top_component(prod)[1] == graded
    return graded.is_zero()


@dataclass(frozen=True)
class TowerStep:
    """``theta_j``: ``sigma_j`` on R and ``z_i -> c_ij z_i`` for ``i < j`` (0-based indices).

    ``extension`` is the presentation of ``R[z_1;theta_1]...[z_j;theta_j]`` built
    from this step.  The inverse data is present when ``sigma_j`` has a declared
    inverse and every ``c_ij`` is a unit.
    """

    index: int
    theta_on_ring: EndoSpec
    theta_on_vars: dict
    inverse_on_ring: EndoSpec | None
    inverse_on_vars: dict | None
    extension: Presentation


def tower(p: Presentation) -> list[TowerStep]:
    """The iterated Ore extensions of endomorphism type realizing a quasi-commutative ``p``."""
    if not p.is_quasi_commutative():
        raise UnsupportedError(f"{p.name} is not quasi-commutative; apply assoc_algebra first")
    steps = []
    level = p.base
    ring_gens = p.coefficient_generators()
    for j, name in enumerate(p.var_names):
        s = p.sigma[j]
        on_vars = {i: p.c[(i, j)] for i in range(j)}
        inv_vars = None
        inv_ring = None
        if s.has_inverse() and all(p.base.try_invert(v) is not None for v in on_vars.values()):
            inv_ring = s.inverse()
            inv_vars = {i: p.sigma_inv_apply(j, v.invert()) for i, v in on_vars.items()}
        images = {g: level.coerce(p.sigma_apply(j, p.base.gen(g))) for g in ring_gens if g in s.images}
        if j:
            for i, c in on_vars.items():
                images[p.var_names[i]] = level.coerce(c) * level.gen(p.var_names[i])
        inverse = None
        if inv_ring is not None:
            inverse = {g: level.coerce(p.sigma_inv_apply(j, p.base.gen(g))) for g in ring_gens if g in s.images}
            if j:
                for i, c in inv_vars.items():
                    inverse[p.var_names[i]] = level.coerce(c) * level.gen(p.var_names[i])
        ext = Presentation(f"{p.name}_tower{j + 1}", level, [name], sigma={0: EndoSpec(images, inverse)})
        steps.append(TowerStep(j, s, on_vars, inv_ring, inv_vars, ext))
        level = ext
    return steps


def tower_roundtrip(step: TowerStep) -> list[str]:
    """Generators on which ``theta_j`` and its inverse fail to compose to the identity."""
    if step.inverse_on_ring is None:
        return ["no inverse"]
    return _inverse_problems(step.extension, 0)


def tower_constraints(p: Presentation) -> list[tuple]:
    """Triples ``i < j < k`` violating ``c_jk sigma_j(c_ik) c_ij = sigma_k(c_ij) c_ik sigma_i(c_jk)``.

    These are the conditions for each ``theta_k`` to be a ring endomorphism of
    the previous level.  An empty list means they all hold.
    """
    bad = []
    n = p.nvars
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                lhs = p.c[(j, k)] * p.sigma_apply(j, p.c[(i, k)]) * p.c[(i, j)]
                rhs = p.sigma_apply(k, p.c[(i, j)]) * p.c[(i, k)] * p.sigma_apply(i, p.c[(j, k)])
                if lhs != rhs:
                    bad.append((i, j, k))
    return bad
