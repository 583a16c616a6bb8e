"""Presentations of skew PBW extensions and their consistency checks.

A presentation stores, for variables ``x_1..x_n`` over a coefficient ring R,
the twists ``sigma_i`` and ``sigma_i``-derivations ``delta_i`` with
``x_i r = sigma_i(r) x_i + delta_i(r)``, and for ``i < j`` the constants and
affine tails of ``x_j x_i = c_ij x_i x_j + d_ij``.

R is either a commutative ring of the coefficient tower or another
presentation (nesting), in which case coefficients are themselves
:class:`~skewpbw.poly.SkewPoly` elements and the generators of R include the
inner variables.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .coeff import (
    LaurentRing,
    NotAUnitError,
    PolynomialRing,
    RationalField,
    RationalFunctionField,
    Ring,
    RingElem,
)
from .poly import SkewPoly, format_terms

__all__ = [
    "EndoSpec",
    "DerivSpec",
    "AffineTail",
    "Presentation",
    "ValidationReport",
    "InvalidSpecError",
    "UnsupportedNestingError",
    "UnsupportedError",
    "substitute",
    "apply_endo",
    "apply_deriv",
    "validate",
    "check_confluence",
    "flatten",
]


class InvalidSpecError(ValueError):
    """A twist or derivation specification does not define a map on R."""


class UnsupportedNestingError(ValueError):
    """A nested presentation cannot be rewritten over the innermost ring."""


class UnsupportedError(ValueError):
    """An operation needs a hypothesis (usually bijectivity) the presentation lacks."""


# ----------------------------------------------------------------------
# specs


class EndoSpec:
    """Images of the generators of R under a ring endomorphism.

    Generators missing from ``images`` are fixed.  ``inverse_images``, when
    given, describes the inverse map; it is verified, never trusted.
    """

    def __init__(self, images: dict | None = None, inverse_images: dict | None = None):
        self.images = dict(images or {})
        self.inverse_images = None if inverse_images is None else dict(inverse_images)

    def is_identity(self) -> bool:
        return not self.images

    def has_inverse(self) -> bool:
        return self.inverse_images is not None or not self.images

    def inverse(self) -> EndoSpec:
        if not self.images:
            return EndoSpec({}, {})
        if self.inverse_images is None:
            raise UnsupportedError("no inverse given for this twist")
        return EndoSpec(self.inverse_images, self.images)

    def _normalized(self, domain) -> EndoSpec:
        imgs = {g: domain.coerce(v) for g, v in self.images.items()}
        imgs = {g: v for g, v in imgs.items() if not _is_generator(domain, g, v)}
        inv = None
        if self.inverse_images is not None:
            inv = {g: domain.coerce(v) for g, v in self.inverse_images.items()}
            inv = {g: v for g, v in inv.items() if not _is_generator(domain, g, v)}
        if not imgs:
            inv = {}
        return EndoSpec(imgs, inv)

    def key(self):
        inv = None if self.inverse_images is None else tuple(sorted(self.inverse_images.items(), key=lambda kv: kv[0]))
        return (tuple(sorted(self.images.items(), key=lambda kv: kv[0])), inv)

    def image(self, domain, name):
        v = self.images.get(name)
        return domain.gen(name) if v is None else v


def _is_generator(domain, name, value) -> bool:
    try:
        return value == domain.gen(name)
    except KeyError:
        return False


class DerivSpec:
    """Images of the generators of R under a sigma-derivation; missing ones map to 0."""

    def __init__(self, images: dict | None = None):
        self.images = dict(images or {})

    def is_zero(self) -> bool:
        return not self.images

    def _normalized(self, domain) -> DerivSpec:
        imgs = {g: domain.coerce(v) for g, v in self.images.items()}
        return DerivSpec({g: v for g, v in imgs.items() if not v.is_zero()})

    def key(self):
        return tuple(sorted(self.images.items(), key=lambda kv: kv[0]))

    def image(self, domain, name):
        v = self.images.get(name)
        return domain.zero if v is None else v


@dataclass
class AffineTail:
    """An element ``constant + sum_k linear[k] * x_k`` of R + R x_1 + ... + R x_n."""

    constant: object = None
    linear: dict = field(default_factory=dict)

    def is_zero(self) -> bool:
        return (self.constant is None or self.constant.is_zero()) and not self.linear

    def _normalized(self, domain) -> AffineTail:
        const = domain.zero if self.constant is None else domain.coerce(self.constant)
        lin = {int(k): domain.coerce(v) for k, v in self.linear.items()}
        return AffineTail(const, {k: v for k, v in sorted(lin.items()) if not v.is_zero()})

    def key(self):
        return (self.constant, tuple(sorted(self.linear.items())))


# ----------------------------------------------------------------------
# homomorphisms and derivations on the coefficient domain


def substitute(r, images, target):
    """Image of ``r`` under the homomorphism sending each generator ``g`` to ``images(g)``."""
    if isinstance(r, RingElem):
        return r.ring._subst(r.v, images, target)
    if isinstance(r, SkewPoly):
        alg = r.alg
        acc = target.zero
        powers: dict = {}
        for exps, c in r.terms.items():
            term = substitute(c, images, target)
            for name, e in zip(alg.var_names, exps):
                if e:
                    key = (name, e)
                    val = powers.get(key)
                    if val is None:
                        img = images(name)
                        val = img ** e if e > 0 else _inverse_in(target, img) ** (-e)
                        powers[key] = val
                    term = term * val
            acc = acc + term
        return acc
    return target.coerce(r)


def _inverse_in(domain, x):
    inv = domain.try_invert(x)
    if inv is None:
        raise InvalidSpecError(f"{x} must be a unit")
    return inv


def apply_endo(spec: EndoSpec, r, domain=None):
    """Apply the endomorphism described by ``spec`` to ``r``."""
    if domain is None:
        domain = _domain_of(r)
    r = domain.coerce(r)
    if spec.is_identity():
        return r
    try:
        return substitute(r, lambda g: spec.image(domain, g), domain)
    except NotAUnitError as exc:
        raise InvalidSpecError(str(exc)) from exc


def _domain_of(r):
    if isinstance(r, RingElem):
        return r.ring
    if isinstance(r, SkewPoly):
        return r.alg
    raise TypeError(f"cannot infer the ring of {r!r}")


def apply_deriv(dspec: DerivSpec, sspec: EndoSpec, r, domain=None):
    """Apply the ``sigma``-derivation with generator images ``dspec`` to ``r``.

    Extended by ``delta(ab) = sigma(a) delta(b) + delta(a) b`` and
    ``delta(u^-1) = -sigma(u)^-1 delta(u) u^-1``.
    """
    if domain is None:
        domain = _domain_of(r)
    r = domain.coerce(r)
    if dspec.is_zero():
        return domain.zero
    return _Deriv(dspec, sspec, domain)(r)


class _Deriv:
    def __init__(self, dspec, sspec, domain):
        self.d = dspec
        self.s = sspec
        self.D = domain
        self.cache: dict = {}

    def sigma(self, x):
        return apply_endo(self.s, x, self.D)

    def __call__(self, r):
        D = self.D
        if isinstance(r, RingElem):
            return self._ring(r)
        acc = D.zero
        alg = r.alg
        for exps, c in r.terms.items():
            letters = [(name, 1) for name, e in zip(alg.var_names, exps) for _ in range(e)]
            dw = self._word(letters)
            if not dw.is_zero():
                acc = acc + self.sigma(c) * dw
            dc = self(c)
            if not dc.is_zero():
                acc = acc + dc * D.coerce(SkewPoly(alg, {exps: alg.base.one}, _clean=True))
        return acc

    def _letter(self, name, sign):
        key = (name, sign)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        D = self.D
        g = D.gen(name)
        sg = self.s.image(D, name)
        dg = self.d.image(D, name)
        if sign > 0:
            out = (g, sg, dg)
        else:
            ginv = _inverse_in(D, g)
            sginv = _inverse_in(D, sg)
            out = (ginv, sginv, -(sginv * dg * ginv))
        self.cache[key] = out
        return out

    def _word(self, letters):
        D = self.D
        s_acc = D.one
        d_acc = D.zero
        for name, sign in letters:
            g, sg, dg = self._letter(name, sign)
            d_acc = s_acc * dg + d_acc * g
            s_acc = s_acc * sg
        return d_acc

    def _ring(self, r: RingElem):
        D = self.D
        T = r.ring
        if r.is_zero() or isinstance(T, RationalField):
            return D.zero
        if isinstance(T, RationalFunctionField):
            num, den = T.numerator_denominator(r)
            dn = self._frac_poly(T, num.v[0])
            if den.is_one():
                return dn
            dd = self._frac_poly(T, den.v[0])
            den_inv = _inverse_in(D, D.coerce(den))
            sden_inv = _inverse_in(D, self.sigma(den))
            d_den_inv = -(sden_inv * dd * den_inv)
            return self.sigma(num) * d_den_inv + dn * den_inv
        if isinstance(T, PolynomialRing):
            acc = D.zero
            for exps, c in T.terms(r):
                letters = []
                for name, e in zip(T.gens, exps):
                    letters.extend([(name, 1 if e > 0 else -1)] * abs(e))
                mono = T.from_terms({exps: T.base.one})
                dw = self._word(letters)
                if not dw.is_zero():
                    acc = acc + self.sigma(c) * dw
                dc = self._ring(c)
                if not dc.is_zero():
                    acc = acc + dc * D.coerce(mono)
            return acc
        raise TypeError(f"unsupported ring {T!r}")

    def _frac_poly(self, T, poly):
        from .coeff import _mpq_to_fraction

        D = self.D
        acc = D.zero
        for monom, c in poly.terms():
            letters = []
            for name, e in zip(T.gens, monom):
                letters.extend([(name, 1)] * e)
            dw = self._word(letters)
            if not dw.is_zero():
                acc = acc + D.coerce(_mpq_to_fraction(c)) * dw
        return acc


# ----------------------------------------------------------------------
# presentation


class Presentation:
    """A skew PBW extension ``sigma(R)<x_1, ..., x_n>``.

    ``sigma`` and ``delta`` map variable names (or indices) to specs; ``c`` and
    ``tails`` are keyed by 0-based index pairs ``(i, j)`` with ``i < j`` and
    describe ``x_j x_i = c[i, j] x_i x_j + tails[i, j]``.
    """

    def __init__(self, name, base, var_names, sigma=None, delta=None, c=None, tails=None, notes=""):
        if not var_names:
            raise ValueError("a presentation needs at least one variable")
        self.name = name
        self.base = base
        self.var_names = tuple(var_names)
        self.nvars = len(self.var_names)
        self.notes = notes
        taken = set(base.generator_names())
        if len(set(self.var_names)) != self.nvars or taken & set(self.var_names):
            raise ValueError(f"variable names must be distinct from each other and from the generators of R: {self.var_names}")
        n = self.nvars
        self.sigma = [self._spec_for(sigma, i, EndoSpec)._normalized(base) for i in range(n)]
        self.delta = [self._spec_for(delta, i, DerivSpec)._normalized(base) for i in range(n)]
        self.c = {}
        for i, j in itertools.combinations(range(n), 2):
            val = (c or {}).get((i, j))
            self.c[(i, j)] = base.one if val is None else base.coerce(val)
        self.tails = {}
        for (i, j), t in (tails or {}).items():
            if not 0 <= i < j < n:
                raise ValueError(f"tail index pair {(i, j)} must satisfy 0 <= i < j < {n}")
            if isinstance(t, AffineTail):
                t = t._normalized(base)
            else:
                t = AffineTail(t, {})._normalized(base)
            if any(not 0 <= k < n for k in t.linear):
                raise ValueError(f"tail of {(i, j)} refers to a variable index out of range")
            if not t.is_zero():
                self.tails[(i, j)] = t
        for key in (c or {}):
            if key not in self.c:
                raise ValueError(f"constant index pair {key} must satisfy i < j")
        self._key = (
            "pres",
            name,
            base._key,
            self.var_names,
            tuple(s.key() for s in self.sigma),
            tuple(d.key() for d in self.delta),
            tuple(sorted(self.c.items())),
            tuple(sorted((k, t.key()) for k, t in self.tails.items())),
        )
        self._hash = hash(self._key)
        self._memo: dict = {}
        self.zero = SkewPoly(self, {}, _clean=True)
        self.one = SkewPoly(self, {(0,) * n: base.one}, _clean=True)

    def _spec_for(self, table, i, kind):
        if not table:
            return kind()
        spec = table.get(i, table.get(self.var_names[i])) if isinstance(table, dict) else table[i]
        return kind() if spec is None else spec

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return self is other or (isinstance(other, Presentation) and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Presentation({self.name!r}, {self.descriptor()})"

    def descriptor(self) -> str:
        return f"{self.base_descriptor()}<{', '.join(self.var_names)}>"

    def base_descriptor(self) -> str:
        return f"({self.base.descriptor()})" if isinstance(self.base, Presentation) else self.base.descriptor()

    # -- structure --------------------------------------------------------
    @property
    def ring(self) -> Ring:
        """The innermost commutative coefficient ring."""
        return self.base.ring if isinstance(self.base, Presentation) else self.base

    @property
    def nested_base(self):
        return self.base if isinstance(self.base, Presentation) else None

    def var_index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def coefficient_generators(self) -> tuple[str, ...]:
        return self.base.generator_names()

    def tail(self, i: int, j: int) -> AffineTail | None:
        return self.tails.get((i, j))

    def is_quasi_commutative(self) -> bool:
        return all(d.is_zero() for d in self.delta) and not self.tails

    def is_bijective(self) -> bool:
        hit = self._memo.get("bijective")
        if hit is None:
            hit = all(self.base.try_invert(v) is not None for v in self.c.values()) and all(
                s.has_inverse() and not _inverse_problems(self, i) for i, s in enumerate(self.sigma)
            )
            self._memo["bijective"] = hit
        return hit

    # -- the presentation as a coefficient domain --------------------------
    is_commutative = False
    is_field = False

    def generator_names(self) -> tuple[str, ...]:
        return self.base.generator_names() + self.var_names

    def invertible_generators(self) -> tuple[str, ...]:
        return self.base.invertible_generators()

    def gen(self, name: str) -> SkewPoly:
        if name in self.var_names:
            return self.var(name)
        return self.coerce(self.base.gen(name))

    def var(self, name) -> SkewPoly:
        i = name if isinstance(name, int) else self.var_index(name)
        e = [0] * self.nvars
        e[i] = 1
        return SkewPoly(self, {tuple(e): self.base.one}, _clean=True)

    def monomial(self, exps, coeff=None) -> SkewPoly:
        c = self.base.one if coeff is None else self.base.coerce(coeff)
        return SkewPoly(self, {tuple(exps): c})

    def poly(self, terms: dict) -> SkewPoly:
        return SkewPoly(self, {tuple(k): self.base.coerce(v) for k, v in terms.items()})

    def coerce(self, value) -> SkewPoly:
        if isinstance(value, SkewPoly) and value.alg == self:
            return value
        if isinstance(value, str):
            from .dsl import parse_expr

            return parse_expr(value, self)
        c = self.base.coerce(value)
        return SkewPoly(self, {(0,) * self.nvars: c})

    def __call__(self, value) -> SkewPoly:
        return self.coerce(value)

    def try_invert(self, value):
        f = self.coerce(value)
        if len(f.terms) != 1 or not f.is_constant():
            return None
        inv = self.base.try_invert(f.constant_coeff())
        return None if inv is None else self.coerce(inv)

    def mul(self, f: SkewPoly, g: SkewPoly) -> SkewPoly:
        from .engine import mul_terms

        if f.alg != self or g.alg != self:
            from .poly import AlgebraMismatchError

            raise AlgebraMismatchError("polynomials belong to different algebras")
        return SkewPoly(self, mul_terms(self, f.terms, g.terms), _clean=True)

    def format_terms(self, items) -> str:
        return format_terms(self.var_names, items)

    # -- twists and derivations (memoized) ---------------------------------
    def sigma_apply(self, i: int, r):
        spec = self.sigma[i]
        if spec.is_identity():
            return r
        key = ("s", i, r)
        hit = self._memo.get(key)
        if hit is None:
            hit = apply_endo(spec, r, self.base)
            self._memo[key] = hit
        return hit

    def sigma_inv_apply(self, i: int, r):
        spec = self.sigma[i]
        if spec.is_identity():
            return r
        key = ("si", i, r)
        hit = self._memo.get(key)
        if hit is None:
            if spec.inverse_images is None:
                raise UnsupportedError(f"twist of {self.var_names[i]} has no inverse")
            hit = apply_endo(spec.inverse(), r, self.base)
            self._memo[key] = hit
        return hit

    def delta_apply(self, i: int, r):
        spec = self.delta[i]
        if spec.is_zero():
            return self.base.zero
        key = ("d", i, r)
        hit = self._memo.get(key)
        if hit is None:
            hit = apply_deriv(spec, self.sigma[i], r, self.base)
            self._memo[key] = hit
        return hit


def _inverse_problems(p: Presentation, i: int) -> list[str]:
    """Generators on which the declared inverse of sigma_i fails to round-trip."""
    spec = p.sigma[i]
    if spec.is_identity():
        return []
    if spec.inverse_images is None:
        return ["no inverse"]
    inv = spec.inverse()
    bad = []
    for g in p.coefficient_generators():
        x = p.base.gen(g)
        try:
            if apply_endo(spec, apply_endo(inv, x, p.base), p.base) != x or apply_endo(
                inv, apply_endo(spec, x, p.base), p.base
            ) != x:
                bad.append(g)
        except (InvalidSpecError, NotAUnitError):
            bad.append(g)
    return bad


# ----------------------------------------------------------------------
# reports


@dataclass
class ValidationReport:
    ok: bool = True
    findings: list = field(default_factory=list)
    confluence_degree: int | None = None
    checks: int = 0

    def add(self, severity: str, location: str, message: str) -> None:
        self.findings.append((severity, location, message))
        if severity == "error":
            self.ok = False

    def extend(self, other: ValidationReport, prefix: str = "") -> None:
        for sev, loc, msg in other.findings:
            self.add(sev, prefix + loc, msg)
        self.checks += other.checks

    def errors(self) -> list:
        return [f for f in self.findings if f[0] == "error"]

    def render(self, fmt: str = "text", title: str = "") -> str:
        if fmt == "records":
            lines = [
                f"severity={sev} location={loc} message={json.dumps(msg, ensure_ascii=False)}"
                for sev, loc, msg in self.findings
            ]
            deg = "none" if self.confluence_degree is None else str(self.confluence_degree)
            lines.append(f"result ok={'true' if self.ok else 'false'} confluence_degree={deg} checks={self.checks}")
            return "\n".join(lines)
        head = f"{title}: " if title else ""
        lines = [head + ("ok" if self.ok else "FAILED")]
        for sev, loc, msg in self.findings:
            lines.append(f"  [{sev}] {loc}: {msg}")
        if self.confluence_degree is not None:
            lines.append(f"  overlaps checked up to degree {self.confluence_degree} ({self.checks} checks; a pass is evidence, not a proof of the basis property)")
        return "\n".join(lines)


def validate(p: Presentation) -> ValidationReport:
    """Structural checks of the presentation data (no overlap computations)."""
    rep = ValidationReport()
    if isinstance(p.base, Presentation):
        rep.extend(validate(p.base), "base/")
    gens = set(p.coefficient_generators())
    units = _unit_generators(p.base)
    for i, name in enumerate(p.var_names):
        spec = p.sigma[i]
        for g in list(spec.images) + list(spec.inverse_images or {}):
            if g not in gens:
                rep.add("error", f"sigma[{name}]", f"{g!r} is not a generator of the coefficient ring")
        for g in units:
            img = spec.image(p.base, g)
            if p.base.try_invert(img) is None:
                rep.add("error", f"sigma[{name}]", f"image of the unit {g} must be a unit, got {img}")
        if not spec.is_identity():
            if spec.inverse_images is None:
                rep.add("warning", f"sigma[{name}]", "no inverse given; bijectivity not certified")
            else:
                bad = _inverse_problems(p, i)
                if bad:
                    rep.add("error", f"sigma[{name}]", f"declared inverse does not round-trip on {', '.join(bad)}")
        for g in p.delta[i].images:
            if g not in gens:
                rep.add("error", f"delta[{name}]", f"{g!r} is not a generator of the coefficient ring")
    for (i, j), cij in sorted(p.c.items()):
        loc = f"c[{p.var_names[i]},{p.var_names[j]}]"
        if cij.is_zero():
            rep.add("error", loc, "constant must be nonzero")
        elif p.base.try_invert(cij) is None:
            rep.add("warning", loc, f"{cij} is not a unit; the extension is not bijective")
    rep.add(
        "info",
        "structure",
        f"bijective={'true' if p.is_bijective() else 'false'} quasi-commutative={'true' if p.is_quasi_commutative() else 'false'}",
    )
    return rep


def _unit_generators(domain) -> list[str]:
    """Generators of the coefficient domain that are units (field and Laurent generators)."""
    out = []
    ring = domain.ring if isinstance(domain, Presentation) else domain
    for level in ring.tower():
        if isinstance(level, (RationalFunctionField, LaurentRing)):
            out.extend(level.gens)
    return out


def _words(n: int, length: int):
    """Non-increasing index words with at least one strict descent."""
    for w in itertools.combinations_with_replacement(range(n - 1, -1, -1), length):
        if w[0] != w[-1]:
            yield w


def check_confluence(p: Presentation, degree_bound: int = 4) -> ValidationReport:
    """Compare both reduction orders on the overlaps of the rewriting rules.

    Checks every triple ``x_k x_j x_i`` and longer descending words up to the
    bound, words times a coefficient generator, and each variable times a pair
    of coefficient generators.  Any mismatch is an error finding carrying both
    normal forms.
    """
    if degree_bound < 3:
        raise ValueError("degree_bound must be at least 3")
    rep = ValidationReport(confluence_degree=degree_bound)
    if isinstance(p.base, Presentation):
        rep.extend(check_confluence(p.base, degree_bound), "base/")
    names = p.var_names
    xs = [p.var(i) for i in range(p.nvars)]

    def word_text(w):
        return "*".join(names[k] for k in w)

    def compare(loc, left, right):
        rep.checks += 1
        if left != right:
            rep.add("error", loc, f"reductions disagree: {left}  vs  {right}")

    for length in range(3, degree_bound + 1):
        for w in _words(p.nvars, length):
            if length > 3 and len(set(w)) < 3 and p.nvars >= 3:
                continue
            left = xs[w[0]]
            for k in w[1:]:
                left = left * xs[k]
            right = xs[w[-1]]
            for k in reversed(w[:-1]):
                right = xs[k] * right
            compare(f"overlap {word_text(w)}", left, right)

    gens = []
    for g in p.coefficient_generators():
        gens.append((g, p.base.gen(g)))
    for g in p.invertible_generators():
        gens.append((g + "^-1", p.base.gen(g).invert()))
    rs = [(g, p.coerce(v)) for g, v in gens]

    for length in range(2, degree_bound):
        for w in _words(p.nvars, length):
            prod = xs[w[0]]
            for k in w[1:]:
                prod = prod * xs[k]
            for g, r in rs:
                left = prod * r
                right = r
                for k in reversed(w):
                    right = xs[k] * right
                compare(f"overlap {word_text(w)}*{g}", left, right)

    for i in range(p.nvars):
        for (g1, r1), (g2, r2) in itertools.product(rs, repeat=2):
            compare(f"twist {names[i]}*{g1}*{g2}", (xs[i] * r1) * r2, xs[i] * (r1 * r2))
    return rep


# ----------------------------------------------------------------------
# flattening nested presentations


def flatten(p: Presentation) -> Presentation:
    """Rewrite a nested presentation over the innermost commutative ring.

    Requires the inner presentation to be quasi-commutative and bijective and
    every outer twist, derivation, constant and tail to stay affine over the
    innermost ring once the inner variables are promoted to variables.
    """
    inner = p.nested_base
    if inner is None:
        return p
    inner = flatten(inner)
    if not inner.is_quasi_commutative():
        raise UnsupportedNestingError(
            f"inner presentation {inner.name} is not quasi-commutative; its relations cannot be merged"
        )
    if not inner.is_bijective():
        raise UnsupportedNestingError(f"inner presentation {inner.name} is not bijective")
    R = inner.base
    m = inner.nvars
    names = inner.var_names + p.var_names

    def as_ring(x, what):
        x = inner.coerce(x)
        if not x.is_constant():
            raise UnsupportedNestingError(f"{what} = {x} involves inner variables")
        return x.constant_coeff()

    def as_affine(x, what):
        """(constant, {k: coeff}) of an inner element of degree <= 1."""
        x = inner.coerce(x)
        const = R.zero
        lin = {}
        for exps, cf in x.terms.items():
            d = sum(exps)
            if d == 0:
                const = cf
            elif d == 1:
                lin[exps.index(1)] = cf
            else:
                raise UnsupportedNestingError(f"{what} = {x} is not affine in the inner variables")
        return const, lin

    sigma = {}
    delta = {}
    c = dict(((i, j), v) for (i, j), v in inner.c.items())
    tails = {k: AffineTail(t.constant, dict(t.linear)) for k, t in inner.tails.items()}
    for i, s in enumerate(inner.sigma):
        sigma[i] = EndoSpec(dict(s.images), None if s.inverse_images is None else dict(s.inverse_images))
    ring_gens = R.generator_names()
    for a, xname in enumerate(p.var_names):
        idx = m + a
        s = p.sigma[a]
        d = p.delta[a]
        imgs, inv_imgs = {}, {}
        inv_spec = s.inverse() if s.has_inverse() else None
        for g in ring_gens:
            if g in s.images:
                imgs[g] = as_ring(s.images[g], f"sigma[{xname}]({g})")
            if inv_spec is not None and g in inv_spec.images:
                inv_imgs[g] = as_ring(inv_spec.images[g], f"sigma^-1[{xname}]({g})")
        dimgs = {}
        for g in ring_gens:
            if g in d.images:
                dimgs[g] = as_ring(d.images[g], f"delta[{xname}]({g})")
        sigma[idx] = EndoSpec(imgs, inv_imgs if inv_spec is not None else None)
        delta[idx] = DerivSpec(dimgs)
        for b, yname in enumerate(inner.var_names):
            img = inner.coerce(s.image(inner, yname))
            e = tuple(1 if k == b else 0 for k in range(m))
            if set(img.terms) != {e}:
                raise UnsupportedNestingError(f"sigma[{xname}]({yname}) = {img} is not a multiple of {yname}")
            u = img.terms[e]
            if R.try_invert(u) is None:
                raise UnsupportedNestingError(f"sigma[{xname}]({yname}) scales by the non-unit {u}")
            c[(b, idx)] = u
            const, lin = as_affine(d.image(inner, yname), f"delta[{xname}]({yname})")
            if not const.is_zero() or lin:
                tails[(b, idx)] = AffineTail(const, lin)
    for (i, j), v in p.c.items():
        c[(m + i, m + j)] = as_ring(v, f"c[{p.var_names[i]},{p.var_names[j]}]")
    for (i, j), t in p.tails.items():
        const, lin = as_affine(t.constant, f"tail[{p.var_names[i]},{p.var_names[j]}]")
        for k, v in t.linear.items():
            lin[m + k] = as_ring(v, f"tail[{p.var_names[i]},{p.var_names[j]}] coefficient")
        tails[(m + i, m + j)] = AffineTail(const, lin)
    return Presentation(p.name, R, names, sigma=sigma, delta=delta, c=c, tails=tails, notes=p.notes)
