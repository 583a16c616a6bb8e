"""Skew quantum polynomials: a quasi-commutative bijective core with the first r variables inverted.

Elements are :class:`SkewPoly` values over a :class:`QuantumPresentation` whose
exponent vectors may be negative in the first ``r`` entries.  Since the core has
no derivations or tails, a product of two terms is always a single term.
"""
from __future__ import annotations

from .coeff import NotAUnitError, Ring
from .poly import AlgebraMismatchError, SkewPoly, format_terms
from .presentation import Presentation

__all__ = [
    "QuantumPresentation",
    "QuantumDomainError",
    "qmul",
    "invert_term",
    "ore_left_witness",
    "ore_right_witness",
]


class QuantumDomainError(ValueError):
    """A negative exponent on a variable that is not inverted, or a term outside S."""


class QuantumPresentation:
    """``R_{q,sigma}[x_1^{+-1}, ..., x_r^{+-1}, x_{r+1}, ..., x_n]`` over a quasi-commutative core."""

    is_commutative = False
    is_field = False

    def __init__(self, core: Presentation, r: int):
        if not isinstance(core, Presentation):
            raise TypeError("the core must be a Presentation")
        if isinstance(core.base, Presentation):
            raise ValueError("the core of a quantum presentation must have a commutative coefficient ring")
        if not core.is_quasi_commutative():
            raise ValueError(f"{core.name} is not quasi-commutative; it cannot be localized here")
        if not core.is_bijective():
            raise ValueError(f"{core.name} is not bijective (missing or failing inverse twists, or non-unit constants)")
        if not 0 <= r <= core.nvars:
            raise ValueError(f"number of invertible variables must be in [0, {core.nvars}], got {r}")
        self.core = core
        self.r = r
        self.name = core.name
        self.base: Ring = core.base
        self.var_names = core.var_names
        self.nvars = core.nvars
        self._key = ("quantum", core._key, r)
        self._hash = hash(self._key)
        self._memo: dict = {}
        self.zero = SkewPoly(self, {}, _clean=True)
        self.one = SkewPoly(self, {(0,) * self.nvars: self.base.one}, _clean=True)

    def __eq__(self, other):
        return self is other or (isinstance(other, QuantumPresentation) and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"QuantumPresentation({self.name!r}, r={self.r})"

    @property
    def ring(self) -> Ring:
        return self.base

    def q(self, i: int, j: int):
        """``q_ij`` with ``x_j x_i = q_ij x_i x_j``; ``q_ii = 1`` and ``q_ji = q_ij^-1``."""
        if i == j:
            return self.base.one
        if i < j:
            return self.core.c[(i, j)]
        return self.core.c[(j, i)].invert()

    def q_matrix(self) -> list:
        return [[self.q(i, j) for j in range(self.nvars)] for i in range(self.nvars)]

    # -- coefficient-domain interface ------------------------------------
    def generator_names(self):
        return self.base.generator_names() + self.var_names

    def var(self, name) -> SkewPoly:
        i = name if isinstance(name, int) else self.core.var_index(name)
        e = [0] * self.nvars
        e[i] = 1
        return SkewPoly(self, {tuple(e): self.base.one}, _clean=True)

    def gen(self, name: str) -> SkewPoly:
        if name in self.var_names:
            return self.var(name)
        return self.coerce(self.base.gen(name))

    def monomial(self, exps, coeff=None) -> SkewPoly:
        exps = self._check(exps)
        c = self.base.one if coeff is None else self.base.coerce(coeff)
        return SkewPoly(self, {exps: c})

    def coerce(self, value) -> SkewPoly:
        if isinstance(value, SkewPoly):
            if value.alg == self:
                return value
            if value.alg == self.core:
                return SkewPoly(self, dict(value.terms), _clean=True)
            raise AlgebraMismatchError(f"cannot coerce an element of {value.alg.name} into {self.name}")
        if isinstance(value, str):
            from .dsl import parse_expr

            return parse_expr(value, self)
        return SkewPoly(self, {(0,) * self.nvars: self.base.coerce(value)})

    def __call__(self, value) -> SkewPoly:
        return self.coerce(value)

    def try_invert(self, value):
        f = self.coerce(value)
        if len(f.terms) != 1:
            return None
        (alpha, r), = f.terms.items()
        if any(alpha[self.r:]):
            return None
        try:
            return invert_term(self, r, alpha)
        except (NotAUnitError, QuantumDomainError):
            return None

    def mul(self, f: SkewPoly, g: SkewPoly) -> SkewPoly:
        return qmul(f, g)

    def format_terms(self, items) -> str:
        return format_terms(self.var_names, items)

    # -- helpers ---------------------------------------------------------------
    def _check(self, alpha) -> tuple:
        alpha = tuple(int(e) for e in alpha)
        if len(alpha) != self.nvars:
            raise ValueError(f"exponent vector {alpha} has length {len(alpha)}, expected {self.nvars}")
        for k in range(self.r, self.nvars):
            if alpha[k] < 0:
                raise QuantumDomainError(f"negative exponent on {self.var_names[k]}, which is not invertible")
        return alpha

    def sigma_signed(self, i: int, e: int, x):
        """``sigma_i^e(x)`` for any integer ``e``."""
        core = self.core
        for _ in range(abs(e)):
            x = core.sigma_apply(i, x) if e > 0 else core.sigma_inv_apply(i, x)
        return x

    def sigma_power(self, alpha, x):
        """``sigma_1^a1 o ... o sigma_n^an`` for signed ``alpha`` (``sigma_n`` first)."""
        for i in range(self.nvars - 1, -1, -1):
            if alpha[i]:
                x = self.sigma_signed(i, alpha[i], x)
        return x

    def sigma_power_inverse(self, alpha, x):
        """The inverse of :meth:`sigma_power` (``sigma_1^-a1`` first)."""
        for i in range(self.nvars):
            if alpha[i]:
                x = self.sigma_signed(i, -alpha[i], x)
        return x

    def _swap(self, big: int, t: int, small: int, s: int):
        """``w`` with ``x_big^t x_small^s = w x_small^s x_big^t`` for ``t, s`` in {1, -1}."""
        key = ("swap", big, t, small, s)
        hit = self._memo.get(key)
        if hit is None:
            q = self.core.c[(small, big)]
            if t > 0 and s > 0:
                hit = q
            elif t > 0:
                hit = self.sigma_signed(small, -1, q).invert()
            elif s > 0:
                hit = self.sigma_signed(big, -1, q).invert()
            else:
                hit = self.sigma_signed(small, -1, self.sigma_signed(big, -1, q))
            self._memo[key] = hit
        return hit

    def c_ab(self, alpha: tuple, beta: tuple):
        """The unit with ``x^alpha x^beta = c_ab x^(alpha+beta)``."""
        key = ("c", alpha, beta)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        coef = self.base.one
        cur = list(alpha)
        for k in range(self.nvars):
            e = beta[k]
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                # move one letter x_k^step left through the part of cur after index k
                lam = self.base.one
                for j in range(self.nvars - 1, k, -1):
                    a = cur[j]
                    if not a:
                        continue
                    sj = 1 if a > 0 else -1
                    for _ in range(abs(a)):
                        lam = self.sigma_signed(j, sj, lam) * self._swap(j, sj, k, step)
                prefix = tuple(cur[: k + 1]) + (0,) * (self.nvars - k - 1)
                coef = coef * self.sigma_power(prefix, lam)
                cur[k] += step
        self._memo[key] = coef
        return coef


def qmul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product in the skew quantum polynomial ring (every term product is a single term)."""
    qp = f.alg
    if not isinstance(qp, QuantumPresentation) or g.alg != qp:
        raise AlgebraMismatchError("qmul needs two elements of the same quantum presentation")
    out: dict = {}
    for a, ca in f.terms.items():
        qp._check(a)
        for b, cb in g.terms.items():
            qp._check(b)
            coef = ca * qp.sigma_power(a, cb) * qp.c_ab(a, b)
            k = tuple(x + y for x, y in zip(a, b))
            cur = out.get(k)
            if cur is None:
                out[k] = coef
            else:
                s = cur + coef
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
    return SkewPoly(qp, out, _clean=True)


def _in_s(qp: QuantumPresentation, r, alpha, allow_negative: bool):
    alpha = qp._check(alpha)
    if any(alpha[qp.r:]):
        raise QuantumDomainError(f"x^{alpha} involves variables that are not inverted")
    if not allow_negative and any(e < 0 for e in alpha):
        raise QuantumDomainError(f"exponent {alpha} must be nonnegative for an element of S")
    r = qp.base.coerce(r)
    rinv = qp.base.try_invert(r)
    if rinv is None:
        raise NotAUnitError(f"{r} is not a unit of {qp.base.descriptor()}")
    return r, rinv, alpha


def invert_term(qp: QuantumPresentation, r, alpha) -> SkewPoly:
    """Two-sided inverse of ``r x^alpha``: ``(sigma^alpha)^-1(r^-1) (x^alpha)^-1``."""
    r, rinv, alpha = _in_s(qp, r, alpha, allow_negative=True)
    n = qp.nvars
    # (x^alpha)^-1 = x_n^-an ... x_1^-a1
    word_inv = qp.one
    for i in range(n - 1, -1, -1):
        if alpha[i]:
            e = tuple(-alpha[i] if k == i else 0 for k in range(n))
            word_inv = word_inv * SkewPoly(qp, {e: qp.base.one}, _clean=True)
    lead = qp.sigma_power_inverse(alpha, rinv)
    inv = SkewPoly(qp, {k: lead * v for k, v in word_inv.terms.items()}, _clean=True)
    term = SkewPoly(qp, {alpha: r}, _clean=True)
    if qmul(inv, term) != qp.one or qmul(term, inv) != qp.one:
        raise ArithmeticError(f"inverse of {term} failed verification")
    return inv


def ore_left_witness(qp: QuantumPresentation, f, r, alpha) -> SkewPoly:
    """``g`` with ``g * (r x^alpha) = x^alpha * f``.

    ``g = sum d_i x^b_i`` with ``d_i = sigma^alpha(c_i) c_{alpha,b_i} c_{b_i,alpha}^-1 sigma^b_i(r^-1)``.
    """
    f = qp.coerce(f)
    r, rinv, alpha = _in_s(qp, r, alpha, allow_negative=False)
    out = {}
    for b, ci in f.terms.items():
        d = qp.sigma_power(alpha, ci) * qp.c_ab(alpha, b) * qp.c_ab(b, alpha).invert() * qp.sigma_power(b, rinv)
        out[b] = d
    g = SkewPoly(qp, out)
    s = SkewPoly(qp, {alpha: r}, _clean=True)
    xa = SkewPoly(qp, {alpha: qp.base.one}, _clean=True)
    if qmul(g, s) != qmul(xa, f):
        raise ArithmeticError("left Ore witness failed verification")
    return g


def ore_right_witness(qp: QuantumPresentation, f, r, alpha) -> SkewPoly:
    """``g`` with ``(r x^alpha) * g = f * x^alpha``, solved termwise and verified.

    ``d_i = sigma^-alpha(r^-1 c_i c_{b_i,alpha} c_{alpha,b_i}^-1)``.
    """
    f = qp.coerce(f)
    r, rinv, alpha = _in_s(qp, r, alpha, allow_negative=False)
    out = {}
    for b, ci in f.terms.items():
        inner = rinv * ci * qp.c_ab(b, alpha) * qp.c_ab(alpha, b).invert()
        out[b] = qp.sigma_power_inverse(alpha, inner)
    g = SkewPoly(qp, out)
    s = SkewPoly(qp, {alpha: r}, _clean=True)
    xa = SkewPoly(qp, {alpha: qp.base.one}, _clean=True)
    if qmul(s, g) != qmul(f, xa):
        raise ArithmeticError("right Ore witness failed verification")
    return g
