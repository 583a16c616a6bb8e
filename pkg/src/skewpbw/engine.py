"""Normal forms of products and the data attached to them.

Products are normalized by left-multiplying with one variable at a time:
``x_i`` is pushed past a coefficient with ``x_i r = sigma_i(r) x_i + delta_i(r)``
and sorted into a standard monomial with ``x_j x_i = c_ij x_i x_j + d_ij``,
recursing on the lower-degree terms spawned by the tails.  All intermediate
results are memoized on the presentation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import SkewPoly
from .presentation import Presentation, UnsupportedError

__all__ = [
    "PushResult",
    "ReorderResult",
    "RightPoly",
    "mul",
    "mul_terms",
    "sigma_power",
    "sigma_inv_power",
    "push_coeff",
    "reorder",
    "verify_identities",
    "right_expand",
]


def _acc(out: dict, terms: dict, coef=None) -> None:
    """In place ``out += coef * terms`` (coefficient on the left)."""
    for k, v in terms.items():
        if coef is not None:
            v = coef * v
            if v.is_zero():
                continue
        cur = out.get(k)
        if cur is None:
            out[k] = v
        else:
            s = cur + v
            if s.is_zero():
                del out[k]
            else:
                out[k] = s


def _bump(g: tuple, i: int, d: int) -> tuple:
    return g[:i] + (g[i] + d,) + g[i + 1:]


def var_times_mono(p: Presentation, i: int, g: tuple) -> dict:
    """Normal form of ``x_i * x^g``."""
    key = ("vm", i, g)
    hit = p._memo.get(key)
    if hit is not None:
        return hit
    j = next((k for k, e in enumerate(g) if e), None)
    if j is None or i <= j:
        out = {_bump(g, i, 1): p.base.one}
    else:
        rest = _bump(g, j, -1)
        out = {}
        # x_i x_j x^rest = c_ji x_j (x_i x^rest) + d_ji x^rest
        _acc(out, var_times_terms(p, j, var_times_mono(p, i, rest)), p.c[(j, i)])
        tail = p.tails.get((j, i))
        if tail is not None:
            if not tail.constant.is_zero():
                _acc(out, {rest: tail.constant})
            for k, r in tail.linear.items():
                _acc(out, var_times_mono(p, k, rest), r)
    p._memo[key] = out
    return out


def var_times_terms(p: Presentation, i: int, terms: dict) -> dict:
    """Normal form of ``x_i * f`` for ``f`` given as a term dictionary."""
    out: dict = {}
    for g, coef in terms.items():
        s = p.sigma_apply(i, coef)
        if not s.is_zero():
            _acc(out, var_times_mono(p, i, g), s)
        d = p.delta_apply(i, coef)
        if not d.is_zero():
            _acc(out, {g: d})
    return out


def _letters_times(p: Presentation, alpha: tuple, terms: dict) -> dict:
    for i in range(p.nvars - 1, -1, -1):
        for _ in range(alpha[i]):
            terms = var_times_terms(p, i, terms)
    return terms


def push_terms(p: Presentation, alpha: tuple, r) -> dict:
    """Normal form of ``x^alpha * r`` for a coefficient ``r``."""
    key = ("push", alpha, r)
    hit = p._memo.get(key)
    if hit is None:
        zero = (0,) * p.nvars
        hit = _letters_times(p, alpha, {zero: r}) if not r.is_zero() else {}
        p._memo[key] = hit
    return hit


def mono_times_mono(p: Presentation, alpha: tuple, beta: tuple) -> dict:
    """Normal form of ``x^alpha * x^beta``."""
    key = ("mm", alpha, beta)
    hit = p._memo.get(key)
    if hit is None:
        if not any(alpha):
            hit = {beta: p.base.one}
        else:
            hit = _letters_times(p, alpha, {beta: p.base.one})
        p._memo[key] = hit
    return hit


def mul_terms(p: Presentation, f: dict, g: dict) -> dict:
    out: dict = {}
    for a, ca in f.items():
        for b, cb in g.items():
            for gamma, s in push_terms(p, a, cb).items():
                _acc(out, mono_times_mono(p, gamma, b), ca * s)
    return out


def mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Normal form of the product ``f * g``."""
    return f.alg.mul(f, g)


# ----------------------------------------------------------------------
# the decomposition data


@dataclass(frozen=True)
class PushResult:
    """``x^alpha r = sigma_alpha_r x^alpha + remainder``."""

    sigma_alpha_r: object
    remainder: SkewPoly


@dataclass(frozen=True)
class ReorderResult:
    """``x^alpha x^beta = c_ab x^(alpha+beta) + remainder``."""

    c_ab: object
    remainder: SkewPoly


def _check_exps(p: Presentation, alpha, allow_negative=False) -> tuple:
    alpha = tuple(int(e) for e in alpha)
    if len(alpha) != p.nvars:
        raise ValueError(f"exponent vector {alpha} has length {len(alpha)}, expected {p.nvars}")
    if not allow_negative and any(e < 0 for e in alpha):
        raise ValueError(f"negative exponent in {alpha}")
    return alpha


def sigma_power(p: Presentation, alpha, r):
    """``sigma_1^a1 o ... o sigma_n^an`` applied to ``r`` (``sigma_n`` acts first).

    Negative entries use the declared inverse twists.
    """
    alpha = _check_exps(p, alpha, allow_negative=True)
    r = p.base.coerce(r)
    for i in range(p.nvars - 1, -1, -1):
        e = alpha[i]
        for _ in range(abs(e)):
            r = p.sigma_apply(i, r) if e > 0 else p.sigma_inv_apply(i, r)
    return r


def sigma_inv_power(p: Presentation, alpha, r):
    """The inverse of ``sigma^alpha`` applied to ``r`` (``sigma_1^-1`` acts first)."""
    alpha = _check_exps(p, alpha)
    r = p.base.coerce(r)
    for i in range(p.nvars):
        for _ in range(alpha[i]):
            r = p.sigma_inv_apply(i, r)
    return r


def push_coeff(p: Presentation, alpha, r) -> PushResult:
    """Split ``x^alpha r`` into its top term and the lower-degree remainder."""
    alpha = _check_exps(p, alpha)
    r = p.base.coerce(r)
    terms = dict(push_terms(p, alpha, r))
    top = terms.pop(alpha, p.base.zero)
    return PushResult(top, SkewPoly(p, terms, _clean=True))


def reorder(p: Presentation, alpha, beta) -> ReorderResult:
    """Split ``x^alpha x^beta`` into ``c_ab x^(alpha+beta)`` and the remainder."""
    alpha = _check_exps(p, alpha)
    beta = _check_exps(p, beta)
    terms = dict(mono_times_mono(p, alpha, beta))
    s = tuple(a + b for a, b in zip(alpha, beta))
    top = terms.pop(s, p.base.zero)
    return ReorderResult(top, SkewPoly(p, terms, _clean=True))


def _require_bijective(p: Presentation, what: str) -> None:
    if not p.is_bijective():
        raise UnsupportedError(f"{what} needs a bijective presentation; {p.name} is not")


def verify_identities(p: Presentation, theta, gamma, beta, c) -> bool:
    """Check the two cocycle-type identities linking the constants c_ab and the twists.

    ``sigma^theta(c_gb) c_t,g+b = c_tg c_t+g,b`` and
    ``sigma^theta(sigma^gamma(c)) c_tg = c_tg sigma^(theta+gamma)(c)``.
    """
    _require_bijective(p, "verify_identities")
    theta, gamma, beta = (_check_exps(p, v) for v in (theta, gamma, beta))
    c = p.base.coerce(c)
    tg = tuple(a + b for a, b in zip(theta, gamma))
    gb = tuple(a + b for a, b in zip(gamma, beta))
    c_gb = reorder(p, gamma, beta).c_ab
    c_t_gb = reorder(p, theta, gb).c_ab
    c_tg = reorder(p, theta, gamma).c_ab
    c_tg_b = reorder(p, tg, beta).c_ab
    first = sigma_power(p, theta, c_gb) * c_t_gb == c_tg * c_tg_b
    second = sigma_power(p, theta, sigma_power(p, gamma, c)) * c_tg == c_tg * sigma_power(p, tg, c)
    return first and second


# ----------------------------------------------------------------------
# right coefficients


class RightPoly:
    """``sum x^g s_g`` with coefficients written on the right."""

    def __init__(self, alg: Presentation, terms: dict):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def to_left(self) -> SkewPoly:
        p = self.alg
        out: dict = {}
        for g, s in self.terms.items():
            _acc(out, push_terms(p, g, s))
        return SkewPoly(p, out, _clean=True)

    def items(self):
        from .poly import mon_key

        return sorted(self.terms.items(), key=lambda kv: mon_key(kv[0]), reverse=True)

    def __eq__(self, other):
        return isinstance(other, RightPoly) and other.alg == self.alg and other.terms == self.terms

    def __str__(self):
        from .coeff import _is_atomic, join_terms
        from .poly import format_monomial

        out = []
        for g, s in self.items():
            mono = format_monomial(self.alg.var_names, g)
            cs = str(s)
            if not mono:
                out.append(cs)
            elif cs == "1":
                out.append(mono)
            elif cs == "-1":
                out.append("-" + mono)
            elif cs.startswith("-") and _is_atomic(cs[1:]):
                out.append(f"-{mono}*{cs[1:]}")
            else:
                out.append(f"{mono}*{cs}" if _is_atomic(cs) and not cs.startswith("-") else f"{mono}*({cs})")
        return join_terms(out)


def right_expand(p: Presentation, r, alpha) -> RightPoly:
    """Write ``r x^alpha`` as ``sum x^g s_g`` using ``r x^a = x^a sigma^-a(r) - p_{a, sigma^-a(r)}``."""
    _require_bijective(p, "right_expand")
    alpha = _check_exps(p, alpha)
    r = p.base.coerce(r)
    return RightPoly(p, _right(p, r, alpha))


def _right(p: Presentation, r, alpha: tuple) -> dict:
    if r.is_zero():
        return {}
    key = ("right", alpha, r)
    hit = p._memo.get(key)
    if hit is not None:
        return hit
    s = sigma_inv_power(p, alpha, r)
    pushed = push_terms(p, alpha, s)
    if pushed.get(alpha) != r:
        raise UnsupportedError("declared inverse twists are inconsistent with the twists")
    out = {alpha: s}
    for g, b in pushed.items():
        if g == alpha:
            continue
        sub = _right(p, b, g)
        _acc(out, {k: -v for k, v in sub.items()})
    p._memo[key] = out
    return out
