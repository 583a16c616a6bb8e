"""Dimension bounds and K-group decompositions computed from declared facts about R.

Nothing here inspects R itself.  The caller declares what is known (global and
Krull dimension, Noetherian, regular, ...) and the calculators apply the bound
and splitting rules.  K-groups stay formal: ``K_j`` means ``K_j(R)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from math import comb

from .presentation import Presentation

__all__ = [
    "HypothesisError",
    "RingFacts",
    "DimReport",
    "KExpr",
    "dim_report",
    "k_laurent_step",
    "k_groups",
]

INF = math.inf


class HypothesisError(ValueError):
    """A hypothesis required by a bound or splitting rule was not declared."""


@dataclass(frozen=True)
class RingFacts:
    """Declared properties of the coefficient ring.

    ``lgld`` is an int, ``math.inf`` or None (unknown); ``lkdim`` an int or None.
    """

    lgld: int | float | None = None
    lkdim: int | None = None
    is_noetherian: bool = False
    is_domain: bool = False
    is_semisimple: bool = False
    is_field: bool = False
    is_regular: bool = False
    is_psf: bool = False
    k_trivial_action: bool = False

    def normalized(self) -> RingFacts:
        """Fill in what the declared flags imply, rejecting contradictions."""
        f = self
        if f.is_field:
            if f.lkdim not in (None, 0):
                raise ValueError(f"a field has Krull dimension 0, not {f.lkdim}")
            f = replace(f, is_semisimple=True, lkdim=0)
        if f.is_semisimple:
            if f.lgld not in (None, 0):
                raise ValueError(f"a semisimple ring has global dimension 0, not {f.lgld}")
            f = replace(f, lgld=0)
        for name in ("lgld", "lkdim"):
            v = getattr(f, name)
            if v is not None and v != INF and (not isinstance(v, int) or v < 0):
                raise ValueError(f"{name} must be a nonnegative integer, infinity or unknown, got {v!r}")
        if f.lkdim == INF:
            raise ValueError("lkdim must be finite or unknown")
        return f


def _fmt_bound(v) -> str:
    if v is None:
        return "unknown"
    if v == INF:
        return "inf"
    return str(v)


def _shift(v, n: int, symbol: str):
    """``v + n`` where ``v`` is a number, infinity, or unknown (rendered symbolically)."""
    if v is None:
        return symbol if n == 0 else f"{symbol}+{n}"
    return v + n


@dataclass
class DimReport:
    """Interval bounds; a bound is an int, ``inf``, a symbolic string like ``lgld(R)+2``, or None."""

    lgld_lo: object = None
    lgld_hi: object = None
    lkdim_lo: object = None
    lkdim_hi: object = None
    udim: int | None = None
    exact: frozenset = frozenset()
    notes: list = field(default_factory=list)

    def render(self, fmt: str = "text") -> str:
        rows = [
            ("lgld", self.lgld_lo, self.lgld_hi),
            ("lkdim", self.lkdim_lo, self.lkdim_hi),
        ]
        if fmt == "records":
            out = [
                f"dimension={name} lo={_fmt_bound(lo)} hi={_fmt_bound(hi)} exact={'true' if name in self.exact else 'false'}"
                for name, lo, hi in rows
            ]
            out.append(f"dimension=udim value={_fmt_bound(self.udim)}")
            out.extend(f"note={n}" for n in self.notes)
            return "\n".join(out)
        out = []
        for name, lo, hi in rows:
            if lo is None and hi is None:
                out.append(f"{name}(A): unknown")
            elif name in self.exact:
                out.append(f"{name}(A) = {_fmt_bound(hi)}")
            else:
                out.append(f"{_fmt_bound(lo)} <= {name}(A) <= {_fmt_bound(hi)}")
        out.append(f"udim(A) = {self.udim}" if self.udim is not None else "udim(A): unknown")
        out.extend(f"note: {n}" for n in self.notes)
        return "\n".join(out)


def _shape(p):
    from .quantum import QuantumPresentation

    if isinstance(p, QuantumPresentation):
        return p.core, p.r
    if isinstance(p, Presentation):
        return p, 0
    raise TypeError(f"expected a presentation, got {type(p).__name__}")


def dim_report(p, facts: RingFacts) -> DimReport:
    """Bounds on lgld, lKdim and udim of a bijective extension (or its localization)."""
    core, r = _shape(p)
    if not core.is_bijective():
        raise HypothesisError(f"{core.name} is not bijective; the dimension bounds do not apply")
    facts = facts.normalized()
    n = core.nvars
    qc = core.is_quasi_commutative()
    rep = DimReport()
    laurent_line = n == 1 and r == 1
    exact = set()

    # global dimension
    L = facts.lgld
    if r and L == INF:
        rep.notes.append("lgld(R) is infinite; no bound is stated for the localized ring")
    else:
        rep.lgld_lo = _shift(L, 0, "lgld(R)")
        rep.lgld_hi = _shift(L, n, "lgld(R)")
        if L == INF:
            exact.add("lgld")
        elif r == 0 and qc:
            rep.lgld_lo = rep.lgld_hi
            exact.add("lgld")
        elif laurent_line and facts.is_semisimple:
            rep.lgld_lo = rep.lgld_hi = 1
            exact.add("lgld")
        if r and "lgld" not in exact and L is not None:
            rep.notes.append("the localized ring satisfies the same interval; equality is known only without inverted variables")

    # Krull dimension
    K = facts.lkdim
    if facts.is_noetherian:
        rep.lkdim_lo = _shift(K, 0, "lkdim(R)")
        rep.lkdim_hi = _shift(K, n, "lkdim(R)")
        if r == 0 and qc:
            rep.lkdim_lo = rep.lkdim_hi
            exact.add("lkdim")
        elif laurent_line and facts.is_field:
            rep.lkdim_lo = rep.lkdim_hi = 1
            exact.add("lkdim")
        elif facts.is_field and r == n:
            rep.notes.append(f"over a field with every variable inverted only lkdim <= {n} is known")
    else:
        rep.notes.append("R is not declared left Noetherian; no Krull dimension bound applies")

    if facts.is_noetherian and facts.is_domain:
        rep.udim = 1
    rep.exact = frozenset(exact)
    return rep


@dataclass(frozen=True)
class KExpr:
    """A formal sum ``(+)_j K_j(R)^{m_j}``."""

    mults: tuple = ()  # sorted (j, m_j) pairs, m_j > 0

    @classmethod
    def of(cls, mults: dict) -> KExpr:
        for j, m in mults.items():
            if m < 0 or j < 0:
                raise ValueError(f"multiplicities and degrees must be nonnegative: K{j}^{m}")
        return cls(tuple(sorted((j, m) for j, m in mults.items() if m)))

    @classmethod
    def single(cls, j: int) -> KExpr:
        return cls.of({j: 1})

    def as_dict(self) -> dict:
        return dict(self.mults)

    def __add__(self, other: KExpr) -> KExpr:
        d = self.as_dict()
        for j, m in other.mults:
            d[j] = d.get(j, 0) + m
        return KExpr.of(d)

    def __str__(self):
        if not self.mults:
            return "0"
        return " ⊕ ".join(f"K{j}" if m == 1 else f"K{j}^{m}" for j, m in self.mults)


def k_laurent_step(vec: dict, trivial_action: bool = False) -> dict:
    """Adjoin one inverted variable: ``K_m(B[x^+-1]) = K_m(B) (+) K_{m-1}(B)`` with ``K_-1 = 0``.

    ``vec`` maps each degree ``m = 0..M`` to the KExpr of ``K_m(B)``.
    """
    if not trivial_action:
        raise HypothesisError("the twist must be declared to act trivially on K-theory")
    out = {}
    for m in sorted(vec):
        prev = vec.get(m - 1, KExpr())
        out[m] = vec[m] + prev
    return out


def k_groups(facts: RingFacts, m: int, r: int) -> KExpr:
    """``K_m`` of a skew quantum polynomial ring with ``r`` inverted variables.

    Multiplicities are ``C(r, m - j)`` for ``0 <= j <= m``; variables that are
    not inverted contribute nothing.
    """
    if m < 0 or r < 0:
        raise ValueError("m and r must be nonnegative")
    missing = [name for name, ok in (("noetherian", facts.is_noetherian), ("regular", facts.is_regular)) if not ok]
    if r > 0 and not facts.k_trivial_action:
        missing.append("trivial-k-action")
    if missing:
        raise HypothesisError("undeclared hypotheses: " + ", ".join(missing))
    return KExpr.of({j: comb(r, m - j) for j in range(m + 1)})
