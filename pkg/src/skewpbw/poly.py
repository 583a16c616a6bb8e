"""Elements of a skew PBW extension in the standard-monomial basis.

A :class:`SkewPoly` is a finite map from exponent vectors to nonzero
coefficients, read as ``sum c_a x^a`` with coefficients on the left.  Terms are
ordered by total degree first and then by the first differing exponent.
"""
from __future__ import annotations

from fractions import Fraction

from .coeff import RingElem, _is_atomic, join_terms

__all__ = ["ExpVec", "cmp_mon", "mon_key", "SkewPoly", "NoLeadingTermError", "AlgebraMismatchError"]

ExpVec = tuple  # tuple[int, ...]


class NoLeadingTermError(ValueError):
    """The zero polynomial has no leading term."""


class AlgebraMismatchError(TypeError):
    """Polynomials from different algebras were combined."""


def mon_key(a: ExpVec):
    """Sort key realizing the monomial order; larger key means larger monomial."""
    return (sum(abs(e) for e in a), a)


def cmp_mon(a: ExpVec, b: ExpVec) -> int:
    """Return 1, 0 or -1 as ``x^a`` is greater than, equal to or less than ``x^b``."""
    if len(a) != len(b):
        raise ValueError(f"exponent vectors of different lengths: {a} vs {b}")
    ka, kb = mon_key(a), mon_key(b)
    return (ka > kb) - (ka < kb)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, RingElem)) and not isinstance(x, bool)


class SkewPoly:
    """An element ``sum c_a x^a`` of a presentation ``alg``.

    ``alg`` is a :class:`~skewpbw.presentation.Presentation` or a
    :class:`~skewpbw.quantum.QuantumPresentation`; products are delegated to it.
    """

    __slots__ = ("alg", "terms", "_h", "_sorted")

    def __init__(self, alg, terms: dict | None = None, _clean: bool = False):
        self.alg = alg
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {tuple(k): v for k, v in terms.items() if not v.is_zero()}
        self.terms = terms
        self._h = None
        self._sorted = None

    # -- structure --------------------------------------------------------
    def items(self) -> list:
        """Terms as (exponent, coefficient) pairs, largest monomial first."""
        if self._sorted is None:
            self._sorted = sorted(self.terms.items(), key=lambda kv: mon_key(kv[0]), reverse=True)
        return self._sorted

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: ExpVec):
        c = self.terms.get(tuple(exps))
        return self.alg.base.zero if c is None else c

    def leading(self):
        """(lm, lc) of a nonzero polynomial."""
        if not self.terms:
            raise NoLeadingTermError("the zero polynomial has no leading term")
        return self.items()[0]

    def lm(self) -> ExpVec:
        return self.leading()[0]

    def lc(self):
        return self.leading()[1]

    def degree(self) -> float | int:
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(abs(e) for e in k) for k in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(abs(e) for e in k) for k in self.terms}) <= 1

    def homogeneous_part(self, m: int) -> SkewPoly:
        return SkewPoly(self.alg, {k: v for k, v in self.terms.items() if sum(abs(e) for e in k) == m}, _clean=True)

    def is_constant(self) -> bool:
        return all(not any(k) for k in self.terms)

    def constant_coeff(self):
        return self.coeff((0,) * self.alg.nvars)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> SkewPoly | None:
        if isinstance(other, SkewPoly):
            if other.alg == self.alg:
                return other
            try:
                return self.alg.coerce(other)
            except (TypeError, ValueError):
                raise AlgebraMismatchError(f"cannot combine elements of {self.alg.name} and {other.alg.name}") from None
        if _is_scalar(other):
            try:
                return self.alg.coerce(other)
            except (TypeError, ValueError):
                return None
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SkewPoly(self.alg, add_terms(self.terms, o.terms), _clean=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return SkewPoly(self.alg, {k: -v for k, v in self.terms.items()}, _clean=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SkewPoly(self.alg, add_terms(self.terms, o.terms, -1), _clean=True)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.alg.mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.alg.mul(o, self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = self.alg.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def try_invert(self):
        return self.alg.try_invert(self)

    def invert(self):
        inv = self.try_invert()
        if inv is None:
            from .coeff import NotAUnitError

            raise NotAUnitError(f"{self} is not a unit")
        return inv

    def is_unit(self) -> bool:
        return self.try_invert() is not None

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, SkewPoly) and other.alg == self.alg:
            return self.terms == other.terms
        o = self._coerce(other)
        return o is not None and o.terms == self.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self.terms.items()))
        return self._h

    def __str__(self):
        return self.alg.format_terms(self.items())

    def __repr__(self):
        return f"<{self} in {self.alg.name}>"

    def is_atomic_text(self) -> bool:
        return _is_atomic(str(self))


def add_terms(a: dict, b: dict, sign: int = 1) -> dict:
    """Coefficientwise ``a + sign*b`` on term dictionaries, zeros dropped."""
    out = dict(a)
    for k, v in b.items():
        if sign < 0:
            v = -v
        cur = out.get(k)
        if cur is None:
            out[k] = v
        else:
            s = cur + v
            if s.is_zero():
                del out[k]
            else:
                out[k] = s
    return out


def format_monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_terms(names, items) -> str:
    """Render (exps, coeff) pairs with coefficients left of monomials."""
    out = []
    for k, c in items:
        mono = format_monomial(names, k)
        cs = str(c)
        if not mono:
            out.append(cs)
        elif cs == "1":
            out.append(mono)
        elif cs == "-1":
            out.append("-" + mono)
        else:
            if not _is_atomic(cs):
                cs = f"({cs})"
            out.append(f"{cs}*{mono}")
    return join_terms(out)
