"""Exact commutative coefficient rings.

Every ring is built from QQ by three constructions: a rational function field
QQ(q1,...,qs), a polynomial ring B[t1,...,tm] and a Laurent polynomial ring
B[t1^+-,...,tm^+-] over a ring B already built.  All of them are commutative
domains and every element has a unique canonical payload, so equality and
hashing are structural.

Multivariate gcds for the rational function level are delegated to sympy's
sparse polynomial rings; everything above that level is plain dictionaries.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable

from sympy import QQ as _SQQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

__all__ = [
    "Ring",
    "RingElem",
    "RationalField",
    "RationalFunctionField",
    "PolynomialRing",
    "LaurentRing",
    "QQ",
    "frac_field",
    "poly_ring",
    "laurent_ring",
    "parse_ring",
    "arith",
    "try_invert",
    "is_zero",
    "NotAUnitError",
    "RingMismatchError",
]


class NotAUnitError(ArithmeticError):
    """Raised when an inverse is requested for a non-unit."""


class RingMismatchError(TypeError):
    """Raised when elements of unrelated rings are combined."""


class Ring:
    """Base class for the rings of the coefficient tower.

    Subclasses work on raw payloads (``_add``, ``_mul``, ...); user code
    manipulates :class:`RingElem` wrappers.
    """

    kind: str = ""
    is_field = False
    is_domain = True
    is_commutative = True

    def __init__(self, gens: tuple[str, ...] = (), base: Ring | None = None):
        self.gens = tuple(gens)
        self.base = base
        names = self.generator_names()
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be unique across the tower: {names}")
        self._key = self._make_key()
        self._hash = hash(self._key)
        self.zero = RingElem(self, self._zero())
        self.one = RingElem(self, self._one())

    # -- identity -------------------------------------------------------
    def _make_key(self):
        return (self.kind, self.gens, None if self.base is None else self.base._key)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({self.descriptor()!r})"

    def __str__(self):
        return self.descriptor()

    def descriptor(self) -> str:
        raise NotImplementedError

    # -- tower structure ------------------------------------------------
    def generator_names(self) -> tuple[str, ...]:
        """All generator names of the tower, innermost first."""
        below = self.base.generator_names() if self.base is not None else ()
        return below + self.gens

    def tower(self) -> list[Ring]:
        out = [] if self.base is None else self.base.tower()
        out.append(self)
        return out

    def contains_ring(self, other: Ring) -> bool:
        if self == other:
            return True
        if isinstance(other, RationalField):
            return True
        return self.base is not None and self.base.contains_ring(other)

    def gen(self, name: str) -> RingElem:
        """The generator ``name`` (from any level of the tower) as an element of this ring."""
        if name in self.gens:
            return RingElem(self, self._gen_payload(self.gens.index(name)))
        if self.base is None:
            raise KeyError(f"unknown generator {name!r} in {self.descriptor()}")
        return self.embed(self.base.gen(name))

    def gens_elements(self) -> list[tuple[str, RingElem]]:
        return [(g, self.gen(g)) for g in self.generator_names()]

    def invertible_generators(self) -> tuple[str, ...]:
        """Names of generators that are units of this ring."""
        below = self.base.invertible_generators() if self.base is not None else ()
        return below + self._own_invertible()

    def _own_invertible(self) -> tuple[str, ...]:
        return ()

    # -- coercion -------------------------------------------------------
    def __call__(self, value) -> RingElem:
        return self.coerce(value)

    def coerce(self, value) -> RingElem:
        if isinstance(value, RingElem):
            if value.ring == self:
                return value
            return self.embed(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return RingElem(self, self._from_fraction(Fraction(value)))
        if isinstance(value, Fraction):
            return RingElem(self, self._from_fraction(value))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self.descriptor()}")

    def embed(self, elem: RingElem) -> RingElem:
        """Embed an element of a ring lower in the tower."""
        if elem.ring == self:
            return elem
        if isinstance(elem.ring, RationalField):
            return RingElem(self, self._from_fraction(elem.v))
        if self.base is None or not self.base.contains_ring(elem.ring):
            raise RingMismatchError(f"{elem.ring.descriptor()} is not contained in {self.descriptor()}")
        return RingElem(self, self._lift(self.base.embed(elem).v))

    def try_invert(self, value) -> RingElem | None:
        return self.coerce(value).try_invert()

    def parse(self, text: str) -> RingElem:
        from .dsl import parse_ring_element

        return parse_ring_element(text, self)

    # -- payload interface ----------------------------------------------
    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _from_fraction(self, fr: Fraction):
        raise NotImplementedError

    def _lift(self, base_payload):
        raise NotImplementedError

    def _gen_payload(self, index: int):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _mul(self, a, b):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _inv(self, a):
        """Inverse payload, or None when ``a`` is not a unit."""
        raise NotImplementedError

    def _hash_payload(self, a) -> int:
        return hash(a)

    def _str(self, a) -> str:
        raise NotImplementedError

    def _subst(self, a, images: Callable[[str], object], target):
        """Image of ``a`` under the homomorphism fixing QQ with ``g -> images(g)``.

        ``target`` is the ring receiving the images; it must provide
        ``coerce``, ``one``, ``try_invert`` and the arithmetic operators.
        """
        raise NotImplementedError


class RingElem:
    """An element of a commutative coefficient ring, with a canonical payload."""

    __slots__ = ("ring", "v", "_h")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.v = payload
        self._h = None

    # -- helpers --------------------------------------------------------
    def _other(self, other) -> RingElem | None:
        if isinstance(other, RingElem):
            if other.ring == self.ring:
                return other
            if self.ring.contains_ring(other.ring):
                return self.ring.embed(other)
            return None
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.coerce(other)
        return None

    def _promote(self, other):
        """Return (a, b) in a common ring or (None, None)."""
        o = self._other(other)
        if o is not None:
            return self, o
        if isinstance(other, RingElem) and other.ring.contains_ring(self.ring):
            return other.ring.embed(self), other
        return None, None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return RingElem(a.ring, a.ring._add(a.v, b.v))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return RingElem(a.ring, a.ring._sub(a.v, b.v))

    def __rsub__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return RingElem(a.ring, a.ring._sub(b.v, a.v))

    def __neg__(self):
        return RingElem(self.ring, self.ring._neg(self.v))

    def __pos__(self):
        return self

    def __mul__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return RingElem(a.ring, a.ring._mul(a.v, b.v))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        inv = a.ring._inv(b.v)
        if inv is None:
            if b.is_zero():
                raise ZeroDivisionError("division by zero")
            raise NotAUnitError(f"{b} is not a unit of {a.ring.descriptor()}")
        return RingElem(a.ring, a.ring._mul(a.v, inv))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = self.ring._one()
        base = self.v
        while n:
            if n & 1:
                result = self.ring._mul(result, base)
            n >>= 1
            if n:
                base = self.ring._mul(base, base)
        return RingElem(self.ring, result)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.ring._is_zero(self.v)

    def is_one(self) -> bool:
        return self == self.ring.one

    def try_invert(self) -> RingElem | None:
        inv = self.ring._inv(self.v)
        return None if inv is None else RingElem(self.ring, inv)

    def invert(self) -> RingElem:
        inv = self.try_invert()
        if inv is None:
            raise NotAUnitError(f"{self} is not a unit of {self.ring.descriptor()}")
        return inv

    def is_unit(self) -> bool:
        return self.ring._inv(self.v) is not None

    def subst(self, images: Callable[[str], object], target):
        return self.ring._subst(self.v, images, target)

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RingElem):
            if other.ring == self.ring:
                return self.v == other.v
            a, b = self._promote(other)
            return a is not None and a.v == b.v
        o = self._other(other)
        return o is not None and self.v == o.v

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._h is None:
            self._h = self.ring._hash_payload(self.v)
        return self._h

    def __str__(self):
        return self.ring._str(self.v)

    def __repr__(self):
        return f"<{self} in {self.ring.descriptor()}>"

    def is_atomic_text(self) -> bool:
        return _is_atomic(str(self))


# ----------------------------------------------------------------------
# text helpers


def _is_atomic(s: str) -> bool:
    """True when ``s`` has no top-level + or - beyond a leading sign."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-" and s[i - 1] != "^":
            return False
    return True


def _fmt_fraction(fr: Fraction) -> str:
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def _fmt_monomial(names: tuple[str, ...], exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _fmt_term(coeff: str, mono: str) -> str:
    """Render ``coeff*mono``; ``coeff`` is the canonical text of a coefficient."""
    if not mono:
        return coeff
    if coeff == "1":
        return mono
    if coeff == "-1":
        return "-" + mono
    if not _is_atomic(coeff):
        coeff = f"({coeff})"
    return f"{coeff}*{mono}"


def join_terms(terms: Iterable[str]) -> str:
    out = ""
    for t in terms:
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out or "0"


def _mono_key(exps: tuple[int, ...]):
    return (sum(abs(e) for e in exps), exps)


# ----------------------------------------------------------------------
# QQ


class RationalField(Ring):
    kind = "rationals"
    is_field = True

    def descriptor(self):
        return "QQ"

    def contains_ring(self, other):
        return isinstance(other, RationalField)

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _from_fraction(self, fr):
        return Fraction(fr)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _inv(self, a):
        return None if a == 0 else 1 / a

    def _str(self, a):
        return _fmt_fraction(a)

    def _subst(self, a, images, target):
        return target.coerce(a)


# ----------------------------------------------------------------------
# QQ(q1, ..., qs)

_POLY_RINGS: dict[tuple[str, ...], PolyRing] = {}


def _sympy_ring(gens: tuple[str, ...]) -> PolyRing:
    P = _POLY_RINGS.get(gens)
    if P is None:
        P = PolyRing(gens, _SQQ, grlex)
        _POLY_RINGS[gens] = P
    return P


def _mpq_to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class RationalFunctionField(Ring):
    """QQ(q1,...,qs); payload is (numerator, denominator) with monic denominator.

    The denominator's leading coefficient under graded-lex is 1 and the two
    polynomials are coprime.
    """

    kind = "rational-functions"
    is_field = True

    def __init__(self, gens: tuple[str, ...]):
        if not gens:
            raise ValueError("a rational function field needs at least one generator")
        self.P = _sympy_ring(tuple(gens))
        self._pone = self.P.one
        super().__init__(gens, None)

    def descriptor(self):
        return "QQ(" + ",".join(self.gens) + ")"

    def contains_ring(self, other):
        return self == other or isinstance(other, RationalField)

    def embed(self, elem):
        if elem.ring == self:
            return elem
        if isinstance(elem.ring, RationalField):
            return RingElem(self, self._from_fraction(elem.v))
        raise RingMismatchError(f"{elem.ring.descriptor()} is not contained in {self.descriptor()}")

    def _norm(self, num, den):
        if num.is_zero:
            return (num, self._pone)
        if den == self._pone:
            return (num, den)
        num, den = num.cancel(den)
        lc = den.LC
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        return (num, den)

    def _zero(self):
        return (self.P.zero, self.P.one)

    def _one(self):
        return (self.P.one, self.P.one)

    def _from_fraction(self, fr):
        return (self.P.ground_new(_SQQ(fr.numerator, fr.denominator)), self.P.one)

    def _gen_payload(self, index):
        return (self.P.gens[index], self.P.one)

    def _add(self, a, b):
        n1, d1 = a
        n2, d2 = b
        if d1 == d2:
            if d1 == self._pone:
                return (n1 + n2, d1)
            return self._norm(n1 + n2, d1)
        return self._norm(n1 * d2 + n2 * d1, d1 * d2)

    def _neg(self, a):
        return (-a[0], a[1])

    def _sub(self, a, b):
        return self._add(a, (-b[0], b[1]))

    def _mul(self, a, b):
        n1, d1 = a
        n2, d2 = b
        if d1 == self._pone and d2 == self._pone:
            return (n1 * n2, d1)
        return self._norm(n1 * n2, d1 * d2)

    def _is_zero(self, a):
        return a[0].is_zero

    def _inv(self, a):
        if a[0].is_zero:
            return None
        return self._norm(a[1], a[0])

    def _hash_payload(self, a):
        return hash((self.kind, a[0], a[1]))

    def _poly_str(self, p) -> str:
        terms = []
        for monom, c in p.terms():
            terms.append(_fmt_term(_fmt_fraction(_mpq_to_fraction(c)), _fmt_monomial(self.gens, monom)))
        return join_terms(terms)

    def _str(self, a):
        num, den = a
        ns = self._poly_str(num)
        if den == self._pone:
            return ns
        ds = self._poly_str(den)
        if not _is_atomic(ns):
            ns = f"({ns})"
        if len(den) != 1 or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def numerator_denominator(self, a: RingElem) -> tuple[RingElem, RingElem]:
        num, den = a.v
        return RingElem(self, (num, self._pone)), RingElem(self, (den, self._pone))

    def _eval_poly(self, p, images, target, cache):
        acc = target.coerce(0)
        for monom, c in p.items():
            term = target.coerce(_mpq_to_fraction(c))
            for name, e in zip(self.gens, monom):
                if e:
                    key = (name, e)
                    val = cache.get(key)
                    if val is None:
                        val = images(name) ** e
                        cache[key] = val
                    term = term * val
            acc = acc + term
        return acc

    def _subst(self, a, images, target):
        cache: dict = {}
        num = self._eval_poly(a[0], images, target, cache)
        if a[1] == self._pone:
            return num
        den = self._eval_poly(a[1], images, target, cache)
        inv = target.try_invert(den)
        if inv is None:
            raise NotAUnitError(f"image of denominator {den} is not a unit")
        return num * inv


# ----------------------------------------------------------------------
# B[t1,...,tm] and B[t1^+-,...,tm^+-]


class PolynomialRing(Ring):
    """B[t1,...,tm]; payload maps exponent tuples to nonzero base payloads."""

    kind = "poly"
    signed = False

    def __init__(self, base: Ring, gens: tuple[str, ...]):
        if not gens:
            raise ValueError("a polynomial ring needs at least one generator")
        self._m = len(gens)
        self._zexp = (0,) * len(gens)
        super().__init__(gens, base)

    def descriptor(self):
        suffix = "^+-" if self.signed else ""
        return self.base.descriptor() + "[" + ",".join(g + suffix for g in self.gens) + "]"

    def _own_invertible(self):
        return self.gens if self.signed else ()

    def _zero(self):
        return {}

    def _one(self):
        return {self._zexp: self.base._one()}

    def _from_fraction(self, fr):
        c = self.base._from_fraction(fr)
        return {} if self.base._is_zero(c) else {self._zexp: c}

    def _lift(self, bp):
        return {} if self.base._is_zero(bp) else {self._zexp: bp}

    def _gen_payload(self, index):
        e = [0] * self._m
        e[index] = 1
        return {tuple(e): self.base._one()}

    def _add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        B = self.base
        for k, v in b.items():
            cur = out.get(k)
            if cur is None:
                out[k] = v
            else:
                s = B._add(cur, v)
                if B._is_zero(s):
                    del out[k]
                else:
                    out[k] = s
        return out

    def _neg(self, a):
        B = self.base
        return {k: B._neg(v) for k, v in a.items()}

    def _mul(self, a, b):
        if not a or not b:
            return {}
        B = self.base
        if len(a) == 1 and len(b) == 1:
            (ka, va), = a.items()
            (kb, vb), = b.items()
            c = B._mul(va, vb)
            return {} if B._is_zero(c) else {tuple(x + y for x, y in zip(ka, kb)): c}
        out: dict = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                c = B._mul(va, vb)
                cur = out.get(k)
                out[k] = c if cur is None else B._add(cur, c)
        return {k: v for k, v in out.items() if not B._is_zero(v)}

    def _is_zero(self, a):
        return not a

    def _inv(self, a):
        if len(a) != 1:
            return None
        (k, v), = a.items()
        if not self.signed and any(k):
            return None
        inv = self.base._inv(v)
        if inv is None:
            return None
        return {tuple(-e for e in k): inv}

    def _hash_payload(self, a):
        B = self.base
        return hash((self.kind, frozenset((k, B._hash_payload(v)) for k, v in a.items())))

    def _str(self, a):
        if not a:
            return "0"
        B = self.base
        terms = []
        for k in sorted(a, key=_mono_key, reverse=True):
            terms.append(_fmt_term(B._str(a[k]), _fmt_monomial(self.gens, k)))
        return join_terms(terms)

    def _subst(self, a, images, target):
        B = self.base
        acc = target.coerce(0)
        powers: dict = {}
        for k, v in a.items():
            term = B._subst(v, images, target)
            for name, e in zip(self.gens, k):
                if e:
                    val = powers.get((name, e))
                    if val is None:
                        img = images(name)
                        if e < 0:
                            inv = target.try_invert(img)
                            if inv is None:
                                raise NotAUnitError(f"image of {name} is not a unit")
                            val = inv ** (-e)
                        else:
                            val = img ** e
                        powers[(name, e)] = val
                    term = term * val
            acc = acc + term
        return acc

    # convenience accessors used by printers and tests
    def terms(self, a: RingElem) -> list[tuple[tuple[int, ...], RingElem]]:
        return [(k, RingElem(self.base, v)) for k, v in sorted(a.v.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)]

    def from_terms(self, terms: dict[tuple[int, ...], RingElem]) -> RingElem:
        B = self.base
        out = {}
        for k, c in terms.items():
            c = B.coerce(c)
            if not c.is_zero():
                out[tuple(k)] = c.v
        return RingElem(self, out)


class LaurentRing(PolynomialRing):
    """B[t1^+-,...,tm^+-]; exponents may be negative."""

    kind = "laurent-poly"
    signed = True


# ----------------------------------------------------------------------
# constructors and descriptor parsing

_RINGS: dict = {}


def _interned(key, factory):
    r = _RINGS.get(key)
    if r is None:
        r = factory()
        _RINGS[key] = r
    return r


QQ = RationalField()


def frac_field(*gens: str) -> RationalFunctionField:
    gens = tuple(gens)
    return _interned(("frac", gens), lambda: RationalFunctionField(gens))


def poly_ring(base: Ring, *gens: str) -> PolynomialRing:
    gens = tuple(gens)
    return _interned(("poly", base._key, gens), lambda: PolynomialRing(base, gens))


def laurent_ring(base: Ring, *gens: str) -> LaurentRing:
    gens = tuple(gens)
    return _interned(("laurent", base._key, gens), lambda: LaurentRing(base, gens))


_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"


def parse_ring(text: str) -> Ring:
    """Parse a ring descriptor such as ``QQ``, ``QQ(q,h)[t]`` or ``QQ(q)[z^+-]``."""
    s = text.replace(" ", "")
    m = re.match(r"QQ(\(([^()]*)\))?", s)
    if not m:
        raise ValueError(f"ring descriptor must start with QQ: {text!r}")
    ring: Ring = QQ
    if m.group(1):
        names = [g for g in m.group(2).split(",")]
        if not all(re.fullmatch(_IDENT, g) for g in names):
            raise ValueError(f"bad generator list in {text!r}")
        ring = frac_field(*names)
    pos = m.end()
    while pos < len(s):
        if s[pos] != "[":
            raise ValueError(f"unexpected {s[pos]!r} at column {pos + 1} of ring descriptor {text!r}")
        end = s.find("]", pos)
        if end < 0:
            raise ValueError(f"unterminated '[' in ring descriptor {text!r}")
        items = s[pos + 1:end].split(",")
        laurent = [it.endswith("^+-") for it in items]
        names = [it[:-3] if lt else it for it, lt in zip(items, laurent)]
        if not all(re.fullmatch(_IDENT, g) for g in names):
            raise ValueError(f"bad generator list in {text!r}")
        if any(laurent) and not all(laurent):
            raise ValueError("mix of Laurent and polynomial generators in one bracket; split them into two levels")
        ring = laurent_ring(ring, *names) if laurent[0] else poly_ring(ring, *names)
        pos = end + 1
    return ring


# ----------------------------------------------------------------------
# functional surface


def arith(a: RingElem, b: RingElem, op: str) -> RingElem:
    """Strict ring arithmetic: both operands must live in the same ring."""
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring.descriptor()} != {b.ring.descriptor()}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def try_invert(a: RingElem) -> RingElem | None:
    return a.try_invert()


def is_zero(a: RingElem) -> bool:
    return a.is_zero()
