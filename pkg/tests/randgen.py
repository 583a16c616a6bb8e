"""Seeded random elements for the property suites.

Coefficients are kept small (a few integer multiples of short generator
products) so that products over symbolic parameter fields stay cheap.
"""
from __future__ import annotations

import random

from skewpbw import catalog
from skewpbw.coeff import LaurentRing, RationalFunctionField
from skewpbw.presentation import Presentation
from skewpbw.quantum import QuantumPresentation


def ring_atoms(domain) -> list:
    """Generators of a coefficient domain (through every nesting level), with inverses of Laurent ones."""
    atoms = []
    d = domain
    while d is not None:
        if isinstance(d, Presentation):
            atoms += [d.var(v) for v in d.var_names]
            d = d.base
            continue
        for name in d.gens:
            g = d.gen(name)
            atoms.append(g)
            if isinstance(d, (LaurentRing, RationalFunctionField)):
                atoms.append(g.invert())
        d = d.base
    return atoms


def rand_scalar(rng: random.Random, domain, terms: int = 2, depth: int = 2, nonzero: bool = False):
    atoms = ring_atoms(domain)
    while True:
        out = domain.zero
        for _ in range(rng.randint(1, terms)):
            t = domain.coerce(rng.choice([1, -1, 2, 3, -2]))
            for _ in range(rng.randint(0, depth)):
                if atoms:
                    t = t * domain.coerce(rng.choice(atoms))
            out = out + t
        if not nonzero or not out.is_zero():
            return out


def rand_exp(rng: random.Random, n: int, max_deg: int, min_deg: int = 0, signed: int = 0) -> tuple:
    """An exponent vector with ``min_deg <= sum|a_i| <= max_deg``; the first ``signed`` entries may be negative."""
    d = rng.randint(min_deg, max_deg)
    e = [0] * n
    for _ in range(d):
        i = rng.randrange(n)
        if i < signed and rng.random() < 0.5:
            e[i] -= 1
        else:
            e[i] += 1
    return tuple(e)


def rand_poly(rng: random.Random, alg, max_deg: int = 2, terms: int = 3, nonzero: bool = False, homogeneous: int | None = None):
    n = alg.nvars
    signed = alg.r if isinstance(alg, QuantumPresentation) else 0
    while True:
        out = {}
        for _ in range(rng.randint(1, terms)):
            if homogeneous is None:
                a = rand_exp(rng, n, max_deg, signed=signed)
            else:
                a = rand_exp(rng, n, homogeneous, homogeneous)
            c = rand_scalar(rng, alg.base, terms=1, depth=1, nonzero=True)
            out[a] = c
        f = alg.poly(out) if isinstance(alg, Presentation) else _qpoly(alg, out)
        if not nonzero or not f.is_zero():
            return f


def _qpoly(qp, terms):
    from skewpbw.poly import SkewPoly

    return SkewPoly(qp, terms)


def catalog_algebras():
    """``(key, algebra)`` for every entry at default parameters."""
    return [(k, catalog.instantiate(k)) for k in sorted(catalog.CATALOG)]


def cores():
    out = []
    for k, a in catalog_algebras():
        out.append((k, a.core if isinstance(a, QuantumPresentation) else a))
    return out


