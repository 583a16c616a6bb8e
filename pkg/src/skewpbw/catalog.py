"""Built-in families of skew PBW extensions.

Each entry renders a definition from its parameters and parses it, so every
catalog algebra is also a worked example of the definition language.  Scalar
parameters default to symbols; the coefficient field is QQ extended by every
identifier occurring in the scalar parameter values, so ``--param q=2`` turns
the generic algebra into a specialization.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .coeff import parse_ring
from .dsl import ParseError, eval_free, parse_definition, parse_ring_element, parse_tree
from .presentation import Presentation, validate

__all__ = ["ParamError", "Param", "CatalogEntry", "CATALOG", "list_catalog", "instantiate", "render", "get_entry"]


class ParamError(ValueError):
    """A catalog parameter is malformed or violates its constraint."""


@dataclass(frozen=True)
class Param:
    name: str
    default: object
    kind: str = "scalar"  # scalar: ring expression; int: small integer; text: free text
    constraint: str = ""  # "nonzero" is checked; anything else is a note
    minimum: int = 1


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    family: str
    title: str
    params: tuple
    builder: Callable
    relations: Callable | None = None
    quasi_commutative: bool = False
    bijective: bool = True
    notes: str = ""
    checks: Callable | None = None  # extra (expression, message) pairs that must be nonzero

    def signature(self) -> str:
        return ", ".join(f"{p.name}={p.default}" for p in self.params)


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Ctx:
    """Resolved parameters plus helpers for writing definition text."""

    def __init__(self, entry: CatalogEntry, values: dict):
        self.entry = entry
        self.values = values
        self.field = "QQ"

    def __getitem__(self, name):
        return self.values[name]

    def v(self, name) -> str:
        """A scalar parameter as a parenthesized expression."""
        text = str(self.values[name])
        return text if _IDENT.fullmatch(text) or text.isdigit() else f"({text})"

    def ring(self, suffix: str = "") -> str:
        return f"ring {self.field}{suffix}"


_POWER = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)\^(-?\d+)")


def _scale(g: str, u: str) -> tuple:
    """(image, inverse image) of ``g -> u*g``."""
    return (g, f"{u}*{g}", f"{_inv(u)}*{g}")


def _sigma(var: str, triples) -> str:
    triples = [t for t in triples if t]
    if not triples:
        return ""
    img = ", ".join(f"{g} -> {a}" for g, a, _ in triples)
    inv = ", ".join(f"{g} -> {b}" for g, _, b in triples)
    return f"sigma {var} {{ {img} }} inverse {{ {inv} }}"


def _delta(var: str, pairs) -> str:
    pairs = [p for p in pairs if p]
    if not pairs:
        return ""
    return f"delta {var} {{ " + ", ".join(f"{g} -> {e}" for g, e in pairs) + " }"


def _doc(*lines) -> str:
    out = []
    for ln in lines:
        if isinstance(ln, (list, tuple)):
            out.extend(x for x in ln if x)
        elif ln:
            out.append(ln)
    return "\n".join(out) + "\n"


def _nest(inner: str) -> str:
    return "base {\n" + "".join("  " + ln + "\n" for ln in inner.splitlines()) + "}"


def _idx(prefix: str, n: int) -> list:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _pair_params(prefix: str, n: int, upper: bool = True) -> tuple:
    """Symbolic parameters ``prefix + ij`` for ``i < j`` (or ``i > j``)."""
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i < j) if upper else (i > j):
                out.append(Param(f"{prefix}{i}{j}", f"{prefix}{i}{j}", constraint="nonzero"))
    return tuple(out)


def _inv(u: str) -> str:
    m = _POWER.fullmatch(u)
    if m:
        e = -int(m.group(2))
        return m.group(1) if e == 1 else f"{m.group(1)}^{e}"
    if _IDENT.fullmatch(u):
        return f"{u}^-1"
    if u.startswith("(") and u.endswith(")") and u.count("(") == 1:
        return f"{u}^-1"
    return f"({u})^-1"


def _matrix(ctx: _Ctx, prefix: str, n: int):
    """``m(i, j)`` for a multiplicatively antisymmetric matrix stored above the diagonal (1-based)."""

    def m(i, j):
        if i == j:
            return "1"
        if i < j:
            return ctx.v(f"{prefix}{i}{j}")
        return f"{ctx.v(f'{prefix}{j}{i}')}^-1"

    return m


# ----------------------------------------------------------------------
# builders


def _polynomial(ctx):
    n = ctx["n"]
    return _doc("algebra polynomial", f"ring {ctx['coeffs']}", "vars " + ", ".join(_idx("t", n)))


def _ore_derivation(ctx):
    return _doc("algebra ore_derivation", ctx.ring("[t]"), "vars x", _delta("x", [("t", ctx["delta"])]))


def _weyl_names(n):
    return (["t"], ["d"]) if n == 1 else (_idx("t", n), _idx("d", n))


def _weyl(ctx, name="weyl", rational=False):
    n = ctx["n"]
    ts, ds = _weyl_names(n)
    base = ctx["coeffs"] if "coeffs" in ctx.values else ctx.field
    if rational:
        inner = base[3:-1] + "," if base.startswith("QQ(") else ""
        ring = f"ring QQ({inner}{','.join(ts)})"
    else:
        ring = f"ring {base}[{','.join(ts)}]"
    return _doc(f"algebra {name}", ring, "vars " + ", ".join(ds), [_delta(d, [(t, "1")]) for t, d in zip(ts, ds)])


def _weyl_relations(ctx):
    ts, ds = _weyl_names(ctx["n"])
    out = []
    for j, d in enumerate(ds):
        for i, t in enumerate(ts):
            out.append(f"{d}*{t} = {t}*{d}" + (" + 1" if i == j else ""))
    return out


_LIE_PRESETS = {
    "sl2": ("e,f,h", "[e,f]=h; [h,e]=2*e; [h,f]=-2*f"),
    "heisenberg": ("x,y,z", "[x,y]=z"),
    "so3": ("x,y,z", "[x,y]=z; [y,z]=x; [z,x]=y"),
}


def _lie_data(ctx):
    preset = ctx["lie"]
    basis_text, brackets = _LIE_PRESETS.get(preset, ("", ""))
    if ctx["basis"]:
        basis_text = ctx["basis"]
    if ctx["brackets"]:
        brackets = ctx["brackets"]
    if not basis_text:
        raise ParamError(f"unknown Lie algebra preset {preset!r}; give basis=... and brackets=...")
    basis = [b.strip() for b in basis_text.split(",") if b.strip()]
    if len(set(basis)) != len(basis) or not all(_IDENT.fullmatch(b) for b in basis):
        raise ParamError(f"basis must be distinct identifiers, got {basis_text!r}")
    table = {}
    for item in brackets.split(";"):
        if not item.strip():
            continue
        m = re.fullmatch(r"\s*\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.+?)\s*", item)
        if not m or m.group(1) not in basis or m.group(2) not in basis:
            raise ParamError(f"malformed bracket {item.strip()!r}; expected [a,b]=expr")
        a, b, rhs = basis.index(m.group(1)), basis.index(m.group(2)), m.group(3)
        if a == b:
            raise ParamError(f"[{basis[a]},{basis[a]}] must be 0")
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        if key in table:
            raise ParamError(f"bracket [{basis[key[0]]},{basis[key[1]]}] given twice")
        table[key] = (rhs, sign)
    return basis, table


def _enveloping(ctx):
    basis, table = _lie_data(ctx)
    rels = []
    for (i, j), (rhs, sign) in sorted(table.items()):
        br = f"({rhs})" if sign > 0 else f"-({rhs})"
        rels.append(f"rel {basis[j]}*{basis[i]} = {basis[i]}*{basis[j]} - {br}")
    return _doc("algebra enveloping", ctx.ring(), "vars " + ", ".join(basis), rels)


def _enveloping_check(ctx, p: Presentation):
    """Jacobi identity on the structure constants (rejects non-Lie tables early)."""
    basis, table = _lie_data(ctx)
    n = len(basis)
    R = p.base
    const = {}
    for (i, j), (rhs, sign) in table.items():
        terms = eval_free(parse_tree(rhs), p)
        vec = {}
        for w, cf in terms.items():
            if len(w) != 1:
                raise ParamError(f"bracket [{basis[i]},{basis[j]}] = {rhs} must be a linear combination of the basis")
            vec[w[0]] = cf if sign > 0 else -cf
        const[(i, j)] = vec

    def br(u: dict, v: dict) -> dict:
        out = {}
        for a, ca in u.items():
            for b, cb in v.items():
                if a == b:
                    continue
                vec, s = (const.get((a, b), {}), 1) if a < b else (const.get((b, a), {}), -1)
                for k, ck in vec.items():
                    out[k] = out.get(k, R.zero) + (ca * cb * ck if s > 0 else -(ca * cb * ck))
        return {k: c for k, c in out.items() if not c.is_zero()}

    def add(*vs):
        out = {}
        for v in vs:
            for k, c in v.items():
                out[k] = out.get(k, R.zero) + c
        return {k: c for k, c in out.items() if not c.is_zero()}

    e = [{i: R.one} for i in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                jac = add(br(br(e[a], e[b]), e[c]), br(br(e[b], e[c]), e[a]), br(br(e[c], e[a]), e[b]))
                if jac:
                    raise ParamError(f"Jacobi identity fails on ({basis[a]}, {basis[b]}, {basis[c]})")


def _enveloping_relations(ctx):
    basis, table = _lie_data(ctx)
    out = []
    for (i, j), (rhs, sign) in sorted(table.items()):
        br = f"({rhs})" if sign > 0 else f"-({rhs})"
        out.append(f"{basis[i]}*{basis[j]} - {basis[j]}*{basis[i]} = {br}")
    return out


def _dqh(ctx):
    q, h = ctx.v("q"), ctx.v("h")
    return _doc("algebra dqh", ctx.ring("[y]"), "vars x", _sigma("x", [_scale("y", q)]), _delta("x", [("y", h)]))


def _shift(ctx):
    h = ctx.v("h")
    return _doc("algebra shift", ctx.ring("[t]"), "vars xh", _sigma("xh", [("t", f"t - {h}", f"t + {h}")]))


def _mixed(ctx):
    h = ctx.v("h")
    return _doc(
        "algebra mixed",
        ctx.ring("[t]"),
        "vars x, xh",
        _delta("x", [("t", "1")]),
        _sigma("xh", [("t", f"t - {h}", f"t + {h}")]),
    )


def _discrete_linear(ctx):
    n = ctx["n"]
    ts, xs = _idx("t", n), _idx("x", n)
    return _doc(
        "algebra discrete_linear",
        ctx.ring(f"[{','.join(ts)}]"),
        "vars " + ", ".join(xs),
        [_sigma(x, [(t, f"{t} + 1", f"{t} - 1")]) for t, x in zip(ts, xs)],
    )


def _operator(kind):
    def build(ctx):
        n, m = ctx["n"], ctx["m"]
        if m > n:
            raise ParamError(f"need m <= n, got m={m}, n={n}")
        prefix = {"shift": "E", "difference": "Delta", "dilation": "H", "qdiff": "D"}[kind]
        ts = ["t"] if n == 1 else _idx("t", n)
        ops = [prefix] if m == 1 and n == 1 else _idx(prefix, m)
        ring = f"ring QQ({','.join(([ctx.field[3:-1]] if ctx.field != 'QQ' else []) + ts)})" if ctx["rational"] else ctx.ring(f"[{','.join(ts)}]")
        lines = []
        for t, D in zip(ts, ops):
            if kind in ("shift", "difference"):
                lines.append(_sigma(D, [(t, f"{t} + 1", f"{t} - 1")]))
            else:
                lines.append(_sigma(D, [_scale(t, ctx.v("q"))]))
            if kind == "difference" or kind == "qdiff":
                lines.append(_delta(D, [(t, "1")]))
        return _doc(f"algebra {kind}_operators", ring, "vars " + ", ".join(ops), lines)

    return build


def _operator_relations(kind):
    def rel(ctx):
        n, m = ctx["n"], ctx["m"]
        prefix = {"shift": "E", "difference": "Delta", "dilation": "H", "qdiff": "D"}[kind]
        ts = ["t"] if n == 1 else _idx("t", n)
        ops = [prefix] if m == 1 and n == 1 else _idx(prefix, m)
        out = []
        for i, D in enumerate(ops):
            t = ts[i]
            if kind == "shift":
                out.append(f"{D}*{t} = ({t} + 1)*{D}")
            elif kind == "difference":
                out.append(f"{D}*{t} = ({t} + 1)*{D} + 1")
            else:
                out.append(f"{D}*{t} = {ctx.v('q')}*{t}*{D}" + (" + 1" if kind == "qdiff" else ""))
            for j, t2 in enumerate(ts):
                if j != i:
                    out.append(f"{D}*{t2} = {t2}*{D}")
        return out

    return rel


def _diffusion(ctx):
    n = ctx["n"]
    xs, Ds = _idx("x", n), _idx("D", n)
    rels = []
    for j in range(n):
        for i in range(j):
            cij, cji = ctx.v(f"c{i + 1}{j + 1}"), ctx.v(f"c{j + 1}{i + 1}")
            rels.append(
                f"rel {Ds[j]}*{Ds[i]} = {cij}/{cji}*{Ds[i]}*{Ds[j]} - {cji}^-1*{xs[j]}*{Ds[i]} + {cji}^-1*{xs[i]}*{Ds[j]}"
            )
    return _doc("algebra diffusion", ctx.ring(f"[{','.join(xs)}]"), "vars " + ", ".join(Ds), rels)


def _diffusion_params(n):
    # beyond two generators the overlaps force every c_ij to coincide
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out.append(Param(f"c{i}{j}", f"c{i}{j}" if n == 2 else "c", constraint="nonzero"))
    return out


def _diffusion_check(ctx, p):
    n = ctx["n"]
    if n < 3:
        return
    names = [f"c{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for nm in names[1:]:
        _zero(p, f"{ctx.v(names[0])} - {ctx.v(nm)}", "diffusion with n >= 3 needs all c_ij equal for the overlaps D_k D_j D_i to resolve")


def _diffusion_relations(ctx):
    n = ctx["n"]
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(
                f"{ctx.v(f'c{i}{j}')}*D{i}*D{j} - {ctx.v(f'c{j}{i}')}*D{j}*D{i} = x{j}*D{i} - x{i}*D{j}"
            )
    return out


def _additive_weyl(ctx):
    n = ctx["n"]
    xs, ys = _idx("x", n), _idx("y", n)
    return _doc(
        "algebra additive_weyl",
        ctx.ring(f"[{','.join(xs)}]"),
        "vars " + ", ".join(ys),
        [_sigma(y, [_scale(x, ctx.v(f"q{i + 1}"))]) for i, (x, y) in enumerate(zip(xs, ys))],
        [_delta(y, [(x, "1")]) for x, y in zip(xs, ys)],
    )


def _additive_weyl_relations(ctx):
    n = ctx["n"]
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out.append(f"y{i}*x{j} = " + (f"{ctx.v(f'q{i}')}*x{i}*y{i} + 1" if i == j else f"x{j}*y{i}"))
    return out


def _multiplicative_weyl(ctx):
    n = ctx["n"]
    xs = _idx("x", n)
    rels = [f"rel x{j}*x{i} = {ctx.v(f'l{j}{i}')}*x{i}*x{j}" for j in range(1, n + 1) for i in range(1, j)]
    return _doc("algebra multiplicative_weyl", ctx.ring(), "vars " + ", ".join(xs), rels)


def _multiplicative_weyl_relations(ctx):
    n = ctx["n"]
    return [f"x{j}*x{i} = {ctx.v(f'l{j}{i}')}*x{i}*x{j}" for j in range(1, n + 1) for i in range(1, j)]


def _uq_so3(ctx):
    s = ctx.v("s")
    return _doc(
        "algebra uq_so3",
        ctx.ring(),
        "vars I1, I2, I3",
        f"rel I2*I1 = {s}^2*I1*I2 - {s}*I3",
        f"rel I3*I1 = {s}^-2*I1*I3 + {s}^-1*I2",
        f"rel I3*I2 = {s}^2*I2*I3 - {s}*I1",
    )


def _uq_so3_relations(ctx):
    s = ctx.v("s")
    return [
        f"I2*I1 - {s}^2*I1*I2 = -{s}*I3",
        f"I3*I1 - {s}^-2*I1*I3 = {s}^-1*I2",
        f"I3*I2 - {s}^2*I2*I3 = -{s}*I1",
    ]


def _skew3(ctx):
    a, b, g = ctx.v("alpha"), ctx.v("beta"), ctx.v("gamma")
    lam, mu, nu = f"({ctx['lam']})", f"({ctx['mu']})", f"({ctx['nu']})"
    return _doc(
        "algebra skew3",
        ctx.ring(),
        "vars x, y, z",
        f"rel y*x = {g}^-1*x*y - {g}^-1*{nu}",
        f"rel z*x = {b}*x*z + {mu}",
        f"rel z*y = {a}^-1*y*z - {a}^-1*{lam}",
    )


def _skew3_relations(ctx):
    a, b, g = ctx.v("alpha"), ctx.v("beta"), ctx.v("gamma")
    return [
        f"y*z - {a}*z*y = ({ctx['lam']})",
        f"z*x - {b}*x*z = ({ctx['mu']})",
        f"x*y - {g}*y*x = ({ctx['nu']})",
    ]


def _dispin(ctx):
    return _doc(
        "algebra dispin",
        ctx.ring(),
        "vars x, y, z",
        "rel y*x = x*y - x",
        "rel z*x = -x*z + y",
        "rel z*y = y*z - z",
    )


def _woronowicz(ctx):
    v = ctx.v("nu")
    return _doc(
        "algebra woronowicz",
        ctx.ring(),
        "vars x, y, z",
        f"rel y*x = {v}^-2*x*y - {v}^-1*z",
        f"rel z*x = {v}^-4*x*z - {v}^-4*(1 + {v}^2)*x",
        f"rel z*y = {v}^4*y*z + (1 + {v}^2)*y",
    )


def _woronowicz_relations(ctx):
    v = ctx.v("nu")
    return [
        f"x*z - {v}^4*z*x = (1 + {v}^2)*x",
        f"x*y - {v}^2*y*x = {v}*z",
        f"z*y - {v}^4*y*z = (1 + {v}^2)*y",
    ]


# twist exponents of e12, e13, e23, f12, f13, f23 on l1, l2, k1, k2
_VQ_SIGMA = {
    "e12": {"l1": 2, "l2": -1, "k1": -2, "k2": 1},
    "e13": {"l1": 1, "l2": 1, "k1": -1, "k2": -1},
    "e23": {"l1": -1, "l2": 2, "k1": 1, "k2": -2},
    "f12": {"l1": -2, "l2": 1, "k1": 2, "k2": -1},
    "f13": {"l1": -1, "l2": -1, "k1": 1, "k2": 1},
    "f23": {"l1": 1, "l2": -2, "k1": -1, "k2": 2},
}


def _vq_sl3(ctx):
    q = ctx.v("q")
    lines = []
    for var, ex in _VQ_SIGMA.items():
        lines.append(_sigma(var, [_scale(g, f"{q}^{e}") for g, e in ex.items()]))
    D = f"({q}^2 - {q}^-2)"
    lines += [
        f"rel e13*e12 = {q}^-2*e12*e13",
        f"rel e23*e12 = {q}^2*e12*e23 - {q}*e13",
        f"rel e23*e13 = {q}^-2*e13*e23",
        f"rel f13*f12 = {q}^-2*f12*f13",
        f"rel f23*f12 = {q}^2*f12*f23 - {q}*f13",
        f"rel f23*f13 = {q}^-2*f13*f23",
        f"rel f12*e12 = e12*f12 - (k1^2 - l1^2)/{D}",
        f"rel f13*e12 = e12*f13 - {q}^-1*k1^2*f23",
        f"rel f12*e13 = e13*f12 + {q}^-1*l1^2*e23",
        f"rel f13*e13 = e13*f13 + (k1^2*k2^2 - l1^2*l2^2)/{D}",
        f"rel f23*e13 = e13*f23 - {q}*k2^2*e12",
        f"rel f13*e23 = e23*f13 + {q}*l2^2*f12",
        f"rel f23*e23 = e23*f23 - (k2^2 - l2^2)/{D}",
    ]
    return _doc("algebra vq_sl3", ctx.ring("[l1,l2,k1,k2]"), "vars e12, e13, e23, f12, f13, f23", lines)


def _vq_sl3_relations(ctx):
    q = ctx.v("q")
    D = f"({q}^2 - {q}^-2)"
    return [
        f"e13*e12 = {q}^-2*e12*e13",
        f"e23*e12 = {q}^2*e12*e23 - {q}*e13",
        f"f23*f12 = {q}^2*f12*f23 - {q}*f13",
        f"e12*f12 = f12*e12 + (k1^2 - l1^2)/{D}",
        f"e12*f13 = f13*e12 + {q}*f23*k1^2",
        f"e13*f12 = f12*e13 - {q}^-1*l1^2*e23",
        f"e13*f13 = f13*e13 - (k1^2*k2^2 - l1^2*l2^2)/{D}",
        f"e13*f23 = f23*e13 + {q}*k2^2*e12",
        f"e23*f13 = f13*e23 - {q}^-1*f12*l2^2",
        f"e23*f23 = f23*e23 + (k2^2 - l2^2)/{D}",
        f"e12*k1 = {q}^-2*k1*e12",
        f"k1*f12 = {q}^-2*f12*k1",
        f"e23*l2 = {q}^2*l2*e23",
        f"l2*f23 = {q}^2*f23*l2",
        "e12*f23 = f23*e12",
    ]


def _algebra_u(ctx):
    n = ctx["n"]
    q = ctx.v("q")
    xs, ys, zs = _idx("x", n), _idx("y", n), _idx("z", n)
    lines = []
    for i in range(n):
        lines.append(_sigma(ys[i], [_scale(xs[i], q)]))
    for i in range(n):
        lines.append(_sigma(zs[i], [_scale(xs[i], f"{q}^-1")]))
    for i in range(n):
        lines.append(f"rel {zs[i]}*{ys[i]} = {q}^2*{ys[i]}*{zs[i]} - {q}^2*{xs[i]}^2")
    return _doc("algebra algebra_u", ctx.ring(f"[{','.join(xs)}]"), "vars " + ", ".join(ys + zs), lines)


def _algebra_u_relations(ctx):
    n, q = ctx["n"], ctx.v("q")
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = "" if i != j else f"{q}*"
            out.append(f"y{j}*x{i} = {e}x{i}*y{j}")
            out.append(f"z{j}*x{i} = " + (f"{q}^-1*x{i}*z{j}" if i == j else f"x{i}*z{j}"))
        out.append(f"z{i}*y{i} = {q}^2*y{i}*z{i} - {q}^2*x{i}^2")
    return out


def _manin(ctx):
    q = ctx.v("q")
    return _doc(
        "algebra manin",
        ctx.ring("[u]"),
        "vars x, y, v",
        _sigma("x", [_scale("u", q)]),
        _sigma("y", [_scale("u", f"{q}^-1")]),
        f"rel y*x = x*y - ({q} - {q}^-1)*u*v",
        f"rel v*x = {q}^-1*x*v",
        f"rel v*y = {q}*y*v",
    )


def _manin_relations(ctx):
    q = ctx.v("q")
    return [
        f"x*u = {q}*u*x",
        f"y*u = {q}^-1*u*y",
        "v*u = u*v",
        f"x*v = {q}*v*x",
        f"v*y = {q}*y*v",
        f"y*x - x*y = -({q} - {q}^-1)*u*v",
    ]


def _q_heisenberg(ctx):
    n, q = ctx["n"], ctx.v("q")
    xs, ys, zs = _idx("x", n), _idx("y", n), _idx("z", n)
    lines = []
    for i in range(n):
        lines.append(f"rel {ys[i]}*{xs[i]} = {q}*{xs[i]}*{ys[i]}")
        lines.append(f"rel {zs[i]}*{xs[i]} = {q}^-1*{xs[i]}*{zs[i]} + {ys[i]}")
        lines.append(f"rel {zs[i]}*{ys[i]} = {q}*{ys[i]}*{zs[i]}")
    return _doc("algebra q_heisenberg", ctx.ring(), "vars " + ", ".join(xs + ys + zs), lines)


def _q_heisenberg_relations(ctx):
    n, q = ctx["n"], ctx.v("q")
    out = []
    for i in range(1, n + 1):
        out += [f"z{i}*y{i} = {q}*y{i}*z{i}", f"z{i}*x{i} = {q}^-1*x{i}*z{i} + y{i}", f"y{i}*x{i} = {q}*x{i}*y{i}"]
        for j in range(1, n + 1):
            if i != j:
                out += [f"z{j}*y{i} = y{i}*z{j}", f"z{j}*x{i} = x{i}*z{j}", f"y{j}*x{i} = x{i}*y{j}"]
    return out


def _uq_sl2(ctx):
    q = ctx.v("q")
    return _doc(
        "algebra uq_sl2",
        ctx.ring("[z^+-]"),
        "vars x, y",
        _sigma("x", [_scale("z", f"{q}^-2")]),
        _sigma("y", [_scale("z", f"{q}^2")]),
        f"rel y*x = x*y - (z - z^-1)/({q} - {q}^-1)",
    )


def _uq_sl2_relations(ctx):
    q = ctx.v("q")
    return [f"x*z = {q}^-2*z*x", f"y*z = {q}^2*z*y", f"x*y - y*x = (z - z^-1)/({q} - {q}^-1)"]


def _hayashi(ctx):
    n, q = ctx["n"], ctx.v("q")
    ys, xs, zs = _idx("y", n), _idx("x", n), _idx("z", n)
    lines = []
    for i in range(n):
        lines.append(_sigma(xs[i], [_scale(ys[i], f"{q}^-1")]))
    for i in range(n):
        lines.append(_sigma(zs[i], [_scale(ys[i], q)]))
    for i in range(n):
        lines.append(f"rel {zs[i]}*{xs[i]} = {q}*{xs[i]}*{zs[i]} + {ys[i]}^-1")
    ring = ctx.ring("[" + ",".join(f"{y}^+-" for y in ys) + "]")
    return _doc("algebra hayashi", ring, "vars " + ", ".join(xs + zs), lines)


def _hayashi_relations(ctx):
    n, q = ctx["n"], ctx.v("q")
    out = []
    for i in range(1, n + 1):
        out += [
            f"(z{i}*x{i} - {q}*x{i}*z{i})*y{i} = 1",
            f"y{i}*(z{i}*x{i} - {q}*x{i}*z{i}) = 1",
            f"z{i}*y{i} = {q}*y{i}*z{i}",
            f"y{i}*x{i} = {q}*x{i}*y{i}",
        ]
    return out


def _dq_sq(ctx):
    n = ctx["n"]
    m = _matrix(ctx, "q", n)
    xs, ds = _idx("x", n), _idx("d", n)
    inner = _doc(
        "algebra quantum_space",
        ctx.ring(),
        "vars " + ", ".join(xs),
        [f"rel x{j}*x{i} = {m(j, i)}*x{i}*x{j}" for j in range(1, n + 1) for i in range(1, j)],
    )
    lines = []
    for i in range(1, n + 1):
        lines.append(_sigma(f"d{i}", [_scale(f"x{j}", m(j, i)) for j in range(1, n + 1) if j != i]))
        lines.append(_delta(f"d{i}", [(f"x{i}", "1")]))
    lines += [f"rel d{j}*d{i} = {m(j, i)}*d{i}*d{j}" for j in range(1, n + 1) for i in range(1, j)]
    return _doc("algebra dq_sq", _nest(inner), "vars " + ", ".join(ds), lines)


def _dq_sq_relations(ctx):
    n = ctx["n"]
    m = _matrix(ctx, "q", n)
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out.append(f"x{i}*x{j} = {m(i, j)}*x{j}*x{i}")
            out.append(f"d{i}*x{j} - {m(j, i)}*x{j}*d{i} = " + ("1" if i == j else "0"))
            out.append(f"d{i}*d{j} = {m(i, j)}*d{j}*d{i}")
    return out


def _witten(ctx):
    q, x2, x5, x6, x7 = (ctx.v(k) for k in ("q", "xi2", "xi5", "xi6", "xi7"))
    inner = _doc(
        "algebra witten_inner",
        ctx.ring("[x]"),
        "vars z",
        _sigma("z", [_scale("x", f"{q}^-1")]),
        _delta("z", [("x", f"-{q}^-1*{x2}*x")]),
    )
    return _doc(
        "algebra witten",
        _nest(inner),
        "vars y",
        _sigma("y", [("x", f"{x5}*x", f"{x5}^-1*x"), ("z", f"{q}^-1*(z - {x2})", f"{q}*z + {x2}")]),
        _delta("y", [("x", f"{x6}*z^2 + {x7}*z")]),
    )


def _witten_relations(ctx):
    q, x2, x5, x6, x7 = (ctx.v(k) for k in ("q", "xi2", "xi5", "xi6", "xi7"))
    return [
        f"x*z - {q}*z*x = {x2}*x",
        f"z*y - {q}*y*z = {x2}*y",
        f"y*x - {x5}*x*y = {x6}*z^2 + {x7}*z",
    ]


def _nested_pairs(ctx, name, build_level, var_pair):
    """Nested levels ``<x_1,y_1>``, ``<x_2,y_2>``, ... built innermost first."""
    n = ctx["n"]
    text = None
    for k in range(1, n + 1):
        a, b = var_pair(k)
        body = build_level(k)
        head = f"algebra {name}{k}" if k < n else f"algebra {name}"
        ring = ctx.ring() if text is None else _nest(text)
        text = _doc(head, ring, f"vars {a}, {b}", body)
    return text


def _maltsiniotis(ctx):
    m = _matrix(ctx, "q", ctx["n"])
    lam = lambda i: ctx.v(f"lambda{i}")  # noqa: E731

    def level(k):
        lines = []
        sx = [_scale(f"x{i}", f"{lam(i)}^-1*{m(k, i)}") for i in range(1, k)]
        sx += [_scale(f"y{i}", f"{lam(i)}*{m(i, k)}") for i in range(1, k)]
        sy = [_scale(f"x{i}", m(i, k)) for i in range(1, k)] + [_scale(f"y{i}", m(k, i)) for i in range(1, k)]
        lines.append(_sigma(f"x{k}", sx))
        lines.append(_sigma(f"y{k}", sy))
        tail = " + ".join(["1"] + [f"({lam(j)} - 1)*y{j}*x{j}" for j in range(1, k)])
        lines.append(f"rel y{k}*x{k} = {lam(k)}^-1*x{k}*y{k} - {lam(k)}^-1*({tail})")
        return lines

    return _nested_pairs(ctx, "maltsiniotis", level, lambda k: (f"x{k}", f"y{k}"))


def _maltsiniotis_relations(ctx):
    n = ctx["n"]
    m = _matrix(ctx, "q", n)
    lam = lambda i: ctx.v(f"lambda{i}")  # noqa: E731
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out += [
                f"x{i}*x{j} = {lam(i)}*{m(i, j)}*x{j}*x{i}",
                f"y{i}*y{j} = {m(i, j)}*y{j}*y{i}",
                f"x{i}*y{j} = {m(j, i)}*y{j}*x{i}",
                f"y{i}*x{j} = {lam(i)}^-1*{m(j, i)}*x{j}*y{i}",
            ]
        tail = " + ".join(["1"] + [f"({lam(j)} - 1)*y{j}*x{j}" for j in range(1, i)])
        out.append(f"x{i}*y{i} - {lam(i)}*y{i}*x{i} = {tail}")
    return out


def _hecke(ctx):
    n = ctx["n"]
    q = ctx.v("q")
    p = _matrix(ctx, "p", n)

    # levels are added from index n down to 1; level k carries x_k, d_k
    def level(k):
        lines = []
        inner = range(k + 1, n + 1)
        lines.append(
            _sigma(
                f"x{k}",
                [_scale(f"x{j}", f"{p(k, j)}*{q}") for j in inner]
                + [_scale(f"d{j}", f"{q}^-1*{p(j, k)}") for j in inner],
            )
        )
        lines.append(
            _sigma(
                f"d{k}",
                [_scale(f"x{j}", f"{_inv(p(k, j))}*{q}") for j in inner]
                + [_scale(f"d{j}", f"{p(k, j)}*{q}^-1") for j in inner],
            )
        )
        tail = " + ".join(["1"] + [f"({q}^2 - 1)*x{j}*d{j}" for j in inner])
        lines.append(f"rel d{k}*x{k} = {q}^2*x{k}*d{k} + {tail}")
        return lines

    text = None
    for k in range(n, 0, -1):
        head = f"algebra hecke_weyl{k}" if k > 1 else "algebra hecke_weyl"
        ring = ctx.ring() if text is None else _nest(text)
        text = _doc(head, ring, f"vars x{k}, d{k}", level(k))
    return text


def _hecke_relations(ctx):
    n = ctx["n"]
    q = ctx.v("q")
    p = _matrix(ctx, "p", n)
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                out.append(f"x{i}*x{j} = {p(i, j)}*{q}*x{j}*x{i}")
                out.append(f"d{i}*d{j} = {p(i, j)}*{q}^-1*d{j}*d{i}")
            if i != j:
                out.append(f"d{i}*x{j} = {_inv(p(i, j))}*{q}*x{j}*d{i}")
        tail = " + ".join(["1", f"{q}^2*x{i}*d{i}"] + [f"({q}^2 - 1)*x{j}*d{j}" for j in range(i + 1, n + 1)])
        out.append(f"d{i}*x{i} = {tail}")
    return out


def _multiparam_weyl(ctx):
    g = _matrix(ctx, "g", ctx["n"])
    qq = lambda i: ctx.v(f"q{i}")  # noqa: E731

    def level(k):
        sx = [_scale(f"x{i}", f"{qq(i)}^-1*{g(k, i)}") for i in range(1, k)]
        sx += [_scale(f"y{i}", f"{qq(i)}*{g(i, k)}") for i in range(1, k)]
        sy = [_scale(f"x{i}", g(i, k)) for i in range(1, k)] + [_scale(f"y{i}", g(k, i)) for i in range(1, k)]
        tail = " + ".join(["1"] + [f"({qq(l)} - 1)*y{l}*x{l}" for l in range(1, k)])
        return [
            _sigma(f"x{k}", sx),
            _sigma(f"y{k}", sy),
            f"rel y{k}*x{k} = {qq(k)}^-1*x{k}*y{k} - {qq(k)}^-1*({tail})",
        ]

    return _nested_pairs(ctx, "multiparam_weyl", level, lambda k: (f"x{k}", f"y{k}"))


def _multiparam_weyl_relations(ctx):
    n = ctx["n"]
    g = _matrix(ctx, "g", n)
    qq = lambda i: ctx.v(f"q{i}")  # noqa: E731
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out.append(f"y{i}*y{j} = {g(i, j)}*y{j}*y{i}")
            if i < j:
                out.append(f"x{i}*x{j} = {qq(i)}*{g(i, j)}*x{j}*x{i}")
                out.append(f"x{i}*y{j} = {g(j, i)}*y{j}*x{i}")
            if j < i:
                out.append(f"x{i}*y{j} = {qq(j)}*{g(j, i)}*y{j}*x{i}")
        tail = " + ".join(["1"] + [f"({qq(l)} - 1)*y{l}*x{l}" for l in range(1, i)])
        out.append(f"x{i}*y{i} = {qq(i)}*y{i}*x{i} + {tail}")
    return out


def _symplectic(ctx):
    q = ctx.v("q")

    def level(k):
        sx = [_scale(f"x{i}", f"{q}^-1") for i in range(1, k)] + [_scale(f"y{i}", q) for i in range(1, k)]
        sy = [_scale(f"x{i}", f"{q}^-1") for i in range(1, k)] + [_scale(f"y{i}", q) for i in range(1, k)]
        parts = [f"{q}^{k - l}*y{l}*x{l}" for l in range(1, k)]
        rel = f"rel y{k}*x{k} = {q}^-2*x{k}*y{k}"
        if parts:
            rel += f" - {q}^-2*({q}^2 - 1)*(" + " + ".join(parts) + ")"
        return [_sigma(f"x{k}", sx), _sigma(f"y{k}", sy), rel]

    return _nested_pairs(ctx, "quantum_symplectic", level, lambda k: (f"x{k}", f"y{k}"))


def _symplectic_relations(ctx):
    n, q = ctx["n"], ctx.v("q")
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out += [
                f"y{j}*x{i} = {q}^-1*x{i}*y{j}",
                f"y{j}*y{i} = {q}*y{i}*y{j}",
                f"x{j}*x{i} = {q}^-1*x{i}*x{j}",
                f"x{j}*y{i} = {q}*y{i}*x{j}",
            ]
        rhs = " + ".join([f"({q}^2 - 1)*{q}^{i - l}*y{l}*x{l}" for l in range(1, i)]) or "0"
        out.append(f"x{i}*y{i} - {q}^2*y{i}*x{i} = {rhs}")
    return out


def _quadratic3(ctx):
    a = {k: ctx.v(k) for k in ("a1", "a2", "a3", "a4", "a5", "a6", "xi1", "xi2")}
    inner = _doc("algebra quadratic3_inner", ctx.ring("[z]"), "vars y", _delta("y", [("z", f"-{a['a4']}*z^2")]))
    return _doc(
        "algebra quadratic3",
        _nest(inner),
        "vars x",
        _delta(
            "x",
            [
                ("z", f"-({a['xi2']}*y^2 + {a['a5']}*y*z + {a['a6']}*z^2)"),
                ("y", f"-({a['a1']}*z + {a['a2']}*y^2 + {a['a3']}*y*z + {a['xi1']}*z^2)"),
            ],
        ),
    )


def _quadratic3_check(ctx, p):
    a = {k: ctx.v(k) for k in ("a2", "a3", "a4", "a5", "xi2")}
    for text in (f"{a['a4']}*{a['xi2']}", f"{a['a4']}*({a['a5']} - 2*{a['a2']})", f"{a['a4']}*{a['a3']}"):
        _zero(p, text, f"quadratic3 needs {text} = 0 for the outer variable to respect zy = yz + a4 z^2")


def _quadratic3_relations(ctx):
    a = {k: ctx.v(k) for k in ("a1", "a2", "a3", "a4", "a5", "a6", "xi1", "xi2")}
    return [
        f"y*x = x*y + {a['a1']}*z + {a['a2']}*y^2 + {a['a3']}*y*z + {a['xi1']}*z^2",
        f"z*x = x*z + {a['xi2']}*y^2 + {a['a5']}*y*z + {a['a6']}*z^2",
        f"z*y = y*z + {a['a4']}*z^2",
    ]


def _bgv(ctx):
    q, mu = ctx.v("q"), ctx.v("mu")
    return _doc(
        "algebra bgv",
        ctx.ring("[b]"),
        "vars a, c, d",
        _sigma("a", [_scale("b", f"{q}^-1")]),
        _sigma("c", [_scale("b", f"{mu}^-1")]),
        _sigma("d", [_scale("b", q)]),
        f"rel c*a = {q}*a*c",
        f"rel d*a = a*d - ({q}^-1 - {q})*b*c",
        f"rel d*c = {q}*c*d",
    )


def _bgv_relations(ctx):
    q, mu = ctx.v("q"), ctx.v("mu")
    return [
        f"b*a = {q}*a*b",
        f"d*b = {q}*b*d",
        f"c*a = {q}*a*c",
        f"d*c = {q}*c*d",
        f"b*c = {mu}*c*b",
        f"a*d - d*a = ({q}^-1 - {q})*b*c",
    ]


def _quantum_space(ctx, name="quantum_space", r=0):
    n = ctx["n"]
    m = _matrix(ctx, "q", n)
    xs = [f"x{i}" + (" invertible" if i <= r else "") for i in range(1, n + 1)]
    rels = [f"rel x{j}*x{i} = {m(i, j)}*x{i}*x{j}" for j in range(1, n + 1) for i in range(1, j)]
    return _doc(f"algebra {name}", ctx.ring(), "vars " + ", ".join(xs), rels)


def _quantum_space_relations(ctx):
    n = ctx["n"]
    m = _matrix(ctx, "q", n)
    return [f"x{j}*x{i} = {m(i, j)}*x{i}*x{j}" for i in range(1, n + 1) for j in range(1, n + 1)]


def _quantum_torus(ctx):
    r = ctx["r"] if ctx["r"] >= 0 else ctx["n"]
    if r > ctx["n"]:
        raise ParamError(f"r must be at most n={ctx['n']}, got {r}")
    return _quantum_space(ctx, "quantum_torus", r)


def _quantum_torus_relations(ctx):
    r = ctx["r"] if ctx["r"] >= 0 else ctx["n"]
    return _quantum_space_relations(ctx) + [f"x{i}*x{i}^-1 = 1" for i in range(1, r + 1)] + [
        f"x{i}^-1*x{i} = 1" for i in range(1, r + 1)
    ]


def _skew_torus(ctx):
    n, r = ctx["n"], ctx["r"]
    if not 0 <= r <= n:
        raise ParamError(f"need 0 <= r <= n, got r={r}, n={n}")
    q = ctx.v("q")
    xs = [f"x{i}" + (" invertible" if i <= r else "") for i in range(1, n + 1)]
    lines = [_sigma(f"x{i}", [_scale("t", f"{q}^{i}")]) for i in range(1, n + 1)]
    lines += [f"rel x{j}*x{i} = {q}^{j - i}*x{i}*x{j}" for j in range(1, n + 1) for i in range(1, j)]
    return _doc("algebra skew_quantum_torus", ctx.ring("[t^+-]"), "vars " + ", ".join(xs), lines)


def _skew_torus_relations(ctx):
    n, q = ctx["n"], ctx.v("q")
    out = [f"x{i}*t = {q}^{i}*t*x{i}" for i in range(1, n + 1)]
    out += [f"x{j}*x{i} = {q}^{j - i}*x{i}*x{j}" for j in range(1, n + 1) for i in range(1, j)]
    return out


# ----------------------------------------------------------------------
# the table


def _n(default=2, minimum=1):
    return Param("n", default, kind="int", minimum=minimum)


_ENTRIES = [
    CatalogEntry("polynomial", "PBW extension", "habitual polynomial ring R[t1,...,tn]",
                 (_n(), Param("coeffs", "QQ", kind="text")), _polynomial, quasi_commutative=True),
    CatalogEntry("ore-derivation", "PBW extension", "skew polynomial ring of derivation type R[x; delta]",
                 (Param("delta", "t^2", kind="text"),), _ore_derivation,
                 relations=lambda c: [f"x*t = t*x + ({c['delta']})"]),
    CatalogEntry("weyl", "PBW extension", "Weyl algebra A_n(R) of differential operators",
                 (_n(1), Param("coeffs", "QQ", kind="text")), _weyl, relations=_weyl_relations),
    CatalogEntry("extended-weyl", "PBW extension", "extended Weyl algebra B_n over rational functions",
                 (_n(1),), lambda c: _weyl(c, "extended_weyl", rational=True), relations=_weyl_relations),
    CatalogEntry("enveloping", "PBW extension", "universal enveloping algebra U(g) from a bracket table",
                 (Param("lie", "sl2", kind="text"), Param("basis", "", kind="text"), Param("brackets", "", kind="text")),
                 _enveloping, relations=_enveloping_relations, checks=_enveloping_check,
                 notes="presets: sl2, heisenberg, so3; or basis=a,b,c brackets=[a,b]=c;..."),
    CatalogEntry("dqh", "Ore extension of bijective type", "q-differential operators D_{q,h}[x,y]: xy - qyx = h",
                 (Param("q", "q", constraint="nonzero"), Param("h", "h")), _dqh,
                 relations=lambda c: [f"x*y - {c.v('q')}*y*x = {c.v('h')}"]),
    CatalogEntry("shift", "Ore extension of bijective type", "shift operators S_h: x_h p(t) = p(t-h) x_h",
                 (Param("h", "h"),), _shift, relations=lambda c: [f"xh*t = (t - {c.v('h')})*xh"],
                 quasi_commutative=True),
    CatalogEntry("mixed", "Ore extension of bijective type", "mixed algebra D_h of derivatives and shifts",
                 (Param("h", "h"),), _mixed,
                 relations=lambda c: ["x*t = t*x + 1", f"xh*t = (t - {c.v('h')})*xh", "xh*x = x*xh"]),
    CatalogEntry("discrete-linear", "Ore extension of bijective type", "multidimensional discrete linear systems",
                 (_n(),), _discrete_linear, quasi_commutative=True,
                 relations=lambda c: [f"x{i}*t{i} = (t{i} + 1)*x{i}" for i in range(1, c['n'] + 1)]),
    CatalogEntry("shift-operators", "operator algebra", "linear partial shift operators",
                 (_n(1), Param("m", 1, kind="int"), Param("rational", 0, kind="int", minimum=0)),
                 _operator("shift"), relations=_operator_relations("shift"), quasi_commutative=True),
    CatalogEntry("difference-operators", "operator algebra", "linear partial difference operators",
                 (_n(1), Param("m", 1, kind="int"), Param("rational", 0, kind="int", minimum=0)),
                 _operator("difference"), relations=_operator_relations("difference")),
    CatalogEntry("q-dilation", "operator algebra", "linear partial q-dilation operators",
                 (_n(1), Param("m", 1, kind="int"), Param("rational", 0, kind="int", minimum=0),
                  Param("q", "q", constraint="nonzero")),
                 _operator("dilation"), relations=_operator_relations("dilation"), quasi_commutative=True),
    CatalogEntry("q-differential", "operator algebra", "linear partial q-differential operators",
                 (_n(1), Param("m", 1, kind="int"), Param("rational", 0, kind="int", minimum=0),
                  Param("q", "q", constraint="nonzero")),
                 _operator("qdiff"), relations=_operator_relations("qdiff")),
    CatalogEntry("diffusion", "diffusion algebra", "diffusion algebra: c_ij D_i D_j - c_ji D_j D_i = x_j D_i - x_i D_j",
                 (_n(),), _diffusion, relations=_diffusion_relations, checks=_diffusion_check,
                 notes="parameters c_ij for i != j default to symbols and must be nonzero"),
    CatalogEntry("additive-weyl", "quantum algebra", "additive analogue A_n(q_1,...,q_n) of the Weyl algebra",
                 (_n(1),), _additive_weyl, relations=_additive_weyl_relations),
    CatalogEntry("multiplicative-weyl", "quantum algebra", "multiplicative analogue O_n(lambda_ji) of the Weyl algebra",
                 (_n(),), _multiplicative_weyl, relations=_multiplicative_weyl_relations, quasi_commutative=True),
    CatalogEntry("uq-so3", "quantum algebra", "U'_q(so(3)) with q = s^2",
                 (Param("s", "s", constraint="nonzero"),), _uq_so3, relations=_uq_so3_relations,
                 notes="the relations involve q^(1/2); the parameter s is that square root"),
    CatalogEntry("skew3", "quantum algebra", "3-dimensional skew polynomial algebra",
                 (Param("alpha", "alpha", constraint="nonzero"), Param("beta", "beta", constraint="nonzero"),
                  Param("gamma", "gamma", constraint="nonzero"), Param("lam", "0", kind="text"),
                  Param("mu", "0", kind="text"), Param("nu", "0", kind="text")),
                 _skew3, relations=_skew3_relations,
                 notes="lam, mu, nu are affine expressions in x, y, z; overlap consistency depends on them"),
    CatalogEntry("dispin", "quantum algebra", "dispin algebra U(osp(1,2))", (), _dispin,
                 relations=lambda c: ["y*z - z*y = z", "z*x + x*z = y", "x*y - y*x = x"]),
    CatalogEntry("woronowicz", "quantum algebra", "Woronowicz algebra W_nu(sl(2))",
                 (Param("nu", "nu", constraint="nonzero"),), _woronowicz, relations=_woronowicz_relations,
                 notes="nu must not be a root of unity; for a symbolic nu this is an assumption, not a check"),
    CatalogEntry("vq-sl3", "quantum algebra", "V_q(sl_3) over QQ(q)[l1,l2,k1,k2]",
                 (Param("q", "q", constraint="nonzero"),), _vq_sl3, relations=_vq_sl3_relations,
                 notes="instantiated over QQ(q) instead of the complex numbers; needs q^8 != 1"),
    CatalogEntry("algebra-u", "quantum algebra", "the algebra U over k[x_1,...,x_n]",
                 (_n(1), Param("q", "q", constraint="nonzero")), _algebra_u, relations=_algebra_u_relations),
    CatalogEntry("manin", "quantum algebra", "coordinate algebra O(M_q(2)) over k[u]",
                 (Param("q", "q", constraint="nonzero"),), _manin, relations=_manin_relations),
    CatalogEntry("q-heisenberg", "quantum algebra", "q-Heisenberg algebra H_n(q)",
                 (_n(1), Param("q", "q", constraint="nonzero")), _q_heisenberg, relations=_q_heisenberg_relations),
    CatalogEntry("uq-sl2", "quantum algebra", "quantum enveloping algebra U_q(sl(2)) over k[z, z^-1]",
                 (Param("q", "q", constraint="nonzero"),), _uq_sl2, relations=_uq_sl2_relations,
                 checks=lambda c, p: _nonzero(p, f"{c.v('q')} - {c.v('q')}^-1", "q must not be 1 or -1")),
    CatalogEntry("hayashi", "quantum algebra", "Hayashi algebra W_q(J) over k[y_1^(+-1),...]",
                 (_n(1), Param("q", "q", constraint="nonzero")), _hayashi, relations=_hayashi_relations),
    CatalogEntry("dq-sq", "quantum algebra", "q-differential operators D_q(S_q) on a quantum space (nested)",
                 (_n(),), _dq_sq, relations=_dq_sq_relations),
    CatalogEntry("witten", "quantum algebra", "Witten deformation W(xi) with xi1 = xi3 = q, xi4 = xi2 (nested)",
                 (Param("q", "q", constraint="nonzero"), Param("xi2", "xi2"), Param("xi5", "xi5", constraint="nonzero"),
                  Param("xi6", "xi6"), Param("xi7", "xi7")), _witten, relations=_witten_relations,
                 notes="the twist of y respects the inner relation only when xi2*(1 - xi3) = xi4*(1 - xi1)"),
    CatalogEntry("maltsiniotis", "quantum algebra", "quantum Weyl algebra A_n^(q,lambda) (nested)",
                 (_n(),), _maltsiniotis, relations=_maltsiniotis_relations),
    CatalogEntry("quantum-weyl-hecke", "quantum algebra", "quantum Weyl algebra A_n(q, p_ij) (nested)",
                 (_n(), Param("q", "q", constraint="nonzero")), _hecke, relations=_hecke_relations,
                 notes="p_ji = p_ij^-1 for i < j"),
    CatalogEntry("multiparam-weyl", "quantum algebra", "multiparameter quantized Weyl algebra A_n^(Q,Gamma) (nested)",
                 (_n(),), _multiparam_weyl, relations=_multiparam_weyl_relations),
    CatalogEntry("quantum-symplectic", "quantum algebra", "quantum symplectic space O_q(sp(k^2n)) (nested)",
                 (_n(), Param("q", "q", constraint="nonzero")), _symplectic, relations=_symplectic_relations),
    CatalogEntry("quadratic3", "quadratic algebra", "quadratic algebra in 3 variables over k[z]<y> (nested)",
                 (Param("a1", "a1"), Param("a2", "a2"), Param("a3", "0"), Param("a4", "a4"),
                  Param("a5", "2*a2"), Param("a6", "a6"), Param("xi1", "xi1"), Param("xi2", "0")),
                 _quadratic3, relations=_quadratic3_relations, checks=_quadratic3_check,
                 notes="x respects the inner relation iff a4*xi2 = a4*(a5 - 2*a2) = a4*a3 = 0"),
    CatalogEntry("bgv", "quantum algebra", "algebra on a, b, c, d over k[b] with bc = mu cb",
                 (Param("q", "q", constraint="nonzero"), Param("mu", "1", constraint="nonzero")),
                 _bgv, relations=_bgv_relations),
    CatalogEntry("quantum-space", "skew quantum polynomials", "quantum space x_j x_i = q_ij x_i x_j",
                 (_n(),), lambda c: _quantum_space(c), relations=_quantum_space_relations, quasi_commutative=True),
    CatalogEntry("quantum-torus", "skew quantum polynomials", "multiparametric quantum torus (first r variables inverted)",
                 (_n(), Param("r", -1, kind="int", minimum=-1)), _quantum_torus, relations=_quantum_torus_relations,
                 quasi_commutative=True, notes="r = -1 inverts every variable"),
    CatalogEntry("skew-quantum-torus", "skew quantum polynomials", "skew quantum polynomials over QQ(q)[t^(+-1)]",
                 (_n(), Param("r", 1, kind="int", minimum=0), Param("q", "q", constraint="nonzero")),
                 _skew_torus, relations=_skew_torus_relations, quasi_commutative=True),
]


def _extra_params(entry: CatalogEntry, values: dict) -> list:
    """Parameters whose number depends on ``n`` (matrices and per-index constants)."""
    n = values.get("n", 0)
    key = entry.key
    if key == "diffusion":
        return _diffusion_params(n)
    if key == "additive-weyl":
        return [Param(f"q{i}", f"q{i}", constraint="nonzero") for i in range(1, n + 1)]
    if key == "multiplicative-weyl":
        return list(_pair_params("l", n, upper=False))
    if key in ("dq-sq", "quantum-space", "quantum-torus"):
        return list(_pair_params("q", n))
    if key == "maltsiniotis":
        return list(_pair_params("q", n)) + [Param(f"lambda{i}", f"lambda{i}", constraint="nonzero") for i in range(1, n + 1)]
    if key == "quantum-weyl-hecke":
        return list(_pair_params("p", n))
    if key == "multiparam-weyl":
        return list(_pair_params("g", n)) + [Param(f"q{i}", f"q{i}", constraint="nonzero") for i in range(1, n + 1)]
    return []


CATALOG = {e.key: e for e in _ENTRIES}


def list_catalog() -> list[tuple[str, str, str]]:
    """``(key, family, parameter signature)`` sorted by key."""
    return [(k, CATALOG[k].family, CATALOG[k].signature()) for k in sorted(CATALOG)]


def get_entry(key: str) -> CatalogEntry:
    try:
        return CATALOG[key]
    except KeyError:
        raise KeyError(f"unknown catalog entry {key!r}; try 'catalog list'") from None


def _nonzero(p, text, message):
    from .dsl import parse_expr

    if parse_expr(text, p).is_zero():
        raise ParamError(message)


def _zero(p, text, message):
    from .dsl import parse_expr

    if not parse_expr(text, p).is_zero():
        raise ParamError(message)


def _resolve(entry: CatalogEntry, params: dict) -> _Ctx:
    params = {k: v for k, v in (params or {}).items()}
    values = {}
    declared = list(entry.params)
    for prm in declared:
        values[prm.name] = _coerce_param(prm, params.pop(prm.name, prm.default))
    extra = _extra_params(entry, values)
    for prm in extra:
        values[prm.name] = _coerce_param(prm, params.pop(prm.name, prm.default))
    if params:
        known = ", ".join(p.name for p in declared + extra) or "none"
        raise ParamError(f"unknown parameter(s) for {entry.key}: {', '.join(sorted(params))} (known: {known})")
    ctx = _Ctx(entry, values)
    scalars = [p for p in declared + extra if p.kind == "scalar"]
    gens = []
    texts = [str(values[p.name]) for p in scalars]
    if entry.key == "enveloping":
        texts += [br.split("=", 1)[1] for br in str(_lie_data(ctx)[1] and values["brackets"] or "").split(";") if "=" in br]
        texts += [rhs for rhs, _ in _lie_data(ctx)[1].values()]
        basis = _lie_data(ctx)[0]
    else:
        basis = []
    skip = set(basis) | {"x", "y", "z"} if entry.key in ("enveloping", "skew3") else set(basis)
    for t in texts:
        for ident in _IDENT.findall(t):
            if ident not in gens and ident not in skip:
                gens.append(ident)
    ctx.field = f"QQ({','.join(gens)})" if gens else "QQ"
    for prm in scalars:
        if prm.constraint == "nonzero":
            try:
                val = parse_ring_element(str(values[prm.name]), parse_ring(ctx.field))
            except ParseError as exc:
                raise ParamError(f"parameter {prm.name}={values[prm.name]!r}: {exc}") from None
            if val.is_zero():
                raise ParamError(f"parameter {prm.name} must be nonzero")
    return ctx


def _coerce_param(prm: Param, value):
    if prm.kind == "int":
        try:
            iv = int(str(value).strip())
        except ValueError:
            raise ParamError(f"parameter {prm.name} must be an integer, got {value!r}") from None
        if iv < prm.minimum:
            raise ParamError(f"parameter {prm.name} must be at least {prm.minimum}, got {iv}")
        return iv
    text = str(value).strip()
    if prm.kind == "scalar":
        if not text:
            raise ParamError(f"parameter {prm.name} is empty")
        try:
            parse_tree(text)
        except ParseError as exc:
            raise ParamError(f"parameter {prm.name}={text!r}: {exc}") from None
    return text


def render(key: str, params: dict | None = None) -> str:
    """The definition text of a catalog entry."""
    entry = get_entry(key)
    ctx = _resolve(entry, params or {})
    return entry.builder(ctx)


def instantiate(key: str, params: dict | None = None):
    """Build and validate a catalog algebra."""
    entry = get_entry(key)
    ctx = _resolve(entry, params or {})
    text = entry.builder(ctx)
    try:
        alg = parse_definition(text)
    except ParseError as exc:
        raise ParamError(f"{key}: {exc}") from None
    from .quantum import QuantumPresentation

    core = alg.core if isinstance(alg, QuantumPresentation) else alg
    if entry.checks is not None:
        entry.checks(ctx, core)
    rep = validate(core)
    if not rep.ok:
        raise ParamError(f"{key}: " + "; ".join(f"{loc}: {msg}" for _, loc, msg in rep.errors()))
    return alg


def relations(key: str, params: dict | None = None) -> list[str]:
    """The defining relations of an entry in their original form, as ``lhs = rhs`` texts."""
    entry = get_entry(key)
    if entry.relations is None:
        return []
    return entry.relations(_resolve(entry, params or {}))


