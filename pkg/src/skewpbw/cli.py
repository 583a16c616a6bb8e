"""Command-line front end: ``skewpbw <command> ...``.

``ALG`` arguments name a catalog entry or a ``.spbw`` definition file.
Exit status is 0 on success, 1 when a definition or check fails, 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction
from functools import reduce

from . import catalog
from .coeff import QQ, PolynomialRing, RationalFunctionField, RingElem, laurent_ring
from .dsl import ParseError, emit, parse_definition, parse_expr
from .graded import assoc_algebra, top_component, tower, tower_constraints, tower_roundtrip
from .invariants import HypothesisError, RingFacts, dim_report, k_groups
from .poly import SkewPoly
from .presentation import check_confluence, validate
from .quantum import QuantumPresentation, invert_term, ore_left_witness, ore_right_witness

__all__ = ["main", "dispatch", "format_factored", "load_algebra"]


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


# ----------------------------------------------------------------------
# loading


def _params(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def load_algebra(spec: str, params: dict | None = None):
    """A catalog key or a path to a definition file."""
    if spec in catalog.CATALOG:
        try:
            return catalog.instantiate(spec, params or {})
        except catalog.ParamError as exc:
            raise UsageError(str(exc)) from None
    if params:
        raise UsageError("--param only applies to catalog entries")
    if not os.path.exists(spec):
        raise UsageError(f"{spec!r} is neither a catalog key nor a readable file; try 'catalog list'")
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {spec}: {exc}") from None
    try:
        return parse_definition(text)
    except ParseError as exc:
        raise CheckFailed(f"{spec}: {exc}") from None


def _core(alg):
    return alg.core if isinstance(alg, QuantumPresentation) else alg


def _expr(alg, text: str) -> SkewPoly:
    try:
        return parse_expr(text, alg)
    except ParseError as exc:
        raise UsageError(f"expression: {exc}") from None


# ----------------------------------------------------------------------
# factored display


def _leaves(x, out: list) -> None:
    if isinstance(x, SkewPoly):
        for c in x.terms.values():
            _leaves(c, out)
    elif isinstance(x, RingElem) and isinstance(x.ring, PolynomialRing):
        for _, c in x.ring.terms(x):
            _leaves(c, out)
    else:
        out.append(x)


def format_factored(f: SkewPoly) -> str:
    """``(P)/(D)`` when a common scalar factor ``1/D`` with ``D`` a Laurent polynomial pulls out.

    ``D`` must involve at least two terms and the scalar must commute with every
    variable; otherwise this is the ordinary printed form.  Minus signs between
    terms print as U+2212.
    """
    plain = str(f)
    leaves: list = []
    _leaves(f, leaves)
    if not leaves:
        return plain
    field = leaves[0].ring
    if not isinstance(field, RationalFunctionField) or any(c.ring != field for c in leaves):
        return plain
    nums = [c.v[0] for c in leaves]
    dens = [c.v[1] for c in leaves]
    g = reduce(lambda a, b: a.gcd(b), nums)
    lcm = reduce(lambda a, b: a.lcm(b), dens)
    if len(g.terms()) != 1 or len(lcm.terms()) < 2:
        return plain
    (gm, gc), = g.terms()
    # D = lcm / g as a Laurent polynomial over QQ in the field generators
    lr = laurent_ring(QQ, *field.gens)
    d_terms = {}
    for mono, coef in lcm.terms():
        exps = tuple(a - b for a, b in zip(mono, gm))
        d_terms[exps] = QQ.coerce(Fraction(int(coef.numerator), int(coef.denominator)) / Fraction(int(gc.numerator), int(gc.denominator)))
    D = lr.from_terms(d_terms)
    alg = f.alg
    scale = RingElem(field, field._norm(lcm, g))
    try:
        s = alg.coerce(scale)
        for v in alg.var_names:
            x = alg.var(v)
            if x * s != s * x:
                return plain
        scaled = f * s
    except Exception:
        return plain
    body = str(scaled)
    if len(scaled.terms) > 1 or any(len(_term_leaves(c)) > 1 for c in scaled.terms.values()):
        body = f"({body})"
    return f"{body}/({D})".replace(" - ", " − ")


def _term_leaves(c) -> list:
    out: list = []
    _leaves(c, out)
    return out


# ----------------------------------------------------------------------
# commands


def _fmt_records(pairs) -> str:
    return " ".join(f"{k}={v}" for k, v in pairs)


def cmd_check(args) -> int:
    alg = load_algebra(args.alg, _params(args.param))
    core = _core(alg)
    rep = validate(core)
    if rep.ok:
        rep.extend(check_confluence(core, degree_bound=args.degree_bound))
        rep.confluence_degree = args.degree_bound
    print(rep.render(args.format, title=core.name))
    return 0 if rep.ok else 1


def cmd_eval(args) -> int:
    alg = load_algebra(args.alg, _params(args.param))
    status = 0
    for text in args.expr:
        f = _expr(alg, text)
        if args.canonical:
            shown = str(f)
        else:
            shown = format_factored(f)
        if args.format == "records":
            print(_fmt_records([("expr", repr(text)), ("value", repr(shown))]))
        else:
            print(shown)
    return status


def cmd_gr(args) -> int:
    alg = load_algebra(args.alg, _params(args.param))
    core = _core(alg)
    A = assoc_algebra(core)
    if not args.expr:
        print(emit(A), end="")
        return 0
    for text in args.expr:
        f = _expr(core, text)
        if f.is_zero():
            raise CheckFailed("the zero element has no top component")
        m, top = top_component(f)
        if args.format == "records":
            print(_fmt_records([("expr", repr(text)), ("degree", m), ("top", repr(str(top)))]))
        else:
            print(f"degree {m}: {top}")
    return 0


def cmd_tower(args) -> int:
    alg = load_algebra(args.alg, _params(args.param))
    core = _core(alg)
    p = core if core.is_quasi_commutative() else assoc_algebra(core)
    lines = []
    if p is not core:
        lines.append(f"note: {core.name} is not quasi-commutative; using its companion with derivations and tails dropped")
    ok = True
    for step in tower(p):
        name = p.var_names[step.index]
        images = ", ".join(f"{k} -> {v}" for k, v in step.extension.sigma[0].images.items())
        bad = tower_roundtrip(step)
        ok = ok and not bad
        if args.format == "records":
            lines.append(_fmt_records([("step", step.index + 1), ("var", name), ("theta", repr(images)),
                                       ("roundtrip", "ok" if not bad else repr("; ".join(bad)))]))
        else:
            lines.append(f"theta_{step.index + 1} ({name}): {images or 'identity'}")
            lines.append("  inverse round-trip: " + ("ok" if not bad else "; ".join(bad)))
    bad3 = tower_constraints(p)
    ok = ok and not bad3
    for i, j, k in bad3:
        lines.append(f"constraint fails for ({p.var_names[i]}, {p.var_names[j]}, {p.var_names[k]})")
    if args.format == "records":
        lines.append(_fmt_records([("result", "ok" if ok else "failed"), ("constraints_failed", len(bad3))]))
    else:
        lines.append("constraints: " + ("ok" if not bad3 else f"{len(bad3)} failing"))
    print("\n".join(lines))
    return 0 if ok else 1


def _alpha(text: str, n: int) -> tuple:
    try:
        alpha = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--alpha expects comma-separated integers, got {text!r}") from None
    if len(alpha) != n:
        raise UsageError(f"--alpha needs {n} entries, got {len(alpha)}")
    return alpha


def cmd_ore(args) -> int:
    alg = load_algebra(args.alg, _params(args.param))
    if not isinstance(alg, QuantumPresentation):
        raise UsageError(f"{alg.name} has no invertible variables; Ore data applies to quantum tori")
    alpha = _alpha(args.alpha, alg.nvars)
    try:
        r = alg.base.coerce(_parse_scalar(args.coeff, alg))
        if args.invert:
            out = invert_term(alg, r, alpha)
            label = "inverse"
        else:
            f = _expr(alg, args.expr)
            fn = ore_right_witness if args.right else ore_left_witness
            out = fn(alg, f, r, alpha)
            label = "right witness" if args.right else "left witness"
    except (ArithmeticError, ValueError) as exc:
        raise CheckFailed(str(exc)) from None
    if args.format == "records":
        print(_fmt_records([("kind", label.replace(" ", "_")), ("value", repr(str(out)))]))
    else:
        print(f"{label}: {out}")
    return 0


def _parse_scalar(text: str, alg):
    from .dsl import parse_ring_element

    try:
        return parse_ring_element(text, alg.base)
    except ParseError as exc:
        raise UsageError(f"--coeff: {exc}") from None


def _facts(args) -> RingFacts:
    def dim(v):
        if v is None:
            return None
        if v.lower() in ("inf", "infinity"):
            return math.inf
        try:
            n = int(v)
        except ValueError:
            raise UsageError(f"dimension must be an integer or inf, got {v!r}") from None
        if n < 0:
            raise UsageError("dimensions are nonnegative")
        return n

    lk = dim(args.lkdim)
    if lk == math.inf:
        raise UsageError("--lkdim must be finite")
    return RingFacts(
        lgld=dim(args.lgld),
        lkdim=lk,
        is_noetherian=args.noetherian,
        is_domain=args.domain,
        is_semisimple=args.semisimple,
        is_field=args.field,
        is_regular=args.regular,
        is_psf=args.psf,
        k_trivial_action=args.trivial_k_action,
    )


def cmd_dims(args) -> int:
    alg = load_algebra(args.alg, _params(args.param))
    try:
        rep = dim_report(alg, _facts(args))
    except HypothesisError as exc:
        raise CheckFailed(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(rep.render(args.format))
    return 0


def cmd_ktheory(args) -> int:
    r = args.r
    if args.alg:
        alg = load_algebra(args.alg, _params(args.param))
        if r is None:
            r = alg.r if isinstance(alg, QuantumPresentation) else 0
    if r is None:
        r = 0
    if args.m < 0 or r < 0:
        raise UsageError("--m and --r must be nonnegative")
    try:
        k = k_groups(_facts(args), args.m, r)
    except HypothesisError as exc:
        raise CheckFailed(str(exc)) from None
    if args.format == "records":
        print(_fmt_records([("m", args.m), ("r", r)] + [(f"K{j}", m) for j, m in k.mults]))
    else:
        print(k)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for key, family, sig in catalog.list_catalog():
            if args.format == "records":
                print(_fmt_records([("key", key), ("family", repr(family)), ("params", repr(sig))]))
            else:
                print(f"{key:22s} {family:32s} {sig}")
        return 0
    if not args.key:
        raise UsageError(f"catalog {args.action} needs an entry key")
    try:
        entry = catalog.get_entry(args.key)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    params = _params(args.param)
    if args.action == "show":
        try:
            rels = catalog.relations(args.key, params)
            text = catalog.render(args.key, params)
        except catalog.ParamError as exc:
            raise UsageError(str(exc)) from None
        print(f"{entry.key}: {entry.title}")
        print(f"family: {entry.family}")
        print(f"parameters: {entry.signature() or 'none'}")
        if entry.notes:
            print(f"notes: {entry.notes}")
        if rels:
            print("relations:")
            for r in rels:
                print(f"  {r}")
        print("definition:")
        for ln in text.splitlines():
            print(f"  {ln}")
        return 0
    alg = load_algebra(args.key, params)
    text = emit(alg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


# ----------------------------------------------------------------------
# argument parsing


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewpbw", description="Exact computation in skew PBW extensions.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, alg=True, alg_optional=False):
        if alg:
            p.add_argument("alg", nargs="?" if alg_optional else None, help="catalog key or .spbw file")
        p.add_argument("--param", action="append", metavar="K=V", help="catalog parameter (repeatable)")
        p.add_argument("--format", choices=("text", "records"), default="text")

    p = sub.add_parser("check", help="validate a definition and check overlaps")
    common(p)
    p.add_argument("--degree-bound", type=int, default=4)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("eval", help="normalize expressions")
    common(p)
    p.add_argument("-e", "--expr", action="append", required=True)
    p.add_argument("--canonical", "--ascii", action="store_true", help="print the expanded normal form")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("gr", help="quasi-commutative companion and top components")
    common(p)
    p.add_argument("-e", "--expr", action="append")
    p.set_defaults(fn=cmd_gr)

    p = sub.add_parser("tower", help="iterated Ore extensions of a quasi-commutative algebra")
    common(p)
    p.set_defaults(fn=cmd_tower)

    p = sub.add_parser("ore", help="Ore witnesses and term inverses in a quantum torus")
    common(p)
    p.add_argument("-e", "--expr", default="1")
    p.add_argument("--coeff", default="1", help="coefficient r of the denominator r*x^alpha")
    p.add_argument("--alpha", required=True, help="exponent vector, e.g. 1,0")
    p.add_argument("--right", action="store_true")
    p.add_argument("--invert", action="store_true", help="invert r*x^alpha instead")
    p.set_defaults(fn=cmd_ore)

    def facts(p):
        p.add_argument("--lgld")
        p.add_argument("--lkdim")
        for flag in ("noetherian", "domain", "semisimple", "field", "regular", "psf", "trivial-k-action"):
            p.add_argument(f"--{flag}", action="store_true")

    p = sub.add_parser("dims", help="dimension bounds from declared facts about R")
    common(p)
    facts(p)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("ktheory", help="K-group decomposition")
    common(p, alg_optional=True)
    facts(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int)
    p.set_defaults(fn=cmd_ktheory)

    p = sub.add_parser("catalog", help="built-in algebras")
    p.add_argument("action", choices=("list", "show", "build"))
    p.add_argument("key", nargs="?")
    p.add_argument("-o", "--output")
    common(p, alg=False)
    p.set_defaults(fn=cmd_catalog)
    return ap


def dispatch(argv) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"skewpbw: error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"skewpbw: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
