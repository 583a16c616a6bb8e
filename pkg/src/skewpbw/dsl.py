"""The definition language for presentations and the expression parser.

A definition is a sequence of line-oriented statements::

    algebra dqh
    ring QQ(q,h)[y]
    vars x
    rel x*y = q*y*x + h

Statements: ``algebra NAME``, ``ring DESCRIPTOR``, ``base { ... }`` (a nested
definition used as the coefficient ring), ``vars a, b invertible, ...``,
``sigma VAR { g -> expr, ... } [inverse { ... }]``, ``inverse VAR { ... }``,
``delta VAR { g -> expr, ... }`` and ``rel LHS = RHS``.  ``#`` starts a comment.

Expressions use ``+ - * / ^`` with the usual precedence; products must be
written with ``*``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coeff import (
    NotAUnitError,
    PolynomialRing,
    RationalField,
    RationalFunctionField,
    Ring,
    RingElem,
    RingMismatchError,
    parse_ring,
)
from .poly import SkewPoly

__all__ = [
    "ParseError",
    "parse_expr",
    "parse_ring_element",
    "parse_definition",
    "emit",
]


class ParseError(ValueError):
    """A syntax or semantic error with a 1-based source position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        if self.line:
            return f"line {self.line}, col {self.col}: {self.message}"
        return self.message


# ----------------------------------------------------------------------
# tokens

_OPS = "+-*/^(){},="


@dataclass
class Tok:
    kind: str  # NUM, ID, OP, ARROW, NL, RAW, EOF
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Tok]:
    toks: list[Tok] = []
    i, line, col = 0, 1, 1
    n = len(text)
    at_stmt_start = True
    while i < n:
        ch = text[i]
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            toks.append(Tok("NL", "\n", line, col))
            i += 1
            line += 1
            col = 1
            at_stmt_start = True
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Tok("NUM", text[i:j], line, col))
            col += j - i
            i = j
            at_stmt_start = False
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(Tok("ID", word, line, col))
            col += j - i
            i = j
            if word == "ring" and at_stmt_start:
                k = i
                while k < n and text[k] not in "\n#":
                    k += 1
                raw = text[i:k]
                lead = len(raw) - len(raw.lstrip())
                toks.append(Tok("RAW", raw.strip(), line, col + lead))
                col += k - i
                i = k
            at_stmt_start = False
            continue
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            toks.append(Tok("ARROW", "->", line, col))
            i += 2
            col += 2
            at_stmt_start = False
            continue
        if ch in _OPS:
            toks.append(Tok("OP", ch, line, col))
            i += 1
            col += 1
            at_stmt_start = ch in "{"
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Tok("EOF", "", line, col))
    return toks


# ----------------------------------------------------------------------
# expression trees


@dataclass
class Node:
    op: str  # num, name, neg, add, sub, mul, div, pow
    args: tuple
    line: int
    col: int


class _Stream:
    def __init__(self, toks: list[Tok]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> Tok:
        return self.toks[self.pos]

    def next(self) -> Tok:
        t = self.toks[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None = None, what: str = "") -> Tok:
        t = self.peek()
        if not self.at(kind, text):
            want = what or (text if text else kind)
            got = "end of input" if t.kind == "EOF" else ("end of line" if t.kind == "NL" else repr(t.text))
            raise ParseError(f"expected {want}, found {got}", t.line, t.col)
        return self.next()

    def skip_nl(self) -> None:
        while self.at("NL"):
            self.next()


def _parse_expr_tokens(s: _Stream) -> Node:
    node = _parse_term(s)
    while s.at("OP", "+") or s.at("OP", "-"):
        t = s.next()
        rhs = _parse_term(s)
        node = Node("add" if t.text == "+" else "sub", (node, rhs), t.line, t.col)
    return node


def _parse_term(s: _Stream) -> Node:
    node = _parse_unary(s)
    while True:
        if s.at("OP", "*") or s.at("OP", "/"):
            t = s.next()
            rhs = _parse_unary(s)
            node = Node("mul" if t.text == "*" else "div", (node, rhs), t.line, t.col)
        elif s.at("ID") or s.at("NUM") or s.at("OP", "("):
            t = s.peek()
            raise ParseError("missing operator: juxtaposition is not allowed, write '*'", t.line, t.col)
        else:
            return node


def _parse_unary(s: _Stream) -> Node:
    if s.at("OP", "-") or s.at("OP", "+"):
        t = s.next()
        inner = _parse_unary(s)
        return inner if t.text == "+" else Node("neg", (inner,), t.line, t.col)
    return _parse_power(s)


def _parse_power(s: _Stream) -> Node:
    base = _parse_atom(s)
    if s.at("OP", "^"):
        t = s.next()
        sign = 1
        if s.at("OP", "-") or s.at("OP", "+"):
            sign = -1 if s.next().text == "-" else 1
        e = s.expect("NUM", what="an integer exponent")
        return Node("pow", (base, sign * int(e.text)), t.line, t.col)
    return base


def _parse_atom(s: _Stream) -> Node:
    t = s.peek()
    if t.kind == "NUM":
        s.next()
        return Node("num", (int(t.text),), t.line, t.col)
    if t.kind == "ID":
        s.next()
        return Node("name", (t.text,), t.line, t.col)
    if s.at("OP", "("):
        s.next()
        inner = _parse_expr_tokens(s)
        s.expect("OP", ")", "')'")
        return inner
    got = "end of input" if t.kind == "EOF" else ("end of line" if t.kind == "NL" else repr(t.text))
    raise ParseError(f"expected a number, a name or '(', found {got}", t.line, t.col)


def parse_tree(text: str) -> Node:
    s = _Stream([t for t in tokenize(text) if t.kind != "NL"])
    node = _parse_expr_tokens(s)
    t = s.peek()
    if t.kind != "EOF":
        raise ParseError(f"unexpected {t.text!r}", t.line, t.col)
    return node


# ----------------------------------------------------------------------
# evaluation in a ring or algebra


def _err(node: Node, msg: str) -> ParseError:
    return ParseError(msg, node.line, node.col)


def evaluate(node: Node, domain):
    """Evaluate a tree in ``domain`` (a ring, presentation or quantum presentation)."""
    op = node.op
    if op == "num":
        return domain.coerce(node.args[0])
    if op == "name":
        try:
            return domain.gen(node.args[0])
        except KeyError:
            raise _err(node, f"unknown identifier {node.args[0]!r}") from None
    if op == "neg":
        return -evaluate(node.args[0], domain)
    if op == "pow":
        base = evaluate(node.args[0], domain)
        e = node.args[1]
        if e < 0:
            inv = domain.try_invert(base)
            if inv is None:
                raise _err(node, f"negative power of a non-invertible element {base}")
            return inv ** (-e)
        return base ** e
    a = evaluate(node.args[0], domain)
    b = evaluate(node.args[1], domain)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        inv = domain.try_invert(b)
        if inv is None:
            raise _err(node, f"division by {b}, which is not a unit")
        return a * inv
    raise _err(node, f"unknown operation {op}")


def _wrap(fn, text):
    try:
        return fn()
    except ParseError:
        raise
    except (NotAUnitError, ZeroDivisionError) as exc:
        raise ParseError(str(exc) or "division by zero") from exc
    except (KeyError, ValueError, TypeError, RingMismatchError, ArithmeticError) as exc:
        raise ParseError(f"cannot evaluate {text!r}: {exc}") from exc


def parse_ring_element(text: str, ring: Ring) -> RingElem:
    return _wrap(lambda: ring.coerce(evaluate(parse_tree(text), ring)), text)


def parse_expr(text: str, alg) -> SkewPoly:
    """Parse an expression over the variables and coefficients of ``alg`` and normalize it."""
    return _wrap(lambda: alg.coerce(evaluate(parse_tree(text), alg)), text)


# ----------------------------------------------------------------------
# words with left coefficients (relation right-hand sides)


def as_rational(x) -> Fraction | None:
    """The rational value of a constant coefficient, or None."""
    if isinstance(x, SkewPoly):
        if not x.is_constant():
            return None
        return as_rational(x.constant_coeff()) if x.terms else Fraction(0)
    if not isinstance(x, RingElem):
        return None
    R = x.ring
    if isinstance(R, RationalField):
        return x.v
    if isinstance(R, RationalFunctionField):
        num, den = x.v
        if den != R._pone or not num.is_ground:
            return None
        from .coeff import _mpq_to_fraction

        return _mpq_to_fraction(num.LC) if not num.is_zero else Fraction(0)
    if isinstance(R, PolynomialRing):
        if not x.v:
            return Fraction(0)
        if set(x.v) != {(0,) * len(R.gens)}:
            return None
        return as_rational(RingElem(R.base, x.v[(0,) * len(R.gens)]))
    return None


def eval_free(node: Node, p) -> dict:
    """Evaluate to ``{word: coefficient}`` with all coefficients left of the variables."""
    base = p.base
    op = node.op
    if op == "num":
        return {(): base.coerce(node.args[0])}
    if op == "name":
        name = node.args[0]
        if name in p.var_names:
            return {(p.var_index(name),): base.one}
        try:
            return {(): base.gen(name)}
        except KeyError:
            raise _err(node, f"unknown identifier {name!r}") from None
    if op == "neg":
        return {w: -c for w, c in eval_free(node.args[0], p).items()}
    if op in ("add", "sub"):
        a = eval_free(node.args[0], p)
        b = eval_free(node.args[1], p)
        out = dict(a)
        for w, c in b.items():
            c = c if op == "add" else -c
            out[w] = out[w] + c if w in out else c
        return {w: c for w, c in out.items() if not c.is_zero()}
    if op == "mul":
        return _free_mul(node, eval_free(node.args[0], p), eval_free(node.args[1], p))
    if op == "div":
        b = eval_free(node.args[1], p)
        if set(b) - {()}:
            raise _err(node, "division by an expression involving variables")
        den = b.get(())
        inv = None if den is None else base.try_invert(den)
        if inv is None:
            raise _err(node, f"division by {den}, which is not a unit")
        return _free_mul(node, eval_free(node.args[0], p), {(): inv})
    if op == "pow":
        e = node.args[1]
        a = eval_free(node.args[0], p)
        if e < 0:
            if set(a) - {()}:
                raise _err(node, "negative power of a variable in a relation")
            inv = base.try_invert(a.get((), base.zero))
            if inv is None:
                raise _err(node, "negative power of a non-invertible coefficient")
            return {(): inv ** (-e)}
        out = {(): base.one}
        for _ in range(e):
            out = _free_mul(node, out, a)
        return out
    raise _err(node, f"unknown operation {op}")


def _free_mul(node: Node, a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            if w1 and w2 == () and as_rational(c2) is None:
                raise _err(node, "coefficients must be written to the left of the variables")
            if w1 and w2 and as_rational(c2) is None:
                raise _err(node, "coefficients must be written to the left of the variables")
            w = w1 + w2
            c = c1 * c2
            out[w] = out[w] + c if w in out else c
    return {w: c for w, c in out.items() if not c.is_zero()}


# ----------------------------------------------------------------------
# definitions


@dataclass
class _MapEntry:
    gen: str
    expr: Node
    line: int
    col: int


@dataclass
class _Doc:
    name: str | None = None
    ring_text: str | None = None
    ring_pos: tuple = (0, 0)
    base_doc: _Doc | None = None
    vars: list = field(default_factory=list)  # (name, invertible, line, col)
    vars_pos: tuple = (0, 0)
    sigma: dict = field(default_factory=dict)  # var -> (entries, pos)
    inverse: dict = field(default_factory=dict)
    delta: dict = field(default_factory=dict)
    rels: list = field(default_factory=list)  # (lhs, rhs, line, col)


def _parse_map(s: _Stream) -> list[_MapEntry]:
    s.expect("OP", "{", "'{'")
    entries = []
    s.skip_nl()
    if s.at("OP", "}"):
        s.next()
        return entries
    while True:
        s.skip_nl()
        g = s.expect("ID", what="a generator name")
        s.expect("ARROW", what="'->'")
        s.skip_nl()
        e = _parse_expr_tokens(s)
        entries.append(_MapEntry(g.text, e, g.line, g.col))
        s.skip_nl()
        if s.at("OP", ","):
            s.next()
            continue
        s.expect("OP", "}", "',' or '}'")
        return entries


def _end_stmt(s: _Stream) -> None:
    if s.at("EOF") or s.at("OP", "}"):
        return
    s.expect("NL", what="end of line")


def _parse_doc(s: _Stream, nested: bool) -> _Doc:
    doc = _Doc()
    while True:
        s.skip_nl()
        t = s.peek()
        if t.kind == "EOF":
            if nested:
                raise ParseError("unterminated 'base {' block", t.line, t.col)
            return doc
        if t.kind == "OP" and t.text == "}":
            if not nested:
                raise ParseError("unmatched '}'", t.line, t.col)
            return doc
        kw = s.expect("ID", what="a statement keyword")
        word = kw.text
        if word == "algebra":
            if doc.name is not None:
                raise ParseError("duplicate 'algebra' statement", kw.line, kw.col)
            doc.name = s.expect("ID", what="an algebra name").text
        elif word == "ring":
            if doc.ring_text is not None or doc.base_doc is not None:
                raise ParseError("the coefficient ring is declared twice", kw.line, kw.col)
            raw = s.expect("RAW", what="a ring descriptor")
            if not raw.text:
                raise ParseError("empty ring descriptor", raw.line, raw.col)
            doc.ring_text = raw.text
            doc.ring_pos = (raw.line, raw.col)
        elif word == "base":
            if doc.ring_text is not None or doc.base_doc is not None:
                raise ParseError("the coefficient ring is declared twice", kw.line, kw.col)
            s.expect("OP", "{", "'{'")
            doc.base_doc = _parse_doc(s, nested=True)
            doc.base_doc_pos = (kw.line, kw.col)
            s.expect("OP", "}", "'}'")
        elif word == "vars":
            if doc.vars:
                raise ParseError("duplicate 'vars' statement", kw.line, kw.col)
            doc.vars_pos = (kw.line, kw.col)
            while True:
                v = s.expect("ID", what="a variable name")
                inv = False
                if s.at("ID", "invertible"):
                    s.next()
                    inv = True
                doc.vars.append((v.text, inv, v.line, v.col))
                if s.at("OP", ","):
                    s.next()
                    continue
                break
        elif word in ("sigma", "delta", "inverse"):
            v = s.expect("ID", what="a variable name")
            table = getattr(doc, word)
            if v.text in table:
                raise ParseError(f"duplicate {word} block for {v.text}", v.line, v.col)
            table[v.text] = (_parse_map(s), (v.line, v.col))
            if word == "sigma" and s.at("ID", "inverse"):
                s.next()
                if v.text in doc.inverse:
                    raise ParseError(f"duplicate inverse block for {v.text}", v.line, v.col)
                doc.inverse[v.text] = (_parse_map(s), (v.line, v.col))
        elif word == "rel":
            lhs = _parse_expr_tokens(s)
            eq = s.expect("OP", "=", "'='")
            rhs = _parse_expr_tokens(s)
            doc.rels.append((lhs, rhs, eq.line, eq.col))
        else:
            raise ParseError(f"unknown statement {word!r}", kw.line, kw.col)
        _end_stmt(s)


def _build(doc: _Doc, top: bool = True):
    from .presentation import AffineTail, DerivSpec, EndoSpec, Presentation, validate
    from .quantum import QuantumPresentation

    if doc.base_doc is not None:
        base = _build(doc.base_doc, top=False)
        if isinstance(base, QuantumPresentation):
            raise ParseError("a quantum presentation cannot be used as a coefficient ring")
    elif doc.ring_text is not None:
        try:
            base = parse_ring(doc.ring_text)
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc), *doc.ring_pos) from None
    else:
        raise ParseError("missing 'ring' or 'base' declaration", 1, 1)
    if not doc.vars:
        raise ParseError("an algebra needs at least one variable ('vars' statement)", *(doc.vars_pos if doc.vars_pos != (0, 0) else (1, 1)))
    names = [v[0] for v in doc.vars]
    seen = set()
    gens = set(base.generator_names())
    for name, _, line, col in doc.vars:
        if name in seen or name in gens:
            raise ParseError(f"variable {name!r} is declared twice or clashes with a ring generator", line, col)
        seen.add(name)
    index = {nm: i for i, nm in enumerate(names)}

    def ring_map(entries, what):
        out = {}
        for e in entries:
            if e.gen not in gens:
                raise ParseError(f"{e.gen!r} is not a generator of the coefficient ring", e.line, e.col)
            if e.gen in out:
                raise ParseError(f"{e.gen!r} appears twice in {what}", e.line, e.col)
            out[e.gen] = evaluate(e.expr, base)
        return out

    def var_of(table, kind):
        for v, (_, (line, col)) in table.items():
            if v not in index:
                raise ParseError(f"{kind} block for unknown variable {v!r}", line, col)

    var_of(doc.sigma, "sigma")
    var_of(doc.delta, "delta")
    var_of(doc.inverse, "inverse")
    sig_imgs = {v: ring_map(entries, f"sigma {v}") for v, (entries, _) in doc.sigma.items()}
    inv_imgs = {v: ring_map(entries, f"inverse {v}") for v, (entries, _) in doc.inverse.items()}
    del_imgs = {v: ring_map(entries, f"delta {v}") for v, (entries, _) in doc.delta.items()}

    c: dict = {}
    tails: dict = {}
    scratch = Presentation(doc.name or "algebra", base, names)
    for lhs, rhs, line, col in doc.rels:
        a, b = _lhs_pair(lhs, line, col)
        rhs_terms = eval_free(rhs, scratch)
        if a in index and b in index:
            i, j = index[a], index[b]
            if i == j:
                raise ParseError("a relation must involve two different variables", line, col)
            if i > j:
                lo, hi, flip = j, i, False
            else:
                lo, hi, flip = i, j, True
            if (lo, hi) in c:
                raise ParseError(f"duplicate relation for {names[hi]}*{names[lo]}", line, col)
            want = (lo, hi) if not flip else (hi, lo)
            cval = rhs_terms.pop(want, None)
            if cval is None:
                shown = "*".join(names[k] for k in want)
                raise ParseError(f"the right-hand side must contain a multiple of {shown}", line, col)
            const, lin = _affine(rhs_terms, names, line, col, base.zero)
            if flip:
                inv = base.try_invert(cval)
                if inv is None:
                    raise ParseError(f"cannot reorient the relation: {cval} is not a unit", line, col)
                cval = inv
                const = -(inv * const)
                lin = {k: -(inv * v) for k, v in lin.items()}
            c[(lo, hi)] = cval
            if not const.is_zero() or lin:
                tails[(lo, hi)] = AffineTail(const, lin)
        elif a in index and b in gens:
            i = index[a]
            coeff_x = rhs_terms.pop((i,), base.zero)
            const = rhs_terms.pop((), base.zero)
            if rhs_terms:
                raise ParseError(f"the right-hand side must have the form A*{a} + B with A, B in the coefficient ring", line, col)
            for table, val, what in ((sig_imgs, coeff_x, "sigma"), (del_imgs, const, "delta")):
                entry = table.setdefault(a, {})
                if b in entry:
                    raise ParseError(f"{what} of {a} on {b} is defined twice", line, col)
                entry[b] = val
        else:
            raise ParseError("the left-hand side must be var*var or var*generator", line, col)

    sigma = {}
    for v in names:
        imgs = sig_imgs.get(v, {})
        inv = inv_imgs.get(v)
        sigma[v] = EndoSpec(imgs, inv)
    delta = {v: DerivSpec(del_imgs.get(v, {})) for v in names}
    try:
        p = Presentation(doc.name or "algebra", base, names, sigma=sigma, delta=delta, c=c, tails=tails)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from None
    invertible = [v[1] for v in doc.vars]
    if any(invertible):
        r = sum(1 for _ in _prefix(invertible))
        if any(invertible[r:]):
            line, col = next((v[2], v[3]) for v in doc.vars[r:] if v[1])
            raise ParseError("invertible variables must come first", line, col)
        if not top:
            raise ParseError("invertible variables are only allowed at the top level")
        try:
            return QuantumPresentation(p, r)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if not any(sev == "error" for sev, _, _ in validate(p).findings):
        return p
    msgs = "; ".join(f"{loc}: {msg}" for sev, loc, msg in validate(p).findings if sev == "error")
    raise ParseError(f"invalid presentation: {msgs}")


def _prefix(flags):
    for f in flags:
        if not f:
            return
        yield f


def _lhs_pair(node: Node, line: int, col: int):
    if node.op == "mul" and node.args[0].op == "name" and node.args[1].op == "name":
        return node.args[0].args[0], node.args[1].args[0]
    raise ParseError("the left-hand side of a relation must be a product of two names", line, col)


def _affine(terms: dict, names, line, col, zero):
    const = zero
    lin = {}
    for w, v in terms.items():
        if len(w) == 0:
            const = v
        elif len(w) == 1:
            lin[w[0]] = v
        else:
            shown = "*".join(names[k] for k in w)
            raise ParseError(
                f"tail term {shown} is not affine; put higher-degree parts into a nested coefficient ring", line, col
            )
    return const, lin


def parse_definition(text: str):
    """Parse a definition into a Presentation or QuantumPresentation.

    Every failure is reported as a :class:`ParseError`.
    """
    try:
        toks = tokenize(text)
        doc = _parse_doc(_Stream(toks), nested=False)
        return _build(doc)
    except ParseError:
        raise
    except RecursionError:
        raise ParseError("input is nested too deeply") from None
    except Exception as exc:  # any remaining failure is reported, never raised raw
        raise ParseError(f"{type(exc).__name__}: {exc}") from None


# ----------------------------------------------------------------------
# emission


def _fmt(x) -> str:
    return str(x)


def emit(p, indent: str = "") -> str:
    """Canonical definition text; ``parse_definition(emit(p)) == p``."""
    from .quantum import QuantumPresentation

    invertible = 0
    if isinstance(p, QuantumPresentation):
        invertible = p.r
        p = p.core
    lines = [f"algebra {p.name}"]
    from .presentation import Presentation

    if isinstance(p.base, Presentation):
        lines.append("base {")
        lines.extend("  " + ln for ln in emit(p.base).splitlines())
        lines.append("}")
    else:
        lines.append(f"ring {p.base.descriptor()}")
    lines.append("vars " + ", ".join(v + (" invertible" if k < invertible else "") for k, v in enumerate(p.var_names)))
    order = p.coefficient_generators()
    for i, v in enumerate(p.var_names):
        s = p.sigma[i]
        if not s.is_identity():
            body = ", ".join(f"{g} -> {_fmt(s.images[g])}" for g in order if g in s.images)
            line = f"sigma {v} {{ {body} }}"
            if s.inverse_images is not None:
                inv = ", ".join(f"{g} -> {_fmt(s.inverse_images[g])}" for g in order if g in s.inverse_images)
                line += f" inverse {{ {inv} }}"
            lines.append(line)
        d = p.delta[i]
        if not d.is_zero():
            body = ", ".join(f"{g} -> {_fmt(d.images[g])}" for g in order if g in d.images)
            lines.append(f"delta {v} {{ {body} }}")
    for j in range(p.nvars):
        for i in range(j):
            cij = p.c[(i, j)]
            tail = p.tails.get((i, j))
            if tail is None and cij == p.base.one:
                continue
            e = [0] * p.nvars
            e[i] += 1
            e[j] += 1
            terms = {tuple(e): cij}
            if tail is not None:
                if not tail.constant.is_zero():
                    terms[(0,) * p.nvars] = tail.constant
                for k, v in tail.linear.items():
                    terms[tuple(1 if t == k else 0 for t in range(p.nvars))] = v
            rhs = SkewPoly(p, terms)
            lines.append(f"rel {p.var_names[j]}*{p.var_names[i]} = {rhs}")
    return "\n".join(indent + ln for ln in lines) + "\n"
