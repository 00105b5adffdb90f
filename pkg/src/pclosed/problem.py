"""Problem-file parsing for the CLI and service.

Line-oriented grammar, `#` starts a comment:

    field p=<int> ext=<int> [modulus=<c0,c1,...,1>]
    ring <v1>,<v2>,... [weights=<w1,...>]
    deriv <Name> = <poly> ; <poly> ; ...      # coefficients in variable order
    subalgebra = <poly>, <poly>, ...
    ideal = <poly>, ...
    option max_deg=<int>
    option budget=<int>

Polynomial expressions are sums of terms; a term is an optional
coefficient (integer or a g-expression for the field generator) joined
with `*` to powers like `x^2`.  Parentheses and unary minus are
accepted, so the canonical rendering parses back to the same value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .deriv import Derivation
from .field import FieldCtx, FieldError
from .poly import Poly, PolyError, Ring

DEFAULT_MAX_DEG = 3
DEFAULT_BUDGET = 2**22


class ParseError(Exception):
    def __init__(self, msg, line=None, col=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(msg + loc)
        self.line = line
        self.col = col


class SemanticError(ParseError):
    pass


@dataclass
class Problem:
    ctx: FieldCtx
    ring: Ring
    derivations: dict  # name -> Derivation, insertion-ordered
    subalgebra: list = dc_field(default_factory=list)
    ideal: list = dc_field(default_factory=list)
    max_deg: int = DEFAULT_MAX_DEG
    budget: int = DEFAULT_BUDGET


# --- polynomial expression parsing ---

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([+\-*^()]))")


def _tokenize(text, line_no):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(
                f"unexpected character {stripped[0]!r}", line_no, pos + 1
            )
        if m.group(1):
            tokens.append(("int", int(m.group(1)), pos + 1))
        elif m.group(2):
            tokens.append(("name", m.group(2), pos + 1))
        else:
            tokens.append(("op", m.group(3), pos + 1))
        pos = m.end()
    return tokens


class _ExprParser:
    def __init__(self, tokens, ring: Ring, line_no):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.line_no = line_no

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line_no)
        self.i += 1
        return tok

    def parse(self) -> Poly:
        value = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", self.line_no, tok[2])
        return value

    def _expr(self) -> Poly:
        tok = self._peek()
        neg = False
        if tok and tok[:2] == ("op", "-"):
            self._next()
            neg = True
        value = self._term()
        if neg:
            value = -value
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self._next()
                rhs = self._term()
                value = value + rhs if tok[1] == "+" else value - rhs
            else:
                return value

    def _term(self) -> Poly:
        value = self._factor()
        while True:
            tok = self._peek()
            if tok and tok[:2] == ("op", "*"):
                self._next()
                value = value * self._factor()
            else:
                return value

    def _factor(self) -> Poly:
        base = self._base()
        tok = self._peek()
        if tok and tok[:2] == ("op", "^"):
            self._next()
            exp_tok = self._next()
            if exp_tok[0] != "int":
                raise ParseError("exponent must be an integer", self.line_no, exp_tok[2])
            return base ** exp_tok[1]
        return base

    def _base(self) -> Poly:
        tok = self._next()
        kind, val, col = tok
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            names = self.ring.ring_vars + self.ring.aux_vars
            if val in names:
                return self.ring.var(val)
            if val == "g":
                if self.ring.ctx.r == 1:
                    raise SemanticError(
                        "g is undefined over a prime field", self.line_no, col
                    )
                return self.ring.const(self.ring.ctx.gen())
            raise SemanticError(f"unknown variable {val!r}", self.line_no, col)
        if (kind, val) == ("op", "("):
            value = self._expr()
            close = self._next()
            if close[:2] != ("op", ")"):
                raise ParseError("expected ')'", self.line_no, close[2])
            return value
        raise ParseError(f"unexpected token {val!r}", self.line_no, col)


def parse_poly(text: str, ring: Ring, line_no=None) -> Poly:
    tokens = _tokenize(text, line_no)
    if not tokens:
        raise ParseError("empty polynomial expression", line_no)
    return _ExprParser(tokens, ring, line_no).parse()


# --- problem files ---

def _split_kv(token, line_no):
    if "=" not in token:
        raise ParseError(f"expected key=value, got {token!r}", line_no)
    key, _, value = token.partition("=")
    return key.strip(), value.strip()


def parse_problem(text: str) -> Problem:
    ctx = None
    ring = None
    derivations = {}
    subalgebra = []
    ideal = []
    options = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()

        if head == "field":
            if ctx is not None:
                raise SemanticError("duplicate field line", line_no)
            kv = dict(_split_kv(t, line_no) for t in rest.split())
            try:
                p = int(kv.pop("p"))
                r = int(kv.pop("ext"))
            except KeyError as exc:
                raise ParseError(f"field line needs {exc.args[0]}=", line_no)
            modulus = None
            if "modulus" in kv:
                modulus = [int(c) for c in kv.pop("modulus").split(",")]
            if kv:
                raise ParseError(f"unknown field option {sorted(kv)[0]!r}", line_no)
            try:
                ctx = FieldCtx(p, r, modulus)
            except FieldError as exc:
                raise SemanticError(str(exc), line_no)

        elif head == "ring":
            if ctx is None:
                raise SemanticError("ring line before field line", line_no)
            if ring is not None:
                raise SemanticError("duplicate ring line", line_no)
            parts = rest.split()
            if not parts:
                raise ParseError("ring line needs variable names", line_no)
            names = [v.strip() for v in parts[0].split(",") if v.strip()]
            weights = None
            for opt in parts[1:]:
                key, value = _split_kv(opt, line_no)
                if key == "weights":
                    weights = [int(w) for w in value.split(",")]
                else:
                    raise ParseError(f"unknown ring option {key!r}", line_no)
            if ctx.r > 1 and "g" in names:
                raise SemanticError(
                    "variable name 'g' collides with the field generator", line_no
                )
            try:
                ring = Ring(ctx, names, weights=weights)
            except PolyError as exc:
                raise SemanticError(str(exc), line_no)

        elif head == "deriv":
            if ring is None:
                raise SemanticError("deriv line before ring line", line_no)
            name, eq, body = rest.partition("=")
            name = name.strip()
            if not eq or not name:
                raise ParseError("deriv line needs `Name = ...`", line_no)
            if name in derivations:
                raise SemanticError(f"duplicate derivation {name!r}", line_no)
            coeff_texts = [c for c in body.split(";")]
            if len(coeff_texts) != ring.n:
                raise SemanticError(
                    f"derivation needs {ring.n} coefficients, got {len(coeff_texts)}",
                    line_no,
                )
            coeffs = [parse_poly(c, ring, line_no) for c in coeff_texts]
            derivations[name] = Derivation(ring, coeffs)

        elif head in ("subalgebra", "ideal"):
            if ring is None:
                raise SemanticError(f"{head} line before ring line", line_no)
            if not rest.startswith("="):
                raise ParseError(f"{head} line needs `= ...`", line_no)
            body = rest[1:]
            polys = [parse_poly(c, ring, line_no) for c in body.split(",")]
            for f in polys:
                if f.has_aux():
                    raise SemanticError("auxiliary variables not allowed here", line_no)
            (subalgebra if head == "subalgebra" else ideal).extend(polys)

        elif head == "option":
            for opt in rest.split():
                key, value = _split_kv(opt, line_no)
                if key in ("max_deg", "budget"):
                    options[key] = int(value)
                else:
                    raise ParseError(f"unknown option {key!r}", line_no)

        else:
            raise ParseError(f"unknown directive {head!r}", line_no)

    if ctx is None:
        raise SemanticError("missing field line")
    if ring is None:
        raise SemanticError("missing ring line")
    return Problem(
        ctx=ctx,
        ring=ring,
        derivations=derivations,
        subalgebra=subalgebra,
        ideal=ideal,
        max_deg=options.get("max_deg", DEFAULT_MAX_DEG),
        budget=options.get("budget", DEFAULT_BUDGET),
    )
