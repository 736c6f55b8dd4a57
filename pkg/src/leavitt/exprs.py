"""Element expression parsing and canonical rendering.

Grammar::

    expr   := ['-'] term (('+'|'-') term)*
    term   := coef | coef atoms | atoms
    coef   := INT | INT '/' INT        (in F_p the value is reduced mod p)
    atoms  := atom+                     (juxtaposition is multiplication)
    atom   := IDENT ['*']               ('*' marks a ghost edge and binds to
             | '(' expr ')'              the single preceding identifier only)

A bare coefficient stands for that multiple of the identity (the sum of all
vertices, which exists because vertex sets are finite).  An identifier run
such as ``ce`` is segmented against the graph's vocabulary, longest name
first, so single-letter graphs read naturally.

Rendering is canonical: terms sorted by (alpha, beta, vertex), unit
coefficients suppressed, and atoms concatenated without spaces exactly when
every name in the graph is a single character (``v - ce*``), otherwise
space-separated so the output re-parses unambiguously.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, LeavittAlgebra, Monomial
from .errors import (
    ExprSyntaxError,
    GhostOnGroupError,
    UnknownIdentifierError,
)
from .fields import Fp

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[+\-/*()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | one of + - / * ( )
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens, i = [], 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ExprSyntaxError("unexpected character %r" % text[i], column=i)
        i = m.end()
        if m.lastgroup == "ws":
            continue
        kind = m.lastgroup if m.lastgroup != "op" else m.group()
        tokens.append(Token(kind, m.group(), m.start()))
    return tokens


def segment_identifier(run: str, vocabulary: set[str], pos: int = 0) -> list[str]:
    """Split an identifier run into known names, preferring the longest name
    at each position among splits that allow the rest to be segmented."""
    n = len(run)
    viable = [False] * (n + 1)
    viable[n] = True
    lengths = sorted({len(name) for name in vocabulary}, reverse=True)
    for i in range(n - 1, -1, -1):
        viable[i] = any(
            ln <= n - i and run[i:i + ln] in vocabulary and viable[i + ln]
            for ln in lengths)
    if not viable[0]:
        raise UnknownIdentifierError(
            "cannot resolve %r against the graph's names" % run, position=pos)
    out, i = [], 0
    while i < n:
        ln = next(ln for ln in lengths
                  if ln <= n - i and run[i:i + ln] in vocabulary and viable[i + ln])
        out.append(run[i:i + ln])
        i += ln
    return out


class _Parser:
    def __init__(self, alg: LeavittAlgebra, tokens: list[Token]):
        self.alg = alg
        self.tokens = tokens
        self.i = 0
        g = alg.graph
        self.vocabulary = set(g.vertices) | {e.name for e in g.edges}

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of expression",
                                  column=self.tokens[-1].pos if self.tokens else 0)
        self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.take()
        if tok.kind != kind:
            raise ExprSyntaxError("expected %s, found %r" % (kind, tok.text),
                                  column=tok.pos)
        return tok

    # expr := ['-'] term (('+'|'-') term)*
    def parse_expr(self) -> Element:
        sign = 1
        if self.peek() is not None and self.peek().kind == "-":
            self.take()
            sign = -1
        acc = self.parse_term().scale(sign)
        while self.peek() is not None and self.peek().kind in "+-":
            op = self.take().kind
            t = self.parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    # term := coef | coef atoms | atoms
    def parse_term(self) -> Element:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("empty term")
        if tok.kind == "int":
            coef = self.parse_coef()
            nxt = self.peek()
            if nxt is not None and nxt.kind in ("ident", "("):
                return self.parse_atoms().scale(coef)
            return self.alg.identity().scale(coef)
        return self.parse_atoms()

    def parse_coef(self):
        num = int(self.expect("int").text)
        nxt = self.peek()
        if nxt is not None and nxt.kind == "/":
            self.take()
            den = int(self.expect("int").text)
            return self.alg.field.from_ratio(num, den)
        return self.alg.field.from_ratio(num)

    def parse_atoms(self) -> Element:
        acc = None
        while True:
            tok = self.peek()
            if tok is None or tok.kind not in ("ident", "("):
                break
            factor = self.parse_atom()
            acc = factor if acc is None else acc * factor
        if acc is None:
            tok = self.peek()
            raise ExprSyntaxError("expected an identifier or group",
                                  column=tok.pos if tok else 0)
        return acc

    def parse_atom(self) -> Element:
        tok = self.take()
        if tok.kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            nxt = self.peek()
            if nxt is not None and nxt.kind == "*":
                raise GhostOnGroupError(
                    "'*' may follow a single identifier, not a group", position=nxt.pos)
            return inner
        if tok.kind != "ident":
            raise ExprSyntaxError("unexpected token %r" % tok.text, column=tok.pos)
        names = segment_identifier(tok.text, self.vocabulary, tok.pos)
        starred = False
        nxt = self.peek()
        if nxt is not None and nxt.kind == "*":
            self.take()
            starred = True
        acc = None
        for j, name in enumerate(names):
            last = j == len(names) - 1
            factor = self._resolve(name, starred and last)
            acc = factor if acc is None else acc * factor
        return acc

    def _resolve(self, name: str, starred: bool) -> Element:
        if self.alg.graph.has_vertex(name):
            return self.alg.vertex(name)  # vertices are self-adjoint
        return self.alg.ghost(name) if starred else self.alg.edge(name)


def parse_element(alg: LeavittAlgebra, text: str) -> Element:
    """Parse an expression over the algebra's graph; result is in normal form."""
    parser = _Parser(alg, tokenize(text))
    value = parser.parse_expr()
    if parser.peek() is not None:
        tok = parser.peek()
        raise ExprSyntaxError("trailing input %r" % tok.text, column=tok.pos)
    return value


# -- rendering -----------------------------------------------------------------

def _render_monomial(m: Monomial, joiner: str) -> str:
    if m.is_vertex:
        return m.vertex
    parts = list(m.alpha) + [name + "*" for name in reversed(m.beta)]
    return joiner.join(parts)


def _coef_parts(field, k) -> tuple[str, str]:
    """Return (sign, magnitude-text) with unit magnitudes blanked."""
    if isinstance(k, Fraction):
        sign = "-" if k < 0 else "+"
        mag = abs(k)
        return sign, "" if mag == 1 else str(mag)
    if isinstance(k, Fp):
        return "+", "" if k.value == 1 else str(k.value)
    return "+", str(k)


def render_element(a: Element) -> str:
    if a.is_zero:
        return "0"
    joiner = "" if all(len(name) == 1 for name in
                       set(a.algebra.graph.vertices)
                       | {e.name for e in a.algebra.graph.edges}) else " "
    chunks: list[str] = []
    for m, k in a.items():
        sign, mag = _coef_parts(a.algebra.field, k)
        body = _render_monomial(m, joiner)
        text = (mag + " " + body) if mag else body
        if not chunks:
            chunks.append(text if sign == "+" else "-" + text)
        else:
            chunks.append(("+ " if sign == "+" else "- ") + text)
    return " ".join(chunks)


def render_path_expr(p) -> str:
    """Path as an expression chunk: the base vertex for a trivial path, else
    the edge names joined."""
    return p.base if p.is_trivial else "".join(p.edges) if all(
        len(e) == 1 for e in p.edges) else " ".join(p.edges)


def element_terms_json(a: Element) -> list[dict]:
    field = a.algebra.field
    return [{"alpha": list(m.alpha), "beta": list(m.beta),
             "vertex": m.vertex, "coef": field.render(k)}
            for m, k in a.items()]
