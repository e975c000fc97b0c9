"""Tokenizer and parsers for the textual input language.

Accepted forms::

    field literal   0 | 12 | w | w^K
    polynomial      term (('+' | '-') term)*
                    term := coeff | coeff ['*'] 'x' ['^' INT] | 'x' ['^' INT]
    matrix          one row per line, whitespace separated field literals,
                    '#' comment lines; ';' may separate rows on a single line
    CRT tuple       (a_0, a_1, ..., a_s)
    Pauli vector    [a_1, ..., a_n | b_1, ..., b_n]

Concatenation such as ``w^2x`` is accepted as well as the canonical ``w^2*x``.
Every error carries line, column and offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ExponentOverflow, ParseError, UnknownSymbol

MAX_X_DEGREE = 100_000
MAX_W_EXPONENT = 10**12

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    pos: int


def tokenize(text: str, line: int = 1) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(Token("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(Token("NAME", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(Token("OP", m.group(3), m.start(3)))
        pos = m.end()
    out.append(Token("END", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, field, line: int = 1):
        self.text = text
        self.field = field
        self.line = line
        self.toks = tokenize(text, line)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, cls=ParseError, tok=None):
        tok = tok or self.tok
        return cls(msg, self.text, tok.pos, self.line, tok.text or "<end>")

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, text) -> bool:
        if self.tok.kind == "OP" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            raise self.error(f"expected {text!r}")

    def expect_end(self):
        if self.tok.kind != "END":
            raise self.error("unexpected trailing input")

    def integer(self, cap, what) -> int:
        if self.tok.kind != "INT":
            raise self.error(f"expected integer {what}")
        t = self.take()
        v = int(t.text)
        if v > cap:
            raise self.error(f"{what} {v} exceeds limit {cap}", ExponentOverflow, t)
        return v

    # field literal -----------------------------------------------------------

    def at_coeff(self) -> bool:
        t = self.tok
        return t.kind == "INT" or (t.kind == "NAME" and self._name_is_w_prefixed(t.text))

    def _name_is_w_prefixed(self, name: str) -> bool:
        sym = self.field.generator_symbol
        return name == sym or (name.startswith(sym) and name[len(sym):] == "x")

    def coeff(self) -> int:
        f = self.field
        t = self.tok
        if t.kind == "INT":
            self.take()
            return f.from_int(int(t.text))
        if t.kind == "NAME":
            sym = f.generator_symbol
            if t.text == sym:
                self.take()
                if self.accept("^"):
                    k = self.integer(MAX_W_EXPONENT, "exponent")
                else:
                    k = 1
                return f.exp(k)
            if t.text == sym + "x":
                # "wx" means w * x; split the token in place
                self.toks[self.i] = Token("NAME", "x", t.pos + len(sym))
                return f.exp(1)
            raise self.error(f"unknown symbol {t.text!r}", UnknownSymbol)
        raise self.error("expected field literal")

    # polynomial ----------------------------------------------------------------

    def term(self) -> tuple[int, int]:
        c = 1
        has_coeff = False
        if self.at_coeff():
            c = self.coeff()
            has_coeff = True
            self.accept("*")
        if self.tok.kind == "NAME" and self.tok.text == "x":
            self.take()
            deg = 1
            if self.accept("^"):
                deg = self.integer(MAX_X_DEGREE, "degree")
            return c, deg
        if self.tok.kind == "NAME":
            raise self.error(f"unknown symbol {self.tok.text!r}", UnknownSymbol)
        if not has_coeff:
            raise self.error("expected term")
        return c, 0

    def poly(self) -> list[int]:
        f = self.field
        terms: dict[int, int] = {}
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        while True:
            c, deg = self.term()
            if sign < 0:
                c = f.neg(c)
            terms[deg] = f.add(terms.get(deg, 0), c)
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        self.expect_end()
        if not terms:
            return []
        out = [0] * (max(terms) + 1)
        for d, c in terms.items():
            out[d] = c
        while out and out[-1] == 0:
            out.pop()
        return out


def parse_field_literal(text: str, field, line: int = 1) -> int:
    """Integer code of a field literal (``0``, ``n``, ``w``, ``w^K``)."""
    p = _Parser(text, field, line)
    if p.tok.kind == "END":
        raise p.error("empty field literal")
    neg = p.accept("-")
    v = p.coeff()
    p.expect_end()
    return field.neg(v) if neg else v


def parse_poly_coeffs(text: str, field, line: int = 1) -> list[int]:
    """Ascending coefficient codes of a polynomial literal; [] for zero."""
    p = _Parser(text, field, line)
    if p.tok.kind == "END":
        raise p.error("empty polynomial")
    return p.poly()


def parse_poly(text: str, ring):
    """SkewPoly in ``ring`` from its literal."""
    return ring.poly(parse_poly_coeffs(text, ring.field))


class _PrimeField:
    """Minimal stand-in so the polynomial grammar can read moduli over F_p."""

    generator_symbol = "\0"

    def __init__(self, p):
        self.p = p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def exp(self, k):  # pragma: no cover - unreachable, no generator symbol
        raise ParseError("no generator in prime field")


def parse_prime_poly(text: str, p: int) -> list[int]:
    """Coefficients of an F_p[x] polynomial such as ``x^3 + x + 1``."""
    return parse_poly_coeffs(text, _PrimeField(p))


def _split_rows(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        for part in body.split(";"):
            if part.strip():
                yield lineno, part


def parse_matrix_rows(text: str, field) -> list[list[int]]:
    """Rows of integer codes; rows must all have the same length."""
    rows = []
    for lineno, part in _split_rows(text):
        row = []
        for m in re.finditer(r"\S+", part):
            try:
                row.append(parse_field_literal(m.group(0), field, lineno))
            except ParseError as exc:
                raise type(exc)(
                    str(exc).split(" (line")[0], part, m.start() + exc.pos, lineno, m.group(0)
                ) from None
        rows.append(row)
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError("ragged matrix rows", text, 0, rows and 1, None)
    return rows


def parse_matrix(text: str, field):
    from .linalg import FqMatrix

    rows = parse_matrix_rows(text, field)
    return FqMatrix.from_rows(field, rows)


def _parse_list(p: _Parser, closers) -> list[int]:
    vals = []
    if p.tok.kind == "OP" and p.tok.text in closers:
        return vals
    while True:
        neg = p.accept("-")
        v = p.coeff()
        vals.append(p.field.neg(v) if neg else v)
        if not p.accept(","):
            break
    return vals


def parse_crt(text: str, field) -> list[int]:
    """``(t_0, ..., t_s)`` as a list of integer codes."""
    p = _Parser(text, field)
    p.expect("(")
    vals = _parse_list(p, ")")
    p.expect(")")
    p.expect_end()
    return vals


def parse_pauli(text: str, field) -> tuple[list[int], list[int]]:
    """``[a_1, ..., a_n | b_1, ..., b_n]`` as (X part, Z part) code lists."""
    p = _Parser(text, field)
    p.expect("[")
    a = _parse_list(p, "|")
    p.expect("|")
    b = _parse_list(p, "]")
    p.expect("]")
    p.expect_end()
    if len(a) != len(b):
        raise ParseError("X and Z parts differ in length", text, 0, 1, None)
    return a, b


def parse_triple(text: str) -> tuple[int, int, int]:
    """``[n,k,d]`` or ``[[n,k,d]]`` (optionally with ``_q`` suffix)."""
    m = re.fullmatch(r"\s*\[\[?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\]?\s*(?:_\s*\d+)?\s*", text)
    if not m:
        raise ParseError("expected [n,k,d] or [[n,k,d]]", text, 0, 1, text.strip())
    return tuple(int(g) for g in m.groups())
