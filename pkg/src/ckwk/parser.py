"""Text syntax for formulas and sequents.

Grammar (whitespace-insensitive):

    form := imp
    imp  := or ("->" imp)?
    or   := and ("|" and)*
    and  := un ("&" un)*
    un   := "~" un | "[]" un | "<>" un | "false" | "true" | ident | "(" form ")"

Variables match [a-z][a-zA-Z0-9_]*; "false" and "true" are reserved.
"~x" abbreviates x -> false and "true" abbreviates false -> false, so
neither survives parsing as a distinct node.  A sequent is written
"G1, G2, ... |- D" where either side may be empty.
"""

from __future__ import annotations

import re

from .formula import BOT, TRUE, And, Box, Dia, Formula, Imp, Or, Var, neg
from .sequent import FMultiset, Sequent

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<turnstile>\|-)|(?P<or>\|)|(?P<and>&)|(?P<not>~)"
    r"|(?P<box>\[\])|(?P<dia><>)|(?P<lpar>\()|(?P<rpar>\))|(?P<comma>,)"
    r"|(?P<ident>[a-z][a-zA-Z0-9_]*))"
)


class ParseError(ValueError):
    """Syntax error with the offending position (0-based)."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


class _Tokens:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise ParseError(f"unexpected character {text[at]!r}", text, at)
            self.toks.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.toks.append(("eof", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        t = self.toks[self.i]
        if t[0] != kind:
            raise ParseError(f"expected {what}, found {t[1] or 'end of input'!r}", self.text, t[2])
        self.i += 1
        return t


def _parse_imp(ts: _Tokens) -> Formula:
    lhs = _parse_or(ts)
    if ts.peek()[0] == "arrow":
        ts.next()
        return Imp(lhs, _parse_imp(ts))
    return lhs


def _parse_or(ts: _Tokens) -> Formula:
    f = _parse_and(ts)
    while ts.peek()[0] == "or":
        ts.next()
        f = Or(f, _parse_and(ts))
    return f


def _parse_and(ts: _Tokens) -> Formula:
    f = _parse_un(ts)
    while ts.peek()[0] == "and":
        ts.next()
        f = And(f, _parse_un(ts))
    return f


def _parse_un(ts: _Tokens) -> Formula:
    kind, value, pos = ts.next()
    if kind == "not":
        return neg(_parse_un(ts))
    if kind == "box":
        return Box(_parse_un(ts))
    if kind == "dia":
        return Dia(_parse_un(ts))
    if kind == "ident":
        if value == "false":
            return BOT
        if value == "true":
            return TRUE
        return Var(value)
    if kind == "lpar":
        f = _parse_imp(ts)
        ts.expect("rpar", "')'")
        return f
    raise ParseError(
        f"expected a formula, found {value or 'end of input'!r}", ts.text, pos
    )


def parse_formula(text: str) -> Formula:
    ts = _Tokens(text)
    f = _parse_imp(ts)
    ts.expect("eof", "end of input")
    return f


def parse_sequent(text: str) -> Sequent:
    """Parse "G1, ..., Gn |- D"; either side may be empty."""
    ts = _Tokens(text)
    ante: list[Formula] = []
    if ts.peek()[0] not in ("turnstile", "eof"):
        ante.append(_parse_imp(ts))
        while ts.peek()[0] == "comma":
            ts.next()
            ante.append(_parse_imp(ts))
    ts.expect("turnstile", "'|-'")
    succ: Formula | None = None
    if ts.peek()[0] != "eof":
        succ = _parse_imp(ts)
        ts.expect("eof", "end of input")
    return Sequent(FMultiset(ante), succ)
