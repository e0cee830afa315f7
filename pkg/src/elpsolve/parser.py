"""Parser for the textual rule format.

Grammar (EBNF):

    program   := { rule } ;
    rule      := ( head [ ":-" body ] | ":-" body ) "." ;
    head      := atomlist | "{" atom "}" | "#false" ;
    atomlist  := atom { ("|" | ";") atom } ;
    body      := literal { "," literal } ;
    literal   := [ "not" [ "not" ] ] ( atom | "#true" | "#false" | subj ) ;
    subj      := "K" [ "not" [ "not" ] ] ( atom | "#true" | "#false" ) ;
    atom      := [a-z][A-Za-z0-9_]* with an optional parenthesized
                 constant-term tuple, e.g. d(1), stored verbatim ;
    comments  := "%" to end of line ;

Parsing desugars choice rules, rejects reserved-prefix atoms, and folds truth
constants, so the returned program is ready for normalization.  Errors abort
with positions; warnings (currently: duplicate rules) do not.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .core import (
    AtomId,
    Literal,
    ObjLiteral,
    Program,
    Rule,
    SubjLiteral,
    TruthConst,
    fold_constants,
    make_program,
    make_rule,
    user_atom,
)
from .core import check_reserved
from .errors import ParseError, ReservedPrefixError


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: Severity = Severity.ERROR

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity.value}: {self.message}"


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<impl>:-)
  | (?P<hash>\#(?:true|false))
  | (?P<ident>[a-z][A-Za-z0-9_]*)
  | (?P<upper>[A-Z][A-Za-z0-9_]*)
  | (?P<number>\d+)
  | (?P<punct>[.,|;{}()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> tuple[list[_Token], list[ParseDiagnostic]]:
    tokens: list[_Token] = []
    errors: list[ParseDiagnostic] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            errors.append(
                ParseDiagnostic(line, col, f"unexpected character {text[pos]!r}")
            )
            pos += 1
            col += 1
            continue
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens, errors


class _SyntaxError(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        self.diagnostic = diagnostic


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.diagnostics: list[ParseDiagnostic] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, tok: _Token, message: str) -> _SyntaxError:
        return _SyntaxError(ParseDiagnostic(tok.line, tok.column, message))

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise self.error(tok, f"expected {text!r}, found {tok.text!r}")
        return tok

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.text == text

    # ---- grammar ----

    def parse_program(self) -> list[tuple[Rule, _Token]]:
        rules: list[tuple[Rule, _Token]] = []
        while self.peek().kind != "eof":
            start = self.peek()
            try:
                rules.append((self.parse_rule(), start))
            except _SyntaxError as exc:
                self.diagnostics.append(exc.diagnostic)
                self.synchronize()
        return rules

    def synchronize(self) -> None:
        # The failing token may have been the terminator itself.
        if self.pos > 0 and self.tokens[self.pos - 1].text == ".":
            return
        while self.peek().kind != "eof":
            if self.next().text == ".":
                return

    def parse_rule(self) -> Rule:
        if self.at_punct(":-"):
            self.next()
            body = self.parse_body()
            self.expect(".")
            return make_rule((), body)
        head, choice = self.parse_head()
        body: tuple[Literal, ...] = ()
        if self.at_punct(":-"):
            self.next()
            body = self.parse_body()
        self.expect(".")
        return make_rule(head, body, choice=choice)

    def parse_head(self) -> tuple[tuple[AtomId, ...], bool]:
        tok = self.peek()
        if tok.text == "{":
            self.next()
            atom = self.parse_atom()
            closing = self.next()
            if closing.text == ",":
                raise self.error(
                    closing, "choice heads take a single atom, found a list"
                )
            if closing.text != "}":
                raise self.error(closing, f"expected '}}', found {closing.text!r}")
            return (atom,), True
        if tok.text == "#false":
            self.next()
            return (), False
        if tok.text == "#true":
            raise self.error(tok, "'#true' is not a valid rule head")
        atoms = [self.parse_atom()]
        while self.peek().text in ("|", ";"):
            self.next()
            atoms.append(self.parse_atom())
        return tuple(atoms), False

    def parse_body(self) -> tuple[Literal, ...]:
        literals = [self.parse_literal()]
        while self.at_punct(","):
            self.next()
            literals.append(self.parse_literal())
        return tuple(literals)

    def parse_literal(self) -> Literal:
        neg = self.parse_nots()
        tok = self.peek()
        if tok.kind == "upper":
            if tok.text != "K":
                raise self.error(tok, f"unexpected identifier {tok.text!r}")
            self.next()
            inner_neg = self.parse_nots()
            inner = self.parse_ext_core()
            return SubjLiteral(ObjLiteral(inner, inner_neg), neg)
        return ObjLiteral(self.parse_ext_core(), neg)

    def parse_nots(self) -> int:
        neg = 0
        while neg < 2 and self.peek().text == "not":
            self.next()
            neg += 1
        if self.peek().text == "not":
            raise self.error(self.peek(), "at most two 'not's may be stacked")
        return neg

    def parse_ext_core(self):
        tok = self.peek()
        if tok.text == "#true":
            self.next()
            return TruthConst.TRUE
        if tok.text == "#false":
            self.next()
            return TruthConst.FALSE
        return self.parse_atom()

    def parse_atom(self) -> AtomId:
        tok = self.next()
        if tok.kind != "ident" or tok.text == "not":
            raise self.error(tok, f"expected an atom, found {tok.text!r}")
        symbol = tok.text
        if self.at_punct("("):
            self.next()
            terms = [self.parse_term()]
            while self.at_punct(","):
                self.next()
                terms.append(self.parse_term())
            self.expect(")")
            symbol = f"{symbol}({','.join(terms)})"
        try:
            check_reserved(symbol)
        except ReservedPrefixError as exc:
            raise self.error(tok, str(exc)) from None
        return user_atom(symbol)

    def parse_term(self) -> str:
        tok = self.next()
        if tok.kind not in ("ident", "number"):
            raise self.error(tok, f"expected a constant term, found {tok.text!r}")
        return tok.text


def parse_program_with_warnings(text: str) -> tuple[Program, list[ParseDiagnostic]]:
    """Parse program text, returning the program and any warnings.

    Raises ParseError (with all error diagnostics) if the text is invalid.
    """
    tokens, errors = _tokenize(text)
    parser = _Parser(tokens)
    rules = parser.parse_program()
    errors += parser.diagnostics
    if errors:
        raise ParseError(errors)
    warnings = _duplicate_warnings(rules)
    return fold_constants(make_program(r for r, _ in rules)), warnings


def parse_program(text: str) -> Program:
    """Parse program text, ignoring warnings."""
    program, _ = parse_program_with_warnings(text)
    return program


def _duplicate_warnings(rules: list[tuple[Rule, _Token]]) -> list[ParseDiagnostic]:
    seen: set[tuple] = set()
    warnings = []
    for rule, start in rules:
        key = (rule.head, rule.body, rule.choice)
        if key in seen:
            warnings.append(
                ParseDiagnostic(
                    start.line,
                    start.column,
                    f"duplicate rule: {rule}",
                    severity=Severity.WARNING,
                )
            )
        seen.add(key)
    return warnings
