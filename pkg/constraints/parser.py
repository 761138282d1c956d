"""
Recursive descent parser for the sub-pattern constraint language.

Grammar (keywords are lowercase, variables are uppercase identifiers,
X always denotes the whole pattern):

    constraint  := disjunction
    disjunction := conjunction { "or" conjunction }
    conjunction := unary { "and" unary }
    unary       := "not" unary | quantified | atom | "(" constraint ")"
    quantified  := ("forall"|"exists") VAR "in" "sub" "(" "X" ")"
                   [ "where" constraint ] ":" unary
    atom        := term CMP term | setexpr SETREL setexpr
    term        := MEASURE "(" setexpr { "," setexpr } ")"
                 | "len" "(" setexpr ")" | NUMBER
    setexpr     := primary { "union" primary }
    primary     := VAR | "X" | "{" LABEL { "," LABEL } "}"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from constraints.ast_nodes import (
    And,
    Compare,
    Formula,
    LengthOf,
    LiteralSet,
    MeasureCall,
    Not,
    NumberLiteral,
    Or,
    Quantifier,
    SetExpr,
    SetRelation,
    Term,
    Union,
    Variable,
    WholePattern,
)
from errors import ArityMismatchError, ConstraintSyntaxError, LexicalError, UnboundVariableError
from measures.registry import measure_names, resolve_measure

SET_RELATIONS = ("==", "!=", "subsetof", "propersubsetof")

_TOKEN_SPEC = [
    ("SPACE", r"\s+"),
    ("NUMBER", r"\d+(?:\.\d*)?|\.\d+"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("STRING", r'"(?:[^"\\]|\\.)*"'),
    ("OP", r">=|<=|==|!=|>|<"),
    ("PUNCT", r"[(){},:]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    """
    Split constraint text into tokens.

    Raises:
        LexicalError: On any character that starts no token.
    """
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise LexicalError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        if kind != "SPACE":
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


def _is_variable(token: Token) -> bool:
    return token.kind == "IDENT" and token.text[0].isupper() and token.text != "X"


class ConstraintParser:
    """Parses one constraint; variables in free_variables count as bound."""

    def __init__(self, text: str, free_variables: Iterable[str] = ()):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.scope: List[str] = list(free_variables)

    # -- token helpers -------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "EOF":
            self.index += 1
        return token

    def _at(self, text: str, kind: Optional[str] = None) -> bool:
        token = self.current
        return token.text == text and (kind is None or token.kind == kind) and token.kind != "STRING"

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            found = self.current.text or "end of input"
            raise ConstraintSyntaxError(f"expected {text!r} but found {found!r}", self.current.pos)
        return self._advance()

    def _fail(self, message: str) -> None:
        raise ConstraintSyntaxError(message, self.current.pos)

    # -- grammar -------------------------------------------------------

    def parse(self) -> Formula:
        formula = self._disjunction()
        if self.current.kind != "EOF":
            self._fail(f"unexpected {self.current.text!r} after end of constraint")
        return formula

    def _disjunction(self) -> Formula:
        operands = [self._conjunction()]
        while self._at("or", "IDENT"):
            self._advance()
            operands.append(self._conjunction())
        return operands[0] if len(operands) == 1 else Or(tuple(operands))

    def _conjunction(self) -> Formula:
        operands = [self._unary()]
        while self._at("and", "IDENT"):
            self._advance()
            operands.append(self._unary())
        return operands[0] if len(operands) == 1 else And(tuple(operands))

    def _unary(self) -> Formula:
        if self._at("not", "IDENT"):
            self._advance()
            return Not(self._unary())
        if self._at("forall", "IDENT") or self._at("exists", "IDENT"):
            return self._quantified()
        if self._at("(", "PUNCT"):
            self._advance()
            inner = self._disjunction()
            self._expect(")")
            return inner
        return self._atom()

    def _quantified(self) -> Formula:
        kind = self._advance().text
        token = self.current
        if not _is_variable(token):
            self._fail(f"expected an uppercase set variable after {kind!r}")
        if token.text in self.scope:
            self._fail(f"variable {token.text} is already bound")
        variable = self._advance().text
        self._expect("in")
        self._expect("sub")
        self._expect("(")
        self._expect("X")
        self._expect(")")

        self.scope.append(variable)
        try:
            guard = None
            if self._at("where", "IDENT"):
                self._advance()
                guard = self._disjunction()
            self._expect(":")
            body = self._unary()
        finally:
            self.scope.pop()
        return Quantifier(kind, variable, guard, body)

    def _starts_set(self) -> bool:
        token = self.current
        return (token.kind == "IDENT" and token.text[0].isupper()) or self._at("{", "PUNCT")

    def _atom(self) -> Formula:
        if self._starts_set():
            left = self._setexpr()
            token = self.current
            if token.kind not in ("OP", "IDENT") or token.text not in SET_RELATIONS:
                self._fail("expected a set relation (==, !=, subsetof, propersubsetof)")
            relation = self._advance().text
            return SetRelation(left, relation, self._setexpr())

        left = self._term()
        token = self.current
        if token.kind != "OP":
            self._fail("expected a comparison operator")
        op = self._advance().text
        return Compare(left, op, self._term())

    def _term(self) -> Term:
        token = self.current
        if token.kind == "NUMBER":
            self._advance()
            return NumberLiteral(token.text)
        if token.kind != "IDENT" or token.text[0].isupper():
            self._fail(f"expected a measure, len(...) or a number, found {token.text or 'end of input'!r}")
        if token.text == "len":
            self._advance()
            self._expect("(")
            arg = self._setexpr()
            self._expect(")")
            return LengthOf(arg)
        if token.text not in measure_names():
            self._fail(f"unknown measure {token.text!r}")

        self._advance()
        self._expect("(")
        args = [self._setexpr()]
        while self._at(",", "PUNCT"):
            self._advance()
            args.append(self._setexpr())
        self._expect(")")
        arity = resolve_measure(token.text).arity
        if len(args) != arity:
            raise ArityMismatchError(
                f"measure {token.text} takes {arity} argument(s), got {len(args)}", token.pos
            )
        return MeasureCall(token.text, tuple(args))

    def _setexpr(self) -> SetExpr:
        node = self._set_primary()
        while self._at("union", "IDENT"):
            self._advance()
            node = Union(node, self._set_primary())
        return node

    def _set_primary(self) -> SetExpr:
        token = self.current
        if self._at("{", "PUNCT"):
            self._advance()
            labels = [self._label()]
            while self._at(",", "PUNCT"):
                self._advance()
                labels.append(self._label())
            self._expect("}")
            return LiteralSet(tuple(labels))
        if token.kind == "IDENT" and token.text == "X":
            self._advance()
            return WholePattern()
        if _is_variable(token):
            if token.text not in self.scope:
                raise UnboundVariableError(
                    f"variable {token.text} is not bound by a quantifier", token.pos, token.text
                )
            self._advance()
            return Variable(token.text)
        self._fail(f"expected a set expression, found {token.text or 'end of input'!r}")

    def _label(self) -> str:
        token = self.current
        if token.kind in ("IDENT", "NUMBER"):
            self._advance()
            return token.text
        if token.kind == "STRING":
            self._advance()
            return re.sub(r"\\(.)", r"\1", token.text[1:-1])
        self._fail("expected an item label")


def parse_constraint(text: str, free_variables: Iterable[str] = ()) -> Formula:
    """
    Parse constraint text into a formula tree.

    Args:
        text: Constraint source.
        free_variables: Variables allowed without a binding quantifier,
            used for hyperedge conditions such as "col(S) >= 1.5".

    Raises:
        ConstraintSyntaxError: Lexical, syntax, unbound-variable or arity errors.
    """
    return ConstraintParser(text, free_variables).parse()


def parse_edge_constraint(text: str) -> Formula:
    """
    Parse a hyperedge condition: either a formula quantifying over sub(X),
    or a formula with a single unbound set variable such as "col(S) >= 1.5".
    """
    try:
        return parse_constraint(text)
    except UnboundVariableError as exc:
        return parse_constraint(text, free_variables=(exc.name,))
