"""
Syntax tree for sub-pattern constraints, plus the canonical printer.

Formulas quantify over the non-empty sub-patterns of a pattern X. Node
classes are frozen dataclasses so parsed trees compare by value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Set, Tuple, Union as TypingUnion

_PLAIN_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+(?:\.\d*)?|\.\d+")


# ----------------------------------------------------------------------
# Set expressions
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class WholePattern:
    """The pattern X itself."""


@dataclass(frozen=True)
class Union:
    left: "SetExpr"
    right: "SetExpr"


@dataclass(frozen=True)
class LiteralSet:
    labels: Tuple[str, ...]


SetExpr = TypingUnion[Variable, WholePattern, Union, LiteralSet]


# ----------------------------------------------------------------------
# Terms
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class MeasureCall:
    measure: str
    args: Tuple[SetExpr, ...]


@dataclass(frozen=True)
class NumberLiteral:
    text: str

    @property
    def value(self) -> Fraction:
        return Fraction(self.text)


@dataclass(frozen=True)
class LengthOf:
    arg: SetExpr


Term = TypingUnion[MeasureCall, NumberLiteral, LengthOf]


# ----------------------------------------------------------------------
# Formulas
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Quantifier:
    kind: str  # "forall" | "exists"
    variable: str
    guard: Optional["Formula"]
    body: "Formula"


@dataclass(frozen=True)
class And:
    operands: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    operands: Tuple["Formula", ...]


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class Compare:
    left: Term
    op: str
    right: Term


@dataclass(frozen=True)
class SetRelation:
    left: SetExpr
    relation: str  # "==" | "!=" | "subsetof" | "propersubsetof"
    right: SetExpr


Formula = TypingUnion[Quantifier, And, Or, Not, Compare, SetRelation]
ConstraintAst = Formula


# ----------------------------------------------------------------------
# Traversal
# ----------------------------------------------------------------------

def iter_nodes(node) -> Iterator[object]:
    """Pre-order walk over every node of a formula, term or set expression."""
    yield node
    if isinstance(node, Quantifier):
        if node.guard is not None:
            yield from iter_nodes(node.guard)
        yield from iter_nodes(node.body)
    elif isinstance(node, (And, Or)):
        for operand in node.operands:
            yield from iter_nodes(operand)
    elif isinstance(node, Not):
        yield from iter_nodes(node.operand)
    elif isinstance(node, (Compare, SetRelation, Union)):
        yield from iter_nodes(node.left)
        yield from iter_nodes(node.right)
    elif isinstance(node, MeasureCall):
        for arg in node.args:
            yield from iter_nodes(arg)
    elif isinstance(node, LengthOf):
        yield from iter_nodes(node.arg)


def free_variables(node, bound: Tuple[str, ...] = ()) -> Set[str]:
    """Variables referenced but not bound by an enclosing quantifier."""
    if isinstance(node, Variable):
        return set() if node.name in bound else {node.name}
    if isinstance(node, Quantifier):
        inner = bound + (node.variable,)
        found = free_variables(node.body, inner)
        if node.guard is not None:
            found |= free_variables(node.guard, inner)
        return found
    found: Set[str] = set()
    for child in _children(node):
        found |= free_variables(child, bound)
    return found


def _children(node) -> Tuple[object, ...]:
    if isinstance(node, (And, Or)):
        return node.operands
    if isinstance(node, Not):
        return (node.operand,)
    if isinstance(node, (Compare, SetRelation, Union)):
        return (node.left, node.right)
    if isinstance(node, MeasureCall):
        return node.args
    if isinstance(node, LengthOf):
        return (node.arg,)
    return ()


# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------

def _label(text: str) -> str:
    if _PLAIN_LABEL.fullmatch(text):
        return text
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _set(node: SetExpr) -> str:
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, WholePattern):
        return "X"
    if isinstance(node, Union):
        return f"{_set(node.left)} union {_set(node.right)}"
    if isinstance(node, LiteralSet):
        return "{" + ", ".join(_label(label) for label in node.labels) + "}"
    raise TypeError(f"not a set expression: {node!r}")


def _term(node: Term) -> str:
    if isinstance(node, MeasureCall):
        return f"{node.measure}(" + ", ".join(_set(arg) for arg in node.args) + ")"
    if isinstance(node, NumberLiteral):
        return node.text
    if isinstance(node, LengthOf):
        return f"len({_set(node.arg)})"
    raise TypeError(f"not a term: {node!r}")


def _unary(node: Formula) -> str:
    if isinstance(node, (And, Or)):
        return f"({pretty_print(node)})"
    return pretty_print(node)


def pretty_print(node: Formula) -> str:
    """Canonical text for a formula; parsing it back yields an equal tree."""
    if isinstance(node, Or):
        return " or ".join(pretty_print(operand) for operand in node.operands)
    if isinstance(node, And):
        return " and ".join(
            f"({pretty_print(operand)})" if isinstance(operand, Or) else pretty_print(operand)
            for operand in node.operands
        )
    if isinstance(node, Not):
        return f"not {_unary(node.operand)}"
    if isinstance(node, Quantifier):
        guard = f" where {pretty_print(node.guard)}" if node.guard is not None else ""
        return f"{node.kind} {node.variable} in sub(X){guard} : {_unary(node.body)}"
    if isinstance(node, Compare):
        return f"{_term(node.left)} {node.op} {_term(node.right)}"
    if isinstance(node, SetRelation):
        return f"{_set(node.left)} {node.relation} {_set(node.right)}"
    raise TypeError(f"not a formula: {node!r}")
