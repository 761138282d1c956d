"""
Evaluation of sub-pattern constraints against a transaction database.

Quantifiers range over the non-empty sub-patterns of X, X included.
Semantics are classical two-valued logic; a comparison involving an
undefined measure value is false.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from config import Config
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
    SetRelation,
    Union,
    Variable,
    WholePattern,
    free_variables,
    iter_nodes,
)
from database.transaction_db import Pattern, TransactionDatabase, make_pattern, nonempty_subsets
from errors import ConstraintError, PatternSpaceGuardError, WitnessShapeError
from measures.registry import MeasureValue, compare, evaluate_measure, resolve_measure
from utils.logger import MiningLogger

Env = Dict[str, FrozenSet[int]]


@dataclass(frozen=True)
class EvaluationTrace:
    """
    Outcome of evaluating a constraint on one pattern.

    Attributes:
        verdict: Whether the pattern satisfies the constraint.
        witnesses: Sub-patterns of X that were arguments of a measure
            comparison which held during evaluation.
    """

    verdict: bool
    witnesses: FrozenSet[Pattern]

    def sorted_witnesses(self) -> List[Pattern]:
        return sorted(self.witnesses, key=lambda p: (len(p), p))


class ConstraintEvaluator:
    """
    Evaluates formulas for a fixed database and pattern X.

    With collect_witnesses enabled every quantifier instance and every
    connective operand is evaluated, so the witness set does not depend on
    operand order. Without it evaluation short-circuits.
    """

    def __init__(
        self,
        db: TransactionDatabase,
        pattern: Sequence[int],
        cap: Optional[int] = None,
        collect_witnesses: bool = True,
    ):
        self.db = db
        self.pattern: Pattern = make_pattern(pattern)
        self.cap = Config.ENUMERATION_CAP if cap is None else cap
        self.collect_witnesses = collect_witnesses
        self.witnesses: Set[Pattern] = set()
        self._subsets: Optional[List[FrozenSet[int]]] = None
        self._measure_cache: Dict[Tuple[str, Tuple[Pattern, ...]], MeasureValue] = {}
        for item_id in self.pattern:
            db.label_of(item_id)

    @property
    def subsets(self) -> List[FrozenSet[int]]:
        if self._subsets is None:
            self._subsets = [frozenset(s) for s in nonempty_subsets(self.pattern, self.cap)]
        return self._subsets

    # -- formulas ------------------------------------------------------

    def evaluate(self, node: Formula, env: Optional[Env] = None) -> bool:
        env = {} if env is None else env
        if isinstance(node, Compare):
            return self._compare(node, env)
        if isinstance(node, SetRelation):
            return self._relation(node, env)
        if isinstance(node, Not):
            return not self.evaluate(node.operand, env)
        if isinstance(node, And):
            return self._combine(all, node.operands, env, stop_on=False)
        if isinstance(node, Or):
            return self._combine(any, node.operands, env, stop_on=True)
        if isinstance(node, Quantifier):
            return self._quantifier(node, env)
        raise ConstraintError(f"cannot evaluate node {node!r}")

    def _combine(self, reducer, operands, env: Env, stop_on: bool) -> bool:
        if self.collect_witnesses:
            return reducer([self.evaluate(operand, env) for operand in operands])
        for operand in operands:
            if self.evaluate(operand, env) is stop_on:
                return stop_on
        return not stop_on

    def _quantifier(self, node: Quantifier, env: Env) -> bool:
        results = []
        for subset in self.subsets:
            inner = dict(env)
            inner[node.variable] = subset
            if node.guard is not None and not self.evaluate(node.guard, inner):
                continue
            holds = self.evaluate(node.body, inner)
            if not self.collect_witnesses:
                if node.kind == "forall" and not holds:
                    return False
                if node.kind == "exists" and holds:
                    return True
            results.append(holds)
        return all(results) if node.kind == "forall" else any(results)

    def _compare(self, node: Compare, env: Env) -> bool:
        left = self._term(node.left, env)
        right = self._term(node.right, env)
        holds = compare(left, node.op, right, exact=_is_exact(node.left) and _is_exact(node.right))
        if holds:
            self._record(node, env)
        return holds

    def _record(self, node: Compare, env: Env) -> None:
        own = frozenset(self.pattern)
        for term in (node.left, node.right):
            if isinstance(term, MeasureCall):
                for arg in term.args:
                    value = self.set_value(arg, env)
                    if value and value <= own:
                        self.witnesses.add(make_pattern(value))

    def _relation(self, node: SetRelation, env: Env) -> bool:
        left = self.set_value(node.left, env)
        right = self.set_value(node.right, env)
        if node.relation == "==":
            return left == right
        if node.relation == "!=":
            return left != right
        if node.relation == "subsetof":
            return left <= right
        return left < right

    # -- terms and sets ------------------------------------------------

    def _term(self, node, env: Env):
        if isinstance(node, NumberLiteral):
            return node.value
        if isinstance(node, LengthOf):
            return Fraction(len(self.set_value(node.arg, env)))
        if isinstance(node, MeasureCall):
            args = tuple(make_pattern(self.set_value(arg, env)) for arg in node.args)
            key = (resolve_measure(node.measure).name, args)
            if key not in self._measure_cache:
                self._measure_cache[key] = evaluate_measure(self.db, node.measure, *args)
            return self._measure_cache[key]
        raise ConstraintError(f"cannot evaluate term {node!r}")

    def set_value(self, node, env: Env) -> FrozenSet[int]:
        if isinstance(node, Variable):
            try:
                return env[node.name]
            except KeyError:
                raise ConstraintError(f"variable {node.name} has no value") from None
        if isinstance(node, WholePattern):
            return frozenset(self.pattern)
        if isinstance(node, Union):
            return self.set_value(node.left, env) | self.set_value(node.right, env)
        if isinstance(node, LiteralSet):
            return frozenset(self.db.id_of(label) for label in node.labels)
        raise ConstraintError(f"cannot evaluate set expression {node!r}")


def _is_exact(term) -> bool:
    if isinstance(term, MeasureCall):
        return resolve_measure(term.measure).exact
    return True


# ----------------------------------------------------------------------
# Public operations
# ----------------------------------------------------------------------

def evaluate_constraint(
    db: TransactionDatabase,
    ast: Formula,
    pattern: Sequence[int],
    cap: Optional[int] = None,
) -> EvaluationTrace:
    """
    Decide whether pattern satisfies the constraint.

    Raises:
        EnumerationCapError: If a quantifier would enumerate a pattern
            longer than the cap.
    """
    evaluator = ConstraintEvaluator(db, pattern, cap)
    verdict = evaluator.evaluate(ast)
    return EvaluationTrace(verdict, frozenset(evaluator.witnesses))


def holds(db: TransactionDatabase, ast: Formula, pattern: Sequence[int], cap: Optional[int] = None) -> bool:
    """Verdict only; short-circuits and collects no witnesses."""
    return ConstraintEvaluator(db, pattern, cap, collect_witnesses=False).evaluate(ast)


@dataclass(frozen=True)
class EdgeCondition:
    """A constraint decomposed for per-sub-pattern testing."""

    variable: str
    guard: Optional[Formula]
    body: Formula


def edge_condition(ast: Formula) -> EdgeCondition:
    """
    Split a constraint into the variable, optional guard and body used to
    test sub-patterns one at a time.

    Accepted shapes are a single quantifier over sub(X), or a formula with
    exactly one free variable. The body may not quantify again and must
    mention the variable.

    Raises:
        WitnessShapeError: For any other shape.
    """
    if isinstance(ast, Quantifier):
        condition = EdgeCondition(ast.variable, ast.guard, ast.body)
    else:
        free = free_variables(ast)
        if len(free) != 1:
            raise WitnessShapeError(
                "expected one quantifier over sub(X) or exactly one free set variable, "
                f"found free variables {sorted(free) or 'none'}"
            )
        condition = EdgeCondition(next(iter(free)), None, ast)

    nested = [node for node in iter_nodes(condition.body) if isinstance(node, Quantifier)]
    if nested:
        raise WitnessShapeError("the sub-pattern condition may not contain another quantifier")
    referenced = {node.name for node in iter_nodes(condition.body) if isinstance(node, Variable)}
    if referenced != {condition.variable}:
        raise WitnessShapeError(
            f"the sub-pattern condition must reference exactly the variable {condition.variable}"
        )
    return condition


def satisfying_subpatterns(
    db: TransactionDatabase,
    ast: Formula,
    pattern: Sequence[int],
    cap: Optional[int] = None,
) -> Set[Pattern]:
    """
    All non-empty S within pattern for which the constraint's sub-pattern
    condition holds (guard and body).

    Raises:
        WitnessShapeError: If the formula has no single sub-pattern variable.
    """
    condition = edge_condition(ast)
    evaluator = ConstraintEvaluator(db, pattern, cap, collect_witnesses=False)
    found: Set[Pattern] = set()
    for subset in evaluator.subsets:
        env = {condition.variable: subset}
        if condition.guard is not None and not evaluator.evaluate(condition.guard, env):
            continue
        if evaluator.evaluate(condition.body, env):
            found.add(make_pattern(subset))
    MiningLogger.get_logger(__name__).debug(
        f"{len(found)} of {len(evaluator.subsets)} sub-patterns satisfy the condition"
    )
    return found


def pattern_space_size(k: int) -> int:
    """
    Number of distinct sub-pattern predicates on a k-item pattern, 2^(2^k).

    Raises:
        PatternSpaceGuardError: If k exceeds PATTERN_SPACE_MAX_K.
    """
    if k < 0:
        raise PatternSpaceGuardError("pattern length must not be negative")
    if k > Config.PATTERN_SPACE_MAX_K:
        raise PatternSpaceGuardError(
            f"k={k} exceeds the guard of {Config.PATTERN_SPACE_MAX_K}; result would have 2^{k} bits"
        )
    return 2 ** (2 ** k)
