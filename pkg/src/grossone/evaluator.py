"""Expression evaluation at arbitrary gross-number points.

Instead of taking limits, expressions are evaluated directly: substitute an
infinite or infinitesimal argument and compute the exact result.  Functions
may be plain expressions of one parameter or piecewise definitions whose
branches are selected by comparing the argument against breakpoints, which
is always decidable in the total dominance order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple, Union

from . import core
from .core import GROSSONE, GrossNumber, compare
from .errors import EvalError, NoBranchMatched, UnboundName
from .numio import (
    Ast,
    Binary,
    Branch,
    Call,
    Compare,
    GrossoneSymbol,
    LetBinding,
    Literal,
    PiecewiseDef,
    Unary,
    Var,
)


@dataclass(frozen=True)
class ExprFunction:
    """A one-parameter function given by a single expression body."""

    param: str
    body: Ast


@dataclass(frozen=True)
class PiecewiseBranch:
    relation: str
    breakpoint: GrossNumber
    body: Ast


@dataclass(frozen=True)
class PiecewiseFn:
    """Sign-conditioned piecewise function; branches are tested in order."""

    param: str
    branches: Tuple[PiecewiseBranch, ...]


Function = Union[ExprFunction, PiecewiseFn]


@dataclass(frozen=True)
class Env:
    """Immutable name bindings; extension returns a new environment."""

    bindings: Mapping[str, GrossNumber] = field(default_factory=dict)
    functions: Mapping[str, Function] = field(default_factory=dict)

    def lookup(self, name: str) -> GrossNumber:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundName(name) from None

    def function(self, name: str) -> Function:
        try:
            return self.functions[name]
        except KeyError:
            raise UnboundName(name) from None

    def bind(self, name: str, value: GrossNumber) -> "Env":
        return Env({**self.bindings, name: value}, self.functions)

    def define(self, name: str, fn: Function) -> "Env":
        return Env(self.bindings, {**self.functions, name: fn})


_RELATIONS = {
    "<": (-1,),
    "<=": (-1, 0),
    "=": (0,),
    ">=": (0, 1),
    ">": (1,),
}


def evaluate(ast: Ast, env: Env, *, div_max_terms: Optional[int] = None) -> GrossNumber:
    """Evaluate an expression to an exact gross-number.

    Division is exact by default and raises InexactDivision when the
    quotient does not terminate within the budget; passing
    ``div_max_terms`` switches to truncated division with that budget.
    """
    if isinstance(ast, Literal):
        return ast.value
    if isinstance(ast, GrossoneSymbol):
        return GROSSONE
    if isinstance(ast, Var):
        return env.lookup(ast.name)
    if isinstance(ast, Unary):
        return core.negate(evaluate(ast.operand, env, div_max_terms=div_max_terms))
    if isinstance(ast, Binary):
        left = evaluate(ast.left, env, div_max_terms=div_max_terms)
        right = evaluate(ast.right, env, div_max_terms=div_max_terms)
        if ast.op == "+":
            return core.add(left, right)
        if ast.op == "-":
            return core.subtract(left, right)
        if ast.op == "*":
            return core.multiply(left, right)
        if ast.op == "/":
            if div_max_terms is None:
                return core.exact_divide(left, right)
            return core.divide(left, right, div_max_terms).quotient
        if ast.op == "^":
            return core.power_gross(left, right)
        raise EvalError(f"unknown operator {ast.op!r}")
    if isinstance(ast, Call):
        fn = env.function(ast.name)
        if len(ast.args) != 1:
            raise EvalError(f"{ast.name} takes exactly one argument")
        argument = evaluate(ast.args[0], env, div_max_terms=div_max_terms)
        return apply_function(fn, argument, env, div_max_terms=div_max_terms)
    if isinstance(ast, Compare):
        raise EvalError("a comparison is not a gross-number value")
    raise EvalError(f"cannot evaluate {type(ast).__name__} as an expression")


def evaluate_compare(ast: Compare, env: Env, *, div_max_terms: Optional[int] = None) -> bool:
    left = evaluate(ast.left, env, div_max_terms=div_max_terms)
    right = evaluate(ast.right, env, div_max_terms=div_max_terms)
    return compare(left, right) in _RELATIONS[ast.op]


def apply_function(
    fn: Function, argument: GrossNumber, env: Env, *, div_max_terms: Optional[int] = None
) -> GrossNumber:
    if isinstance(fn, ExprFunction):
        return evaluate(fn.body, env.bind(fn.param, argument), div_max_terms=div_max_terms)
    return apply_piecewise(fn, argument, env, div_max_terms=div_max_terms)


def apply_piecewise(
    fn: PiecewiseFn, argument: GrossNumber, env: Env, *, div_max_terms: Optional[int] = None
) -> GrossNumber:
    """Evaluate the first branch whose condition holds for the argument."""
    for branch in fn.branches:
        if compare(argument, branch.breakpoint) in _RELATIONS[branch.relation]:
            return evaluate(
                branch.body, env.bind(fn.param, argument), div_max_terms=div_max_terms
            )
    raise NoBranchMatched(f"no branch of {fn.param}-piecewise function matches {argument!r}")


def make_function(definition: PiecewiseDef, env: Env, *, div_max_terms: Optional[int] = None) -> Function:
    """Build a callable function from a parsed definition.

    Breakpoints are evaluated once, at definition time, so branch selection
    later needs nothing but a comparison.
    """
    if definition.body is not None:
        return ExprFunction(definition.param, definition.body)
    branches = tuple(
        PiecewiseBranch(
            branch.relation,
            evaluate(branch.breakpoint, env, div_max_terms=div_max_terms),
            branch.body,
        )
        for branch in definition.branches
    )
    return PiecewiseFn(definition.param, branches)


StatementResult = Union[GrossNumber, bool, None]


def exec_statement(
    ast: Ast, env: Env, *, div_max_terms: Optional[int] = None
) -> tuple[Env, StatementResult]:
    """Run one session statement; returns the possibly-extended environment
    and the printable result (None for let/def)."""
    if isinstance(ast, LetBinding):
        value = evaluate(ast.expr, env, div_max_terms=div_max_terms)
        return env.bind(ast.name, value), None
    if isinstance(ast, PiecewiseDef):
        return env.define(ast.name, make_function(ast, env, div_max_terms=div_max_terms)), None
    if isinstance(ast, Compare):
        return env, evaluate_compare(ast, env, div_max_terms=div_max_terms)
    return env, evaluate(ast, env, div_max_terms=div_max_terms)
