"""Tiny integer expression language for coefficient-index formulas.

Supports +, -, *, ** (nonnegative integer exponents), unary minus,
parentheses, integer literals, and named symbols.  Division (both / and //)
is exact integer division and raises if the quotient is not an integer;
a non-exact division signals a transcription bug or an inadmissible
parameter combination.
"""

from __future__ import annotations

import ast
from functools import lru_cache


class ExpressionError(ValueError):
    """Malformed or out-of-language expression."""


class NonExactDivisionError(ArithmeticError):
    """An index formula divided two integers that do not divide exactly."""


@lru_cache(maxsize=None)
def _parse(text: str) -> ast.expr:
    try:
        node = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from exc
    return node.body


def evaluate(text: str, env: dict[str, int]) -> int:
    """Evaluate an index formula over integer-valued symbols."""
    return _eval(_parse(text), env, text)


def _eval(node: ast.expr, env: dict[str, int], text: str) -> int:
    if isinstance(node, ast.Constant):
        if not isinstance(node.value, int) or isinstance(node.value, bool):
            raise ExpressionError(f"non-integer literal in {text!r}")
        return node.value
    if isinstance(node, ast.Name):
        try:
            return env[node.id]
        except KeyError as exc:
            raise ExpressionError(f"unknown symbol {node.id!r} in {text!r}") from exc
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env, text)
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, env, text)
        right = _eval(node.right, env, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, (ast.Div, ast.FloorDiv)):
            if right == 0:
                raise NonExactDivisionError(f"division by zero in {text!r}")
            quotient, remainder = divmod(left, right)
            if remainder:
                raise NonExactDivisionError(
                    f"{left} / {right} is not exact in {text!r}"
                )
            return quotient
        if isinstance(node.op, ast.Pow):
            if right < 0:
                raise ExpressionError(f"negative exponent in {text!r}")
            return left**right
    raise ExpressionError(f"unsupported construct in {text!r}")


def symbols_used(text: str) -> set[str]:
    return {n.id for n in ast.walk(_parse(text)) if isinstance(n, ast.Name)}
