"""Concrete syntax for expressions: parsing, printing, evaluation, lowering.

Grammar (left-associative, whitespace ignored)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := variable | '(' expr ')'
    variable := 'x' positive-integer

There are no constants and no unary minus: the expression universe is
built from single-use variables and the four binary operators only, so
both are rejected with a diagnostic rather than accepted and mangled.
Multiplication requires an explicit ``*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from . import canon
from .canon import CanonForm
from .projrat import EvalResult, UNDEFINED, ProjValue, p_add, p_div, p_mul, p_sub


class ExprSyntaxError(ValueError):
    """Malformed input; carries the offset and what was expected there."""

    def __init__(self, position: int, expected: str, found: str = ""):
        self.position = position
        self.expected = expected
        self.found = found
        detail = f", found {found!r}" if found else ""
        super().__init__(f"at position {position}: expected {expected}{detail}")


class EmptyInput(ExprSyntaxError):
    def __init__(self):
        super().__init__(0, "an expression")


class DuplicateVariable(ValueError):
    """A variable may be used only once in the whole expression."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"variable x{index} used more than once")


class DependencyLoss(RuntimeError):
    """Lowering dropped a variable; would contradict the construction rules."""


@dataclass(frozen=True, slots=True)
class Var:
    index: int


@dataclass(frozen=True, slots=True)
class Node:
    op: str
    left: "ExprTree"
    right: "ExprTree"


ExprTree = Union[Var, Node]

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> ExprTree:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            node = Node(op, node, self.term())
        return node

    def term(self) -> ExprTree:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            node = Node(op, node, self.factor())
        return node

    def factor(self) -> ExprTree:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise ExprSyntaxError(self.pos, "')'", self.peek())
            self.pos += 1
            return node
        if ch == "x":
            return self.variable()
        if ch == "-":
            raise ExprSyntaxError(
                self.pos, "a variable or '(' (unary minus is not part of the language)", ch
            )
        if ch.isdigit():
            raise ExprSyntaxError(
                self.pos, "a variable or '(' (constants are not part of the language)", ch
            )
        raise ExprSyntaxError(self.pos, "a variable or '('", ch)

    def variable(self) -> Var:
        start = self.pos
        self.pos += 1  # consume 'x'
        digits = ""
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            digits += self.text[self.pos]
            self.pos += 1
        if not digits or int(digits) < 1:
            raise ExprSyntaxError(start + 1, "a positive variable index", digits or self.peek())
        return Var(int(digits))


def parse(text: str) -> ExprTree:
    """Parse the grammar above, enforcing the single-use rule."""
    parser = _Parser(text)
    parser.skip_ws()
    if parser.pos >= len(text):
        raise EmptyInput()
    tree = parser.expr()
    parser.skip_ws()
    if parser.pos < len(text):
        raise ExprSyntaxError(parser.pos, "end of input or an operator", text[parser.pos])
    seen: set = set()
    for idx in _iter_var_indices(tree):
        if idx in seen:
            raise DuplicateVariable(idx)
        seen.add(idx)
    return tree


def _iter_var_indices(t: ExprTree):
    if isinstance(t, Var):
        yield t.index
    else:
        yield from _iter_var_indices(t.left)
        yield from _iter_var_indices(t.right)


def tree_variables(t: ExprTree) -> frozenset:
    return frozenset(_iter_var_indices(t))


def pretty(t: ExprTree) -> str:
    """Minimal-parentheses rendering; parse(pretty(t)) rebuilds t exactly.

    Right operands at equal precedence keep their parentheses because the
    grammar is left-associative.
    """
    if isinstance(t, Var):
        return f"x{t.index}"
    prec = _PRECEDENCE[t.op]
    left = pretty(t.left)
    if isinstance(t.left, Node) and _PRECEDENCE[t.left.op] < prec:
        left = f"({left})"
    right = pretty(t.right)
    if isinstance(t.right, Node) and _PRECEDENCE[t.right.op] <= prec:
        right = f"({right})"
    return f"{left}{t.op}{right}"


_TREE_OPS = {"+": p_add, "-": p_sub, "*": p_mul, "/": p_div}


def eval_tree(t: ExprTree, point: Mapping[int, ProjValue]) -> EvalResult:
    """Bottom-up projective evaluation; UNDEFINED propagates."""
    if isinstance(t, Var):
        try:
            return point[t.index]
        except KeyError:
            from .mpoly import MissingAssignment

            raise MissingAssignment(t.index) from None
    a = eval_tree(t.left, point)
    if a is UNDEFINED:
        return UNDEFINED
    b = eval_tree(t.right, point)
    if b is UNDEFINED:
        return UNDEFINED
    return _TREE_OPS[t.op](a, b)


def to_canon(t: ExprTree) -> CanonForm:
    """Fold the tree into its canonical form, checking no variable is lost."""
    form = _fold(t)
    if form.varset != tree_variables(t):
        raise DependencyLoss(
            f"form depends on {sorted(form.varset)} but tree uses {sorted(tree_variables(t))}"
        )
    return form


def _fold(t: ExprTree) -> CanonForm:
    if isinstance(t, Var):
        return canon.atom(t.index)
    return canon.combine(t.op, _fold(t.left), _fold(t.right))
