"""Class-count engine: the twelve categories by ending operator and type.

Every expression class ends with exactly one operator and falls in exactly
one of three types (1: the negation is not constructible, 2: constructible
but not isomorphic, 3: self-negative).  Classes at size n decompose
uniquely into smaller classes, which turns the per-category counts into
recurrences over multisets of smaller categories:

* ``+`` classes are multisets of *- or /-ending summand classes drawn per a
  non-trivial partition of n (colored-weights count).  Self-negative sums
  additionally pair a monic second-type pool against itself.
* ``-`` classes are a difference of a class and a first-type class on a
  smaller size; self-negative ones take the shape g + h - h.
* ``*`` classes are multisets of +-ending factors, possibly times bare
  variables; second-type products carry a global sign choice over monic
  second-type factors.
* ``/`` classes convolve numerator and denominator pools, with sign choices
  mirroring the product case.

Monic second-type pools are always half the second-type count; the halving
asserts evenness first.  All arithmetic is unbounded.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

from .partitions import (
    count_weighings,
    count_weighings_nontrivial,
    weighing_terms,
)

OPS = ("+", "-", "*", "/")
OP_NAMES = {"+": "plus", "-": "minus", "*": "times", "/": "div"}
TYPE_NAMES = {1: "first", 2: "second", 3: "third"}

# within a level, second-type cells of + and - depend on the sibling cells
_CELL_ORDER = (
    ("+", 1), ("+", 3), ("+", 2),
    ("-", 1), ("-", 3), ("-", 2),
    ("*", 1), ("*", 2), ("*", 3),
    ("/", 1), ("/", 2), ("/", 3),
)


class OddSecondTypeCount(RuntimeError):
    """A second-type count came out odd; they pair up under negation."""


@dataclass(frozen=True)
class Term:
    """One summand of a cell: partition term, convolution term, etc."""

    kind: str
    key: object
    factors: tuple
    value: int


@dataclass(frozen=True)
class Breakdown:
    n: int
    op: str
    type_: int
    terms: tuple
    total: int


class CategoryTable:
    """Per-level, per-operator, per-type class counts with derived accessors."""

    def __init__(self, n_max: int):
        self.n_max = n_max
        self.cells = {
            n: {op: {1: 0, 2: 0, 3: 0} for op in OPS} for n in range(n_max + 1)
        }

    def cell(self, n: int, op: str, type_: int) -> int:
        return self.cells[n][op][type_]

    def cls(self, types: Iterable[int], ops: Iterable[str], n: int) -> int:
        """Count of classes of the given types ending with any of ``ops``.

        At n = 0 every class family counts 1 by convention (the empty
        expression), regardless of the operator or type selection.
        """
        if n == 0:
            return 1
        level = self.cells[n]
        return sum(level[op][t] for op in ops for t in types)

    def monic_second(self, ops: Iterable[str], n: int) -> int:
        """Monic second-type classes: half the second-type count."""
        if n == 0:
            return 1
        b = self.cls((2,), ops, n)
        if b % 2:
            raise OddSecondTypeCount(f"second-type count {b} at n={n} over {ops}")
        return b // 2

    def total(self, n: int) -> int:
        return self.cls((1, 2, 3), OPS, n)

    # -- export ------------------------------------------------------------

    def level_dict(self, n: int) -> dict:
        out: dict = {"n": n}
        for op in OPS:
            out[OP_NAMES[op]] = {
                TYPE_NAMES[t]: self.cells[n][op][t] for t in (1, 2, 3)
            }
        out["total"] = self.total(n)
        return out

    def to_json_levels(self) -> list:
        return [self.level_dict(n) for n in range(1, self.n_max + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "op", "type", "count"])
        for n in range(1, self.n_max + 1):
            for op in OPS:
                for t in (1, 2, 3):
                    writer.writerow([n, OP_NAMES[op], TYPE_NAMES[t], self.cells[n][op][t]])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for n in range(1, self.n_max + 1):
            width = max(8, len(str(self.total(n))) + 2)
            header = f"n={n}".ljust(8) + "".join(op.rjust(width) for op in OPS)
            lines.append(header + "total".rjust(width))
            for t in (1, 2, 3):
                row = TYPE_NAMES[t].ljust(8)
                row += "".join(str(self.cells[n][op][t]).rjust(width) for op in OPS)
                row += str(self.cls((t,), OPS, n)).rjust(width)
                lines.append(row)
            row = "total".ljust(8)
            row += "".join(str(self.cls((1, 2, 3), (op,), n)).rjust(width) for op in OPS)
            row += str(self.total(n)).rjust(width)
            lines.append(row)
            lines.append("")
        return "\n".join(lines)

    def totals_line(self) -> str:
        return " ".join(str(self.total(n)) for n in range(1, self.n_max + 1))


def class_counts(n_max: int) -> CategoryTable:
    """Fill the table for levels 0..n_max.

    Level 1 holds the bare variable (a first-type *-ending class); each
    higher level is computed cell by cell in dependency order.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    table = CategoryTable(n_max)
    table.cells[1]["*"][1] = 1
    for n in range(2, n_max + 1):
        for op, type_ in _CELL_ORDER:
            table.cells[n][op][type_] = sum(
                t.value for t in _cell_terms(table, n, op, type_)
            )
    return table


def total_nonisomorphic(n: int) -> int:
    return class_counts(n).total(n)


def worked_breakdown(table: CategoryTable, n: int, op: str, type_: int) -> Breakdown:
    """The summand decomposition behind one cell of a filled table."""
    terms = tuple(_cell_terms(table, n, op, type_))
    total = sum(t.value for t in terms)
    assert total == table.cell(n, op, type_), "breakdown diverged from table"
    return Breakdown(n, op, type_, terms, total)


def _partition_terms(counts, n: int) -> list:
    return [
        Term("partition", partition, factors, value)
        for partition, factors, value in weighing_terms(counts, n, nontrivial=True)
    ]


def _cell_terms(table: CategoryTable, n: int, op: str, type_: int) -> list:
    first_md = lambda k: table.cls((1,), ("*", "/"), k)
    third_md = lambda k: table.cls((3,), ("*", "/"), k)
    any_md = lambda k: table.cls((1, 2, 3), ("*", "/"), k)
    monic_md = lambda k: table.monic_second(("*", "/"), k)
    monic_pm = lambda k: table.monic_second(("+", "-"), k)
    first_p = lambda k: table.cls((1,), ("+",), k)
    third_pm = lambda k: table.cls((3,), ("+", "-"), k)
    first_pt = lambda k: table.cls((1,), ("+", "*"), k)

    if op == "+":
        if type_ == 1:
            return _partition_terms(first_md, n)
        if type_ == 3:
            terms = _partition_terms(third_md, n)
            for k in range(1, n // 2 + 1):
                a = count_weighings(monic_md, k)
                b = count_weighings(third_md, n - 2 * k)
                terms.append(Term("convolution", k, (a, b), a * b))
            return terms
        every = count_weighings_nontrivial(any_md, n)
        f = table.cell(n, "+", 1)
        c = table.cell(n, "+", 3)
        return [Term("difference", None, (every, f, c), every - f - c)]

    if op == "-":
        if type_ == 1:
            return []
        if type_ == 3:
            terms = []
            for k in range(1, n // 2 + 1):
                a = table.cls((3,), ("+", "*", "/"), n - 2 * k)
                b = table.cls((1,), ("+", "*", "/"), k)
                terms.append(Term("convolution", k, (a, b), a * b))
            return terms
        every = sum(
            table.cls((1, 2, 3), ("+", "*", "/"), k)
            * table.cls((1,), ("+", "*", "/"), n - k)
            for k in range(1, n)
        )
        c = table.cell(n, "-", 3)
        return [Term("difference", None, (every, c), every - c)]

    if op == "*":
        if type_ == 1:
            terms = _partition_terms(first_p, n)
            for k in range(n):
                w = count_weighings(first_p, k)
                terms.append(Term("omega", k, (w,), w))
            return terms
        if type_ == 2:
            w = count_weighings_nontrivial(monic_pm, n)
            terms = [Term("scaled", None, (2, w), 2 * w)]
            for k in range(1, n):
                a = 2 * count_weighings(monic_pm, k)
                b = first_pt(n - k)
                terms.append(Term("convolution", k, (a, b), a * b))
            return terms
        terms = _partition_terms(third_pm, n)
        for k in range(1, n):
            a = count_weighings(third_pm, k)
            b = first_pt(n - k) + table.monic_second(("+", "-", "*"), n - k)
            terms.append(Term("convolution", k, (a, b), a * b))
        return terms

    if op == "/":
        terms = []
        for k in range(1, n):
            if type_ == 1:
                a = first_pt(k)
                b = first_pt(n - k)
            elif type_ == 2:
                a = table.cls((2,), ("+", "-", "*"), n - k)
                b = 2 * first_pt(k) + table.monic_second(("+", "-", "*"), k)
            else:
                a = table.cls((3,), ("+", "-", "*"), n - k)
                b = (
                    2 * first_pt(k)
                    + table.cls((2,), ("+", "-", "*"), k)
                    + table.cls((3,), ("+", "-", "*"), k)
                )
            terms.append(Term("convolution", k, (a, b), a * b))
        return terms

    raise ValueError(f"unknown cell ({op!r}, {type_!r})")
