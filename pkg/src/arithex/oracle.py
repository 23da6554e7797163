"""Exhaustive desk-scale ground truth for the counting engine.

Generates every constructible expression on each subset of {x1..xn} by
closing the atoms under the four operations with disjoint variable sets,
deduplicating by canonical form.  On top of the generated universe it
computes isomorphism orbits, classifies representatives by ending operator
and type, and cross-checks everything against the recurrence engine and
the published reference values.

Orbits of a full variable set are computed with a union-find over the
adjacent-transposition generators: the generated set is closed under
relabeling, so the components are exactly the isomorphism classes, and the
least serialization inside a component equals the per-form orbit key.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from . import canon, counting, reference
from .canon import CanonForm
from .exprtree import Node, Var, pretty

DEFAULT_LIMIT = 7

_OP_ORDER = "+-*/"

# operand ending-operator sets that let a combination inherit the operator
_END_RULES = {"+": ("+", "*", "/"), "*": ("-", "+", "*"), "/": ("+", "-", "*")}


class LimitExceeded(ValueError):
    """Requested size beyond the exhaustive-generation guard."""


class ClassificationEmpty(RuntimeError):
    """No ending-operator rule fired for a generated expression."""


class ClassificationAmbiguous(RuntimeError):
    """More than one ending-operator rule fired for a generated expression."""


class AEntry:
    """A generated expression: canonical form plus every way it arose."""

    __slots__ = ("form", "decomps", "endop", "typeclass", "_witness")

    def __init__(self, form: CanonForm):
        self.form = form
        self.decomps: list = []  # (op, left form, right form)
        self.endop: Optional[str] = None
        self.typeclass: Optional[int] = None
        self._witness = None


@dataclass
class AESet:
    subset: tuple
    entries: dict  # CanonForm -> AEntry


class Family:
    """Generated sets for every nonempty subset of {1..n}."""

    def __init__(self, n: int, ops: tuple, record_decomps: bool):
        self.n = n
        self.ops = ops
        self.record_decomps = record_decomps
        self.sets: dict = {}  # frozenset -> AESet

    def full_set(self, k: Optional[int] = None) -> AESet:
        k = self.n if k is None else k
        return self.sets[frozenset(range(1, k + 1))]

    def entry_of(self, form: CanonForm) -> AEntry:
        return self.sets[form.varset].entries[form]

    def witness(self, form: CanonForm):
        """Expression tree of the first recorded construction."""
        entry = self.entry_of(form)
        if entry._witness is None:
            if not entry.decomps:
                entry._witness = Var(next(iter(form.varset)))
            else:
                op, left, right = entry.decomps[0]
                entry._witness = Node(op, self.witness(left), self.witness(right))
        return entry._witness


def generate(
    n: int,
    ops: str = "+-*/",
    limit: int = DEFAULT_LIMIT,
    record_decomps: bool = True,
) -> Family:
    """Close the atoms on every subset of {1..n} under the allowed ops.

    Subsets are processed by size then lexicographically; each unordered
    bipartition is visited once (the side containing the least element
    first), with both operand orders for - and /.
    """
    if not 1 <= n <= limit:
        raise LimitExceeded(f"n={n} outside 1..{limit}")
    ops_t = tuple(op for op in _OP_ORDER if op in set(ops))
    if not ops_t or set(ops) - set(_OP_ORDER):
        raise ValueError(f"ops must be a nonempty subset of '+-*/', got {ops!r}")
    family = Family(n, ops_t, record_decomps)
    combine = canon.combine
    for size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), size):
            fs = frozenset(subset)
            entries: dict = {}
            if size == 1:
                a = canon.atom(subset[0])
                entries[a] = AEntry(a)
                family.sets[fs] = AESet(subset, entries)
                continue
            first, rest = subset[0], subset[1:]
            for mask in range(2 ** len(rest) - 1):
                left = frozenset(
                    (first, *(v for i, v in enumerate(rest) if mask >> i & 1))
                )
                right = fs - left
                left_entries = family.sets[left].entries
                right_entries = family.sets[right].entries
                for e1 in left_entries:
                    for e2 in right_entries:
                        for op in ops_t:
                            if op in "+*":
                                ordered = ((e1, e2),)
                            else:
                                ordered = ((e1, e2), (e2, e1))
                            for fa, fb in ordered:
                                res = combine(op, fa, fb, varset=fs)
                                entry = entries.get(res)
                                if entry is None:
                                    entry = entries[res] = AEntry(res)
                                if record_decomps:
                                    entry.decomps.append((op, fa, fb))
            family.sets[fs] = AESet(subset, entries)
    return family


def identity_count(family: Family, k: Optional[int] = None) -> int:
    return len(family.full_set(k).entries)


# -- orbits -------------------------------------------------------------------


@dataclass
class OrbitClass:
    key: str          # least serialization over the class = the orbit key
    rep: CanonForm    # form realizing the key
    size: int         # identity-distinct members


class Orbits:
    def __init__(self, parent: dict, classes: list, entries: dict):
        self._parent = parent
        self._entries = entries
        self.classes = classes

    def __len__(self) -> int:
        return len(self.classes)

    def find(self, form: CanonForm) -> CanonForm:
        # canonicalize to the stored instance so identity checks are valid
        entry = self._entries.get(form)
        x = entry.form if entry is not None else form
        parent = self._parent
        while parent.get(x, x) is not x:
            x = parent[x]
        return x

    def same_orbit(self, f: CanonForm, g: CanonForm) -> bool:
        return self.find(f) is self.find(g)


def compute_orbits(aeset: AESet, n: int) -> Orbits:
    """Isomorphism classes of a generated set on the contiguous {1..n}."""
    entries = aeset.entries
    parent: dict = {}

    def find(x):
        root = x
        while parent.get(root, root) is not root:
            root = parent[root]
        while parent.get(x, x) is not root:
            parent[x], x = root, parent[x]
        return root

    generators = [{i: i + 1, i + 1: i} for i in range(1, n)]
    apply_perm = canon.apply_perm
    for form, entry in entries.items():
        for gen in generators:
            image_entry = entries.get(apply_perm(gen, form))
            if image_entry is None:
                raise RuntimeError(
                    f"generated set not closed under relabeling of {form!r}"
                )
            ra, rb = find(entry.form), find(image_entry.form)
            if ra is not rb:
                parent[ra] = rb
    best: dict = {}
    sizes: dict = {}
    for form in entries:
        root = find(form)
        serial = canon.form_str(form)
        sizes[root] = sizes.get(root, 0) + 1
        cur = best.get(root)
        if cur is None or serial < cur[0]:
            best[root] = (serial, form)
    classes = [
        OrbitClass(key=serial, rep=form, size=sizes[root])
        for root, (serial, form) in best.items()
    ]
    classes.sort(key=lambda c: c.key)
    return Orbits(parent, classes, entries)


# -- classification -----------------------------------------------------------


def is_first_type(form: CanonForm, family: Family) -> bool:
    """First type: the negation is not a constructible expression."""
    return canon.negate(form) not in family.sets[form.varset].entries


def classify_endops(family: Family) -> None:
    """Assign the ending operator to every entry of every subset, bottom-up.

    Exactly one rule must fire per entry; anything else is a hard failure
    of the classification laws and raises.
    """
    if not family.record_decomps:
        raise ValueError("classification needs decomposition records")
    # family.sets insertion order is by subset size, so operands of every
    # decomposition are already classified when their parent is reached
    for aeset in family.sets.values():
        for form, entry in aeset.entries.items():
            if entry.endop is None:
                entry.endop = _endop_of(form, entry, family)


def _endop_of(form: CanonForm, entry: AEntry, family: Family) -> str:
    if len(form.varset) == 1:
        return "*"
    fired: set = set()
    for op, fa, fb in entry.decomps:
        if op in fired:
            continue
        end_a = family.entry_of(fa).endop
        end_b = family.entry_of(fb).endop
        if op == "-":
            if (
                end_a in ("+", "*", "/")
                and end_b in ("+", "*", "/")
                and is_first_type(fb, family)
            ):
                fired.add("-")
        else:
            allowed = _END_RULES[op]
            if end_a in allowed and end_b in allowed:
                fired.add(op)
    if not fired:
        raise ClassificationEmpty(f"no ending rule fired for {form!r}")
    if len(fired) > 1:
        raise ClassificationAmbiguous(f"rules {sorted(fired)} all fired for {form!r}")
    return fired.pop()


def classify_types(aeset: AESet, orbits: Orbits) -> None:
    """Type every entry of a full set: 1 if the negation is not present,
    3 if it lands in the same orbit, else 2."""
    entries = aeset.entries
    for form, entry in entries.items():
        neg = canon.negate(form)
        if neg not in entries:
            entry.typeclass = 1
        elif orbits.same_orbit(form, neg):
            entry.typeclass = 3
        else:
            entry.typeclass = 2


def classify_type(form: CanonForm, entries: dict) -> int:
    """Standalone type test against an explicit universe (isomorphism search)."""
    neg = canon.negate(form)
    if neg not in entries:
        return 1
    f, _ = canon.relabel_contiguous(form)
    g, _ = canon.relabel_contiguous(neg)
    return 3 if canon.is_isomorphic(f, g) is not None else 2


def category_table(aeset: AESet, orbits: Orbits) -> dict:
    """The twelve per-operator, per-type class counts of a classified level."""
    cells = {op: {1: 0, 2: 0, 3: 0} for op in _OP_ORDER}
    for cls in orbits.classes:
        entry = aeset.entries[cls.rep]
        cells[entry.endop][entry.typeclass] += 1
    return cells


def dump_lines(family: Family, aeset: AESet, orbits: Orbits, n: int) -> Iterator[dict]:
    """One JSON-ready record per class of the given level."""
    for cls in orbits.classes:
        entry = aeset.entries[cls.rep]
        yield {
            "n": n,
            "class": cls.key,
            "witness": pretty(family.witness(cls.rep)),
            "endop": entry.endop,
            "type": entry.typeclass,
            "orbit_size": cls.size,
        }


# -- verification -------------------------------------------------------------


@dataclass
class Check:
    name: str
    n: int
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        detail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] n={self.n} {self.name}{detail}"


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, n: int, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, n, bool(ok), detail))

    def lines(self) -> list:
        return [c.line() for c in self.checks]


def verify(
    n_max: int,
    ops: str = "+-*/",
    seed: int = 0,
    samples: int = 100,
    perms_per_class: int = 20,
) -> VerifyReport:
    """Cross-check the generated universe against the engine and the
    published values; every mismatch becomes a failed check in the report."""
    report = VerifyReport()
    rng = random.Random(seed)
    family = generate(n_max, ops=ops)
    try:
        classify_endops(family)
        report.add("ending-rule-partition", n_max, True)
    except (ClassificationEmpty, ClassificationAmbiguous) as exc:
        report.add("ending-rule-partition", n_max, False, str(exc))
        return report
    all_ops = set(ops) == set(_OP_ORDER)
    engine = counting.class_counts(n_max) if all_ops else None
    sp_ops = set(ops) == {"+", "*"}

    for k in range(1, n_max + 1):
        aeset = family.full_set(k)
        orbits = compute_orbits(aeset, k)
        classify_types(aeset, orbits)
        cells = category_table(aeset, orbits)

        if all_ops:
            expected = reference.IDENTITY_COUNTS.get(k)
            got = len(aeset.entries)
            report.add("identity-count", k, got == expected, f"{got} vs {expected}")
            report.add(
                "orbit-count-vs-engine",
                k,
                len(orbits) == engine.total(k),
                f"{len(orbits)} vs {engine.total(k)}",
            )
            ok = all(
                cells[op][t] == engine.cell(k, op, t)
                for op in _OP_ORDER
                for t in (1, 2, 3)
            )
            report.add("category-table-vs-engine", k, ok)
        elif sp_ops and k <= len(reference.SERIES_PARALLEL_ORBIT_COUNTS):
            expected = reference.SERIES_PARALLEL_ORBIT_COUNTS[k - 1]
            report.add(
                "orbit-count-series-parallel",
                k,
                len(orbits) == expected,
                f"{len(orbits)} vs {expected}",
            )

        report.add(
            "orbit-sizes-sum-to-identity-count",
            k,
            sum(c.size for c in orbits.classes) == len(aeset.entries),
        )
        report.add("type2-negation-pairing", k, _check_type2_pairing(aeset, orbits))
        report.add(
            "type2-pool-evenness",
            k,
            all(
                sum(cells[op][2] for op in pool) % 2 == 0
                for pool in (("*",), ("/",), ("+", "-"))
            ),
        )
        report.add(
            "classification-invariance",
            k,
            _check_invariance(aeset, orbits, k, rng, perms_per_class),
        )

        if all_ops and k == 3:
            report.add("three-var-identity-listing", k, _check_three_var_listing(aeset))
            report.add("three-var-class-listing", k, _check_class_listing(
                orbits, reference.THREE_VAR_CLASSES))
        if sp_ops and k == 4:
            report.add("series-parallel-four-var-classes", k, _check_class_listing(
                orbits, reference.SERIES_PARALLEL_FOUR_VAR_CLASSES))

    report.add(
        "class-operation-compatibility",
        n_max,
        _check_class_operations(family, rng, samples),
    )
    return report


def _check_type2_pairing(aeset: AESet, orbits: Orbits) -> bool:
    """Negation must match type-2 classes into disjoint pairs."""
    type2_roots = set()
    pairing = {}
    for cls in orbits.classes:
        if aeset.entries[cls.rep].typeclass != 2:
            continue
        root = orbits.find(cls.rep)
        neg = canon.negate(cls.rep)
        if neg not in aeset.entries:
            return False
        neg_root = orbits.find(neg)
        if neg_root is root:
            return False
        type2_roots.add(root)
        pairing[root] = neg_root
    for root, neg_root in pairing.items():
        if neg_root not in type2_roots or pairing.get(neg_root) is not root:
            return False
    return len(type2_roots) % 2 == 0


def _check_invariance(
    aeset: AESet, orbits: Orbits, k: int, rng: random.Random, per_class: int
) -> bool:
    """Ending operator and type must agree across each class."""
    base = list(range(1, k + 1))
    for cls in orbits.classes:
        rep_entry = aeset.entries[cls.rep]
        for _ in range(per_class):
            image = base[:]
            rng.shuffle(image)
            moved = canon.apply_perm(dict(zip(base, image)), cls.rep)
            entry = aeset.entries.get(moved)
            if (
                entry is None
                or entry.endop != rep_entry.endop
                or entry.typeclass != rep_entry.typeclass
            ):
                return False
    return True


def _check_three_var_listing(aeset: AESet) -> bool:
    from .exprtree import parse, to_canon

    expected = {to_canon(parse(t)) for t in reference.THREE_VAR_EXPRESSIONS}
    return len(expected) == 68 and expected == set(aeset.entries)


def _check_class_listing(orbits: Orbits, listed: list) -> bool:
    from .exprtree import parse, to_canon

    expected = {canon.orbit_key(to_canon(parse(t))) for t in listed}
    return expected == {c.key for c in orbits.classes}


def _check_class_operations(family: Family, rng: random.Random, samples: int) -> bool:
    """Combining stays well defined on classes: isomorphic operands with
    disjoint variables give isomorphic results."""
    if family.n < 2:
        return True
    subsets = [s for s in family.sets if 0 < len(s) < family.n]
    if not subsets:
        return True
    for _ in range(samples):
        left = rng.choice(subsets)
        right_pool = [s for s in subsets if not (s & left)]
        if not right_pool:
            continue
        right = rng.choice(right_pool)
        f = _random_entry(family.sets[left].entries, rng)
        g = _random_entry(family.sets[right].entries, rng)
        f2 = canon.apply_perm(_random_perm_of(left, rng), f)
        g2 = canon.apply_perm(_random_perm_of(right, rng), g)
        op = rng.choice(family.ops)
        a, _ = canon.relabel_contiguous(canon.combine(op, f, g))
        b, _ = canon.relabel_contiguous(canon.combine(op, f2, g2))
        if canon.is_isomorphic(a, b) is None:
            return False
    return True


def _random_entry(entries: dict, rng: random.Random) -> CanonForm:
    forms = list(entries)
    return forms[rng.randrange(len(forms))]


def _random_perm_of(varset: frozenset, rng: random.Random) -> dict:
    src = sorted(varset)
    dst = src[:]
    rng.shuffle(dst)
    return dict(zip(src, dst))
