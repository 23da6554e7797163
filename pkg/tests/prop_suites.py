"""Seeded randomized property suites shared by the acceptance tests.

Each suite runs a fixed number of cases from an explicit random seed, so a
run is reproducible byte for byte.  Suites return the number of executed
checks; any violation raises AssertionError immediately.
"""

import random
from fractions import Fraction

from arithex import canon, oracle
from arithex.canon import apply_perm, combine, eval_form, is_isomorphic, negate
from arithex.exprtree import Node, Var, eval_tree, to_canon, tree_variables
from arithex.mpoly import MultiPoly
from arithex.projrat import UNDEFINED, is_finite


def random_tree(rng, indices):
    if len(indices) == 1:
        return Var(indices[0])
    cut = rng.randint(1, len(indices) - 1)
    return Node(
        rng.choice("+-*/"),
        random_tree(rng, indices[:cut]),
        random_tree(rng, indices[cut:]),
    )


def random_form(rng, variables):
    order = list(variables)
    rng.shuffle(order)
    return to_canon(random_tree(rng, order))


def random_perm(rng, variables):
    src = sorted(variables)
    dst = src[:]
    rng.shuffle(dst)
    return dict(zip(src, dst))


def random_poly(rng, max_vars=6, max_terms=6):
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        size = rng.randint(0, max_vars)
        mono = tuple(sorted(rng.sample(range(1, max_vars + 1), size)))
        coeffs[mono] = rng.randint(-9, 9)
    return MultiPoly.from_dict(coeffs)


def random_point(rng, variables):
    return {
        v: Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for v in variables
    }


def suite_group_action_laws(seed, cases):
    rng = random.Random(seed)
    for _ in range(cases):
        n = rng.randint(2, 5)
        f = random_form(rng, range(1, n + 1))
        sigma = random_perm(rng, range(1, n + 1))
        tau = random_perm(rng, range(1, n + 1))
        assert apply_perm({}, f) == f
        assert apply_perm(sigma, apply_perm(tau, f)) == apply_perm(
            canon.compose(sigma, tau), f
        )
    return cases


def suite_negation(seed, cases):
    rng = random.Random(seed)
    for _ in range(cases):
        n = rng.randint(1, 5)
        f = random_form(rng, range(1, n + 1))
        sigma = random_perm(rng, range(1, n + 1))
        assert negate(negate(f)) == f
        assert negate(apply_perm(sigma, f)) == apply_perm(sigma, negate(f))
        assert canon.is_monic_form(f) != canon.is_monic_form(negate(f))
    return cases


def suite_combine_symmetries(seed, cases):
    rng = random.Random(seed)
    for _ in range(cases):
        na = rng.randint(1, 3)
        nb = rng.randint(1, 3)
        f = random_form(rng, range(1, na + 1))
        g = random_form(rng, range(na + 1, na + nb + 1))
        assert combine("+", f, g) == combine("+", g, f)
        assert combine("*", f, g) == combine("*", g, f)
        assert combine("-", f, g) == negate(combine("-", g, f))
    return cases


def suite_decompose_roundtrip(seed, cases):
    rng = random.Random(seed)
    for _ in range(cases):
        p = random_poly(rng)
        i = rng.randint(1, 6)
        head, tail = p.decompose(i)
        assert i not in head.variables() and i not in tail.variables()
        rebuilt = head.mul_disjoint(MultiPoly.variable(i)) + tail if head else tail
        assert rebuilt == p
    return cases


def suite_derivative_criterion(seed, cases):
    rng = random.Random(seed)
    for _ in range(cases):
        p = random_poly(rng)
        i = rng.randint(1, 6)
        head, _ = p.decompose(i)
        assert (i in p.variables()) == bool(head)
        point = random_point(rng, p.variables() | {i})
        shifted = {**point, i: point[i] + 1}
        assert p.evaluate(shifted) - p.evaluate(point) == head.evaluate(point)
    return cases


def suite_eval_agreement(seed, cases):
    rng = random.Random(seed)
    done = 0
    for _ in range(cases):
        n = rng.randint(1, 5)
        order = list(range(1, n + 1))
        rng.shuffle(order)
        tree = random_tree(rng, order)
        form = to_canon(tree)
        point = random_point(rng, tree_variables(tree))
        tree_value = eval_tree(tree, point)
        if tree_value is UNDEFINED or form.den.evaluate(point) == 0:
            continue
        assert is_finite(tree_value)
        assert eval_form(form, point) == tree_value
        done += 1
    assert done > cases // 2, "too many skipped evaluation points"
    return done


def suite_class_operation_compatibility(seed, cases):
    rng = random.Random(seed)
    for _ in range(cases):
        na = rng.randint(1, 3)
        nb = rng.randint(1, 3)
        f = random_form(rng, range(1, na + 1))
        g = random_form(rng, range(na + 1, na + nb + 1))
        f2 = apply_perm(random_perm(rng, range(1, na + 1)), f)
        g2 = apply_perm(random_perm(rng, range(na + 1, na + nb + 1)), g)
        op = rng.choice("+-*/")
        a, _ = canon.relabel_contiguous(combine(op, f, g))
        b, _ = canon.relabel_contiguous(combine(op, f2, g2))
        assert is_isomorphic(a, b) is not None
    return cases


def suite_type2_pairing(seed, cases, family=None):
    rng = random.Random(seed)
    if family is None:
        family = oracle.generate(4)
    pool = []
    for k in (2, 3, 4):
        aeset = family.full_set(k)
        orbits = oracle.compute_orbits(aeset, k)
        oracle.classify_types(aeset, orbits)
        pool.extend(aeset.entries.items())
    done = 0
    for _ in range(cases):
        form, entry = pool[rng.randrange(len(pool))]
        neg = negate(form)
        entries = family.sets[form.varset].entries
        if entry.typeclass == 1:
            assert neg not in entries
        else:
            partner = entries[neg]
            assert partner.typeclass == entry.typeclass
            assert neg != form
        done += 1
    return done


ALL_SUITES = (
    ("group-action-laws", suite_group_action_laws),
    ("negation-involution", suite_negation),
    ("combine-symmetries", suite_combine_symmetries),
    ("decompose-roundtrip", suite_decompose_roundtrip),
    ("derivative-criterion", suite_derivative_criterion),
    ("tree-vs-form-evaluation", suite_eval_agreement),
    ("class-operation-compatibility", suite_class_operation_compatibility),
    ("type2-negation-pairing", suite_type2_pairing),
)
