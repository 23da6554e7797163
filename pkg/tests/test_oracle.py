import pytest

from arithex import canon, reference
from arithex.exprtree import parse, pretty, to_canon
from arithex.oracle import (
    LimitExceeded,
    category_table,
    classify_endops,
    classify_type,
    classify_types,
    compute_orbits,
    dump_lines,
    generate,
    identity_count,
    is_first_type,
    verify,
)


@pytest.fixture(scope="module")
def family4():
    fam = generate(4)
    classify_endops(fam)
    return fam


@pytest.fixture(scope="module")
def family5():
    fam = generate(5)
    classify_endops(fam)
    return fam


def form(text):
    return to_canon(parse(text))


def endop_of(family, text):
    f = form(text)
    return family.entry_of(f).endop


def test_identity_counts_small(family4):
    assert identity_count(family4, 1) == 1
    assert identity_count(family4, 2) == 6
    assert identity_count(family4, 3) == 68
    assert identity_count(family4, 4) == 1170


def test_two_variable_universe(family4):
    entries = family4.full_set(2).entries
    expected = {form(t) for t in ("x1+x2", "x1-x2", "x2-x1", "x1*x2", "x1/x2", "x2/x1")}
    assert set(entries) == expected


def test_three_variable_listing(family4):
    entries = family4.full_set(3).entries
    expected = {form(t) for t in reference.THREE_VAR_EXPRESSIONS}
    assert len(expected) == 68
    assert set(entries) == expected


def test_orbits_small(family4):
    assert len(compute_orbits(family4.full_set(1), 1)) == 1
    assert len(compute_orbits(family4.full_set(2), 2)) == 4
    orbits3 = compute_orbits(family4.full_set(3), 3)
    assert len(orbits3) == 18
    assert len(compute_orbits(family4.full_set(4), 4)) == 93
    expected_keys = {canon.orbit_key(form(t)) for t in reference.THREE_VAR_CLASSES}
    assert {c.key for c in orbits3.classes} == expected_keys


def test_orbit_sizes_sum(family4):
    for k in (2, 3, 4):
        orbits = compute_orbits(family4.full_set(k), k)
        assert sum(c.size for c in orbits.classes) == identity_count(family4, k)


def test_series_parallel_fragment():
    fam = generate(5, ops="+*")
    counts = [len(compute_orbits(fam.full_set(k), k)) for k in range(1, 6)]
    assert counts == [1, 2, 4, 10, 24]
    orbits4 = compute_orbits(fam.full_set(4), 4)
    expected = {
        canon.orbit_key(form(t)) for t in reference.SERIES_PARALLEL_FOUR_VAR_CLASSES
    }
    assert {c.key for c in orbits4.classes} == expected


def test_generate_guard():
    with pytest.raises(LimitExceeded):
        generate(8)
    with pytest.raises(ValueError):
        generate(3, ops="")


def test_closure_under_allowed_ops(family4):
    # recombining entries on disjoint subsets lands in the generated set
    left = family4.sets[frozenset({1, 3})].entries
    right = family4.sets[frozenset({2, 4})].entries
    target = family4.full_set(4).entries
    for f in left:
        for g in right:
            for op in "+-*/":
                assert canon.combine(op, f, g) in target


def test_endop_base_cases(family4):
    assert endop_of(family4, "x1*x2") == "*"
    assert endop_of(family4, "x1+x2") == "+"
    assert endop_of(family4, "x1-x2") == "-"
    assert endop_of(family4, "x1/x2") == "/"
    assert family4.entry_of(canon.atom(3)).endop == "*"


def test_endop_examples_four_vars(family4):
    assert endop_of(family4, "x1*(x2/x3-x4)") == "*"
    assert endop_of(family4, "(x2/x3)*(x1-x4)") == "/"


def test_endop_examples_five_vars(family5):
    assert endop_of(family5, "(x1-x2)/x3-x4-x5") == "-"
    assert endop_of(family5, "x4+x5-(x1-x2)/x3") == "+"


def test_every_entry_has_unique_endop(family4):
    # classify_endops would have raised otherwise; spot check decomp scans
    for aeset in family4.sets.values():
        for entry in aeset.entries.values():
            assert entry.endop in "+-*/"


def test_first_type_via_membership(family4):
    assert is_first_type(form("x1+x2*x3"), family4)
    assert not is_first_type(form("x1-x2*x3"), family4)


def test_classify_type_examples(family4):
    entries3 = family4.full_set(3).entries
    assert classify_type(form("x1+x2*x3"), entries3) == 1
    assert classify_type(form("x1-x2*x3"), entries3) == 2
    assert classify_type(form("x1*(x2-x3)"), entries3) == 3
    entries2 = family4.full_set(2).entries
    assert classify_type(form("x1-x2"), entries2) == 3


def test_classify_type_self_negative_five_vars(family5):
    entries5 = family5.full_set(5).entries
    assert classify_type(form("x1+x2*(x3-x4)-x5"), entries5) == 3


def test_category_table_oracle_small(family4):
    for k in (1, 2, 3, 4):
        aeset = family4.full_set(k)
        orbits = compute_orbits(aeset, k)
        classify_types(aeset, orbits)
        cells = category_table(aeset, orbits)
        for op in "+-*/":
            for t in (1, 2, 3):
                assert cells[op][t] == reference.CATEGORY_TABLES[k][op][t], (k, op, t)


def test_types_agree_between_pipeline_and_search(family4):
    aeset = family4.full_set(3)
    orbits = compute_orbits(aeset, 3)
    classify_types(aeset, orbits)
    for form_, entry in aeset.entries.items():
        assert entry.typeclass == classify_type(form_, aeset.entries)


def test_sum_decomposition_flattening(family4):
    # +-ending classes split into a decomposition-path-independent multiset
    # of summand classes, each ending * or /
    def summand_keys(f):
        entry = family4.entry_of(f)
        options = set()
        for op, a, b in entry.decomps:
            if op != "+":
                continue
            parts = []
            for side in (a, b):
                side_end = family4.entry_of(side).endop
                if side_end == "+":
                    parts.extend(summand_keys(side))
                else:
                    assert side_end in "*/", f"{side!r} inside a sum ends {side_end}"
                    rel, _ = canon.relabel_contiguous(side)
                    parts.append(canon.orbit_key(rel))
            options.add(tuple(sorted(parts)))
        assert options, f"{f!r} ends + but has no + decomposition"
        assert len(options) == 1, f"ambiguous sum decomposition for {f!r}"
        return next(iter(options))

    for k in (3, 4):
        aeset = family4.full_set(k)
        for form_, entry in aeset.entries.items():
            if entry.endop == "+":
                assert len(summand_keys(form_)) >= 2


def test_product_type_characterization(family4):
    # Flatten a *-ending expression into its maximal factor multiset, each
    # factor sign-normalized to its monic version.  The type then reads off
    # the factor types: all first <=> first (the residual sign is forced to
    # +1 in that case), some third <=> third, else second.  Note the type
    # cannot depend on the residual sign alone: f and -f always share a type.
    def factors(f):
        entry = family4.entry_of(f)
        for op, a, b in entry.decomps:
            if op == "*":
                out = []
                for side in (a, b):
                    if family4.entry_of(side).endop == "*" and len(side.varset) > 1:
                        out.extend(factors(side))
                    else:
                        out.append(side)
                return out
        return [f]

    aeset = family4.full_set(4)
    orbits = compute_orbits(aeset, 4)
    classify_types(aeset, orbits)
    for form_, entry in aeset.entries.items():
        if entry.endop != "*" or len(form_.varset) == 1:
            continue
        fs = factors(form_)
        assert len(fs) >= 2
        sign = 1 if canon.is_monic_form(form_) else -1
        monicized_types = []
        for g in fs:
            g_m = g if canon.is_monic_form(g) else canon.negate(g)
            sub_entries = family4.sets[g_m.varset].entries
            monicized_types.append(classify_type(g_m, sub_entries))
        if entry.typeclass == 1:
            assert sign == 1 and all(t == 1 for t in monicized_types), form_
        assert (entry.typeclass == 3) == any(t == 3 for t in monicized_types), form_
        assert (entry.typeclass == 1) == (sign == 1 and all(t == 1 for t in monicized_types)), form_


def test_quotient_type_characterization(family4):
    # /-ending: third type iff monic and numerator or denominator class is
    # third type (over +,-,* pools)
    aeset = family4.full_set(4)
    orbits = compute_orbits(aeset, 4)
    classify_types(aeset, orbits)
    checked = 0
    for form_, entry in aeset.entries.items():
        if entry.endop != "/":
            continue
        canonical_splits = [
            (a, b)
            for op, a, b in entry.decomps
            if op == "/"
            and family4.entry_of(a).endop in "+-*"
            and family4.entry_of(b).endop in "+-*"
        ]
        assert canonical_splits, form_
        seen = set()
        for a, b in canonical_splits:
            sign = 1
            if not canon.is_monic_form(a):
                a, sign = canon.negate(a), -sign
            if not canon.is_monic_form(b):
                b, sign = canon.negate(b), -sign
            seen.add((sign, a, b))
        assert len(seen) == 1, form_
        sign, g, h = next(iter(seen))
        tg = classify_type(g, family4.sets[g.varset].entries)
        th = classify_type(h, family4.sets[h.varset].entries)
        assert (entry.typeclass == 3) == (tg == 3 or th == 3), form_
        assert (entry.typeclass == 1) == (sign == 1 and tg == 1 and th == 1), form_
        checked += 1
    assert checked > 0


def test_dump_lines(family4):
    aeset = family4.full_set(3)
    orbits = compute_orbits(aeset, 3)
    classify_types(aeset, orbits)
    lines = list(dump_lines(family4, aeset, orbits, 3))
    assert len(lines) == 18
    for rec in lines:
        assert rec["n"] == 3
        assert rec["endop"] in "+-*/"
        assert rec["type"] in (1, 2, 3)
        assert to_canon(parse(rec["witness"])) in aeset.entries
    assert sum(rec["orbit_size"] for rec in lines) == 68


def test_witness_reconstruction(family4):
    for k in (2, 3):
        aeset = family4.full_set(k)
        for form_ in aeset.entries:
            tree = family4.witness(form_)
            assert to_canon(tree) == form_
            assert to_canon(parse(pretty(tree))) == form_


def test_verify_small_all_ops():
    report = verify(4, seed=11)
    assert report.ok, "\n".join(c.line() for c in report.checks if not c.ok)
    names = {c.name for c in report.checks}
    assert "identity-count" in names
    assert "category-table-vs-engine" in names
    assert "three-var-identity-listing" in names


def test_verify_series_parallel():
    report = verify(5, ops="+*", seed=3)
    assert report.ok, "\n".join(c.line() for c in report.checks if not c.ok)
    sp = [c for c in report.checks if c.name == "orbit-count-series-parallel"]
    assert [c.n for c in sp] == [1, 2, 3, 4, 5]
