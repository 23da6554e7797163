"""Known reference values used by the verification suite and the tests.

The small cases are independently checkable by exhaustive generation in
this package; the longer sequences match published ones (OEIS A140606 for
identity-distinct expression counts, A000084 for the two-terminal
series-parallel networks that the {+,*} fragment reproduces, A393077 for
the counts up to variable permutation).
"""

from __future__ import annotations

# Number of identity-distinct expressions on {x1..xn} (OEIS A140606).
IDENTITY_COUNTS = {
    1: 1,
    2: 6,
    3: 68,
    4: 1170,
    5: 27142,
    6: 793002,
    7: 27914126,
    8: 1150212810,
    9: 54326011414,
    10: 2894532443154,
    11: 171800282010062,
    12: 11243812043430330,
    13: 804596872359480358,
    14: 62506696942427106498,
    15: 5239819196582605428254,
    16: 471480120474696200252970,
    17: 45328694990444455796547766,
}

# Number of classes up to variable permutation (OEIS A393077).
ORBIT_TOTALS = {
    1: 1,
    2: 4,
    3: 18,
    4: 93,
    5: 500,
    6: 2844,
    7: 16621,
    8: 99674,
    9: 608448,
    10: 3770744,
    11: 23653630,
    12: 149925328,
    13: 958737739,
    14: 6178529510,
    15: 40089044100,
    16: 261693178976,
    17: 1717542967251,
}

# Orbit counts for the {+,*} fragment (OEIS A000084).
SERIES_PARALLEL_ORBIT_COUNTS = [1, 2, 4, 10, 24, 66, 180, 522, 1532]

# Per-level class tables: {n: {op: {type: count}}} with types 1/2/3.
CATEGORY_TABLES = {
    1: {
        "+": {1: 0, 2: 0, 3: 0},
        "-": {1: 0, 2: 0, 3: 0},
        "*": {1: 1, 2: 0, 3: 0},
        "/": {1: 0, 2: 0, 3: 0},
    },
    2: {
        "+": {1: 1, 2: 0, 3: 0},
        "-": {1: 0, 2: 0, 3: 1},
        "*": {1: 1, 2: 0, 3: 0},
        "/": {1: 1, 2: 0, 3: 0},
    },
    3: {
        "+": {1: 3, 2: 0, 3: 0},
        "-": {1: 0, 2: 6, 3: 0},
        "*": {1: 2, 2: 0, 3: 1},
        "/": {1: 4, 2: 0, 3: 2},
    },
    4: {
        "+": {1: 12, 2: 3, 3: 0},
        "-": {1: 0, 2: 27, 3: 3},
        "*": {1: 6, 2: 6, 3: 3},
        "/": {1: 14, 2: 12, 3: 7},
    },
    5: {
        "+": {1: 44, 2: 37, 3: 0},
        "-": {1: 0, 2: 155, 3: 3},
        "*": {1: 21, 2: 42, 3: 12},
        "/": {1: 56, 2: 96, 3: 34},
    },
    6: {
        "+": {1: 186, 2: 295, 3: 6},
        "-": {1: 0, 2: 837, 3: 19},
        "*": {1: 84, 2: 294, 3: 51},
        "/": {1: 227, 2: 690, 3: 155},
    },
}

# All 68 identity-distinct expressions on three variables.
THREE_VAR_EXPRESSIONS = [
    "x1+x2+x3", "x1+x2-x3", "x1+x3-x2", "x2+x3-x1", "x1-x2-x3",
    "x3-x1-x2", "x2-x3-x1", "x1*x2*x3", "x1*x2+x3", "x1*x3+x2",
    "x2*x3+x1", "x1*x2-x3", "x1*x3-x2", "x2*x3-x1", "x3-x1*x2",
    "x2-x1*x3", "x1-x2*x3", "x1*(x2+x3)", "x2*(x1+x3)", "x3*(x1+x2)",
    "x1*(x2-x3)", "x1*(x3-x2)", "x2*(x1-x3)", "x2*(x3-x1)", "x3*(x1-x2)",
    "x3*(x2-x1)", "x1/x2+x3", "x2/x1+x3", "x1/x3+x2", "x3/x1+x2",
    "x2/x3+x1", "x3/x2+x1", "x1/x2-x3", "x2/x1-x3", "x1/x3-x2",
    "x3/x1-x2", "x2/x3-x1", "x3/x2-x1", "x3-x1/x2", "x3-x2/x1",
    "x2-x1/x3", "x2-x3/x1", "x1-x2/x3", "x1-x3/x2", "x1/(x2+x3)",
    "x2/(x1+x3)", "x3/(x1+x2)", "x1/(x2-x3)", "x1/(x3-x2)", "x2/(x1-x3)",
    "x2/(x3-x1)", "x3/(x1-x2)", "x3/(x2-x1)", "(x2+x3)/x1", "(x1+x3)/x2",
    "(x1+x2)/x3", "(x2-x3)/x1", "(x3-x2)/x1", "(x1-x3)/x2", "(x3-x1)/x2",
    "(x1-x2)/x3", "(x2-x1)/x3", "x1*x2/x3", "x1*x3/x2", "x2*x3/x1",
    "x1/(x2*x3)", "x2/(x1*x3)", "x3/(x1*x2)",
]

# One representative per class on three variables (18 classes).
THREE_VAR_CLASSES = [
    "x1+x2+x3", "x1*x2*x3", "(x1+x2)/x3", "x1/(x2+x3)", "x1/(x2*x3)",
    "x1*x2+x3", "x1+x2-x3", "(x1+x2)*x3", "(x1-x2)/x3", "x1/x2+x3",
    "x1*x2/x3", "x1*x2-x3", "x1-x2-x3", "(x1-x2)*x3", "x1/(x2-x3)",
    "x1/x2-x3", "x1-x2/x3", "x1-x2*x3",
]

# The ten {+,*} classes on four variables.
SERIES_PARALLEL_FOUR_VAR_CLASSES = [
    "x1*x2*x3*x4", "x1+x2+x3+x4",
    "x1*x2*(x3+x4)", "x1+x2+x3*x4",
    "x1*(x2+x3+x4)", "x1+x2*x3*x4",
    "x1*(x2+x3*x4)", "x1+x2*(x3+x4)",
    "(x1+x2)*(x3+x4)", "x1*x2+x3*x4",
]
