"""Canonical multilinear quotient forms: the identity key of an expression.

Every single-use arithmetic expression denotes a rational function with a
unique representation as a reduced quotient of two multilinear polynomials
whose denominator is monic.  Equal forms mean identical functions, so the
form serves as hash key, orbit key and evaluation vehicle throughout.

Combining two forms with disjoint variable sets cross-multiplies and then
renormalizes (joint content gcd, sign flip to keep the denominator monic).
No polynomial gcd is taken there: with disjoint operand variables the
cross product of reduced forms stays reduced, an assumption the test suite
guards with randomized functional-equality checks.  Zero assignment is the
one operation that can surface a common factor, and it cancels factors via
verified disjoint-variable factorization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping, Optional

from .mpoly import ONE, MultiPoly, disjoint_factors
from .projrat import EvalResult, UNDEFINED, p_div

OPS = ("+", "-", "*", "/")


class OverlappingVariables(ValueError):
    """Operands of a combination share a variable."""


class NonAEResult(RuntimeError):
    """A combination produced a vanishing numerator; cannot happen for
    reduced operands on disjoint variables, so this is a hard failure."""


class NonContiguousVariables(ValueError):
    """An orbit operation needs the variable set to be exactly {1..n}."""


class VariableNotPresent(KeyError):
    """Zero assignment for a variable the form does not depend on."""


class CanonForm:
    """Reduced quotient num/den; immutable, hashable, order-stable."""

    __slots__ = ("num", "den", "varset", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly, varset: frozenset):
        # Trusted constructor; use atom/combine or _normalized to build.
        self.num = num
        self.den = den
        self.varset = varset
        self._hash = hash((num.terms, den.terms))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CanonForm)
            and self.num.terms == other.num.terms
            and self.den.terms == other.den.terms
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CanonForm({form_str(self)!r})"


def form_str(f: CanonForm) -> str:
    """Canonical text, the exact hash/orbit-key serialization."""
    return f"({f.num.text()}) / ({f.den.text()})"


def atom(i: int) -> CanonForm:
    """The form of the bare variable x_i."""
    return CanonForm(MultiPoly.variable(i), ONE, frozenset((i,)))


def _normalized(num: MultiPoly, den: MultiPoly, varset: Optional[frozenset] = None) -> CanonForm:
    """Apply the two normalizations: joint content gcd and monic denominator."""
    c = gcd(num.content(), den.content())
    if c > 1:
        num = num.divide_content(c)
        den = den.divide_content(c)
    if not den.is_monic():
        num, den = -num, -den
    if varset is None:
        varset = num.variables() | den.variables()
    return CanonForm(num, den, varset)


def combine(op: str, f: CanonForm, g: CanonForm, varset: Optional[frozenset] = None) -> CanonForm:
    """Combine two forms on disjoint variable sets with +, -, * or /.

    Cross-multiplication rules, with f = F1/F2 and g = G1/G2:
    ``+ -> (F1*G2 + F2*G1)/(F2*G2)``, ``- -> (F1*G2 - F2*G1)/(F2*G2)``,
    ``* -> (F1*G1)/(F2*G2)``, ``/ -> (F1*G2)/(F2*G1)``.
    """
    if varset is None:
        if f.varset & g.varset:
            raise OverlappingVariables(
                f"operands share variables {sorted(f.varset & g.varset)}"
            )
        varset = f.varset | g.varset
    if op == "+":
        num = f.num.mul_disjoint(g.den) + f.den.mul_disjoint(g.num)
        den = f.den.mul_disjoint(g.den)
    elif op == "-":
        num = f.num.mul_disjoint(g.den) - f.den.mul_disjoint(g.num)
        den = f.den.mul_disjoint(g.den)
    elif op == "*":
        num = f.num.mul_disjoint(g.num)
        den = f.den.mul_disjoint(g.den)
    elif op == "/":
        num = f.num.mul_disjoint(g.den)
        den = f.den.mul_disjoint(g.num)
    else:
        raise ValueError(f"unknown operator {op!r}")
    if not num:
        raise NonAEResult(f"vanishing numerator combining {f!r} {op} {g!r}")
    return _normalized(num, den, varset)


def negate(f: CanonForm) -> CanonForm:
    """Flip the numerator sign.  The denominator stays monic, so the result
    is a valid form; whether it still denotes a constructible expression is
    a question for the exhaustive generator, not for this module."""
    return CanonForm(-f.num, f.den, f.varset)


def is_monic_form(f: CanonForm) -> bool:
    return f.num.is_monic()


def variables(f: CanonForm) -> frozenset:
    return f.varset


# -- permutations -----------------------------------------------------------
#
# A permutation is a dict {i: sigma(i)} with finite support; absent keys are
# fixed points.  Applying sigma to a form relabels every variable x_i as
# x_sigma(i), re-sorts monomials and restores the monic denominator.

Permutation = Mapping[int, int]


def make_perm(mapping: Mapping[int, int]) -> dict:
    """Validate bijectivity on the support and drop fixed points."""
    cleaned = {k: v for k, v in mapping.items() if k != v}
    if len(set(cleaned.values())) != len(cleaned):
        raise ValueError(f"not injective: {mapping}")
    return cleaned

def perm_from_cycles(*cycles: tuple) -> dict:
    """Build a permutation from disjoint cycles, e.g. (1, 2, 4) for x1->x2->x4->x1."""
    out: dict = {}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a in out:
                raise ValueError("cycles are not disjoint")
            out[a] = b
    return make_perm(out)


def compose(s: Permutation, t: Permutation) -> dict:
    """The permutation applying t first, then s."""
    keys = set(s) | set(t)
    return make_perm({k: s.get(t.get(k, k), t.get(k, k)) for k in keys})


def perm_inverse(s: Permutation) -> dict:
    return {v: k for k, v in s.items()}


def all_perms(n: int) -> Iterator[dict]:
    """Every permutation of {1..n} as a mapping dict."""
    base = range(1, n + 1)
    for image in itertools.permutations(base):
        yield dict(zip(base, image))


def _permute_terms(terms, perm: Permutation):
    out = [
        (tuple(sorted(perm.get(v, v) for v in m)), c)
        for m, c in terms
    ]
    out.sort()
    return out


def apply_perm(perm: Permutation, f: CanonForm) -> CanonForm:
    """Relabel variables through perm and renormalize the denominator sign."""
    num_terms = _permute_terms(f.num.terms, perm)
    den_terms = _permute_terms(f.den.terms, perm)
    if den_terms[0][1] < 0:
        num_terms = [(m, -c) for m, c in num_terms]
        den_terms = [(m, -c) for m, c in den_terms]
    varset = frozenset(perm.get(v, v) for v in f.varset)
    return CanonForm(MultiPoly(num_terms), MultiPoly(den_terms), varset)


def _require_contiguous(f: CanonForm) -> int:
    n = len(f.varset)
    if f.varset != frozenset(range(1, n + 1)):
        raise NonContiguousVariables(
            f"variable set {sorted(f.varset)} is not {{1..{n}}}; relabel first"
        )
    return n


def _var_signature(f: CanonForm, v: int):
    """Invariant of a variable under relabeling and global sign flips."""
    return (
        tuple(sorted((len(m), abs(c)) for m, c in f.num.terms if v in m)),
        tuple(sorted((len(m), abs(c)) for m, c in f.den.terms if v in m)),
    )


def _structure_invariant(f: CanonForm):
    return (
        tuple(sorted((len(m), abs(c)) for m, c in f.num.terms)),
        tuple(sorted((len(m), abs(c)) for m, c in f.den.terms)),
    )


def is_isomorphic(f: CanonForm, g: CanonForm) -> Optional[dict]:
    """A permutation sigma with apply_perm(sigma, f) == g, or None.

    Both forms must live on the contiguous variable set {1..n}.  The search
    enumerates only bijections that respect per-variable occurrence
    signatures, which prunes the bulk of S_n at the sizes this library
    targets.
    """
    n = _require_contiguous(f)
    if _require_contiguous(g) != n:
        return None
    if _structure_invariant(f) != _structure_invariant(g):
        return None
    by_sig_f: dict = {}
    by_sig_g: dict = {}
    for v in range(1, n + 1):
        by_sig_f.setdefault(_var_signature(f, v), []).append(v)
        by_sig_g.setdefault(_var_signature(g, v), []).append(v)
    if set(by_sig_f) != set(by_sig_g):
        return None
    sigs = sorted(by_sig_f)
    for sig in sigs:
        if len(by_sig_f[sig]) != len(by_sig_g[sig]):
            return None
    for images in itertools.product(
        *(itertools.permutations(by_sig_g[sig]) for sig in sigs)
    ):
        perm = {}
        for sig, image in zip(sigs, images):
            perm.update(zip(by_sig_f[sig], image))
        if apply_perm(perm, f) == g:
            return {k: v for k, v in perm.items() if k != v}
    return None


def orbit_key(f: CanonForm) -> str:
    """Lexicographically least serialization over all relabelings of {1..n}.

    Equal keys iff the forms are isomorphic.
    """
    n = _require_contiguous(f)
    return min(form_str(apply_perm(p, f)) for p in all_perms(n))


def relabel_contiguous(f: CanonForm) -> tuple[CanonForm, dict]:
    """Order-preserving relabeling of the variable set onto {1..k}."""
    mapping = {v: i for i, v in enumerate(sorted(f.varset), start=1)}
    return apply_perm(mapping, f), mapping


# -- evaluation and zero assignment -----------------------------------------


def eval_form(f: CanonForm, point: Mapping[int, Fraction]) -> EvalResult:
    """num/den at a finite rational point; both-zero comes out UNDEFINED."""
    return p_div(f.num.evaluate(point), f.den.evaluate(point))


@dataclass(frozen=True)
class ZeroAssignResult:
    """Outcome of substituting zero for one variable.

    kind is one of "zero", "infinity", "form", "non_ae".  A "form" carries
    the reduced quotient; "non_ae" carries the reduced pair that failed the
    structural membership checks (e.g. -x2 over 1).
    """

    kind: str
    form: Optional[CanonForm] = None
    num: Optional[MultiPoly] = None
    den: Optional[MultiPoly] = None


def reduce_quotient(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Cancel the common content and common disjoint-variable factors."""
    c = gcd(num.content(), den.content())
    if c > 1:
        num = num.divide_content(c)
        den = den.divide_content(c)
    if num.variables() & den.variables():
        n_sign, n_cont, n_factors = disjoint_factors(num)
        d_sign, d_cont, d_factors = disjoint_factors(den)
        shared = [q for q in n_factors if q in d_factors]
        if shared:
            for q in shared:
                n_factors.remove(q)
                d_factors.remove(q)
            num = MultiPoly.constant(n_sign * n_cont)
            for q in n_factors:
                num = num.mul_disjoint(q)
            den = MultiPoly.constant(d_sign * d_cont)
            for q in d_factors:
                den = den.mul_disjoint(q)
    return num, den


def assign_zero(f: CanonForm, i: int) -> ZeroAssignResult:
    """Substitute x_i = 0 and rebuild the reduced form.

    The result may be identically zero, identically infinity, a smaller
    valid form, or a reduced quotient that no constructible expression
    attains (flagged non_ae).
    """
    if i not in f.varset:
        raise VariableNotPresent(i)
    num = f.num.substitute_zero(i)
    if not num:
        return ZeroAssignResult("zero")
    den = f.den.substitute_zero(i)
    if not den:
        return ZeroAssignResult("infinity")
    num, den = reduce_quotient(num, den)
    g = _normalized(num, den)
    if _passes_membership_checks(g):
        return ZeroAssignResult("form", form=g)
    return ZeroAssignResult("non_ae", num=g.num, den=g.den)


def _passes_membership_checks(g: CanonForm) -> bool:
    # Structural sanity: nonzero parts, monic denominator, dependency left.
    if not g.num or not g.den or not g.den.is_monic():
        return False
    if not g.varset:
        return False
    # On a single variable the only constructible expression is the bare
    # atom, so anything else (such as -x2 over 1) is rejected outright.
    # Larger forms pass; exact membership is the generator's business.
    if len(g.varset) == 1:
        return g == atom(next(iter(g.varset)))
    return True
