"""Bounded brute-force checks, independent of the incremental machinery.

Everything here walks terms degree by degree up to an explicit margin and
tests membership directly, so it can certify (up to the bound) or refute
claims produced elsewhere.
"""

from __future__ import annotations

from itertools import product

from .division import RelDivision, ValidationReport
from .terms import Term, degree, deglex_key, enumerate_terms, term_divides, term_lcm


def _slice_terms(n: int, d: int) -> list[Term]:
    return enumerate_terms(n, d)


def verify_division_covering(div: RelDivision, margin: int = 3) -> ValidationReport:
    """Check unique cone coverage of every multiple of the support, degree by
    degree, up to max support degree + margin."""
    if margin < 0:
        raise ValueError("margin must be non-negative")
    violations: list[dict] = []
    degrees = [degree(t) for t in div.support]
    lo, hi = min(degrees), max(degrees) + margin
    for d in range(lo, hi + 1):
        for w in _slice_terms(div.n, d):
            if not any(term_divides(u, w) for u in div.support):
                continue
            owners = [u for u in div.support if div.cone_contains(u, w)]
            if not owners:
                violations.append({"kind": "uncovered", "term": w})
            elif len(owners) > 1:
                violations.append(
                    {"kind": "double-covered", "term": w, "u": owners[0], "v": owners[1]})
    return ValidationReport(div.n, not violations, violations)


def verify_ideal_equality(div: RelDivision, members, margin: int = 3):
    """Do the cones of the member terms cut out, slice by slice, the same set
    as ordinary divisibility by the members?  Checked for degrees up to the
    slice degree + margin; returns (ok, counterexample)."""
    members = [tuple(t) for t in members]
    for t in members:
        if t not in div.mult:
            raise LookupError(f"member {t} not in the support")
    d0 = div.degree if div.is_full_slice else min(degree(t) for t in div.support)
    for d in range(d0, d0 + margin + 1):
        for w in _slice_terms(div.n, d):
            plain = any(term_divides(m, w) for m in members)
            coned = any(div.cone_contains(m, w) for m in members)
            if plain != coned:
                return False, w
    return True, None


def _divisors_at_least(w: Term, d: int):
    for exps in product(*(range(e + 1) for e in w)):
        if sum(exps) >= d:
            yield exps


def verify_order_ideal(div: RelDivision, members, margin: int = 3):
    """Is the union of the member cones closed under passing to divisors of
    degree >= the slice degree?  Bounded as above; returns (ok, counterexample)
    where a counterexample is (term, divisor)."""
    members = [tuple(t) for t in members]
    for t in members:
        if t not in div.mult:
            raise LookupError(f"member {t} not in the support")
    d0 = div.degree if div.is_full_slice else min(degree(t) for t in div.support)

    def covered(w: Term) -> bool:
        return any(div.cone_contains(m, w) for m in members)

    for d in range(d0, d0 + margin + 1):
        for w in _slice_terms(div.n, d):
            if not covered(w):
                continue
            for s in _divisors_at_least(w, d0):
                if not covered(s):
                    return False, (w, s)
    return True, None


def brute_compliant(div: RelDivision, seed) -> frozenset[Term]:
    """Fixpoint of the defining rule taken literally: for every member t and
    every support term s, the cone vertex of lcm(s, t) joins the set."""
    members = {tuple(t) for t in seed}
    for t in members:
        if t not in div.mult:
            raise LookupError(f"seed term {t} not in the support")
    changed = True
    while changed:
        changed = False
        for t in sorted(members, key=deglex_key):
            for s in div.support:
                v = div.x_of(s, t)
                if v not in members:
                    members.add(v)
                    changed = True
    return frozenset(members)
