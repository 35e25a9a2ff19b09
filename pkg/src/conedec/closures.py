"""Compliant and revenant closures of a seed inside a valid assignment.

A subset M of the support is compliant when every cone vertex X(s, t) of an
lcm with s in M and vertex t forces t into M; the ideal generated by a
compliant set restricted to the support is then describable by cones alone.
Dually, a subset N is revenant when lcm(t, s) landing in the cone of a member
t forces s in; the complement slice of an order ideal behaves this way.
Closures add the forced terms until stable and record a witness per addition.
"""

from __future__ import annotations

from dataclasses import dataclass
import json

from .division import InvalidDivisionError, RelDivision
from .terms import Term, deglex_key, degree, format_term, term_lcm

Witness = tuple[Term, Term, Term, Term, Term]  # added, s, t, lcm, vertex


@dataclass(frozen=True)
class ClosureReport:
    n: int
    seed: tuple[Term, ...]
    closure: tuple[Term, ...]
    witnesses: tuple[Witness, ...]

    def to_json_dict(self) -> dict:
        fmt = lambda t: format_term(t, self.n)
        return {
            "seed": [fmt(t) for t in self.seed],
            "closure": [fmt(t) for t in self.closure],
            "witnesses": [
                {"added": fmt(a), "s": fmt(s), "t": fmt(t), "lcm": fmt(w), "vertex": fmt(v)}
                for a, s, t, w, v in self.witnesses
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _prepare(div: RelDivision, seed) -> list[Term]:
    if not div.is_full_slice:
        raise InvalidDivisionError("closures are defined on full-slice assignments")
    if not div.validate().valid:
        raise InvalidDivisionError("closures need a valid assignment")
    seed = [tuple(t) for t in seed]
    for t in seed:
        if t not in div.mult:
            raise LookupError(f"seed term {format_term(t, div.n)} not in the support")
    return sorted(set(seed), key=deglex_key)


def compliant_closure(div: RelDivision, seed) -> ClosureReport:
    """Smallest compliant superset of the seed.

    A term t joins when some member s puts lcm(s, t) into the cone of t
    itself; candidates and members are scanned in deg-lex order, so the
    witness list is deterministic.
    """
    seed = _prepare(div, seed)
    members = set(seed)
    witnesses: list[Witness] = []
    changed = True
    while changed:
        changed = False
        for t in div.support:
            if t in members:
                continue
            for s in sorted(members, key=deglex_key):
                if div.x_of(s, t) == t:
                    members.add(t)
                    witnesses.append((t, s, t, term_lcm(s, t), t))
                    changed = True
                    break
    return ClosureReport(
        div.n, tuple(seed), tuple(sorted(members, key=deglex_key)), tuple(witnesses))


def revenant_closure(div: RelDivision, seed) -> ClosureReport:
    """Smallest revenant superset of the seed: s joins when lcm(t, s) lies in
    the cone of a member t."""
    seed = _prepare(div, seed)
    members = set(seed)
    witnesses: list[Witness] = []
    changed = True
    while changed:
        changed = False
        for s in div.support:
            if s in members:
                continue
            for t in sorted(members, key=deglex_key):
                if div.x_of(t, s) == t:
                    members.add(s)
                    witnesses.append((s, s, t, term_lcm(t, s), t))
                    changed = True
                    break
    return ClosureReport(
        div.n, tuple(seed), tuple(sorted(members, key=deglex_key)), tuple(witnesses))


@dataclass(frozen=True)
class ClosureResult:
    """Closure plus the bounded certificate that it does what it should."""

    report: ClosureReport
    certified: bool
    counterexample: tuple | None


def ideal_from_seed(div: RelDivision, seed, margin: int = 3) -> ClosureResult:
    """Compliant closure of the seed, certified as generating the same ideal
    slice-by-slice up to degree + margin."""
    from .oracle import verify_ideal_equality

    report = compliant_closure(div, seed)
    ok, bad = verify_ideal_equality(div, report.closure, margin)
    return ClosureResult(report, ok, bad)


def escalier_from_seed(div: RelDivision, seed, margin: int = 3) -> ClosureResult:
    """Revenant closure of the seed, certified as cutting out an order-ideal
    complement up to degree + margin."""
    from .oracle import verify_order_ideal

    report = revenant_closure(div, seed)
    ok, bad = verify_order_ideal(div, report.closure, margin)
    return ClosureResult(report, ok, bad)


def is_borel_fixed_slice(terms, n: int) -> bool:
    """Whether exchanging any variable for a larger one keeps every term in
    the set; terms must share one degree."""
    ts = {tuple(t) for t in terms}
    if not ts:
        return True
    degs = {degree(t) for t in ts}
    if len(degs) != 1:
        raise ValueError("terms of mixed degrees")
    for t in ts:
        for j in range(n - 1):
            if t[j] > 0:
                for k in range(j + 1, n):
                    moved = list(t)
                    moved[j] -= 1
                    moved[k] += 1
                    if tuple(moved) not in ts:
                        return False
    return True
