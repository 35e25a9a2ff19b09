"""Exhaustive search for valid assignments on a full degree slice.

The search assigns multiplicative sets term by term under three kinds of
constraints: variables forced in or out for a term, "not all of these
variables together" groups coming from the pairwise disjointness criterion,
and a global budget fixing how many terms may receive each set size (the
expected profile).  Together these make the leaves of the search tree exactly
the valid assignments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .division import RelDivision
from .terms import (
    Term,
    VarSet,
    enumerate_terms,
    format_term,
    sigma_expected,
    support,
    term_div,
    term_gcd,
)


class ConflictError(Exception):
    pass


@dataclass
class PartialAssignment:
    """Search state; assign() returns a new state (copy-on-branch)."""

    n: int
    d: int
    support: tuple[Term, ...]
    forced_in: dict[Term, set[int]]
    forced_out: dict[Term, set[int]]
    groups: dict[Term, list[VarSet]]
    assigned: dict[Term, VarSet]
    budget: list[int]  # budget[k] = terms still allowed to get a size-k set; [0] unused

    def copy(self) -> "PartialAssignment":
        return PartialAssignment(
            self.n,
            self.d,
            self.support,
            {t: set(s) for t, s in self.forced_in.items()},
            {t: set(s) for t, s in self.forced_out.items()},
            {t: list(gs) for t, gs in self.groups.items()},
            dict(self.assigned),
            list(self.budget),
        )

    def unassigned(self) -> list[Term]:
        return [t for t in self.support if t not in self.assigned]

    def decided(self, t: Term) -> VarSet | None:
        """The only possible set for t when every variable is forced, else None."""
        if len(self.forced_in[t]) + len(self.forced_out[t]) == self.n:
            return frozenset(self.forced_in[t])
        return None

    def candidates(self, t: Term) -> list[VarSet]:
        """Possible multiplicative sets for t under the current constraints,
        largest first, lexicographic on ties."""
        if t in self.assigned:
            return [self.assigned[t]]
        base = frozenset(self.forced_in[t])
        free = sorted(set(range(1, self.n + 1)) - base - self.forced_out[t])
        out = []
        for extra in range(len(free) + 1):
            size = len(base) + extra
            if size < 1 or size > self.n or self.budget[size] <= 0:
                continue
            for combo in combinations(free, extra):
                m = base | frozenset(combo)
                if any(g <= m for g in self.groups[t]):
                    continue
                out.append(m)
        out.sort(key=lambda m: (-len(m), sorted(m)))
        return out

    # -- constraint plumbing (mutating; used on fresh copies only) ---------

    def _feasible(self, t: Term) -> None:
        lo = max(1, len(self.forced_in[t]))
        hi = self.n - len(self.forced_out[t])
        if not any(self.budget[k] > 0 for k in range(lo, hi + 1)):
            raise ConflictError(
                f"no admissible set size left for {format_term(t, self.n)}")

    def _force_out(self, t: Term, v: int) -> None:
        if v in self.forced_in[t]:
            raise ConflictError(
                f"variable {v} both required and forbidden for {format_term(t, self.n)}")
        if v not in self.forced_out[t]:
            self.forced_out[t].add(v)

    def _not_superset(self, t: Term, a: VarSet) -> None:
        """Record that M(t) must not contain all of a."""
        if t in self.assigned:
            if a <= self.assigned[t]:
                raise ConflictError(
                    f"cones of assigned terms meet at {format_term(t, self.n)}")
            return
        if a & self.forced_out[t]:
            return
        residue = a - self.forced_in[t]
        if not residue:
            raise ConflictError(
                f"forced variables of {format_term(t, self.n)} already cover {sorted(a)}")
        if len(residue) == 1:
            self._force_out(t, next(iter(residue)))
        elif a not in self.groups[t]:
            self.groups[t].append(a)

    def _normalize(self) -> None:
        changed = True
        while changed:
            changed = False
            for t in self.support:
                if t in self.assigned:
                    continue
                kept = []
                for g in self.groups[t]:
                    if g & self.forced_out[t]:
                        changed = True
                        continue
                    residue = g - self.forced_in[t]
                    if not residue:
                        raise ConflictError(
                            f"forced variables of {format_term(t, self.n)} "
                            f"already cover {sorted(g)}")
                    if len(residue) == 1:
                        self._force_out(t, next(iter(residue)))
                        changed = True
                        continue
                    kept.append(g)
                self.groups[t] = kept
                self._feasible(t)

    def assign(self, t: Term, m: VarSet) -> "PartialAssignment":
        """New state with M(t) = m; raises ConflictError when impossible."""
        if t not in self.forced_in:
            raise LookupError(f"term {format_term(t, self.n)} not in the support")
        m = frozenset(m)
        if t in self.assigned:
            raise ConflictError(f"{format_term(t, self.n)} is already assigned")
        if not m or not m <= set(range(1, self.n + 1)):
            raise ConflictError(f"inadmissible multiplicative set {sorted(m)}")
        nxt = self.copy()
        if not set(nxt.forced_in[t]) <= m:
            raise ConflictError(
                f"{format_term(t, self.n)} must keep {sorted(set(nxt.forced_in[t]) - m)}")
        if m & nxt.forced_out[t]:
            raise ConflictError(
                f"{format_term(t, self.n)} must avoid {sorted(m & nxt.forced_out[t])}")
        for g in nxt.groups[t]:
            if g <= m:
                raise ConflictError(
                    f"{format_term(t, self.n)} may not take all of {sorted(g)}")
        if nxt.budget[len(m)] <= 0:
            raise ConflictError(f"no size-{len(m)} set left in the profile budget")
        nxt.budget[len(m)] -= 1
        nxt.assigned[t] = m
        nxt.forced_in[t] = set(m)
        nxt.forced_out[t] = set(range(1, nxt.n + 1)) - m
        nxt.groups[t] = []
        # pairwise disjointness: once M(t) is final, any u whose quotient
        # variables towards t are all multiplicative for t must miss one of
        # t's quotient variables towards u
        for u in nxt.support:
            if u == t:
                continue
            w = term_gcd(t, u)
            a = support(term_div(t, w))
            b = support(term_div(u, w))
            if b <= m:
                nxt._not_superset(u, a)
        nxt._normalize()
        return nxt


def seed_constraints(n: int, d: int) -> PartialAssignment:
    """Fresh state: pure powers keep their own variable, budget is the
    expected profile."""
    terms = tuple(enumerate_terms(n, d))
    forced_in: dict[Term, set[int]] = {t: set() for t in terms}
    for i in range(1, n + 1):
        pure = tuple(d if j == i - 1 else 0 for j in range(n))
        forced_in[pure].add(i)
    return PartialAssignment(
        n,
        d,
        terms,
        forced_in,
        {t: set() for t in terms},
        {t: [] for t in terms},
        {},
        [0, *sigma_expected(n, d)],
    )


def propagate(pa: PartialAssignment, t: Term, m: VarSet) -> PartialAssignment:
    return pa.assign(t, m)


def _serialize(div: RelDivision) -> bytes:
    return ";".join(
        ",".join(str(v) for v in sorted(div.mult[t])) for t in div.support
    ).encode("ascii")


def canonical_form(div: RelDivision) -> bytes:
    """Minimum over all variable renamings of the serialized assignment;
    constant on a renaming orbit, distinct across orbits."""
    if not div.is_full_slice:
        raise ValueError("canonical forms are defined on full-slice assignments")
    return min(_serialize(div.permuted(pi)) for pi in permutations(range(1, div.n + 1)))


def orbit_size(div: RelDivision) -> int:
    return len({_serialize(div.permuted(pi)) for pi in permutations(range(1, div.n + 1))})


def enumerate_divisions(n: int, d: int, up_to_symmetry: bool = False):
    """All valid assignments on the degree-d slice, as a deterministic stream.

    With up_to_symmetry, only the canonical representative of each variable-
    renaming orbit is produced (the one whose own serialization attains the
    orbit minimum).
    """

    def dfs(pa: PartialAssignment):
        todo = pa.unassigned()
        if not todo:
            div = RelDivision.on_slice(n, d, dict(pa.assigned))
            yield div
            return
        best, best_count = None, -1
        for t in todo:
            c = len(pa.candidates(t))
            if c > best_count:
                best, best_count = t, c
        for m in pa.candidates(best):
            try:
                nxt = pa.assign(best, m)
            except ConflictError:
                continue
            yield from dfs(nxt)

    for div in dfs(seed_constraints(n, d)):
        if up_to_symmetry and canonical_form(div) != _serialize(div):
            continue
        yield div
