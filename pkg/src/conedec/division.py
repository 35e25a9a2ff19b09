"""Multiplicative-variable assignments on finite term sets and their validation.

An assignment splits the variables of every term u of a finite set U into
multiplicative and non-multiplicative ones; the cone of u is u times all
products of its multiplicative variables.  The assignment is valid when the
cones are pairwise disjoint and jointly cover every multiple of U.  On the
full degree-d slice both conditions are decided exactly by finite checks:
pairwise disjointness via the gcd criterion, coverage via the size profile.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import json

from .terms import (
    Term,
    VarSet,
    deglex_key,
    degree,
    enumerate_terms,
    format_term,
    format_varset,
    parse_term,
    parse_varset,
    sigma_expected,
    support,
    term_div,
    term_divides,
    term_gcd,
    term_lcm,
    var_names,
)


class DivisionError(Exception):
    pass


class InvalidDivisionError(DivisionError):
    pass


class NoInvolutiveDivisorError(DivisionError):
    pass


def _fmt_violation(v: dict, n: int) -> dict:
    out = {}
    for key, val in v.items():
        if key in ("u", "v", "witness", "term") and isinstance(val, tuple):
            out[key] = format_term(val, n)
        elif key == "terms":
            out[key] = [format_term(t, n) for t in val]
        elif key == "variable":
            out[key] = var_names(n)[val - 1]
        else:
            out[key] = list(val) if isinstance(val, tuple) else val
    return out


@dataclass
class ValidationReport:
    """Outcome of a validity check; valid iff no violations were recorded."""

    n: int
    valid: bool
    violations: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def kinds(self) -> set[str]:
        return {v["kind"] for v in self.violations}

    def merged(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(
            self.n,
            self.valid and other.valid,
            self.violations + other.violations,
            self.notes + other.notes,
        )

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [_fmt_violation(v, self.n) for v in self.violations],
            "notes": list(self.notes),
        }


@dataclass(eq=True)
class RelDivision:
    """A multiplicative-variable assignment over a fixed finite support.

    degree is the slice degree when the support is the full degree slice,
    None for an arbitrary finite term set.  Instances are treated as
    immutable after construction.
    """

    n: int
    degree: int | None
    support: tuple[Term, ...]
    mult: dict[Term, VarSet]
    _cover_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        seen = set()
        for t in self.support:
            if len(t) != self.n or any(e < 0 for e in t):
                raise ValueError(f"bad exponent vector {t} for n={self.n}")
            if t in seen:
                raise ValueError(f"duplicate term {format_term(t, self.n)}")
            seen.add(t)
        if set(self.mult) != seen:
            raise ValueError("assignment keys differ from the support")
        allvars = set(range(1, self.n + 1))
        for t, m in self.mult.items():
            if not set(m) <= allvars:
                raise ValueError(f"variable indices out of range in M({format_term(t, self.n)})")
        if self.degree is not None:
            full = enumerate_terms(self.n, self.degree)
            if sorted(seen, key=deglex_key) != full:
                raise ValueError(
                    f"support is not the full degree-{self.degree} slice in {self.n} variables")
        self.support = tuple(sorted(self.support, key=deglex_key))
        self.mult = {t: frozenset(self.mult[t]) for t in self.support}

    # -- constructors ------------------------------------------------------

    @classmethod
    def on_slice(cls, n: int, d: int, mult: dict[Term, VarSet]) -> "RelDivision":
        return cls(n, d, tuple(mult), dict(mult))

    @classmethod
    def general(cls, n: int, mult: dict[Term, VarSet]) -> "RelDivision":
        return cls(n, None, tuple(mult), dict(mult))

    @property
    def is_full_slice(self) -> bool:
        return self.degree is not None

    # -- basic queries -----------------------------------------------------

    def _require(self, t: Term) -> None:
        if t not in self.mult:
            raise LookupError(f"term {format_term(t, self.n)} not in the support")

    def multiplicative_set(self, t: Term) -> VarSet:
        self._require(t)
        return self.mult[t]

    def nonmultiplicative_set(self, t: Term) -> VarSet:
        self._require(t)
        return frozenset(range(1, self.n + 1)) - self.mult[t]

    def cone_contains(self, vertex: Term, w: Term) -> bool:
        """w lies in the cone of vertex: vertex | w and w/vertex uses only
        multiplicative variables of vertex."""
        self._require(vertex)
        if not term_divides(vertex, w):
            return False
        return support(term_div(w, vertex)) <= self.mult[vertex]

    def involutive_divisor(self, w: Term) -> Term | None:
        """Deg-lex-first support term whose cone contains w; None when no cone does.
        Unique on a valid full-slice assignment whenever deg(w) >= degree."""
        if w in self._cover_cache:
            return self._cover_cache[w]
        found = None
        for u in self.support:
            if self.cone_contains(u, w):
                found = u
                break
        self._cover_cache[w] = found
        return found

    def x_of(self, s: Term, t: Term) -> Term:
        """The support term whose cone contains lcm(s, t)."""
        self._require(s)
        self._require(t)
        w = term_lcm(s, t)
        v = self.involutive_divisor(w)
        if v is None:
            raise NoInvolutiveDivisorError(
                f"no involutive divisor for {format_term(w, self.n)}")
        return v

    def sigma_profile(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for m in self.mult.values():
            if m:
                counts[len(m) - 1] += 1
        return tuple(counts)

    def peak(self) -> Term:
        """The unique support term with every variable multiplicative."""
        if not self.is_full_slice:
            raise InvalidDivisionError("peak is defined on full-slice assignments only")
        full = frozenset(range(1, self.n + 1))
        peaks = [u for u in self.support if self.mult[u] == full]
        if len(peaks) != 1:
            names = [format_term(u, self.n) for u in peaks]
            raise InvalidDivisionError(
                "no peak" if not peaks else f"multiple peaks: {', '.join(names)}")
        return peaks[0]

    # -- validation --------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Exact validity check.

        Pairwise cone disjointness is decided by the gcd criterion: the cones
        of u and v meet iff the variables of u/gcd sit inside M(v) and those
        of v/gcd inside M(u), the lcm being the witness.  On a full slice,
        coverage of every higher degree is equivalent to the size profile
        matching the expected one, so validity is decided completely; on a
        general set coverage is not certified here (see the covering oracle).
        """
        violations: list[dict] = []
        notes: list[str] = []
        terms = self.support
        for i, u in enumerate(terms):
            for v in terms[i + 1:]:
                w = term_gcd(u, v)
                a = support(term_div(u, w))
                b = support(term_div(v, w))
                if b <= self.mult[u] and a <= self.mult[v]:
                    violations.append(
                        {"kind": "overlap", "u": u, "v": v, "witness": term_lcm(u, v)})
        if self.is_full_slice:
            observed = self.sigma_profile()
            expected = sigma_expected(self.n, self.degree)
            if observed != expected:
                violations.append(
                    {"kind": "profile-mismatch", "observed": observed, "expected": expected})
            for i in range(1, self.n + 1):
                pure = tuple(self.degree if j == i - 1 else 0 for j in range(self.n))
                if i not in self.mult[pure]:
                    violations.append({"kind": "pure-power", "variable": i})
            full = frozenset(range(1, self.n + 1))
            peaks = [u for u in terms if self.mult[u] == full]
            if not peaks:
                violations.append({"kind": "no-peak"})
            elif len(peaks) > 1:
                violations.append({"kind": "multiple-peaks", "terms": peaks})
        else:
            notes.append("coverage unverified here")
        return ValidationReport(self.n, not violations, violations, notes)

    # -- permutation -------------------------------------------------------

    def permuted(self, pi: tuple[int, ...]) -> "RelDivision":
        """Rename variable i to pi[i-1] everywhere."""
        if sorted(pi) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {pi}")
        new_mult = {}
        for t, m in self.mult.items():
            t2 = [0] * self.n
            for i, e in enumerate(t):
                t2[pi[i] - 1] = e
            new_mult[tuple(t2)] = frozenset(pi[v - 1] for v in m)
        return RelDivision(self.n, self.degree, tuple(new_mult), new_mult)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        names = var_names(self.n)
        return {
            "n": self.n,
            "degree": self.degree,
            "variables": names,
            "multiplicative": {
                format_term(t, self.n): format_varset(self.mult[t], self.n)
                for t in self.support
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "RelDivision":
        try:
            n = data["n"]
            mult_raw = data["multiplicative"]
        except KeyError as exc:
            raise ValueError(f"division JSON misses key {exc}") from None
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad variable count {n!r}")
        names = data.get("variables", var_names(n))
        if sorted(names) != sorted(var_names(n)):
            raise ValueError(f"unexpected variable names {names} for n={n}")
        mult = {}
        for key, vals in mult_raw.items():
            t = parse_term(key, n)
            if t in mult:
                raise ValueError(f"duplicate term {key!r}")
            mult[t] = parse_varset(vals, n)
        return cls(n, data.get("degree"), tuple(mult), mult)

    @classmethod
    def from_json(cls, text: str) -> "RelDivision":
        return cls.from_json_dict(json.loads(text))


def make_division(n: int, d: int | None, rows: dict[str, str]) -> RelDivision:
    """Readable constructor: rows map term strings to comma-separated variables."""
    mult = {}
    for key, vals in rows.items():
        t = parse_term(key, n)
        mult[t] = parse_varset([v for v in vals.replace(",", " ").split() if v], n)
    if d is None:
        return RelDivision.general(n, mult)
    return RelDivision.on_slice(n, d, mult)
