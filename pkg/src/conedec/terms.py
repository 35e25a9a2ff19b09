"""Exact arithmetic on monomial exponent vectors and degree-slice counting.

A term in n variables is a tuple of n non-negative integer exponents for
x1 < x2 < ... < xn.  When n <= 4 the variables are displayed as x, y, z, t.
Everything here is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

import json
import re
from math import comb

Term = tuple[int, ...]
VarSet = frozenset[int]

_LETTERS = ("x", "y", "z", "t")


def degree(t: Term) -> int:
    return sum(t)


def deglex_key(t: Term) -> tuple[int, Term]:
    """Sort key: total degree first, largest variable most significant on ties."""
    return (sum(t), t[::-1])


def _same_length(*terms: Term) -> int:
    n = len(terms[0])
    for t in terms[1:]:
        if len(t) != n:
            raise ValueError(f"terms live in different variable counts: {terms}")
    return n


def term_mul(t: Term, s: Term) -> Term:
    _same_length(t, s)
    return tuple(a + b for a, b in zip(t, s))


def term_divides(s: Term, t: Term) -> bool:
    """True when s | t componentwise."""
    _same_length(s, t)
    return all(a <= b for a, b in zip(s, t))


def term_div(t: Term, s: Term) -> Term:
    """Exact quotient t / s; raises ValueError when s does not divide t."""
    if not term_divides(s, t):
        raise ValueError(f"{s} does not divide {t}")
    return tuple(a - b for a, b in zip(t, s))


def term_lcm(t: Term, s: Term) -> Term:
    _same_length(t, s)
    return tuple(max(a, b) for a, b in zip(t, s))


def term_gcd(t: Term, s: Term) -> Term:
    _same_length(t, s)
    return tuple(min(a, b) for a, b in zip(t, s))


def support(t: Term) -> VarSet:
    """Indices (1-based) of the variables occurring in t."""
    return frozenset(i + 1 for i, e in enumerate(t) if e > 0)


def min_var(t: Term) -> int:
    """Smallest variable index occurring in t; undefined for the constant term."""
    for i, e in enumerate(t):
        if e > 0:
            return i + 1
    raise ValueError("the constant term has no variables")


def max_var(t: Term) -> int:
    """Largest variable index occurring in t; undefined for the constant term."""
    for i in range(len(t) - 1, -1, -1):
        if t[i] > 0:
            return i + 1
    raise ValueError("the constant term has no variables")


def enumerate_terms(n: int, d: int) -> list[Term]:
    """All degree-d terms in n variables, in deg-lex order."""
    if n < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be non-negative")

    def compositions(k: int, total: int):
        if k == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(k - 1, total - first):
                yield (first,) + rest

    return sorted(compositions(n, d), key=deglex_key)


def _comb0(m: int, r: int) -> int:
    # comb with the usual conventions outside math.comb's domain
    if r == 0:
        return 1
    if m < 0 or r < 0 or r > m:
        return 0
    return comb(m, r)


def sigma_expected(n: int, d: int) -> tuple[int, ...]:
    """Component k counts the degree-d terms that carry k multiplicative variables
    in any valid assignment on the full slice: C(d+n-1-k, n-k) for k = 1..n."""
    if n < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be non-negative")
    return tuple(_comb0(d + n - 1 - k, n - k) for k in range(1, n + 1))


def vandermonde_identity_check(n: int, d: int, d_max: int) -> bool:
    """Exact check that the expected profile splits every higher slice:
    C(d+e+n-1, n-1) = sum_k C(d+n-1-k, n-k) * C(e+k-1, k-1) for 0 <= e <= d_max."""
    profile = sigma_expected(n, d)
    for e in range(d_max + 1):
        total = sum(a * _comb0(e + k - 1, k - 1) for k, a in enumerate(profile, start=1))
        if total != _comb0(d + e + n - 1, n - 1):
            return False
    return True


def var_names(n: int) -> list[str]:
    if n < 1:
        raise ValueError("need at least one variable")
    if n <= 4:
        return list(_LETTERS[:n])
    return [f"x{i}" for i in range(1, n + 1)]


def var_index(name: str, n: int) -> int:
    """1-based index of a variable name, honoring the display convention for n."""
    names = var_names(n)
    if name in names:
        return names.index(name) + 1
    m = re.fullmatch(r"x([0-9]+)", name)
    if m:
        i = int(m.group(1))
        if 1 <= i <= n:
            return i
    raise ValueError(f"unknown variable {name!r} for n={n}")


def format_term(t: Term, n: int | None = None) -> str:
    """Named-product form: x^2*y, y*z*t, 1 for the constant term."""
    if n is None:
        n = len(t)
    names = var_names(n)
    parts = [names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(t) if e > 0]
    return "*".join(parts) if parts else "1"


_TOKEN = re.compile(r"(x[0-9]+|[xyzt])(?:\^([0-9]+))?")


def parse_term(text: str, n: int) -> Term:
    """Parse named-product form ("x^2*y", "x2^3", "yzt") or a bare exponent
    array ("[2,1,0]"); '^' may be omitted for exponent 1, '*' between factors."""
    s = text.strip()
    if not s:
        raise ValueError("empty term")
    if s.startswith("["):
        exps = json.loads(s)
        if not (isinstance(exps, list) and len(exps) == n
                and all(isinstance(e, int) and e >= 0 for e in exps)):
            raise ValueError(f"bad exponent array {text!r} for n={n}")
        return tuple(exps)
    if s == "1":
        return (0,) * n
    exps = [0] * n
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse term {text!r} at {s[pos:]!r}")
        idx = var_index(m.group(1), n)
        exps[idx - 1] += int(m.group(2)) if m.group(2) else 1
        pos = m.end()
        if pos < len(s) and s[pos] == "*":
            pos += 1
    return tuple(exps)


def parse_varset(items, n: int) -> VarSet:
    """Variable names (or 1-based indices) to a VarSet."""
    out = set()
    for item in items:
        if isinstance(item, int):
            if not 1 <= item <= n:
                raise ValueError(f"variable index {item} out of range for n={n}")
            out.add(item)
        else:
            out.add(var_index(str(item), n))
    return frozenset(out)


def format_varset(m: VarSet, n: int) -> list[str]:
    names = var_names(n)
    return [names[i - 1] for i in sorted(m)]
