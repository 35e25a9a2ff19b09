"""The two classical assignments and recognition of the triangular one."""

from __future__ import annotations

from .division import InvalidDivisionError, RelDivision
from .terms import Term, degree, enumerate_terms


def _pommaret_mult(t: Term, n: int, order: tuple[int, ...]) -> frozenset[int]:
    # order lists the variables from smallest to largest
    rank = {v: i for i, v in enumerate(order)}
    if degree(t) == 0:
        return frozenset(order)
    lo = min(rank[i + 1] for i, e in enumerate(t) if e > 0)
    return frozenset(order[: lo + 1])


def _check_order(order, n: int) -> tuple[int, ...]:
    if order is None:
        return tuple(range(1, n + 1))
    order = tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {order}")
    return order


def pommaret_on_slice(n: int, d: int, order=None) -> RelDivision:
    """Triangular assignment on the full degree-d slice: the multiplicative
    variables of t are those at or below its smallest variable, smallness
    taken along the given variable order (ascending indices by default)."""
    order = _check_order(order, n)
    mult = {t: _pommaret_mult(t, n, order) for t in enumerate_terms(n, d)}
    return RelDivision.on_slice(n, d, mult)


def pommaret_general(terms, n: int) -> RelDivision:
    """Triangular rule applied verbatim to an arbitrary finite term set.
    Need not be valid there; pair with the covering oracle."""
    mult = {tuple(t): _pommaret_mult(tuple(t), n, tuple(range(1, n + 1))) for t in terms}
    return RelDivision.general(n, mult)


def janet_general(terms, n: int) -> RelDivision:
    """Janet's rule: x_j is multiplicative for t unless some other term agrees
    with t on every exponent above j and carries a larger j-th exponent."""
    ts = [tuple(t) for t in terms]
    mult = {}
    for t in ts:
        m = set()
        for j in range(1, n + 1):
            beaten = any(
                s[j:] == t[j:] and s[j - 1] > t[j - 1] for s in ts if s != t)
            if not beaten:
                m.add(j)
        mult[t] = frozenset(m)
    return RelDivision.general(n, mult)


def janet_on_slice(n: int, d: int) -> RelDivision:
    """Janet's rule on the full degree-d slice, tagged with the slice degree.
    Coincides with the triangular assignment there."""
    g = janet_general(enumerate_terms(n, d), n)
    return RelDivision.on_slice(n, d, dict(g.mult))


def detect_pommaret(div: RelDivision) -> tuple[int, ...] | None:
    """Variable order making a valid full-slice assignment triangular, or None.

    The assignment is triangular up to renaming exactly when its
    multiplicative sets form a chain under inclusion; the order is then read
    off the pure powers and confirmed by reconstruction.
    """
    if not div.is_full_slice:
        raise InvalidDivisionError("recognition works on full-slice assignments only")
    report = div.validate()
    if not report.valid:
        raise InvalidDivisionError("recognition needs a valid assignment")
    sets = sorted(div.mult.values(), key=lambda m: (len(m), sorted(m)))
    for a, b in zip(sets, sets[1:]):
        if not a <= b:
            return None
    n, d = div.n, div.degree
    def pure(i: int) -> Term:
        return tuple(d if j == i - 1 else 0 for j in range(n))
    order = tuple(sorted(range(1, n + 1), key=lambda i: (len(div.mult[pure(i)]), i)))
    rebuilt = pommaret_on_slice(n, d, order)
    if rebuilt.mult == div.mult:
        return order
    return None
