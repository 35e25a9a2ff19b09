"""Membership-propagation graphs over the support of a valid assignment.

All three constructions put an edge t -> s when membership of t (in an ideal
generated inside the support) forces membership of s, or dually.  They differ
in which forcing pairs become edges; only reachability is contractual for the
generalized construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .division import InvalidDivisionError, RelDivision
from .terms import Term, deglex_key, format_term, term_lcm, var_names

Edge = tuple[Term, Term, int | None]


@dataclass(frozen=True)
class LabeledDigraph:
    n: int
    nodes: tuple[Term, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        nodeset = set(self.nodes)
        if len(nodeset) != len(self.nodes):
            raise ValueError("duplicate nodes")
        for tail, head, label in self.edges:
            if tail == head:
                raise ValueError(f"self loop at {format_term(tail, self.n)}")
            if tail not in nodeset or head not in nodeset:
                raise ValueError("edge endpoint outside the node set")
            if label is not None and not 1 <= label <= self.n:
                raise ValueError(f"bad edge label {label}")
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes, key=deglex_key)))

    def successors(self) -> dict[Term, set[Term]]:
        out: dict[Term, set[Term]] = {t: set() for t in self.nodes}
        for tail, head, _ in self.edges:
            out[tail].add(head)
        return out

    def predecessors(self) -> dict[Term, set[Term]]:
        out: dict[Term, set[Term]] = {t: set() for t in self.nodes}
        for tail, head, _ in self.edges:
            out[head].add(tail)
        return out

    def edge_pairs(self) -> frozenset[tuple[Term, Term]]:
        return frozenset((tail, head) for tail, head, _ in self.edges)

    def _sorted_edges(self) -> list[Edge]:
        return sorted(
            self.edges,
            key=lambda e: (deglex_key(e[0]), deglex_key(e[1]), e[2] if e[2] else 0),
        )

    def to_dot(self, name: str = "division") -> str:
        names = var_names(self.n)
        lines = [f"digraph {name} {{"]
        for t in self.nodes:
            lines.append(f'  "{format_term(t, self.n)}";')
        for tail, head, label in self._sorted_edges():
            attr = f' [label="{names[label - 1]}"]' if label is not None else ""
            lines.append(
                f'  "{format_term(tail, self.n)}" -> "{format_term(head, self.n)}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        names = var_names(self.n)
        return {
            "edges": [
                [
                    format_term(tail, self.n),
                    format_term(head, self.n),
                    names[label - 1] if label is not None else None,
                ]
                for tail, head, label in self._sorted_edges()
            ]
        }


def _walk(adjacency: dict[Term, set[Term]], seed) -> frozenset[Term]:
    todo = list(seed)
    for t in todo:
        if t not in adjacency:
            raise LookupError(f"seed term {t} is not a node")
    seen = set(todo)
    while todo:
        for nxt in adjacency[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


def reachable_forward(g: LabeledDigraph, seed) -> frozenset[Term]:
    """Nodes reachable from the seed along edge direction, seed included."""
    return _walk(g.successors(), seed)


def reachable_backward(g: LabeledDigraph, seed) -> frozenset[Term]:
    """Nodes from which the seed can be reached, seed included."""
    return _walk(g.predecessors(), seed)


def reachability_equivalent(g1: LabeledDigraph, g2: LabeledDigraph) -> bool:
    """Same node set and same forward-reachable set from every node."""
    if set(g1.nodes) != set(g2.nodes):
        raise ValueError("graphs live on different node sets")
    return all(
        reachable_forward(g1, [t]) == reachable_forward(g2, [t]) for t in g1.nodes)


def _require_valid(div: RelDivision, full_slice: bool) -> None:
    if full_slice and not div.is_full_slice:
        raise InvalidDivisionError("this construction needs a full-slice assignment")
    if not div.validate().valid:
        raise InvalidDivisionError("this construction needs a valid assignment")


def ufnarovsky_graph(div: RelDivision) -> LabeledDigraph:
    """Edge t ->x_j s when multiplying s by its non-multiplicative x_j lands
    in the cone of t."""
    _require_valid(div, full_slice=True)
    edges = set()
    for s in div.support:
        for j in sorted(div.nonmultiplicative_set(s)):
            w = tuple(e + (1 if i == j - 1 else 0) for i, e in enumerate(s))
            t = div.involutive_divisor(w)
            if t is None:
                raise InvalidDivisionError(
                    f"uncovered product {format_term(w, div.n)}")
            edges.add((t, s, j))
    return LabeledDigraph(div.n, div.support, frozenset(edges))


def redundant_graph(div: RelDivision) -> LabeledDigraph:
    """Unlabeled edge t -> s for every ordered pair whose lcm falls in the
    cone of t."""
    _require_valid(div, full_slice=False)
    edges = set()
    for t in div.support:
        for s in div.support:
            if s != t and div.x_of(s, t) == t:
                edges.add((t, s, None))
    return LabeledDigraph(div.n, div.support, frozenset(edges))


def generalized_graph(div: RelDivision) -> LabeledDigraph:
    """Subgraph of the redundant graph with the same reachability.

    Candidate pairs are scanned in deg-lex order on (t, s); an edge is kept
    only when its head is not already reachable from its tail.  Minimality is
    not promised, only reachability equivalence.
    """
    _require_valid(div, full_slice=True)
    succ: dict[Term, set[Term]] = {t: set() for t in div.support}

    def reaches(a: Term, b: Term) -> bool:
        todo, seen = [a], {a}
        while todo:
            for nxt in succ[todo.pop()]:
                if nxt == b:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return False

    edges = set()
    for t in div.support:
        for s in div.support:
            if s == t or div.x_of(s, t) != t:
                continue
            if not reaches(t, s):
                succ[t].add(s)
                edges.add((t, s, None))
    return LabeledDigraph(div.n, div.support, frozenset(edges))


def graph_from_edge_list(n: int, nodes, edges) -> LabeledDigraph:
    """Build a graph from (tail, head[, label]) triples of terms."""
    es = set()
    for e in edges:
        tail, head = e[0], e[1]
        label = e[2] if len(e) > 2 else None
        es.add((tuple(tail), tuple(head), label))
    return LabeledDigraph(n, tuple(tuple(t) for t in nodes), frozenset(es))
