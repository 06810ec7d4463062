"""General enumerator of minimal transversals, correct for every rank.

Rule order: halt on an edge-free state (emit if minimal against the
untouched input) or on an empty edge; then reductions (isolated vertex,
subsumed edge, unit edge); then the degree-1 branch; otherwise the
smallest-edge branch. In the smallest-edge branch over e = v_1..v_|e|
(vertices shared with the overlap partner first), branch i discards
v_1..v_{i-1} and selects v_i, so branch i enumerates exactly the minimal
transversals whose first vertex along that ordering is v_i.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .bitsets import edge_key, iter_bits, set_of
from .errors import SearchInvariantError
from .hypergraph import Hypergraph, Instance, SearchStats, TransversalSink


@dataclass(frozen=True)
class B2Choice:
    """Smallest-edge branching data: e, its overlap partner, and the branch order."""

    e: frozenset[int]
    e_prime: frozenset[int]
    ordering: tuple[int, ...]


def _subsumed_superset(edges: frozenset[int]) -> int | None:
    """Canonically smallest edge that strictly contains another edge."""
    best = None
    for e2 in edges:
        for e1 in edges:
            if e1 != e2 and e1 & e2 == e1:
                if best is None or edge_key(e2) < edge_key(best):
                    best = e2
                break
    return best


def _degrees(edges: frozenset[int]) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in edges:
        for v in iter_bits(e):
            deg[v] = deg.get(v, 0) + 1
    return deg


def _choose_b2(edges: frozenset[int]) -> B2Choice:
    min_size = min(e.bit_count() for e in edges)
    e = min((x for x in edges if x.bit_count() == min_size), key=edge_key)
    partners = [f for f in edges if f != e and f & e]
    if not partners:
        raise ValueError("smallest edge overlaps no other edge; an earlier rule applies")
    best = max((f & e).bit_count() for f in partners)
    e_prime = min((f for f in partners if (f & e).bit_count() == best), key=edge_key)
    shared = sorted(iter_bits(e & e_prime))
    private = sorted(iter_bits(e & ~e_prime))
    return B2Choice(set_of(e), set_of(e_prime), tuple(shared + private))


def choose_b2(inst: Instance) -> B2Choice:
    """Pick the smallest edge and its maximum-overlap partner, deterministically.

    The engine reaches this branch only once every earlier rule is
    inapplicable; under those preconditions a partner always exists, since
    degrees of at least 2 make every edge intersect another one. Only
    well-definedness is validated here, so degenerate states raise
    ValueError instead of silently picking a partner-less edge.
    """
    edges = inst.emasks
    if not edges:
        raise ValueError("no edges; the halting rule applies")
    if 0 in edges:
        raise ValueError("empty edge; the backtracking rule applies")
    return _choose_b2(edges)


def enumerate_rankk(
    h: Hypergraph,
    sink: TransversalSink,
    *,
    minimality_discards: bool = True,
) -> SearchStats:
    """Invoke sink once per minimal transversal of h; accepts any rank.

    minimality_discards=False skips the companion discards of the degree-1
    select branch (testing variant; same emitted set, larger tree).
    """
    stats = SearchStats()
    root = Instance.from_hypergraph(h)
    _bump_recursion_limit(root.eta())
    _search(root, sink, stats, 0, minimality_discards)
    return stats


def _search(
    inst: Instance,
    sink: TransversalSink,
    stats: SearchStats,
    depth: int,
    minimality_discards: bool,
) -> None:
    stats.nodes += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    edges = inst.emasks

    if not edges:  # H1
        stats.leaves += 1
        s = inst.partial
        if inst.original.is_minimal_transversal(s):
            sink(s)
            stats.outputs += 1
        return
    if 0 in edges:  # H2
        stats.leaves += 1
        return

    union = 0
    for e in edges:
        union |= e
    isolated = inst.vmask & ~union

    children: list[Instance]
    if isolated:  # R1
        children = [inst.discard((isolated & -isolated).bit_length() - 1)]
    else:
        dropped = _subsumed_superset(edges)
        if dropped is not None:  # R2
            children = [inst.drop_edge(set_of(dropped))]
        else:
            units = [e for e in edges if e.bit_count() == 1]
            if units:  # R3
                children = [inst.select(min(units).bit_length() - 1)]
            else:
                deg = _degrees(edges)
                ones = [v for v, d in deg.items() if d == 1]
                if ones:  # B1
                    v = min(ones)
                    vb = 1 << v
                    em = next(e for e in edges if e & vb)
                    selected = inst.select(v)
                    if minimality_discards:
                        for x in sorted(iter_bits(em & ~vb)):
                            selected = selected.discard(x)
                    children = [inst.discard(v), selected]
                else:  # B2
                    choice = _choose_b2(edges)
                    children = []
                    current = inst
                    for v in choice.ordering:
                        children.append(current.select(v))
                        current = current.discard(v)

    eta = inst.eta()
    for child in children:
        if child.eta() > eta - 1:
            raise SearchInvariantError("|V|+|E| did not decrease")
    for child in children:
        _search(child, sink, stats, depth + 1, minimality_discards)


def _bump_recursion_limit(eta: int) -> None:
    want = 4 * eta + 1000
    if sys.getrecursionlimit() < want:
        sys.setrecursionlimit(want)
