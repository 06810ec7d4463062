"""Branch-and-reduce enumerator for hypergraphs of rank at most 3.

Rule pipeline, first match wins:

  R0_0  an empty edge remains            halt, emit nothing
  R0_1  no edges remain                  halt, emit the partial set if minimal
  R1_0  a vertex of degree 0             discard it
  R1_1  an edge inside a size-3 edge     drop the superset
  R1_2  a size-1 edge {v}                select v
  R2_*  a degree-1 vertex v, edge e      branch on v's membership
  R3_*  a size-2 edge                    branch on the busiest small-edge vertex
  R4_*  3-uniform, all degrees >= 2      branch on a maximum-degree vertex

Select-branches discard the companion vertices whose selection would leave
the pivot without a private edge; those transversals cannot be minimal, so
the branches stay a partition and no set is emitted twice. Emission happens
only at R0_1, after a minimality check against the untouched input, because
the partial set reaching an edge-free state need not be minimal.

All pivots are deterministic: smallest vertex id, then the canonical edge
order. Every recursive call shrinks |V| + |E|, which bounds the depth;
`check_measure` additionally re-validates the weighted-measure inequality
at every node that spawns children.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .analysis import DEFAULT_WEIGHTS, Weights, measure_parts
from .bitsets import edge_key, iter_bits, set_of
from .errors import SearchInvariantError, UnsupportedInstanceError
from .hypergraph import Hypergraph, Instance, SearchStats, TransversalSink

#: Absolute tolerance on sums of 2**mu in the measure re-validation.
MEASURE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RuleId:
    """First applicable rule plus its chosen pivots.

    Field use by tag: R1_0/R4_1 carry v; R1_1 carries e (the dropped
    superset); R1_2 carries v and e; R2_* carry v, e and the companions
    u/w; R3_* carry v, e = {v, u1} and the size-2 partners; R4_2 carries
    v and u; R4_3 carries v, both edges, and their split vertices.
    """

    tag: str
    v: int | None = None
    e: frozenset[int] | None = None
    e2: frozenset[int] | None = None
    u: int | None = None
    w: int | None = None
    u1: int | None = None
    u2: int | None = None
    u3: int | None = None
    w1: int | None = None
    w2: int | None = None
    partners: tuple[int, ...] = field(default=())


def next_rule(inst: Instance) -> RuleId:
    """First applicable rule for the working state, with deterministic pivots."""
    edges = inst.emasks
    for e in edges:
        if e.bit_count() > 3:
            raise UnsupportedInstanceError("working edge of size > 3; dispatch to the general engine")

    if 0 in edges:
        return RuleId("R0_0")
    if not edges:
        return RuleId("R0_1")

    union = 0
    for e in edges:
        union |= e
    isolated = inst.vmask & ~union
    if isolated:
        return RuleId("R1_0", v=(isolated & -isolated).bit_length() - 1)

    smalls = [e for e in edges if e.bit_count() < 3]
    if smalls:
        dropped = None
        for e2 in edges:
            if e2.bit_count() == 3 and any(s & e2 == s for s in smalls):
                if dropped is None or edge_key(e2) < edge_key(dropped):
                    dropped = e2
        if dropped is not None:
            return RuleId("R1_1", e=set_of(dropped))

    units = [e for e in edges if e.bit_count() == 1]
    if units:
        em = min(units)  # single-bit masks sort like their vertex ids
        return RuleId("R1_2", v=em.bit_length() - 1, e=set_of(em))

    deg: dict[int, int] = {}
    for e in edges:
        for v in iter_bits(e):
            deg[v] = deg.get(v, 0) + 1

    ones = [v for v, d in deg.items() if d == 1]
    if ones:
        v = min(ones)
        vb = 1 << v
        em = next(e for e in edges if e & vb)
        others = sorted(iter_bits(em & ~vb))
        es = set_of(em)
        if len(others) == 1:
            return RuleId("R2_1", v=v, e=es, u=others[0])
        if deg[others[0]] == 1 and deg[others[1]] == 1:
            return RuleId("R2_2", v=v, e=es, u=others[0], w=others[1])
        u = min(x for x in others if deg[x] >= 2)
        w = others[1] if others[0] == u else others[0]
        return RuleId("R2_3", v=v, e=es, u=u, w=w)

    twos = [e for e in edges if e.bit_count() == 2]
    if twos:
        d2: dict[int, int] = {}
        for e in twos:
            for v in iter_bits(e):
                d2[v] = d2.get(v, 0) + 1
        v = max(d2, key=lambda x: (d2[x], deg[x], -x))
        vb = 1 << v
        partners = sorted((e ^ vb).bit_length() - 1 for e in twos if e & vb)
        es = frozenset((v, partners[0]))
        if d2[v] == 1:
            return RuleId("R3_1", v=v, e=es, u1=partners[0])
        if d2[v] == 2:
            return RuleId("R3_2", v=v, e=es, u1=partners[0], u2=partners[1])
        return RuleId(
            "R3_3", v=v, e=es,
            u1=partners[0], u2=partners[1], u3=partners[2],
            partners=tuple(partners),
        )

    v = max(deg, key=lambda x: (deg[x], -x))
    if deg[v] >= 3:
        return RuleId("R4_1", v=v)
    vb = 1 << v
    ea, eb = sorted((e for e in edges if e & vb), key=edge_key)
    shared = ea & eb & ~vb
    if shared:
        return RuleId("R4_2", v=v, u=(shared & -shared).bit_length() - 1)
    a = sorted(iter_bits(ea & ~vb))
    b = sorted(iter_bits(eb & ~vb))
    return RuleId("R4_3", v=v, e=set_of(ea), e2=set_of(eb), u1=a[0], w1=a[1], u2=b[0], w2=b[1])


def apply_rule(inst: Instance, rule: RuleId, minimality_discards: bool = True) -> list[Instance]:
    """Child instances of a rule, in branch order; empty for halting rules.

    With minimality_discards=False the companion discards of R2_1, R2_3,
    R4_2 and R4_3 are skipped (reference variant for testing; the emitted
    set is unchanged, only the tree grows).
    """
    t = rule.tag
    if t in ("R0_0", "R0_1"):
        return []
    if t == "R1_0":
        return [inst.discard(rule.v)]
    if t == "R1_1":
        return [inst.drop_edge(rule.e)]
    if t == "R1_2":
        return [inst.select(rule.v)]
    if t == "R2_1":
        b1 = inst.select(rule.v)
        if minimality_discards:
            b1 = b1.discard(rule.u)
        return [b1, inst.discard(rule.v).select(rule.u)]
    if t == "R2_2":
        members = sorted(rule.e)
        out = []
        for x in members:
            child = inst.select(x)
            for y in members:
                if y != x:
                    child = child.discard(y)
            out.append(child)
        return out
    if t == "R2_3":
        b1 = inst.select(rule.v)
        if minimality_discards:
            b1 = b1.discard(rule.u).discard(rule.w)
        return [b1, inst.discard(rule.v)]
    if t == "R3_1":
        return [inst.select(rule.v), inst.discard(rule.v).select(rule.u1)]
    if t == "R3_2":
        return [inst.select(rule.v), inst.discard(rule.v).select(rule.u1).select(rule.u2)]
    if t == "R3_3":
        b2 = inst.discard(rule.v)
        for u in rule.partners:
            b2 = b2.select(u)
        return [inst.select(rule.v), b2]
    if t == "R4_1":
        return [inst.select(rule.v), inst.discard(rule.v)]
    if t == "R4_2":
        b1 = inst.select(rule.v)
        if minimality_discards:
            b1 = b1.discard(rule.u)
        return [b1, inst.discard(rule.v)]
    if t == "R4_3":
        b1 = inst.select(rule.v).select(rule.u1)
        if minimality_discards:
            b1 = b1.discard(rule.u2).discard(rule.w2)
        return [b1, inst.select(rule.v).discard(rule.u1), inst.discard(rule.v)]
    raise ValueError(f"unknown rule tag {t!r}")


def enumerate_rank3(
    h: Hypergraph,
    sink: TransversalSink,
    *,
    minimality_discards: bool = True,
    check_measure: bool = False,
    weights: Weights | None = None,
) -> SearchStats:
    """Invoke sink once per minimal transversal of h, in deterministic DFS order.

    check_measure validates, at every node with children, that the weighted
    measures satisfy sum_i 2**mu(child_i) <= 2**mu(parent) + tolerance,
    using `weights` (default: the verified table).
    """
    if h.rank() > 3:
        raise UnsupportedInstanceError(f"rank {h.rank()} input; this engine handles rank <= 3")
    mweights = (weights or DEFAULT_WEIGHTS) if check_measure else None
    stats = SearchStats()
    root = Instance.from_hypergraph(h)
    _bump_recursion_limit(root.eta())
    _search(root, sink, stats, 0, minimality_discards, mweights)
    return stats


def _search(
    inst: Instance,
    sink: TransversalSink,
    stats: SearchStats,
    depth: int,
    minimality_discards: bool,
    mweights: Weights | None,
) -> None:
    stats.nodes += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    rule = next_rule(inst)
    if rule.tag == "R0_0":
        stats.leaves += 1
        return
    if rule.tag == "R0_1":
        stats.leaves += 1
        s = inst.partial
        if inst.original.is_minimal_transversal(s):
            sink(s)
            stats.outputs += 1
        return
    children = apply_rule(inst, rule, minimality_discards)
    eta = inst.eta()
    for child in children:
        if child.eta() > eta - 1:
            raise SearchInvariantError(f"|V|+|E| did not decrease at {rule.tag}")
    if mweights is not None:
        parent = 2.0 ** _measure_of(inst, mweights)
        total = sum(2.0 ** _measure_of(c, mweights) for c in children)
        if total > parent + MEASURE_TOLERANCE:
            raise SearchInvariantError(
                f"measure inequality violated at {rule.tag}: {total!r} > {parent!r}"
            )
    for child in children:
        _search(child, sink, stats, depth + 1, minimality_discards, mweights)


def _measure_of(inst: Instance, w: Weights) -> float:
    small = 0
    deg = dict.fromkeys(iter_bits(inst.vmask), 0)
    for e in inst.emasks:
        if e.bit_count() <= 2:
            small += 1
        for v in iter_bits(e):
            deg[v] += 1
    return measure_parts(deg.values(), small, w)


def _bump_recursion_limit(eta: int) -> None:
    want = 4 * eta + 1000
    if sys.getrecursionlimit() < want:
        sys.setrecursionlimit(want)
