"""Iterative-compression enumeration, rank 4 by default.

Phase 1 scans vertex subsets of size at least floor(alpha*n), from the
largest size down. If no transversal of size exactly floor(alpha*n)
exists, the scan's minimal transversals are already all of them and are
emitted. Otherwise the first such transversal X anchors phase 2: for each
N inside X (binary-counter order), the hyperedges hit by N are dropped,
the rest lose the vertices X minus N, and an inner engine enumerates the
minimal transversals Y of the projected hypergraph; N union Y is emitted
when it is a minimal transversal of the input. Since a minimal transversal
T forces N = T intersect X, nothing is emitted twice.

Projecting through a transversal X lowers the rank, so the rank-3 engine
serves as the inner engine for rank-4 inputs. alpha tunes only the phase
split, never the emitted set.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

from .hypergraph import Hypergraph, SearchStats, TransversalSink
from .rank3 import enumerate_rank3
from .rankk import enumerate_rankk

#: Phase split minimizing the worst phase on rank-4 inputs.
DEFAULT_ALPHA = 0.66938

InnerEngine = Callable[[Hypergraph, TransversalSink], SearchStats]


@dataclass(frozen=True)
class CompressionConfig:
    """alpha in [0.5, 1]; inner_engine of None picks one from the input rank."""

    alpha: float = DEFAULT_ALPHA
    inner_engine: InnerEngine | None = None

    def __post_init__(self) -> None:
        if not 0.5 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0.5, 1]")


def project(h: Hypergraph, x: frozenset[int], n_sub: frozenset[int]) -> Hypergraph:
    """Drop edges hit by n_sub, strip x-minus-n_sub from the rest.

    The result keeps the vertex universe 1..n; the vertices of x simply end
    up isolated, which no minimal transversal ever uses. When x is a
    transversal the projected rank drops by at least one.
    """
    x = frozenset(x)
    n_sub = frozenset(n_sub)
    if not n_sub <= x:
        raise ValueError("N must be a subset of X")
    for v in x:
        if not 1 <= v <= h.n:
            raise ValueError(f"vertex {v} out of range 1..{h.n}")
    stripped = x - n_sub
    edges = [e - stripped for e in h.edges if not e & n_sub]
    return Hypergraph(h.n, edges)


def find_split(h: Hypergraph, alpha: float = DEFAULT_ALPHA) -> frozenset[int] | None:
    """First transversal of size exactly floor(alpha*n) in lexicographic order."""
    size = math.floor(alpha * h.n)
    for xs in combinations(range(1, h.n + 1), size):
        if h.is_transversal(xs):
            return frozenset(xs)
    return None


def enumerate_compression(
    h: Hypergraph,
    sink: TransversalSink,
    config: CompressionConfig | None = None,
) -> SearchStats:
    """Invoke sink once per minimal transversal of h.

    Stats: nodes counts phase-1 subsets scanned plus inner-engine nodes;
    leaves aggregates inner leaves, or counts the scanned subsets when the
    run never leaves phase 1 (each subset check halts there); outputs
    counts emissions.
    """
    cfg = config or CompressionConfig()
    stats = SearchStats()
    size = math.floor(cfg.alpha * h.n)

    x: frozenset[int] | None = None
    for xs in combinations(range(1, h.n + 1), size):
        stats.nodes += 1
        if h.is_transversal(xs):
            x = frozenset(xs)
            break

    if x is None:
        # Minimum transversal size exceeds `size`: every minimal transversal
        # sits in the scanned range.
        for s in range(h.n, size - 1, -1):
            for xs in combinations(range(1, h.n + 1), s):
                stats.nodes += 1
                stats.leaves += 1
                if h.is_minimal_transversal(xs):
                    sink(frozenset(xs))
                    stats.outputs += 1
        return stats

    inner = cfg.inner_engine
    if inner is None:
        inner = enumerate_rank3 if h.rank() <= 4 else enumerate_rankk

    anchor = sorted(x)
    for counter in range(1 << len(anchor)):
        n_sub = frozenset(anchor[j] for j in range(len(anchor)) if counter >> j & 1)
        projected = project(h, x, n_sub)

        def emit(y: frozenset[int], chosen: frozenset[int] = n_sub) -> None:
            t = chosen | y
            if h.is_minimal_transversal(t):
                sink(t)
                stats.outputs += 1

        inner_stats = inner(projected, emit)
        stats.nodes += inner_stats.nodes
        stats.leaves += inner_stats.leaves
        stats.max_depth = max(stats.max_depth, inner_stats.max_depth)
    return stats
