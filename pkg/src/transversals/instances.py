"""Brute-force oracle and instance generators for differential testing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .bitsets import edge_key, set_of
from .errors import UnsupportedInstanceError
from .hypergraph import Hypergraph

#: Subset-scan guard; 2^25 subsets is the most the oracle will ever walk.
ORACLE_MAX_N = 25


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for `generate`; m and seed apply to the random kind only."""

    kind: str  # "lower_bound" | "triangles" | "random"
    k: int = 2
    n: int = 0
    m: int | None = None
    seed: int | None = None


def brute_force_enumerate(h: Hypergraph) -> list[frozenset[int]]:
    """All minimal transversals by scanning every vertex subset.

    Returns the canonically sorted collection (ascending vertex lists,
    ordered lexicographically). Independent of the branching engines; this
    is the ground truth they are tested against.
    """
    if h.n > ORACLE_MAX_N:
        raise UnsupportedInstanceError(f"n={h.n} exceeds the brute-force guard ({ORACLE_MAX_N})")
    masks = h.edge_masks()
    found: list[int] = []
    for s in range(1 << h.n):
        smask = s << 1
        priv = 0
        ok = True
        for em in masks:
            x = em & smask
            if not x:
                ok = False
                break
            if not x & (x - 1):
                priv |= x
        if ok and not smask & ~priv:
            found.append(smask)
    found.sort(key=edge_key)
    return [set_of(m) for m in found]


def gen_lower_bound(k: int, n: int) -> Hypergraph:
    """Disjoint blocks of 2k-1 vertices carrying all their k-subsets as edges.

    floor(n / (2k-1)) blocks on consecutive vertex ranges, then isolated
    vertices up to exactly n. Every k-subset of a block is a minimal
    transversal, so the whole hypergraph has C(2k-1, k)^blocks of them.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    span = 2 * k - 1
    edges = []
    for block in range(n // span):
        base = block * span
        edges.extend(combinations(range(base + 1, base + span + 1), k))
    return Hypergraph(n, edges)


def gen_triangles(n: int) -> Hypergraph:
    """Disjoint triangles (the k=2 packed-block family) plus isolated leftovers."""
    return gen_lower_bound(2, n)


class SplitMix64:
    """SplitMix64 stream; the fixed PRNG behind reproducible random instances.

    next_u64: state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    return z ^ (z >> 31); all arithmetic mod 2^64.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) as next_u64() % bound."""
        return self.next_u64() % bound


def gen_random(spec: GeneratorSpec) -> Hypergraph:
    """m distinct edges, each a uniform subset of size 1..k, from a seeded stream.

    Draw procedure (fixed for reproducibility): size s = 1 + below(k); then
    vertices 1 + below(n) until s distinct are collected; an edge equal to an
    earlier one is thrown away and redrawn. Identical spec, identical result.
    """
    if spec.kind != "random":
        raise ValueError(f"not a random spec: {spec.kind!r}")
    if spec.k < 1:
        raise ValueError("k must be at least 1")
    if spec.n < spec.k:
        raise ValueError("need n >= k so that every edge size 1..k fits")
    if spec.m is None or spec.seed is None:
        raise ValueError("random generation needs m and seed")
    available = sum(math.comb(spec.n, s) for s in range(1, spec.k + 1))
    if spec.m > available:
        raise ValueError(f"m={spec.m} infeasible: only {available} distinct edges of size 1..{spec.k} exist")
    rng = SplitMix64(spec.seed)
    seen: set[frozenset[int]] = set()
    edges: list[frozenset[int]] = []
    while len(edges) < spec.m:
        size = 1 + rng.below(spec.k)
        verts: set[int] = set()
        while len(verts) < size:
            verts.add(1 + rng.below(spec.n))
        e = frozenset(verts)
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(spec.n, edges)


def generate(spec: GeneratorSpec) -> Hypergraph:
    if spec.kind == "lower_bound":
        return gen_lower_bound(spec.k, spec.n)
    if spec.kind == "triangles":
        return gen_triangles(spec.n)
    if spec.kind == "random":
        return gen_random(spec)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
