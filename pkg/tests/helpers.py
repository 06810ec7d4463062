"""Shared test utilities: canonical forms, engine runners, instance decks."""

import math

import transversals as tv


def canon(transversals):
    """Canonical collection form: ascending tuples, sorted lexicographically."""
    return sorted(tuple(sorted(t)) for t in transversals)


def run(engine, h, **kwargs):
    out = []
    engine(h, out.append, **kwargs)
    return canon(out)


def emitted(engine, h, **kwargs):
    """Emission order as produced, not canonicalized."""
    out = []
    engine(h, out.append, **kwargs)
    return [tuple(sorted(t)) for t in out]


def oracle(h):
    return canon(tv.brute_force_enumerate(h))


def minimal_by_definition(h, s):
    """Subset-definition oracle: s is a transversal and no proper subset is."""
    s = frozenset(s)
    if not h.is_transversal(s):
        return False
    return all(not h.is_transversal(s - {v}) for v in s)


def random_instance(seed, kmin=2, kmax=6, nmin=6, nmax=12, mmax=24):
    k = kmin + seed % (kmax - kmin + 1)
    n = nmin + (seed // (kmax - kmin + 1)) % (nmax - nmin + 1)
    n = max(n, k)
    available = sum(math.comb(n, s) for s in range(1, k + 1))
    m = min(4 + (seed * 7) % (mmax - 3), available)
    return tv.gen_random(tv.GeneratorSpec("random", k=k, n=n, m=m, seed=seed))


def instance_deck(count, **kwargs):
    return [random_instance(seed, **kwargs) for seed in range(count)]
