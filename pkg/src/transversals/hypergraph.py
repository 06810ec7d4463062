"""Hypergraph data model, text I/O, and the primitives shared by all engines.

Vertices are the integers 1..n. Edges have set semantics: duplicates
collapse, and every edge is kept in ascending vertex order, with edges
ordered lexicographically (the canonical edge order used for tie-breaking
everywhere else in the package).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import NamedTuple

from .bitsets import mask_of, set_of
from .errors import ParseError

#: Consumer invoked exactly once per enumerated minimal transversal.
TransversalSink = Callable[[frozenset[int]], None]


class DegreeProfile(NamedTuple):
    """Degree counts of one vertex: total, by edge size 1..3, small, neighbors."""

    d: int
    d1: int
    d2: int
    d3: int
    d_le2: int
    neighbors: frozenset[int]


class Hypergraph:
    """Immutable hypergraph on the vertex universe 1..n.

    The empty edge is legal (no set hits it). Isolated vertices are legal.
    Values are safe to share between concurrent enumeration runs.
    """

    __slots__ = ("n", "edges", "_masks")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = {frozenset(int(v) for v in e) for e in edges}
        for e in canon:
            for v in e:
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} out of range 1..{n}")
        self.n = n
        self.edges: tuple[frozenset[int], ...] = tuple(sorted(canon, key=sorted))
        self._masks: tuple[int, ...] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        shown = [sorted(e) for e in self.edges]
        return f"Hypergraph({self.n}, {shown})"

    def rank(self) -> int:
        """Maximum edge cardinality (0 when there are no edges)."""
        return max((len(e) for e in self.edges), default=0)

    def edge_masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(mask_of(e) for e in self.edges)
        return self._masks

    def degree_profile(self, v: int) -> DegreeProfile:
        """Counts over current edges; neighbors excludes v itself."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        d = d1 = d2 = d3 = 0
        nb: set[int] = set()
        for e in self.edges:
            if v in e:
                d += 1
                s = len(e)
                if s == 1:
                    d1 += 1
                elif s == 2:
                    d2 += 1
                elif s == 3:
                    d3 += 1
                nb.update(e)
        nb.discard(v)
        return DegreeProfile(d, d1, d2, d3, d1 + d2, frozenset(nb))

    def _vertex_mask(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")
            m |= 1 << v
        return m

    def is_transversal(self, s: Iterable[int]) -> bool:
        sm = self._vertex_mask(s)
        return all(e & sm for e in self.edge_masks())

    def is_minimal_transversal(self, s: Iterable[int]) -> bool:
        """True iff s hits every edge and every member of s has a private edge.

        A private edge of v is an edge whose only vertex in s is v. The
        private-edge criterion is equivalent to "no proper subset of s is a
        transversal" and needs one pass over the edges.
        """
        sm = self._vertex_mask(s)
        priv = 0
        for e in self.edge_masks():
            x = e & sm
            if not x:
                return False
            if not x & (x - 1):
                priv |= x
        return not sm & ~priv


class Instance:
    """Working state of one enumeration run.

    `vertices` are still eligible for the partial solution `partial`,
    and `working_edges` are the hyperedges not yet hit. The partial
    solution and the working vertex set never overlap. Instances are
    persistent values: select/discard return new instances.
    """

    __slots__ = ("original", "vmask", "emasks", "smask")

    def __init__(
        self,
        original: Hypergraph,
        vertices: Iterable[int] | None = None,
        edges: Iterable[Iterable[int]] | None = None,
        partial: Iterable[int] = (),
    ) -> None:
        self.original = original
        self.smask = original._vertex_mask(partial)
        if vertices is None:
            self.vmask = original._vertex_mask(range(1, original.n + 1)) & ~self.smask
        else:
            self.vmask = original._vertex_mask(vertices)
            if self.vmask & self.smask:
                raise ValueError("working vertices and partial solution overlap")
        if edges is None:
            self.emasks = frozenset(original.edge_masks())
        else:
            self.emasks = frozenset(mask_of(e) for e in edges)
        for em in self.emasks:
            if em & ~self.vmask:
                raise ValueError("working edge contains a non-working vertex")

    @classmethod
    def from_hypergraph(cls, h: Hypergraph) -> Instance:
        return cls(h)

    def _spawn(self, vmask: int, emasks: frozenset[int], smask: int) -> Instance:
        inst = object.__new__(Instance)
        inst.original = self.original
        inst.vmask = vmask
        inst.emasks = emasks
        inst.smask = smask
        return inst

    @property
    def vertices(self) -> frozenset[int]:
        return set_of(self.vmask)

    @property
    def working_edges(self) -> frozenset[frozenset[int]]:
        return frozenset(set_of(e) for e in self.emasks)

    @property
    def partial(self) -> frozenset[int]:
        return set_of(self.smask)

    def eta(self) -> int:
        """Progress measure |V| + |E|; strictly decreases down the search tree."""
        return self.vmask.bit_count() + len(self.emasks)

    def select(self, v: int) -> Instance:
        """Commit v: drop every edge containing v, move v into the partial set."""
        vb = 1 << v
        if not self.vmask & vb:
            raise ValueError(f"vertex {v} is not in the working set")
        emasks = frozenset(e for e in self.emasks if not e & vb)
        return self._spawn(self.vmask ^ vb, emasks, self.smask | vb)

    def discard(self, v: int) -> Instance:
        """Forbid v: remove it from the working set and shrink its edges."""
        vb = 1 << v
        if not self.vmask & vb:
            raise ValueError(f"vertex {v} is not in the working set")
        keep = ~vb
        return self._spawn(self.vmask ^ vb, frozenset(e & keep for e in self.emasks), self.smask)

    def drop_edge(self, edge: Iterable[int]) -> Instance:
        """Remove one working edge (used by the subsumption reductions)."""
        em = mask_of(edge)
        if em not in self.emasks:
            raise ValueError("no such working edge")
        return self._spawn(self.vmask, self.emasks - {em}, self.smask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.vmask == other.vmask
            and self.emasks == other.emasks
            and self.smask == other.smask
            and self.original == other.original
        )

    def __hash__(self) -> int:
        return hash((self.vmask, self.emasks, self.smask))

    def __repr__(self) -> str:
        edges = sorted(sorted(set_of(e)) for e in self.emasks)
        return f"Instance(V={sorted(self.vertices)}, E={edges}, S={sorted(self.partial)})"


@dataclass
class SearchStats:
    """Counters for one run; leaves <= nodes and outputs <= leaves throughout."""

    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    outputs: int = 0


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the text format: comments (c/#), one `p hg <n> <m>` header, m edge lines.

    Each edge line is a whitespace-separated list of vertex ids; a blank
    line inside the edge block denotes the empty edge. Duplicate edges
    collapse. Errors report 1-based line numbers.
    """
    n = m = 0
    header_seen = False
    edges: list[frozenset[int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        stripped = raw.strip()
        if stripped.startswith(("c", "#")):
            continue
        if not header_seen:
            if not stripped:
                continue
            toks = stripped.split()
            if len(toks) != 4 or toks[0] != "p" or toks[1] != "hg":
                raise ParseError("expected header 'p hg <n> <m>'", lineno)
            try:
                n, m = int(toks[2]), int(toks[3])
            except ValueError:
                raise ParseError(f"non-integer token in header: {stripped!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("vertex and edge counts must be non-negative", lineno)
            header_seen = True
            continue
        if len(edges) < m:
            verts = []
            for tok in raw.split():
                try:
                    v = int(tok)
                except ValueError:
                    raise ParseError(f"non-integer token {tok!r}", lineno) from None
                if not 1 <= v <= n:
                    raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
                verts.append(v)
            edges.append(frozenset(verts))
        elif stripped:
            raise ParseError("unexpected content after the last edge", lineno)
    if not header_seen:
        raise ParseError("missing 'p hg <n> <m>' header")
    if len(edges) < m:
        raise ParseError(f"expected {m} edge lines, found {len(edges)}", last_line)
    return Hypergraph(n, edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    """Render in the text format accepted by parse_hypergraph."""
    lines = [f"p hg {h.n} {len(h.edges)}"]
    lines.extend(" ".join(map(str, sorted(e))) for e in h.edges)
    return "\n".join(lines) + "\n"


def relabel(h: Hypergraph, perm: dict[int, int]) -> Hypergraph:
    """Apply a vertex permutation (a bijection on 1..n) to every edge."""
    if sorted(perm) != list(range(1, h.n + 1)) or sorted(perm.values()) != list(range(1, h.n + 1)):
        raise ValueError("perm must be a bijection on 1..n")
    return Hypergraph(h.n, [[perm[v] for v in e] for e in h.edges])
