"""Multigraph model, text ingestion and the reference orientation.

Vertices are 1-based in every text format and 0-based in memory.  The
stored order of the edge list is significant: edge ``e`` stored as
``(u, v)`` is oriented ``u -> v`` in the reference orientation, and all
flip parities and polynomial signs are measured against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .errors import GraphFormatError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices ``0..n-1``; loops and parallel edges allowed."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_one_based(cls, n: int, edges: Iterable[Edge]) -> "Multigraph":
        return cls(n, tuple((u - 1, v - 1) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def reversed_edge(self, e: int) -> "Multigraph":
        """Copy with the stored pair of edge ``e`` swapped."""
        edges = list(self.edges)
        u, v = edges[e]
        edges[e] = (v, u)
        return Multigraph(self.n, tuple(edges))

    def relabeled(self, perm: Sequence[int]) -> "Multigraph":
        """Copy with vertex ``i`` renamed ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Multigraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Orientation:
    """Per-edge reversal flags relative to the reference orientation."""

    graph: Multigraph
    flips: Tuple[bool, ...]

    def __post_init__(self):
        flips = tuple(bool(f) for f in self.flips)
        if len(flips) != self.graph.m:
            raise ValueError(f"expected {self.graph.m} flips, got {len(flips)}")
        object.__setattr__(self, "flips", flips)

    @classmethod
    def from_mask(cls, graph: Multigraph, mask: int) -> "Orientation":
        """Bit ``e`` of ``mask`` reverses edge ``e``."""
        return cls(graph, tuple((mask >> e) & 1 for e in range(graph.m)))

    @classmethod
    def reference(cls, graph: Multigraph) -> "Orientation":
        return cls(graph, (False,) * graph.m)

    def arcs(self):
        """Directed (tail, head) pairs in edge order."""
        for (u, v), f in zip(self.graph.edges, self.flips):
            yield (v, u) if f else (u, v)


# -- text formats ---------------------------------------------------------

def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        yield lineno, raw.strip()


def _ints(tokens, lineno, what):
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {what}: {' '.join(tokens)!r}", lineno) from None


def _check_endpoints(n, u, v, lineno):
    for x in (u, v):
        if not 1 <= x <= n:
            raise GraphFormatError(f"endpoint {x} out of range 1..{n}", lineno)


def parse_edge_list(text: str) -> Multigraph:
    """Parse ``n m`` followed by exactly ``m`` lines ``u v``; ``#`` starts a comment line."""
    header = None
    edges = []
    last = 0
    for lineno, line in _lines(text):
        last = lineno
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise GraphFormatError(f"expected header 'n m', got {line!r}", lineno)
            n, m = _ints(tokens, lineno, "header")
            if n < 1 or m < 0:
                raise GraphFormatError(f"invalid header n={n} m={m}", lineno)
            header = (n, m)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected edge 'u v', got {line!r}", lineno)
        u, v = _ints(tokens, lineno, "edge")
        _check_endpoints(header[0], u, v, lineno)
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than the declared {header[1]} edges", lineno)
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'n m' header", last or None)
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges, found {len(edges)}", last)
    return Multigraph.from_one_based(header[0], edges)


def parse_dimacs(text: str) -> Multigraph:
    """Parse the DIMACS ``.col`` subset: ``c`` comments, one ``p edge n m``, ``e u v`` lines."""
    header = None
    edges = []
    last = 0
    for lineno, line in _lines(text):
        last = lineno
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError(f"expected 'p edge n m', got {line!r}", lineno)
            n, m = _ints(tokens[2:], lineno, "problem line")
            if n < 1 or m < 0:
                raise GraphFormatError(f"invalid problem line n={n} m={m}", lineno)
            header = (n, m)
        elif tokens[0] == "e":
            if header is None:
                raise GraphFormatError("edge before 'p' line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError(f"expected 'e u v', got {line!r}", lineno)
            u, v = _ints(tokens[1:], lineno, "edge")
            _check_endpoints(header[0], u, v, lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p edge n m' line", last or None)
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges, found {len(edges)}", last)
    return Multigraph.from_one_based(header[0], edges)


def parse_graph(text: str, fmt: str = "auto") -> Multigraph:
    if fmt == "auto":
        fmt = "edgelist"
        for _, line in _lines(text):
            if not line or line[0] in "c#":
                continue
            if line.split()[:2] in (["p", "edge"], ["p", "col"]) or line.startswith("e "):
                fmt = "dimacs"
            break
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_canonical_text(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines)


# -- named graphs used by tests and docs ---------------------------------

def cycle(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def empty(n: int) -> Multigraph:
    return Multigraph(n, ())
