"""Exhaustive census of orientations by out-degree residues and flip parity.

Every orientation of a multigraph with ``m`` edges is a mask in
``[0, 2**m)``; bit ``e`` reverses edge ``e``.  Orientations are grouped by
their out-degree vector reduced mod ``k`` and, inside each group, split by
the parity of the number of reversed edges (even = agrees with the
reference orientation).  A loop always contributes one out-edge to its
vertex; its two orientations differ only in parity.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from .errors import CapExceeded
from .graph import Multigraph, Orientation

DEFAULT_MAX_EDGES = 24
BLOCK_BITS = 16

ResidueVector = Tuple[int, ...]


def out_degree_vector(o: Orientation) -> Tuple[int, ...]:
    deg = [0] * o.graph.n
    for tail, _ in o.arcs():
        deg[tail] += 1
    return tuple(deg)


def flip_parity(o: Orientation) -> int:
    """0 when an even number of edges is reversed (agreement), 1 otherwise."""
    return sum(o.flips) & 1


def residue_class(o: Orientation, k: int) -> ResidueVector:
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    return tuple(d % k for d in out_degree_vector(o))


@dataclass(frozen=True)
class ClassTable:
    """Residue vector -> (agree, disagree) counts; only nonempty classes are stored.

    ``entries`` is kept in lexicographic key order.
    """

    k: int
    n: int
    m: int
    entries: Dict[ResidueVector, Tuple[int, int]]

    def __post_init__(self):
        ordered = {key: self.entries[key] for key in sorted(self.entries)
                   if sum(self.entries[key]) > 0}
        object.__setattr__(self, "entries", ordered)

    def __len__(self):
        return len(self.entries)

    def total(self) -> int:
        return sum(a + d for a, d in self.entries.values())

    def rows(self):
        for key, (agree, disagree) in self.entries.items():
            yield key, agree, disagree, agree - disagree

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "classes": [
                {"class": list(key), "agree": a, "disagree": d, "difference": diff}
                for key, a, d, diff in self.rows()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "ClassTable":
        entries = {tuple(row["class"]): (row["agree"], row["disagree"]) for row in data["classes"]}
        return cls(data["k"], data["n"], data["m"], entries)

    def to_text(self) -> str:
        lines = [f"# k={self.k} n={self.n} m={self.m} classes={len(self)}",
                 "class agree disagree difference"]
        for key, a, d, diff in self.rows():
            lines.append(f"({','.join(map(str, key))}) {a} {d} {diff}")
        return "\n".join(lines)


def _incidence(g: Multigraph):
    """Out-degree contribution of each edge when kept (tail) and when flipped (head)."""
    keep = np.zeros((g.m, g.n), dtype=np.int64)
    flip = np.zeros((g.m, g.n), dtype=np.int64)
    for e, (u, v) in enumerate(g.edges):
        keep[e, u] = 1
        flip[e, v] = 1
    return keep, flip


def _unpack(code: int, k: int, n: int) -> Tuple[ResidueVector, int]:
    code, parity = divmod(code, 2)
    res = []
    for _ in range(n):
        code, r = divmod(code, k)
        res.append(r)
    return tuple(res), parity


def tally_range(g: Multigraph, k: int, start: int, stop: int) -> Dict[Tuple[ResidueVector, int], int]:
    """Count masks in ``[start, stop)`` by (residue vector, parity)."""
    counts: Dict[Tuple[ResidueVector, int], int] = {}
    if start >= stop:
        return counts
    if g.m == 0:
        counts[((0,) * g.n, 0)] = stop - start
        return counts
    keep, flip = _incidence(g)
    base = keep.sum(axis=0)
    delta = flip - keep
    shifts = np.arange(g.m, dtype=np.int64)
    # pack (residues, parity) into one int64 when k**n * 2 fits
    packed = 2 * k ** g.n < 1 << 62
    weights = np.array([2 * k ** i for i in range(g.n)], dtype=np.int64) if packed else None
    block = 1 << BLOCK_BITS
    for lo in range(start, stop, block):
        masks = np.arange(lo, min(lo + block, stop), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        res = (base + bits @ delta) % k
        parity = bits.sum(axis=1) & 1
        if packed:
            codes, cnt = np.unique(res @ weights + parity, return_counts=True)
            for code, c in zip(codes.tolist(), cnt.tolist()):
                key = _unpack(code, k, g.n)
                counts[key] = counts.get(key, 0) + c
        else:
            uniq, cnt = np.unique(np.concatenate([res, parity[:, None]], axis=1), axis=0,
                                  return_counts=True)
            for row, c in zip(uniq.tolist(), cnt.tolist()):
                key = (tuple(row[:-1]), row[-1])
                counts[key] = counts.get(key, 0) + c
    return counts


def merge_tallies(parts: Iterable[Dict[Tuple[ResidueVector, int], int]], k: int, n: int, m: int) -> ClassTable:
    entries: Dict[ResidueVector, list] = {}
    for part in parts:
        for (res, parity), c in part.items():
            cell = entries.setdefault(res, [0, 0])
            cell[parity] += c
    return ClassTable(k, n, m, {res: (a, d) for res, (a, d) in entries.items()})


def build_class_table(g: Multigraph, k: int, max_edges: int = DEFAULT_MAX_EDGES,
                      workers: Optional[int] = None) -> ClassTable:
    """Enumerate all ``2**m`` orientations of ``g`` and tally them into classes mod ``k``.

    With ``workers > 1`` the mask range is split into chunks tallied on a
    thread pool; the merged table does not depend on the split.
    """
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if g.m > max_edges:
        raise CapExceeded(f"census needs 2^{g.m} orientations; edge cap is {max_edges}")
    total = 1 << g.m
    if not workers or workers <= 1:
        return merge_tallies([tally_range(g, k, 0, total)], k, g.n, g.m)
    chunk = max(1 << BLOCK_BITS, -(-total // (4 * workers)))
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda b: tally_range(g, k, *b), bounds))
    return merge_tallies(parts, k, g.n, g.m)


def census_coefficients(t: ClassTable) -> Dict[ResidueVector, int]:
    """Signed difference agree - disagree per class, zeros included."""
    return {key: a - d for key, (a, d) in t.entries.items()}
