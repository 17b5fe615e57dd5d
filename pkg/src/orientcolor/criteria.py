"""Colorability verdicts from orientation classes, and a brute-force oracle.

A graph is k-colorable exactly when some class of orientations mod k has
adjacent subclasses (even and odd flip parity) of different sizes, i.e.
when the reduced characteristic polynomial has a nonzero coefficient.
The backtracking oracle in this module shares no code with either engine.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .census import (DEFAULT_MAX_EDGES, ClassTable, build_class_table,
                     census_coefficients)
from .errors import CapExceeded, CrossCheckFailure
from .field import is_prime
from .graph import Multigraph
from .poly import DEFAULT_MAX_TERMS, ReducedPolynomial, reduced_graph_polynomial

DEFAULT_LS = (2, 3, 5, 7, 11, 13)
DEFAULT_MAX_ASSIGNMENTS = 1 << 24


@dataclass(frozen=True)
class Witness:
    residues: Tuple[int, ...]
    coefficient: int
    agree: Optional[int] = None
    disagree: Optional[int] = None

    def to_dict(self):
        return {"class": list(self.residues), "coefficient": self.coefficient,
                "agree": self.agree, "disagree": self.disagree}


@dataclass(frozen=True)
class Verdict:
    colorable: bool
    witness: Optional[Witness]
    engine: str

    def __post_init__(self):
        if self.colorable != (self.witness is not None):
            raise ValueError("witness must be present exactly when colorable")

    def to_dict(self):
        return {"colorable": self.colorable, "engine": self.engine,
                "witness": self.witness.to_dict() if self.witness else None}


@dataclass(frozen=True)
class ProfileRow:
    l: int
    coprime_to_k: bool
    satisfied: bool
    witness: Optional[Tuple[int, ...]] = None

    def to_dict(self):
        return {"l": self.l, "coprime_to_k": self.coprime_to_k, "satisfied": self.satisfied,
                "witness": list(self.witness) if self.witness is not None else None}


@dataclass(frozen=True)
class LProfile:
    k: int
    rows: Tuple[ProfileRow, ...]

    def necessary_condition_holds(self) -> bool:
        """Every coprime row is satisfied (vacuous without coprime rows)."""
        return all(r.satisfied for r in self.rows if r.coprime_to_k)

    def to_dict(self):
        return {"k": self.k, "rows": [r.to_dict() for r in self.rows]}


@dataclass(frozen=True)
class PrimePowerChoice:
    p: int
    t: int
    q: int

    def to_dict(self):
        return {"p": self.p, "t": self.t, "q": self.q}


def sufficient_witness(t: ClassTable) -> Optional[Witness]:
    for key, agree, disagree, diff in t.rows():
        if diff:
            return Witness(key, diff, agree, disagree)
    return None


def profile_from_coefficients(coeffs: Dict[Tuple[int, ...], int], k: int,
                              ls: Sequence[int] = DEFAULT_LS) -> LProfile:
    rows = []
    for l in ls:
        if l < 2:
            raise ValueError(f"l must be >= 2, got {l}")
        witness = next((key for key in sorted(coeffs) if coeffs[key] % l), None)
        rows.append(ProfileRow(l, gcd(l, k) == 1, witness is not None, witness))
    return LProfile(k, tuple(rows))


def necessary_profile(t: ClassTable, ls: Sequence[int] = DEFAULT_LS) -> LProfile:
    """For each l, whether some class has agree != disagree mod l."""
    return profile_from_coefficients(census_coefficients(t), t.k, ls)


def odd_k_parity(t: ClassTable) -> bool:
    """Some class holds an odd number of orientations (only defined for odd k)."""
    if t.k % 2 == 0:
        raise ValueError(f"parity criterion needs odd k, got {t.k}")
    return any((a + d) % 2 for a, d in t.entries.values())


def decide_colorable(g: Multigraph, k: int, max_edges: int = DEFAULT_MAX_EDGES,
                     max_terms: int = DEFAULT_MAX_TERMS, workers: Optional[int] = None) -> Verdict:
    """Census when ``m <= max_edges``, otherwise the reduced polynomial."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if g.m <= max_edges:
        w = sufficient_witness(build_class_table(g, k, max_edges, workers))
        return Verdict(w is not None, w, "census")
    try:
        poly = reduced_graph_polynomial(g, k, max_terms)
    except CapExceeded as exc:
        raise CapExceeded(f"m={g.m} exceeds census cap {max_edges} and {exc}") from None
    return verdict_from_polynomial(poly)


def verdict_from_polynomial(poly: ReducedPolynomial) -> Verdict:
    if poly.is_zero():
        return Verdict(False, None, "polynomial")
    exps, c = next(iter(poly.terms.items()))
    return Verdict(True, Witness(exps, c), "polynomial")


def _primes():
    p = 2
    while True:
        if is_prime(p):
            yield p
        p += 1


def select_prime_power(c: int, k: int) -> PrimePowerChoice:
    """Smallest prime p not dividing c or k, and least t >= 1 with p**t = 1 mod k."""
    if c == 0:
        raise ValueError("coefficient must be nonzero")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    p = next(p for p in _primes() if c % p and k % p)
    power = 1
    for t in range(1, k + 1):
        power = power * p % k
        if power == 1 % k:
            return PrimePowerChoice(p, t, p ** t)
    raise AssertionError("pigeonhole bound violated")  # unreachable: gcd(p, k) = 1


# -- independent oracle ------------------------------------------------

def _neighbours(g: Multigraph):
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def find_coloring(g: Multigraph, k: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically first proper coloring with colors 0..k-1, or None."""
    if g.has_loop() or k < 1:
        return None
    adj = _neighbours(g)
    colors = [-1] * g.n

    def place(v):
        if v == g.n:
            return True
        # vertex 0 can always take color 0 up to renaming
        for c in (range(1) if v == 0 else range(k)):
            if all(colors[w] != c for w in adj[v] if w < v):
                colors[v] = c
                if place(v + 1):
                    return True
        colors[v] = -1
        return False

    return tuple(colors) if place(0) else None


def count_colorings(g: Multigraph, k: int, max_assignments: int = DEFAULT_MAX_ASSIGNMENTS) -> int:
    """Number of proper colorings with colors 0..k-1 (labelled, no symmetry reduction)."""
    if k ** g.n > max_assignments:
        raise CapExceeded(f"{k}^{g.n} assignments exceed bound {max_assignments}")
    if g.has_loop():
        return 0
    adj = _neighbours(g)
    colors = [-1] * g.n

    def count(v):
        if v == g.n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[w] != c for w in adj[v] if w < v):
                colors[v] = c
                total += count(v + 1)
        colors[v] = -1
        return total

    return count(0)


@dataclass
class CrossCheckReport:
    k: int
    census: Dict[Tuple[int, ...], int]
    polynomial: Dict[Tuple[int, ...], int]
    verdict: Verdict
    coloring: Optional[Tuple[int, ...]]
    mismatched: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def tables_equal(self) -> bool:
        return not self.mismatched

    @property
    def verdict_agrees(self) -> bool:
        return self.verdict.colorable == (self.coloring is not None)

    @property
    def ok(self) -> bool:
        return self.tables_equal and self.verdict_agrees

    def summary(self) -> str:
        return (f"census = polynomial: {'OK' if self.tables_equal else 'FAIL'}; "
                f"verdict = oracle: {'OK' if self.verdict_agrees else 'FAIL'}")

    def to_dict(self):
        return {
            "k": self.k,
            "tables_equal": self.tables_equal,
            "verdict_agrees": self.verdict_agrees,
            "colorable": self.verdict.colorable,
            "verdict": self.verdict.to_dict(),
            "coloring": [c + 1 for c in self.coloring] if self.coloring else None,
            "nonzero_classes": len(self.polynomial),
            "mismatched": [list(key) for key in self.mismatched],
        }


def cross_check(g: Multigraph, k: int, max_edges: int = DEFAULT_MAX_EDGES,
                max_terms: int = DEFAULT_MAX_TERMS, strict: bool = True) -> CrossCheckReport:
    """Compare census coefficients, polynomial coefficients and the oracle verdict."""
    table = build_class_table(g, k, max_edges)
    census = {key: c for key, c in census_coefficients(table).items() if c}
    poly = reduced_graph_polynomial(g, k, max_terms)
    mismatched = sorted(key for key in set(census) | set(poly.terms)
                        if census.get(key, 0) != poly.terms.get(key, 0))
    w = sufficient_witness(table)
    report = CrossCheckReport(k, census, dict(poly.terms), Verdict(w is not None, w, "census"),
                              find_coloring(g, k), mismatched)
    if strict and not report.ok:
        raise CrossCheckFailure(report)
    return report


def all_graphs_on(n: int):
    """Every simple labelled graph on ``n`` vertices, edges in lexicographic pair order."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Multigraph(n, tuple(pr for i, pr in enumerate(pairs) if mask >> i & 1))
