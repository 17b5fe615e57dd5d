"""Sparse multivariate polynomials with exact integer coefficients.

A polynomial in ``n`` variables is a map from exponent tuples to nonzero
ints.  ``reduce_polynomial(p, i, j)`` rewrites every positive exponent to the
least value ``>= i`` congruent to it mod ``j - i`` (scheme ``x^j -> x^i``);
``reduced_graph_polynomial`` applies the scheme ``x^k -> x^0`` after each
edge factor so the live term count stays below ``k**n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import CapExceeded
from .graph import Multigraph

DEFAULT_MAX_TERMS = 1 << 20

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    n: int
    terms: Dict[Exponents, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for n={self.n}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})

    @classmethod
    def constant(cls, n: int, c: int = 1) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        exps = [0] * n
        exps[i] = 1
        return cls(n, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.n, out)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def abs_sum(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def to_text(self) -> str:
        """One ``coef * x1^e1 ... xn^en`` line per term, lexicographic order; ``0`` when empty."""
        if not self.terms:
            return "0"
        lines = []
        for exps, c in self.terms.items():
            mono = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(exps))
            lines.append(f"{c} * {mono}" if mono else str(c))
        return "\n".join(lines)

    def to_records(self) -> List[dict]:
        return [{"exponents": list(e), "coefficient": c} for e, c in self.terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_records(cls, n: int, records: Iterable[Mapping]) -> "Polynomial":
        return cls(n, {tuple(r["exponents"]): r["coefficient"] for r in records})


@dataclass(frozen=True, eq=False)
class ReducedPolynomial(Polynomial):
    """Polynomial whose exponents all lie in ``[0, k)``."""

    k: int = 1

    def __post_init__(self):
        super().__post_init__()
        if self.k < 1:
            raise ValueError(f"modulus must be >= 1, got {self.k}")
        for exps in self.terms:
            if any(e >= self.k for e in exps):
                raise ValueError(f"exponent vector {exps} not reduced mod {self.k}")

    def __eq__(self, other):
        return Polynomial.__eq__(self, other)

    __hash__ = Polynomial.__hash__


def factor_list(g: Multigraph) -> List[Tuple[int, int]]:
    """``(u, v)`` meaning the factor ``x_u - x_v``, one per edge in stored order."""
    return list(g.edges)


def _factor(n: int, u: int, v: int) -> Polynomial:
    return Polynomial.variable(n, u) - Polynomial.variable(n, v)


def characteristic_polynomial(g: Multigraph) -> Polynomial:
    """Full expansion of the product of ``x_u - x_v`` over the stored edges."""
    p = Polynomial.constant(g.n)
    for u, v in factor_list(g):
        p = p * _factor(g.n, u, v)
    return p


def reduce_exponent(e: int, i: int, j: int) -> int:
    """Least integer ``>= i`` congruent to ``e`` mod ``j - i``; requires ``e >= i``."""
    if not 0 <= i < j:
        raise ValueError(f"need 0 <= i < j, got i={i} j={j}")
    if e < i:
        raise ValueError(f"exponent {e} below scheme floor {i}")
    return i + (e - i) % (j - i)


def reduce_polynomial(p: Polynomial, i: int, j: int) -> Polynomial:
    """Maximal reduction by scheme ``x^j -> x^i``; zero exponents are left alone."""
    out: Dict[Exponents, int] = {}
    for exps, c in p.terms.items():
        key = tuple(e if e == 0 else reduce_exponent(e, i, j) for e in exps)
        out[key] = out.get(key, 0) + c
    if i == 0:
        return ReducedPolynomial(p.n, out, k=j)
    return Polynomial(p.n, out)


def projected_terms(g: Multigraph, k: int) -> int:
    return min(k ** g.n, 1 << g.m)


def reduced_graph_polynomial(g: Multigraph, k: int, max_terms: int = DEFAULT_MAX_TERMS) -> ReducedPolynomial:
    """Product of the edge factors with exponents reduced mod ``k`` after each factor."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if projected_terms(g, k) > max_terms:
        raise CapExceeded(f"up to {projected_terms(g, k)} terms projected; term cap is {max_terms}")
    p: Polynomial = ReducedPolynomial.constant(g.n)
    for u, v in factor_list(g):
        p = reduce_polynomial(p * _factor(g.n, u, v), 0, k)
    return ReducedPolynomial(g.n, p.terms, k=k)


def raise_exponents(p: Polynomial, m: int) -> Polynomial:
    """Formal substitution ``x_i <- x_i**m``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return Polynomial(p.n, {tuple(e * m for e in exps): c for exps, c in p.terms.items()})


def multiply_by_all_variables(p: Polynomial) -> Polynomial:
    """``x_1 * ... * x_n * p``."""
    return Polynomial(p.n, {tuple(e + 1 for e in exps): c for exps, c in p.terms.items()})


def coefficients_mod(p: Polynomial, l: int) -> Dict[Exponents, int]:
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    return {exps: c % l for exps, c in p.terms.items()}


def evaluate(p: Polynomial, point: Sequence, ring=None):
    """Sum of ``coef * prod(a_i ** e_i)``; integers when ``ring`` is None, else a field."""
    if len(point) != p.n:
        raise ValueError(f"expected {p.n} values, got {len(point)}")
    if ring is None:
        total = 0
        for exps, c in p.terms.items():
            term = c
            for a, e in zip(point, exps):
                if e:
                    term *= a ** e
            total += term
        return total
    return ring.evaluate(p.terms, point)
