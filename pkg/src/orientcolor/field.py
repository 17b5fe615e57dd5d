"""Finite fields GF(p**t) in the polynomial basis.

An element is a polynomial of degree < t over GF(p) in a generator ``g``
with ``modulus(g) = 0``.  Elements are also addressed by the integer
``sum(c_i * p**i)`` where ``c_0`` is the constant term, so the prime subfield
is ``0..p-1`` and integer coefficients enter the field as ``c % p``.
The modulus tuple is stored leading coefficient first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .errors import CapExceeded

DEFAULT_MAX_ORDER = 1 << 16
DEFAULT_MAX_POINTS = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- polynomials over GF(p), constant term first ---------------------------

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of ``a`` by monic ``b`` over GF(p)."""
    r = _trim([c % p for c in a])
    db = len(b) - 1
    while len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lead = r[-1]
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - lead * c) % p
        _trim(r)
    return r


def _monic_polys(p: int, degree: int) -> Iterator[List[int]]:
    """Monic polynomials of ``degree`` in lexicographic order of (1, a_{d-1}, ..., a_0)."""
    for tail in itertools.product(range(p), repeat=degree):
        yield list(reversed((1,) + tail))


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division of monic ``f`` (constant first) by every monic polynomial of degree 1..deg/2."""
    t = len(f) - 1
    for d in range(1, t // 2 + 1):
        for g in _monic_polys(p, d):
            if not _polymod(f, g, p):
                return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    t: int
    q: int
    modulus: Tuple[int, ...]

    @property
    def _mod_low(self) -> Tuple[int, ...]:
        return tuple(reversed(self.modulus))

    # integer-encoded arithmetic
    def digits(self, a: int) -> List[int]:
        out = []
        for _ in range(self.t):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + c % self.p
        return a

    def add(self, a: int, b: int) -> int:
        if self.t == 1:
            return (a + b) % self.p
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if self.t == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.t - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.encode(_polymod(prod, self._mod_low, self.p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    # element objects
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, int):
            if self.t == 1:
                value %= self.p
            elif not 0 <= value < self.q:
                raise ValueError(f"element index {value} outside 0..{self.q - 1}")
            return FieldElement(self, tuple(self.digits(value)))
        return FieldElement(self, tuple(c % self.p for c in value))

    def elements(self) -> List["FieldElement"]:
        return [self(a) for a in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def evaluate(self, terms: Dict[Tuple[int, ...], int], point: Sequence) -> "FieldElement":
        values = [self(a).index for a in point]
        total = 0
        for exps, c in terms.items():
            term = c % self.p
            for a, e in zip(values, exps):
                if not term:
                    break
                if e:
                    term = self.mul(term, self.pow(a, e))
            total = self.add(total, term)
        return self(total)

    def format_element(self, a: int, symbol: str = "g") -> str:
        if self.t == 1:
            return str(a)
        parts = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = symbol if i == 1 else f"{symbol}^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) or "0"

    def describe(self) -> str:
        mod = self.format_modulus()
        return f"GF({self.p}^{self.t}), modulus = {list(self.modulus)} ({mod})"

    def format_modulus(self, symbol: str = "x") -> str:
        parts = []
        for power, c in zip(range(self.t, -1, -1), self.modulus):
            if not c:
                continue
            if power == 0:
                parts.append(str(c))
            else:
                mono = symbol if power == 1 else f"{symbol}^{power}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class FieldElement:
    field: FieldDescriptor
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.t or any(not 0 <= c < self.field.p for c in self.coeffs):
            raise ValueError(f"bad coefficients {self.coeffs} for {self.field.describe()}")

    @property
    def index(self) -> int:
        return self.field.encode(self.coeffs)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other.index
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return self.field(self.field.add(self.index, b))

    __radd__ = __add__

    def __neg__(self):
        return self.field(self.field.neg(self.index))

    def __sub__(self, other):
        return self + (-self.field(self._other(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        return self.field(self.field.mul(self.index, b))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return self.field(self.field.pow(self.index, e))

    def __truediv__(self, other):
        return self * ff_inv(self.field(self._other(other)))

    def __bool__(self):
        return any(self.coeffs)

    def __int__(self):
        return self.index

    def __lt__(self, other):
        return self.index < other.index

    def __repr__(self):
        return f"GF({self.field.q})<{self.field.format_element(self.index)}>"

    def __str__(self):
        return self.field.format_element(self.index)


def make_field(p: int, t: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> FieldDescriptor:
    """GF(p**t) with the lexicographically smallest monic irreducible modulus of degree t."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 1:
        raise ValueError(f"extension degree must be >= 1, got {t}")
    q = p ** t
    if q > max_order:
        raise CapExceeded(f"field order {q} exceeds bound {max_order}")
    if t == 1:
        return FieldDescriptor(p, 1, p, (1, 0))
    for f in _monic_polys(p, t):
        if is_irreducible(f, p):
            return FieldDescriptor(p, t, q, tuple(reversed(f)))
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


def _same(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise ValueError("mixed fields")


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a + b


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same(a, b)
    return a * b


def ff_pow(a: FieldElement, e: int) -> FieldElement:
    return a ** e


def ff_inv(a: FieldElement) -> FieldElement:
    return a.field(a.field.inv(a.index))


def color_set(f: FieldDescriptor, k: int) -> FrozenSet[FieldElement]:
    """``{x**m : x != 0}`` with ``q = m*k + 1``."""
    if k < 1 or (f.q - 1) % k:
        raise ValueError(f"k={k} does not divide q-1={f.q - 1}")
    m = (f.q - 1) // k
    return frozenset(f(f.pow(a, m)) for a in range(1, f.q))


def _coeffs_in_field(poly, f: FieldDescriptor):
    return {exps: c % f.p for exps, c in poly.terms.items() if c % f.p}


def is_identically_zero(poly, f: FieldDescriptor, max_points: int = DEFAULT_MAX_POINTS) -> bool:
    """True iff ``poly`` (integer coefficients, read mod p) vanishes at every point of GF(q)^n."""
    n = poly.n
    if f.q ** n > max_points:
        raise CapExceeded(f"{f.q}^{n} evaluation points exceed bound {max_points}")
    terms = _coeffs_in_field(poly, f)
    if not terms:
        return True
    exps_used = sorted({e for exps in terms for e in exps})
    powers = {e: [f.pow(a, e) for a in range(f.q)] for e in exps_used}
    items = list(terms.items())
    for point in itertools.product(range(f.q), repeat=n):
        total = 0
        for exps, c in items:
            term = c
            for a, e in zip(point, exps):
                term = f.mul(term, powers[e][a])
                if not term:
                    break
            total = f.add(total, term)
        if total:
            return False
    return True


def degree_bounded_zero_test(poly, f: FieldDescriptor) -> bool:
    """Formal zeroness mod p; only meaningful when every variable has degree <= q-1."""
    for i in range(poly.n):
        if poly.degree_in(i) > f.q - 1:
            raise ValueError(f"variable x{i + 1} has degree {poly.degree_in(i)} > q-1 = {f.q - 1}")
    return not _coeffs_in_field(poly, f)
