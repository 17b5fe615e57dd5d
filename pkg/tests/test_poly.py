import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from orientcolor.census import build_class_table, census_coefficients
from orientcolor.errors import CapExceeded
from orientcolor.graph import Multigraph, complete, cycle, empty
from orientcolor.poly import (Polynomial, ReducedPolynomial, characteristic_polynomial,
                              coefficients_mod, evaluate, factor_list, multiply_by_all_variables,
                              raise_exponents, reduce_exponent, reduce_polynomial,
                              reduced_graph_polynomial)

from conftest import multigraphs

EDGE = Multigraph(2, ((0, 1),))


def sympy_reduced(g, k):
    """Expand the edge product with sympy, then fold exponents mod k once."""
    xs = sympy.symbols(f"x1:{g.n + 1}")
    expr = sympy.Integer(1)
    for u, v in g.edges:
        expr *= xs[u] - xs[v]
    out = {}
    for exps, c in sympy.Poly(sympy.expand(expr), *xs).terms():
        key = tuple(e % k for e in exps)
        out[key] = out.get(key, 0) + int(c)
    return {key: c for key, c in out.items() if c}


def P(n, terms):
    return Polynomial(n, terms)


small_polys = st.integers(1, 3).flatmap(lambda n: st.builds(
    lambda ts: Polynomial(n, ts),
    st.dictionaries(st.tuples(*[st.integers(0, 7)] * n), st.integers(-5, 5), max_size=5)))


def test_factor_list():
    assert factor_list(EDGE) == [(0, 1)]
    assert factor_list(complete(3)) == [(0, 1), (0, 2), (1, 2)]
    assert factor_list(Multigraph(1, ((0, 0),))) == [(0, 0)]


@pytest.mark.parametrize("e, i, j, out", [(5, 0, 3, 2), (7, 1, 5, 3), (0, 0, 3, 0), (1, 1, 5, 1), (4, 1, 5, 4), (5, 1, 5, 1)])
def test_reduce_exponent(e, i, j, out):
    assert reduce_exponent(e, i, j) == out


def test_reduce_exponent_domain():
    with pytest.raises(ValueError):
        reduce_exponent(0, 1, 5)
    with pytest.raises(ValueError):
        reduce_exponent(3, 2, 2)


def test_reduce_polynomial_examples():
    p = P(2, {(3, 1): 1, (1, 0): -1})
    assert reduce_polynomial(p, 0, 2) == P(2, {(1, 1): 1, (1, 0): -1})
    for q in (2, 3, 5, 7):
        assert reduce_polynomial(P(1, {(q,): 1, (1,): -1}), 1, q).is_zero()
    assert reduce_polynomial(P(2, {(2, 2): 1, (2, 5): 1}), 0, 3) == P(2, {(2, 2): 2})


def test_reduce_keeps_zero_exponent_with_floor_one():
    assert reduce_polynomial(P(2, {(0, 6): 1}), 1, 5) == P(2, {(0, 2): 1})


def test_reduced_graph_polynomial_examples():
    assert reduced_graph_polynomial(EDGE, 2).terms == {(0, 1): -1, (1, 0): 1}
    k3 = {(2, 1, 0): 1, (2, 0, 1): -1, (1, 0, 2): 1, (1, 2, 0): -1, (0, 2, 1): 1, (0, 1, 2): -1}
    assert reduced_graph_polynomial(complete(3), 3).terms == k3
    assert sympy_reduced(complete(3), 3) == k3
    for k in (1, 2, 3):
        assert reduced_graph_polynomial(Multigraph(2, ((0, 1), (1, 1))), k).is_zero()
        assert reduced_graph_polynomial(empty(3), k) == Polynomial.constant(3)


def test_reduced_type_and_cap():
    p = reduced_graph_polynomial(cycle(4), 3)
    assert isinstance(p, ReducedPolynomial) and p.k == 3
    with pytest.raises(CapExceeded):
        reduced_graph_polynomial(complete(6), 5, max_terms=100)
    with pytest.raises(ValueError):
        ReducedPolynomial(1, {(3,): 1}, k=3)


def test_evaluate():
    assert evaluate(reduced_graph_polynomial(complete(3), 3), (1, 1, 1)) == 0
    assert evaluate(reduced_graph_polynomial(EDGE, 2), (1, 0)) == 1
    assert evaluate(Polynomial.constant(4), (9, 8, 7, 6)) == 1
    with pytest.raises(ValueError):
        evaluate(Polynomial.constant(2), (1,))


def test_raise_exponents():
    assert raise_exponents(P(2, {(1, 0): 1, (0, 1): -1}), 2) == P(2, {(2, 0): 1, (0, 2): -1})
    assert raise_exponents(Polynomial.constant(3), 5) == Polynomial.constant(3)
    red = reduced_graph_polynomial(complete(3), 3)
    raised = raise_exponents(red, 2)
    xs = sympy.symbols("x1:4")
    direct = sympy.Poly(sum(c * sympy.prod(x ** (2 * e) for x, e in zip(xs, exps))
                            for exps, c in red.terms.items()), *xs)
    assert raised.terms == {tuple(e): int(c) for e, c in direct.terms()}
    assert sorted(raised.terms.values()) == sorted(red.terms.values())


def test_coefficients_mod():
    assert coefficients_mod(reduced_graph_polynomial(EDGE, 2), 2) == {(1, 0): 1, (0, 1): 1}
    c4 = reduced_graph_polynomial(cycle(4), 2)
    assert c4.terms[(1, 1, 1, 1)] == 2
    assert coefficients_mod(c4, 2)[(1, 1, 1, 1)] == 0
    assert set(coefficients_mod(reduced_graph_polynomial(complete(3), 3), 5).values()) == {1, 4}


def test_serialisation():
    p = reduced_graph_polynomial(EDGE, 2)
    assert p.to_text() == "-1 * x1^0 x2^1\n1 * x1^1 x2^0"
    assert Polynomial.from_records(2, json.loads(p.to_json())) == p
    assert Polynomial(2).to_text() == "0"


@settings(max_examples=50, deadline=None)
@given(multigraphs(max_n=4, max_m=6), st.integers(1, 4))
def test_matches_sympy_expansion(g, k):
    assert reduced_graph_polynomial(g, k).terms == sympy_reduced(g, k)


@settings(max_examples=50, deadline=None)
@given(small_polys, small_polys, st.integers(1, 5))
def test_reduction_homomorphism(a, b, k):
    if a.n != b.n:
        b = Polynomial(a.n, {(e[0],) * a.n: c for e, c in b.terms.items()})
    lhs = reduce_polynomial(a * b, 0, k)
    rhs = reduce_polynomial(reduce_polynomial(a, 0, k) * reduce_polynomial(b, 0, k), 0, k)
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=5, max_m=9), st.integers(1, 5))
def test_coefficient_sum_and_bound(g, k):
    p = reduced_graph_polynomial(g, k)
    assert sum(p.terms.values()) == (1 if g.m == 0 else 0)
    assert p.abs_sum() <= 2 ** g.m


def test_abs_sum_equality_without_cancellation():
    # a tree never cancels: every orientation has a distinct out-degree vector
    tree = Multigraph(4, ((0, 1), (1, 2), (1, 3)))
    assert reduced_graph_polynomial(tree, 5).abs_sum() == 8
    assert reduced_graph_polynomial(complete(3), 3).abs_sum() < 8


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=3, max_m=4), st.sampled_from([3, 4, 5]))
def test_displayed_identity_floor_one(g, q):
    m_l = characteristic_polynomial(g)
    lhs = reduce_polynomial(multiply_by_all_variables(m_l), 1, q)
    rhs = multiply_by_all_variables(reduce_polynomial(m_l, 0, q - 1))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=3, max_m=4), st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2), (4, 2), (2, 3)]))
def test_substitution_identity(g, km):
    k, m = km
    substituted = raise_exponents(characteristic_polynomial(g), m)
    lhs = reduce_polynomial(substituted, 0, m * k)
    rhs = raise_exponents(reduced_graph_polynomial(g, k), m)
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_n=5, max_m=10), st.integers(1, 5))
def test_census_equals_polynomial(g, k):
    census = {key: c for key, c in census_coefficients(build_class_table(g, k)).items() if c}
    assert census == reduced_graph_polynomial(g, k).terms
