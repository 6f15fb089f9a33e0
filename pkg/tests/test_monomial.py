from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leadmono.monomial import (
    Monomial,
    count_degree,
    degree_matrix,
    divides,
    enumerate_degree,
    format_monomial,
    grevlex_cmp,
    mul,
    parse_monomial,
    smallest_variable,
    sort_unique_rows,
    to_monomials,
)


def M(text, n=3):
    return parse_monomial(text, n)


def test_grevlex_toy_ordering():
    assert grevlex_cmp(M("x1^2"), M("x1*x2")) == 1
    assert [str(m) for m in enumerate_degree(3, 2)] == ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]
    assert sorted(enumerate_degree(3, 2), reverse=True)[:2] == [M("x1^2"), M("x1*x2")]


def test_grevlex_reflexive_and_degree_first():
    m = M("x2^2*x3")
    assert grevlex_cmp(m, m) == 0
    assert M("x3^3") > M("x1^2")
    assert M("x1") < M("x3^2")


def test_grevlex_rejects_mismatched_rings():
    with pytest.raises(ValueError):
        grevlex_cmp(Monomial((1, 0)), Monomial((1, 0, 0)))


def test_divides_examples():
    assert divides(M("x1"), M("x1^2*x3"))
    assert not divides(M("x2^2"), M("x1*x2"))
    assert divides(M("x2^2*x3"), M("x2^2*x3"))


def test_mul_examples():
    assert mul(M("x2^2"), 3) == M("x2^2*x3")
    assert mul(Monomial.one(3), 1) == M("x1")
    assert mul(M("x3^3"), 1) == M("x1*x3^3")
    assert mul(M("x3^3"), 1).degree == 4


def test_smallest_variable_examples():
    assert smallest_variable(M("x1*x3^3")) == 3
    assert smallest_variable(M("x1^2")) == 1
    assert smallest_variable(M("x2^2*x3")) == 3
    with pytest.raises(ValueError):
        smallest_variable(Monomial.one(3))


@pytest.mark.parametrize("d", range(7))
def test_smallest_variable_matches_linear_scan(d):
    for m in enumerate_degree(4, d):
        if d == 0:
            continue
        scan = max(i + 1 for i in range(4) if m[i] > 0)
        assert m.smallest_variable() == scan


def test_enumerate_degree_examples():
    assert enumerate_degree(3, 0) == [Monomial.one(3)]
    assert len(enumerate_degree(3, 2)) == 6


def test_degree_matrix_case1_size():
    rows = degree_matrix(18, 10)
    assert rows.shape == (8_436_285, 18)
    assert count_degree(18, 10) == 8_436_285
    assert (rows.sum(axis=1) == 10).all()


@pytest.mark.parametrize("n,d", [(1, 4), (2, 5), (3, 4), (4, 6), (6, 3)])
def test_enumeration_complete_and_strictly_descending(n, d):
    monos = enumerate_degree(n, d)
    assert len(monos) == comb(n + d - 1, d) == len(set(monos))
    assert all(grevlex_cmp(a, b) == 1 for a, b in zip(monos, monos[1:]))
    assert to_monomials(degree_matrix(n, d)) == monos


def test_sort_unique_rows_matches_python_sort():
    rng = np.random.default_rng(7)
    monos = enumerate_degree(4, 5)
    picks = rng.integers(0, len(monos), size=80)
    rows = np.array([monos[i] for i in picks], dtype=np.uint8)
    expect = sorted(set(monos[i] for i in picks), reverse=True)
    assert to_monomials(sort_unique_rows(rows)) == expect


monomial_pairs = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 4), min_size=n, max_size=n),
        st.lists(st.integers(0, 4), min_size=n, max_size=n),
        st.lists(st.integers(0, 4), min_size=n, max_size=n),
    )
)


@given(monomial_pairs)
def test_grevlex_is_a_total_order(triple):
    a, b, c = (Monomial(x) for x in triple)
    assert grevlex_cmp(a, b) == -grevlex_cmp(b, a)
    assert (grevlex_cmp(a, b) == 0) == (a == b)
    if grevlex_cmp(a, b) <= 0 and grevlex_cmp(b, c) <= 0:
        assert grevlex_cmp(a, c) <= 0


@given(monomial_pairs)
def test_divides_iff_exponent_difference_is_a_monomial(triple):
    a, b, _ = (Monomial(x) for x in triple)
    diff = [y - x for x, y in zip(a, b)]
    assert divides(a, b) == all(e >= 0 for e in diff)
    if divides(a, b):
        c = a
        for i, e in enumerate(diff, start=1):
            for _ in range(e):
                c = c.times(i)
        assert c == b


@given(st.lists(st.integers(0, 5), min_size=1, max_size=7))
def test_text_round_trip(exps):
    m = Monomial(exps)
    assert parse_monomial(format_monomial(m), len(exps)) == m


def test_text_format():
    assert format_monomial((2, 1, 0)) == "x1^2*x2"
    assert format_monomial((0, 0)) == "1"
    assert parse_monomial("1", 2) == Monomial((0, 0))
    with pytest.raises(ValueError):
        parse_monomial("x4", 3)
    with pytest.raises(ValueError):
        parse_monomial("y1", 3)
