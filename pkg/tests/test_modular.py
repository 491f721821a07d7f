import pytest
from hypothesis import given, strategies as st
from sympy import factorint

from s3bundles.modular import (
    Factorization,
    crt,
    factorize,
    gcd,
    is_prime,
    minus_one_solvable,
    root_count,
    two_adic_split,
    unit_square_roots,
)


def brute_roots(n, sign):
    target = sign % n
    return [a for a in range(n) if a * a % n == target]


@pytest.mark.parametrize("a,b,expected", [(12, 30, 6), (0, 7, 7), (-12, 18, 6), (0, 0, 0)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("n,expected", [(12, ((2, 2), (3, 1))), (1, ()), (56, ((2, 3), (7, 1)))])
def test_factorize_examples(n, expected):
    assert factorize(n).factors == expected


@pytest.mark.parametrize("n", [0, -5])
def test_factorize_rejects_nonpositive(n):
    with pytest.raises(ValueError):
        factorize(n)


@given(st.integers(min_value=1, max_value=10**7))
def test_factorize_matches_sympy(n):
    assert dict(factorize(n).factors) == factorint(n)


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(12, ((4, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(6, ((3, 1), (2, 1)))


def test_is_prime_small():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("n,a,q", [(1, 0, 1), (12, 2, 3), (56, 3, 7), (7, 0, 7), (16, 4, 1)])
def test_two_adic_split(n, a, q):
    assert two_adic_split(n) == (a, q)


def test_crt():
    assert crt([2, 3, 2], [3, 5, 7]) == 23
    assert crt([], []) == 0


@pytest.mark.parametrize(
    "n,sign,expected",
    [
        (12, 1, (1, 5, 7, 11)),
        (5, -1, (2, 3)),
        (4, -1, ()),
        (8, 1, (1, 3, 5, 7)),
        (1, 1, (0,)),
        (1, -1, (0,)),
        (2, -1, (1,)),
    ],
)
def test_unit_square_roots_examples(n, sign, expected):
    assert unit_square_roots(n, sign).elements == expected
    if n > 1:
        assert unit_square_roots(n, sign).elements == tuple(brute_roots(n, sign))


@pytest.mark.parametrize("n,r,u,count", [(12, 1, 1, 4), (7, 1, 0, 2), (1, 0, 0, 1), (8, 0, 2, 4)])
def test_root_count_examples(n, r, u, count):
    rc = root_count(n)
    assert (rc.r, rc.u, rc.count) == (r, u, count)


@pytest.mark.parametrize("n,expected", [(10, True), (4, False), (13, True), (1, True), (2, True),
                                        (3, False), (25, True), (50, True), (20, False)])
def test_minus_one_solvable_examples(n, expected):
    assert minus_one_solvable(n) is expected


def test_hensel_lift_odd_prime_powers():
    for q in (5**4, 13**3, 29**2, 5**3 * 13**2):
        for a in unit_square_roots(q, -1):
            assert (a * a + 1) % q == 0
        assert len(unit_square_roots(q, -1)) == 2 ** len(factorize(q).odd_primes)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        unit_square_roots(0, 1)
    with pytest.raises(ValueError):
        unit_square_roots(5, 2)


@given(st.integers(min_value=2, max_value=3000), st.sampled_from([1, -1]))
def test_roots_closed_under_negation(n, sign):
    rs = unit_square_roots(n, sign)
    assert {(n - a) % n for a in rs} == set(rs.elements)


@given(st.integers(min_value=1, max_value=3000), st.sampled_from([1, -1]))
def test_roots_match_brute_force(n, sign):
    got = unit_square_roots(n, sign).elements
    want = tuple(brute_roots(n, sign)) if n > 1 else (0,)
    assert got == want


@given(st.integers(min_value=2, max_value=10**6))
def test_minus_one_root_count(n):
    rs = unit_square_roots(n, -1)
    assert bool(rs.elements) == minus_one_solvable(n)
    if rs.elements:
        assert len(rs) == 2 ** len(factorize(n).odd_primes)
