import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quantum_pascal.combinatorics import (
    Method,
    TriangleRow,
    binomial,
    count_sign_changes,
    double_factorial,
    has_special_case,
    hermite_coeffs,
    jacobi_at_3,
    mean_abs_deviation,
    pyramid_slice,
    triangle_row,
)

METHODS = list(Method)


def rank_pairs(n_max):
    return st.integers(0, n_max).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N)))


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (-1, 3, -1), (0, -1, 0), (-1, 0, 1), (-3, 2, 6)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(-30, 30), st.integers(-3, 20))
def test_binomial_matches_falling_factorial(n, k):
    if k < 0:
        assert binomial(n, k) == 0
    else:
        falling = math.prod(n - i for i in range(k))
        assert binomial(n, k) == Fraction(falling, math.factorial(k))


def test_jacobi_examples():
    assert jacobi_at_3(0, 7, -9) == 1
    # two-term sum: C(0,1) C(-1,0) 2 + C(0,0) C(-1,1) 1 = 0 - 1
    assert jacobi_at_3(1, -1, -2) == -1
    assert jacobi_at_3(2, -1, -3) == -1


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("alpha,beta", [(0, 0), (1, 2), (3, 0), (2, 5)])
def test_jacobi_against_hypergeometric(n, alpha, beta):
    # nonnegative parameters: mpmath's 2F1 representation is unambiguous
    assert jacobi_at_3(n, alpha, beta) == int(mpmath.nint(mpmath.jacobi(n, alpha, beta, 3)))


@pytest.mark.parametrize("N,q,expected", [
    (5, 1, (-1, -3, -2, 2, 3, 1)),
    (4, 2, (1, 0, -2, 0, 1)),
    (6, 3, (-1, 0, 3, 0, -3, 0, 1)),
    (3, 0, (1, 3, 3, 1)),
])
@pytest.mark.parametrize("method", METHODS)
def test_triangle_printed_rows(N, q, expected, method):
    if method is Method.SPECIAL_CASE and not has_special_case(N, q):
        pytest.skip("no special case")
    assert triangle_row(N, q, method).coeffs == expected


def test_scaled_row():
    row = triangle_row(4, 1, scaled=True)
    assert row.scaled and row.coeffs == (-4, -8, 0, 8, 4)


def test_triangle_rejects_bad_rank():
    with pytest.raises(ValueError):
        triangle_row(3, 4)
    with pytest.raises(ValueError):
        triangle_row(3, -1)
    with pytest.raises(ValueError):
        triangle_row(8, 4, "special_case")


def test_triangle_row_length_invariant():
    with pytest.raises(ValueError):
        TriangleRow(3, 1, (1, 2, 3))


def brute_row(N, q):
    """a_k^(q) via the operator picture: sum of e_q over states with k up spins / C(N, q)."""
    out = [0] * (N + 1)
    for sigmas in itertools.product((1, -1), repeat=N):
        k = sigmas.count(1)
        out[k] += sum(math.prod(c) for c in itertools.combinations(sigmas, q))
    return [Fraction(x, math.comb(N, q)) for x in out]


@pytest.mark.parametrize("N", range(0, 9))
def test_rows_match_enumeration(N):
    for q in range(N + 1):
        assert list(triangle_row(N, q).coeffs) == brute_row(N, q)


@settings(max_examples=150, deadline=None)
@given(rank_pairs(64))
def test_methods_agree(nq):
    N, q = nq
    gf = triangle_row(N, q, "generating_function").coeffs
    assert triangle_row(N, q, "jacobi").coeffs == gf
    if has_special_case(N, q):
        assert triangle_row(N, q, "special_case").coeffs == gf


@settings(max_examples=150, deadline=None)
@given(rank_pairs(64))
def test_reflection(nq):
    N, q = nq
    a, b = triangle_row(N, q).coeffs, triangle_row(N, N - q).coeffs
    assert all(a[k] == (-1) ** (N + k) * b[k] for k in range(N + 1))


@settings(max_examples=150, deadline=None)
@given(rank_pairs(64))
def test_column_sums(nq):
    N, q = nq
    assert sum(triangle_row(N, q, scaled=True).coeffs) == (2**N if q == 0 else 0)


@pytest.mark.parametrize("N", range(1, 65))
def test_q1_is_antisymmetric_catalan(N):
    a1 = triangle_row(N, 1).coeffs
    for k in range(N + 1):
        m = Fraction(2 * k - N, 2)
        top = int(Fraction(N, 2) - m)
        assert a1[k] == binomial(N - 1, top) - binomial(N - 1, top - 1)


@pytest.mark.parametrize("N", range(1, 65))
def test_pascal_recurrence(N):
    cur, prev = triangle_row(N, 0).coeffs, triangle_row(N - 1, 0).coeffs
    for k in range(N + 1):
        left = prev[k - 1] if k else 0
        right = prev[k] if k < N else 0
        assert cur[k] == left + right


@pytest.mark.parametrize("N", range(1, 65))
def test_abs_sum_identity(N):
    assert sum(abs(a) for a in triangle_row(N, 1, scaled=True).coeffs) == 2 * N * math.comb(N - 1, N // 2)


def test_pyramid_examples():
    assert pyramid_slice(4).row(0) == (6, 0, -12, 0, 6)
    assert pyramid_slice(6).row(-1) == (15, -30, -15, 60, -15, -30, 15)
    assert pyramid_slice(5, reduced=True).row(Fraction(3, 2)) == (5, 3, 1, -1, -3, -5)


@pytest.mark.parametrize("N", range(1, 13))
@pytest.mark.parametrize("reduced", [False, True])
def test_pyramid_slice_invariants(N, reduced):
    sl = pyramid_slice(N, reduced)
    assert sl.column(0) == tuple(math.comb(N, r) for r in range(N + 1))
    for q in range(N + 1):
        assert sl.column(q) == triangle_row(N, q, scaled=not reduced).coeffs
        for r in range(N + 1):
            assert sl.entries[N - r][q] == (-1) ** q * sl.entries[r][q]


def test_pyramid_rejects_bad_input():
    with pytest.raises(ValueError):
        pyramid_slice(0)
    with pytest.raises(ValueError):
        pyramid_slice(3).row(1)  # integer m on an odd-N ladder


@pytest.mark.parametrize("q,expected", [(0, [1]), (1, [0, 2]), (2, [-2, 0, 4]), (3, [0, -12, 0, 8])])
def test_hermite_examples(q, expected):
    assert hermite_coeffs(q) == expected


@pytest.mark.parametrize("q", range(0, 16))
def test_hermite_against_numpy(q):
    ref = np.polynomial.hermite.herm2poly([0] * q + [1])
    assert np.array_equal(np.array(hermite_coeffs(q), dtype=float), ref)


def brute_mad(N):
    total = sum(abs(Fraction(sum(bits), 1) - Fraction(N, 2)) for bits in itertools.product((0, 1), repeat=N))
    return total / 2**N


@pytest.mark.parametrize("N,expected", [(1, Fraction(1, 2)), (2, Fraction(1, 2)), (4, Fraction(3, 4))])
def test_mad_examples(N, expected):
    assert mean_abs_deviation(N) == expected


@pytest.mark.parametrize("N", range(1, 13))
def test_mad_against_enumeration(N):
    assert mean_abs_deviation(N) == brute_mad(N)


@pytest.mark.parametrize("n,expected", [(5, 15), (0, 1), (6, 48), (-1, 1), (1, 1), (7, 105)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


def test_double_factorial_rejects():
    with pytest.raises(ValueError):
        double_factorial(-2)


@settings(max_examples=100, deadline=None)
@given(rank_pairs(32))
def test_line_amplitudes_change_sign_q_times(nq):
    N, q = nq
    assert count_sign_changes(triangle_row(N, q, scaled=True).coeffs) == q


def test_count_sign_changes_skips_zeros():
    assert count_sign_changes([1, 0, -2, 0, 1]) == 2
    assert count_sign_changes([0, 0]) == 0
