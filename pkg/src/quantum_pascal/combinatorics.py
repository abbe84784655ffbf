"""Exact integer combinatorics for the quantum Pascal pyramid.

Everything here works on Python ints / Fractions; no floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Method(str, Enum):
    GENERATING_FUNCTION = "generating_function"
    JACOBI = "jacobi"
    SPECIAL_CASE = "special_case"


@dataclass(frozen=True)
class TriangleRow:
    """Coefficients a_k^(q), k = 0..N, for one (N, q).

    With ``scaled=True`` the entries are A_k^(q) = C(N, q) * a_k^(q).
    """

    N: int
    q: int
    coeffs: tuple[int, ...]
    scaled: bool = False

    def __post_init__(self):
        if len(self.coeffs) != self.N + 1:
            raise ValueError(f"row N={self.N} needs {self.N + 1} coefficients, got {len(self.coeffs)}")


@dataclass(frozen=True)
class PyramidSlice:
    """(N+1) x (N+1) matrix M[r][q]; row r corresponds to m = r - N/2."""

    N: int
    entries: tuple[tuple[int, ...], ...]
    reduced: bool = False

    def m_values(self) -> list[Fraction]:
        return [Fraction(2 * r - self.N, 2) for r in range(self.N + 1)]

    def row(self, m) -> tuple[int, ...]:
        return self.entries[m_to_index(self.N, m)]

    def column(self, q: int) -> tuple[int, ...]:
        return tuple(row[q] for row in self.entries)


def m_to_index(N: int, m) -> int:
    """Row index k = N/2 + m; rejects m that is not on the ladder."""
    k = Fraction(m) + Fraction(N, 2)
    if k.denominator != 1 or not 0 <= k <= N:
        raise ValueError(f"m={m} is not in the ladder -N/2..N/2 for N={N}")
    return int(k)


def format_m(m) -> str:
    m = Fraction(m)
    if m.denominator == 1:
        return f"{int(m):+d}" if m else "0"
    return f"{m.numerator:+d}/{m.denominator}"


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient via the falling factorial.

    Negative ``n`` is allowed (binomial(-1, s) == (-1)**s); ``k < 0`` gives 0.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for negative n
    return (-1) ** k * math.comb(k - n - 1, k)


def jacobi_at_3(n: int, alpha: int, beta: int) -> int:
    """P_n^(alpha, beta)(3) for integer parameters, by the explicit finite sum.

    At x = 3 the factors (x-1)/2 and (x+1)/2 are 1 and 2, so the result is
    an exact integer.
    """
    if n < 0:
        raise ValueError("jacobi_at_3 needs n >= 0")
    return sum(
        binomial(n + alpha, n - s) * binomial(n + beta, s) * 2 ** (n - s)
        for s in range(n + 1)
    )


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _check_rank(N: int, q: int) -> None:
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    if not 0 <= q <= N:
        raise ValueError(f"q must lie in 0..N (N={N}), got {q}")


def _row_generating_function(N: int, q: int) -> list[int]:
    # coefficient of x^k in (1+x)^(N-q) * (x-1)^q
    plus = [math.comb(N - q, i) for i in range(N - q + 1)]
    minus = [(-1) ** (q - i) * math.comb(q, i) for i in range(q + 1)]
    return _poly_mul(plus, minus)


def _row_jacobi(N: int, q: int) -> list[int]:
    return [jacobi_at_3(N - k, k - q, -N - 1) for k in range(N + 1)]


def _special_q(N: int, q: int) -> list[int]:
    C = binomial
    if q == 0:
        return [C(N, k) for k in range(N + 1)]
    if q == 1:
        return [C(N - 1, k - 1) - C(N - 1, k) for k in range(N + 1)]
    if q == 2:
        return [C(N, k) - 4 * C(N - 2, k - 1) for k in range(N + 1)]
    raise ValueError(f"no special-case formula for q={q}")


def _row_special_case(N: int, q: int) -> list[int]:
    if q <= 2:
        return _special_q(N, q)
    if N - q <= 2:
        mirror = _special_q(N, N - q)
        return [(-1) ** (N + k) * a for k, a in enumerate(mirror)]
    raise ValueError(f"special_case only covers q in {{0,1,2}} or {{N-2,N-1,N}}; got N={N}, q={q}")


_BUILDERS = {
    Method.GENERATING_FUNCTION: _row_generating_function,
    Method.JACOBI: _row_jacobi,
    Method.SPECIAL_CASE: _row_special_case,
}


def triangle_row(N: int, q: int, method: Method | str = Method.GENERATING_FUNCTION,
                 scaled: bool = False) -> TriangleRow:
    _check_rank(N, q)
    coeffs = _BUILDERS[Method(method)](N, q)
    if scaled:
        factor = math.comb(N, q)
        coeffs = [factor * a for a in coeffs]
    return TriangleRow(N, q, tuple(coeffs), scaled)


def has_special_case(N: int, q: int) -> bool:
    return q <= 2 or N - q <= 2


def pyramid_slice(N: int, reduced: bool = False) -> PyramidSlice:
    if N < 1:
        raise ValueError(f"pyramid slices start at N=1, got {N}")
    cols = [triangle_row(N, q, scaled=not reduced).coeffs for q in range(N + 1)]
    entries = tuple(tuple(cols[q][r] for q in range(N + 1)) for r in range(N + 1))
    return PyramidSlice(N, entries, reduced)


def hermite_coeffs(q: int) -> list[int]:
    """Ascending-power coefficients of the physicists' Hermite polynomial H_q."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    prev, cur = [1], [0, 2]
    if q == 0:
        return prev
    for n in range(1, q):
        # H_{n+1} = 2x H_n - 2n H_{n-1}
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= 2 * n * c
        prev, cur = cur, nxt
    return cur


def mean_abs_deviation(N: int) -> Fraction:
    """Mean absolute deviation of Binomial(N, 1/2), exactly."""
    if N < 1:
        raise ValueError("N must be >= 1")
    total = sum(math.comb(N, k) * abs(Fraction(2 * k - N, 2)) for k in range(N + 1))
    return total / 2**N


def double_factorial(n: int) -> int:
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def count_sign_changes(values) -> int:
    """Sign changes in a sequence, skipping zeros."""
    signs = [v > 0 for v in values if v != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))
