"""Brute-force spin-1/2 operator oracle.

Diagonal (longitudinal) operators are kept as exact integer vectors over the
2^N product basis. Basis state ``b`` is an N-bit integer; bit i set means
spin i is up (sigma_i = +1). Dense operators are complex numpy matrices in
the same ordering, built by Kronecker products with spin 0 as the least
significant bit.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .combinatorics import m_to_index, pyramid_slice

MAX_DIAGONAL_N = 24
MAX_DENSE_N = 12
MAX_COHERENCE_N = 10


@dataclass(frozen=True, eq=False)
class DiagonalOperator:
    """Exact integer eigenvalues over the 2^N product basis (int64 array)."""

    N: int
    diag: np.ndarray

    def __post_init__(self):
        if len(self.diag) != 2**self.N:
            raise ValueError(f"diagonal of an N={self.N} operator has {2**self.N} entries")

    def trace(self) -> int:
        return int(self.diag.sum())

    def to_dense(self) -> "DenseOperator":
        return DenseOperator(self.N, np.diag(self.diag.astype(complex)))


@dataclass(frozen=True, eq=False)
class DenseOperator:
    N: int
    entries: np.ndarray

    def __post_init__(self):
        d = 2**self.N
        if self.entries.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix, got {self.entries.shape}")

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        _same_size(self, other)
        return DenseOperator(self.N, self.entries @ other.entries)

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.N, self.entries.conj().T)

    def norm(self) -> float:
        return float(np.linalg.norm(self.entries))


def _same_size(a, b) -> None:
    if a.N != b.N:
        raise ValueError(f"operator size mismatch: N={a.N} vs N={b.N}")


def _check_diag_n(N: int) -> None:
    if not 0 <= N <= MAX_DIAGONAL_N:
        raise ValueError(f"diagonal operators need 0 <= N <= {MAX_DIAGONAL_N}, got {N}")


def up_counts(N: int) -> np.ndarray:
    """Number of up spins for each basis index 0..2^N-1."""
    b = np.arange(2**N, dtype=np.int64)
    counts = np.zeros_like(b)
    for i in range(N):
        counts += (b >> i) & 1
    return counts


def esp_by_up_count(N: int, q: int) -> list[int]:
    """e_q(sigma) for a state with u up spins, u = 0..N.

    Dynamic program over the spins: multiply out prod_i (1 + sigma_i t) and
    keep the t^q coefficient.
    """
    table = []
    for u in range(N + 1):
        e = [1] + [0] * q
        for sigma in [1] * u + [-1] * (N - u):
            for j in range(q, 0, -1):
                e[j] += sigma * e[j - 1]
        table.append(e[q])
    return table


def esp_by_enumeration(sigmas, q: int) -> int:
    """e_q by explicit enumeration of the C(N, q) distinct index subsets."""
    return sum(math.prod(c) for c in itertools.combinations(sigmas, q))


def sigmas_of(N: int, b: int) -> tuple[int, ...]:
    return tuple(1 if (b >> i) & 1 else -1 for i in range(N))


def z_operator(N: int, q: int, enumerate_subsets: bool = False) -> DiagonalOperator:
    """Z_N^q = 2^q * (sum of distinct q-fold products of I_iz), as eigenvalues e_q(sigma)."""
    _check_diag_n(N)
    if not 0 <= q <= N:
        raise ValueError(f"q must lie in 0..N (N={N}), got {q}")
    if enumerate_subsets:
        diag = [esp_by_enumeration(sigmas_of(N, b), q) for b in range(2**N)]
        return DiagonalOperator(N, np.array(diag, dtype=np.int64))
    table = np.array(esp_by_up_count(N, q), dtype=np.int64)
    return DiagonalOperator(N, table[up_counts(N)])


def s_projector(N: int, m) -> DiagonalOperator:
    """Projector onto product states with total magnetic quantum number m."""
    _check_diag_n(N)
    u = m_to_index(N, m)
    return DiagonalOperator(N, (up_counts(N) == u).astype(np.int64))


def manifold_trace(N: int, m, q: int) -> int:
    """Tr(S_N^m Z_N^q) by summing e_q over the states in manifold m."""
    s = s_projector(N, m)
    z = z_operator(N, q)
    return int(z.diag[s.diag == 1].sum())


@dataclass
class MapReport:
    N: int
    passed: bool
    max_deviation: Fraction
    checks: int
    failure: str | None = None


def verify_basis_maps(N: int) -> MapReport:
    """Check both directions of the S_N^m <-> Z_N^q expansion exactly.

    With M[m][q] = Tr(S^m Z^q) (the non-reduced pyramid slice), the two
    families are orthogonal and
        Z^q = sum_m M[m][q] * S^m / Tr(S^m S^m)       (Tr S^m S^m = C(N, k))
        S^m = 2^-N sum_q M[m][q] * Z^q / C(N, q)      (Tr Z^q Z^q = 2^N C(N, q))
    The second form equals 2^-N sum_q a_k^(q) Z^q with the reduced kernel.

    Both sides are cleared of denominators by D = lcm_k C(N, k) and compared
    as integers on every basis state. int64 is exact up to N = 20; larger N
    falls back to Python ints (slow).
    """
    if not 1 <= N <= MAX_DIAGONAL_N:
        raise ValueError(f"verify_basis_maps needs 1 <= N <= {MAX_DIAGONAL_N}")
    dtype = np.int64 if N <= 20 else object
    M = pyramid_slice(N).entries
    ms = [Fraction(2 * r - N, 2) for r in range(N + 1)]
    S = [s_projector(N, m).diag.astype(dtype) for m in ms]
    Z = [z_operator(N, q).diag.astype(dtype) for q in range(N + 1)]
    binom = [math.comb(N, k) for k in range(N + 1)]
    D = math.lcm(*binom)
    checks = 0

    def mismatch(lhs, rhs, denom, what):
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            b = int(bad[0])
            dev = abs(Fraction(int(lhs[b]) - int(rhs[b]), denom))
            return MapReport(N, False, dev, checks + b + 1,
                             f"{what} at b={b}: {Fraction(int(lhs[b]), denom)} != {Fraction(int(rhs[b]), denom)}")
        return None

    for q in range(N + 1):
        rebuilt = np.zeros(2**N, dtype=dtype)
        for r in range(N + 1):
            rebuilt += (M[r][q] * (D // binom[r])) * S[r]
        fail = mismatch(rebuilt, D * Z[q], D, f"Z from S mismatch (q={q})")
        if fail:
            return fail
        checks += 2**N

    for r, m in enumerate(ms):
        rebuilt = np.zeros(2**N, dtype=dtype)
        for q in range(N + 1):
            rebuilt += (M[r][q] * (D // binom[q])) * Z[q]
        fail = mismatch(rebuilt, (2**N * D) * S[r], 2**N * D, f"S from Z mismatch (m={m})")
        if fail:
            return fail
        checks += 2**N
    return MapReport(N, True, Fraction(0), checks)


_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)


def _kron_power(single: np.ndarray, N: int) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for _ in range(N):
        out = np.kron(single, out)
    return out


def rotation(N: int, phi: float, beta: float) -> DenseOperator:
    """R_phi(beta) = exp[-i beta (cos phi I_x + sin phi I_y)] on N spins."""
    if not 0 <= N <= MAX_DENSE_N:
        raise ValueError(f"dense rotations need N <= {MAX_DENSE_N}")
    n_sigma = math.cos(phi) * _SX + math.sin(phi) * _SY
    # exp(-i theta n.sigma) = cos(theta) 1 - i sin(theta) n.sigma, theta = beta / 2
    single = math.cos(beta / 2) * np.eye(2) - 1j * math.sin(beta / 2) * n_sigma
    return DenseOperator(N, _kron_power(single, N))


def z_rotation_phases(N: int, beta: float) -> np.ndarray:
    """Diagonal of R_z(beta) = exp(-i beta I_z)."""
    m = up_counts(N) - N / 2
    return np.exp(-1j * beta * m)


def rotated(op: DenseOperator | DiagonalOperator, phi: float, beta: float) -> DenseOperator:
    """R_phi(beta) . op . R_phi(-beta)."""
    if isinstance(op, DiagonalOperator):
        op = op.to_dense()
    return rotation(op.N, phi, beta) @ op @ rotation(op.N, phi, -beta)


def liouville_bracket(A: DenseOperator, B: DenseOperator) -> complex:
    """(A|B) = Tr[A^dagger B]."""
    _same_size(A, B)
    return complex(np.vdot(A.entries, B.entries))


def liouville_projection(A: DenseOperator, B: DenseOperator) -> complex:
    """Normalized projection <A -> B> = (A|B) / (B|B)."""
    return liouville_bracket(A, B) / liouville_bracket(B, B)


def coherence_decompose(T: DenseOperator, N: int | None = None, tol: float = 1e-10) -> dict[int, DenseOperator]:
    """Split T into pure coherence-order components by discrete z-rotation sampling.

    T_p = (1/K) sum_j e^{+i p beta_j} R_z(beta_j) T R_z(-beta_j), beta_j = 2 pi j / K,
    with K = 2N + 1 so orders |p| <= N do not alias.
    """
    N = T.N if N is None else N
    if N != T.N:
        raise ValueError("N does not match the operator size")
    if N > MAX_COHERENCE_N:
        raise ValueError(f"coherence decomposition capped at N={MAX_COHERENCE_N}")
    K = 2 * N + 1
    betas = [2 * math.pi * j / K for j in range(K)]
    frames = []
    for beta in betas:
        ph = z_rotation_phases(N, beta)
        frames.append(ph[:, None] * T.entries * ph.conj()[None, :])
    out = {}
    for p in range(-N, N + 1):
        acc = sum(np.exp(1j * p * beta) * f for beta, f in zip(betas, frames)) / K
        if np.linalg.norm(acc) > tol:
            out[p] = DenseOperator(N, acc)
    return out
