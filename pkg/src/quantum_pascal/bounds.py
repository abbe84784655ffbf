"""Symmetry-constrained I_z -> S_z polarization-transfer bound in I_N S systems."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import double_factorial, mean_abs_deviation, triangle_row


class InconsistentBound(RuntimeError):
    """The closed forms of b_max disagree; always an implementation bug."""


@dataclass(frozen=True)
class AbsTrace:
    closed_form: int
    brute_sum: int


@dataclass(frozen=True)
class BoundReport:
    N: int
    k_gamma: float
    trace_z0: int
    trace_abs_z1: int
    ratio: Fraction  # b_max / k_gamma
    closed_forms: dict

    @property
    def b_max(self) -> float:
        return self.k_gamma * float(self.ratio)

    def as_dict(self) -> dict:
        return {
            "n": self.N,
            "k_gamma": self.k_gamma,
            "trace_z0": str(self.trace_z0),
            "trace_abs_z1": str(self.trace_abs_z1),
            "b_max_over_k_gamma": str(self.ratio),
            "b_max": self.b_max,
            "closed_forms": {k: str(v) for k, v in self.closed_forms.items()},
        }


def _check_n(N: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")


def trace_abs_z1(N: int) -> AbsTrace:
    """Tr|Z_N^1| as the closed form 2N C(N-1, floor(N/2)) and as sum_k |A_k^(1)|."""
    _check_n(N)
    closed = 2 * N * math.comb(N - 1, N // 2)
    brute = sum(abs(a) for a in triangle_row(N, 1, scaled=True).coeffs)
    return AbsTrace(closed, brute)


def enhancement_forms(N: int) -> dict[str, Fraction]:
    _check_n(N)
    binomial_form = Fraction(N * math.comb(N - 1, N // 2), 2 ** (N - 1))
    if N % 2:
        df_form = Fraction(double_factorial(N), double_factorial(N - 1))
    else:
        df_form = Fraction(double_factorial(N - 1), double_factorial(N - 2))
    return {
        "binomial_form": binomial_form,
        "double_factorial_form": df_form,
        "md_form": 2 * mean_abs_deviation(N),
    }


def max_enhancement(N: int, k_gamma: float = 1.0) -> BoundReport:
    """b_max = k_gamma Tr|Z_N^1| / Tr Z_N^0, checked three ways."""
    _check_n(N)
    if not k_gamma > 0:
        raise ValueError(f"k_gamma must be positive, got {k_gamma}")
    forms = enhancement_forms(N)
    if len(set(forms.values())) != 1:
        raise InconsistentBound(f"closed forms disagree for N={N}: {forms}")
    tr = trace_abs_z1(N)
    if tr.closed_form != tr.brute_sum:
        raise InconsistentBound(f"Tr|Z_N^1| closed form {tr.closed_form} != brute sum {tr.brute_sum}")
    ratio = Fraction(tr.closed_form, 2**N)
    if ratio != forms["binomial_form"]:
        raise InconsistentBound(f"trace ratio {ratio} != closed form {forms['binomial_form']}")
    return BoundReport(N, float(k_gamma), 2**N, tr.closed_form, ratio, forms)


@dataclass(frozen=True)
class ManifoldEigen:
    m: Fraction
    manifold_sum: int
    multiplicity: int
    eigenvalue: Fraction  # per-state eigenvalue, manifold_sum / multiplicity


def eigen_summary(N: int, q: int) -> list[ManifoldEigen]:
    """Per-manifold multiplicity and summed eigenvalue of Z_N^q."""
    A = triangle_row(N, q, scaled=True).coeffs
    out = []
    for k, a in enumerate(A):
        m = Fraction(2 * k - N, 2)
        mult = math.comb(N, k)
        out.append(ManifoldEigen(m, a, mult, Fraction(a, mult)))
    return out
