"""Invariant suite run by ``quantum-pascal verify``.

Every check appends to a running count; a failing check records a dict that
names the offending indices so the output is machine readable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from . import bounds, combinatorics as cb, operators as ops, spectra
from .render import parse_pyramid_csv, parse_triangle_csv

TABLE_Q = (0, 1, 2, 3)
PYRAMID_N = (1, 2, 3, 4, 6)
REDUCED_N = (5,)
MAX_TRIANGLE_N = 64


@dataclass
class Suite:
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    def expect(self, ok: bool, check: str, **detail) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append({"check": check, **detail})
        return ok

    @property
    def passed(self) -> bool:
        return not self.failures


def golden_dir() -> Path:
    return Path(str(resources.files("quantum_pascal") / "golden"))


def check_golden(suite: Suite, directory: Path | None = None) -> None:
    directory = golden_dir() if directory is None else Path(directory)
    for q in TABLE_Q:
        printed = parse_triangle_csv((directory / f"triangle_q{q}.csv").read_text())
        for N, row in sorted(printed.items()):
            got = cb.triangle_row(N, q).coeffs
            suite.expect(len(row) == len(got), "golden_triangle_length", N=N, q=q)
            for k, (want, have) in enumerate(zip(row, got)):
                suite.expect(want == have, "golden_triangle", N=N, q=q, k=k, expected=want, got=have)
    for N, reduced in [(n, False) for n in PYRAMID_N] + [(n, True) for n in REDUCED_N]:
        name = f"pyramid_n{N}{'_reduced' if reduced else ''}.csv"
        printed = parse_pyramid_csv((directory / name).read_text())
        sl = cb.pyramid_slice(N, reduced=reduced)
        suite.expect(len(printed) == N + 1, "golden_pyramid_rows", N=N, reduced=reduced)
        for m, row in printed.items():
            got = sl.row(m)
            for q, (want, have) in enumerate(zip(row, got)):
                suite.expect(want == have, "golden_pyramid", N=N, m=str(m), q=q, reduced=reduced,
                             expected=want, got=have)


def check_triangles(suite: Suite, n_max: int) -> None:
    for N in range(n_max + 1):
        prev = cb.triangle_row(N - 1, 0).coeffs if N else None
        for q in range(N + 1):
            gf = cb.triangle_row(N, q, "generating_function").coeffs
            jac = cb.triangle_row(N, q, "jacobi").coeffs
            for k, (x, y) in enumerate(zip(gf, jac)):
                suite.expect(x == y, "method_agreement", N=N, q=q, k=k, generating_function=x, jacobi=y)
            if cb.has_special_case(N, q):
                sc = cb.triangle_row(N, q, "special_case").coeffs
                suite.expect(sc == gf, "special_case_agreement", N=N, q=q)
            mirror = cb.triangle_row(N, N - q).coeffs
            suite.expect(all(gf[k] == (-1) ** (N + k) * mirror[k] for k in range(N + 1)),
                         "reflection", N=N, q=q)
            total = sum(cb.triangle_row(N, q, scaled=True).coeffs)
            suite.expect(total == (2**N if q == 0 else 0), "column_sum", N=N, q=q, total=total)
            suite.expect(cb.count_sign_changes(gf) == q, "sign_changes", N=N, q=q)
        if N >= 1:
            a1 = cb.triangle_row(N, 1).coeffs
            catalan = [cb.binomial(N - 1, N - k) - cb.binomial(N - 1, N - k - 1) for k in range(N + 1)]
            suite.expect(list(a1) == catalan, "catalan_q1", N=N)
            a0 = cb.triangle_row(N, 0).coeffs
            pascal = [prev[k] if k < N else 0 for k in range(N + 1)]
            pascal = [pascal[k] + (prev[k - 1] if k else 0) for k in range(N + 1)]
            suite.expect(list(a0) == pascal, "pascal_recurrence", N=N)


def check_oracle(suite: Suite, n_max: int, map_cap: int) -> None:
    for N in range(1, n_max + 1):
        sl = cb.pyramid_slice(N)
        up = ops.up_counts(N)
        for q in range(N + 1):
            z = ops.z_operator(N, q)
            suite.expect(z.trace() == (2**N if q == 0 else 0), "z_trace", N=N, q=q, trace=z.trace())
            for k in range(N + 1):
                tr = int(z.diag[up == k].sum())
                suite.expect(tr == sl.entries[k][q], "oracle_manifold_trace",
                             N=N, m=str(Fraction(2 * k - N, 2)), q=q, oracle=tr, pyramid=sl.entries[k][q])
            if N <= 12:
                brute = ops.z_operator(N, q, enumerate_subsets=True)
                suite.expect(bool(np.array_equal(brute.diag, z.diag)), "esp_shortcut", N=N, q=q)
        if N <= map_cap:
            report = ops.verify_basis_maps(N)
            suite.expect(report.passed, "basis_maps", N=N, detail=report.failure)


BETAS = [k * math.pi / 12 for k in range(25)]
PHIS = (0.0, math.pi / 3)


def check_dense(suite: Suite, n_max: int) -> None:
    for N in range(1, n_max + 1):
        for phi in PHIS:
            R = ops.rotation(N, phi, BETAS[5]).entries
            dev = float(np.max(np.abs(R @ R.conj().T - np.eye(2**N))))
            suite.expect(dev < 1e-12, "unitarity", N=N, phi=phi, deviation=dev)
        for q in range(N + 1):
            Z = ops.z_operator(N, q).to_dense()
            for phi in PHIS:
                for j, beta in enumerate(BETAS):
                    proj = ops.liouville_projection(ops.rotated(Z, phi, beta), Z)
                    err = abs(proj - math.cos(beta) ** q)
                    suite.expect(err < 1e-10, "rotation_law", N=N, q=q, phi=phi, beta_index=j, error=err)
            parts = ops.coherence_decompose(ops.rotated(Z, 0.0, math.pi / 2), N)
            orders = sorted(parts)
            allowed = all(abs(p) <= q and (p - q) % 2 == 0 for p in orders)
            suite.expect(allowed, "coherence_selection", N=N, q=q, orders=orders)
            suite.expect(q in parts and -q in parts, "coherence_extreme_orders", N=N, q=q, orders=orders)
            for p in orders:
                other = parts.get(-p)
                diff = abs(parts[p].norm() - other.norm()) if other is not None else math.inf
                suite.expect(diff < 1e-10, "coherence_norm_symmetry", N=N, q=q, p=p)


def check_bounds(suite: Suite, oracle_cap: int) -> None:
    prev = None
    for N in range(1, MAX_TRIANGLE_N + 1):
        forms = bounds.enhancement_forms(N)
        suite.expect(len(set(forms.values())) == 1, "bmax_forms", N=N, forms={k: str(v) for k, v in forms.items()})
        tr = bounds.trace_abs_z1(N)
        suite.expect(tr.closed_form == tr.brute_sum, "trace_abs_z1", N=N)
        b = forms["binomial_form"]
        if prev is not None:
            suite.expect(b >= prev, "bmax_monotone", N=N)
        prev = b
        if N % 2 and N + 2 <= MAX_TRIANGLE_N:
            ratio = bounds.enhancement_forms(N + 2)["binomial_form"] / b
            suite.expect(ratio == Fraction(N + 2, N + 1), "bmax_odd_ratio", N=N)
        if N <= oracle_cap:
            z1 = ops.z_operator(N, 1).diag
            suite.expect(int(np.abs(z1).sum()) == tr.closed_form, "trace_abs_z1_oracle", N=N)
    suite.expect(bounds.max_enhancement(3).ratio == bounds.max_enhancement(4).ratio == Fraction(3, 2),
                 "bmax_3_4")


def check_spectra(suite: Suite, n_max: int) -> None:
    for N in range(1, n_max + 1):
        grid = spectra.Grid(points=801)
        for q in range(N + 1):
            s = spectra.multiplet_spectrum(N, q, 0.05, grid)
            dev = float(np.max(np.abs(s.intensity[::-1] - (-1) ** q * s.intensity)))
            suite.expect(dev < 1e-12 * max(1.0, float(np.max(np.abs(s.intensity)))),
                         "spectrum_reflection", N=N, q=q, deviation=dev)


def run_suite(max_n: int, deep: bool = False, golden: Path | None = None) -> Suite:
    if not 1 <= max_n <= ops.MAX_DIAGONAL_N:
        raise ValueError(f"max_n must lie in 1..{ops.MAX_DIAGONAL_N}")
    suite = Suite()
    check_golden(suite, golden)
    check_triangles(suite, MAX_TRIANGLE_N if deep else max_n)
    check_oracle(suite, max_n, map_cap=16 if deep else 12)
    check_dense(suite, min(max_n, 10 if deep else 8))
    check_bounds(suite, oracle_cap=min(max_n, 20))
    check_spectra(suite, min(max_n, 12))
    return suite
