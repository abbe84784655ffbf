"""Multiplet spectra and their Gaussian / Hermite-Gaussian envelopes.

Frequencies are dimensionless, in units of the I-S coupling J_IS; line m of
an N-spin multiplet sits at nu = m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .combinatorics import hermite_coeffs, triangle_row

KINDS = ("lorentzian_comb", "gaussian", "hermite_gauss")
DEFAULT_POINTS = 4001


@dataclass(frozen=True)
class Grid:
    """Uniform frequency grid; ``span`` defaults to N/2 + 1 on each side."""

    points: int = DEFAULT_POINTS
    span: float | None = None

    def sample(self, N: int) -> np.ndarray:
        span = N / 2 + 1 if self.span is None else self.span
        if self.points < 2 or span <= 0:
            raise ValueError("grid needs at least 2 points and a positive span")
        return np.linspace(-span, span, self.points)


@dataclass(frozen=True)
class SpectrumMeta:
    N: int
    q: int
    w: float
    kind: str


@dataclass(frozen=True, eq=False)
class SpectrumTrace:
    nu: np.ndarray
    intensity: np.ndarray
    meta: SpectrumMeta

    def __post_init__(self):
        if self.nu.shape != self.intensity.shape:
            raise ValueError("nu and intensity must have the same length")

    def at(self, nu) -> np.ndarray:
        """Evaluate the underlying model off-grid (exact line centres etc.)."""
        return evaluate(self.meta, np.asarray(nu, dtype=float))

    def integral(self) -> float:
        return float(np.trapezoid(self.intensity, self.nu))


def _as_grid(N: int, grid) -> np.ndarray:
    if grid is None:
        grid = Grid()
    if isinstance(grid, Grid):
        return grid.sample(N)
    nu = np.asarray(grid, dtype=float)
    d = np.diff(nu)
    if nu.ndim != 1 or len(nu) < 2 or np.any(d <= 0) or not np.allclose(d, d[0], rtol=1e-9, atol=0):
        raise ValueError("frequency grid must be strictly increasing with uniform spacing")
    return nu


def _check_w(w: float) -> None:
    if not w > 0:
        raise ValueError(f"linewidth must be positive, got {w}")


def _check_nq(N: int, q: int) -> None:
    if N < 0 or not 0 <= q <= N:
        raise ValueError(f"need 0 <= q <= N, got N={N}, q={q}")


def lorentzian(nu, center: float, w: float):
    """Unit-area Lorentzian with full width at half maximum ``w``."""
    _check_w(w)
    half = w / 2
    return (1 / math.pi) * half / ((np.asarray(nu, dtype=float) - center) ** 2 + half**2)


def line_weights(N: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Line centres m = -N/2..N/2 and weights 2^-N A_{N/2+m}^(q)."""
    A = triangle_row(N, q, scaled=True).coeffs
    centers = np.arange(N + 1) - N / 2
    weights = np.array([float(a) / 2.0**N for a in A])
    return centers, weights


def _comb(N: int, q: int, w: float, nu: np.ndarray) -> np.ndarray:
    centers, weights = line_weights(N, q)
    out = np.zeros_like(nu, dtype=float)
    for c, a in zip(centers, weights):
        if a:
            out += a * lorentzian(nu, c, w)
    return out


def _gauss0(N: int, w: float, nu: np.ndarray) -> np.ndarray:
    return (2 / (math.pi * w)) * math.sqrt(2 / (math.pi * N)) * np.exp(-2 * nu**2 / N)


def _hermite(q: int, x: np.ndarray) -> np.ndarray:
    return np.polynomial.polynomial.polyval(x, [float(c) for c in hermite_coeffs(q)])


def _hermite_gauss(N: int, q: int, w: float, nu: np.ndarray) -> np.ndarray:
    scale = (N / 2) ** (q / 2) / math.factorial(q)
    return scale * _hermite(q, math.sqrt(2 / N) * nu) * _gauss0(N, w, nu)


def evaluate(meta: SpectrumMeta, nu: np.ndarray) -> np.ndarray:
    if meta.kind == "lorentzian_comb":
        return _comb(meta.N, meta.q, meta.w, nu)
    if meta.kind == "gaussian":
        return _gauss0(meta.N, meta.w, nu)
    if meta.kind == "hermite_gauss":
        return _hermite_gauss(meta.N, meta.q, meta.w, nu)
    raise ValueError(f"unknown spectrum kind {meta.kind!r}")


def multiplet_spectrum(N: int, q: int, w: float, grid=None) -> SpectrumTrace:
    """S_N^(q): Lorentzian lines at nu = m weighted by 2^-N A_{N/2+m}^(q)."""
    _check_nq(N, q)
    _check_w(w)
    nu = _as_grid(N, grid)
    meta = SpectrumMeta(N, q, w, "lorentzian_comb")
    return SpectrumTrace(nu, evaluate(meta, nu), meta)


def gaussian_envelope(N: int, w: float, grid=None) -> SpectrumTrace:
    if N < 1:
        raise ValueError("gaussian envelope needs N >= 1")
    _check_w(w)
    nu = _as_grid(N, grid)
    meta = SpectrumMeta(N, 0, w, "gaussian")
    return SpectrumTrace(nu, evaluate(meta, nu), meta)


def hermite_gauss_envelope(N: int, q: int, w: float, grid=None) -> SpectrumTrace:
    """G_N^(q) = ((N/2)^(q/2) / q!) H_q(sqrt(2/N) nu) G_N^(0)(nu)."""
    if N < 1:
        raise ValueError("envelope needs N >= 1")
    _check_nq(N, q)
    _check_w(w)
    nu = _as_grid(N, grid)
    meta = SpectrumMeta(N, q, w, "hermite_gauss")
    return SpectrumTrace(nu, evaluate(meta, nu), meta)


def gaussian_derivative_form(N: int, q: int, w: float, nu, h: float = 1e-3, dps: int = 50) -> np.ndarray:
    """((-1)^q (N/2)^q / q!) d^q/dnu^q G_N^(0), by finite differences.

    Central q-th differences at steps h and h/2, combined by one Richardson
    step. Evaluated in mpmath at ``dps`` digits since h^-q amplifies
    round-off far beyond double precision.
    """
    with mpmath.workdps(dps):
        mN, mw = mpmath.mpf(N), mpmath.mpf(w)
        pref = (2 / (mpmath.pi * mw)) * mpmath.sqrt(2 / (mpmath.pi * mN))

        def g0(x):
            return pref * mpmath.exp(-2 * x**2 / mN)

        def central(x, step):
            # sum_j (-1)^j C(q, j) g0(x + (q/2 - j) step) / step^q
            total = mpmath.mpf(0)
            for j in range(q + 1):
                total += (-1) ** j * math.comb(q, j) * g0(x + (mpmath.mpf(q) / 2 - j) * step)
            return total / step**q

        mh = mpmath.mpf(h)
        factor = (-1) ** q * (mN / 2) ** q / math.factorial(q)
        out = []
        for x in np.atleast_1d(np.asarray(nu, dtype=float)):
            mx = mpmath.mpf(float(x))
            coarse, fine = central(mx, mh), central(mx, mh / 2)
            out.append(float(factor * (4 * fine - coarse) / 3))
    return np.array(out)


@dataclass
class EnvelopeError:
    line_centers: np.ndarray
    line_errors: np.ndarray = field(repr=False)
    max_line_error: float
    l2_error: float
    center_error: float


def envelope_error(comb: SpectrumTrace, envelope: SpectrumTrace) -> EnvelopeError:
    """Compare a comb with an envelope.

    ``max_line_error``: max over line centres m of |comb(m) - env(m)| / max|comb(m)|.
    ``l2_error``: grid L2 distance over the grid L2 norm of the comb.
    ``center_error``: |comb(0) - env(0)| / |comb(0)| (relative error at nu = 0),
    scaled by max|comb(m)| instead when comb(0) vanishes.
    """
    if comb.nu.shape != envelope.nu.shape or not np.array_equal(comb.nu, envelope.nu):
        raise ValueError("comb and envelope must share the same grid")
    N = comb.meta.N
    centers = np.arange(N + 1) - N / 2
    c_vals, e_vals = comb.at(centers), envelope.at(centers)
    scale = np.max(np.abs(c_vals))
    line_errors = np.abs(c_vals - e_vals) / scale if scale else np.abs(c_vals - e_vals)
    diff = comb.intensity - envelope.intensity
    ref = np.sqrt(np.trapezoid(comb.intensity**2, comb.nu))
    l2 = np.sqrt(np.trapezoid(diff**2, comb.nu))
    c0, e0 = float(comb.at(0.0)), float(envelope.at(0.0))
    # odd-symmetric traces vanish at nu = 0 up to rounding; fall back to the line scale
    if abs(c0) > 1e-9 * scale:
        center = float(abs(c0 - e0) / abs(c0))
    else:
        center = float(abs(c0 - e0) / scale if scale else abs(c0 - e0))
    return EnvelopeError(
        line_centers=centers,
        line_errors=line_errors,
        max_line_error=float(np.max(line_errors)),
        l2_error=float(l2 / ref) if ref else float(l2),
        center_error=center,
    )
