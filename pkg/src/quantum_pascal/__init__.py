"""Quantum Pascal pyramid: exact triangles, a spin-1/2 operator oracle,
multiplet spectra with Hermite-Gaussian envelopes, and transfer bounds."""

from .bounds import BoundReport, eigen_summary, max_enhancement, trace_abs_z1
from .combinatorics import (
    PyramidSlice,
    TriangleRow,
    binomial,
    double_factorial,
    hermite_coeffs,
    jacobi_at_3,
    mean_abs_deviation,
    pyramid_slice,
    triangle_row,
)
from .operators import (
    coherence_decompose,
    liouville_bracket,
    liouville_projection,
    manifold_trace,
    rotation,
    s_projector,
    verify_basis_maps,
    z_operator,
)
from .spectra import (
    envelope_error,
    gaussian_envelope,
    hermite_gauss_envelope,
    lorentzian,
    multiplet_spectrum,
)

__version__ = "0.1.0"
