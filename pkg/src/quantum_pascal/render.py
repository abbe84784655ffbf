"""CSV / JSON / SVG renderings of triangles, pyramid slices, spectra and bounds.

Big integers are always written as plain decimal strings, never in exponent
notation, so CSV and JSON round-trip exactly.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .combinatorics import PyramidSlice, TriangleRow, format_m

FORMATS = ("csv", "json", "svg")


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _fmt_float(x: float, precision: int) -> str:
    return f"{float(x):.{precision}g}"


# -- triangles ---------------------------------------------------------------

def triangle_csv(rows: list[TriangleRow]) -> str:
    n_max = max(r.N for r in rows)
    header = ["N"] + [str(k) for k in range(n_max + 1)]
    return _csv_text([header] + [[str(r.N)] + [str(a) for a in r.coeffs] for r in rows])


def triangle_json(rows: list[TriangleRow]) -> str:
    payload = [
        {"n": r.N, "q": r.q, "scaled": r.scaled, "coeffs": [str(a) for a in r.coeffs]}
        for r in rows
    ]
    return json.dumps(payload, indent=1) + "\n"


def parse_triangle_csv(text: str) -> dict[int, tuple[int, ...]]:
    """Map N -> coefficients from a triangle CSV."""
    reader = csv.reader(io.StringIO(text))
    next(reader)
    return {int(row[0]): tuple(int(x) for x in row[1:] if x != "") for row in reader if row}


def parse_triangle_json(text: str) -> list[TriangleRow]:
    return [
        TriangleRow(d["n"], d["q"], tuple(int(c) for c in d["coeffs"]), d["scaled"])
        for d in json.loads(text)
    ]


# -- pyramid slices ----------------------------------------------------------

def pyramid_csv(sl: PyramidSlice) -> str:
    header = ["m"] + [str(q) for q in range(sl.N + 1)]
    body = [[format_m(m)] + [str(x) for x in row] for m, row in zip(sl.m_values(), sl.entries)]
    return _csv_text([header] + body)


def pyramid_json(sl: PyramidSlice) -> str:
    payload = {
        "n": sl.N,
        "reduced": sl.reduced,
        "m": [format_m(m) for m in sl.m_values()],
        "q": list(range(sl.N + 1)),
        "entries": [[str(x) for x in row] for row in sl.entries],
    }
    return json.dumps(payload, indent=1) + "\n"


def parse_m(label: str) -> Fraction:
    return Fraction(label.lstrip("+"))


def parse_pyramid_csv(text: str) -> dict[Fraction, tuple[int, ...]]:
    """Map m -> row of integers from a pyramid CSV."""
    reader = csv.reader(io.StringIO(text))
    next(reader)
    return {parse_m(row[0]): tuple(int(x) for x in row[1:]) for row in reader if row}


def parse_pyramid_json(text: str) -> PyramidSlice:
    d = json.loads(text)
    entries = tuple(tuple(int(x) for x in row) for row in d["entries"])
    return PyramidSlice(d["n"], entries, d["reduced"])


# -- spectra -----------------------------------------------------------------

def spectrum_csv(comb, envelope=None, report=None, precision: int = 12, j_hz: float | None = None) -> str:
    lines = []
    meta = comb.meta
    lines.append(f"# N={meta.N} q={meta.q} linewidth={meta.w!r} units=nu/J_IS")
    if report is not None:
        lines.append(f"# max_line_error={_fmt_float(report.max_line_error, precision)}")
        lines.append(f"# l2_error={_fmt_float(report.l2_error, precision)}")
        lines.append(f"# center_error={_fmt_float(report.center_error, precision)}")
    header = ["nu"]
    if j_hz is not None:
        header.append("nu_hz")
    header.append(meta.kind)
    if envelope is not None:
        header.append(envelope.meta.kind)
    rows = [header]
    for i, nu in enumerate(comb.nu):
        row = [_fmt_float(nu, precision)]
        if j_hz is not None:
            row.append(_fmt_float(nu * j_hz, precision))
        row.append(_fmt_float(comb.intensity[i], precision))
        if envelope is not None:
            row.append(_fmt_float(envelope.intensity[i], precision))
        rows.append(row)
    return "\n".join(lines) + "\n" + _csv_text(rows)


def spectrum_json(comb, envelope=None, report=None, precision: int = 12, j_hz: float | None = None) -> str:
    meta = comb.meta
    payload = {
        "n": meta.N,
        "q": meta.q,
        "linewidth": meta.w,
        "units": "nu/J_IS",
        "nu": [float(_fmt_float(x, precision)) for x in comb.nu],
        meta.kind: [float(_fmt_float(x, precision)) for x in comb.intensity],
    }
    if j_hz is not None:
        payload["j_hz"] = j_hz
        payload["nu_hz"] = [float(_fmt_float(x * j_hz, precision)) for x in comb.nu]
    if envelope is not None:
        payload[envelope.meta.kind] = [float(_fmt_float(x, precision)) for x in envelope.intensity]
    if report is not None:
        payload["error"] = {
            "max_line_error": report.max_line_error,
            "l2_error": report.l2_error,
            "center_error": report.center_error,
        }
    return json.dumps(payload) + "\n"


def spectrum_svg(comb, envelope=None, j_hz: float | None = None, width: int = 800, height: int = 400) -> str:
    """Static plot: comb (and envelope) as polylines, ticks at the line centres."""
    pad = 50
    nu = comb.nu
    curves = [comb.intensity] + ([envelope.intensity] if envelope is not None else [])
    lo = min(float(np.min(c)) for c in curves)
    hi = max(float(np.max(c)) for c in curves)
    if hi == lo:
        hi = lo + 1.0
    x0, x1 = float(nu[0]), float(nu[-1])

    def sx(x):
        return pad + (x - x0) / (x1 - x0) * (width - 2 * pad)

    def sy(y):
        return height - pad - (y - lo) / (hi - lo) * (height - 2 * pad)

    def polyline(ys, colour):
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(nu, ys))
        return f'<polyline fill="none" stroke="{colour}" stroke-width="1" points="{pts}"/>'

    N = comb.meta.N
    unit = "Hz" if j_hz is not None else "nu/J_IS"
    axis_y = sy(0.0) if lo <= 0 <= hi else height - pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<desc>N={N} q={comb.meta.q} linewidth={comb.meta.w!r}</desc>",
        f'<line x1="{pad}" y1="{axis_y:.2f}" x2="{width - pad}" y2="{axis_y:.2f}" stroke="grey"/>',
    ]
    for m in np.arange(N + 1) - N / 2:
        if x0 <= m <= x1:
            label = format_m(Fraction(m).limit_denominator(2))
            if j_hz is not None:
                label = f"{m * j_hz:g}"
            out.append(f'<line x1="{sx(m):.2f}" y1="{height - pad}" x2="{sx(m):.2f}" y2="{height - pad + 5}" stroke="grey"/>')
            out.append(f'<text x="{sx(m):.2f}" y="{height - pad + 18}" font-size="10" text-anchor="middle">{label}</text>')
    out.append(f'<text x="{width / 2:.0f}" y="{height - 8}" font-size="12" text-anchor="middle">{unit}</text>')
    out.append(polyline(comb.intensity, "blue"))
    if envelope is not None:
        out.append(polyline(envelope.intensity, "black"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- bounds ------------------------------------------------------------------

def bounds_csv(report) -> str:
    d = report.as_dict()
    rows = [["key", "value"]]
    for key in ("n", "k_gamma", "trace_z0", "trace_abs_z1", "b_max_over_k_gamma", "b_max"):
        rows.append([key, str(d[key])])
    for key, val in d["closed_forms"].items():
        rows.append([key, val])
    return _csv_text(rows)


def bounds_json(report) -> str:
    return json.dumps(report.as_dict(), indent=1) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
