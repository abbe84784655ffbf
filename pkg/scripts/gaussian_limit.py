"""Binomial comb vs Gaussian envelope: centre error as N grows (q = 0)."""
import argparse
import math

from quantum_pascal.spectra import envelope_error, gaussian_envelope, multiplet_spectrum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--linewidth", type=float, default=0.05)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 8, 12, 16, 20, 32, 48, 64])
    args = ap.parse_args()

    print(f"{'N':>4} {'C(N,N/2)/2^N':>14} {'sqrt(2/(pi N))':>15} {'centre err':>11} {'max line err':>13}")
    for N in args.n:
        comb = multiplet_spectrum(N, 0, args.linewidth)
        err = envelope_error(comb, gaussian_envelope(N, args.linewidth, comb.nu))
        mid = math.comb(N, N // 2) / 2**N
        print(f"{N:>4} {mid:>14.6f} {math.sqrt(2 / (math.pi * N)):>15.6f} "
              f"{err.center_error:>11.4f} {err.max_line_error:>13.4f}")


if __name__ == "__main__":
    main()
