"""Hermite-Gaussian envelopes for traceless multiplets.

Prints the worst line-centre error (relative to the comb's maximum) for each
q and N, which shows the slow 1/N approach for higher q.
"""
import argparse

import numpy as np

from quantum_pascal.combinatorics import count_sign_changes
from quantum_pascal.spectra import envelope_error, hermite_gauss_envelope, multiplet_spectrum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--linewidth", type=float, default=0.02)
    ap.add_argument("--q-max", type=int, default=5)
    ap.add_argument("--n", type=int, nargs="+", default=[18, 24, 32, 48, 64])
    args = ap.parse_args()

    qs = range(1, args.q_max + 1)
    print("max line error")
    print(f"{'N':>4} " + " ".join(f"{'q=' + str(q):>8}" for q in qs))
    for N in args.n:
        row = []
        for q in qs:
            comb = multiplet_spectrum(N, q, args.linewidth)
            env = hermite_gauss_envelope(N, q, args.linewidth, comb.nu)
            row.append(envelope_error(comb, env).max_line_error)
        print(f"{N:>4} " + " ".join(f"{e:>8.4f}" for e in row))

    N = args.n[0]
    print(f"\nenvelope sign changes at N={N}")
    for q in qs:
        env = hermite_gauss_envelope(N, q, args.linewidth)
        print(f"  q={q}: {count_sign_changes(env.intensity)}")

    print(f"\nline amplitudes at N={N}, q={args.q_max} (comb vs envelope)")
    comb = multiplet_spectrum(N, args.q_max, args.linewidth)
    env = hermite_gauss_envelope(N, args.q_max, args.linewidth, comb.nu)
    centers = np.arange(N + 1) - N / 2
    for m, c, e in zip(centers, comb.at(centers), env.at(centers)):
        if m >= 0:
            print(f"  m={m:+5.1f}  {c:>10.4f}  {e:>10.4f}")


if __name__ == "__main__":
    main()
