"""Table of the maximum enhancement b_max / k_gamma for N = 1..N_max."""
import argparse

from quantum_pascal.bounds import max_enhancement


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()
    print(f"{'N':>3} {'Tr|Z^1|':>12} {'b_max/k':>14} {'float':>9}")
    for N in range(1, args.n_max + 1):
        r = max_enhancement(N)
        print(f"{N:>3} {r.trace_abs_z1:>12} {str(r.ratio):>14} {float(r.ratio):>9.4f}")


if __name__ == "__main__":
    main()
