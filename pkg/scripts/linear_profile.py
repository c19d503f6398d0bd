"""Linear phase profile phi_m = m * phi against the two-mode interferometer.

The apparent (M - 1)-fold gain of the linear profile disappears once both are
compared at the same largest relative phase shift; the printed ratio is 1.
"""

import argparse

from phaselimits.certify import linear_profile_demo


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--modes", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    parser.add_argument("--photons", type=int, nargs="+", default=[1, 2, 3])
    args = parser.parse_args()
    print(f"{'M':>3} {'N':>3} {'linear phi':>12} {'two-mode / (M-1)':>17} {'ratio':>8}")
    for M in args.modes:
        for N in args.photons:
            rep = linear_profile_demo(M, N)
            print(f"{M:>3} {N:>3} {rep.linear_min_phi:>12.6f} {rep.two_mode_equivalent_phi:>17.6f} {rep.ratio:>8.4f}")


if __name__ == "__main__":
    main()
