"""Print the limits table at several mean photon numbers and check 1/<N> scaling."""

import argparse

from phaselimits.bounds import bound_constant, limits_table
from phaselimits.cli import cmd_bounds


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--energies", type=float, nargs="+", default=[1.0, 2.0, 10.0])
    args = parser.parse_args()
    for energy in args.energies:
        print(cmd_bounds(energy))
        for entry in limits_table(energy):
            if entry.report is not None:
                product = entry.report.value * energy
                assert abs(product - bound_constant(entry.report.bound_kind)) < 1e-12
        print()


if __name__ == "__main__":
    main()
