#!/usr/bin/env python3
"""Scan the two-electron joint spatial density as the packets separate.

For each separation, reports the largest exchange (cross) term relative to
the direct density and confirms the exclusion zero on the diagonal.
"""

import numpy as np

from identicals import GaussianPacket, joint_spatial_density


def main():
    print(f"{'separation/sigma':>16} {'cross_term_max':>16} {'max|rho(x,x)|':>14} {'integral':>10}")
    for sep in np.linspace(0.5, 10.0, 20):
        grid = joint_spatial_density(
            GaussianPacket(0.0, 1.0),
            GaussianPacket(float(sep), 1.0),
            -6.0,
            float(sep) + 6.0,
            160,
        )
        diag = np.max(np.abs(np.diag(grid.values)))
        print(
            f"{sep:16.2f} {grid.cross_term_max:16.6e} {diag:14.2e} "
            f"{grid.integral():10.6f}"
        )
    print()
    print("The exchange term dies off Gaussianly with separation; the density")
    print("becomes indistinguishable from two independent localized particles.")


if __name__ == "__main__":
    main()
