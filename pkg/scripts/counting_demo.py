#!/usr/bin/env python3
"""Compare microstate counts under the three counting rules.

Tabulates W for n quanta over d one-particle states and shows that the
oscillator-energy count (distinguishable resonators sharing P quanta)
coincides with the count of unordered quantum distributions.
"""

from identicals import CountingProblem, StatisticsKind, count_microstates, planck_count


def main():
    print(f"{'n':>3} {'d':>3} {'boltzmann':>10} {'bose_einstein':>14} {'fermi_dirac':>12}")
    for n in range(1, 6):
        for d in (2, 3, 4):
            row = [
                count_microstates(kind, n, d)
                for kind in (
                    StatisticsKind.BOLTZMANN,
                    StatisticsKind.BOSE_EINSTEIN,
                    StatisticsKind.FERMI_DIRAC,
                )
            ]
            print(f"{n:3d} {d:3d} {row[0]:10d} {row[1]:14d} {row[2]:12d}")
    print()
    print("Oscillator identity: W(N resonators, P quanta) = C(N-1+P, P)")
    for N, P in ((2, 3), (4, 7), (10, 10)):
        w = planck_count(CountingProblem(N, P))
        be = count_microstates(StatisticsKind.BOSE_EINSTEIN, P, N)
        print(f"  N={N:3d} P={P:3d}: planck={w:8d}  bose_einstein={be:8d}  match={w == be}")


if __name__ == "__main__":
    main()
