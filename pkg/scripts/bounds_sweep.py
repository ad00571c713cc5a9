#!/usr/bin/env python3
"""Print the diameter-bound landscape for small (n, d).

For each pair: the constructive lower bound, the proved exact value where
one is known, the Hirsch right-hand side n - d, and the two general upper
bounds.  A trailing * marks parameters where some polytope meets the Hirsch
bound with equality (a diameter-sharp generator exists here).
"""

import argparse

from polydiam.bounds import bound_table


def sharp_constructible(n: int, d: int) -> bool:
    return d < n <= 2 * d or (d >= 4 and 2 * d < n <= 3 * d - 3)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--max-d", type=int, default=6)
    args = parser.parse_args()

    header = f"{'n':>3} {'d':>3} {'lower':>6} {'known':>6} {'n-d':>5} {'larman':>8} {'quasi-poly':>14}"
    print(header)
    print("-" * len(header))
    for d in range(2, args.max_d + 1):
        for n in range(d + 1, args.max_n + 1):
            t = bound_table(n, d)
            known = t.known_exact if t.known_exact is not None else "?"
            larman = t.larman if t.larman is not None else "-"
            mark = " *" if sharp_constructible(n, d) else ""
            print(f"{n:>3} {d:>3} {t.lower:>6} {known:>6} {t.hirsch_rhs:>5} "
                  f"{larman:>8} {float(t.kalai_kleitman):>14.2f}{mark}")
        print()


if __name__ == "__main__":
    main()
