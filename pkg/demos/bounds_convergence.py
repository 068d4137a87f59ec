#!/usr/bin/env python3
"""How fast the construction lower bound approaches n ln n.

For each n the anchor count k = floor(n / ln n) gives
ln i_n >= ln C(k^2, n-2k) - n ln 3, and the ratio of that bound to n ln n
climbs toward 1.  At the small end, where the sweep gives exact counts, the
exact ln i_n sits between every lower bound and the matching upper bound.
"""

import math

from intervalgraphs import bounds_table, best_k, default_k, family_lower_bound

LARGE = [10**e for e in range(3, 9)]
SMALL = [3, 4, 5, 6, 7]


def main():
    print("large n: ratio of the lower bound to n ln n")
    print(f"{'n':>12} {'k':>8} {'lower':>16} {'ratio':>7}")
    for n in LARGE:
        k = default_k(n)
        lower = family_lower_bound(n, k)
        print(f"{n:>12} {k:>8} {lower:>16.6g} {lower / (n * math.log(n)):>7.3f}")

    print("\nbest feasible k buys a little more at fixed n:")
    for n in (100, 10_000):
        kd, kb = default_k(n), best_k(n)
        print(
            f"  n={n}: default k={kd} -> {family_lower_bound(n, kd):.1f}, "
            f"best k={kb} -> {family_lower_bound(n, kb):.1f}"
        )

    print("\nsmall n sandwich (exact counts from the sweep):")
    header = f"{'n':>3} {'construction':>13} {'factorial':>10} {'exact ln i_n':>13} {'matchings':>10}"
    print(header)
    for row in bounds_table(SMALL, exact_limit=7):
        cons = f"{row.construction_lower:.3f}" if row.construction_lower is not None else "--"
        fact = f"{row.factorial_lower:.3f}" + ("*" if row.factorial_exact else " ")
        exact = f"{row.exact_log_in:.3f}" if row.exact_log_in is not None else "--"
        print(f"{row.n:>3} {cons:>13} {fact:>10} {exact:>13} {row.matchings_upper:>10.3f}")
    print("(* = factorial bound in exact form, i.e. 3 | n)")


if __name__ == "__main__":
    main()
