"""Walk through the 1D solver: the greedy sweep, the oracle, and both
families of instances that pin the floor(n/3) and floor(n/2) bounds.

Run: python demos/line_families.py
"""

from multipack import (
    bruteforce_max_r_multipacking,
    greedy_max_r_multipacking_1d,
    lower_family_1d,
    multipacking_number,
    random_point_set,
    upper_family_1d,
    verify_1d_bounds,
)


def show(pts):
    return "{" + ", ".join(str(p[0]) for p in pts) + "}"


def main():
    print("== the greedy sweep is exact on the line ==")
    pts = lower_family_1d(6)
    print(f"doubling family, n=6: {show(pts)}")
    for r in (1, 3, 5):
        greedy = greedy_max_r_multipacking_1d(pts, r)
        oracle = bruteforce_max_r_multipacking(pts, r)
        marks = ", ".join(str(pts[i][0]) for i in greedy.indices)
        print(f"  r={r}: greedy picks {{{marks}}} (size {greedy.size}), "
              f"oracle confirms {oracle.size}")

    print()
    print("== the doubling family sits on the floor(n/3) lower bound ==")
    for n in (3, 6, 9, 12):
        mp = multipacking_number(lower_family_1d(n))
        print(f"  n={n:2d}: MP = {mp} = floor(n/3)")

    print()
    print("== the slow-growth family reaches the floor(n/2) ceiling (odd n) ==")
    for n in (5, 7, 9, 11):
        pts = upper_family_1d(n)
        mp = multipacking_number(pts)
        print(f"  n={n:2d}: {show(pts)} -> MP = {mp} = floor(n/2)")

    print()
    print("== even n = 6 is the curious exception ==")
    pts = upper_family_1d(6)
    print(f"  {show(pts)} -> MP = {multipacking_number(pts)} < 3 = floor(6/2)")
    print("  (the size-3 candidate {0, 33, 150} crowds the right end: the two")
    print("   nearest points of 150 are 54 and 33, and {33, 150} is already")
    print("   two members in a neighborhood that allows one)")

    print()
    print("== random instances always respect both bounds ==")
    for seed in range(4):
        pts = random_point_set(9, dim=1, seed=seed)
        result = verify_1d_bounds(pts)
        print(f"  seed {seed}: lower {result['lower']} <= mp {result['mp']} "
              f"<= upper {result['upper']} -> holds={result['holds']}")


if __name__ == "__main__":
    main()
