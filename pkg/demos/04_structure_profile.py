"""Why convergence works: bottlenecks and conducive positions.

A bottleneck is divisible by neither divisor, so its only move is the
subtraction: its value is 0 or 1 and a zero sits at it or just below.  A
position n is d-conducive when d*n+1 is a bottleneck; consecutive conducive
positions force every guess sequence onto the true values, which is where
the closed-form step bounds come from.  The check_* scans hunt for
counterexamples in ground-truth tables and come back empty.
"""

from imark import (
    GameSpec,
    bottleneck_residues,
    build_table,
    check_bottleneck_grundy,
    check_conducive_convergence,
    check_no_five_consecutive,
    conducive_residues,
    is_bottleneck,
    proven_bound,
)

spec = GameSpec({1}, {2, 3})
N = 10**5

print(f"game S={spec.subtractions} D={spec.divisors}, profiling 0..{N}\n")
print("bottleneck residues mod 6:  ", bottleneck_residues(spec, N))
print("2-conducive residues mod 3 pattern, shown mod 6:", conducive_residues(spec, 2, N))
print("3-conducive residues:       ", conducive_residues(spec, 3, N))

print("\nfirst bottlenecks:", [n for n in range(1, 40) if is_bottleneck(spec, n)])

table = build_table(spec, N)
print("\nscanning the table for structural counterexamples:")
print("  bottleneck values in {0,1} with an adjacent zero:",
      "clean" if check_bottleneck_grundy(table) == [] else "VIOLATED")
print("  no five consecutive zero multiples of three:    ",
      "clean" if check_no_five_consecutive(table) == [] else "VIOLATED")
print("  guess sequences lock on at conducive pairs:     ",
      "clean" if check_conducive_convergence(spec, table, 2, candidates=range(2000)) == []
      else "VIOLATED")

print("\nproven convergence step bounds:")
for d1, d2 in [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]:
    print(f"  D={{{d1},{d2}}}: {proven_bound(d1, d2)}")
