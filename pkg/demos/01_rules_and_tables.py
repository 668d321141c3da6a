"""Rules of a subtraction-division game and the ground-truth Grundy table.

From position n you may subtract any s in S (staying non-negative) or divide
by any d in D that divides n exactly; the last player to move wins.  The
Grundy value of a position is the mex of its followers' values, zero exactly
at the positions where the player to move loses.
"""

import io

from imark import (
    GameSpec,
    build_table,
    export_csv,
    followers,
    grundy_at,
    is_p_position,
    nim_sum,
    recheck_table,
)

spec = GameSpec(subtractions={1}, divisors={2, 3})
print(f"game: subtract any of {spec.subtractions}, divide by any of {spec.divisors}")

print("\nfollowers of the first few positions:")
for n in [0, 6, 7, 10, 12]:
    print(f"  {n:>3} -> {followers(spec, n)}")

table = build_table(spec, 40)
print("\nGrundy values 0..40:")
print(" ", " ".join(str(grundy_at(table, n)) for n in range(41)))
print("losing positions (value 0):", [n for n in range(41) if is_p_position(table, n)])

# a consistency pass recomputes every mex independently of the builder
assert recheck_table(table).size == 0
print("independent recheck: clean")

# playing a sum of two games: combine values with the nim-sum
g17, g23 = grundy_at(table, 17), grundy_at(table, 23)
print(f"\nsum of positions 17 and 23: {g17} xor {g23} = {nim_sum(g17, g23)}",
      "(first player wins)" if nim_sum(g17, g23) else "(second player wins)")

sink = io.BytesIO()
export_csv(build_table(spec, 5), sink)
print("\nCSV interchange format:")
print(sink.getvalue().decode(), end="")
