"""Grundy values at positions no table could ever reach.

The interval engine only ever computes short windows of values, one per
member of the divisor lattice of n (every quotient of n by products of
divisors).  Each window is raced by all guess seeds; once they agree the
tail of the window is certified.  Work grows with log(n), not n, so 10^18
is a few milliseconds.  When the step bound is too small the engine refuses
rather than guessing: it never returns a wrong value.
"""

import time

from imark import (
    GameSpec,
    NoConvergenceError,
    divisor_lattice,
    grundy_fast,
    grundy_fast_range,
    proven_bound,
)

N = 10**18
grundy_fast(GameSpec({1}, {2, 3}), 10**6)  # warm the compiled kernels

print(f"G({N}) .. G({N}+30), one row per game:\n")
for d1, d2 in [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]:
    spec = GameSpec({1}, {d1, d2})
    t0 = time.perf_counter()
    row = grundy_fast_range(spec, N, 31)
    dt = time.perf_counter() - t0
    print(f"  D={{{d1},{d2}}} (bound {proven_bound(d1, d2):>3}): "
          + " ".join(map(str, row)) + f"   [{dt * 1000:.0f} ms]")

lattice = divisor_lattice(GameSpec({1}, {2, 3}), N)
print(f"\nthe divisor lattice of {N} has only {lattice.members.size} members;")
print("its smallest dozen:", [int(m) for m in lattice.members[:12]])

print("\nwith a deliberately tiny step bound the engine refuses:")
try:
    grundy_fast(GameSpec({1}, {2, 3}), N, c=5)
except NoConvergenceError as exc:
    print(f"  {exc}")

spec = GameSpec({1}, {2, 3, 5})
print(f"\nthree divisors (no proven bound, supply c by hand): "
      f"G({N}) = {grundy_fast(spec, N, c=40)}")
