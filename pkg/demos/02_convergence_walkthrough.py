"""Watching guess sequences converge.

Suppose we know the Grundy values of small positions but want a window of
values starting at 564 without computing everything in between.  We do not
know G(564), but it is at most the follower count, so we try every candidate
as a seed and grow one guess sequence per seed: subtraction followers read
the sequence's own guesses, division followers read true values from an
oracle.  Watch the four sequences collapse into one: after that they are all
equal to the true Grundy sequence, and the gamble has paid off.
"""

from imark import (
    GameSpec,
    GuessSequence,
    advance,
    build_table,
    measure_convergence_at,
    measure_convergence_range,
    seed_space,
)

spec = GameSpec({1}, {2, 3})
table = build_table(spec, 2000)
start = 564

seqs = [GuessSequence(seed) for seed in seed_space(spec, start)]
print(f"start {start}: follower count {len(seqs) - 1}, so {len(seqs)} seeds\n")

print("pos   " + "  ".join(f"seq{k}" for k in range(len(seqs))) + "   true")
for step in range(14):
    row = [q.values[-1] for q in seqs]
    marker = "  <- all agree" if len(set(row)) == 1 else ""
    true = table.values[start + step]
    print(f"{start + step:>4}  " + "  ".join(f"{v:>4}" for v in row) + f"  {true:>5}" + marker)
    for q in seqs:
        advance(q, spec, table)

report = measure_convergence_at(spec, start, table, cap=100)
print(f"\nmeasured steps to convergence at {start}: {report.steps}")

big_table = build_table(spec, 501000)
summary = measure_convergence_range(spec, 0, 10**6, big_table, 1000)
print(f"worst start below 10^6: {summary.argmax_start} needs {summary.max_steps} steps")

bad = GameSpec({1, 3}, {2, 3})
summary = measure_convergence_range(bad, 0, 5000, build_table(bad, 10**4), cap=1000)
print(f"\ngame S={bad.subtractions} D={bad.divisors}: "
      f"start {summary.failed_start} never converges (this game defeats the technique)")
