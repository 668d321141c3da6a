"""Structural predicates and proven convergence bounds for two-divisor games.

A position divisible by neither divisor is a *bottleneck*: its only moves
are subtractions, which pins its Grundy value to 0 or 1 and forces a zero at
it or just below it.  A position n is *d-conducive* when d*n+1 is a
bottleneck; runs of conducive positions are what force every guess sequence
to lock onto the true values, and they are the source of the closed-form
step bounds returned by :func:`proven_bound`.  The check_* functions scan a
ground-truth table for counterexamples and return violation lists (empty on
healthy games).
"""

import math
from typing import Iterable, NamedTuple, BinaryIO

import numpy as np

from .convergence import GuessSequence, advance, seed_space
from .game import POSITION_LIMIT, GameSpec
from .naive import GrundyTable


class Violation(NamedTuple):
    """One failed structural check at position ``n``."""

    n: int
    kind: str


def _require_two_divisors(spec: GameSpec, generalized: bool):
    if len(spec.divisors) != 2 and not generalized:
        raise ValueError(
            "bottleneck/conducive structure is defined for exactly two divisors; "
            "pass generalized=True to apply the no-divisor-divides reading anyway"
        )


def is_bottleneck(spec: GameSpec, n: int, *, generalized: bool = False) -> bool:
    """True when no divisor of the game divides ``n``."""
    _require_two_divisors(spec, generalized)
    if n < 0:
        raise ValueError("positions are non-negative")
    return all(n % d != 0 for d in spec.divisors)


def is_conducive(spec: GameSpec, n: int, d: int, *, generalized: bool = False) -> bool:
    """True when ``d*n + 1`` is a bottleneck."""
    _require_two_divisors(spec, generalized)
    if d not in spec.divisors:
        raise ValueError(f"{d} is not a divisor of this game")
    if n < 0:
        raise ValueError("positions are non-negative")
    if n > (POSITION_LIMIT - 2) // d:
        raise OverflowError(f"{d}*{n}+1 exceeds the supported position width")
    return is_bottleneck(spec, d * n + 1, generalized=generalized)


def proven_bound(d1: int, d2: int) -> int:
    """Guaranteed convergence step bound for the game ({1}, {d1, d2})."""
    if not 1 < d1 < d2:
        raise ValueError("need 1 < d1 < d2")
    if d1 == 2:
        if d2 == 3:
            return 64
        return 4 * d2 + 3
    return d1 * d1 * d2 * d2 + d2 + 1


def check_bottleneck_grundy(table: GrundyTable) -> list[Violation]:
    """Bottlenecks must have value 0 or 1, with a zero at or just below.

    Returns one violation per offending bottleneck (empty when the table is
    healthy, which the theory guarantees for two-divisor games).
    """
    spec = table.spec
    _require_two_divisors(spec, False)
    if table.max_n < 1:
        return []
    n = np.arange(1, table.max_n + 1, dtype=np.int64)
    mask = np.ones(n.size, dtype=bool)
    for d in spec.divisors:
        mask &= (n % d) != 0
    g = table.values[1:]
    g_prev = table.values[:-1]
    ok = (g <= 1) & ((g_prev == 0) | (g == 0))
    bad = n[mask & ~ok]
    return [Violation(int(b), "bottleneck_grundy") for b in bad]


def check_no_five_consecutive(table: GrundyTable) -> list[Violation]:
    """No five consecutive multiples of 3 may all have Grundy value 0.

    Specific to the game ({1}, {2, 3}); any other spec is a domain error.
    The reported position is the first multiple of the offending run.
    """
    spec = table.spec
    if spec.subtractions != (1,) or spec.divisors != (2, 3):
        raise ValueError("this check is specific to the game S={1}, D={2,3}")
    idx = np.arange(0, table.max_n + 1, 3)
    z = table.values[idx] == 0
    if z.size < 5:
        return []
    run = z[:-4] & z[1:-3] & z[2:-2] & z[3:-1] & z[4:]
    return [Violation(int(3 * i), "five_consecutive_zeros") for i in np.nonzero(run)[0]]


def check_conducive_convergence(
    spec: GameSpec,
    table: GrundyTable,
    d: int,
    *,
    candidates: Iterable[int] | None = None,
    starts_back: tuple[int, ...] = (1, 2, 7),
) -> list[Violation]:
    """Exercise the lock-on mechanism at conducive pairs.

    At every candidate ``n`` where n and n+1 are d-conducive and n+1 is a
    bottleneck, guess sequences started shortly below d*n (one per admissible
    seed) must match the oracle on the window beginning at d*(n+1)+1.
    Returns a violation per site where any sequence disagrees.
    """
    _require_two_divisors(spec, False)
    s = spec.max_sub
    if s == 0:
        raise ValueError("conducive convergence needs a subtraction move")
    n_max = (table.max_n - s) // d - 1
    if candidates is None:
        candidates = range(n_max + 1)
    lookup = table.values
    violations = []
    for n in candidates:
        if n < 0 or n > n_max:
            continue
        if not (
            is_conducive(spec, n, d)
            and is_conducive(spec, n + 1, d)
            and is_bottleneck(spec, n + 1)
        ):
            continue
        target = d * (n + 1) + 1
        bad = False
        for back in starts_back:
            m0 = d * n - back
            if m0 < 0:
                continue
            seqs = [GuessSequence(seed) for seed in seed_space(spec, m0)]
            for q in seqs:
                while q.next_position <= target + s - 1:
                    advance(q, spec, table)
                got = q.values[target - m0 : target - m0 + s]
                want = [int(lookup[p]) for p in range(target, target + s)]
                if got != want:
                    bad = True
        if bad:
            violations.append(Violation(n, "conducive_convergence"))
    return violations


def bottleneck_residues(spec: GameSpec, max_n: int) -> dict[int, int]:
    """Bottleneck counts in 0..max_n keyed by residue mod lcm(divisors)."""
    _require_two_divisors(spec, False)
    period = math.lcm(*spec.divisors)
    n = np.arange(max_n + 1, dtype=np.int64)
    mask = np.ones(n.size, dtype=bool)
    for d in spec.divisors:
        mask &= (n % d) != 0
    counts = np.bincount(n[mask] % period, minlength=period)
    return {int(r): int(c) for r, c in enumerate(counts) if c}


def conducive_residues(spec: GameSpec, d: int, max_n: int) -> dict[int, int]:
    """d-conducive counts in 0..max_n keyed by residue mod lcm(divisors)."""
    _require_two_divisors(spec, False)
    if d not in spec.divisors:
        raise ValueError(f"{d} is not a divisor of this game")
    period = math.lcm(*spec.divisors)
    n = np.arange(max_n + 1, dtype=np.int64)
    m = d * n + 1
    mask = np.ones(n.size, dtype=bool)
    for dd in spec.divisors:
        mask &= (m % dd) != 0
    counts = np.bincount(n[mask] % period, minlength=period)
    return {int(r): int(c) for r, c in enumerate(counts) if c}


def export_violations_csv(violations: Iterable[Violation], sink: BinaryIO) -> None:
    """Write violations as ``n,kind`` rows."""
    sink.write(b"n,kind\n")
    for v in violations:
        sink.write(f"{v.n},{v.kind}\n".encode("ascii"))
