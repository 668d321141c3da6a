"""Move rules and Grundy arithmetic for subtraction-division games.

A game instance is described by a :class:`GameSpec` holding a set ``S`` of
subtraction amounts and a set ``D`` of divisors (every divisor at least 2).
From position ``n`` a player may move to ``n - s`` for any ``s`` in ``S``
with ``n - s >= 0``, and to ``n / d`` for any ``d`` in ``D`` that divides
``n``, provided ``n > 0``.  Whoever makes the last move wins, so position 0
(no moves) is a loss for the player to move.
"""

from dataclasses import dataclass
from typing import Iterable

# Positions are documented to fit comfortably in 64 bits (the engines are
# exercised up to 10**18); products such as d*n+1 are range-checked against
# this limit instead of being allowed to grow arbitrarily.
POSITION_LIMIT = 2**64


@dataclass(frozen=True)
class GameSpec:
    """Parameters of one subtraction-division game.

    Inputs are normalised to sorted, duplicate-free tuples.  At least one of
    the two sets must be non-empty, and every divisor must be at least 2.
    """

    subtractions: tuple[int, ...] = ()
    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        subs = tuple(sorted({int(s) for s in self.subtractions}))
        divs = tuple(sorted({int(d) for d in self.divisors}))
        if not subs and not divs:
            raise ValueError("a game needs at least one subtraction amount or divisor")
        if subs and subs[0] < 1:
            raise ValueError("subtraction amounts must be positive")
        if divs and divs[0] < 2:
            raise ValueError("divisors must be at least 2")
        object.__setattr__(self, "subtractions", subs)
        object.__setattr__(self, "divisors", divs)

    @property
    def max_sub(self) -> int:
        """Largest subtraction amount (0 for a division-only game)."""
        return self.subtractions[-1] if self.subtractions else 0


def mex(values: Iterable[int]) -> int:
    """Smallest non-negative integer not present in ``values``."""
    present = set(values)
    v = 0
    while v in present:
        v += 1
    return v


def nim_sum(a: int, b: int) -> int:
    """Grundy value of a sum of two games: bitwise XOR of the parts."""
    return a ^ b


def followers(spec: GameSpec, n: int) -> list[int]:
    """All positions reachable from ``n`` in one move.

    Subtraction followers come first, ordered by decreasing amount, then
    division followers ordered by increasing divisor.  A position reachable
    both by a subtraction and by a division is listed once.
    """
    if n < 0:
        raise ValueError("positions are non-negative")
    out = []
    for s in reversed(spec.subtractions):
        if n - s >= 0:
            out.append(n - s)
    if n > 0:
        for d in spec.divisors:
            if n % d == 0:
                q = n // d
                if q not in out:
                    out.append(q)
    return out


def follower_count(spec: GameSpec, n: int) -> int:
    """Number of legal moves from ``n``, counting each rule application.

    Equals len(S) plus the number of divisors of ``n`` once ``n >= max(S)``.
    The rare coincidence ``n - s == n / d`` is counted twice here, so this
    may exceed ``len(followers(spec, n))``; Grundy values are unaffected
    because mex ignores multiplicity.
    """
    if n < 0:
        raise ValueError("positions are non-negative")
    count = sum(1 for s in spec.subtractions if n - s >= 0)
    if n > 0:
        count += sum(1 for d in spec.divisors if n % d == 0)
    return count


def floor_div_chain(x: int, ds: Iterable[int]) -> int:
    """Fold floor division left to right: ``((x // d1) // d2) // ...``.

    The result equals ``x // (d1 * d2 * ...)``; the chained form is what the
    interval engine relies on when it nests quotients.
    """
    if x < 0:
        raise ValueError("chain argument must be non-negative")
    for d in ds:
        if d < 1:
            raise ValueError("chain divisors must be positive")
        x //= d
    return x
