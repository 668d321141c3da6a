"""Interval engine: definite Grundy values at astronomically large positions.

To evaluate position n the engine collects every quotient of n by products
of the game's divisors (the divisor lattice), then fills, for each member m
in ascending order, the window of c+1 definite values ending at m.  A window
is computed by racing every guess seed across the doubled interval
[m-2c, m]: each division follower of a position in that interval lands
inside an already-filled window, and if all sequences agree on s = max(S)
consecutive values c steps before m, the tail of the interval provably holds
the true Grundy sequence.  Disagreement raises :class:`NoConvergenceError`;
the engine never returns a wrong value.

The per-query cost is one window per lattice member, i.e. O(c log^|D| n)
work, which makes positions like 10**18 a few milliseconds of work.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .convergence import GuessSequence, advance, seed_space
from .game import GameSpec
from .naive import build_table
from .structure import proven_bound


class NoConvergenceError(Exception):
    """Guess sequences failed to agree in time; no value can be certified."""

    def __init__(self, m: int, c: int):
        super().__init__(
            f"guess sequences still disagree {c} steps before interval end {m}; "
            f"retry with a larger step bound c"
        )
        self.m = m
        self.c = c


class MissingIntervalError(Exception):
    """A window required as a dependency has not been computed yet."""

    def __init__(self, m: int):
        super().__init__(f"window ending at {m} is not in the cache")
        self.m = m


@dataclass(frozen=True, eq=False)
class DivisorLattice:
    """All floor-quotients of ``root`` by products of divisors, ascending."""

    root: int
    members: np.ndarray


@dataclass
class IntervalCache:
    """Definite Grundy windows keyed by their top position.

    Entry m holds values for positions base(m)..m with base(m) =
    max(0, m - c); every stored value is a true Grundy value.
    """

    c: int
    entries: dict[int, np.ndarray] = field(default_factory=dict)

    def base(self, m: int) -> int:
        return max(0, m - self.c)

    def has(self, m: int) -> bool:
        return m in self.entries

    def store(self, m: int, values: np.ndarray) -> None:
        self.entries[m] = values

    def lookup(self, m: int, position: int) -> int:
        values = self.entries[m]
        base = self.base(m)
        if not base <= position <= m:
            raise MissingIntervalError(m)
        return int(values[position - base])


def divisor_lattice(spec: GameSpec, n: int) -> DivisorLattice:
    """Close {n} under floor division by every divisor of the game."""
    if not spec.divisors:
        raise ValueError("the divisor lattice needs at least one divisor")
    if n < 0:
        raise ValueError("positions are non-negative")
    seen = set()
    stack = [n]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for d in spec.divisors:
            stack.append(m // d)
    members = np.array(sorted(seen), dtype=np.int64)
    return DivisorLattice(root=n, members=members)


def _ilog(n: int, d: int) -> int:
    """Largest k with d**k <= n (0 for n < d), by exact integer division."""
    k = 0
    while n >= d:
        n //= d
        k += 1
    return k


def _resolve_c(spec: GameSpec, c: int | None) -> int:
    if not spec.divisors:
        raise ValueError(
            "the interval engine needs at least one divisor; division-free "
            "games have no convergence to exploit"
        )
    if not spec.subtractions:
        raise ValueError("the interval engine needs at least one subtraction amount")
    if c is None:
        if spec.subtractions == (1,) and len(spec.divisors) == 2:
            return proven_bound(*spec.divisors)
        raise ValueError(
            "no proven step bound exists for this game; supply c explicitly"
        )
    c = int(c)
    if c < spec.max_sub:
        raise ValueError(f"c must be at least the window length {spec.max_sub}")
    return c


def compute_interval(spec: GameSpec, m: int, cache: IntervalCache) -> np.ndarray:
    """Fill the definite window ending at ``m`` into ``cache`` (pure path).

    Members below 2c are computed bottom-up; otherwise every guess seed is
    advanced across [m-2c, m], reading division followers from the dependency
    windows, and the sequences must agree on the first s values of the
    window.  This is the readable reference for the compiled lattice runner
    and is exercised against it by the tests.
    """
    c = cache.c
    s = spec.max_sub
    base = max(0, m - c)
    if m - 2 * c <= 0:
        g = build_table(spec, m).values
        window = np.array(g[base:], dtype=np.uint8)
        cache.store(m, window)
        return window
    dep_values = {}
    for d in spec.divisors:
        q = m // d
        if not cache.has(q):
            raise MissingIntervalError(q)
        qb = cache.base(q)
        for off, val in enumerate(cache.entries[q]):
            dep_values[qb + off] = int(val)
    lo = m - 2 * c
    seqs = [GuessSequence(seed) for seed in seed_space(spec, lo)]
    for x in range(lo + s, m + 1):
        for q in seqs:
            advance(q, spec, dep_values.__getitem__)
        if x == base + s - 1:
            window = seqs[0].values[-s:]
            if any(q.values[-s:] != window for q in seqs[1:]):
                raise NoConvergenceError(m, c)
    window = np.array(seqs[0].values[base - lo :], dtype=np.uint8)
    cache.store(m, window)
    return window


def _kernel_windows(spec: GameSpec, n: int, c: int):
    """Run the compiled lattice pass; returns (members, values, bases).

    Asserts per run that the lattice is closed under floor division and
    that its size respects the product-of-logs bound; the kernel itself
    checks that every division lookup lands in a stored window.
    """
    lattice = divisor_lattice(spec, n)
    members = lattice.members
    if len(spec.subtractions) + len(spec.divisors) > _kernels.MAX_FOLLOWERS:
        raise NotImplementedError("spec has too many moves for the bitmask kernels")
    subs = np.asarray(spec.subtractions, dtype=np.int64)
    divs = np.asarray(spec.divisors, dtype=np.int64)
    quotients = members[:, None] // divs[None, :]
    dep_idx = np.searchsorted(members, quotients).astype(np.int64)
    if not np.array_equal(members[dep_idx], quotients):
        raise AssertionError("divisor lattice is not closed under floor division")
    size_bound = 1
    for d in spec.divisors:
        size_bound *= _ilog(n, d) + 1
    size_bound += 1  # the all-quotients form always bottoms out at the extra member 0
    if members.size > size_bound:
        raise AssertionError(
            f"lattice has {members.size} members, above the bound {size_bound}"
        )
    values = np.zeros((members.size, c + 1), dtype=np.uint8)
    bases = np.zeros(members.size, dtype=np.int64)
    status, err_m = _kernels.run_lattice(
        members, dep_idx, subs, divs, spec.max_sub, c, values, bases
    )
    if status == 1:
        raise NoConvergenceError(int(err_m), c)
    if status == 2:
        raise AssertionError(
            f"division follower fell outside its stored window at interval {int(err_m)}"
        )
    return members, values, bases


def grundy_window(spec: GameSpec, n: int, c: int | None = None) -> tuple[int, np.ndarray]:
    """Definite values for positions max(0, n-c)..n as ``(base, values)``."""
    c = _resolve_c(spec, c)
    if spec.max_sub > _kernels.MAX_WINDOW:
        raise NotImplementedError(
            f"the compiled engine packs windows of at most {_kernels.MAX_WINDOW} values"
        )
    members, values, bases = _kernel_windows(spec, n, c)
    idx = int(np.searchsorted(members, n))
    base = int(bases[idx])
    return base, values[idx, : n - base + 1].copy()


def grundy_fast(spec: GameSpec, n: int, c: int | None = None, *, engine: str = "kernel") -> int:
    """Grundy value of ``n`` via the interval engine.

    ``c`` defaults to the proven step bound when S = {1} and there are two
    divisors; other games must supply one.  The value returned is certified:
    if the sequences fail to agree in time the call raises
    :class:`NoConvergenceError` instead of guessing.
    """
    if n < 0:
        raise ValueError("positions are non-negative")
    c = _resolve_c(spec, c)
    if engine == "kernel":
        base, window = grundy_window(spec, n, c)
        return int(window[-1])
    if engine == "reference":
        cache = IntervalCache(c)
        lattice = divisor_lattice(spec, n)
        for m in lattice.members:
            compute_interval(spec, int(m), cache)
        return cache.lookup(n, n)
    raise ValueError(f"unknown engine {engine!r}")


def grundy_fast_range(
    spec: GameSpec, n: int, count: int, c: int | None = None, *, engine: str = "kernel"
) -> list[int]:
    """Grundy values of n..n+count-1, each from an independent query."""
    if count < 1:
        raise ValueError("count must be positive")
    return [grundy_fast(spec, n + i, c, engine=engine) for i in range(count)]


def verify_against_naive(
    spec: GameSpec, max_n: int, c: int | None = None, *, spot_checks: int = 200
) -> int | None:
    """First position in 0..max_n where the engine and the oracle disagree.

    Full coverage tiles the range with definite windows; a deterministic
    sample of positions additionally goes through the one-position entry
    point.  Returns None when everything agrees.
    """
    c = _resolve_c(spec, c)
    table = build_table(spec, max_n)
    tops = list(range(min(c, max_n), max_n + 1, c + 1))
    if tops[-1] != max_n:
        tops.append(max_n)
    for t in tops:
        base, window = grundy_window(spec, t, c)
        ref = table.values[base : t + 1]
        if not np.array_equal(window, ref):
            return int(base + np.nonzero(window != ref)[0][0])
    rng = np.random.default_rng(0)
    for n in sorted(int(x) for x in rng.integers(0, max_n + 1, size=spot_checks)):
        if grundy_fast(spec, n, c) != int(table.values[n]):
            return n
    return None
