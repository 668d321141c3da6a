"""Guess seeds, guess sequences and convergence measurement.

A guess seed assigns hypothetical Grundy values to the s = max(S) positions
at the start of a window; its guess sequence extends the window upward using
the guessed values for subtraction followers and true (oracle) values for
division followers.  Once all sequences from every admissible seed agree on
s consecutive positions they agree forever after and equal the true Grundy
sequence from that point on: one of the seeds is correct, so agreement means
every sequence has locked onto the truth.  The number of steps until that
first happens is what the sweeps here measure.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import BinaryIO, Callable

import numpy as np

from . import _kernels
from .game import GameSpec, follower_count, mex
from .naive import GrundyTable


class OracleGapError(Exception):
    """A division follower's true value was not available from the oracle."""

    def __init__(self, position: int):
        super().__init__(f"oracle has no value for position {position}")
        self.position = position


@dataclass(frozen=True)
class GuessSeed:
    """Assumed Grundy values for positions start..start+len(sigma)-1."""

    start: int
    sigma: tuple[int, ...]


@dataclass
class GuessSequence:
    """A seed plus the values grown from it; index i holds position start+i."""

    seed: GuessSeed
    values: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.values:
            self.values = list(self.seed.sigma)

    @property
    def next_position(self) -> int:
        return self.seed.start + len(self.values)


@dataclass(frozen=True)
class ConvergenceReport:
    """Outcome of measuring one start; ``steps`` is None when the cap hit."""

    start: int
    steps: int | None
    cap: int
    seed_count: int


@dataclass(frozen=True)
class RangeSummary:
    """Outcome of a sweep: either a maximum or the first failing start."""

    start_from: int
    start_to: int
    cap: int
    max_steps: int | None
    argmax_start: int | None
    failed_start: int | None

    @property
    def converged(self) -> bool:
        return self.failed_start is None


def _as_lookup(oracle) -> Callable[[int], int]:
    if isinstance(oracle, GrundyTable):
        values = oracle.values
        return lambda p: int(values[p]) if 0 <= p < len(values) else _gap(p)
    if isinstance(oracle, np.ndarray):
        values = oracle
        return lambda p: int(values[p]) if 0 <= p < len(values) else _gap(p)
    if callable(oracle):
        return oracle
    raise TypeError("oracle must be a GrundyTable, a dense array, or a callable")


def _gap(position: int):
    raise OracleGapError(position)


def _oracle_array(oracle) -> np.ndarray:
    if isinstance(oracle, GrundyTable):
        return oracle.values
    if isinstance(oracle, np.ndarray) and oracle.dtype == np.uint8:
        return oracle
    raise TypeError("range sweeps need a dense oracle (GrundyTable or uint8 array)")


def seed_space(spec: GameSpec, n: int) -> list[GuessSeed]:
    """Every admissible seed at start ``n``, in lexicographic order.

    Digit i may take any value from 0 to the move count of position n+i, so
    the true values are always among the seeds.
    """
    if not spec.subtractions:
        raise ValueError("seed windows need at least one subtraction amount")
    s = spec.max_sub
    ranges = [range(follower_count(spec, n + i) + 1) for i in range(s)]
    return [GuessSeed(n, sigma) for sigma in itertools.product(*ranges)]


def advance(seq: GuessSequence, spec: GameSpec, oracle) -> int:
    """Grow ``seq`` by one position and return the appended value.

    Subtraction followers read the sequence's own (guessed) values; division
    followers are resolved through ``oracle`` and raise
    :class:`OracleGapError` when unavailable.
    """
    lookup = _as_lookup(oracle)
    vals = seq.values
    m = seq.seed.start + len(vals)
    fol = [vals[len(vals) - s] for s in spec.subtractions]
    if m > 0:
        for d in spec.divisors:
            if m % d == 0:
                try:
                    fol.append(int(lookup(m // d)))
                except LookupError as exc:
                    raise OracleGapError(m // d) from exc
    v = mex(fol)
    vals.append(v)
    return v


def measure_convergence_at(spec: GameSpec, n: int, oracle, cap: int) -> ConvergenceReport:
    """Smallest step count at which all guess sequences from ``n`` agree.

    Agreement is checked on the trailing window of s positions after every
    step; the reported count is never below s (a single-seed space agrees
    vacuously at s).  ``steps`` is None when ``cap`` is exhausted first.
    """
    s = spec.max_sub
    if cap < s:
        raise ValueError(f"cap must be at least the window length {s}")
    lookup = _as_lookup(oracle)
    seqs = [GuessSequence(seed) for seed in seed_space(spec, n)]
    steps = None
    for j in range(1, cap + 1):
        for q in seqs:
            advance(q, spec, lookup)
        window = seqs[0].values[-s:]
        if all(q.values[-s:] == window for q in seqs[1:]):
            steps = j if j >= s else s
            break
    return ConvergenceReport(start=n, steps=steps, cap=cap, seed_count=len(seqs))


def _check_sweep_args(spec: GameSpec, start_from: int, start_to: int, oracle, cap: int):
    s = spec.max_sub
    if not spec.subtractions:
        raise ValueError("sweeps need at least one subtraction amount")
    if s > _kernels.MAX_WINDOW:
        raise NotImplementedError(
            f"sweep kernel packs windows of at most {_kernels.MAX_WINDOW} values"
        )
    if len(spec.subtractions) + len(spec.divisors) > _kernels.MAX_FOLLOWERS:
        raise NotImplementedError("spec has too many moves for the bitmask kernels")
    if start_from < 0 or start_from > start_to:
        raise ValueError("need 0 <= start_from <= start_to")
    if cap < s:
        raise ValueError(f"cap must be at least the window length {s}")
    grundy = _oracle_array(oracle)
    if spec.divisors:
        needed = (start_to + s + cap - 1) // min(spec.divisors)
        if len(grundy) <= needed:
            raise ValueError(
                f"oracle covers 0..{len(grundy) - 1} but the sweep needs "
                f"division followers up to {needed}"
            )
    else:
        grundy = np.zeros(1, dtype=np.uint8)
    return grundy


def _spec_arrays(spec: GameSpec):
    return (
        np.asarray(spec.subtractions, dtype=np.int64),
        np.asarray(spec.divisors, dtype=np.int64),
    )


def measure_convergence_range(
    spec: GameSpec,
    start_from: int,
    start_to: int,
    oracle,
    cap: int,
    *,
    jobs: int = 1,
) -> RangeSummary:
    """Sweep starts start_from..start_to and summarise.

    Reports the maximum step count and the smallest start attaining it, or
    the first start that fails to converge within ``cap``.  ``jobs`` splits
    the range into contiguous chunks swept in parallel; results are merged
    in range order, so the outcome does not depend on scheduling.
    """
    grundy = _check_sweep_args(spec, start_from, start_to, oracle, cap)
    subs, divs = _spec_arrays(spec)
    s = spec.max_sub
    total = start_to - start_from + 1
    jobs = max(1, min(jobs, total))
    bounds = np.linspace(start_from, start_to + 1, jobs + 1).astype(np.int64)
    chunks = [(int(bounds[i]), int(bounds[i + 1]) - 1) for i in range(jobs)]

    def sweep_chunk(chunk):
        lo, hi = chunk
        steps = np.full(hi - lo + 1, -2, dtype=np.int64)
        fail = _kernels.sweep_range(subs, divs, s, grundy, lo, hi, cap, steps, True)
        return lo, steps, int(fail)

    if jobs == 1:
        results = [sweep_chunk(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(sweep_chunk, chunks))

    best = -1
    arg = None
    for lo, steps, fail in results:
        if fail >= 0:
            return RangeSummary(start_from, start_to, cap, None, None, fail)
        m = int(steps.max())
        if m > best:
            best = m
            arg = lo + int(np.argmax(steps))
    return RangeSummary(start_from, start_to, cap, best, arg, None)


def sweep_steps(spec: GameSpec, start_from: int, start_to: int, oracle, cap: int) -> np.ndarray:
    """Per-start convergence steps over a range; -1 marks no convergence."""
    grundy = _check_sweep_args(spec, start_from, start_to, oracle, cap)
    subs, divs = _spec_arrays(spec)
    steps = np.empty(start_to - start_from + 1, dtype=np.int64)
    _kernels.sweep_range(
        subs, divs, spec.max_sub, grundy, start_from, start_to, cap, steps, False
    )
    return steps


def export_sweep_csv(
    spec: GameSpec, start_from: int, start_to: int, oracle, cap: int, sink: BinaryIO
) -> None:
    """Write ``start,steps`` rows for a sweep (-1 for no convergence)."""
    steps = sweep_steps(spec, start_from, start_to, oracle, cap)
    sink.write(b"start,steps\n")
    for i in range(0, len(steps), 1 << 16):
        chunk = steps[i : i + (1 << 16)]
        sink.write(
            "".join(
                f"{start_from + i + k},{v}\n" for k, v in enumerate(chunk)
            ).encode("ascii")
        )
