"""Bottom-up Grundy tables: the ground-truth oracle for the other engines."""

import numpy as np
from dataclasses import dataclass
from typing import BinaryIO

from . import _kernels
from .game import GameSpec

# Soft cap on table length; a dense uint8 table of this size is ~100 MB.
DEFAULT_MAX_ENTRIES = 10**8


class TableTooLargeError(Exception):
    """Requested table exceeds the configured memory budget."""


@dataclass(frozen=True, eq=False)
class GrundyTable:
    """Dense Grundy values for positions 0..max_n of one game."""

    spec: GameSpec
    values: np.ndarray

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


def build_table(spec: GameSpec, max_n: int, *, max_entries: int = DEFAULT_MAX_ENTRIES) -> GrundyTable:
    """Compute G(0..max_n) bottom-up.

    Deterministic; values are stored as uint8 (a value never exceeds the
    follower count, which is tiny for any sane spec).  Raises
    :class:`TableTooLargeError` beyond ``max_entries`` positions.
    """
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    if max_n + 1 > max_entries:
        raise TableTooLargeError(
            f"table of {max_n + 1} entries exceeds the cap of {max_entries}"
        )
    if len(spec.subtractions) + len(spec.divisors) > _kernels.MAX_FOLLOWERS:
        raise NotImplementedError("spec has too many moves for the bitmask kernels")
    values = np.zeros(max_n + 1, dtype=np.uint8)
    _kernels.fill_grundy(
        np.asarray(spec.subtractions, dtype=np.int64),
        np.asarray(spec.divisors, dtype=np.int64),
        values,
    )
    values.flags.writeable = False
    return GrundyTable(spec, values)


def grundy_at(table: GrundyTable, n: int) -> int:
    """Stored Grundy value at ``n``; raises IndexError outside 0..max_n."""
    if not 0 <= n <= table.max_n:
        raise IndexError(f"position {n} outside table range 0..{table.max_n}")
    return int(table.values[n])


def is_p_position(table: GrundyTable, n: int) -> bool:
    """True when the previous player wins ``n``, i.e. G(n) = 0."""
    return grundy_at(table, n) == 0


def export_csv(table: GrundyTable, sink: BinaryIO) -> None:
    """Write the table as ``n,grundy`` rows (header first, LF endings)."""
    sink.write(b"n,grundy\n")
    vals = table.values
    for start in range(0, len(vals), 1 << 16):
        chunk = vals[start : start + (1 << 16)]
        sink.write(
            "".join(f"{start + i},{v}\n" for i, v in enumerate(chunk)).encode("ascii")
        )


def recheck_table(table: GrundyTable) -> np.ndarray:
    """Recompute every entry's mex from its followers, vectorised.

    This is an independent pass (numpy, not the fill kernel); it returns the
    positions whose stored value disagrees, empty for a consistent table.
    """
    vals = table.values.astype(np.uint64)
    n = len(vals)
    mask = np.zeros(n, dtype=np.uint64)
    one = np.uint64(1)
    for s in table.spec.subtractions:
        if s < n:
            mask[s:] |= one << vals[: n - s]
    for d in table.spec.divisors:
        idx = np.arange(d, n, d)
        if idx.size:
            mask[idx] |= one << vals[idx // d]
    # mex = index of the lowest zero bit; isolate it and read the exponent
    low_zero = ~mask & (mask + one)
    computed = np.frexp(low_zero.astype(np.float64))[1] - 1
    return np.nonzero(computed != vals.astype(np.int64))[0]
