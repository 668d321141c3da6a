"""Numba kernels behind the table builder, the sweeps and the interval engine.

Guess-sequence states are packed into int64 keys, one byte per window slot,
so a state is a machine word: advancing is a shift-or, merging duplicate
states is a small sort, and "all sequences agree" is a scalar compare.
Merged states can never diverge again (the recurrence is deterministic given
the shared division-follower values), which is what keeps the sweeps fast on
games whose seed spaces are large.
"""

import numpy as np
from numba import njit

# A packed state holds max(S) byte-sized values in an int64.
MAX_WINDOW = 7
# Bitmask mex needs one bit per candidate value in an int64.
MAX_FOLLOWERS = 62


@njit(cache=True, nogil=True)
def fill_grundy(subs, divs, out):
    """Bottom-up Grundy values for positions 0..len(out)-1."""
    for n in range(out.size):
        mask = np.int64(0)
        for i in range(subs.size):
            p = n - subs[i]
            if p >= 0:
                mask |= np.int64(1) << np.int64(out[p])
        if n > 0:
            for i in range(divs.size):
                if n % divs[i] == 0:
                    mask |= np.int64(1) << np.int64(out[n // divs[i]])
        v = 0
        while (mask >> v) & 1:
            v += 1
        out[n] = v


@njit(cache=True, nogil=True)
def _phi(subs, divs, pos):
    """Legal-move count at ``pos`` (each rule application counted)."""
    c = 0
    for i in range(subs.size):
        if pos - subs[i] >= 0:
            c += 1
    if pos > 0:
        for i in range(divs.size):
            if pos % divs[i] == 0:
                c += 1
    return c


@njit(cache=True, nogil=True)
def _seed_keys(subs, divs, lo, s, keys):
    """Pack every admissible seed at window start ``lo`` into ``keys``."""
    nkeys = 1
    for i in range(s):
        nkeys *= _phi(subs, divs, lo + i) + 1
    for idx in range(nkeys):
        rem = idx
        key = np.int64(0)
        for i in range(s - 1, -1, -1):
            r = _phi(subs, divs, lo + i) + 1
            key |= np.int64(rem % r) << (8 * i)
            rem //= r
        keys[idx] = key
    return nkeys


@njit(cache=True, nogil=True)
def _merge_states(keys, k_act):
    """Sort packed states and drop duplicates; returns the new count."""
    for a in range(1, k_act):
        kv = keys[a]
        b = a - 1
        while b >= 0 and keys[b] > kv:
            keys[b + 1] = keys[b]
            b -= 1
        keys[b + 1] = kv
    w = 1
    for a in range(1, k_act):
        if keys[a] != keys[w - 1]:
            keys[w] = keys[a]
            w += 1
    return w


@njit(cache=True, nogil=True)
def measure_start(subs, divs, s, grundy, n, cap, keys):
    """Steps until every guess sequence from ``n`` agrees on a full window.

    ``grundy`` supplies true values for division followers.  Returns the
    step count (never below ``s``), or -1 if agreement does not happen
    within ``cap`` steps.  ``keys`` is scratch for the packed states.
    """
    k_act = _seed_keys(subs, divs, n, s, keys)
    top = 8 * (s - 1)
    for j in range(1, cap + 1):
        m = n + s + j - 1
        divmask = np.int64(0)
        for i in range(divs.size):
            if m % divs[i] == 0:
                divmask |= np.int64(1) << np.int64(grundy[m // divs[i]])
        for t in range(k_act):
            key = keys[t]
            mask = divmask
            for i in range(subs.size):
                mask |= np.int64(1) << ((key >> (8 * (s - subs[i]))) & 0xFF)
            v = np.int64(0)
            while (mask >> v) & 1:
                v += 1
            keys[t] = (key >> 8) | (v << top)
        if k_act > 1:
            k_act = _merge_states(keys, k_act)
        if k_act == 1:
            return np.int64(j) if j >= s else np.int64(s)
    return np.int64(-1)


@njit(cache=True, nogil=True)
def sweep_range(subs, divs, s, grundy, lo, hi, cap, out_steps, stop_on_fail):
    """Per-start convergence steps for starts lo..hi (inclusive).

    Fills ``out_steps`` (-1 marks no convergence within cap) and returns the
    first non-converging start, or -1.  With ``stop_on_fail`` the sweep
    aborts at that start and later entries are left untouched.
    """
    kmax = 1
    for _ in range(s):
        kmax *= subs.size + divs.size + 1
    keys = np.empty(kmax, np.int64)
    for i in range(hi - lo + 1):
        st = measure_start(subs, divs, s, grundy, lo + i, cap, keys)
        out_steps[i] = st
        if st < 0 and stop_on_fail:
            return np.int64(lo + i)
    return np.int64(-1)


@njit(cache=True, nogil=True)
def run_lattice(members, dep_idx, subs, divs, s, c, values, bases):
    """Fill the definite window ending at each lattice member, ascending.

    ``values[i]`` receives positions bases[i]..members[i].  Members below
    2c are filled bottom-up; larger ones race every guess seed across the
    doubled interval, reading division followers from previously filled
    windows via ``dep_idx``.  Returns (0, 0) on success, (1, m) when the
    sequences still disagree c steps before m, and (2, m) when a division
    lookup misses its stored window (an internal invariant violation).
    """
    kmax = 1
    for _ in range(s):
        kmax *= subs.size + divs.size + 1
    keys = np.empty(kmax, np.int64)
    top = 8 * (s - 1)
    for i in range(members.size):
        m = members[i]
        base = m - c
        if base < 0:
            base = 0
        bases[i] = base
        if m - 2 * c <= 0:
            g = np.zeros(m + 1, np.uint8)
            for x in range(m + 1):
                mask = np.int64(0)
                for a in range(subs.size):
                    p = x - subs[a]
                    if p >= 0:
                        mask |= np.int64(1) << np.int64(g[p])
                if x > 0:
                    for a in range(divs.size):
                        if x % divs[a] == 0:
                            mask |= np.int64(1) << np.int64(g[x // divs[a]])
                v = 0
                while (mask >> v) & 1:
                    v += 1
                g[x] = v
            for x in range(base, m + 1):
                values[i, x - base] = g[x]
            continue
        lo = m - 2 * c
        k_act = _seed_keys(subs, divs, lo, s, keys)
        check_at = base + s - 1
        for x in range(lo + s, m + 1):
            divmask = np.int64(0)
            for a in range(divs.size):
                if x % divs[a] == 0:
                    q = dep_idx[i, a]
                    y = x // divs[a]
                    qb = bases[q]
                    if y < qb or y > members[q]:
                        return np.int64(2), m
                    divmask |= np.int64(1) << np.int64(values[q, y - qb])
            for t in range(k_act):
                key = keys[t]
                mask = divmask
                for a in range(subs.size):
                    mask |= np.int64(1) << ((key >> (8 * (s - subs[a]))) & 0xFF)
                v = np.int64(0)
                while (mask >> v) & 1:
                    v += 1
                keys[t] = (key >> 8) | (v << top)
            if k_act > 1:
                k_act = _merge_states(keys, k_act)
            if x == check_at:
                if k_act > 1:
                    return np.int64(1), m
                key = keys[0]
                for b in range(s):
                    values[i, b] = (key >> (8 * b)) & 0xFF
            elif x > check_at:
                values[i, x - base] = (keys[0] >> top) & 0xFF
    return np.int64(0), np.int64(0)
