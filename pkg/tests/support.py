"""Shared brute-force oracles for the test suite.

Everything here is deliberately written against the definitions with plain
Python sets and loops, independent of the library's bit-mask code paths, so
tests can compare the two implementations.
"""

from __future__ import annotations

import numpy as np

from addcomb import ElementSet, FiniteSemigroup


def iter_nonempty_masks(n: int):
    return range(1, 1 << n)


def mask_to_set(n: int, mask: int) -> ElementSet:
    return ElementSet(n, mask)


def sumset_oracle(A: FiniteSemigroup, xs, ys) -> set:
    return {A.table[x][y] for x in xs for y in ys}


def closure_oracle(A: FiniteSemigroup, seed) -> set:
    out = set(seed)
    while True:
        grown = out | {A.table[a][b] for a in out for b in out}
        if grown == out:
            return out
        out = grown


def order_oracle(A: FiniteSemigroup, z: int) -> int:
    powers = {z}
    cur = z
    while True:
        cur = A.table[cur][z]
        if cur in powers:
            return len(powers)
        powers.add(cur)


def omega_oracle(A: FiniteSemigroup, zs) -> int | None:
    """None encodes infinity; 0 encodes the empty supremum."""
    best = 0
    for z0 in zs:
        inv = A.inverse(z0)
        if inv is None:
            continue
        rest = [z for z in zs if z != z0]
        if not rest:
            return None  # an empty infimum dominates every finite row
        inner = min(order_oracle(A, A.table[z][inv]) for z in rest)
        best = max(best, inner)
    return best


def commutative_span_masks(A: FiniteSemigroup) -> list[int]:
    """Masks of non-empty Y whose generated closure is commutative,
    computed with plain sets (independent of the library's span check)."""
    out = []
    for mask in iter_nonempty_masks(A.n):
        seed = [z for z in range(A.n) if mask >> z & 1]
        cl = closure_oracle(A, seed)
        if all(A.table[a][b] == A.table[b][a] for a in cl for b in cl):
            out.append(mask)
    return out


def hall_oracle_batched(row_lists: list[list[int]]) -> np.ndarray:
    """Exhaustive Hall condition for many row families at once.

    Every family in one call must have the same number of rows k; each row
    is an element bit mask.  Returns a boolean verdict per family: True iff
    every subset of rows has a union at least as large as the subset.
    """
    if not row_lists:
        return np.zeros(0, dtype=bool)
    k = len(row_lists[0])
    assert all(len(rows) == k for rows in row_lists)
    rows = np.asarray(row_lists, dtype=np.int64)  # (B, k)
    B = rows.shape[0]
    unions = np.zeros((B, 1 << k), dtype=np.int64)
    for j in range(k):
        unions.reshape(B, -1, 2 << j)[:, :, (1 << j):] |= rows[:, j : j + 1, None]
    pc_sub = np.array([s.bit_count() for s in range(1 << k)], dtype=np.int64)
    max_bits = int(rows.max()).bit_length() if B else 0
    pc_union = np.zeros_like(unions)
    for b in range(max_bits):
        pc_union += (unions >> b) & 1
    return ((pc_union >= pc_sub[None, :]).all(axis=1))
